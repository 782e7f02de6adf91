# Copyright 2026 The simdiff Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Export an English frequency list in the simdiff dictionary format.

Counts are wordfreq relative frequencies scaled to parts-per-billion.
"""
import argparse
import importlib.metadata
import re

import wordfreq

WORD = re.compile(r"^[^\W\d_]+$")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("-n", type=int, default=40000)
    parser.add_argument("-o", "--output", required=True)
    args = parser.parse_args()

    rows = []
    for word in wordfreq.top_n_list("en", args.n):
        if not WORD.match(word):
            continue
        count = round(wordfreq.word_frequency(word, "en") * 1e9)
        if count > 0:
            rows.append((word, count))

    with open(args.output, "w", encoding="utf-8") as out:
        out.write("# English unigram frequencies, parts per billion.\n")
        out.write("# Source: wordfreq %s (data CC-BY-SA 4.0), top %d alphabetic tokens.\n"
                  % (importlib.metadata.version("wordfreq"), args.n))
        for word, count in rows:
            out.write("%s\t%d\n" % (word, count))


if __name__ == "__main__":
    main()

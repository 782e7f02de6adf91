/*
 * Copyright 2026 The simdiff Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "commands.hpp"

#include <future>
#include <ostream>
#include <sstream>
#include <utility>

#include <CLI11.hpp>

#include "simdiff/analysis.hpp"
#include "simdiff/io.hpp"
#include "simdiff/report.hpp"
#include "simdiff/text/pipeline.hpp"
#include "simdiff/wordcloud.hpp"

namespace simdiff::cli {

namespace fs = std::filesystem;

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kFetch: return "fetch";
    case Stage::kPipeline: return "pipeline";
    case Stage::kDictionary: return "dictionary";
    case Stage::kAnalysis: return "analysis";
    case Stage::kRender: return "render";
    case Stage::kWrite: return "write";
    case Stage::kCorpus: return "corpus";
  }
  return "unknown";
}

int exit_code(Stage stage, ErrorCode code) {
  if (code == ErrorCode::kInvalidArgument) return kExitUsage;
  switch (stage) {
    case Stage::kFetch:
      switch (code) {
        case ErrorCode::kFileNotFound: return 10;
        case ErrorCode::kNotFound: return 11;
        case ErrorCode::kNetwork: return 12;
        case ErrorCode::kCacheWrite: return 13;
        case ErrorCode::kMarkerNotFound: return 14;
        case ErrorCode::kParse: return 15;
        default: break;
      }
      break;
    case Stage::kPipeline:
      switch (code) {
        case ErrorCode::kEmptyInput: return 20;
        case ErrorCode::kFileNotFound: return 21;
        case ErrorCode::kParse: return 22;
        default: break;
      }
      break;
    case Stage::kDictionary:
      switch (code) {
        case ErrorCode::kFileNotFound: return 30;
        case ErrorCode::kParse: return 31;
        case ErrorCode::kDictionaryTooSmall: return 32;
        default: break;
      }
      break;
    case Stage::kAnalysis:
      switch (code) {
        case ErrorCode::kOrderOutOfRange: return 40;
        case ErrorCode::kOrderMismatch: return 41;
        case ErrorCode::kDomain: return 42;
        default: break;
      }
      break;
    case Stage::kRender:
      switch (code) {
        case ErrorCode::kMissingOrder: return 50;
        case ErrorCode::kEmptyReport: return 51;
        default: break;
      }
      break;
    case Stage::kWrite:
      return 60;
    case Stage::kCorpus:
      switch (code) {
        case ErrorCode::kFileNotFound: return 70;
        case ErrorCode::kEmptyCorpus: return 71;
        default: break;
      }
      break;
  }
  return kExitInternal;
}

fs::path order_path(const fs::path& path, int n, bool several) {
  const std::string name = path.filename().string();
  const auto brace = name.find("{n}");
  if (brace != std::string::npos) {
    std::string replaced = name;
    replaced.replace(brace, 3, std::to_string(n));
    return path.parent_path() / replaced;
  }
  if (!several) return path;
  fs::path out = path;
  out.replace_filename(path.stem().string() + ".n" + std::to_string(n) + path.extension().string());
  return out;
}

namespace {

int report_failure(std::ostream& err, Stage stage, const Error& e) {
  err << "simdiff: " << stage_name(stage) << ": " << e.what() << '\n';
  return exit_code(stage, e.code());
}

template <typename F>
auto run_stage(Stage stage, F&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw std::pair<Stage, Error>(stage, e);
  }
}

text::Pipeline make_pipeline(const std::optional<fs::path>& lemma_exceptions,
                             const std::optional<fs::path>& gazetteer) {
  text::Lemmatizer lemmatizer;
  if (lemma_exceptions) lemmatizer.load_exceptions(*lemma_exceptions);
  text::Gazetteer gaz;
  if (gazetteer) gaz = text::Gazetteer::load(*gazetteer);
  return text::Pipeline(std::move(lemmatizer), std::move(gaz));
}

}  // namespace

int cmd_compare(const RunConfig& config, Transport& transport, std::ostream& err) {
  using StageError = std::pair<Stage, Error>;
  if (!config.json_path && !config.csv_path && !config.svg_path) {
    err << "simdiff: usage: compare needs at least one of --json, --csv, --svg\n";
    return kExitUsage;
  }
  try {
    const text::Pipeline pipeline = run_stage(Stage::kPipeline, [&] {
      return make_pipeline(config.lemma_exceptions_path, config.gazetteer_path);
    });

    RawDocument raw1 = run_stage(Stage::kFetch, [&] { return fetch(config.source1, transport, config.fetch); });
    RawDocument raw2 = run_stage(Stage::kFetch, [&] { return fetch(config.source2, transport, config.fetch); });

    auto [doc1, doc2] = run_stage(Stage::kPipeline, [&] {
      auto second = std::async(std::launch::async, [&] { return pipeline.process(raw2); });
      ProcessedDocument first = pipeline.process(raw1);
      return std::pair(std::move(first), second.get());
    });

    const FrequencyDictionary dict = run_stage(Stage::kDictionary, [&] {
      return load_dictionary(config.dict_path, pipeline, config.epsilon_floor, config.composition);
    });

    AnalysisOptions options;
    options.scheme = config.scheme;
    options.orders = config.orders;
    const AnalysisReport report = run_stage(Stage::kAnalysis, [&] { return analyze(doc1, doc2, dict, options); });

    // Render every sink before touching the filesystem.
    std::vector<std::pair<fs::path, std::string>> outputs;
    const bool several = config.orders.size() > 1;
    run_stage(Stage::kRender, [&] {
      if (config.json_path) outputs.emplace_back(*config.json_path, to_json(report));
      for (int n : config.orders) {
        if (config.csv_path) outputs.emplace_back(order_path(*config.csv_path, n, several), to_csv(report, n));
        if (!config.svg_path) continue;
        if (several && report.per_n.at(n).empty()) {
          err << "simdiff: render: no common " << n << "-grams; word cloud skipped\n";
          continue;
        }
        WordCloudOptions cloud;
        cloud.top_k = config.top_k;
        cloud.seed = config.seed;
        cloud.width = config.canvas_width;
        cloud.height = config.canvas_height;
        outputs.emplace_back(order_path(*config.svg_path, n, several), render_wordcloud(report, n, cloud));
      }
      return 0;
    });

    run_stage(Stage::kWrite, [&] {
      for (const auto& [path, bytes] : outputs) write_file_atomic(path, bytes);
      return 0;
    });
  } catch (const StageError& failure) {
    return report_failure(err, failure.first, failure.second);
  }
  return kExitOk;
}

int cmd_dict_build(const fs::path& corpus_dir, const fs::path& out_path,
                   const std::optional<fs::path>& lemma_exceptions, std::ostream& err) {
  text::Pipeline pipeline;
  try {
    pipeline = make_pipeline(lemma_exceptions, std::nullopt);
  } catch (const Error& e) {
    return report_failure(err, Stage::kPipeline, e);
  }
  std::string formatted;
  try {
    formatted = format_dictionary(count_corpus(corpus_dir, pipeline));
  } catch (const Error& e) {
    return report_failure(err, Stage::kCorpus, e);
  }
  try {
    write_file_atomic(out_path, formatted);
  } catch (const Error& e) {
    return report_failure(err, Stage::kWrite, e);
  }
  return kExitOk;
}

int cmd_fetch(const SourceSpec& spec, const fs::path& out_path, const FetchOptions& options,
              Transport& transport, std::ostream& err) {
  RawDocument doc;
  try {
    doc = fetch(spec, transport, options);
  } catch (const Error& e) {
    return report_failure(err, Stage::kFetch, e);
  }
  try {
    write_file_atomic(out_path, doc.text);
  } catch (const Error& e) {
    return report_failure(err, Stage::kWrite, e);
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, Transport& transport, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Find what two documents have in common and how unusual it is."};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  RunConfig config;
  std::string src1, src2, scheme = "final", composition = "product";
  std::string cache_dir = "cache";
  std::string orders_text = "1,2,3";
  bool allow_unmarked = false;
  std::string json_path, csv_path, svg_path, gazetteer_path, lemma_path;

  auto* compare = app.add_subcommand("compare", "Compare two sources and write reports");
  compare->add_option("source1", src1, "file path, gutenberg:<id> or wikipedia:<title>")->required();
  compare->add_option("source2", src2, "file path, gutenberg:<id> or wikipedia:<title>")->required();
  compare->add_option("--dict", config.dict_path, "Reference frequency dictionary (TSV)")->required();
  compare->add_option("--scheme", scheme, "basic, log, threshold or final")->capture_default_str();
  compare->add_option("--nf", config.scheme.normalization_factor, "Normalization factor for the final scheme")
      ->capture_default_str();
  compare->add_option("--presence", config.scheme.presence_value, "Entity / noun-chunk presence value")
      ->capture_default_str();
  compare->add_option("--composition", composition, "Baseline composition: product or min")->capture_default_str();
  compare->add_option("--epsilon", config.epsilon_floor, "Floor for unseen lemmas")->capture_default_str();
  compare->add_option("--n", orders_text, "Comma-separated n-gram orders")->capture_default_str();
  compare->add_option("--top-k", config.top_k, "Terms in the word cloud")->capture_default_str();
  compare->add_option("--seed", config.seed, "Word-cloud layout seed")->capture_default_str();
  compare->add_option("--width", config.canvas_width, "Word-cloud width")->capture_default_str();
  compare->add_option("--height", config.canvas_height, "Word-cloud height")->capture_default_str();
  compare->add_option("--json", json_path, "Write the full report as JSON");
  compare->add_option("--csv", csv_path, "Write ranked n-grams as CSV");
  compare->add_option("--svg", svg_path, "Write a word cloud as SVG");
  compare->add_option("--cache-dir", cache_dir, "Cache for fetched sources")->capture_default_str();
  compare->add_option("--gazetteer", gazetteer_path, "Extra entity names, one per line");
  compare->add_option("--lemma-exceptions", lemma_path, "Extra surface<TAB>lemma pairs");
  compare->add_flag("--allow-unmarked", allow_unmarked, "Accept Gutenberg text without markers");

  auto* dict = app.add_subcommand("dict", "Dictionary tools");
  dict->require_subcommand(1);
  auto* build = dict->add_subcommand("build", "Count lemmas in a corpus directory");
  std::string corpus_dir, dict_out;
  build->add_option("corpus", corpus_dir, "Directory of plain-text files")->required();
  build->add_option("-o,--output", dict_out, "Output TSV")->required();
  build->add_option("--lemma-exceptions", lemma_path, "Extra surface<TAB>lemma pairs");

  auto* fetch_cmd = app.add_subcommand("fetch", "Fetch and clean one source");
  std::string fetch_src, fetch_out;
  fetch_cmd->add_option("source", fetch_src, "file path, gutenberg:<id> or wikipedia:<title>")->required();
  fetch_cmd->add_option("-o,--output", fetch_out, "Output text file")->required();
  fetch_cmd->add_option("--cache-dir", cache_dir, "Cache for fetched sources")->capture_default_str();
  fetch_cmd->add_flag("--allow-unmarked", allow_unmarked, "Accept Gutenberg text without markers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  FetchOptions fetch_options = FetchOptions::from_environment();
  fetch_options.allow_unmarked = allow_unmarked;

  try {
    if (compare->parsed()) {
      config.source1 = parse_source(src1, cache_dir);
      config.source2 = parse_source(src2, cache_dir);
      config.scheme.kind = parse_scheme(scheme);
      config.composition = parse_composition(composition);
      config.orders.clear();
      std::stringstream ss(orders_text);
      for (std::string part; std::getline(ss, part, ',');) {
        std::size_t used = 0;
        int n = 0;
        try {
          n = std::stoi(part, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != part.size()) {
          throw Error(ErrorCode::kInvalidArgument, "bad --n entry '" + part + "'");
        }
        config.orders.push_back(n);
      }
      if (config.orders.empty()) throw Error(ErrorCode::kInvalidArgument, "--n is empty");
      if (!json_path.empty()) config.json_path = json_path;
      if (!csv_path.empty()) config.csv_path = csv_path;
      if (!svg_path.empty()) config.svg_path = svg_path;
      if (!gazetteer_path.empty()) config.gazetteer_path = gazetteer_path;
      if (!lemma_path.empty()) config.lemma_exceptions_path = lemma_path;
      config.fetch = fetch_options;
      return cmd_compare(config, transport, err);
    }
    if (build->parsed()) {
      std::optional<fs::path> lemmas;
      if (!lemma_path.empty()) lemmas = lemma_path;
      return cmd_dict_build(corpus_dir, dict_out, lemmas, err);
    }
    if (fetch_cmd->parsed()) {
      return cmd_fetch(parse_source(fetch_src, cache_dir), fetch_out, fetch_options, transport, err);
    }
  } catch (const Error& e) {
    err << "simdiff: usage: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace simdiff::cli

// Copyright 2026 The zici Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zici/errors.hpp"
#include "zici/evalkit.hpp"
#include "zici/lexicon.hpp"
#include "zici/ngrams.hpp"
#include "zici/segcore.hpp"
#include "zici/textprep.hpp"
#include "zici/utf8.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw zici::IoError("cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (in.bad()) throw zici::IoError("cannot read " + path);
  return data;
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw zici::IoError("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  out.flush();
  if (!out) throw zici::IoError("cannot write " + path);
}

// Empty path means standard output.
void write_output(const std::string& path, std::string_view data) {
  if (path.empty()) {
    std::cout.write(data.data(), static_cast<std::streamsize>(data.size()));
    std::cout.flush();
  } else {
    write_file(path, data);
  }
}

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

double round4(double v) { return std::stod(fmt4(v)); }

zici::Lexicon read_lexicon(const std::string& path) {
  const std::string data = read_file(path);
  std::istringstream in(data);
  return zici::Lexicon::read_tsv(in, path);
}

void require_clean_separator(const std::string& separator) {
  try {
    if (zici::contains_han(separator)) {
      throw zici::ConfigError("separator must not contain Han codepoints");
    }
  } catch (const zici::EncodingError&) {
    throw zici::ConfigError("separator is not valid UTF-8");
  }
}

struct SegmentArgs {
  std::string input;
  std::string output;
  std::string lexicon_out;
  std::string dump_ngrams;
  std::string separator = " ";
  int max_ngram = 8;
  std::uint32_t min_count = 2;
  bool trace = false;
};

void run_segment(const SegmentArgs& args) {
  require_clean_separator(args.separator);
  const std::string text = read_file(args.input);
  const zici::BuildOptions options{args.max_ngram, args.min_count};
  const zici::BuildResult result =
      zici::build(text, options, args.trace ? &std::cerr : nullptr);

  if (!args.dump_ngrams.empty()) {
    const zici::WeightTable weights =
        zici::count_ngrams(zici::split_document(text), args.max_ngram);
    std::ostringstream out;
    for (const auto& [ngram, count] : weights.sorted_entries()) {
      out << zici::encode_utf8(ngram) << '\t' << count << '\n';
    }
    write_file(args.dump_ngrams, out.str());
  }
  if (!args.lexicon_out.empty()) {
    std::ostringstream out;
    result.lexicon.write_tsv(out);
    write_file(args.lexicon_out, out.str());
  }
  write_output(args.output, zici::render(result.segmented, args.separator));
}

struct LexiconBuildArgs {
  std::vector<std::string> inputs;
  std::string output;
};

void run_lexicon_build(const LexiconBuildArgs& args) {
  zici::Lexicon accumulated;
  for (const std::string& input : args.inputs) {
    const zici::BuildResult result = zici::build(read_file(input));
    accumulated = zici::merge(accumulated, result.lexicon).lexicon;
  }
  std::ostringstream out;
  accumulated.write_tsv(out);
  write_file(args.output, out.str());
}

struct LexiconMergeArgs {
  std::string a;
  std::string b;
  std::string output;
  bool mark_reinforced = false;
};

void run_lexicon_merge(const LexiconMergeArgs& args) {
  const zici::MergedLexicon merged =
      zici::merge(read_lexicon(args.a), read_lexicon(args.b));
  std::ostringstream out;
  merged.write_tsv(out, args.mark_reinforced);
  write_file(args.output, out.str());
}

struct LexiconTopArgs {
  std::size_t k = 0;
  std::string lexicon;
};

void run_lexicon_top(const LexiconTopArgs& args) {
  const zici::Lexicon lexicon = read_lexicon(args.lexicon);
  std::ostringstream out;
  for (const zici::LexiconEntry& e : zici::rank_promising(lexicon, args.k)) {
    out << zici::encode_utf8(e.text) << '\t' << e.count << '\n';
  }
  write_output("", out.str());
}

struct EvalCoverageArgs {
  std::string lexicon;
  std::string dict;
  bool traditional = false;
  bool json = false;
};

void run_eval_coverage(const EvalCoverageArgs& args) {
  const zici::Lexicon lexicon = read_lexicon(args.lexicon);
  const std::string dict_data = read_file(args.dict);
  std::istringstream dict_in(dict_data);
  const zici::DictionarySet dict = zici::parse_cedict(
      dict_in, args.traditional ? zici::DictColumn::kTraditional
                                : zici::DictColumn::kSimplified);
  const zici::CoverageReport report = zici::coverage(lexicon, dict);

  std::ostringstream out;
  if (args.json) {
    nlohmann::ordered_json j;
    j["total_entries"] = report.total_entries;
    j["matched"] = report.matched;
    j["ratio"] = round4(report.ratio);
    j["percent"] = report.percent();
    out << j.dump(2) << '\n';
  } else {
    out << "total_entries\t" << report.total_entries << '\n'
        << "matched\t" << report.matched << '\n'
        << "ratio\t" << fmt4(report.ratio) << '\n'
        << "percent\t" << report.percent() << '\n';
  }
  write_output("", out.str());
}

struct EvalScoreArgs {
  std::string gold;
  std::string pred;
  bool json = false;
};

void run_eval_score(const EvalScoreArgs& args) {
  const std::string gold_data = read_file(args.gold);
  const std::string pred_data = read_file(args.pred);
  std::istringstream gold_in(gold_data);
  std::istringstream pred_in(pred_data);
  const zici::PrfScore score = zici::score_segmentation(
      zici::read_token_lines(gold_in), zici::read_token_lines(pred_in));

  std::ostringstream out;
  if (args.json) {
    nlohmann::ordered_json j;
    j["precision"] = round4(score.precision);
    j["recall"] = round4(score.recall);
    j["f1"] = round4(score.f1);
    j["matched"] = score.matched;
    j["gold_words"] = score.gold_words;
    j["pred_words"] = score.pred_words;
    out << j.dump(2) << '\n';
  } else {
    out << "precision\t" << fmt4(score.precision) << '\n'
        << "recall\t" << fmt4(score.recall) << '\n'
        << "f1\t" << fmt4(score.f1) << '\n'
        << "matched\t" << score.matched << '\n'
        << "gold_words\t" << score.gold_words << '\n'
        << "pred_words\t" << score.pred_words << '\n';
  }
  write_output("", out.str());
}

struct BootstrapArgs {
  std::string dir;
  std::string seed;
  std::string output;
};

void run_bootstrap(const BootstrapArgs& args) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  try {
    for (const fs::directory_entry& entry : fs::directory_iterator(args.dir)) {
      if (entry.is_regular_file()) paths.push_back(entry.path().string());
    }
  } catch (const fs::filesystem_error&) {
    throw zici::IoError("cannot read directory " + args.dir);
  }
  std::sort(paths.begin(), paths.end());

  zici::MergedLexicon accumulated;
  if (!args.seed.empty()) accumulated.lexicon = read_lexicon(args.seed);

  // Documents (not the seed) containing each entry, for the report.
  zici::U32Map<std::size_t> docs_containing;
  for (const std::string& path : paths) {
    std::string text;
    try {
      text = read_file(path);
    } catch (const zici::IoError& e) {
      std::cerr << "zici: warning: skipping " << path << ": " << e.what()
                << '\n';
      continue;
    }
    const zici::BuildResult result = zici::build(text);
    for (const auto& [entry, count] : result.lexicon.counts()) {
      (void)count;
      ++docs_containing[entry];
    }
    zici::MergedLexicon step = zici::merge(accumulated.lexicon, result.lexicon);
    step.reinforced.merge(accumulated.reinforced);
    accumulated = std::move(step);
  }

  std::ostringstream tsv;
  accumulated.lexicon.write_tsv(tsv);
  write_file(args.output, tsv.str());

  std::ostringstream report;
  for (const zici::LexiconEntry& e : accumulated.lexicon.sorted_entries()) {
    const auto it = docs_containing.find(e.text);
    const std::size_t docs = it == docs_containing.end() ? 0 : it->second;
    report << zici::encode_utf8(e.text) << '\t' << e.count << '\t' << docs
           << '\n';
  }
  write_output("", report.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-segmentation of Chinese text from its own n-gram "
               "statistics, with lexicon induction and evaluation tools"};
  app.require_subcommand(1);

  SegmentArgs segment_args;
  CLI::App* segment =
      app.add_subcommand("segment", "Segment a document and emit the result");
  segment->add_option("INPUT", segment_args.input, "UTF-8 document to segment")
      ->required();
  segment->add_option("-o", segment_args.output,
                      "Write segmented text here instead of standard output");
  segment->add_option("--lexicon-out", segment_args.lexicon_out,
                      "Also write the induced lexicon TSV here");
  segment->add_option("--max-ngram", segment_args.max_ngram,
                      "Largest n-gram length to weight (default 8)");
  segment->add_option("--min-count", segment_args.min_count,
                      "Prune lexicon entries below this count (default 2)");
  segment->add_option("--separator", segment_args.separator,
                      "Segment separator (default single space)");
  segment->add_flag("--trace", segment_args.trace,
                    "Log candidates, tests, and steps to standard error");
  segment->add_option("--dump-ngrams", segment_args.dump_ngrams,
                      "Write the n-gram weight table as TSV here");
  segment->callback([&] { run_segment(segment_args); });

  CLI::App* lexicon =
      app.add_subcommand("lexicon", "Build, merge, or rank lexicons");
  lexicon->require_subcommand(1);

  LexiconBuildArgs lexicon_build_args;
  CLI::App* lexicon_build = lexicon->add_subcommand(
      "build", "Induce a lexicon from one or more documents");
  lexicon_build
      ->add_option("INPUT", lexicon_build_args.inputs, "Documents to process")
      ->required()
      ->expected(-1);
  lexicon_build
      ->add_option("-o", lexicon_build_args.output, "Output lexicon TSV")
      ->required();
  lexicon_build->callback([&] { run_lexicon_build(lexicon_build_args); });

  LexiconMergeArgs lexicon_merge_args;
  CLI::App* lexicon_merge =
      lexicon->add_subcommand("merge", "Merge two lexicon TSV files");
  lexicon_merge->add_option("A", lexicon_merge_args.a, "First lexicon TSV")
      ->required();
  lexicon_merge->add_option("B", lexicon_merge_args.b, "Second lexicon TSV")
      ->required();
  lexicon_merge
      ->add_option("-o", lexicon_merge_args.output, "Output lexicon TSV")
      ->required();
  lexicon_merge->add_flag(
      "--mark-reinforced", lexicon_merge_args.mark_reinforced,
      "Append an R/N column marking entries present in both inputs");
  lexicon_merge->callback([&] { run_lexicon_merge(lexicon_merge_args); });

  LexiconTopArgs lexicon_top_args;
  CLI::App* lexicon_top = lexicon->add_subcommand(
      "top", "Print the K most promising entries (longest, then most frequent)");
  lexicon_top->add_option("K", lexicon_top_args.k, "How many entries to print")
      ->required();
  lexicon_top->add_option("LEX", lexicon_top_args.lexicon, "Lexicon TSV")
      ->required();
  lexicon_top->callback([&] { run_lexicon_top(lexicon_top_args); });

  CLI::App* eval =
      app.add_subcommand("eval", "Evaluate lexicons and segmentations");
  eval->require_subcommand(1);

  EvalCoverageArgs eval_coverage_args;
  CLI::App* eval_coverage = eval->add_subcommand(
      "coverage", "Report how much of a lexicon a dictionary covers");
  eval_coverage
      ->add_option("--lexicon", eval_coverage_args.lexicon, "Lexicon TSV")
      ->required();
  eval_coverage
      ->add_option("--dict", eval_coverage_args.dict,
                   "CEDICT-style dictionary file")
      ->required();
  eval_coverage->add_flag("--traditional", eval_coverage_args.traditional,
                          "Match the traditional headword column");
  eval_coverage->add_flag("--json", eval_coverage_args.json,
                          "Emit JSON instead of TSV lines");
  eval_coverage->callback([&] { run_eval_coverage(eval_coverage_args); });

  EvalScoreArgs eval_score_args;
  CLI::App* eval_score = eval->add_subcommand(
      "score", "Score a predicted segmentation against a gold one");
  eval_score
      ->add_option("--gold", eval_score_args.gold,
                   "Gold segmentation, one tokenized sentence per line")
      ->required();
  eval_score
      ->add_option("--pred", eval_score_args.pred,
                   "Predicted segmentation, same line structure")
      ->required();
  eval_score->add_flag("--json", eval_score_args.json,
                       "Emit JSON instead of TSV lines");
  eval_score->callback([&] { run_eval_score(eval_score_args); });

  BootstrapArgs bootstrap_args;
  CLI::App* bootstrap = app.add_subcommand(
      "bootstrap", "Fold per-document lexicons from a corpus directory");
  bootstrap->add_option("DIR", bootstrap_args.dir, "Directory of documents")
      ->required();
  bootstrap->add_option("--seed", bootstrap_args.seed,
                        "Start from this lexicon TSV");
  bootstrap->add_option("-o", bootstrap_args.output, "Output lexicon TSV")
      ->required();
  bootstrap->callback([&] { run_bootstrap(bootstrap_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const zici::ConfigError& e) {
    std::cerr << "zici: " << e.what() << '\n';
    return 1;
  } catch (const zici::IoError& e) {
    std::cerr << "zici: " << e.what() << '\n';
    return 2;
  } catch (const zici::Error& e) {
    // EncodingError, ParseError, AlignmentError: malformed data.
    std::cerr << "zici: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

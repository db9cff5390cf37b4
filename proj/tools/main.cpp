// Command-line front end: parse English comparative sentences, judge their
// acceptability, derive logical forms, evaluate them in finite models, and
// contrast the result with the direct-analysis baseline.

#include "compsem/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

int run_sentences(compsem::RunConfig config, const std::vector<std::string>& words,
                  const std::string& corpus_path, const compsem::Lexicon& lexicon,
                  const compsem::SemLexicon& sem) {
  std::vector<std::string> sentences;
  if (!corpus_path.empty()) {
    std::ifstream in(corpus_path);
    if (!in) {
      std::cerr << "error: cannot open corpus file " << corpus_path << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] != '#') sentences.push_back(line);
    }
  }
  if (!words.empty()) sentences.push_back(join_words(words));
  if (sentences.empty()) {
    std::cerr << "error: no sentence given (pass words or --corpus FILE)\n";
    return 1;
  }
  int exit_code = 0;
  for (size_t i = 0; i < sentences.size(); ++i) {
    config.sentence = sentences[i];
    compsem::RunResult r = compsem::run(config, lexicon, sem);
    if (i) std::cout << "\n";
    std::cout << r.output;
    exit_code = std::max(exit_code, r.exit_code);
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compositional semantics for English comparatives"};
  app.require_subcommand(1);

  std::string lexicon_path;
  bool porcelain = false;
  app.add_option("--lexicon", lexicon_path, "lexicon file (TSV); defaults to the built-in fragment");
  app.add_flag("--porcelain", porcelain, "machine-readable tab-separated output");

  struct SubArgs {
    std::vector<std::string> words;
    std::string corpus;
    std::string model;
    bool derivation = false;
    bool force = false;
    bool access = false;
  };

  auto add_common = [](CLI::App* sub, SubArgs& args) {
    sub->fallthrough();  // let --lexicon / --porcelain appear after the subcommand
    sub->add_option("words", args.words, "the sentence, one word per argument");
    sub->add_option("--corpus", args.corpus, "file with one sentence per line");
  };

  SubArgs parse_args, judge_args, lf_args, eval_args, baseline_args, access_args;

  CLI::App* cmd_parse = app.add_subcommand("parse", "print all constituent analyses");
  add_common(cmd_parse, parse_args);

  CLI::App* cmd_judge = app.add_subcommand("judge", "print acceptability judgments");
  add_common(cmd_judge, judge_args);

  CLI::App* cmd_lf = app.add_subcommand("lf", "print logical forms for every reading");
  add_common(cmd_lf, lf_args);
  cmd_lf->add_flag("--derivation", lf_args.derivation,
                   "show the covert-movement derivation, one bracketing per step");
  bool lf_trace = false;
  cmd_lf->add_flag("--trace", lf_trace, "show the composition steps for each reading");

  CLI::App* cmd_eval = app.add_subcommand("eval", "evaluate readings in a finite model");
  add_common(cmd_eval, eval_args);
  cmd_eval->add_option("--model", eval_args.model, "model file (JSON)")->required();
  cmd_eval->add_flag("--force", eval_args.force, "compose sentences judged bad");
  cmd_eval->add_flag("--accessibility", eval_args.access, "also report discourse referents");

  CLI::App* cmd_baseline = app.add_subcommand("baseline", "contrast with the direct analysis");
  std::string baseline_kind;
  cmd_baseline->add_option("kind", baseline_kind, "baseline name (heim)")->required();
  add_common(cmd_baseline, baseline_args);
  cmd_baseline->add_option("--model", baseline_args.model, "model file (JSON)");

  CLI::App* cmd_access = app.add_subcommand("access", "report anaphoric accessibility");
  add_common(cmd_access, access_args);

  CLI11_PARSE(app, argc, argv);

  compsem::Lexicon lexicon = compsem::Lexicon::builtin();
  if (!lexicon_path.empty()) {
    try {
      lexicon = compsem::Lexicon::load_file(lexicon_path);
    } catch (const compsem::LexiconError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }
  compsem::SemLexicon sem = compsem::SemLexicon::standard();

  compsem::RunConfig config;
  config.format = porcelain ? compsem::RunConfig::Format::Machine
                            : compsem::RunConfig::Format::Plain;

  if (cmd_parse->parsed()) {
    config.judge_only = true;  // parse output is the bracketing plus judgment line
    return run_sentences(config, parse_args.words, parse_args.corpus, lexicon, sem);
  }
  if (cmd_judge->parsed()) {
    config.judge_only = true;
    return run_sentences(config, judge_args.words, judge_args.corpus, lexicon, sem);
  }
  if (cmd_lf->parsed()) {
    config.show_derivation = lf_args.derivation;
    config.show_trace = lf_trace;
    return run_sentences(config, lf_args.words, lf_args.corpus, lexicon, sem);
  }
  if (cmd_eval->parsed()) {
    config.model_path = eval_args.model;
    config.force = eval_args.force;
    config.show_accessibility = eval_args.access;
    return run_sentences(config, eval_args.words, eval_args.corpus, lexicon, sem);
  }
  if (cmd_baseline->parsed()) {
    if (baseline_kind != "heim") {
      std::cerr << "error: unknown baseline '" << baseline_kind << "'\n";
      return 2;
    }
    config.baseline = compsem::RunConfig::Baseline::Heim;
    if (!baseline_args.model.empty()) config.model_path = baseline_args.model;
    return run_sentences(config, baseline_args.words, baseline_args.corpus, lexicon, sem);
  }
  if (cmd_access->parsed()) {
    config.show_accessibility = true;
    config.show_lf = false;
    return run_sentences(config, access_args.words, access_args.corpus, lexicon, sem);
  }
  return 0;
}

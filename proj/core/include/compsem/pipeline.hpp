#pragma once

#include "compsem/heim.hpp"
#include "compsem/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace compsem {

// Exit codes: 0 success, 1 no parse (or unknown word), 2 evaluation/model error.
struct RunConfig {
  std::string sentence;
  bool show_derivation = false;
  bool show_lf = true;
  bool show_trace = false;  // per-reading composition steps
  bool show_accessibility = false;
  bool judge_only = false;
  bool force = false;  // compose even when judged bad
  std::optional<std::string> model_path;
  enum class Baseline { None, Heim } baseline = Baseline::None;
  enum class Format { Plain, Machine } format = Format::Plain;
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

RunResult run(const RunConfig& config, const Lexicon& lexicon, const SemLexicon& sem);
RunResult run(const RunConfig& config);

}  // namespace compsem

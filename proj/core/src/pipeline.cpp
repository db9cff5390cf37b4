#include "compsem/pipeline.hpp"

#include <sstream>

namespace compsem {

namespace {

struct Printer {
  std::ostringstream out;
  RunConfig::Format format;

  void plain(const std::string& line) {
    if (format == RunConfig::Format::Plain) out << line << '\n';
  }
  void machine(const std::string& line) {
    if (format == RunConfig::Format::Machine) out << line << '\n';
  }
};

std::string truth_str(const std::optional<bool>& v) {
  if (!v) return "undefined";
  return *v ? "true" : "false";
}

}  // namespace

RunResult run(const RunConfig& config, const Lexicon& lexicon, const SemLexicon& sem) {
  Printer p{std::ostringstream{}, config.format};
  int exit_code = 0;

  std::vector<SurfaceTree> trees;
  try {
    trees = parse(config.sentence, lexicon);
  } catch (const UnknownWordError& e) {
    p.plain(std::string("error: ") + e.what());
    p.machine(std::string("error\t") + e.what());
    return {1, p.out.str()};
  } catch (const NoParseError& e) {
    p.plain(std::string("error: ") + e.what());
    p.machine(std::string("error\t") + e.what());
    return {1, p.out.str()};
  }

  std::optional<Model> model;
  if (config.model_path) {
    try {
      model = Model::load(*config.model_path);
    } catch (const ModelError& e) {
      p.plain(std::string("error: ") + e.what());
      p.machine(std::string("error\t") + e.what());
      return {2, p.out.str()};
    }
  }

  p.plain("sentence: " + config.sentence);
  for (size_t i = 0; i < trees.size(); ++i) {
    const SurfaceTree& tree = trees[i];
    std::string tag = tag_name(classify_construction(tree));
    std::string bracketing = print_bracketing(tree);
    Judgment j = judge(tree);
    p.plain("");
    p.plain("parse " + std::to_string(i + 1) + " [" + tag + "] " + bracketing);
    p.plain("  judgment: " + verdict_name(j.verdict) + " (" + j.rule + ") — " + j.explanation);
    p.machine("parse\t" + std::to_string(i + 1) + "\t" + tag + "\t" + bracketing);
    p.machine("judgment\t" + std::to_string(i + 1) + "\t" + verdict_name(j.verdict) +
              "\t" + j.rule);
    if (config.judge_only) continue;

    if (config.show_derivation) {
      try {
        LfTree lf = build_lf(tree);
        for (size_t k = 0; k < lf.log.size(); ++k) {
          p.plain("  lf " + std::to_string(k) + " (" + lf.log[k].op + "): " +
                  lf.log[k].snapshot);
          p.machine("derivation\t" + std::to_string(i + 1) + "\t" + std::to_string(k) +
                    "\t" + lf.log[k].op + "\t" + lf.log[k].snapshot);
        }
      } catch (const LfError& e) {
        p.plain(std::string("  derivation unavailable: ") + e.what());
        p.machine("note\t" + std::to_string(i + 1) + "\tderivation\t" + e.what());
      }
    }

    if (j.verdict == Judgment::Verdict::Bad && !config.force) {
      p.plain("  not composed (judged bad; --force overrides)");
      p.machine("note\t" + std::to_string(i + 1) + "\tnot-composed\tjudged bad");
      continue;
    }

    std::vector<Reading> readings;
    try {
      readings = compose_all(tree, sem);
    } catch (const NotAClauseError&) {
      p.plain("  not a clause: judgment only");
      p.machine("note\t" + std::to_string(i + 1) + "\tnot-a-clause\t");
      continue;
    } catch (const ComposeError& e) {
      p.plain(std::string("  not composed: ") + e.what());
      p.machine("note\t" + std::to_string(i + 1) + "\tnot-composed\t" + e.what());
      continue;
    }

    for (size_t r = 0; r < readings.size(); ++r) {
      const Reading& rd = readings[r];
      std::string id = std::to_string(i + 1) + "." + std::to_string(r + 1);
      if (config.show_lf) {
        p.plain("  reading " + id + " [" + rd.scope.label + "] " + print_term(rd.form));
        p.machine("reading\t" + std::to_string(i + 1) + "\t" + std::to_string(r + 1) +
                  "\t" + rd.scope.label + "\t" + print_term(rd.form));
      }
      if (config.show_trace) {
        for (size_t k = 0; k < rd.trace.size(); ++k) {
          const DerivationStep& st = rd.trace[k];
          std::string mode = st.mode == StepMode::FA    ? "FA"
                             : st.mode == StepMode::GFA ? "GFA"
                                                        : "quantify-in";
          p.plain("    step " + std::to_string(k + 1) + " [" + mode + "] " + st.note +
                  ": " + print_term(st.result));
          p.machine("trace\t" + std::to_string(i + 1) + "\t" + std::to_string(r + 1) +
                    "\t" + std::to_string(k + 1) + "\t" + mode + "\t" + st.note + "\t" +
                    print_term(st.result));
        }
        if (rd.p0.applied && rd.p0.antecedent) {
          p.plain("    anaphora: " + rd.p0.description);
          p.machine("p0\t" + std::to_string(i + 1) + "\t" + std::to_string(r + 1) + "\t" +
                    print_term(*rd.p0.antecedent));
        }
      }
      if (model) {
        std::set<std::pair<Entity, std::string>> missing;
        EvalOptions opts;
        opts.missing_measures = &missing;
        try {
          bool v = evaluate(rd.form, *model, opts);
          p.plain("    truth: " + std::string(v ? "true" : "false"));
          p.machine("truth\t" + std::to_string(i + 1) + "\t" + std::to_string(r + 1) +
                    "\t" + (v ? "true" : "false"));
        } catch (const EvalError& e) {
          p.plain(std::string("    evaluation error: ") + e.what());
          p.machine("error\t" + std::string(e.what()));
          exit_code = 2;
        }
        for (const auto& [ent, dim] : missing) {
          p.plain("    note: entity '" + ent + "' has no '" + dim +
                  "' measure (degree atoms treated as false)");
          p.machine("note\t" + std::to_string(i + 1) + "\tmissing-measure\t" + ent +
                    "\t" + dim);
        }
      }
      if (config.show_accessibility) {
        AccessibilityReport rep = accessibility(rd);
        for (const ReferentInfo& ref : rep.referents) {
          std::string acc = ref.accessible ? "accessible" : "inaccessible";
          p.plain("    referent " + ref.var + " (" + ref.quantifier + ", " + ref.position +
                  "): " + acc + "  restrictor " + ref.restrictor);
          p.machine("referent\t" + std::to_string(i + 1) + "\t" + std::to_string(r + 1) +
                    "\t" + ref.var + "\t" + acc + "\t" + ref.restrictor);
        }
      }
    }

    if (config.baseline == RunConfig::Baseline::Heim) {
      try {
        HeimForm hf = build_heim(tree, sem);
        Term display = hf.display_term();
        p.plain("  baseline heim: " + print_term(display));
        if (model) {
          auto v = eval_heim(hf, *model);
          p.plain("    baseline truth: " + truth_str(v));
          p.machine("baseline\t" + std::to_string(i + 1) + "\theim\t" +
                    print_term(display) + "\t" + truth_str(v));
        } else {
          p.machine("baseline\t" + std::to_string(i + 1) + "\theim\t" +
                    print_term(display) + "\tna");
        }
      } catch (const UnsupportedConstructionError& e) {
        p.plain(std::string("  baseline unavailable: ") + e.what());
        p.machine("note\t" + std::to_string(i + 1) + "\tbaseline\t" + e.what());
      }
    }
  }
  return {exit_code, p.out.str()};
}

RunResult run(const RunConfig& config) {
  static const Lexicon lexicon = Lexicon::builtin();
  static const SemLexicon sem = SemLexicon::standard();
  return run(config, lexicon, sem);
}

}  // namespace compsem

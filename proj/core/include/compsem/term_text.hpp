#pragma once

#include "compsem/term.hpp"

#include <map>
#include <string>
#include <string_view>

namespace compsem {

// Concrete syntax shared by fixtures, the CLI and the machine-readable output:
//
//   lam x:e . body        forall d:d . body      exists y:e . body
//   atleast 2 x:e . body  atmost 1 x:e . body    iota d:d . body
//   (f a)                 a & b | c -> d  ~a     a > b
//
// Types are e, d, t and (a->b). Constants appear bare (g*, own', fast', P0)
// and are resolved against a signature; free variables are written annotated
// (x:e). The printer emits a fully parenthesised canonical form; the reader
// also accepts lightly parenthesised input with the usual precedences
// (-> weakest, then |, &, >, application strongest).

using Signature = std::map<std::string, SemType>;

struct TermSyntaxError : std::runtime_error {
  TermSyntaxError(const std::string& what_, size_t position_)
      : std::runtime_error(what_ + " (at offset " + std::to_string(position_) + ")"),
        position(position_) {}
  size_t position;
};

std::string print_term(const Term& term);
std::string print_type(const SemType& type);

Term read_term(std::string_view text, const Signature& constants);
SemType read_type(std::string_view text);

}  // namespace compsem

#pragma once

#include <memory>
#include <string>
#include <utility>

namespace compsem {

// Semantic types: entities (e), degrees (d), truth values (t), and function
// types built from them. Values are immutable and cheap to copy.
class SemType {
 public:
  enum class Kind { Entity, Degree, Truth, Arrow };

  SemType() : kind_(Kind::Truth) {}

  static const SemType& e();
  static const SemType& d();
  static const SemType& t();
  static SemType arrow(const SemType& arg, const SemType& result);

  Kind kind() const { return kind_; }
  bool is_arrow() const { return kind_ == Kind::Arrow; }
  const SemType& arg() const;
  const SemType& result() const;

  bool operator==(const SemType& other) const;
  bool operator!=(const SemType& other) const { return !(*this == other); }

  // Fully parenthesised, e.g. ((e->t)->t).
  std::string to_string() const;

 private:
  explicit SemType(Kind k) : kind_(k) {}
  Kind kind_;
  std::shared_ptr<const std::pair<SemType, SemType>> parts_;
};

}  // namespace compsem

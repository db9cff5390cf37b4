#include "compsem/types.hpp"

#include <stdexcept>

namespace compsem {

const SemType& SemType::e() {
  static const SemType v{Kind::Entity};
  return v;
}

const SemType& SemType::d() {
  static const SemType v{Kind::Degree};
  return v;
}

const SemType& SemType::t() {
  static const SemType v{Kind::Truth};
  return v;
}

SemType SemType::arrow(const SemType& arg, const SemType& result) {
  SemType ty{Kind::Arrow};
  ty.parts_ = std::make_shared<const std::pair<SemType, SemType>>(arg, result);
  return ty;
}

const SemType& SemType::arg() const {
  if (!is_arrow()) throw std::logic_error("SemType::arg on a base type");
  return parts_->first;
}

const SemType& SemType::result() const {
  if (!is_arrow()) throw std::logic_error("SemType::result on a base type");
  return parts_->second;
}

bool SemType::operator==(const SemType& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ != Kind::Arrow) return true;
  return arg() == other.arg() && result() == other.result();
}

std::string SemType::to_string() const {
  switch (kind_) {
    case Kind::Entity: return "e";
    case Kind::Degree: return "d";
    case Kind::Truth: return "t";
    case Kind::Arrow:
      return "(" + arg().to_string() + "->" + result().to_string() + ")";
  }
  return "?";
}

}  // namespace compsem

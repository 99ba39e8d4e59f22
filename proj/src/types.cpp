#include "polyad/types.hpp"

#include <algorithm>

namespace polyad {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::LengthError: return "LengthError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::FixedPointViolation: return "FixedPointViolation";
    case ErrorCode::TwistViolation: return "TwistViolation";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotCyclicQuotient: return "NotCyclicQuotient";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotSplitting: return "NotSplitting";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotSemiInvariant: return "NotSemiInvariant";
    case ErrorCode::NotIdempotentAnchor: return "NotIdempotentAnchor";
    case ErrorCode::NotSemiabelian: return "NotSemiabelian";
    case ErrorCode::NoIdempotent: return "NoIdempotent";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::SigmaNotIdempotentPower: return "SigmaNotIdempotentPower";
    case ErrorCode::ArityTooSmall: return "ArityTooSmall";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

Limits& limits() {
  static Limits instance;
  return instance;
}

void charge(std::uint64_t cost, const char* what) {
  if (cost > limits().eval_budget) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + " needs " + std::to_string(cost) +
                                               " evaluations, budget is " +
                                               std::to_string(limits().eval_budget));
  }
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  constexpr std::uint64_t kMax = ~std::uint64_t{0};
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

Subset Subset::of(std::size_t universe, const std::vector<Elem>& members) {
  Subset s(universe);
  for (Elem x : members) s.insert(x);
  return s;
}

Subset Subset::full(std::size_t universe) {
  Subset s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t{1});
  return s;
}

std::size_t Subset::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Elem> Subset::members() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Elem>(i));
  return out;
}

bool Subset::subset_of(const Subset& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(static_cast<Elem>(i))) return false;
  return true;
}

Subset Subset::operator&(const Subset& other) const {
  Subset r(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & other.bits_.at(i);
  return r;
}

Subset Subset::operator|(const Subset& other) const {
  Subset r(universe());
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | other.bits_.at(i);
  return r;
}

bool Subset::operator<(const Subset& other) const {
  const std::size_t a = count(), b = other.count();
  if (a != b) return a < b;
  return members() < other.members();
}

}  // namespace polyad

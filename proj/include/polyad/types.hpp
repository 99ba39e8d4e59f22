#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace polyad {

using Elem = std::uint32_t;
using Word = std::vector<Elem>;

enum class ErrorCode {
  LengthError,
  BudgetExceeded,
  NotAssociative,
  NoSolution,
  NotCentral,
  NotAutomorphism,
  FixedPointViolation,
  TwistViolation,
  NotNormal,
  NotCyclicQuotient,
  OrderMismatch,
  ArityMismatch,
  NotSplitting,
  UnknownName,
  NotSubgroup,
  NotInvariant,
  NotSemiInvariant,
  NotIdempotentAnchor,
  NotSemiabelian,
  NoIdempotent,
  BadM,
  SizeMismatch,
  SigmaNotIdempotentPower,
  ArityTooSmall,
  PreconditionViolated,
  ParseError,
  InvalidInput,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Process-wide resource ceilings. Exhaustive scans charge against eval_budget.
struct Limits {
  std::uint64_t eval_budget = 100'000'000;
  std::uint64_t table_cap = 10'000'000;
  unsigned threads = 1;
};

Limits& limits();

// Throws BudgetExceeded when `cost` evaluations exceed the configured budget.
void charge(std::uint64_t cost, const char* what);

// Saturating integer power.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

// Dense membership set over {0..size-1}.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : bits_(universe, 0) {}
  static Subset of(std::size_t universe, const std::vector<Elem>& members);
  static Subset full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  bool contains(Elem x) const { return x < bits_.size() && bits_[x] != 0; }
  void insert(Elem x) { bits_.at(x) = 1; }
  void erase(Elem x) { bits_.at(x) = 0; }
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<Elem> members() const;
  bool subset_of(const Subset& other) const;

  Subset operator&(const Subset& other) const;
  Subset operator|(const Subset& other) const;
  bool operator==(const Subset& other) const = default;
  // Order by size, then lexicographically by sorted member list.
  bool operator<(const Subset& other) const;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace polyad

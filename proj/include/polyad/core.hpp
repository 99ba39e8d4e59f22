#pragma once

#include <optional>
#include <string>

#include "polyad/groupoid.hpp"

namespace polyad {

// Value of a word of length 1 mod (n-1). Throws LengthError otherwise.
Elem eval(const Groupoid& g, const Word& w);
inline Elem eval(const NaryGroup& g, const Word& w) { return eval(g.groupoid(), w); }

// Args of length 2n-1 where bracketing at `left` (0-based) differs from bracketing at 0.
struct AssociativityWitness {
  Word args;
  int left = 0;
  Elem at_zero = 0;
  Elem at_left = 0;
};

// Charges k^(2n-1) against the budget. Deterministic under any thread count.
std::optional<AssociativityWitness> associativity_counterexample(const Groupoid& g);
bool is_associative(const Groupoid& g);

// Fixed arguments with the unknown at `position` for which `rhs` has no unique solution.
struct SolvabilityWitness {
  int position = 0;
  Word args;  // args[position] is a placeholder
  Elem rhs = 0;
  std::size_t solutions = 0;
};

// Unique solvability at every position. Does not check associativity.
std::optional<SolvabilityWitness> solvability_counterexample(const Groupoid& g);
// Associative and uniquely solvable. Throws NotAssociative on a non-associative input.
bool is_group(const Groupoid& g);

// Linear scan for x with op(args with x at hole) = rhs. Throws NoSolution.
Elem solve(const Groupoid& g, Word args, std::size_t hole, Elem rhs);
std::vector<Elem> solve_all(const Groupoid& g, Word args, std::size_t hole, Elem rhs);

// Skew element: the solution of [a^{n-1} x] = a.
Elem skew(const Groupoid& g, Elem a);
// d-fold skew: a^{-0} = a, a^{-(d+1)} = skew(a^{-d}).
Elem skew_power(const NaryGroup& g, Elem a, unsigned depth);

// Word w with |w| = 0 mod (n-1). Default mode tests [w a0] = a0 for a0 = 0 only;
// strict mode tests both sides for every element.
bool is_neutral(const NaryGroup& g, const Word& w, bool strict = false);

// Canonical record of the class of w in the covering group: the class equals
// theta(value base^{residue-1}), 1 <= residue <= n-1. Empty words are allowed.
struct Canonical {
  int residue = 1;
  Elem value = 0;
  bool operator==(const Canonical&) const = default;
};
Canonical theta_canonical(const NaryGroup& g, const Word& w, Elem base = 0);
Word canonical_word(const NaryGroup& g, const Canonical& c, Elem base = 0);

// Shortest word v (length = -|w| mod (n-1), in 1..n-1) with wv and vw neutral.
Word inverse_sequence(const NaryGroup& g, const Word& w);

std::string format_word(const Groupoid& g, const Word& w);

}  // namespace polyad

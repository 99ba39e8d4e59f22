#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polyad/groupoid.hpp"

namespace polyad {

// a^{[0]} = a, a^{[s]} = [a^{[s-1]} a^{n-1}]; negative s reduced modulo the n-adic order.
Elem nadic_power(const NaryGroup& g, Elem a, long long s);
// Least m >= 1 with a^{[m]} = a.
std::size_t nadic_order(const NaryGroup& g, Elem a);
std::vector<std::size_t> nadic_order_profile(const NaryGroup& g);
// {a^{[s]} : s >= 0}.
Subset nadic_powers(const NaryGroup& g, Elem a);

struct CyclicClass {
  bool cyclic = false;
  bool semicyclic = false;
  std::vector<Elem> generators;  // every a whose n-adic powers cover A
};
CyclicClass classify_cyclic(const NaryGroup& g);

Subset idempotents(const NaryGroup& g);
// e with [e^{i-1} x e^{n-i}] = x for all x and i. Asserts E = I cap Z and subgroup-hood.
Subset units(const NaryGroup& g);

// u ~ v in the universal covering group.
bool equivalent(const NaryGroup& g, const Word& u, const Word& v);

enum class CenterKind {
  Standard,  // z x1..x_{m-2} x ~ x x1..x_{m-2} z
  D,         // z x^{m-1} ~ x^{m-1} z
  T,         // z x1..x_{m-1} ~ x1..x_{m-1} z
  Sigma,     // z x1..x_{m-1} ~ x_{s(1)}..x_{s(m-1)} z for s in Sigma
};
const char* center_kind_name(CenterKind kind);

// Centralizer-type set of b; b = A gives the center family. Throws BadM unless (m-1) | (n-1).
// Sigma holds 0-based images on m-1 slots (CenterKind::Sigma only).
Subset centralizer(const NaryGroup& g, CenterKind kind, int m, const Subset& b,
                   const std::vector<std::vector<int>>& sigma = {});
Subset center(const NaryGroup& g, CenterKind kind = CenterKind::Standard, int m = 2,
              const std::vector<std::vector<int>>& sigma = {});

// N_A(B, m). Throws NotSubgroup, BadM.
Subset normalizer(const NaryGroup& g, const Subset& b, int m);

struct NormalizerReport {
  std::vector<std::pair<int, Subset>> by_m;  // every admissible m
  bool subgroups_containing_b = false;
  bool gcd_law = false;          // N(B, r) = N(B, m) cap N(B, k), r-1 = gcd(m-1, k-1)
  bool retract_criterion = false;  // HN = retract normalizer of B at any a in B
  bool cover0_criterion = false;   // (HN)_0 = N_{A_0}(B_0)
  bool cover_star_criterion = false;  // N(B)* = N_{A*}(B*)
  bool ok() const {
    return subgroups_containing_b && gcd_law && retract_criterion && cover0_criterion && cover_star_criterion;
  }
};
NormalizerReport normalizer_audit(const NaryGroup& g, const Subset& b);

struct CenterReport {
  std::vector<std::pair<std::pair<CenterKind, int>, Subset>> sets;
  std::vector<std::string> violations;
};
// Every admissible m for the Standard, D and T kinds: subgroup-hood, gcd laws, inclusions.
CenterReport center_audit(const NaryGroup& g, const Subset& b);

struct AbelianFlags {
  bool abelian = false;
  bool semiabelian = false;
  bool weakly_semiabelian = false;
  bool commutative = false;
  bool commutative_exhaustive = false;  // false: checked on a fixed-seed sample
  std::vector<std::pair<int, bool>> m_semiabelian;
  std::vector<std::pair<int, bool>> weakly_m;
  std::vector<std::pair<int, bool>> t_semiabelian;
  std::vector<std::string> violations;
};
AbelianFlags abelianness(const NaryGroup& g);

struct SylowPartition {
  std::size_t p = 0;
  std::vector<Subset> parts;            // disjoint, cover A, each semi-invariant
  std::size_t sylow_count = 0;          // all n-ary subgroups of order p^k
  std::vector<std::vector<Subset>> decompositions;  // a-direct Sylow factors, one per anchor a
};
// Requires every element idempotent, n-1 prime and p a prime dividing |A|.
SylowPartition idempotent_sylow_partition(const NaryGroup& g, std::size_t p);

// E(A) of order k*m with gcd(k, m) = 1: the subgroups of E(A) of order k. Throws NoIdempotent when E is empty.
std::vector<Subset> units_partition(const NaryGroup& g, std::size_t k);

struct SolvabilityClass {
  bool semisolvable = false;
  bool seminilpotent = false;
  std::size_t derived_length = 0;
};
SolvabilityClass classify_solvability(const NaryGroup& g);

}  // namespace polyad

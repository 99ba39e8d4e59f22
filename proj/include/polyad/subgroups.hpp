#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyad/groupoid.hpp"

namespace polyad {

class PostCover;

// Closed under the operation (finite carriers make this sufficient).
bool is_subgroup(const NaryGroup& g, const Subset& b);

// Least n-ary subgroup containing m: level-1 part of the subgroup of A* generated by theta(m).
Subset generate(const NaryGroup& g, const std::vector<Elem>& m);
// Same result by repeatedly adding skews and n-fold products until nothing changes.
Subset generate_by_closure(const NaryGroup& g, const std::vector<Elem>& m);

// Sorted by size, then by member list. Throws BudgetExceeded for k > 64.
std::vector<Subset> all_subgroups(const NaryGroup& g);
// Subgroups containing the idempotent a, read off the beta-invariant retract subgroups.
// Throws NotIdempotentAnchor.
std::vector<Subset> subgroups_through_idempotent(const NaryGroup& g, Elem a);

enum class Side { Left, Right };
struct CosetDecomposition {
  Side side = Side::Right;
  std::vector<Subset> cosets;  // ordered by smallest member
  std::vector<Elem> reps;      // smallest member of each coset
};
// Left: [x B^{n-1}], right: [B^{n-1} x]. Throws NotSubgroup.
CosetDecomposition cosets(const NaryGroup& g, const Subset& b, Side side);

Subset coset_left(const NaryGroup& g, Elem x, const Subset& b);   // [x B^{n-1}]
Subset coset_right(const NaryGroup& g, const Subset& b, Elem x);  // [B^{n-1} x]

// Invariant: [x B^{n-1}] = [B^{i-1} x B^{n-i}] for all x and i.
bool is_invariant(const NaryGroup& g, const Subset& b);
// Criterion [x B x^{n-3} skew(x)] = B for all x (n >= 3); for n = 2 ordinary normality.
bool is_invariant_by_conjugation(const NaryGroup& g, const Subset& b);
// [x B^{n-1}] = [B^{n-1} x] for all x.
bool is_semi_invariant(const NaryGroup& g, const Subset& b);
// Semi-invariant and [x B^{n-1}] = [B^{m-1} x B^{n-m}]; requires 2 <= m <= n and (m-1) | (n-1).
bool is_m_semi_invariant(const NaryGroup& g, const Subset& b, int m);
// [x x1..x_{n-2} B] = [B x1..x_{n-2} x].
bool is_normal(const NaryGroup& g, const Subset& b);
// [x1..x_{n-1} B] = [B x_{s(1)}..x_{s(n-1)}] for every s in sigmas (0-based images on n-1 slots).
bool is_sigma_normal(const NaryGroup& g, const Subset& b, const std::vector<std::vector<int>>& sigmas);
// [x^{n-1} B] = [B x^{n-1}].
bool is_weakly_normal(const NaryGroup& g, const Subset& b);

struct NormalityReport {
  bool invariant = false;
  bool invariant_by_conjugation = false;
  bool semi_invariant = false;
  bool normal = false;
  bool weakly_normal = false;
  std::vector<std::pair<int, bool>> m_semi_invariant;               // admissible m
  std::vector<std::pair<std::vector<int>, bool>> sigma_normal;      // every sigma in S_{n-1}
  std::vector<std::string> violations;  // implication failures; empty on a correct build
};
NormalityReport normality_implications_audit(const NaryGroup& g, const Subset& b);

// Element x with [x C^{n-1}] = [B x C^{n-2}] = [B^{n-1} x].
std::optional<Elem> is_conjugate(const NaryGroup& g, const Subset& b, const Subset& c);
// Element x with [x C^{n-1}] = [B^{n-1} x].
std::optional<Elem> is_semiconjugate(const NaryGroup& g, const Subset& b, const Subset& c);
// Some g in A* with g C* g^-1 = B*.
bool conjugate_in_cover(const NaryGroup& g, const Subset& b, const Subset& c);

// n-ary group on the right cosets of a semi-invariant B. Throws NotSemiInvariant.
NaryGroup factor_group(const NaryGroup& g, const Subset& b);

struct CosetActionReport {
  std::vector<Subset> omega;                  // right cosets B (b) x
  std::vector<std::vector<std::size_t>> delta;  // delta[a][i]: image of omega[i]
  std::size_t image_order = 0;                // |Delta|
  Subset kernel;                              // N
  bool retract_homomorphism = false;
  bool nary_homomorphism = false;
  bool kernel_is_subgroup = false;     // [b^n] in N
  bool kernel_semi_invariant = false;
  bool kernel_maximal = false;         // no semi-invariant subgroup strictly between N and B
};
CosetActionReport coset_action(const NaryGroup& g, const Subset& b, Elem anchor);

// Checks the direct conditions and the retract criterion; they must agree.
// Throws NotIdempotentAnchor when a is not idempotent.
bool a_direct_decomposition(const NaryGroup& g, Elem a, const std::vector<Subset>& parts);

struct SylowDecomposition {
  Elem anchor = 0;
  std::vector<std::vector<std::size_t>> blocks;  // prime blocks of the partition
  std::vector<Subset> parts;
  bool unique = false;
};
// For every idempotent anchor. Default partition puts each prime in its own block.
// Throws NotSemiabelian, NoIdempotent.
std::vector<SylowDecomposition> sylow_hall_semiabelian(const NaryGroup& g,
                                                       std::vector<std::vector<std::size_t>> blocks = {});

// Values v with (1, v) in s.
Subset level_one_values(const PostCover& c, const Subset& s);

}  // namespace polyad

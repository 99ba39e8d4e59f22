#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyad/finite_group.hpp"
#include "polyad/groupoid.hpp"

namespace polyad {

// Binary group x (a) y = [x skew(a) a^{n-3} y] with identity a, the automorphism
// beta(x) = [a x skew(a) a^{n-3}], alpha = beta^-1 and d = [a^n].
// For n = 2 the retract is the group itself with beta = id and d = identity.
struct Retract {
  Elem anchor = 0;
  int arity = 2;
  BinaryGroup group;
  std::vector<Elem> beta;
  std::vector<Elem> alpha;
  Elem d = 0;

  Elem mul(Elem x, Elem y) const { return group.mul(x, y); }
  Elem beta_pow(Elem x, int e) const;  // e may be negative
};

Retract retract_at(const NaryGroup& g, Elem a);

struct HossuReport {
  bool ok = true;
  std::string failure;  // first violated identity, empty when ok
  Word witness;
  std::uint64_t checked = 0;
};
// Exhaustive check of the reconstruction formulas (every split point), the twist
// identities, d^beta = d and beta being an automorphism of both operations.
HossuReport verify_hossu(const NaryGroup& g, const Retract& r);

// x -> [c skew(a) a^{n-3} x], an isomorphism from the retract at a onto the retract at c.
// Throws PreconditionViolated if the map fails to be one.
std::vector<Elem> retract_isomorphism_witness(const NaryGroup& g, Elem a, Elem c);

// x -> class of x skew(a) a^{n-3} maps the retract at a isomorphically onto A_0.
bool retract_matches_a0(const NaryGroup& g, Elem a);

// n-ary subgroups containing x versus retract subgroups V with [x^{n-1} a] in V and
// V (a) x = x (a) V^beta; matched through H = V (a) x and V = [H^{n-1} a].
struct CorrespondenceReport {
  std::vector<Subset> nary;
  std::vector<Subset> retract;
  bool bijection = false;
};
CorrespondenceReport subgroup_correspondence(const NaryGroup& g, Elem a, std::optional<Elem> x = std::nullopt);

}  // namespace polyad

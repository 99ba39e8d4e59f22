#pragma once

#include <vector>

#include "polyad/core.hpp"
#include "polyad/finite_group.hpp"

namespace polyad {

// Universal covering group A* of order k(n-1). Element (residue i, value v) is stored at
// (i-1)*k + v and stands for the class of v base^{i-1}.
class PostCover {
 public:
  explicit PostCover(const NaryGroup& g, Elem base = 0);

  std::size_t order() const { return group_.size(); }
  std::size_t carrier_size() const { return k_; }
  int arity() const { return n_; }
  Elem base() const { return base_; }

  Elem index(const Canonical& c) const { return static_cast<Elem>((c.residue - 1) * k_ + c.value); }
  Canonical record(Elem x) const { return {static_cast<int>(x / k_) + 1, static_cast<Elem>(x % k_)}; }
  int grade(Elem x) const { return static_cast<int>(x / k_) + 1; }
  Elem theta(Elem a) const { return static_cast<Elem>(a); }
  Elem mul(Elem x, Elem y) const { return group_.mul(x, y); }
  Elem inv(Elem x) const { return group_.inv(x); }
  Elem identity() const { return group_.identity(); }
  // Class of an arbitrary word, folded through the table.
  Elem canon(const Word& w) const;

  const BinaryGroup& group() const { return group_; }
  // A^{(i)}: classes of words of length i mod (n-1); A_0 is level n-1.
  Subset level(int i) const;
  Subset a0() const { return level(n_ - 1); }
  Subset theta_set(const Subset& b) const;
  Subset product(const Subset& x, const Subset& y) const;
  Subset product(Elem x, const Subset& y) const;
  Subset product(const Subset& x, Elem y) const;
  // s^times as a set product, times >= 1.
  Subset power(const Subset& s, int times) const;

 private:
  std::size_t k_;
  int n_;
  Elem base_;
  BinaryGroup group_;
};

// B*(A) and B_0(A) for an n-ary subgroup B.
struct EmbeddedSubgroup {
  Subset b;
  Subset star;
  Subset zero;
};
EmbeddedSubgroup embed_subgroup(const NaryGroup& g, const Subset& b);

// A_0 as a group of order k.
BinaryGroup correspondent_group(const PostCover& c);

struct IndexReport {
  std::size_t nary = 0;
  std::size_t zero = 0;
  std::size_t star = 0;
  bool cosets_match = false;  // coset decompositions correspond bijectively on all levels
  bool consistent() const { return cosets_match && nary == zero && zero == star; }
};
IndexReport index_correspondence(const NaryGroup& g, const Subset& b);

// theta(x) B* -> theta(x b^{n-2}) B_0 for invariant B, checked to be an isomorphism.
struct QuotientReport {
  std::size_t order = 0;
  std::vector<Subset> star_cosets;
  std::vector<Subset> zero_cosets;
  std::vector<std::size_t> map;  // star coset index -> zero coset index
  bool well_defined = false;
  bool bijective = false;
  bool multiplicative = false;
  bool isomorphism() const { return well_defined && bijective && multiplicative; }
};
QuotientReport quotient_isomorphism(const NaryGroup& g, const Subset& b);

}  // namespace polyad

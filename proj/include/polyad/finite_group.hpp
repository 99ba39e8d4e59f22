#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyad/types.hpp"

namespace polyad {

// Finite binary group given by a full Cayley table.
class BinaryGroup {
 public:
  BinaryGroup() = default;
  // Validates the table; throws InvalidInput when it is not a group. The O(k^3)
  // associativity scan is skipped when check_associativity is false.
  BinaryGroup(std::size_t k, std::vector<Elem> mul, std::vector<std::string> labels = {},
              bool check_associativity = true);

  std::size_t size() const { return k_; }
  Elem mul(Elem a, Elem b) const { return mul_[a * k_ + b]; }
  Elem inv(Elem a) const { return inv_[a]; }
  Elem identity() const { return id_; }
  Elem pow(Elem a, long long e) const;
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  const std::vector<Elem>& table() const { return mul_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;

  std::size_t order(Elem a) const;
  bool is_abelian() const;

  Subset generate(const std::vector<Elem>& gens) const;
  bool is_subgroup(const Subset& s) const;
  bool is_normal(const Subset& h) const;
  Subset normalizer(const Subset& h) const;
  Subset centralizer(const Subset& h) const;
  Subset center() const;
  Subset conjugate_set(Elem g, const Subset& h) const;  // g H g^-1
  // Right cosets H x, ordered by smallest member.
  std::vector<Subset> right_cosets(const Subset& h) const;
  std::vector<Subset> left_cosets(const Subset& h) const;
  Subset commutator_subgroup(const Subset& a, const Subset& b) const;

  bool is_cyclic() const;
  bool is_solvable() const;
  bool is_nilpotent() const;
  std::size_t derived_length() const;  // meaningful only when solvable
  std::vector<Subset> all_subgroups() const;
  // Unique Sylow p-subgroup of an abelian group (elements of p-power order).
  Subset primary_component(const std::vector<std::size_t>& primes) const;
  bool is_automorphism(const std::vector<Elem>& f) const;
  std::vector<std::vector<Elem>> automorphisms() const;

  // Group on the elements of `s` (must be a subgroup), relabelled 0..|s|-1 in member order.
  BinaryGroup subgroup(const Subset& s) const;

 private:
  std::size_t k_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  Elem id_ = 0;
  std::vector<std::string> labels_;
};

// Multiset of element orders, sorted.
std::vector<std::size_t> order_profile(const BinaryGroup& g);

// An isomorphism g -> h if one exists.
std::optional<std::vector<Elem>> find_isomorphism(const BinaryGroup& g, const BinaryGroup& h);
bool isomorphic(const BinaryGroup& g, const BinaryGroup& h);

// Named groups. Labels are plain ASCII.
BinaryGroup cyclic_group(std::size_t m);
// Order 2m, element (s,i) = b^s c^i stored at s*m+i, (s1,i1)(s2,i2) = (s1^s2, (-1)^s2 i1 + i2).
BinaryGroup dihedral_group(std::size_t m);
// Order 8, element (j,i) = b^j a^i stored at 4j+i.
BinaryGroup quaternion_group();
// Permutations of {1..q} in lexicographic order of images; product composes left to right.
BinaryGroup symmetric_group(std::size_t q);
Subset alternating_subset(std::size_t q);
// Index in symmetric_group(q) of the permutation given by images (0-based).
Elem permutation_index(const std::vector<int>& images);
std::vector<int> permutation_from_index(std::size_t q, Elem index);
// Cycle notation with 1-based points, "()" for the identity.
std::string cycle_notation(const std::vector<int>& images);
// Parses "(1 2)(3 4)" or "(1,2)" into images of size q. Throws ParseError.
std::vector<int> parse_cycles(const std::string& text, std::size_t q);
BinaryGroup direct_product(const BinaryGroup& a, const BinaryGroup& b);

std::vector<std::size_t> prime_factors(std::size_t m);
std::size_t gcd(std::size_t a, std::size_t b);

}  // namespace polyad

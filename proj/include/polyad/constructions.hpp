#pragma once

#include <memory>
#include <string>
#include <vector>

#include "polyad/finite_group.hpp"
#include "polyad/groupoid.hpp"

namespace polyad {

// How a group was built; enough to rebuild it and to serialize it.
struct Recipe {
  Backing kind = Backing::Table;
  int arity = 2;
  std::vector<std::string> labels;
  std::vector<Elem> table;                             // Table
  std::shared_ptr<const BinaryGroup> base;             // Derived, Gluskin, Coset
  Elem central = 0;                                    // Derived
  std::vector<Elem> beta;                              // Gluskin
  Elem d = 0;                                          // Gluskin
  std::vector<Elem> subgroup;                          // Coset, members of H in base order
  Elem generator = 0;                                  // Coset
  std::vector<std::shared_ptr<const Recipe>> children; // Product
  std::size_t q = 0;                                   // Permutation: points
  int positions = 0;                                   // Permutation: maps per element plus one
  std::vector<int> sigma;                              // Permutation: 0-based images on positions-1 slots
};

// Table recipes are always checked exhaustively; constructions apply their own check.
NaryGroup realize(const Recipe& r, NaryGroup::Check check = NaryGroup::Check::Full);

NaryGroup from_table(std::size_t k, int n, std::vector<Elem> table, std::vector<std::string> labels = {});

// [a1..an] = a1 a2 ... an c with c central.
NaryGroup derived(const BinaryGroup& g, int n, Elem c);
NaryGroup derived(const BinaryGroup& g, int n);

// [x1..xn] = x1 x2^beta ... xn^{beta^{n-1}} d.
NaryGroup gluskin(const BinaryGroup& g, const std::vector<Elem>& beta, Elem d, int n);

// Derived operation on the coset gH; element i is g h_i for the i-th member h_i of H.
NaryGroup coset_construction(const BinaryGroup& g, const Subset& h, Elem gen, int n);

// Componentwise product; element index is mixed radix with the first factor most significant.
NaryGroup direct_product(const std::vector<NaryGroup>& gs);

// [x1..xn] = x1 x2^beta ... x_{n-1}^{beta^{n-2}} xn with beta^{n-1} = id and
// b b^beta ... b^{beta^{n-2}} = e for all b.
NaryGroup idempotent_from_splitting(const BinaryGroup& g, const std::vector<Elem>& beta, int n);

// Accepted names: T<q>, Rusakov5, V<k>, Vn(<k>), derived(S<q>,<n>), D6_ternary,
// Zg_cyclic(<g>,<n>), B3_5ary, Z6_alt, RxR.
NaryGroup named_example(const std::string& name);
// Names used for catalog-wide checks.
std::vector<std::string> catalog_names();

}  // namespace polyad

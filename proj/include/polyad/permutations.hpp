#pragma once

#include <string>
#include <vector>

#include "polyad/groupoid.hpp"

namespace polyad {

// Tuple of n-1 maps on {0..q-1} with a slot permutation sigma on {0..n-2}.
// Map f_j sends slot j to slot sigma(j).
struct NaryPermutation {
  std::vector<int> sigma;
  std::vector<std::vector<int>> maps;
  bool operator==(const NaryPermutation&) const = default;
};

// g_j = f_{1,j} then f_{2,s1(j)} then f_{3,s2(s1(j))} ...; result slot permutation is
// s1 followed by s2 ... . Throws SizeMismatch on inconsistent shapes.
NaryPermutation compose(const std::vector<NaryPermutation>& fs);

std::vector<int> compose_slots(const std::vector<int>& first, const std::vector<int>& then);
std::vector<int> slot_power(const std::vector<int>& sigma, int k);
// Smallest k >= 2 with sigma^k = sigma.
int natural_arity(const std::vector<int>& sigma);

// All tuples of bijections with slot permutation sigma under k-ary composition.
// Element index is mixed radix over slots (slot 0 most significant) of lexicographic
// permutation ranks. Throws SigmaNotIdempotentPower unless sigma^k = sigma.
NaryGroup permutation_group(std::size_t q, int n, const std::vector<int>& sigma, int k);
NaryPermutation decode_permutation(std::size_t q, int n, const std::vector<int>& sigma, Elem index);
Elem encode_permutation(const NaryPermutation& f);

// Cycle i -> i+1 on n-1 slots.
std::vector<int> cyclic_slots(int n);

// Right-regular representation: r_c acts on the grade classes A_1..A_{n-1} of the
// covering group by right multiplication with theta(c).
struct RegularEmbedding {
  std::vector<NaryPermutation> maps;  // indexed by c
  bool injective = false;
  bool homomorphic = false;
};
RegularEmbedding right_regular_embedding(const NaryGroup& g);

}  // namespace polyad

#include <doctest.h>

#include "polyad/permutations.hpp"
#include "polyad/structure.hpp"
#include "support.hpp"

using namespace polyad;

namespace {

std::vector<int> random_bijection(gen::Source& s, std::size_t q) {
  std::vector<int> p(q);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), s.rng);
  return p;
}

NaryPermutation random_permutation(gen::Source& s, std::size_t q, int n) {
  NaryPermutation f;
  f.sigma = random_bijection(s, static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j) f.maps.push_back(random_bijection(s, q));
  return f;
}

// x -> then[first[x]]
std::vector<int> after(const std::vector<int>& first, const std::vector<int>& then) {
  std::vector<int> out(first.size());
  for (std::size_t x = 0; x < first.size(); ++x) out[x] = then[static_cast<std::size_t>(first[x])];
  return out;
}

std::size_t idempotent_count(const NaryGroup& g) { return idempotents(g).count(); }

}  // namespace

TEST_CASE("composition of a single permutation is itself") {
  gen::Source s(71);
  for (int trial = 0; trial < 10; ++trial) {
    const NaryPermutation f = random_permutation(s, 3, 4);
    CHECK(compose({f}) == f);
  }
}

TEST_CASE("componentwise composition with identity slots") {
  gen::Source s(72);
  const std::vector<int> id{0, 1};
  std::vector<NaryPermutation> fs;
  for (int i = 0; i < 3; ++i) {
    NaryPermutation f = random_permutation(s, 3, 3);
    f.sigma = id;
    fs.push_back(f);
  }
  const NaryPermutation g = compose(fs);
  CHECK(g.sigma == id);
  for (std::size_t j = 0; j < 2; ++j) CHECK(g.maps[j] == after(after(fs[0].maps[j], fs[1].maps[j]), fs[2].maps[j]));
}

TEST_CASE("composition along a swapped slot pair") {
  const std::vector<int> swap{1, 0};
  const NaryPermutation f{swap, {{1, 0}, {0, 1}}};
  const NaryPermutation g{swap, {{0, 1}, {1, 0}}};
  const NaryPermutation h{swap, {{1, 0}, {1, 0}}};
  const NaryPermutation r = compose({f, g, h});
  // slot 0 runs f_1 g_2 h_1, slot 1 runs f_2 g_1 h_2
  CHECK(r.maps[0] == after(after(f.maps[0], g.maps[1]), h.maps[0]));
  CHECK(r.maps[1] == after(after(f.maps[1], g.maps[0]), h.maps[1]));
  CHECK(r.sigma == swap);
  CHECK(r.maps[0] == std::vector<int>{1, 0});
  CHECK(r.maps[1] == std::vector<int>{1, 0});
}

TEST_CASE("shape errors") {
  const NaryPermutation a{{1, 0}, {{1, 0}, {0, 1}}};
  const NaryPermutation b{{1, 0}, {{1, 0, 2}, {0, 1, 2}}};
  CHECK_THROWS_AS(compose({a, b}), Error);
  CHECK_THROWS_AS(permutation_group(2, 3, {1, 0}, 4), Error);
}

TEST_CASE("permutation groups") {
  const NaryGroup a = permutation_group(2, 3, {1, 0}, 3);
  CHECK(a.size() == 4);
  CHECK(a.arity() == 3);
  CHECK(idempotent_count(a) == 2);
  const NaryGroup b = permutation_group(2, 4, cyclic_slots(4), 4);
  CHECK(b.size() == 8);
  CHECK(idempotent_count(b) == 4);
  CHECK(permutation_group(1, 3, {1, 0}, 3).size() == 1);
  CHECK(natural_arity(cyclic_slots(4)) == 4);
  CHECK(natural_arity({0, 1}) == 2);
  for (Elem x = 0; x < b.size(); ++x) CHECK(encode_permutation(decode_permutation(2, 4, cyclic_slots(4), x)) == x);
}

TEST_CASE("property: order and idempotent counts for the cyclic slot permutation") {
  for (std::size_t q = 1; q <= 3; ++q)
    for (int n = 2; n <= 4; ++n) {
      const auto sigma = cyclic_slots(n);
      const int k = natural_arity(sigma);
      CHECK(k == n);
      const NaryGroup g = permutation_group(q, n, sigma, k);
      const std::size_t f = oracle::factorial(q);
      CHECK(g.size() == oracle::ipow(f, static_cast<std::size_t>(n - 1)));
      CHECK(idempotent_count(g) == oracle::ipow(f, static_cast<std::size_t>(n - 2)));
      if (oracle::ipow(g.size(), static_cast<std::size_t>(2 * k - 1)) <= 2000000)
        CHECK(oracle::dornte(oracle::Table::of(g)));
    }
}

TEST_CASE("property: mixed associativity") {
  gen::Source s(73);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t q = 1 + s.below(3);
    const int n = s.between(2, 4);
    const std::size_t m = 2 + s.below(4);
    std::vector<NaryPermutation> fs;
    for (std::size_t i = 0; i < m; ++i) fs.push_back(random_permutation(s, q, n));
    const NaryPermutation whole = compose(fs);
    std::vector<int> slots = fs[0].sigma;
    for (std::size_t i = 1; i < m; ++i) slots = compose_slots(slots, fs[i].sigma);
    REQUIRE(whole.sigma == slots);
    const std::size_t i = s.below(m);
    const std::size_t len = 1 + s.below(m - i);
    std::vector<NaryPermutation> grouped(fs.begin(), fs.begin() + static_cast<long>(i));
    grouped.push_back(compose(std::vector<NaryPermutation>(fs.begin() + static_cast<long>(i),
                                                           fs.begin() + static_cast<long>(i + len))));
    grouped.insert(grouped.end(), fs.begin() + static_cast<long>(i + len), fs.end());
    REQUIRE(compose(grouped) == whole);
  }
}

TEST_CASE("property: right-regular embedding") {
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    if (g.size() > 6) continue;
    CAPTURE(name);
    const RegularEmbedding e = right_regular_embedding(g);
    CHECK(e.injective);
    CHECK(e.homomorphic);
    REQUIRE(e.maps.size() == g.size());
    for (std::size_t a = 0; a < e.maps.size(); ++a)
      for (std::size_t b = a + 1; b < e.maps.size(); ++b) REQUIRE_FALSE(e.maps[a] == e.maps[b]);
    oracle::tuples(g.size(), static_cast<std::size_t>(g.arity()), [&](const Word& w) {
      std::vector<NaryPermutation> fs;
      for (Elem x : w) fs.push_back(e.maps[x]);
      REQUIRE(compose(fs) == e.maps[g.op(w)]);
    });
  }
}

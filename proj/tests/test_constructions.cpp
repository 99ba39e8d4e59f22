#include <doctest.h>

#include "polyad/post_cover.hpp"
#include "polyad/retract.hpp"
#include "polyad/structure.hpp"
#include "support.hpp"

using namespace polyad;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no throw");
  return ErrorCode::InvalidInput;
}

std::vector<Elem> times(std::size_t m, std::size_t u) {
  std::vector<Elem> out(m);
  for (Elem x = 0; x < m; ++x) out[x] = static_cast<Elem>(u * x % m);
  return out;
}

}  // namespace

TEST_CASE("derived") {
  const NaryGroup r = derived(quaternion_group(), 5, 2);
  CHECK(r.size() == 8);
  CHECK(idempotents(r).empty());
  CHECK(is_group(derived(cyclic_group(4), 3, 0).groupoid()));
  CHECK(code_of([] { derived(symmetric_group(3), 3, permutation_index(parse_cycles("(1 2)", 3))); }) ==
        ErrorCode::NotCentral);
}

TEST_CASE("gluskin") {
  const NaryGroup g = gluskin(cyclic_group(5), times(5, 2), 0, 5);
  CHECK(oracle::dornte(oracle::Table::of(g)));
  const NaryGroup h = gluskin(cyclic_group(4), times(4, 3), 0, 3);
  CHECK(oracle::dornte(oracle::Table::of(h)));
  // beta^(n-1) must be conjugation by d
  CHECK_THROWS_AS(gluskin(cyclic_group(5), times(5, 2), 0, 3), Error);
  // not an automorphism
  std::vector<Elem> bad = times(4, 1);
  std::swap(bad[1], bad[2]);
  CHECK(code_of([&] { gluskin(cyclic_group(4), bad, 0, 3); }) == ErrorCode::NotAutomorphism);
}

TEST_CASE("coset construction") {
  const NaryGroup t3 = named_example("T3");
  CHECK(t3.size() == 3);
  CHECK(t3.arity() == 3);
  const BinaryGroup z6 = cyclic_group(6);
  const NaryGroup odd = coset_construction(z6, Subset::of(6, {0, 2, 4}), 1, 3);
  CHECK(odd.size() == 3);
  CHECK(oracle::dornte(oracle::Table::of(odd)));
  const NaryGroup v6 = named_example("V6");
  CHECK(v6.size() == 6);
  CHECK(v6.groupoid().backing() == Backing::Coset);
  CHECK(v6.cover().order() == 12);
}

TEST_CASE("direct product") {
  const NaryGroup rr = named_example("RxR");
  CHECK(rr.size() == 64);
  CHECK(units(rr).count() == 4);
  const NaryGroup single = direct_product({named_example("T3")});
  CHECK(single.groupoid().table() == named_example("T3").groupoid().table());
  const NaryGroup tt = direct_product({named_example("T3"), named_example("T3")});
  CHECK(tt.size() == 9);
  CHECK(idempotents(tt).count() == 9);
  CHECK(code_of([] { direct_product({named_example("T3"), named_example("Rusakov5")}); }) ==
        ErrorCode::ArityMismatch);
}

TEST_CASE("idempotent from splitting") {
  const NaryGroup g = idempotent_from_splitting(cyclic_group(3), times(3, 2), 3);
  CHECK(g.size() == 3);
  CHECK(idempotents(g).count() == 3);
  const NaryGroup e = idempotent_from_splitting(direct_product(cyclic_group(2), cyclic_group(2)), times(4, 1), 3);
  CHECK(idempotents(e).count() == 4);
  CHECK(code_of([] { idempotent_from_splitting(cyclic_group(4), times(4, 1), 3); }) == ErrorCode::NotSplitting);
}

TEST_CASE("named examples") {
  const NaryGroup t3 = named_example("T3");
  CHECK(idempotents(t3).count() == 3);
  CHECK(units(t3).empty());
  CHECK(idempotents(named_example("Rusakov5")).empty());
  CHECK(abelianness(named_example("V6")).semiabelian);
  CHECK(code_of([] { named_example("nope"); }) == ErrorCode::UnknownName);
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    CHECK(g.size() > 0);
  }
  CHECK(named_example("Vn(5)").size() == 5);
}

TEST_CASE("property: constructor output satisfies the group axioms") {
  gen::Source s(11);
  for (int trial = 0; trial < 30; ++trial) {
    const NaryGroup g = s.coin() ? gen::derived_group(s, 4) : gen::gluskin_group(s);
    REQUIRE(oracle::dornte(oracle::Table::of(g)));
  }
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    if (oracle::ipow(g.size(), static_cast<std::size_t>(2 * g.arity() - 1)) > 3000000) continue;
    CHECK(oracle::dornte(oracle::Table::of(g)));
  }
}

TEST_CASE("property: gluskin with trivial beta reproduces derived") {
  gen::Source s(12);
  for (int trial = 0; trial < 20; ++trial) {
    const BinaryGroup b = gen::small_group(s);
    const int n = s.between(2, 4);
    if (oracle::ipow(b.size(), static_cast<std::size_t>(2 * n - 1)) > 2000000) continue;
    const auto z = b.center().members();
    const Elem c = z[s.below(z.size())];
    std::vector<Elem> id(b.size());
    for (Elem x = 0; x < b.size(); ++x) id[x] = x;
    REQUIRE(gluskin(b, id, c, n).groupoid().table() == derived(b, n, c).groupoid().table());
  }
}

TEST_CASE("property: coset construction cover has order |H|(n-1)") {
  for (int n = 3; n <= 5; ++n)
    for (std::size_t m = 2; m <= 6; ++m) {
      const BinaryGroup z = cyclic_group(m * static_cast<std::size_t>(n - 1));
      std::vector<Elem> h;
      for (Elem x = 0; x < z.size(); x += static_cast<Elem>(n - 1)) h.push_back(x);
      const NaryGroup g = coset_construction(z, Subset::of(z.size(), h), 1, n);
      CHECK(g.size() == m);
      CHECK(g.cover().order() == m * static_cast<std::size_t>(n - 1));
    }
}

TEST_CASE("property: splitting output is idempotent with retract equal to the base") {
  struct Case {
    BinaryGroup g;
    std::vector<Elem> beta;
    int n;
  };
  std::vector<Case> cases = {
      {cyclic_group(3), times(3, 2), 3},
      {cyclic_group(6), times(6, 5), 3},
      {direct_product(cyclic_group(2), cyclic_group(2)), times(4, 1), 3},
      {cyclic_group(3), times(3, 1), 4},
      {cyclic_group(5), times(5, 4), 3},
  };
  for (const auto& c : cases) {
    const NaryGroup g = idempotent_from_splitting(c.g, c.beta, c.n);
    for (Elem b = 0; b < g.size(); ++b) REQUIRE(g.op(Word(static_cast<std::size_t>(c.n), b)) == b);
    const Retract r = retract_at(g, c.g.identity());
    CHECK(r.group.table() == c.g.table());
  }
}

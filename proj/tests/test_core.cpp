#include <doctest.h>

#include "polyad/axioms.hpp"
#include "support.hpp"

using namespace polyad;

namespace {

NaryGroup z4_ternary() { return derived(cyclic_group(4), 3, 0); }

NaryGroup gf5_quintic() {
  std::vector<Elem> beta(5);
  for (Elem x = 0; x < 5; ++x) beta[x] = 2 * x % 5;
  return gluskin(cyclic_group(5), beta, 0, 5);
}

}  // namespace

TEST_CASE("eval on fixed words") {
  CHECK(eval(z4_ternary(), Word{1, 2, 3}) == 2);
  CHECK(eval(z4_ternary(), Word{3}) == 3);
  CHECK(eval(gf5_quintic(), Word{1, 1, 1, 1, 1}) == 1);
  // x1 + 2 x2 + 4 x3 + 3 x4 + x5 mod 5
  const NaryGroup g = gf5_quintic();
  oracle::tuples(5, 5, [&](const Word& w) {
    const Elem ref = (w[0] + 2 * w[1] + 4 * w[2] + 3 * w[3] + w[4]) % 5;
    REQUIRE(eval(g, w) == ref);
  });
}

TEST_CASE("eval rejects bad lengths") {
  const NaryGroup g = z4_ternary();
  CHECK_THROWS_AS(eval(g, Word{1, 2}), Error);
  try {
    eval(g, Word{});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthError);
  }
}

TEST_CASE("associativity detection") {
  CHECK(is_associative(projection_magma(2, 3, true)));
  CHECK(is_associative(projection_magma(3, 4, true)));
  CHECK(is_associative(derived(cyclic_group(3), 3).groupoid()));
  std::vector<Elem> t = derived(cyclic_group(2), 3).groupoid().table();
  t[3] ^= 1u;
  const Groupoid bad = Groupoid::from_table(2, 3, t);
  const auto w = associativity_counterexample(bad);
  REQUIRE(w.has_value());
  CHECK(w->at_zero != w->at_left);
  CHECK(!oracle::associative({2, 3, t}));
}

TEST_CASE("group detection") {
  CHECK_FALSE(is_group(projection_magma(2, 3, true)));
  CHECK(is_group(gf5_quintic().groupoid()));
  CHECK(is_group(derived(symmetric_group(3), 4).groupoid()));
}

TEST_CASE("skew elements") {
  const NaryGroup r = named_example("Rusakov5");
  CHECK(r.label(r.skew(r.groupoid().parse_element("1"))) == "a^2");
  CHECK(r.label(r.skew(r.groupoid().parse_element("a"))) == "a^3");
  CHECK(r.label(r.skew(r.groupoid().parse_element("b"))) == "ba^2");
  const NaryGroup t3 = named_example("T3");
  const Elem t12 = t3.groupoid().parse_element("(1 2)");
  CHECK(t3.skew(t12) == t12);
  // a^9 has length 1 mod 4 and equals the double skew
  for (Elem a = 0; a < r.size(); ++a) CHECK(eval(r, Word(9, a)) == skew_power(r, a, 2));
  CHECK(solve(r.groupoid(), Word{0, 0, 0, 0, 0}, 4, 0) == r.skew(0));
}

TEST_CASE("neutral sequences") {
  const NaryGroup g = z4_ternary();
  CHECK(is_neutral(g, Word{0, 0}));
  CHECK_FALSE(is_neutral(g, Word{1, 2}));
  CHECK(is_neutral(g, Word{1, 3}, true));
  const NaryGroup r = named_example("Rusakov5");
  for (Elem a = 0; a < r.size(); ++a) CHECK(is_neutral(r, Word{r.skew(a), a, a, a}, true));
  const Word w{3};
  const Word v = inverse_sequence(r, w);
  CHECK(v.size() == 3);
  Word wv = w;
  wv.insert(wv.end(), v.begin(), v.end());
  CHECK(is_neutral(r, wv, true));
}

TEST_CASE("canonical records") {
  const NaryGroup g = z4_ternary();
  CHECK(theta_canonical(g, Word{1, 2, 3}) == theta_canonical(g, Word{3, 2, 1}));
  const Canonical one = theta_canonical(g, Word{2}, 1);
  CHECK(one.residue == 1);
  CHECK(one.value == 2);
  const NaryGroup r = named_example("Rusakov5");
  for (Elem a = 0; a < r.size(); ++a) CHECK(theta_canonical(r, Word{r.skew(a), a, a, a}) == theta_canonical(r, Word{}));
}

TEST_CASE("solve") {
  const NaryGroup g = z4_ternary();
  CHECK(solve(g.groupoid(), Word{0, 1, 2}, 0, 0) == 1);
  const NaryGroup r = named_example("Rusakov5");
  const Elem a = r.groupoid().parse_element("a");
  const Elem one = r.groupoid().parse_element("1");
  CHECK(r.label(solve(r.groupoid(), Word{0, one, one, one, one}, 0, a)) == "a^3");
  const Groupoid p = projection_magma(2, 3, true);
  try {
    solve(p, Word{0, 0, 0}, 2, 1);
    CHECK(true);
    solve(p, Word{0, 0, 0}, 0, 1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoSolution);
  }
}

TEST_CASE("property: skew identity at every position") {
  gen::Source s(101);
  for (int trial = 0; trial < 40; ++trial) {
    const NaryGroup g = gen::any_group(s);
    const int n = g.arity();
    if (n < 3) continue;
    for (Elem a = 0; a < g.size(); ++a)
      for (int i = 1; i <= n; ++i) {
        Word w(static_cast<std::size_t>(n), a);
        w[static_cast<std::size_t>(i - 1)] = g.skew(a);
        REQUIRE(eval(g, w) == a);
      }
  }
}

TEST_CASE("property: bracketing independence") {
  gen::Source s(202);
  for (int trial = 0; trial < 60; ++trial) {
    const NaryGroup g = gen::any_group(s);
    const oracle::Table t = oracle::Table::of(g);
    const int n = g.arity();
    for (int rep = 0; rep < 20; ++rep) {
      Word w = gen::evaluable_word(s, g, 4);
      const Elem left = oracle::fold(t, w);
      // random bracketing: repeatedly contract a random window
      Word cur = w;
      while (cur.size() > 1) {
        const std::size_t at = s.below(cur.size() - static_cast<std::size_t>(n) + 1);
        Word args(cur.begin() + static_cast<long>(at), cur.begin() + static_cast<long>(at) + n);
        const Elem v = t.at(args);
        cur.erase(cur.begin() + static_cast<long>(at), cur.begin() + static_cast<long>(at) + n);
        cur.insert(cur.begin() + static_cast<long>(at), v);
      }
      REQUIRE(cur[0] == left);
      REQUIRE(eval(g, w) == left);
    }
  }
}

TEST_CASE("property: canonical form is a congruence") {
  gen::Source s(303);
  for (int trial = 0; trial < 40; ++trial) {
    const NaryGroup g = gen::any_group(s);
    for (int rep = 0; rep < 20; ++rep) {
      const Word u = gen::word(s, g.size(), s.below(7));
      const Word v = gen::word(s, g.size(), s.below(7));
      const Word u2 = canonical_word(g, theta_canonical(g, u));
      const Word v2 = canonical_word(g, theta_canonical(g, v));
      REQUIRE(theta_canonical(g, u2) == theta_canonical(g, u));
      Word uv = u, u2v2 = u2;
      uv.insert(uv.end(), v.begin(), v.end());
      u2v2.insert(u2v2.end(), v2.begin(), v2.end());
      REQUIRE(theta_canonical(g, uv) == theta_canonical(g, u2v2));
    }
  }
}

TEST_CASE("property: solve returns the unique solution") {
  gen::Source s(404);
  for (int trial = 0; trial < 40; ++trial) {
    const NaryGroup g = gen::any_group(s);
    const oracle::Table t = oracle::Table::of(g);
    for (int rep = 0; rep < 10; ++rep) {
      Word args = gen::word(s, g.size(), static_cast<std::size_t>(g.arity()));
      const std::size_t hole = s.below(args.size());
      const Elem rhs = static_cast<Elem>(s.below(g.size()));
      const Elem x = solve(g.groupoid(), args, hole, rhs);
      std::size_t hits = 0;
      for (Elem y = 0; y < g.size(); ++y) {
        args[hole] = y;
        hits += t.at(args) == rhs;
        if (y == x) REQUIRE(t.at(args) == rhs);
      }
      REQUIRE(hits == 1);
    }
  }
}

TEST_CASE("property: ternary double skew is the identity") {
  gen::Source s(505);
  for (int trial = 0; trial < 30; ++trial) {
    const NaryGroup g = gen::derived_group(s, 3);
    if (g.arity() != 3) continue;
    for (Elem a = 0; a < g.size(); ++a) REQUIRE(g.skew(g.skew(a)) == a);
  }
  for (const char* name : {"T3", "V6", "D6_ternary", "Z6_alt"}) {
    const NaryGroup g = named_example(name);
    for (Elem a = 0; a < g.size(); ++a) CHECK(g.skew(g.skew(a)) == a);
  }
}

TEST_CASE("property: is_group agrees with the brute-force check on small tables") {
  gen::Source s(606);
  std::size_t groups = 0, trials = 0;
  for (std::size_t k = 1; k <= 4; ++k)
    for (int n = 2; n <= 4; ++n) {
      if (oracle::ipow(k, static_cast<std::size_t>(2 * n - 1)) > 300000) continue;
      for (int rep = 0; rep < 30; ++rep) {
        std::vector<Elem> cells(oracle::ipow(k, static_cast<std::size_t>(n)));
        // half the trials start from a group table and perturb a single cell
        if (rep % 2 == 0) {
          const NaryGroup base = derived(cyclic_group(k), n, static_cast<Elem>(s.below(k)));
          cells = base.groupoid().table();
          if (rep % 4 == 0) cells[s.below(cells.size())] = static_cast<Elem>(s.below(k));
        } else {
          for (auto& c : cells) c = static_cast<Elem>(s.below(k));
        }
        const Groupoid gr = Groupoid::from_table(k, n, cells);
        const bool ref = oracle::dornte({k, n, cells});
        const bool assoc = is_associative(gr);
        REQUIRE(assoc == oracle::associative({k, n, cells}));
        if (assoc) REQUIRE(is_group(gr) == ref);
        groups += ref;
        ++trials;
      }
    }
  CHECK(groups > 0);
  CHECK(groups < trials);
}

TEST_CASE("budget is enforced") {
  const Limits saved = limits();
  limits().eval_budget = 1000;
  try {
    (void)is_associative(named_example("Rusakov5").groupoid());
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
  limits() = saved;
}

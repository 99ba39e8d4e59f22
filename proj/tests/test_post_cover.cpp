#include <doctest.h>

#include "polyad/post_cover.hpp"
#include "polyad/subgroups.hpp"
#include "support.hpp"

using namespace polyad;

namespace {

Subset members_of(const NaryGroup& g, std::initializer_list<const char*> labels) {
  Subset s(g.size());
  for (const char* l : labels) s.insert(g.groupoid().parse_element(l));
  return s;
}

// Product of theta images in the cover, folded by hand.
Elem cover_product(const PostCover& c, const Word& w) {
  Elem acc = c.identity();
  for (Elem a : w) acc = c.mul(acc, c.theta(a));
  return acc;
}

Subset conjugate(const PostCover& c, Elem x, const Subset& s) {
  Subset out(c.order());
  for (Elem y : s.members()) out.insert(c.mul(c.mul(x, y), c.inv(x)));
  return out;
}

// [B x C^{n-2}] by direct enumeration.
Subset sandwich(const NaryGroup& g, const Subset& b, Elem x, const Subset& c) {
  const oracle::Table t = oracle::Table::of(g);
  const auto bm = b.members(), cm = c.members();
  const std::size_t n = static_cast<std::size_t>(g.arity());
  Subset out(g.size());
  oracle::tuples(cm.size(), n - 2, [&](const Word& idx) {
    for (Elem y : bm) {
      Word w{y, x};
      for (Elem i : idx) w.push_back(cm[i]);
      out.insert(t.at(w));
    }
  });
  return out;
}

}  // namespace

TEST_CASE("cover orders and isomorphism types") {
  const NaryGroup t3 = named_example("T3");
  const PostCover& c = t3.cover();
  CHECK(c.order() == 6);
  CHECK(isomorphic(c.group(), symmetric_group(3)));
  CHECK(isomorphic(correspondent_group(c), cyclic_group(3)));
  CHECK(derived(cyclic_group(4), 3).cover().order() == 8);
  const NaryGroup v6 = named_example("V6");
  CHECK(v6.cover().order() == 12);
  CHECK(isomorphic(v6.cover().group(), dihedral_group(6)));
  CHECK(isomorphic(correspondent_group(v6.cover()), cyclic_group(6)));
  for (const BinaryGroup& b : {symmetric_group(3), quaternion_group(), dihedral_group(4)})
    for (int n : {3, 4}) CHECK(isomorphic(correspondent_group(derived(b, n).cover()), b));
}

TEST_CASE("embedded subgroups") {
  const NaryGroup s3 = named_example("derived(S3,3)");
  const auto whole = embed_subgroup(s3, Subset::full(6));
  CHECK(whole.star == Subset::full(12));
  CHECK(whole.zero == s3.cover().a0());
  const Subset odd = members_of(s3, {"(1 2)", "(1 3)", "(2 3)"});
  CHECK(embed_subgroup(s3, odd).star.count() == 6);
  const NaryGroup t3 = named_example("T3");
  for (Elem e = 0; e < 3; ++e) {
    const auto one = embed_subgroup(t3, Subset::of(3, {e}));
    CHECK(one.zero == Subset::of(6, {t3.cover().identity()}));
  }
}

TEST_CASE("index transfer") {
  const NaryGroup v6 = named_example("V6");
  const auto r = index_correspondence(v6, members_of(v6, {"b", "bc^3"}));
  CHECK(r.consistent());
  CHECK(r.nary == 3);
  const auto all = index_correspondence(v6, Subset::full(6));
  CHECK(all.consistent());
  CHECK(all.nary == 1);
  const NaryGroup z6 = derived(cyclic_group(6), 3);
  const auto h = index_correspondence(z6, generate(z6, {0, 3}));
  CHECK(h.consistent());
}

TEST_CASE("quotient isomorphism") {
  const NaryGroup s3 = named_example("derived(S3,3)");
  const auto q = quotient_isomorphism(s3, members_of(s3, {"e", "(1 2 3)", "(1 3 2)"}));
  CHECK(q.isomorphism());
  CHECK(q.order == 2);
  const NaryGroup v6 = named_example("V6");
  const auto q2 = quotient_isomorphism(v6, members_of(v6, {"b", "bc^2", "bc^4"}));
  CHECK(q2.isomorphism());
  CHECK(q2.order == 2);
  CHECK(quotient_isomorphism(v6, Subset::full(6)).order == 1);
}

TEST_CASE("property: cover shape for every catalog group") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const NaryGroup g = named_example(name);
    const PostCover& c = g.cover();
    const std::size_t n = static_cast<std::size_t>(g.arity());
    REQUIRE(c.order() == g.size() * (n - 1));
    // levels are the cosets of A_0 and level(1)^j = level(j mod n-1)
    const Subset a0 = c.a0();
    CHECK(a0.count() == g.size());
    CHECK(a0.contains(c.identity()));
    Subset acc = c.level(1);
    for (std::size_t j = 1; j <= 2 * (n - 1); ++j) {
      const int lv = static_cast<int>((j - 1) % (n - 1)) + 1;
      REQUIRE(acc == c.level(lv));
      CHECK(acc.subset_of(a0) == (j % (n - 1) == 0));
      acc = c.product(acc, c.level(1));
    }
    // theta is injective and multiplicative
    if (oracle::ipow(g.size(), n) <= 300000) {
      oracle::tuples(g.size(), n, [&](const Word& w) { REQUIRE(c.theta(g.op(w)) == cover_product(c, w)); });
    }
  }
}

TEST_CASE("property: cover table is a group") {
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    const PostCover& c = g.cover();
    if (c.order() > 40) continue;
    CAPTURE(name);
    const std::size_t m = c.order();
    for (Elem x = 0; x < m; ++x) {
      REQUIRE(c.mul(c.identity(), x) == x);
      REQUIRE(c.mul(x, c.inv(x)) == c.identity());
      for (Elem y = 0; y < m; ++y)
        for (Elem z = 0; z < m; ++z) REQUIRE(c.mul(c.mul(x, y), z) == c.mul(x, c.mul(y, z)));
    }
  }
}

TEST_CASE("property: conjugacy transfers to the cover through theta") {
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    if (g.size() > 8) continue;
    CAPTURE(name);
    const PostCover& c = g.cover();
    const auto subs = all_subgroups(g);
    for (const auto& b : subs)
      for (const auto& cc : subs) {
        if (b.count() != cc.count()) continue;
        const Subset bs = embed_subgroup(g, b).star, cs = embed_subgroup(g, cc).star;
        for (Elem x = 0; x < g.size(); ++x) {
          const bool nary = coset_left(g, x, cc) == coset_right(g, b, x) && sandwich(g, b, x, cc) == coset_right(g, b, x);
          const bool cover = conjugate(c, c.theta(x), cs) == bs;
          REQUIRE(nary == cover);
        }
      }
  }
}

#include "polyad/post_cover.hpp"

#include <algorithm>

#include "polyad/subgroups.hpp"

namespace polyad {

namespace {

BinaryGroup build_table(const NaryGroup& g, Elem base) {
  const std::size_t k = g.size();
  const int n = g.arity();
  const std::size_t K = k * static_cast<std::size_t>(n - 1);
  charge(static_cast<std::uint64_t>(K) * K, "covering group table");
  if (static_cast<std::uint64_t>(K) * K > limits().table_cap)
    throw Error(ErrorCode::BudgetExceeded, "covering group table exceeds table_cap");
  // right[x*k + c] = class of (word of x) c.
  std::vector<Elem> right(K * k);
  for (std::size_t x = 0; x < K; ++x) {
    const Canonical r{static_cast<int>(x / k) + 1, static_cast<Elem>(x % k)};
    Word w = canonical_word(g, r, base);
    w.push_back(0);
    for (Elem c = 0; c < k; ++c) {
      w.back() = c;
      const Canonical out = theta_canonical(g, w, base);
      right[x * k + c] = static_cast<Elem>((out.residue - 1) * k + out.value);
    }
  }
  std::vector<Elem> mul(K * K);
  std::vector<std::string> labels(K);
  for (std::size_t x = 0; x < K; ++x) {
    labels[x] = g.label(static_cast<Elem>(x % k)) + "@" + std::to_string(x / k + 1);
    for (std::size_t y = 0; y < K; ++y) {
      const std::size_t res = y / k;
      Elem acc = right[x * k + y % k];
      for (std::size_t i = 0; i < res; ++i) acc = right[acc * k + base];
      mul[x * K + y] = acc;
    }
  }
  return BinaryGroup(K, std::move(mul), std::move(labels), false);
}

}  // namespace

PostCover::PostCover(const NaryGroup& g, Elem base)
    : k_(g.size()), n_(g.arity()), base_(base), group_(build_table(g, base)) {}

Elem PostCover::canon(const Word& w) const {
  Elem acc = identity();
  for (Elem a : w) acc = mul(acc, theta(a));
  return acc;
}

Subset PostCover::level(int i) const {
  Subset s(order());
  for (Elem v = 0; v < k_; ++v) s.insert(index({i, v}));
  return s;
}

Subset PostCover::theta_set(const Subset& b) const {
  Subset s(order());
  for (Elem v : b.members()) s.insert(theta(v));
  return s;
}

Subset PostCover::product(const Subset& x, const Subset& y) const {
  Subset s(order());
  const auto ym = y.members();
  for (Elem a : x.members())
    for (Elem b : ym) s.insert(mul(a, b));
  return s;
}

Subset PostCover::product(Elem x, const Subset& y) const {
  Subset s(order());
  for (Elem b : y.members()) s.insert(mul(x, b));
  return s;
}

Subset PostCover::product(const Subset& x, Elem y) const {
  Subset s(order());
  for (Elem a : x.members()) s.insert(mul(a, y));
  return s;
}

Subset PostCover::power(const Subset& s, int times) const {
  Subset acc = s;
  for (int i = 1; i < times; ++i) acc = product(acc, s);
  return acc;
}

const PostCover& NaryGroup::cover() const {
  std::call_once(cover_->once, [this] { cover_->value = std::make_shared<const PostCover>(*this); });
  return *cover_->value;
}

EmbeddedSubgroup embed_subgroup(const NaryGroup& g, const Subset& b) {
  if (!is_subgroup(g, b)) throw Error(ErrorCode::NotSubgroup, "B is not an n-ary subgroup");
  const PostCover& c = g.cover();
  EmbeddedSubgroup e;
  e.b = b;
  e.star = Subset(c.order());
  Subset cur = c.theta_set(b);
  for (int i = 1; i <= g.arity() - 1; ++i) {
    e.star = e.star | cur;
    if (i == g.arity() - 1) e.zero = cur;
    cur = c.product(cur, c.theta_set(b));
  }
  return e;
}

BinaryGroup correspondent_group(const PostCover& c) { return c.group().subgroup(c.a0()); }

IndexReport index_correspondence(const NaryGroup& g, const Subset& b) {
  const EmbeddedSubgroup e = embed_subgroup(g, b);
  const PostCover& c = g.cover();
  const BinaryGroup& star = c.group();
  IndexReport r;
  const CosetDecomposition nary = cosets(g, b, Side::Right);
  r.nary = nary.cosets.size();
  r.star = star.right_cosets(e.star).size();
  std::vector<Subset> zero_cosets;
  {
    Subset seen(c.order());
    for (Elem x : c.a0().members()) {
      if (seen.contains(x)) continue;
      Subset cs = c.product(e.zero, x);
      for (Elem y : cs.members()) seen.insert(y);
      zero_cosets.push_back(cs);
    }
  }
  r.zero = zero_cosets.size();
  // Every A*-coset B* theta(x) meets level 1 in theta of the n-ary coset [B^{n-1} x],
  // and B_0 theta(x b^{n-2}) is theta of that coset shifted into A_0.
  bool ok = true;
  const Elem anchor = b.members().front();
  Word pad(static_cast<std::size_t>(g.arity() - 2), anchor);
  for (const Subset& cs : nary.cosets) {
    const Elem x = cs.members().front();
    const Subset starc = c.product(e.star, c.theta(x)) & c.level(1);
    ok = ok && starc == c.theta_set(cs);
    Word w{x};
    w.insert(w.end(), pad.begin(), pad.end());
    const Subset zc = c.product(e.zero, c.canon(w));
    Subset expect(c.order());
    for (Elem y : cs.members()) {
      w[0] = y;
      expect.insert(c.canon(w));
    }
    ok = ok && zc == expect &&
         std::find(zero_cosets.begin(), zero_cosets.end(), zc) != zero_cosets.end();
  }
  r.cosets_match = ok && r.zero == nary.cosets.size();
  return r;
}

QuotientReport quotient_isomorphism(const NaryGroup& g, const Subset& b) {
  if (!is_invariant(g, b)) throw Error(ErrorCode::NotInvariant, "B is not invariant");
  const EmbeddedSubgroup e = embed_subgroup(g, b);
  const PostCover& c = g.cover();
  QuotientReport q;
  q.star_cosets = c.group().right_cosets(e.star);
  {
    Subset seen(c.order());
    for (Elem x : c.a0().members()) {
      if (seen.contains(x)) continue;
      Subset cs = c.product(e.zero, x);
      for (Elem y : cs.members()) seen.insert(y);
      q.zero_cosets.push_back(cs);
    }
  }
  q.order = q.star_cosets.size();
  auto star_of = [&](Elem x) {
    for (std::size_t i = 0; i < q.star_cosets.size(); ++i)
      if (q.star_cosets[i].contains(x)) return i;
    return q.star_cosets.size();
  };
  auto zero_of = [&](Elem x) {
    for (std::size_t i = 0; i < q.zero_cosets.size(); ++i)
      if (q.zero_cosets[i].contains(x)) return i;
    return q.zero_cosets.size();
  };
  constexpr std::size_t kUnset = ~std::size_t{0};
  q.map.assign(q.order, kUnset);
  q.well_defined = true;
  const auto bm = b.members();
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem bb : bm) {
      Word w{x};
      w.insert(w.end(), static_cast<std::size_t>(g.arity() - 2), bb);
      const std::size_t from = star_of(c.theta(x)), to = zero_of(c.canon(w));
      if (q.map[from] == kUnset) q.map[from] = to;
      else if (q.map[from] != to) q.well_defined = false;
    }
  std::vector<std::size_t> sorted = q.map;
  std::sort(sorted.begin(), sorted.end());
  q.bijective = q.star_cosets.size() == q.zero_cosets.size();
  for (std::size_t i = 0; i < sorted.size() && q.bijective; ++i) q.bijective = sorted[i] == i;
  q.multiplicative = q.well_defined && q.bijective;
  for (std::size_t i = 0; i < q.order && q.multiplicative; ++i)
    for (std::size_t j = 0; j < q.order && q.multiplicative; ++j) {
      const Elem x = q.star_cosets[i].members().front(), y = q.star_cosets[j].members().front();
      const Elem u = q.zero_cosets[q.map[i]].members().front(), v = q.zero_cosets[q.map[j]].members().front();
      q.multiplicative = q.map[star_of(c.mul(x, y))] == zero_of(c.mul(u, v));
    }
  return q;
}

}  // namespace polyad

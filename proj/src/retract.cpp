#include "polyad/retract.hpp"

#include <algorithm>

#include "polyad/core.hpp"
#include "polyad/post_cover.hpp"
#include "polyad/subgroups.hpp"

namespace polyad {

Elem Retract::beta_pow(Elem x, int e) const {
  const auto& f = e >= 0 ? beta : alpha;
  for (int i = 0; i < std::abs(e); ++i) x = f[x];
  return x;
}

namespace {

// Inverse sequence of the anchor: skew(a) a^{n-3}.
Word anchor_inverse(const NaryGroup& g, Elem a) {
  Word w;
  if (g.arity() < 3) return w;
  w.push_back(g.skew(a));
  w.insert(w.end(), static_cast<std::size_t>(g.arity() - 3), a);
  return w;
}

}  // namespace

Retract retract_at(const NaryGroup& g, Elem a) {
  const std::size_t k = g.size();
  const int n = g.arity();
  if (a >= k) throw Error(ErrorCode::InvalidInput, "anchor out of range");
  Retract r;
  r.anchor = a;
  r.arity = n;
  std::vector<Elem> mul(k * k);
  r.beta.resize(k);
  r.alpha.resize(k);
  std::vector<std::string> labels;
  if (n == 2) {
    for (Elem x = 0; x < k; ++x) {
      labels.push_back(g.label(x));
      r.beta[x] = r.alpha[x] = x;
      for (Elem y = 0; y < k; ++y) mul[x * k + y] = g.op({x, y});
    }
    r.group = BinaryGroup(k, std::move(mul), std::move(labels));
    r.d = r.group.identity();
    return r;
  }
  const Word inv = anchor_inverse(g, a);
  Word w{0};
  w.insert(w.end(), inv.begin(), inv.end());
  w.push_back(0);
  for (Elem x = 0; x < k; ++x) {
    labels.push_back(g.label(x));
    w.front() = x;
    for (Elem y = 0; y < k; ++y) {
      w.back() = y;
      mul[x * k + y] = eval(g, w);
    }
  }
  r.group = BinaryGroup(k, std::move(mul), std::move(labels), ipow(k, 3) <= limits().eval_budget);
  Word bw{a, 0};
  bw.insert(bw.end(), inv.begin(), inv.end());
  for (Elem x = 0; x < k; ++x) {
    bw[1] = x;
    r.beta[x] = eval(g, bw);
  }
  for (Elem x = 0; x < k; ++x) r.alpha[r.beta[x]] = x;
  r.d = eval(g, Word(static_cast<std::size_t>(n), a));
  return r;
}

HossuReport verify_hossu(const NaryGroup& g, const Retract& r) {
  HossuReport rep;
  const std::size_t k = g.size();
  const int n = g.arity();
  auto fail = [&](const std::string& what, Word wit) {
    if (rep.ok) {
      rep.ok = false;
      rep.failure = what;
      rep.witness = std::move(wit);
    }
  };
  if (!r.group.is_automorphism(r.beta)) fail("beta is not an automorphism of the retract", {});
  if (r.beta[r.d] != r.d) fail("d^beta != d", {r.d});
  for (Elem x = 0; x < k && rep.ok; ++x)
    for (int j = 0; j < n && rep.ok; ++j)
      if (r.mul(r.d, r.beta_pow(x, -(n - 1 - j))) != r.mul(r.beta_pow(x, j), r.d))
        fail("twist identity fails for exponent " + std::to_string(j), {x});
  const std::uint64_t total = ipow(k, static_cast<unsigned>(n));
  charge(total * static_cast<std::uint64_t>(n + 1) * static_cast<std::uint64_t>(n), "Hossu verification");
  Word args(static_cast<std::size_t>(n));
  Word image(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 0; idx < total && rep.ok; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = args.size(); i-- > 0;) {
      args[i] = static_cast<Elem>(t % k);
      t /= k;
    }
    const Elem want = g.op(args);
    // Split point i: x1 x2^b .. xi^{b^{i-1}} d x_{i+1}^{a^{n-1-i}} .. xn.
    for (int i = 0; i <= n && rep.ok; ++i) {
      Elem acc = r.anchor;
      for (int j = 1; j <= i; ++j) acc = r.mul(acc, r.beta_pow(args[static_cast<std::size_t>(j - 1)], j - 1));
      acc = r.mul(acc, r.d);
      for (int j = i + 1; j <= n; ++j) acc = r.mul(acc, r.beta_pow(args[static_cast<std::size_t>(j - 1)], -(n - j)));
      if (acc != want) fail("reconstruction with split " + std::to_string(i) + " fails", args);
      ++rep.checked;
    }
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = r.beta[args[static_cast<std::size_t>(i)]];
    if (rep.ok && g.op(image) != r.beta[want]) fail("beta is not an automorphism of the n-ary operation", args);
  }
  return rep;
}

std::vector<Elem> retract_isomorphism_witness(const NaryGroup& g, Elem a, Elem c) {
  const Retract ra = retract_at(g, a), rc = retract_at(g, c);
  std::vector<Elem> f(g.size());
  Word w{c};
  const Word inv = anchor_inverse(g, a);
  w.insert(w.end(), inv.begin(), inv.end());
  w.push_back(0);
  for (Elem x = 0; x < g.size(); ++x) {
    w.back() = x;
    f[x] = g.arity() == 2 ? x : eval(g, w);
  }
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y)
      if (f[ra.mul(x, y)] != rc.mul(f[x], f[y]))
        throw Error(ErrorCode::PreconditionViolated, "retract witness map is not a homomorphism");
  std::vector<Elem> sorted = f;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::PreconditionViolated, "retract witness map is not injective");
  return f;
}

bool retract_matches_a0(const NaryGroup& g, Elem a) {
  const Retract r = retract_at(g, a);
  const PostCover& c = g.cover();
  std::vector<Elem> f(g.size());
  Word w(static_cast<std::size_t>(g.arity() - 1), a);
  if (w.size() > 1) w[1] = g.skew(a);
  for (Elem x = 0; x < g.size(); ++x) {
    w[0] = x;
    f[x] = c.canon(w);
    if (c.grade(f[x]) != g.arity() - 1) return false;
  }
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem y = 0; y < g.size(); ++y)
      if (f[r.mul(x, y)] != c.mul(f[x], f[y])) return false;
  std::sort(f.begin(), f.end());
  return std::adjacent_find(f.begin(), f.end()) == f.end();
}

CorrespondenceReport subgroup_correspondence(const NaryGroup& g, Elem a, std::optional<Elem> x_opt) {
  const Elem x = x_opt.value_or(a);
  const Retract r = retract_at(g, a);
  const std::size_t k = g.size();
  const int n = g.arity();
  CorrespondenceReport rep;
  for (const Subset& h : all_subgroups(g))
    if (h.contains(x)) rep.nary.push_back(h);
  Word xa(static_cast<std::size_t>(n), x);
  xa.back() = a;
  const Elem xna = g.op(xa);
  for (const Subset& v : r.group.all_subgroups()) {
    if (!v.contains(xna)) continue;
    Subset left(k), right(k);
    for (Elem b : v.members()) {
      left.insert(r.mul(b, x));
      right.insert(r.mul(x, r.beta[b]));
    }
    if (left == right) rep.retract.push_back(v);
  }
  // Match H <-> V via H = V (a) x and V = [H^{n-1} a].
  bool ok = rep.nary.size() == rep.retract.size();
  for (const Subset& h : rep.nary) {
    if (!ok) break;
    Subset ha(k);
    for (Elem b : h.members()) {
      // [H^{n-1} a] = {[b x^{n-2} a] : b in H} since x is in H.
      Word w(static_cast<std::size_t>(n), x);
      w.front() = b;
      w.back() = a;
      ha.insert(g.op(w));
    }
    ok = std::find(rep.retract.begin(), rep.retract.end(), ha) != rep.retract.end();
    Subset back(k);
    for (Elem v : ha.members()) back.insert(r.mul(v, x));
    ok = ok && back == h;
  }
  rep.bijection = ok;
  return rep;
}

}  // namespace polyad

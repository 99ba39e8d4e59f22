#include "polyad/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "polyad/constructions.hpp"
#include "polyad/core.hpp"
#include "polyad/post_cover.hpp"
#include "polyad/retract.hpp"

namespace polyad {

namespace {

bool is_idempotent(const NaryGroup& g, Elem a) {
  return g.op(Word(static_cast<std::size_t>(g.arity()), a)) == a;
}

// Powers of theta(B) in A*: pw[j] = theta(B)^j, pw[0] = {identity}.
struct Powers {
  std::vector<Subset> pw;
  const Subset& operator[](int j) const { return pw[static_cast<std::size_t>(j)]; }
};

Powers powers_of(const PostCover& c, const Subset& b, int upto) {
  Powers p;
  Subset id(c.order());
  id.insert(c.identity());
  p.pw.push_back(id);
  const Subset tb = c.theta_set(b);
  for (int j = 1; j <= upto; ++j) p.pw.push_back(c.product(p.pw.back(), tb));
  return p;
}

void require_subgroup(const NaryGroup& g, const Subset& b) {
  if (b.universe() != g.size() || !is_subgroup(g, b)) throw Error(ErrorCode::NotSubgroup, "B is not an n-ary subgroup");
}

Elem cover_pow(const PostCover& c, Elem x, int e) {
  Elem acc = c.identity();
  for (int i = 0; i < e; ++i) acc = c.mul(acc, x);
  return acc;
}

}  // namespace

Subset level_one_values(const PostCover& c, const Subset& s) {
  Subset out(c.carrier_size());
  for (Elem x : s.members())
    if (c.grade(x) == 1) out.insert(c.record(x).value);
  return out;
}

bool is_subgroup(const NaryGroup& g, const Subset& b) {
  if (b.universe() != g.size() || b.empty()) return false;
  const PostCover& c = g.cover();
  const Subset tb = c.theta_set(b);
  return c.power(tb, g.arity()) == tb;
}

Subset generate(const NaryGroup& g, const std::vector<Elem>& m) {
  if (m.empty()) throw Error(ErrorCode::PreconditionViolated, "generating set must be nonempty");
  const PostCover& c = g.cover();
  std::vector<Elem> gens;
  for (Elem x : m) gens.push_back(c.theta(x));
  Subset seen(c.order());
  std::deque<Elem> queue;
  for (Elem x : gens)
    if (!seen.contains(x)) {
      seen.insert(x);
      queue.push_back(x);
    }
  while (!queue.empty()) {
    const Elem x = queue.front();
    queue.pop_front();
    for (Elem y : gens) {
      const Elem z = c.mul(x, y);
      if (!seen.contains(z)) {
        seen.insert(z);
        queue.push_back(z);
      }
    }
  }
  return level_one_values(c, seen);
}

Subset generate_by_closure(const NaryGroup& g, const std::vector<Elem>& m) {
  const std::size_t n = static_cast<std::size_t>(g.arity());
  Subset s = Subset::of(g.size(), m);
  for (bool grew = true; grew;) {
    grew = false;
    auto mem = s.members();
    for (Elem x : mem)
      if (!s.contains(g.skew(x))) {
        s.insert(g.skew(x));
        grew = true;
      }
    mem = s.members();
    const std::uint64_t total = ipow(mem.size(), static_cast<unsigned>(n));
    charge(total, "closure generation");
    Word args(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = n; i-- > 0;) {
        args[i] = mem[r % mem.size()];
        r /= mem.size();
      }
      const Elem v = g.op(args);
      if (!s.contains(v)) {
        s.insert(v);
        grew = true;
      }
    }
  }
  return s;
}

std::vector<Subset> all_subgroups(const NaryGroup& g) {
  if (g.size() > 64) throw Error(ErrorCode::BudgetExceeded, "subgroup enumeration is limited to k <= 64");
  std::map<Subset, std::vector<Elem>> found;  // subgroup -> generators
  std::vector<Subset> frontier;
  for (Elem x = 0; x < g.size(); ++x) {
    Subset s = generate(g, {x});
    if (found.emplace(s, std::vector<Elem>{x}).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& h : frontier) {
      const std::vector<Elem> gens = found.at(h);
      for (Elem x = 0; x < g.size(); ++x) {
        if (h.contains(x)) continue;
        std::vector<Elem> g2 = gens;
        g2.push_back(x);
        Subset s = generate(g, g2);
        if (found.emplace(s, g2).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subset> out;
  for (const auto& [s, gens] : found) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> subgroups_through_idempotent(const NaryGroup& g, Elem a) {
  if (!is_idempotent(g, a)) throw Error(ErrorCode::NotIdempotentAnchor, "anchor is not idempotent");
  const Retract r = retract_at(g, a);
  std::vector<Subset> out;
  for (const Subset& v : r.group.all_subgroups()) {
    bool invariant = true;
    for (Elem x : v.members()) invariant = invariant && v.contains(r.beta[x]);
    if (invariant) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subset coset_left(const NaryGroup& g, Elem x, const Subset& b) {
  const PostCover& c = g.cover();
  const Powers p = powers_of(c, b, g.arity() - 1);
  return level_one_values(c, c.product(c.theta(x), p[g.arity() - 1]));
}

Subset coset_right(const NaryGroup& g, const Subset& b, Elem x) {
  const PostCover& c = g.cover();
  const Powers p = powers_of(c, b, g.arity() - 1);
  return level_one_values(c, c.product(p[g.arity() - 1], c.theta(x)));
}

CosetDecomposition cosets(const NaryGroup& g, const Subset& b, Side side) {
  require_subgroup(g, b);
  const PostCover& c = g.cover();
  const Powers p = powers_of(c, b, g.arity() - 1);
  CosetDecomposition d;
  d.side = side;
  Subset seen(g.size());
  for (Elem x = 0; x < g.size(); ++x) {
    if (seen.contains(x)) continue;
    const Subset cls = side == Side::Left ? c.product(c.theta(x), p[g.arity() - 1])
                                          : c.product(p[g.arity() - 1], c.theta(x));
    const Subset vals = level_one_values(c, cls);
    for (Elem y : vals.members()) seen.insert(y);
    d.cosets.push_back(vals);
    d.reps.push_back(vals.members().front());
  }
  std::size_t total = 0;
  for (const auto& cs : d.cosets) total += cs.count();
  if (total != g.size() || d.cosets.size() * b.count() != g.size())
    throw Error(ErrorCode::PreconditionViolated, "coset decomposition is not a partition");
  return d;
}

bool is_invariant(const NaryGroup& g, const Subset& b) {
  require_subgroup(g, b);
  const int n = g.arity();
  const PostCover& c = g.cover();
  const Powers p = powers_of(c, b, n - 1);
  for (Elem x = 0; x < g.size(); ++x) {
    const Subset left = c.product(c.theta(x), p[n - 1]);
    for (int i = 2; i <= n; ++i)
      if (c.product(c.product(p[i - 1], c.theta(x)), p[n - i]) != left) return false;
  }
  return true;
}

bool is_invariant_by_conjugation(const NaryGroup& g, const Subset& b) {
  require_subgroup(g, b);
  const int n = g.arity();
  const PostCover& c = g.cover();
  const Subset tb = c.theta_set(b);
  for (Elem x = 0; x < g.size(); ++x) {
    Elem tail;
    if (n == 2) {
      tail = c.inv(c.theta(x));
    } else {
      tail = c.mul(cover_pow(c, c.theta(x), n - 3), c.theta(g.skew(x)));
    }
    if (c.product(c.product(c.theta(x), tb), tail) != tb) return false;
  }
  return true;
}

bool is_semi_invariant(const NaryGroup& g, const Subset& b) {
  require_subgroup(g, b);
  const int n = g.arity();
  const PostCover& c = g.cover();
  const Powers p = powers_of(c, b, n - 1);
  for (Elem x = 0; x < g.size(); ++x)
    if (c.product(c.theta(x), p[n - 1]) != c.product(p[n - 1], c.theta(x))) return false;
  return true;
}

bool is_m_semi_invariant(const NaryGroup& g, const Subset& b, int m) {
  const int n = g.arity();
  if (m < 2 || m > n || (n - 1) % (m - 1) != 0)
    throw Error(ErrorCode::BadM, "m = " + std::to_string(m) + " needs (m-1) | (n-1)");
  if (!is_semi_invariant(g, b)) return false;
  const PostCover& c = g.cover();
  const Powers p = powers_of(c, b, n - 1);
  for (Elem x = 0; x < g.size(); ++x)
    if (c.product(c.theta(x), p[n - 1]) != c.product(c.product(p[m - 1], c.theta(x)), p[n - m])) return false;
  return true;
}

bool is_normal(const NaryGroup& g, const Subset& b) {
  require_subgroup(g, b);
  const int n = g.arity();
  const PostCover& c = g.cover();
  const Subset tb = c.theta_set(b);
  std::vector<Elem> middles;
  if (n == 2) middles.push_back(c.identity());
  else middles = c.level(n - 2).members();
  for (Elem x = 0; x < g.size(); ++x)
    for (Elem w : middles) {
      const Subset left = c.product(c.mul(c.theta(x), w), tb);
      const Subset right = c.product(tb, c.mul(w, c.theta(x)));
      if (left != right) return false;
    }
  return true;
}

bool is_sigma_normal(const NaryGroup& g, const Subset& b, const std::vector<std::vector<int>>& sigmas) {
  require_subgroup(g, b);
  const std::size_t slots = static_cast<std::size_t>(g.arity() - 1);
  const std::size_t k = g.size();
  const PostCover& c = g.cover();
  const Subset tb = c.theta_set(b);
  const std::uint64_t total = ipow(k, static_cast<unsigned>(slots));
  charge(total * sigmas.size(), "sigma-normality check");
  Word xs(slots);
  for (const auto& s : sigmas) {
    if (s.size() != slots) throw Error(ErrorCode::SizeMismatch, "sigma must act on n-1 slots");
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = slots; i-- > 0;) {
        xs[i] = static_cast<Elem>(r % k);
        r /= k;
      }
      Elem l = c.identity(), rr = c.identity();
      for (std::size_t j = 0; j < slots; ++j) {
        l = c.mul(l, c.theta(xs[j]));
        rr = c.mul(rr, c.theta(xs[static_cast<std::size_t>(s[j])]));
      }
      if (c.product(l, tb) != c.product(tb, rr)) return false;
    }
  }
  return true;
}

bool is_weakly_normal(const NaryGroup& g, const Subset& b) {
  require_subgroup(g, b);
  const PostCover& c = g.cover();
  const Subset tb = c.theta_set(b);
  for (Elem x = 0; x < g.size(); ++x) {
    const Elem w = cover_pow(c, c.theta(x), g.arity() - 1);
    if (c.product(w, tb) != c.product(tb, w)) return false;
  }
  return true;
}

NormalityReport normality_implications_audit(const NaryGroup& g, const Subset& b) {
  NormalityReport r;
  const int n = g.arity();
  r.invariant = is_invariant(g, b);
  r.invariant_by_conjugation = is_invariant_by_conjugation(g, b);
  r.semi_invariant = is_semi_invariant(g, b);
  r.normal = is_normal(g, b);
  r.weakly_normal = is_weakly_normal(g, b);
  for (int m = 2; m <= n; ++m)
    if ((n - 1) % (m - 1) == 0) r.m_semi_invariant.emplace_back(m, is_m_semi_invariant(g, b, m));

  auto violate = [&](bool cond, const std::string& what) {
    if (!cond) r.violations.push_back(what);
  };
  violate(r.invariant == r.invariant_by_conjugation, "invariant != conjugation criterion");
  violate(!r.normal || r.semi_invariant, "normal but not semi-invariant");
  violate(!r.invariant || r.semi_invariant, "invariant but not semi-invariant");
  violate(!r.normal || r.weakly_normal, "normal but not weakly normal");
  violate(g.size() != 2 * b.count() || r.semi_invariant, "index 2 but not semi-invariant");
  for (const auto& [m, v] : r.m_semi_invariant) {
    if (m == 2) violate(v == r.invariant, "2-semi-invariant != invariant");
    if (m == n) violate(v == r.semi_invariant, "n-semi-invariant != semi-invariant");
    for (const auto& [m2, v2] : r.m_semi_invariant)
      if ((m2 - 1) % (m - 1) == 0) violate(!v || v2, "m-semi-invariant does not pass to a multiple");
  }

  const std::size_t slots = static_cast<std::size_t>(n - 1);
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= slots; ++i) fact *= i;
  if (fact * ipow(g.size(), static_cast<unsigned>(slots)) <= limits().eval_budget / 4) {
    std::vector<int> s(slots);
    std::iota(s.begin(), s.end(), 0);
    do {
      const bool v = is_sigma_normal(g, b, {s});
      r.sigma_normal.emplace_back(s, v);
      // 1-based reading: s1(i) = s[i-1] + 1.
      bool fixed = false, plus_two = false;
      for (std::size_t i = 0; i < slots; ++i) fixed = fixed || s[i] == static_cast<int>(i);
      for (std::size_t j = 0; j + 3 <= static_cast<std::size_t>(n) && j + 2 < slots; ++j)
        plus_two = plus_two || s[j] == static_cast<int>(j + 2);
      const bool to_one = n >= 3 && slots >= 2 && s[slots - 2] == 0;
      const bool last_to_two = slots >= 2 && s[slots - 1] == 1;
      if (v && (fixed || plus_two || to_one || last_to_two))
        violate(r.invariant, "sigma-normal with a forcing pattern but not invariant");
      if (v && s[slots - 1] == 0) violate(r.semi_invariant, "sigma(n-1) = 1 sigma-normal but not semi-invariant");
      bool identity = true, cyclic = true;
      for (std::size_t i = 0; i < slots; ++i) {
        identity = identity && s[i] == static_cast<int>(i);
        cyclic = cyclic && s[i] == static_cast<int>((i + 1) % slots);
      }
      if (identity) violate(v == r.invariant, "identity-normal != invariant");
      if (cyclic) violate(v == r.normal, "cyclic-normal != normal");
    } while (std::next_permutation(s.begin(), s.end()));
  }
  return r;
}

std::optional<Elem> is_conjugate(const NaryGroup& g, const Subset& b, const Subset& c_set) {
  require_subgroup(g, b);
  require_subgroup(g, c_set);
  const int n = g.arity();
  const PostCover& c = g.cover();
  const Powers pb = powers_of(c, b, n - 1), pc = powers_of(c, c_set, n - 1);
  for (Elem x = 0; x < g.size(); ++x) {
    const Subset left = c.product(c.theta(x), pc[n - 1]);
    const Subset mid = c.product(c.product(pb[1], c.theta(x)), pc[n - 2]);
    const Subset right = c.product(pb[n - 1], c.theta(x));
    if (left == mid && mid == right) return x;
  }
  return std::nullopt;
}

std::optional<Elem> is_semiconjugate(const NaryGroup& g, const Subset& b, const Subset& c_set) {
  require_subgroup(g, b);
  require_subgroup(g, c_set);
  const int n = g.arity();
  const PostCover& c = g.cover();
  const Powers pb = powers_of(c, b, n - 1), pc = powers_of(c, c_set, n - 1);
  for (Elem x = 0; x < g.size(); ++x)
    if (c.product(c.theta(x), pc[n - 1]) == c.product(pb[n - 1], c.theta(x))) return x;
  return std::nullopt;
}

bool conjugate_in_cover(const NaryGroup& g, const Subset& b, const Subset& c_set) {
  const EmbeddedSubgroup eb = embed_subgroup(g, b), ec = embed_subgroup(g, c_set);
  const PostCover& c = g.cover();
  for (Elem x = 0; x < c.order(); ++x)
    if (c.group().conjugate_set(x, ec.star) == eb.star) return true;
  return false;
}

NaryGroup factor_group(const NaryGroup& g, const Subset& b) {
  if (!is_semi_invariant(g, b)) throw Error(ErrorCode::NotSemiInvariant, "B is not semi-invariant");
  const CosetDecomposition d = cosets(g, b, Side::Right);
  const std::size_t m = d.cosets.size();
  const auto n = static_cast<std::size_t>(g.arity());
  std::vector<Elem> where(g.size());
  for (std::size_t i = 0; i < m; ++i)
    for (Elem x : d.cosets[i].members()) where[x] = static_cast<Elem>(i);
  const std::uint64_t total = ipow(g.size(), static_cast<unsigned>(n));
  charge(total, "factor group well-definedness");
  const std::uint64_t cells = ipow(m, static_cast<unsigned>(n));
  if (cells > limits().table_cap) throw Error(ErrorCode::BudgetExceeded, "factor table exceeds table_cap");
  std::vector<Elem> table(cells, ~Elem{0});
  Word args(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    std::uint64_t cell = 0, scale = 1;
    for (std::size_t i = n; i-- > 0;) {
      args[i] = static_cast<Elem>(r % g.size());
      r /= g.size();
      cell += where[args[i]] * scale;
      scale *= m;
    }
    const Elem v = where[g.op(args)];
    if (table[cell] == ~Elem{0}) table[cell] = v;
    else if (table[cell] != v) throw Error(ErrorCode::PreconditionViolated, "factor operation is not well defined");
  }
  std::vector<std::string> labels;
  for (Elem rep : d.reps) labels.push_back("[" + g.label(rep) + "]");
  return from_table(m, static_cast<int>(n), std::move(table), std::move(labels));
}

CosetActionReport coset_action(const NaryGroup& g, const Subset& b, Elem anchor) {
  require_subgroup(g, b);
  if (!b.contains(anchor)) throw Error(ErrorCode::PreconditionViolated, "anchor must lie in B");
  const Retract r = retract_at(g, anchor);
  const std::size_t k = g.size();
  const int n = g.arity();
  CosetActionReport rep;
  rep.omega = r.group.right_cosets(b);
  const std::size_t w = rep.omega.size();
  std::vector<std::size_t> where(k);
  for (std::size_t i = 0; i < w; ++i)
    for (Elem x : rep.omega[i].members()) where[x] = i;
  rep.delta.assign(k, std::vector<std::size_t>(w));
  for (Elem a = 0; a < k; ++a)
    for (std::size_t i = 0; i < w; ++i) rep.delta[a][i] = where[r.mul(rep.omega[i].members().front(), a)];
  std::set<std::vector<std::size_t>> image(rep.delta.begin(), rep.delta.end());
  rep.image_order = image.size();
  rep.kernel = Subset(k);
  for (Elem a = 0; a < k; ++a) {
    bool id = true;
    for (std::size_t i = 0; i < w; ++i) id = id && rep.delta[a][i] == i;
    if (id) rep.kernel.insert(a);
  }
  rep.retract_homomorphism = true;
  for (Elem x = 0; x < k; ++x)
    for (Elem y = 0; y < k; ++y)
      for (std::size_t i = 0; i < w; ++i)
        if (rep.delta[r.mul(x, y)][i] != rep.delta[y][rep.delta[x][i]]) rep.retract_homomorphism = false;

  // n-ary image operation <t1..tn> = t1 t2^beta .. tn^{beta^{n-1}} d with delta_a^beta = delta_{a^beta}.
  const Elem cst = g.op(Word(static_cast<std::size_t>(n), anchor));
  auto compose = [&](const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
    std::vector<std::size_t> out(w);
    for (std::size_t i = 0; i < w; ++i) out[i] = q[p[i]];
    return out;
  };
  rep.nary_homomorphism = true;
  const std::uint64_t total = ipow(k, static_cast<unsigned>(n));
  charge(total * static_cast<std::uint64_t>(n) * w, "coset action check");
  Word args(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 0; idx < total && rep.nary_homomorphism; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = args.size(); i-- > 0;) {
      args[i] = static_cast<Elem>(t % k);
      t /= k;
    }
    std::vector<std::size_t> acc = rep.delta[args[0]];
    for (int i = 1; i < n; ++i) acc = compose(acc, rep.delta[r.beta_pow(args[static_cast<std::size_t>(i)], i)]);
    acc = compose(acc, rep.delta[cst]);
    rep.nary_homomorphism = acc == rep.delta[g.op(args)];
  }

  rep.kernel_is_subgroup = rep.kernel.contains(cst) && is_subgroup(g, rep.kernel);
  if (rep.kernel_is_subgroup) {
    rep.kernel_semi_invariant = is_semi_invariant(g, rep.kernel);
    rep.kernel_maximal = true;
    if (k <= 64)
      for (const Subset& s : all_subgroups(g))
        if (rep.kernel.subset_of(s) && !(s == rep.kernel) && s.subset_of(b) && is_semi_invariant(g, s))
          rep.kernel_maximal = false;
  }
  return rep;
}

bool a_direct_decomposition(const NaryGroup& g, Elem a, const std::vector<Subset>& parts) {
  if (!is_idempotent(g, a)) throw Error(ErrorCode::NotIdempotentAnchor, "anchor is not idempotent");
  if (parts.empty()) return false;
  for (const Subset& p : parts)
    if (!p.contains(a) || !is_subgroup(g, p)) return false;
  const int n = g.arity();
  const std::size_t k = g.size();
  const PostCover& c = g.cover();
  const Subset single = Subset::of(k, {a});

  // Direct conditions.
  bool direct = true;
  for (const Subset& p : parts) direct = direct && is_semi_invariant(g, p);
  Subset prod = c.theta_set(parts[0]);
  for (std::size_t i = 1; i < parts.size(); ++i) prod = c.product(prod, c.power(c.theta_set(parts[i]), n - 1));
  direct = direct && level_one_values(c, prod).count() == k;
  for (std::size_t i = 0; i < parts.size() && direct; ++i) {
    std::vector<Elem> others;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i)
        for (Elem x : parts[j].members()) others.push_back(x);
    const Subset joined = others.empty() ? single : generate(g, others);
    direct = (joined & parts[i]) == single;
  }

  // Retract criterion: internal direct product in the retract at a.
  const Retract r = retract_at(g, a);
  bool via_retract = true;
  for (const Subset& p : parts) via_retract = via_retract && r.group.is_subgroup(p) && r.group.is_normal(p);
  Subset rp = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Subset next(k);
    for (Elem x : rp.members())
      for (Elem y : parts[i].members()) next.insert(r.mul(x, y));
    rp = next;
  }
  via_retract = via_retract && rp.count() == k;
  for (std::size_t i = 0; i < parts.size() && via_retract; ++i) {
    std::vector<Elem> others;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i)
        for (Elem x : parts[j].members()) others.push_back(x);
    via_retract = (r.group.generate(others) & parts[i]) == single;
  }
  if (direct != via_retract)
    throw Error(ErrorCode::PreconditionViolated, "direct and retract criteria disagree");
  return direct;
}

std::vector<SylowDecomposition> sylow_hall_semiabelian(const NaryGroup& g,
                                                       std::vector<std::vector<std::size_t>> blocks) {
  if (!retract_at(g, 0).group.is_abelian()) throw Error(ErrorCode::NotSemiabelian, "group is not semiabelian");
  std::vector<Elem> idem;
  for (Elem a = 0; a < g.size(); ++a)
    if (is_idempotent(g, a)) idem.push_back(a);
  if (idem.empty()) throw Error(ErrorCode::NoIdempotent, "group has no idempotent");
  if (blocks.empty())
    for (std::size_t p : prime_factors(g.size())) blocks.push_back({p});
  const std::vector<Subset> subs = g.size() <= 64 ? all_subgroups(g) : std::vector<Subset>{};
  std::vector<SylowDecomposition> out;
  for (Elem a : idem) {
    const Retract r = retract_at(g, a);
    SylowDecomposition d;
    d.anchor = a;
    d.blocks = blocks;
    d.unique = !subs.empty();
    for (const auto& block : blocks) {
      const Subset part = r.group.primary_component(block);
      if (!is_subgroup(g, part)) throw Error(ErrorCode::PreconditionViolated, "primary component is not an n-ary subgroup");
      d.parts.push_back(part);
      std::size_t same = 0;
      for (const Subset& s : subs)
        if (s.contains(a) && s.count() == part.count()) ++same;
      d.unique = d.unique && same == 1;
    }
    if (!a_direct_decomposition(g, a, d.parts))
      throw Error(ErrorCode::PreconditionViolated, "Sylow parts do not form an a-direct product");
    out.push_back(d);
  }
  return out;
}

}  // namespace polyad

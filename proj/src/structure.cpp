#include "polyad/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "polyad/constructions.hpp"
#include "polyad/core.hpp"
#include "polyad/post_cover.hpp"
#include "polyad/retract.hpp"
#include "polyad/subgroups.hpp"

namespace polyad {

namespace {

void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::PreconditionViolated, "structural invariant failed: " + what);
}

bool admissible_m(int n, int m) { return m >= 2 && m <= n && (n - 1) % (m - 1) == 0; }

void require_m(int n, int m) {
  if (!admissible_m(n, m)) throw Error(ErrorCode::BadM, "m = " + std::to_string(m) + " needs (m-1) | (n-1)");
}

std::vector<int> admissible(int n) {
  std::vector<int> out;
  for (int m = 2; m <= n; ++m)
    if (admissible_m(n, m)) out.push_back(m);
  return out;
}

// theta(B)^j in A*, with j = 0 giving {identity}.
Subset set_power(const PostCover& c, const Subset& b, int j) {
  if (j == 0) return Subset::of(c.order(), {c.identity()});
  return c.power(c.theta_set(b), j);
}

Elem cover_pow(const PostCover& c, Elem x, int e) {
  Elem acc = c.identity();
  for (int i = 0; i < e; ++i) acc = c.mul(acc, x);
  return acc;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int gcd_m(int m, int k) { return std::gcd(m - 1, k - 1) + 1; }

}  // namespace

Elem nadic_power(const NaryGroup& g, Elem a, long long s) {
  if (s < 0) {
    const auto m = static_cast<long long>(nadic_order(g, a));
    s = ((s % m) + m) % m;
  }
  Word w(static_cast<std::size_t>(g.arity()), a);
  Elem x = a;
  for (long long i = 0; i < s; ++i) {
    w[0] = x;
    x = g.op(w);
  }
  return x;
}

std::size_t nadic_order(const NaryGroup& g, Elem a) {
  Word w(static_cast<std::size_t>(g.arity()), a);
  Elem x = a;
  for (std::size_t m = 1; m <= g.size(); ++m) {
    w[0] = x;
    x = g.op(w);
    if (x == a) return m;
  }
  throw Error(ErrorCode::PreconditionViolated, "n-adic order exceeds |A|");
}

std::vector<std::size_t> nadic_order_profile(const NaryGroup& g) {
  std::vector<std::size_t> out(g.size());
  for (Elem a = 0; a < g.size(); ++a) out[a] = nadic_order(g, a);
  return out;
}

Subset nadic_powers(const NaryGroup& g, Elem a) {
  Subset s(g.size());
  Word w(static_cast<std::size_t>(g.arity()), a);
  Elem x = a;
  while (!s.contains(x)) {
    s.insert(x);
    w[0] = x;
    x = g.op(w);
  }
  return s;
}

CyclicClass classify_cyclic(const NaryGroup& g) {
  CyclicClass c;
  for (Elem a = 0; a < g.size(); ++a)
    if (nadic_powers(g, a).count() == g.size()) c.generators.push_back(a);
  c.cyclic = !c.generators.empty();
  c.semicyclic = retract_at(g, 0).group.is_cyclic();
  ensure(!c.cyclic || c.semicyclic, "cyclic implies semicyclic");
  return c;
}

Subset idempotents(const NaryGroup& g) {
  Subset s(g.size());
  const Word base(static_cast<std::size_t>(g.arity()), 0);
  for (Elem a = 0; a < g.size(); ++a)
    if (g.op(Word(base.size(), a)) == a) s.insert(a);
  const auto& r = g.groupoid().recipe();
  if (r && r->kind == Backing::Derived && r->base && r->central == r->base->identity()) {
    Subset shortcut(g.size());
    for (Elem b = 0; b < g.size(); ++b)
      if (r->base->pow(b, g.arity() - 1) == r->base->identity()) shortcut.insert(b);
    ensure(shortcut == s, "I(A) = {b | b^{n-1} = e} for derived groups");
  }
  return s;
}

Subset units(const NaryGroup& g) {
  const auto n = static_cast<std::size_t>(g.arity());
  charge(static_cast<std::uint64_t>(g.size()) * g.size() * n, "unit scan");
  Subset e(g.size());
  Word w(n);
  for (Elem u = 0; u < g.size(); ++u) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (Elem x = 0; x < g.size() && ok; ++x) {
        std::fill(w.begin(), w.end(), u);
        w[i] = x;
        ok = g.op(w) == x;
      }
    if (ok) e.insert(u);
  }
  ensure(e == (idempotents(g) & center(g)), "E(A) = I(A) cap Z(A)");
  if (!e.empty()) ensure(is_subgroup(g, e), "E(A) is an n-ary subgroup");
  const auto& r = g.groupoid().recipe();
  if (r && r->kind == Backing::Derived && r->base && r->central == r->base->identity()) {
    Subset shortcut(g.size());
    for (Elem z : r->base->center().members())
      if (r->base->pow(z, g.arity() - 1) == r->base->identity()) shortcut.insert(z);
    ensure(shortcut == e, "E(A) = {z in Z(G) | z^{n-1} = e} for derived groups");
  }
  return e;
}

bool equivalent(const NaryGroup& g, const Word& u, const Word& v) {
  const PostCover& c = g.cover();
  return c.canon(u) == c.canon(v);
}

const char* center_kind_name(CenterKind kind) {
  switch (kind) {
    case CenterKind::Standard: return "standard";
    case CenterKind::D: return "D";
    case CenterKind::T: return "T";
    case CenterKind::Sigma: return "sigma";
  }
  return "?";
}

Subset centralizer(const NaryGroup& g, CenterKind kind, int m, const Subset& b,
                   const std::vector<std::vector<int>>& sigma) {
  require_m(g.arity(), m);
  if (b.universe() != g.size()) throw Error(ErrorCode::SizeMismatch, "subset over a different carrier");
  const PostCover& c = g.cover();
  Subset out(g.size());
  const auto bm = b.members();
  switch (kind) {
    case CenterKind::Standard: {
      const auto mids = set_power(c, b, m - 2).members();
      for (Elem z = 0; z < g.size(); ++z) {
        bool ok = true;
        for (Elem w : mids)
          for (Elem x : bm)
            if (ok) ok = c.mul(c.mul(c.theta(z), w), c.theta(x)) == c.mul(c.mul(c.theta(x), w), c.theta(z));
        if (ok) out.insert(z);
      }
      break;
    }
    case CenterKind::D: {
      for (Elem z = 0; z < g.size(); ++z) {
        bool ok = true;
        for (Elem x : bm) {
          const Elem p = cover_pow(c, c.theta(x), m - 1);
          if (ok) ok = c.mul(c.theta(z), p) == c.mul(p, c.theta(z));
        }
        if (ok) out.insert(z);
      }
      break;
    }
    case CenterKind::T: {
      const auto words = set_power(c, b, m - 1).members();
      for (Elem z = 0; z < g.size(); ++z) {
        bool ok = true;
        for (Elem w : words)
          if (ok) ok = c.mul(c.theta(z), w) == c.mul(w, c.theta(z));
        if (ok) out.insert(z);
      }
      break;
    }
    case CenterKind::Sigma: {
      const auto slots = static_cast<std::size_t>(m - 1);
      for (const auto& s : sigma)
        if (s.size() != slots) throw Error(ErrorCode::SizeMismatch, "sigma must act on m-1 slots");
      if (bm.empty()) return Subset::full(g.size());
      const std::uint64_t total = ipow(bm.size(), static_cast<unsigned>(slots));
      charge(total * g.size() * std::max<std::size_t>(1, sigma.size()), "sigma centralizer");
      Word lhs(slots + 1), rhs(slots + 1);
      for (Elem z = 0; z < g.size(); ++z) {
        bool ok = true;
        for (std::uint64_t idx = 0; idx < total && ok; ++idx) {
          std::vector<Elem> xs(slots);
          std::uint64_t r = idx;
          for (std::size_t i = slots; i-- > 0;) {
            xs[i] = bm[r % bm.size()];
            r /= bm.size();
          }
          lhs[0] = z;
          for (std::size_t i = 0; i < slots; ++i) lhs[i + 1] = xs[i];
          for (const auto& s : sigma) {
            for (std::size_t i = 0; i < slots; ++i) rhs[i] = xs[static_cast<std::size_t>(s[i])];
            rhs[slots] = z;
            if (!equivalent(g, lhs, rhs)) {
              ok = false;
              break;
            }
          }
        }
        if (ok) out.insert(z);
      }
      break;
    }
  }
  return out;
}

Subset center(const NaryGroup& g, CenterKind kind, int m, const std::vector<std::vector<int>>& sigma) {
  return centralizer(g, kind, m, Subset::full(g.size()), sigma);
}

Subset normalizer(const NaryGroup& g, const Subset& b, int m) {
  const int n = g.arity();
  require_m(n, m);
  if (b.universe() != g.size() || !is_subgroup(g, b)) throw Error(ErrorCode::NotSubgroup, "B is not an n-ary subgroup");
  const PostCover& c = g.cover();
  std::vector<Subset> p;
  for (int j = 0; j < n; ++j) p.push_back(set_power(c, b, j));
  const int steps = (n - 1) / (m - 1);
  Subset out(g.size());
  for (Elem x = 0; x < g.size(); ++x) {
    const Subset left = c.product(c.theta(x), p[static_cast<std::size_t>(n - 1)]);
    bool ok = true;
    for (int i = 1; i <= steps && ok; ++i) {
      const int before = i * (m - 1);
      ok = c.product(c.product(p[static_cast<std::size_t>(before)], c.theta(x)),
                     p[static_cast<std::size_t>(n - 1 - before)]) == left;
    }
    if (ok) out.insert(x);
  }
  return out;
}

NormalizerReport normalizer_audit(const NaryGroup& g, const Subset& b) {
  const int n = g.arity();
  NormalizerReport r;
  for (int m : admissible(n)) r.by_m.emplace_back(m, normalizer(g, b, m));
  r.subgroups_containing_b = true;
  for (const auto& [m, s] : r.by_m) r.subgroups_containing_b = r.subgroups_containing_b && b.subset_of(s) && is_subgroup(g, s);
  auto at = [&](int m) -> const Subset& {
    for (const auto& [mm, s] : r.by_m)
      if (mm == m) return s;
    throw Error(ErrorCode::BadM, "missing m");
  };
  r.gcd_law = true;
  for (const auto& [m, s] : r.by_m)
    for (const auto& [k, t] : r.by_m) r.gcd_law = r.gcd_law && at(gcd_m(m, k)) == (s & t);

  const Subset& hn = at(n);
  const Retract ret = retract_at(g, b.members().front());
  r.retract_criterion = ret.group.normalizer(b) == hn;

  const PostCover& c = g.cover();
  const Subset b0 = c.power(c.theta_set(b), n - 1);
  const Subset hn0 = c.power(c.theta_set(hn), n - 1);
  Subset norm0(c.order());
  for (Elem u : c.a0().members())
    if (c.group().conjugate_set(u, b0) == b0) norm0.insert(u);
  r.cover0_criterion = hn0 == norm0;

  const Subset& n2 = at(2);
  const EmbeddedSubgroup eb = embed_subgroup(g, b), en = embed_subgroup(g, n2);
  r.cover_star_criterion = c.group().normalizer(eb.star) == en.star;
  return r;
}

CenterReport center_audit(const NaryGroup& g, const Subset& b) {
  const int n = g.arity();
  CenterReport r;
  auto violate = [&](bool cond, const std::string& what) {
    if (!cond) r.violations.push_back(what);
  };
  const bool b_subgroup = !b.empty() && is_subgroup(g, b);
  for (CenterKind kind : {CenterKind::Standard, CenterKind::D, CenterKind::T})
    for (int m : admissible(n)) {
      Subset s = centralizer(g, kind, m, b);
      if (!s.empty()) violate(is_subgroup(g, s), std::string(center_kind_name(kind)) + " set not a subgroup at m = " + std::to_string(m));
      if (kind == CenterKind::Standard && b_subgroup)
        violate(s.subset_of(normalizer(g, b, m)), "centralizer outside the m-seminormalizer");
      r.sets.push_back({{kind, m}, std::move(s)});
    }
  auto at = [&](CenterKind kind, int m) -> const Subset& {
    for (const auto& [key, s] : r.sets)
      if (key.first == kind && key.second == m) return s;
    throw Error(ErrorCode::BadM, "missing m");
  };
  for (int m : admissible(n)) {
    violate(at(CenterKind::Standard, m).subset_of(at(CenterKind::D, m)), "C not inside DC");
    violate(at(CenterKind::T, m).subset_of(at(CenterKind::D, m)), "TC not inside DC");
    for (int k : admissible(n)) {
      const int rr = gcd_m(m, k);
      for (CenterKind kind : {CenterKind::D, CenterKind::T}) {
        violate(at(kind, rr) == (at(kind, m) & at(kind, k)), std::string("gcd law fails for ") + center_kind_name(kind));
        if ((k - 1) % (m - 1) == 0) violate(at(kind, m).subset_of(at(kind, k)), "divisibility inclusion fails");
      }
      if (rr == 2) violate(at(CenterKind::Standard, 2) == (at(CenterKind::T, m) & at(CenterKind::T, k)), "coprime T law fails");
    }
  }
  // Identity sigma recovers the T kind.
  for (int m : admissible(n)) {
    if (ipow(b.count(), static_cast<unsigned>(m - 1)) * g.size() > limits().eval_budget / 16) continue;
    std::vector<int> id(static_cast<std::size_t>(m - 1));
    std::iota(id.begin(), id.end(), 0);
    violate(centralizer(g, CenterKind::Sigma, m, b, {id}) == at(CenterKind::T, m), "identity sigma differs from T kind");
  }
  return r;
}

AbelianFlags abelianness(const NaryGroup& g) {
  const int n = g.arity();
  const auto nn = static_cast<std::size_t>(n);
  const std::size_t k = g.size();
  const PostCover& c = g.cover();
  AbelianFlags f;
  auto violate = [&](bool cond, const std::string& what) {
    if (!cond) f.violations.push_back(what);
  };

  f.abelian = c.group().is_abelian();
  const std::uint64_t total = ipow(k, static_cast<unsigned>(n));
  if (total * (nn - 1) <= limits().eval_budget / 4) {
    bool by_swaps = true;
    Word w(nn), v(nn);
    for (std::uint64_t idx = 0; idx < total && by_swaps; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = nn; i-- > 0;) {
        w[i] = static_cast<Elem>(r % k);
        r /= k;
      }
      const Elem base = g.op(w);
      for (std::size_t i = 0; i + 1 < nn && by_swaps; ++i) {
        v = w;
        std::swap(v[i], v[i + 1]);
        by_swaps = g.op(v) == base;
      }
    }
    violate(by_swaps == f.abelian, "transposition test disagrees with the covering group");
  }

  const Subset all = Subset::full(k);
  for (int m : admissible(n)) {
    const auto mids = set_power(c, all, m - 2).members();
    bool semi = true;
    for (Elem a = 0; a < k && semi; ++a)
      for (Elem b = 0; b < k && semi; ++b)
        for (Elem w : mids)
          if (c.mul(c.mul(c.theta(a), w), c.theta(b)) != c.mul(c.mul(c.theta(b), w), c.theta(a))) {
            semi = false;
            break;
          }
    f.m_semiabelian.emplace_back(m, semi);
    bool weak = true;
    for (Elem a = 0; a < k && weak; ++a)
      for (Elem b = 0; b < k && weak; ++b) {
        const Elem p = cover_pow(c, c.theta(b), m - 1);
        weak = c.mul(c.theta(a), p) == c.mul(p, c.theta(a));
      }
    f.weakly_m.emplace_back(m, weak);
    f.t_semiabelian.emplace_back(m, center(g, CenterKind::T, m) == all);
    violate(!semi || weak, "m-semiabelian but not weakly m-semiabelian");
  }
  f.semiabelian = f.m_semiabelian.back().second;
  f.weakly_semiabelian = f.weakly_m.back().second;
  violate(f.m_semiabelian.front().second == f.abelian, "2-semiabelian differs from abelian");
  violate(f.weakly_m.front().second == f.abelian, "weakly 2-semiabelian differs from abelian");
  violate(!f.abelian || f.semiabelian, "abelian but not semiabelian");
  for (const auto& [m, a] : f.weakly_m)
    for (const auto& [kk, b] : f.weakly_m) {
      const int t = gcd_m(m, kk);
      for (const auto& [tt, v] : f.weakly_m)
        if (tt == t && a && b) violate(v, "weak gcd law fails");
    }

  // Fixed-c criterion with c = 0: [a c^{n-2} b] = [b c^{n-2} a].
  {
    bool fixed = true;
    Word u(nn, 0), v(nn, 0);
    for (Elem a = 0; a < k && fixed; ++a)
      for (Elem b = 0; b < k && fixed; ++b) {
        u.front() = a;
        u.back() = b;
        v.front() = b;
        v.back() = a;
        fixed = g.op(u) == g.op(v);
      }
    violate(fixed == f.semiabelian, "fixed-c criterion disagrees with semiabelian");
  }

  // Commutativity: rows versus columns of an n x n matrix.
  const std::uint64_t cells = ipow(k, static_cast<unsigned>(nn * nn));
  const std::uint64_t cap = limits().eval_budget / (4 * (nn + 1));
  f.commutative_exhaustive = cells <= cap;
  const std::uint64_t trials = f.commutative_exhaustive ? cells : std::min<std::uint64_t>(cap, 20000);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(k - 1));
  f.commutative = true;
  std::vector<Elem> mat(nn * nn);
  Word rows(nn), cols(nn), w(nn);
  for (std::uint64_t t = 0; t < trials && f.commutative; ++t) {
    if (f.commutative_exhaustive) {
      std::uint64_t r = t;
      for (std::size_t i = mat.size(); i-- > 0;) {
        mat[i] = static_cast<Elem>(r % k);
        r /= k;
      }
    } else {
      for (auto& x : mat) x = pick(rng);
    }
    for (std::size_t i = 0; i < nn; ++i) {
      for (std::size_t j = 0; j < nn; ++j) w[j] = mat[i * nn + j];
      rows[i] = g.op(w);
      for (std::size_t j = 0; j < nn; ++j) w[j] = mat[j * nn + i];
      cols[i] = g.op(w);
    }
    f.commutative = g.op(rows) == g.op(cols);
  }
  violate(f.commutative == f.semiabelian, "commutative differs from semiabelian");
  return f;
}

SylowPartition idempotent_sylow_partition(const NaryGroup& g, std::size_t p) {
  const std::size_t k = g.size();
  if (idempotents(g).count() != k) throw Error(ErrorCode::PreconditionViolated, "group is not idempotent");
  if (!is_prime(static_cast<std::size_t>(g.arity() - 1))) throw Error(ErrorCode::PreconditionViolated, "n-1 is not prime");
  if (!is_prime(p) || k % p != 0) throw Error(ErrorCode::PreconditionViolated, "p is not a prime divisor of |A|");
  SylowPartition out;
  out.p = p;
  const Retract r = retract_at(g, 0);
  ensure(r.group.is_nilpotent(), "retract of an idempotent group with n-1 prime is nilpotent");
  const Subset p1 = r.group.primary_component({p});
  ensure(is_subgroup(g, p1) && is_semi_invariant(g, p1), "Sylow component is a semi-invariant subgroup");
  out.parts = cosets(g, p1, Side::Right).cosets;
  Subset covered(k);
  for (const Subset& s : out.parts) {
    ensure(is_subgroup(g, s) && is_semi_invariant(g, s), "every coset is a semi-invariant subgroup");
    ensure((covered & s).empty(), "parts are disjoint");
    covered = covered | s;
  }
  ensure(covered.count() == k, "parts cover A");
  if (k <= 64) {
    for (const Subset& s : all_subgroups(g)) {
      if (s.count() != p1.count()) continue;
      ++out.sylow_count;
      ensure(std::find(out.parts.begin(), out.parts.end(), s) != out.parts.end(), "every Sylow subgroup is a part");
    }
    ensure(out.sylow_count == k / p1.count(), "exactly m Sylow subgroups");
  }
  for (Elem a = 0; a < k; ++a) {
    const Retract ra = retract_at(g, a);
    std::vector<Subset> factors;
    for (std::size_t q : prime_factors(k)) factors.push_back(ra.group.primary_component({q}));
    ensure(a_direct_decomposition(g, a, factors), "Sylow factors give an a-direct decomposition");
    out.decompositions.push_back(std::move(factors));
  }
  return out;
}

std::vector<Subset> units_partition(const NaryGroup& g, std::size_t k) {
  const Subset e = units(g);
  if (e.empty()) throw Error(ErrorCode::NoIdempotent, "no units");
  const std::size_t order = e.count();
  if (k == 0 || order % k != 0 || std::gcd(k, order / k) != 1)
    throw Error(ErrorCode::PreconditionViolated, "k must be a divisor of |E| coprime to its cofactor");
  std::vector<Subset> out;
  if (g.size() <= 64) {
    for (const Subset& s : all_subgroups(g))
      if (s.count() == k && s.subset_of(e)) out.push_back(s);
  }
  Subset covered(g.size());
  for (const Subset& s : out) {
    ensure((covered & s).empty(), "unit parts are disjoint");
    covered = covered | s;
  }
  ensure(out.size() == order / k && covered == e, "exactly m unit parts covering E");
  return out;
}

SolvabilityClass classify_solvability(const NaryGroup& g) {
  const Retract r = retract_at(g, 0);
  SolvabilityClass s;
  s.semisolvable = r.group.is_solvable();
  s.seminilpotent = r.group.is_nilpotent();
  if (s.semisolvable) s.derived_length = r.group.derived_length();
  if (g.size() > 1) {
    const Retract other = retract_at(g, static_cast<Elem>(g.size() - 1));
    ensure(other.group.is_solvable() == s.semisolvable && other.group.is_nilpotent() == s.seminilpotent,
           "solvability does not depend on the anchor");
  }
  return s;
}

}  // namespace polyad

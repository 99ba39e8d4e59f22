#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "polyad/constructions.hpp"
#include "polyad/core.hpp"
#include "polyad/finite_group.hpp"

namespace oracle {

using polyad::Elem;
using polyad::Word;

// Raw n-ary table with row-major addressing, independent of the library's evaluator.
struct Table {
  std::size_t k = 0;
  int n = 0;
  std::vector<Elem> cells;

  static Table of(const polyad::Groupoid& g) { return {g.size(), g.arity(), g.table()}; }
  static Table of(const polyad::NaryGroup& g) { return of(g.groupoid()); }

  Elem at(const Elem* a) const {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * k + a[i];
    return cells[idx];
  }
  Elem at(const Word& a) const { return at(a.data()); }
};

// Calls f for every tuple of length len over {0..k-1}.
inline void tuples(std::size_t k, std::size_t len, const std::function<void(const Word&)>& f) {
  Word w(len, 0);
  for (;;) {
    f(w);
    std::size_t i = len;
    while (i > 0) {
      if (++w[i - 1] < k) break;
      w[--i] = 0;
    }
    if (i == 0) return;
  }
}

inline bool associative(const Table& t) {
  bool ok = true;
  const std::size_t len = static_cast<std::size_t>(2 * t.n - 1);
  tuples(t.k, len, [&](const Word& w) {
    if (!ok) return;
    Word inner(w.begin(), w.begin() + t.n);
    Word outer{t.at(inner)};
    outer.insert(outer.end(), w.begin() + t.n, w.end());
    const Elem ref = t.at(outer);
    for (int s = 1; s < t.n; ++s) {
      Word mid(w.begin() + s, w.begin() + s + t.n);
      Word o(w.begin(), w.begin() + s);
      o.push_back(t.at(mid));
      o.insert(o.end(), w.begin() + s + t.n, w.end());
      if (t.at(o) != ref) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

// Every equation with the unknown at any of the n positions has exactly one solution.
inline bool uniquely_solvable(const Table& t) {
  for (int pos = 0; pos < t.n; ++pos) {
    bool ok = true;
    tuples(t.k, static_cast<std::size_t>(t.n - 1), [&](const Word& rest) {
      if (!ok) return;
      std::vector<int> hits(t.k, 0);
      Word a(static_cast<std::size_t>(t.n));
      for (Elem x = 0; x < t.k; ++x) {
        std::size_t r = 0;
        for (int i = 0; i < t.n; ++i) a[static_cast<std::size_t>(i)] = i == pos ? x : rest[r++];
        ++hits[t.at(a)];
      }
      for (int h : hits)
        if (h != 1) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

inline bool dornte(const Table& t) { return associative(t) && uniquely_solvable(t); }

// Left fold of a word of length 1 mod (n-1).
inline Elem fold(const Table& t, const Word& w) {
  Elem acc = w[0];
  Word args(static_cast<std::size_t>(t.n));
  for (std::size_t i = 1; i < w.size(); i += static_cast<std::size_t>(t.n - 1)) {
    args[0] = acc;
    for (int j = 1; j < t.n; ++j) args[static_cast<std::size_t>(j)] = w[i + static_cast<std::size_t>(j) - 1];
    acc = t.at(args);
  }
  return acc;
}

// Closed subsets by exhaustive enumeration of all nonempty subsets; k <= 16.
inline std::vector<std::vector<Elem>> closed_subsets(const Table& t) {
  std::vector<std::vector<Elem>> out;
  for (std::uint32_t mask = 1; mask < (1u << t.k); ++mask) {
    std::vector<Elem> mem;
    for (Elem x = 0; x < t.k; ++x)
      if (mask >> x & 1u) mem.push_back(x);
    bool closed = true;
    tuples(mem.size(), static_cast<std::size_t>(t.n), [&](const Word& idx) {
      if (!closed) return;
      Word a(idx.size());
      for (std::size_t i = 0; i < idx.size(); ++i) a[i] = mem[idx[i]];
      if (!(mask >> t.at(a) & 1u)) closed = false;
    });
    if (closed) out.push_back(mem);
  }
  return out;
}

// Every bijection f with f([a1..an]) = [f(a1)..f(an)], by backtracking; k <= 8.
inline std::vector<std::vector<Elem>> automorphisms(const Table& t) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(t.k);
  std::vector<bool> used(t.k, false);
  const std::size_t n = static_cast<std::size_t>(t.n);
  // tuples over {0..x} touching x whose value is already mapped
  auto consistent = [&](Elem x) {
    bool ok = true;
    Word img(n);
    tuples(x + 1, n, [&](const Word& w) {
      if (!ok || std::find(w.begin(), w.end(), x) == w.end()) return;
      const Elem p = t.at(w);
      if (p > x) return;
      for (std::size_t i = 0; i < n; ++i) img[i] = f[w[i]];
      if (t.at(img) != f[p]) ok = false;
    });
    return ok;
  };
  std::function<void(Elem)> rec = [&](Elem x) {
    if (x == t.k) {
      bool ok = true;
      Word img(n);
      tuples(t.k, n, [&](const Word& w) {
        if (!ok) return;
        for (std::size_t i = 0; i < n; ++i) img[i] = f[w[i]];
        if (t.at(img) != f[t.at(w)]) ok = false;
      });
      if (ok) out.push_back(f);
      return;
    }
    for (Elem y = 0; y < t.k; ++y) {
      if (used[y]) continue;
      f[x] = y;
      used[y] = true;
      if (consistent(x)) rec(x + 1);
      used[y] = false;
    }
  };
  rec(0);
  return out;
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::size_t factorial(std::size_t q) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= q; ++i) r *= i;
  return r;
}

}  // namespace oracle

namespace gen {

using polyad::BinaryGroup;
using polyad::Elem;
using polyad::NaryGroup;

// Fixed-seed source for the property suites.
struct Source {
  std::mt19937_64 rng;
  explicit Source(std::uint64_t seed) : rng(seed) {}
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin() { return below(2) == 1; }
};

inline BinaryGroup small_group(Source& s) {
  switch (s.below(6)) {
    case 0: return polyad::cyclic_group(1 + s.below(8));
    case 1: return polyad::dihedral_group(2 + s.below(4));
    case 2: return polyad::quaternion_group();
    case 3: return polyad::symmetric_group(3);
    case 4: return polyad::direct_product(polyad::cyclic_group(2), polyad::cyclic_group(2 + s.below(3)));
    default: return polyad::cyclic_group(2 + s.below(4));
  }
}

// Derived group with a random central element; verification cost k^(2n-1) kept small.
inline NaryGroup derived_group(Source& s, int max_arity = 5) {
  for (;;) {
    const BinaryGroup g = small_group(s);
    const int n = s.between(2, max_arity);
    if (oracle::ipow(g.size(), static_cast<std::size_t>(2 * n - 1)) > 2000000) continue;
    const auto z = g.center().members();
    return polyad::derived(g, n, z[s.below(z.size())]);
  }
}

// Gluskin group over a cyclic base with beta = multiplication by a unit.
inline NaryGroup gluskin_group(Source& s) {
  for (;;) {
    const std::size_t m = 2 + s.below(9);
    const int n = s.between(3, 5);
    if (oracle::ipow(m, static_cast<std::size_t>(2 * n - 1)) > 2000000) continue;
    const std::size_t u = 1 + s.below(m - 1);
    if (std::gcd(u, m) != 1) continue;
    std::size_t un = 1;
    for (int i = 1; i < n; ++i) un = un * u % m;
    if (un != 1) continue;
    const Elem d = static_cast<Elem>(s.below(m));
    if ((u * d) % m != d) continue;
    std::vector<Elem> beta(m);
    for (Elem x = 0; x < m; ++x) beta[x] = static_cast<Elem>(u * x % m);
    return polyad::gluskin(polyad::cyclic_group(m), beta, d, n);
  }
}

// Mix of derived, Gluskin and catalog groups.
inline NaryGroup any_group(Source& s) {
  switch (s.below(3)) {
    case 0: return derived_group(s);
    case 1: return gluskin_group(s);
    default: {
      static const std::vector<std::string> names = {"T3", "V4", "V6", "derived(S3,3)", "Zg_cyclic(6,4)",
                                                     "Zg_cyclic(7,3)", "Z6_alt", "D6_ternary"};
      return polyad::named_example(names[s.below(names.size())]);
    }
  }
}

inline polyad::Word word(Source& s, std::size_t k, std::size_t len) {
  polyad::Word w(len);
  for (auto& x : w) x = static_cast<Elem>(s.below(k));
  return w;
}

// Word whose length is 1 mod (n-1), with 1 + blocks*(n-1) letters.
inline polyad::Word evaluable_word(Source& s, const NaryGroup& g, std::size_t max_blocks) {
  const std::size_t blocks = s.below(max_blocks + 1);
  return word(s, g.size(), 1 + blocks * static_cast<std::size_t>(g.arity() - 1));
}

}  // namespace gen

#include "polyad/core.hpp"

#include <algorithm>
#include <thread>

namespace polyad {

Elem eval(const Groupoid& g, const Word& w) {
  const std::size_t n = static_cast<std::size_t>(g.arity());
  if (w.empty() || (w.size() - 1) % (n - 1) != 0)
    throw Error(ErrorCode::LengthError, "word length " + std::to_string(w.size()) + " is not 1 mod " +
                                            std::to_string(n - 1));
  // Left fold: [[w1..wn] w_{n+1}..w_{2n-1}] ...
  Word buf(n);
  Elem acc = w[0];
  std::size_t pos = 1;
  while (pos < w.size()) {
    buf[0] = acc;
    std::copy(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos + n - 1), buf.begin() + 1);
    acc = g.op(buf.data());
    pos += n - 1;
  }
  return acc;
}

namespace {

// Decodes idx into `len` base-k digits, most significant first.
void decode(std::uint64_t idx, std::size_t k, Word& out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Elem>(idx % k);
    idx /= k;
  }
}

}  // namespace

std::optional<AssociativityWitness> associativity_counterexample(const Groupoid& g) {
  const std::size_t k = g.size();
  const auto n = static_cast<std::size_t>(g.arity());
  const std::uint64_t total = ipow(k, static_cast<unsigned>(2 * n - 1));
  charge(total, "associativity check");
  const unsigned threads = std::max(1u, std::min<unsigned>(limits().threads, static_cast<unsigned>(k)));

  const std::vector<Elem>* tab =
      ipow(k, static_cast<unsigned>(n)) <= limits().table_cap ? &g.table() : nullptr;
  // Each worker scans a contiguous range and records its first failing index.
  std::vector<std::uint64_t> first(threads, total);
  auto work = [&](unsigned t) {
    const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
    Word x(2 * n - 1), inner(n), outer(n);
    if (lo < hi) decode(lo, k, x);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      if (idx != lo)
        for (std::size_t d = x.size(); d-- > 0;) {
          if (++x[d] < k) break;
          x[d] = 0;
        }
      if (tab) {
        // window sums over the flat table: inner product at i, then the outer index around it
        Elem ref = 0;
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t in = 0, out = 0;
          for (std::size_t j = 0; j < n; ++j) in = in * k + x[i + j];
          for (std::size_t j = 0; j < i; ++j) out = out * k + x[j];
          out = out * k + (*tab)[in];
          for (std::size_t j = i + n; j < x.size(); ++j) out = out * k + x[j];
          const Elem v = (*tab)[out];
          if (i == 0) {
            ref = v;
          } else if (v != ref) {
            first[t] = idx;
            return;
          }
        }
        continue;
      }
      Elem ref = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::copy(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i + n), inner.begin());
        std::copy(x.begin(), x.begin() + static_cast<long>(i), outer.begin());
        outer[i] = g.op(inner.data());
        std::copy(x.begin() + static_cast<long>(i + n), x.end(), outer.begin() + static_cast<long>(i + 1));
        const Elem v = g.op(outer.data());
        if (i == 0) {
          ref = v;
        } else if (v != ref) {
          first[t] = idx;
          return;
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  const std::uint64_t bad = *std::min_element(first.begin(), first.end());
  if (bad == total) return std::nullopt;

  AssociativityWitness w;
  w.args.resize(2 * n - 1);
  decode(bad, k, w.args);
  Word inner(n), outer(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(w.args.begin() + static_cast<long>(i), w.args.begin() + static_cast<long>(i + n), inner.begin());
    std::copy(w.args.begin(), w.args.begin() + static_cast<long>(i), outer.begin());
    outer[i] = g.op(inner.data());
    std::copy(w.args.begin() + static_cast<long>(i + n), w.args.end(), outer.begin() + static_cast<long>(i + 1));
    const Elem v = g.op(outer.data());
    if (i == 0) {
      w.at_zero = v;
    } else if (v != w.at_zero) {
      w.left = static_cast<int>(i);
      w.at_left = v;
      break;
    }
  }
  return w;
}

bool is_associative(const Groupoid& g) { return !associativity_counterexample(g).has_value(); }

std::optional<SolvabilityWitness> solvability_counterexample(const Groupoid& g) {
  const std::size_t k = g.size();
  const auto n = static_cast<std::size_t>(g.arity());
  const std::uint64_t rest = ipow(k, static_cast<unsigned>(n - 1));
  charge(rest * k * n, "solvability check");
  Word fixed(n - 1), args(n);
  std::vector<std::size_t> hits(k);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::uint64_t idx = 0; idx < rest; ++idx) {
      decode(idx, k, fixed);
      std::fill(hits.begin(), hits.end(), 0);
      for (Elem x = 0; x < k; ++x) {
        std::copy(fixed.begin(), fixed.begin() + static_cast<long>(p), args.begin());
        args[p] = x;
        std::copy(fixed.begin() + static_cast<long>(p), fixed.end(), args.begin() + static_cast<long>(p + 1));
        ++hits[g.op(args.data())];
      }
      for (Elem b = 0; b < k; ++b)
        if (hits[b] != 1) {
          SolvabilityWitness w;
          w.position = static_cast<int>(p);
          w.args = args;
          w.args[p] = 0;
          w.rhs = b;
          w.solutions = hits[b];
          return w;
        }
    }
  }
  return std::nullopt;
}

bool is_group(const Groupoid& g) {
  if (auto w = associativity_counterexample(g))
    throw Error(ErrorCode::NotAssociative, "not associative at " + format_word(g, w->args));
  return !solvability_counterexample(g).has_value();
}

std::vector<Elem> solve_all(const Groupoid& g, Word args, std::size_t hole, Elem rhs) {
  if (args.size() != static_cast<std::size_t>(g.arity()) || hole >= args.size())
    throw Error(ErrorCode::LengthError, "solve needs n arguments and a hole inside them");
  std::vector<Elem> out;
  for (Elem x = 0; x < g.size(); ++x) {
    args[hole] = x;
    if (g.op(args.data()) == rhs) out.push_back(x);
  }
  return out;
}

Elem solve(const Groupoid& g, Word args, std::size_t hole, Elem rhs) {
  if (args.size() != static_cast<std::size_t>(g.arity()) || hole >= args.size())
    throw Error(ErrorCode::LengthError, "solve needs n arguments and a hole inside them");
  for (Elem x = 0; x < g.size(); ++x) {
    args[hole] = x;
    if (g.op(args.data()) == rhs) return x;
  }
  throw Error(ErrorCode::NoSolution, "no solution for the unknown at position " + std::to_string(hole + 1));
}

Elem skew(const Groupoid& g, Elem a) {
  const auto n = static_cast<std::size_t>(g.arity());
  return solve(g, Word(n, a), n - 1, a);
}

Elem skew_power(const NaryGroup& g, Elem a, unsigned depth) {
  for (unsigned i = 0; i < depth; ++i) a = g.skew(a);
  return a;
}

bool is_neutral(const NaryGroup& g, const Word& w, bool strict) {
  const auto n = static_cast<std::size_t>(g.arity());
  if (w.size() % (n - 1) != 0) throw Error(ErrorCode::LengthError, "neutral sequences have length 0 mod n-1");
  if (w.empty()) return true;
  Word left = w, right{0};
  left.push_back(0);
  right.insert(right.end(), w.begin(), w.end());
  if (!strict) return eval(g, left) == 0;
  for (Elem x = 0; x < g.size(); ++x) {
    left.back() = x;
    right.front() = x;
    if (eval(g, left) != x || eval(g, right) != x) return false;
  }
  return true;
}

Canonical theta_canonical(const NaryGroup& g, const Word& w, Elem base) {
  const auto n = static_cast<std::size_t>(g.arity());
  // Empty words sit in residue n-1, like every word of length 0 mod n-1.
  const std::size_t len_mod = (w.size() + (n - 1) - 1) % (n - 1);
  Canonical c;
  c.residue = static_cast<int>(len_mod + 1);
  Word full = w;
  full.insert(full.end(), n - 1 - static_cast<std::size_t>(c.residue), base);
  full.push_back(g.skew(base));
  c.value = eval(g, full);
  return c;
}

Word canonical_word(const NaryGroup&, const Canonical& c, Elem base) {
  Word w{c.value};
  w.insert(w.end(), static_cast<std::size_t>(c.residue - 1), base);
  return w;
}

Word inverse_sequence(const NaryGroup& g, const Word& w) {
  const auto n = static_cast<std::size_t>(g.arity());
  if (n == 2) {
    // Binary case: the inverse of the product.
    const Elem e = g.skew(0);
    return {solve(g.groupoid(), {eval(g, w), 0}, 1, e)};
  }
  Word inv;
  for (std::size_t i = w.size(); i-- > 0;) {
    inv.push_back(g.skew(w[i]));
    inv.insert(inv.end(), n - 3, w[i]);
  }
  return canonical_word(g, theta_canonical(g, inv));
}

std::string format_word(const Groupoid& g, const Word& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += g.label(w[i]);
  }
  return out + ")";
}

}  // namespace polyad

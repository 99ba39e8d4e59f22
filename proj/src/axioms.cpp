#include "polyad/axioms.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <regex>
#include <set>
#include <thread>

#include "polyad/constructions.hpp"
#include "polyad/core.hpp"

namespace polyad {

namespace {

using Pattern = std::vector<std::optional<Elem>>;

bool binary_associative(std::size_t k, const std::vector<Elem>& t) {
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (t[t[a * k + b] * k + c] != t[a * k + t[b * k + c]]) return false;
  return true;
}

Pattern free_slots(std::size_t count) { return Pattern(count, std::nullopt); }

Pattern concat(std::initializer_list<Pattern> parts) {
  Pattern out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Pattern fixed(Elem a, std::size_t count = 1) { return Pattern(count, a); }

// Enumerates every filling of the nullopt slots of `chunk` into `out`, calling f each time.
template <class F>
void fill(std::size_t k, const Pattern& chunk, Word& out, F&& f) {
  std::vector<std::size_t> holes;
  for (std::size_t i = 0; i < chunk.size(); ++i) {
    if (chunk[i]) out[i] = *chunk[i];
    else holes.push_back(i);
  }
  const std::uint64_t total = ipow(k, static_cast<unsigned>(holes.size()));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t h = holes.size(); h-- > 0;) {
      out[holes[h]] = static_cast<Elem>(r % k);
      r /= k;
    }
    f();
  }
}

bool all_reachable(const Groupoid& g, const Pattern& p) { return reachable(g, p).count() == g.size(); }

// For all a and b: [pattern(a)] = b solvable.
template <class P>
bool solvable_for_all(const Groupoid& g, P&& pattern_of) {
  for (Elem a = 0; a < g.size(); ++a)
    if (!all_reachable(g, pattern_of(a))) return false;
  return true;
}

void need_arity(const Groupoid& g, int min, const std::string& id) {
  if (g.arity() < min) throw Error(ErrorCode::ArityTooSmall, id + " needs n >= " + std::to_string(min));
}

bool post1(const Groupoid& g, int i) {
  const auto n = static_cast<std::size_t>(g.arity());
  const std::size_t k = g.size();
  const auto pos = static_cast<std::size_t>(i - 1);
  charge(ipow(k, static_cast<unsigned>(n)), "post solvability scan");
  Pattern p = free_slots(n);
  p[pos] = Elem{0};
  Word w(n);
  bool ok = true;
  // Fixed arguments are the free slots of p; the unknown sits at pos.
  Pattern others = free_slots(n);
  others[pos] = Elem{0};
  fill(k, others, w, [&] {
    if (!ok) return;
    Subset seen(k);
    for (Elem x = 0; x < k; ++x) {
      w[pos] = x;
      seen.insert(g.op(w));
    }
    ok = seen.count() == k;
  });
  return ok;
}

bool existential(const Groupoid& g) {
  const auto n = static_cast<std::size_t>(g.arity());
  const std::size_t k = g.size();
  Word w(n);
  for (Elem a = 0; a < k; ++a) {
    bool left = false, right = false;
    Pattern mid = free_slots(n);
    mid.front() = Elem{0};
    mid.back() = Elem{0};
    fill(k, mid, w, [&] {
      if (left) return;
      bool ok = true;
      for (Elem b = 0; b < k && ok; ++b) {
        w.front() = b;
        w.back() = a;
        ok = g.op(w) == b;
      }
      left = ok;
    });
    fill(k, mid, w, [&] {
      if (right) return;
      bool ok = true;
      for (Elem b = 0; b < k && ok; ++b) {
        w.front() = a;
        w.back() = b;
        ok = g.op(w) == b;
      }
      right = ok;
    });
    if (!left || !right) return false;
  }
  return true;
}

bool skew_system(const Groupoid& g) {
  const auto n = static_cast<std::size_t>(g.arity());
  const std::size_t k = g.size();
  for (Elem a = 0; a < k; ++a) {
    bool found = false;
    for (Elem s = 0; s < k && !found; ++s) {
      bool ok = true;
      for (Elem b = 0; b < k && ok; ++b) {
        Word l(n, a), r(n, a);
        l.front() = b;
        l[n - 2] = s;  // b a^{n-3} s a
        r[1] = s;
        r.back() = b;  // a s a^{n-3} b
        ok = g.op(l) == b && g.op(r) == b;
      }
      found = ok;
    }
    if (!found) return false;
  }
  return true;
}

bool dpoint(const Groupoid& g, int i, int j) {
  const auto n = static_cast<std::size_t>(g.arity());
  const std::size_t k = g.size();
  const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
  // [y b^{n-1-j} a^j] = b
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b) {
      Word w(n, b);
      for (std::size_t t = n - uj; t < n; ++t) w[t] = a;
      bool ok = false;
      for (Elem y = 0; y < k && !ok; ++y) {
        w[0] = y;
        ok = g.op(w) == b;
      }
      if (!ok) return false;
    }
  // Some d with [a^i b^{n-1-i} z] = d solvable for all a, b.
  Subset candidates = Subset::full(k);
  for (Elem a = 0; a < k && !candidates.empty(); ++a)
    for (Elem b = 0; b < k; ++b) {
      Word w(n, b);
      for (std::size_t t = 0; t < ui; ++t) w[t] = a;
      Subset hit(k);
      for (Elem z = 0; z < k; ++z) {
        w.back() = z;
        hit.insert(g.op(w));
      }
      candidates = candidates & hit;
    }
  return !candidates.empty();
}

bool repeated(const Groupoid& g) {
  const auto n = static_cast<std::size_t>(g.arity());
  const std::size_t k = g.size();
  for (Elem a = 0; a < k; ++a) {
    Subset left(k), right(k);
    for (Elem x = 0; x < k; ++x) {
      Word l(n, x), r(n, x);
      l.back() = a;
      r.front() = a;
      left.insert(g.op(l));
      right.insert(g.op(r));
    }
    if (left.count() != k || right.count() != k) return false;
  }
  return true;
}

}  // namespace

std::vector<AxiomSystem> axiom_systems(int n) {
  std::vector<AxiomSystem> out;
  out.push_back({"POST2", "[x a2..an] = b and [a1..a_{n-1} y] = b"});
  for (int i = 2; i <= n - 1; ++i)
    out.push_back({"POST1(" + std::to_string(i) + ")", "[a1..a_{i-1} x a_{i+1}..an] = b"});
  out.push_back({"MAIN", "[x1..x_{n-1} a] = b and [a y1..y_{n-1}] = b"});
  out.push_back({"DIAG", "[x a^{n-1}] = b and [a^{n-1} y] = b"});
  for (int k = 1; k <= n - 2; ++k)
    for (int i = 1; k + i <= n - 1; ++i)
      out.push_back({"ONE_EQ(" + std::to_string(k) + "," + std::to_string(i) + ")",
                     "[a1..ak x1..xi a_{k+i+1}..an] = b"});
  if (n >= 3) {
    out.push_back({"SANDWICH", "[a x1..x_{n-2} c] = b"});
    out.push_back({"EXISTENTIAL", "sequences alpha(a), beta(a) with [b alpha a] = b = [a beta b]"});
    out.push_back({"SKEW", "some s with [b a^{n-3} s a] = b = [a s a^{n-3} b]"});
  }
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 3; ++m)
      out.push_back({"LONG(" + std::to_string(k) + "," + std::to_string(m) + ")",
                     "[u1..u_{k(n-1)} a] = b and [a v1..v_{m(n-1)}] = b"});
  if (n >= 3)
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j)
        out.push_back({"DPOINT(" + std::to_string(i) + "," + std::to_string(j) + ")",
                       "some d with [a^i b^{n-1-i} z] = d and [y b^{n-1-j} a^j] = b solvable"});
  return out;
}

Subset reachable(const Groupoid& g, const Pattern& pattern) {
  const auto n = static_cast<std::size_t>(g.arity());
  const std::size_t k = g.size();
  if (pattern.size() < n || (pattern.size() - 1) % (n - 1) != 0)
    throw Error(ErrorCode::LengthError, "pattern length must be 1 mod (n-1) and at least n");
  Word w(n);
  Subset current(k);
  const Pattern first(pattern.begin(), pattern.begin() + static_cast<std::ptrdiff_t>(n));
  fill(k, first, w, [&] { current.insert(g.op(w)); });
  for (std::size_t at = n; at < pattern.size(); at += n - 1) {
    Pattern chunk(n);
    chunk[0] = Elem{0};
    std::copy(pattern.begin() + static_cast<std::ptrdiff_t>(at),
              pattern.begin() + static_cast<std::ptrdiff_t>(at + n - 1), chunk.begin() + 1);
    Subset next(k);
    for (Elem v : current.members()) {
      chunk[0] = v;
      fill(k, chunk, w, [&] { next.insert(g.op(w)); });
    }
    current = next;
  }
  return current;
}

namespace {

bool decide(const Groupoid& g, const std::string& system) {
  const int n = g.arity();
  const auto un = static_cast<std::size_t>(n);
  std::smatch m;
  static const std::regex one(R"(POST1\((\d+)\))"), two(R"((ONE_EQ|LONG|DPOINT)\((\d+),(\d+)\))");
  if (system == "POST2") return post1(g, 1) && post1(g, n);
  if (std::regex_match(system, m, one)) {
    const int i = std::stoi(m[1]);
    need_arity(g, 3, system);
    if (i < 2 || i > n - 1) throw Error(ErrorCode::InvalidInput, system + ": i must lie in 2..n-1");
    return post1(g, i);
  }
  if (system == "MAIN")
    return solvable_for_all(g, [&](Elem a) { return concat({free_slots(un - 1), fixed(a)}); }) &&
           solvable_for_all(g, [&](Elem a) { return concat({fixed(a), free_slots(un - 1)}); });
  if (system == "DIAG")
    return solvable_for_all(g, [&](Elem a) { return concat({free_slots(1), fixed(a, un - 1)}); }) &&
           solvable_for_all(g, [&](Elem a) { return concat({fixed(a, un - 1), free_slots(1)}); });
  if (system == "SANDWICH") {
    need_arity(g, 3, system);
    for (Elem a = 0; a < g.size(); ++a)
      for (Elem c = 0; c < g.size(); ++c)
        if (!all_reachable(g, concat({fixed(a), free_slots(un - 2), fixed(c)}))) return false;
    return true;
  }
  if (system == "EXISTENTIAL") {
    need_arity(g, 3, system);
    return existential(g);
  }
  if (system == "SKEW") {
    need_arity(g, 3, system);
    return skew_system(g);
  }
  if (system == "REPEATED") return repeated(g);
  if (std::regex_match(system, m, two)) {
    const std::string kind = m[1];
    const int p = std::stoi(m[2]), q = std::stoi(m[3]);
    if (kind == "ONE_EQ") {
      need_arity(g, 3, system);
      if (p < 1 || q < 1 || p + q > n - 1) throw Error(ErrorCode::InvalidInput, system + ": needs k, i >= 1 and k+i <= n-1");
      const auto up = static_cast<std::size_t>(p), uq = static_cast<std::size_t>(q);
      // Fixed a1..ak and a_{k+i+1}..an range over A: every fixing must reach all of A.
      Pattern outer = free_slots(un);
      for (std::size_t t = up; t < up + uq; ++t) outer[t] = Elem{0};
      Word w(un);
      bool ok = true;
      fill(g.size(), outer, w, [&] {
        if (!ok) return;
        Pattern pat(un);
        for (std::size_t t = 0; t < un; ++t)
          pat[t] = (t >= up && t < up + uq) ? std::optional<Elem>{} : std::optional<Elem>{w[t]};
        ok = all_reachable(g, pat);
      });
      return ok;
    }
    if (kind == "LONG") {
      if (p < 1 || q < 1) throw Error(ErrorCode::InvalidInput, system + ": needs k, m >= 1");
      const auto lu = static_cast<std::size_t>(p) * (un - 1), lv = static_cast<std::size_t>(q) * (un - 1);
      return solvable_for_all(g, [&](Elem a) { return concat({free_slots(lu), fixed(a)}); }) &&
             solvable_for_all(g, [&](Elem a) { return concat({fixed(a), free_slots(lv)}); });
    }
    need_arity(g, 3, system);
    if (p < 1 || q < 1 || p > n - 1 || q > n - 1) throw Error(ErrorCode::InvalidInput, system + ": i, j must lie in 1..n-1");
    return dpoint(g, p, q);
  }
  throw Error(ErrorCode::UnknownName, "unknown axiom system '" + system + "'");
}

}  // namespace

bool check_axiom(const Groupoid& g, const std::string& system) {
  if (!is_associative(g)) throw Error(ErrorCode::NotAssociative, "axiom systems need an associative magma");
  return decide(g, system);
}

std::size_t count_solutions(const Groupoid& g, int i, const Word& tail, Elem b) {
  const auto n = static_cast<std::size_t>(g.arity());
  if (i < 1 || i > g.arity() - 1 || tail.size() != n - static_cast<std::size_t>(i))
    throw Error(ErrorCode::InvalidInput, "need 1 <= i <= n-1 and a tail of n-i elements");
  Pattern p = free_slots(static_cast<std::size_t>(i));
  for (Elem t : tail) p.push_back(t);
  Word w(n);
  std::size_t count = 0;
  fill(g.size(), p, w, [&] {
    if (g.op(w) == b) ++count;
  });
  return count;
}

bool main_uniquely_solvable(const Groupoid& g) {
  const auto n = static_cast<std::size_t>(g.arity());
  const std::size_t k = g.size();
  for (Elem a = 0; a < k; ++a) {
    std::vector<std::size_t> left(k, 0), right(k, 0);
    Word w(n);
    fill(k, concat({free_slots(n - 1), fixed(a)}), w, [&] { ++left[g.op(w)]; });
    fill(k, concat({fixed(a), free_slots(n - 1)}), w, [&] { ++right[g.op(w)]; });
    for (Elem b = 0; b < k; ++b)
      if (left[b] != 1 || right[b] != 1) return false;
  }
  return true;
}

bool single_known_solvable(const Groupoid& g, int i) {
  const auto n = static_cast<std::size_t>(g.arity());
  if (i < 1 || i > g.arity()) throw Error(ErrorCode::InvalidInput, "position out of range");
  for (Elem a = 0; a < g.size(); ++a) {
    Pattern p = free_slots(n);
    p[static_cast<std::size_t>(i - 1)] = a;
    if (!all_reachable(g, p)) return false;
  }
  return true;
}

Groupoid projection_magma(std::size_t k, int n, bool last) {
  const std::uint64_t cells = ipow(k, static_cast<unsigned>(n));
  std::vector<Elem> table(cells);
  const std::uint64_t lead = ipow(k, static_cast<unsigned>(n - 1));
  for (std::uint64_t idx = 0; idx < cells; ++idx)
    table[idx] = static_cast<Elem>(last ? idx % k : idx / lead);
  return Groupoid::from_table(k, n, std::move(table));
}

std::vector<CorpusEntry> axiom_corpus(std::size_t perturbations) {
  std::vector<CorpusEntry> out;
  for (const auto& name : catalog_names()) {
    NaryGroup g = named_example(name);
    out.push_back({name, g.groupoid(), true});
  }
  for (std::size_t k = 2; k <= 3; ++k)
    for (int n = 3; n <= 4; ++n)
      for (bool last : {true, false})
        out.push_back({"projection(" + std::to_string(k) + "," + std::to_string(n) + (last ? ",last)" : ",first)"),
                       projection_magma(k, n, last)});
  for (int code = 0; code < 256; ++code) {
    std::vector<Elem> table(8);
    for (int b = 0; b < 8; ++b) table[static_cast<std::size_t>(b)] = static_cast<Elem>((code >> (7 - b)) & 1);
    Groupoid t = Groupoid::from_table(2, 3, table);
    if (is_associative(t)) out.push_back({"ternary2#" + std::to_string(code), std::move(t)});
  }
  // Random walk over associative binary tables on 2 and 3 elements: propose a change of one to three cells
  // (every other step starting from a uniform random table),
  // keep it when still associative, and add the derived ternary and 4-ary operations.
  std::mt19937_64 rng(20240611);
  std::set<std::vector<Elem>> seen;
  std::size_t kept = 0;
  for (std::size_t k : {2u, 3u}) {
    std::vector<Elem> cur(k * k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) cur[a * k + b] = static_cast<Elem>((a + b) % k);
    std::uniform_int_distribution<std::size_t> cell(0, cur.size() - 1);
    std::uniform_int_distribution<Elem> shift(1, static_cast<Elem>(k - 1));
    for (std::size_t step = 0; step < perturbations / 2; ++step) {
      std::vector<Elem> next = cur;
      if (step % 2 == 1)
        for (auto& v : next) v = static_cast<Elem>(rng() % k);
      const std::size_t changes = 1 + step % 3;
      for (std::size_t c = 0; c < changes; ++c) {
        const std::size_t at = cell(rng);
        next[at] = static_cast<Elem>((next[at] + shift(rng)) % k);
      }
      if (!binary_associative(k, next)) continue;
      cur = next;
      if (!seen.insert(cur).second) continue;
      for (int n : {3, 4}) {
        const std::uint64_t cells = ipow(k, static_cast<unsigned>(n));
        std::vector<Elem> table(cells);
        for (std::uint64_t idx = 0; idx < cells; ++idx) {
          std::uint64_t r = idx;
          Word args(static_cast<std::size_t>(n));
          for (std::size_t i = args.size(); i-- > 0;) {
            args[i] = static_cast<Elem>(r % k);
            r /= k;
          }
          Elem acc = args[0];
          for (std::size_t i = 1; i < args.size(); ++i) acc = cur[acc * k + args[i]];
          table[idx] = acc;
        }
        out.push_back({"walk#" + std::to_string(kept) + "(n=" + std::to_string(n) + ")",
                       Groupoid::from_table(k, n, std::move(table))});
      }
      ++kept;
    }
  }
  return out;
}

AuditReport equivalence_audit(const std::vector<CorpusEntry>& corpus) {
  AuditReport report;
  std::vector<std::optional<AuditRow>> rows(corpus.size());
  auto work = [&](std::size_t idx) {
    const Groupoid& g = corpus[idx].magma;
    if (!corpus[idx].known_associative && !is_associative(g)) return;
    AuditRow row;
    row.name = corpus[idx].name;
    row.arity = g.arity();
    row.size = g.size();
    row.is_group = !solvability_counterexample(g).has_value();
    row.agree = true;
    for (const auto& sys : axiom_systems(g.arity())) {
      const bool v = decide(g, sys.id);
      row.verdicts.emplace_back(sys.id, v);
      row.agree = row.agree && v == row.is_group;
    }
    rows[idx] = std::move(row);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(limits().threads, static_cast<unsigned>(corpus.size())));
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      try {
        for (std::size_t idx = t; idx < corpus.size(); idx += threads) work(idx);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& r : rows)
    if (r) {
      if (!r->agree) ++report.disagreements;
      report.rows.push_back(std::move(*r));
    }
  return report;
}

}  // namespace polyad

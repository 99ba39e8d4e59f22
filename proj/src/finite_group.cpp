#include "polyad/finite_group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace polyad {

BinaryGroup::BinaryGroup(std::size_t k, std::vector<Elem> table, std::vector<std::string> labels,
                         bool check_associativity)
    : k_(k), mul_(std::move(table)), labels_(std::move(labels)) {
  if (k_ == 0 || mul_.size() != k_ * k_) throw Error(ErrorCode::InvalidInput, "group table must be k*k");
  if (!labels_.empty() && labels_.size() != k_) throw Error(ErrorCode::InvalidInput, "label count mismatch");
  for (Elem v : mul_)
    if (v >= k_) throw Error(ErrorCode::InvalidInput, "table entry out of range");
  bool found = false;
  for (Elem e = 0; e < k_ && !found; ++e) {
    bool ok = true;
    for (Elem x = 0; x < k_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) {
      id_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorCode::InvalidInput, "no identity element");
  inv_.assign(k_, 0);
  for (Elem x = 0; x < k_; ++x) {
    bool got = false;
    for (Elem y = 0; y < k_; ++y)
      if (mul(x, y) == id_) {
        inv_[x] = y;
        got = true;
        break;
      }
    if (!got || mul(inv_[x], x) != id_) throw Error(ErrorCode::InvalidInput, "element without inverse");
  }
  if (!check_associativity) return;
  charge(static_cast<std::uint64_t>(k_) * k_ * k_, "binary associativity check");
  for (Elem a = 0; a < k_; ++a)
    for (Elem b = 0; b < k_; ++b)
      for (Elem c = 0; c < k_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw Error(ErrorCode::NotAssociative, "binary table is not associative");
}

std::string BinaryGroup::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_.at(a);
}

Elem BinaryGroup::pow(Elem a, long long e) const {
  Elem base = e < 0 ? inv(a) : a;
  unsigned long long m = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  m %= order(a);
  Elem r = id_;
  for (unsigned long long i = 0; i < m; ++i) r = mul(r, base);
  return r;
}

std::size_t BinaryGroup::order(Elem a) const {
  std::size_t m = 1;
  for (Elem x = a; x != id_; x = mul(x, a)) ++m;
  return m;
}

bool BinaryGroup::is_abelian() const {
  for (Elem a = 0; a < k_; ++a)
    for (Elem b = a + 1; b < k_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subset BinaryGroup::generate(const std::vector<Elem>& gens) const {
  Subset s(k_);
  std::deque<Elem> queue{id_};
  s.insert(id_);
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (Elem g : gens) {
      Elem y = mul(x, g);
      if (!s.contains(y)) {
        s.insert(y);
        queue.push_back(y);
      }
    }
  }
  return s;
}

bool BinaryGroup::is_subgroup(const Subset& s) const {
  if (s.universe() != k_ || s.empty()) return false;
  const auto m = s.members();
  for (Elem a : m)
    for (Elem b : m)
      if (!s.contains(mul(a, inv(b)))) return false;
  return true;
}

Subset BinaryGroup::conjugate_set(Elem g, const Subset& h) const {
  Subset r(k_);
  for (Elem x : h.members()) r.insert(conj(g, x));
  return r;
}

bool BinaryGroup::is_normal(const Subset& h) const { return normalizer(h).count() == k_; }

Subset BinaryGroup::normalizer(const Subset& h) const {
  Subset r(k_);
  for (Elem g = 0; g < k_; ++g)
    if (conjugate_set(g, h) == h) r.insert(g);
  return r;
}

Subset BinaryGroup::centralizer(const Subset& h) const {
  Subset r(k_);
  const auto m = h.members();
  for (Elem g = 0; g < k_; ++g) {
    bool ok = true;
    for (Elem x : m) ok = ok && mul(g, x) == mul(x, g);
    if (ok) r.insert(g);
  }
  return r;
}

Subset BinaryGroup::center() const { return centralizer(Subset::full(k_)); }

std::vector<Subset> BinaryGroup::right_cosets(const Subset& h) const {
  std::vector<Subset> out;
  Subset seen(k_);
  for (Elem x = 0; x < k_; ++x) {
    if (seen.contains(x)) continue;
    Subset c(k_);
    for (Elem y : h.members()) c.insert(mul(y, x));
    for (Elem y : c.members()) seen.insert(y);
    out.push_back(c);
  }
  return out;
}

std::vector<Subset> BinaryGroup::left_cosets(const Subset& h) const {
  std::vector<Subset> out;
  Subset seen(k_);
  for (Elem x = 0; x < k_; ++x) {
    if (seen.contains(x)) continue;
    Subset c(k_);
    for (Elem y : h.members()) c.insert(mul(x, y));
    for (Elem y : c.members()) seen.insert(y);
    out.push_back(c);
  }
  return out;
}

Subset BinaryGroup::commutator_subgroup(const Subset& a, const Subset& b) const {
  std::vector<Elem> gens;
  for (Elem x : a.members())
    for (Elem y : b.members()) gens.push_back(mul(mul(inv(x), inv(y)), mul(x, y)));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generate(gens);
}

bool BinaryGroup::is_cyclic() const {
  for (Elem a = 0; a < k_; ++a)
    if (order(a) == k_) return true;
  return false;
}

bool BinaryGroup::is_solvable() const {
  Subset cur = Subset::full(k_);
  while (cur.count() > 1) {
    Subset next = commutator_subgroup(cur, cur);
    if (next == cur) return false;
    cur = next;
  }
  return true;
}

std::size_t BinaryGroup::derived_length() const {
  Subset cur = Subset::full(k_);
  std::size_t len = 0;
  while (cur.count() > 1) {
    Subset next = commutator_subgroup(cur, cur);
    if (next == cur) break;
    cur = next;
    ++len;
  }
  return len;
}

bool BinaryGroup::is_nilpotent() const {
  const Subset all = Subset::full(k_);
  Subset cur = all;
  while (cur.count() > 1) {
    Subset next = commutator_subgroup(all, cur);
    if (next == cur) return false;
    cur = next;
  }
  return true;
}

std::vector<Subset> BinaryGroup::all_subgroups() const {
  std::set<Subset> found;
  std::vector<Subset> frontier{generate({})};
  found.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (const Subset& h : frontier) {
      auto gens = h.members();
      for (Elem x = 0; x < k_; ++x) {
        if (h.contains(x)) continue;
        auto g2 = gens;
        g2.push_back(x);
        Subset s = generate(g2);
        if (found.insert(s).second) next.push_back(s);
      }
    }
    frontier = std::move(next);
  }
  return {found.begin(), found.end()};
}

Subset BinaryGroup::primary_component(const std::vector<std::size_t>& primes) const {
  Subset r(k_);
  for (Elem a = 0; a < k_; ++a) {
    bool ok = true;
    for (std::size_t p : prime_factors(order(a)))
      ok = ok && std::find(primes.begin(), primes.end(), p) != primes.end();
    if (ok) r.insert(a);
  }
  return r;
}

bool BinaryGroup::is_automorphism(const std::vector<Elem>& f) const {
  if (f.size() != k_) return false;
  std::vector<char> hit(k_, 0);
  for (Elem v : f) {
    if (v >= k_ || hit[v]) return false;
    hit[v] = 1;
  }
  for (Elem a = 0; a < k_; ++a)
    for (Elem b = 0; b < k_; ++b)
      if (f[mul(a, b)] != mul(f[a], f[b])) return false;
  return true;
}

BinaryGroup BinaryGroup::subgroup(const Subset& s) const {
  if (!is_subgroup(s)) throw Error(ErrorCode::NotSubgroup, "subset is not a subgroup");
  const auto m = s.members();
  std::vector<Elem> pos(k_, 0);
  for (std::size_t i = 0; i < m.size(); ++i) pos[m[i]] = static_cast<Elem>(i);
  std::vector<Elem> t(m.size() * m.size());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) t[i * m.size() + j] = pos[mul(m[i], m[j])];
    labels.push_back(label(m[i]));
  }
  return BinaryGroup(m.size(), std::move(t), std::move(labels));
}

std::vector<std::size_t> order_profile(const BinaryGroup& g) {
  std::vector<std::size_t> out;
  for (Elem a = 0; a < g.size(); ++a) out.push_back(g.order(a));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Elem> generating_set(const BinaryGroup& g) {
  std::vector<Elem> by_order(g.size());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return g.order(a) > g.order(b); });
  std::vector<Elem> gens;
  Subset h = g.generate({});
  for (Elem x : by_order) {
    if (h.contains(x)) continue;
    gens.push_back(x);
    h = g.generate(gens);
  }
  return gens;
}

// Extends gens[i] -> images[i] to a map; returns false on inconsistency.
bool extend_map(const BinaryGroup& g, const BinaryGroup& h, const std::vector<Elem>& gens,
                const std::vector<Elem>& images, std::vector<Elem>& f) {
  constexpr Elem kUnset = ~Elem{0};
  f.assign(g.size(), kUnset);
  f[g.identity()] = h.identity();
  std::deque<Elem> queue{g.identity()};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g.mul(x, gens[i]);
      Elem fy = h.mul(f[x], images[i]);
      if (f[y] == kUnset) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return false;
      }
    }
  }
  return true;
}

void search_isomorphisms(const BinaryGroup& g, const BinaryGroup& h, std::size_t limit,
                         std::vector<std::vector<Elem>>& out) {
  if (g.size() != h.size() || order_profile(g) != order_profile(h)) return;
  const auto gens = generating_set(g);
  std::vector<std::vector<Elem>> cands(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < h.size(); ++y)
      if (h.order(y) == g.order(gens[i])) cands[i].push_back(y);
  std::vector<Elem> images(gens.size());
  std::vector<Elem> f;
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (out.size() >= limit) return;
    if (depth == gens.size()) {
      if (!extend_map(g, h, gens, images, f)) return;
      std::vector<char> hit(h.size(), 0);
      for (Elem v : f) {
        if (hit[v]) return;
        hit[v] = 1;
      }
      for (Elem a = 0; a < g.size(); ++a)
        for (Elem b = 0; b < g.size(); ++b)
          if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return;
      out.push_back(f);
      return;
    }
    for (Elem c : cands[depth]) {
      images[depth] = c;
      rec(depth + 1);
    }
  };
  rec(0);
}

}  // namespace

std::vector<std::vector<Elem>> BinaryGroup::automorphisms() const {
  std::vector<std::vector<Elem>> out;
  search_isomorphisms(*this, *this, ~std::size_t{0}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const BinaryGroup& g, const BinaryGroup& h) {
  std::vector<std::vector<Elem>> out;
  search_isomorphisms(g, h, 1, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

bool isomorphic(const BinaryGroup& g, const BinaryGroup& h) { return find_isomorphism(g, h).has_value(); }

BinaryGroup cyclic_group(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidInput, "cyclic group of order 0");
  std::vector<Elem> t(m * m);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) t[i * m + j] = static_cast<Elem>((i + j) % m);
    labels.push_back(std::to_string(i));
  }
  return BinaryGroup(m, std::move(t), std::move(labels));
}

BinaryGroup dihedral_group(std::size_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidInput, "dihedral group of order 0");
  const std::size_t k = 2 * m;
  std::vector<Elem> t(k * k);
  std::vector<std::string> labels;
  auto name = [](std::size_t s, std::size_t i) {
    std::string r = s ? "b" : "";
    if (i == 1) r += "c";
    if (i > 1) r += "c^" + std::to_string(i);
    return r.empty() ? std::string("1") : r;
  };
  for (std::size_t x = 0; x < k; ++x) {
    const std::size_t s1 = x / m, i1 = x % m;
    labels.push_back(name(s1, i1));
    for (std::size_t y = 0; y < k; ++y) {
      const std::size_t s2 = y / m, i2 = y % m;
      const std::size_t i = ((s2 ? (m - i1) % m : i1) + i2) % m;
      t[x * k + y] = static_cast<Elem>((s1 ^ s2) * m + i);
    }
  }
  return BinaryGroup(k, std::move(t), std::move(labels));
}

BinaryGroup quaternion_group() {
  std::vector<Elem> t(64);
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) {
      const unsigned j1 = x / 4, i1 = x % 4, j2 = y / 4, i2 = y % 4;
      const unsigned i = ((j2 ? (4 - i1) % 4 : i1) + i2 + ((j1 & j2) ? 2 : 0)) % 4;
      t[x * 8 + y] = (j1 ^ j2) * 4 + i;
    }
  return BinaryGroup(8, std::move(t), {"1", "a", "a^2", "a^3", "b", "ba", "ba^2", "ba^3"});
}

namespace {

std::vector<std::vector<int>> all_permutations(std::size_t q) {
  std::vector<int> p(q);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t factorial(std::size_t q) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= q; ++i) r *= i;
  return r;
}

}  // namespace

Elem permutation_index(const std::vector<int>& images) {
  // Lehmer code gives the lexicographic rank.
  const std::size_t q = images.size();
  Elem rank = 0;
  for (std::size_t i = 0; i < q; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < q; ++j)
      if (images[j] < images[i]) ++smaller;
    rank += static_cast<Elem>(smaller * factorial(q - 1 - i));
  }
  return rank;
}

std::vector<int> permutation_from_index(std::size_t q, Elem index) {
  std::vector<int> pool(q);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> out;
  std::size_t r = index;
  for (std::size_t i = 0; i < q; ++i) {
    const std::size_t f = factorial(q - 1 - i);
    out.push_back(pool[r / f]);
    pool.erase(pool.begin() + static_cast<long>(r / f));
    r %= f;
  }
  return out;
}

std::string cycle_notation(const std::vector<int>& images) {
  std::string out;
  std::vector<char> seen(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (seen[i] || images[i] == static_cast<int>(i)) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = static_cast<std::size_t>(images[j]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

std::vector<int> parse_cycles(const std::string& text, std::size_t q) {
  std::vector<int> images(q);
  std::iota(images.begin(), images.end(), 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) { throw Error(ErrorCode::ParseError, "cycle '" + text + "': " + why); };
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') fail("expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos) fail("missing ')'");
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::vector<int> cyc;
    int v;
    while (in >> v) {
      if (v < 1 || static_cast<std::size_t>(v) > q) fail("point out of range");
      cyc.push_back(v - 1);
    }
    if (!in.eof()) fail("non-numeric point");
    // Cycles compose left to right.
    std::vector<int> c(q);
    std::iota(c.begin(), c.end(), 0);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (std::count(cyc.begin(), cyc.end(), cyc[i]) != 1) fail("repeated point");
      c[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    for (auto& x : images) x = c[x];
    pos = close + 1;
  }
  return images;
}

BinaryGroup symmetric_group(std::size_t q) {
  if (q == 0) throw Error(ErrorCode::InvalidInput, "symmetric group on 0 points");
  const auto perms = all_permutations(q);
  const std::size_t k = perms.size();
  std::vector<Elem> t(k * k);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < k; ++x) {
    labels.push_back(cycle_notation(perms[x]));
    for (std::size_t y = 0; y < k; ++y) {
      std::vector<int> c(q);
      for (std::size_t i = 0; i < q; ++i) c[i] = perms[y][static_cast<std::size_t>(perms[x][i])];
      t[x * k + y] = permutation_index(c);
    }
  }
  labels[0] = "e";
  return BinaryGroup(k, std::move(t), std::move(labels));
}

Subset alternating_subset(std::size_t q) {
  const auto perms = all_permutations(q);
  Subset s(perms.size());
  for (std::size_t x = 0; x < perms.size(); ++x) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = i + 1; j < q; ++j)
        if (perms[x][i] > perms[x][j]) ++inversions;
    if (inversions % 2 == 0) s.insert(static_cast<Elem>(x));
  }
  return s;
}

BinaryGroup direct_product(const BinaryGroup& a, const BinaryGroup& b) {
  const std::size_t ka = a.size(), kb = b.size(), k = ka * kb;
  std::vector<Elem> t(k * k);
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < k; ++x) {
    labels.push_back("(" + a.label(static_cast<Elem>(x / kb)) + "," + b.label(static_cast<Elem>(x % kb)) + ")");
    for (std::size_t y = 0; y < k; ++y)
      t[x * k + y] = static_cast<Elem>(a.mul(static_cast<Elem>(x / kb), static_cast<Elem>(y / kb)) * kb +
                                       b.mul(static_cast<Elem>(x % kb), static_cast<Elem>(y % kb)));
  }
  return BinaryGroup(k, std::move(t), std::move(labels));
}

std::vector<std::size_t> prime_factors(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) out.push_back(m);
  return out;
}

std::size_t gcd(std::size_t a, std::size_t b) { return std::gcd(a, b); }

}  // namespace polyad

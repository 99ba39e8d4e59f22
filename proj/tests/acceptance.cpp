// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// All checks are exact; the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#include "polyad/axioms.hpp"
#include "polyad/permutations.hpp"
#include "polyad/post_cover.hpp"
#include "polyad/retract.hpp"
#include "polyad/structure.hpp"
#include "polyad/subgroups.hpp"
#include "support.hpp"

using namespace polyad;

namespace {

// Collects the first few mismatches of a criterion.
struct Failures {
  std::ostringstream text;
  int count = 0;
  void operator()(bool ok, const std::string& what) {
    if (ok) return;
    if (count++ < 3) text << (count > 1 ? "; " : "") << what;
  }
  std::string str() const { return count ? text.str() : std::string(); }
};

std::vector<Elem> times(std::size_t m, std::size_t u) {
  std::vector<Elem> out(m);
  for (Elem x = 0; x < m; ++x) out[x] = static_cast<Elem>(u * x % m);
  return out;
}

Subset by_labels(const NaryGroup& g, std::initializer_list<const char*> ls) {
  Subset s(g.size());
  for (const char* l : ls) s.insert(g.groupoid().parse_element(l));
  return s;
}

std::string show(const Subset& s) {
  std::string out = "{";
  for (Elem x : s.members()) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

std::string criterion_skew() {
  Failures f;
  const NaryGroup r5 = named_example("Rusakov5");
  const std::vector<std::pair<const char*, const char*>> want = {
      {"1", "a^2"}, {"a", "a^3"},    {"a^2", "1"},  {"a^3", "a"},
      {"b", "ba^2"}, {"ba", "ba^3"}, {"ba^2", "b"}, {"ba^3", "ba"}};
  for (const auto& [x, s] : want) {
    const std::string got = r5.label(r5.skew(r5.groupoid().parse_element(x)));
    f(got == s, std::string("skew(") + x + ") = " + got);
  }
  return f.str();
}

std::string criterion_cover() {
  Failures f;
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    const PostCover& c = g.cover();
    const std::size_t n = static_cast<std::size_t>(g.arity());
    f(c.order() == g.size() * (n - 1), name + ": |A*| = " + std::to_string(c.order()));
    const BinaryGroup star = c.group();
    const Subset a0 = c.a0();
    f(star.is_normal(a0), name + ": A0 not normal");
    f(star.right_cosets(a0).size() == n - 1, name + ": index of A0");
    // A*/A0 is generated by the class of any level-1 element
    const Elem x = c.theta(0);
    Elem p = x;
    std::size_t j = 1;
    while (!a0.contains(p)) {
      p = star.mul(p, x);
      ++j;
    }
    f(j == n - 1, name + ": A*/A0 not cyclic of order n-1");
  }
  const NaryGroup t3 = named_example("T3");
  f(isomorphic(t3.cover().group(), symmetric_group(3)), "T3: A* is not S3");
  f(isomorphic(t3.cover().group().subgroup(t3.cover().a0()), symmetric_group(3).subgroup(alternating_subset(3))),
    "T3: A0 is not A3");
  return f.str();
}

std::string criterion_hossu() {
  Failures f;
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    if (oracle::ipow(g.size(), static_cast<std::size_t>(g.arity())) > 1000000) continue;
    for (Elem a = 0; a < g.size(); ++a) {
      const auto rep = verify_hossu(g, retract_at(g, a));
      f(rep.ok, name + " at " + g.label(a) + ": " + rep.failure);
    }
  }
  return f.str();
}

std::string criterion_lagrange() {
  Failures f;
  const NaryGroup v6 = named_example("V6");
  std::vector<Subset> proper;
  for (const auto& s : all_subgroups(v6))
    if (s.count() > 1 && s.count() < 6) proper.push_back(s);
  std::vector<Subset> want = {Subset::of(6, {0, 3}), Subset::of(6, {1, 4}), Subset::of(6, {2, 5}),
                              Subset::of(6, {0, 2, 4}), Subset::of(6, {1, 3, 5})};
  std::sort(want.begin(), want.end());
  std::sort(proper.begin(), proper.end());
  f(proper == want, "V6 nontrivial proper subgroups differ");
  for (std::size_t k = 1; k <= 12; ++k) {
    const NaryGroup v = named_example("Vn(" + std::to_string(k) + ")");
    const auto subs = all_subgroups(v);
    for (std::size_t d = 1; d <= k; ++d) {
      Subset cover(k);
      std::size_t count = 0;
      bool disjoint = true;
      for (const auto& s : subs) {
        if (s.count() != d) continue;
        ++count;
        disjoint = disjoint && (cover & s).empty();
        cover = cover | s;
      }
      if (k % d == 0) {
        f(count == k / d && disjoint && cover == Subset::full(k),
          "Vn(" + std::to_string(k) + ") order " + std::to_string(d) + ": " + std::to_string(count));
      } else {
        f(count == 0, "Vn(" + std::to_string(k) + ") has a subgroup of order " + std::to_string(d));
      }
    }
    for (const auto& s : subs) f(k % s.count() == 0 && cosets(v, s, Side::Left).cosets.size() * s.count() == k, "Lagrange");
  }
  return f.str();
}

std::string criterion_cyclic() {
  Failures f;
  for (std::size_t g = 1; g <= 30; ++g)
    for (int n = 3; n <= 6; ++n) {
      const std::string name = "Zg_cyclic(" + std::to_string(g) + "," + std::to_string(n) + ")";
      const NaryGroup z = named_example(name);
      const std::size_t un = static_cast<std::size_t>(n);
      Word w(un);
      for (Elem k = 0; k < g; ++k) {
        // brute force: iterate x -> [x k^{n-1}] until it returns
        std::size_t m = 0;
        Elem x = k;
        do {
          w.assign(un, k);
          w[0] = x;
          x = z.op(w);
          ++m;
        } while (x != k);
        const std::size_t formula = g / std::gcd(static_cast<std::size_t>(k) * (un - 1) + 1, g);
        f(m == formula, name + " element " + std::to_string(k) + ": order " + std::to_string(m));
      }
      std::vector<std::size_t> count(g + 1, 0);
      for (const auto& s : all_subgroups(z)) ++count[s.count()];
      for (std::size_t gamma = 1; gamma <= g; ++gamma) {
        const bool exists = g % gamma == 0 && std::gcd(g / gamma, un - 1) == 1;
        f(count[gamma] == (exists ? 1u : 0u), name + ": " + std::to_string(count[gamma]) + " subgroups of order " +
                                                 std::to_string(gamma));
      }
      f(idempotents(z).empty() == (std::gcd(g, un - 1) != 1), name + ": idempotent existence");
    }
  return f.str();
}

std::string criterion_axioms() {
  Failures f;
  const auto rep = equivalence_audit(axiom_corpus(1000));
  f(rep.disagreements == 0, std::to_string(rep.disagreements) + " audit disagreements");
  for (std::size_t k = 1; k <= 3; ++k)
    for (int n = 3; n <= 4; ++n)
      for (bool last : {true, false}) {
        const Groupoid p = projection_magma(k, n, last);
        if (k == 1) continue;
        f(!is_group(p), "projection magma is a group");
        for (const auto& s : axiom_systems(n)) f(!check_axiom(p, s.id), "projection satisfies " + s.id);
      }
  for (int n = 3; n <= 4; ++n) {
    const NaryGroup c = derived(cyclic_group(static_cast<std::size_t>(n - 1)), n);
    f(!check_axiom(c.groupoid(), "REPEATED"), "repeated-unknown equations solvable over C_{n-1}");
    for (const auto& s : axiom_systems(n)) f(check_axiom(c.groupoid(), s.id), "C_{n-1} fails " + s.id);
  }
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    if (g.size() > 3 || g.arity() > 4) continue;
    for (const auto& s : axiom_systems(g.arity())) f(check_axiom(g.groupoid(), s.id), name + " fails " + s.id);
  }
  // |A|^{i-1} solutions, over every tail and right-hand side
  for (const char* name : {"T3", "Zg_cyclic(3,4)", "Zg_cyclic(2,3)"}) {
    const NaryGroup g = named_example(name);
    const std::size_t n = static_cast<std::size_t>(g.arity());
    for (std::size_t i = 1; i < n; ++i)
      oracle::tuples(g.size(), n - i, [&](const Word& tail) {
        for (Elem b = 0; b < g.size(); ++b)
          f(count_solutions(g.groupoid(), static_cast<int>(i), tail, b) == oracle::ipow(g.size(), i - 1),
            std::string(name) + ": solution count");
      });
  }
  return f.str();
}

std::string criterion_units() {
  Failures f;
  f(idempotents(named_example("derived(S3,3)")).count() == 4, "|I(S3)| != 4");
  for (std::size_t n = 3; n <= 8; ++n)
    f(idempotents(derived(dihedral_group(n), 3)).count() == (n % 2 ? n + 1 : n + 2),
      "|I(D" + std::to_string(n) + ")|");
  f(units(derived(cyclic_group(6), 4)) == Subset::of(6, {0, 2, 4}), "E(Z6, 4-ary) != {0,2,4}");
  f(units(named_example("RxR")).count() == 4, "|E(RxR)| != 4");
  f(idempotents(named_example("Rusakov5")).empty(), "I(Rusakov5) nonempty");
  std::vector<NaryGroup> groups;
  for (const auto& name : catalog_names()) groups.push_back(named_example(name));
  groups.push_back(named_example("RxR"));
  groups.push_back(derived(cyclic_group(6), 4));
  groups.push_back(derived(dihedral_group(4), 3));
  groups.push_back(derived(direct_product(cyclic_group(2), cyclic_group(2)), 3));
  for (const auto& g : groups) {
    const Subset e = units(g);
    f(e == (idempotents(g) & center(g)), "E != I cap Z");
    if (e.empty()) continue;
    f(is_subgroup(g, e), "E not a subgroup");
    f(e.subset_of(center(g)), "E outside Z");
    if (g.size() > 8) continue;
    for (const auto& aut : oracle::automorphisms(oracle::Table::of(g))) {
      Subset img(g.size());
      for (Elem x : e.members()) img.insert(aut[x]);
      f(img == e, "E moved by an automorphism");
    }
  }
  return f.str();
}

std::string criterion_normality() {
  Failures f;
  const NaryGroup s4 = named_example("derived(S4,3)");
  const Subset v4 = by_labels(s4, {"e", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"});
  f(is_invariant(s4, v4) && !is_normal(s4, v4), "S4 with V4");
  const NaryGroup d6 = named_example("D6_ternary");
  const Subset bb = by_labels(d6, {"b", "bc^3"});
  f(is_semi_invariant(d6, bb) && !is_normal(d6, bb) && !is_invariant(d6, bb), "D6 with {b, bc^3}");
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    for (const auto& b : all_subgroups(g)) {
      const auto rep = normality_implications_audit(g, b);
      f(rep.violations.empty(), name + " " + show(b) + ": " + (rep.violations.empty() ? "" : rep.violations[0]));
    }
  }
  return f.str();
}

std::string criterion_transfer() {
  Failures f;
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    if (g.size() > 8) continue;
    for (const auto& b : all_subgroups(g)) {
      const auto idx = index_correspondence(g, b);
      f(idx.consistent(), name + " " + show(b) + ": indices " + std::to_string(idx.nary) + "/" +
                              std::to_string(idx.zero) + "/" + std::to_string(idx.star));
      if (is_invariant(g, b)) f(quotient_isomorphism(g, b).isomorphism(), name + " " + show(b) + ": quotients");
    }
  }
  return f.str();
}

std::string criterion_laws() {
  Failures f;
  const std::vector<NaryGroup> groups = {
      named_example("V6"),          named_example("derived(S3,3)"), named_example("D6_ternary"),
      named_example("Rusakov5"),    named_example("B3_5ary"),       derived(quaternion_group(), 5),
      derived(symmetric_group(3), 7), gluskin(cyclic_group(7), times(7, 2), 0, 7),
      named_example("T3")};
  for (const auto& g : groups) {
    const std::string tag = std::to_string(g.arity()) + "-ary of order " + std::to_string(g.size());
    const auto ca = center_audit(g, Subset::full(g.size()));
    f(ca.violations.empty(), tag + ": " + (ca.violations.empty() ? "" : ca.violations[0]));
    for (const auto& b : all_subgroups(g)) {
      const auto bc = center_audit(g, b);
      f(bc.violations.empty(), tag + " centralizer of " + show(b));
      const auto rep = normalizer_audit(g, b);
      f(rep.gcd_law, tag + " " + show(b) + ": normalizer gcd law");
      f(rep.retract_criterion, tag + " " + show(b) + ": retract normalizer");
      f(rep.cover0_criterion, tag + " " + show(b) + ": A0 normalizer");
      f(rep.ok(), tag + " " + show(b) + ": normalizer audit");
    }
  }
  return f.str();
}

std::string criterion_permutations() {
  Failures f;
  for (std::size_t q = 1; q <= 3; ++q)
    for (int n = 2; n <= 4; ++n) {
      const auto sigma = cyclic_slots(n);
      const NaryGroup g = permutation_group(q, n, sigma, natural_arity(sigma));
      const std::size_t fq = oracle::factorial(q);
      f(g.size() == oracle::ipow(fq, static_cast<std::size_t>(n - 1)), "order");
      f(idempotents(g).count() == oracle::ipow(fq, static_cast<std::size_t>(n - 2)), "idempotent count");
    }
  gen::Source s(20240611);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t q = 1 + s.below(3);
    const int n = s.between(2, 4);
    const std::size_t m = 2 + s.below(4);
    std::vector<NaryPermutation> fs(m);
    for (auto& p : fs) {
      p.sigma.resize(static_cast<std::size_t>(n - 1));
      std::iota(p.sigma.begin(), p.sigma.end(), 0);
      std::shuffle(p.sigma.begin(), p.sigma.end(), s.rng);
      for (int j = 0; j < n - 1; ++j) {
        std::vector<int> b(q);
        std::iota(b.begin(), b.end(), 0);
        std::shuffle(b.begin(), b.end(), s.rng);
        p.maps.push_back(b);
      }
    }
    const std::size_t i = s.below(m), len = 1 + s.below(m - i);
    std::vector<NaryPermutation> grouped(fs.begin(), fs.begin() + static_cast<long>(i));
    grouped.push_back(compose({fs.begin() + static_cast<long>(i), fs.begin() + static_cast<long>(i + len)}));
    grouped.insert(grouped.end(), fs.begin() + static_cast<long>(i + len), fs.end());
    f(compose(grouped) == compose(fs), "mixed associativity");
  }
  for (const auto& name : catalog_names()) {
    const NaryGroup g = named_example(name);
    if (g.size() > 6) continue;
    const auto e = right_regular_embedding(g);
    f(e.injective && e.homomorphic, name + ": right-regular embedding");
  }
  return f.str();
}

std::string criterion_sylow() {
  Failures f;
  const NaryGroup g = idempotent_from_splitting(cyclic_group(6), times(6, 5), 3);
  for (Elem x = 0; x < 6; ++x) f(g.op(Word{x, x, x}) == x, "not idempotent");
  const auto part = idempotent_sylow_partition(g, 2);
  f(part.parts.size() == 3, std::to_string(part.parts.size()) + " Sylow 2-subgroups");
  Subset cover(6);
  for (const auto& p : part.parts) {
    f(p.count() == 2 && (cover & p).empty() && is_semi_invariant(g, p), "part " + show(p));
    cover = cover | p;
  }
  f(cover == Subset::full(6), "parts do not cover");
  const auto subs = all_subgroups(g);
  for (Elem a = 0; a < 6; ++a) {
    std::vector<Subset> two, three;
    for (const auto& s : subs) {
      if (!s.contains(a)) continue;
      if (s.count() == 2) two.push_back(s);
      if (s.count() == 3) three.push_back(s);
    }
    f(two.size() == 1 && three.size() == 1, "Sylow factors through " + std::to_string(a) + " not unique");
    if (two.size() == 1 && three.size() == 1)
      f(a_direct_decomposition(g, a, {two[0], three[0]}), "no a-direct decomposition at " + std::to_string(a));
  }
  return f.str();
}

std::string criterion_solvability() {
  Failures f;
  const NaryGroup t3 = named_example("T3");
  const auto c3 = classify_solvability(t3);
  f(c3.semisolvable && c3.seminilpotent, "T3");
  const NaryGroup t5 = named_example("T5");
  f(t5.size() == 60, "T5 order");
  const auto c5 = classify_solvability(t5);
  f(!c5.semisolvable && !c5.seminilpotent, "T5 classified solvable");
  f(isomorphic(retract_at(t5, 0).group, symmetric_group(5).subgroup(alternating_subset(5))), "T5 retract is not A5");
  return f.str();
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  limits().threads = std::max(1u, std::thread::hardware_concurrency());
  const std::vector<Criterion> all = {
      {1, "skew table of the 5-ary quaternion group", 1, criterion_skew},
      {2, "covering group sizes and A*/A0", 10, criterion_cover},
      {3, "Hossu reconstruction on the catalog", 30, criterion_hossu},
      {4, "Lagrange and reflection-group subgroup counts", 10, criterion_lagrange},
      {5, "cyclic order formula, subgroups and idempotents", 30, criterion_cyclic},
      {6, "axiom-system equivalence audit and solution counts", 60, criterion_axioms},
      {7, "units and idempotents", 10, criterion_units},
      {8, "normality examples and implication lattice", 60, criterion_normality},
      {9, "index and quotient transfer to the covering groups", 30, criterion_transfer},
      {10, "normalizer and center laws", 60, criterion_laws},
      {11, "n-ary permutation groups", 60, criterion_permutations},
      {12, "idempotent Sylow partition", 10, criterion_sylow},
      {13, "semisolvability", 30, criterion_solvability},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string why;
    try {
      why = c.run();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (why.empty() && secs > c.limit_s) why = "over the time limit";
    failed += !why.empty();
    std::printf("%s %2d %s (%.2f s, limit %.0f s)%s%s\n", why.empty() ? "PASS" : "FAIL", c.id, c.title, secs,
                c.limit_s, why.empty() ? "" : ": ", why.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

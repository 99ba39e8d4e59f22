#include "polyad/constructions.hpp"

#include <regex>

#include "polyad/core.hpp"
#include "polyad/permutations.hpp"

namespace polyad {

namespace {

std::vector<std::string> base_labels(const BinaryGroup& g) {
  std::vector<std::string> out;
  for (Elem a = 0; a < g.size(); ++a) out.push_back(g.label(a));
  return out;
}

NaryGroup attach(Groupoid gr, std::shared_ptr<Recipe> r, NaryGroup::Check check) {
  const Backing kind = r->kind;
  gr.set_recipe(kind, std::move(r));
  return NaryGroup(std::move(gr), check);
}

void check_arity(int n) {
  if (n < 2) throw Error(ErrorCode::ArityTooSmall, "arity must be at least 2");
}

}  // namespace

NaryGroup from_table(std::size_t k, int n, std::vector<Elem> table, std::vector<std::string> labels) {
  auto r = std::make_shared<Recipe>();
  r->kind = Backing::Table;
  r->arity = n;
  r->labels = labels;
  r->table = table;
  return attach(Groupoid::from_table(k, n, std::move(table), std::move(labels)), r, NaryGroup::Check::Full);
}

NaryGroup derived(const BinaryGroup& g, int n, Elem c) {
  check_arity(n);
  if (c >= g.size() || !g.center().contains(c))
    throw Error(ErrorCode::NotCentral, "element " + g.label(c < g.size() ? c : 0) + " is not central");
  auto base = std::make_shared<const BinaryGroup>(g);
  auto r = std::make_shared<Recipe>();
  r->kind = Backing::Derived;
  r->arity = n;
  r->base = base;
  r->central = c;
  Groupoid gr(g.size(), n, [base, n, c](const Elem* a) {
    Elem acc = a[0];
    for (int i = 1; i < n; ++i) acc = base->mul(acc, a[i]);
    return base->mul(acc, c);
  }, base_labels(g));
  return attach(std::move(gr), r, NaryGroup::Check::Auto);
}

NaryGroup derived(const BinaryGroup& g, int n) { return derived(g, n, g.identity()); }

NaryGroup gluskin(const BinaryGroup& g, const std::vector<Elem>& beta, Elem d, int n) {
  check_arity(n);
  if (!g.is_automorphism(beta)) throw Error(ErrorCode::NotAutomorphism, "beta is not an automorphism");
  if (d >= g.size() || beta[d] != d) throw Error(ErrorCode::FixedPointViolation, "d is not fixed by beta");
  for (Elem x = 0; x < g.size(); ++x) {
    Elem y = x;
    for (int i = 0; i < n - 1; ++i) y = beta[y];
    if (g.mul(d, x) != g.mul(y, d))
      throw Error(ErrorCode::TwistViolation, "d x != x^{beta^{n-1}} d at x = " + g.label(x));
  }
  auto base = std::make_shared<const BinaryGroup>(g);
  // pw[i] = beta^i as a table.
  auto pw = std::make_shared<std::vector<std::vector<Elem>>>();
  std::vector<Elem> cur(g.size());
  for (Elem x = 0; x < g.size(); ++x) cur[x] = x;
  for (int i = 0; i < n; ++i) {
    pw->push_back(cur);
    for (auto& v : cur) v = beta[v];
  }
  auto r = std::make_shared<Recipe>();
  r->kind = Backing::Gluskin;
  r->arity = n;
  r->base = base;
  r->beta = beta;
  r->d = d;
  Groupoid gr(g.size(), n, [base, pw, n, d](const Elem* a) {
    Elem acc = a[0];
    for (int i = 1; i < n; ++i) acc = base->mul(acc, (*pw)[static_cast<std::size_t>(i)][a[i]]);
    return base->mul(acc, d);
  }, base_labels(g));
  return attach(std::move(gr), r, NaryGroup::Check::Auto);
}

NaryGroup coset_construction(const BinaryGroup& g, const Subset& h, Elem gen, int n) {
  check_arity(n);
  if (!g.is_subgroup(h)) throw Error(ErrorCode::NotSubgroup, "H is not a subgroup");
  if (!g.is_normal(h)) throw Error(ErrorCode::NotNormal, "H is not normal in G");
  if (gen >= g.size()) throw Error(ErrorCode::InvalidInput, "generator out of range");
  // Order of gH in G/H, and whether its powers cover G.
  std::size_t ord = 1;
  Elem p = gen;
  while (!h.contains(p)) {
    p = g.mul(p, gen);
    ++ord;
  }
  const std::size_t index = g.size() / h.count();
  if (ord != index) throw Error(ErrorCode::NotCyclicQuotient, "gH does not generate G/H");
  if ((static_cast<std::size_t>(n) - 1) % index != 0)
    throw Error(ErrorCode::OrderMismatch, "|G/H| = " + std::to_string(index) + " does not divide n-1");
  const auto members = h.members();
  auto base = std::make_shared<const BinaryGroup>(g);
  auto carrier = std::make_shared<std::vector<Elem>>();
  std::vector<Elem> pos(g.size(), ~Elem{0});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem x = g.mul(gen, members[i]);
    carrier->push_back(x);
    pos[x] = static_cast<Elem>(i);
    labels.push_back(g.label(x));
  }
  auto where = std::make_shared<std::vector<Elem>>(std::move(pos));
  auto r = std::make_shared<Recipe>();
  r->kind = Backing::Coset;
  r->arity = n;
  r->base = base;
  r->subgroup = members;
  r->generator = gen;
  Groupoid gr(members.size(), n, [base, carrier, where, n](const Elem* a) {
    Elem acc = (*carrier)[a[0]];
    for (int i = 1; i < n; ++i) acc = base->mul(acc, (*carrier)[a[i]]);
    return (*where)[acc];
  }, std::move(labels));
  return attach(std::move(gr), r, NaryGroup::Check::Auto);
}

NaryGroup direct_product(const std::vector<NaryGroup>& gs) {
  if (gs.empty()) throw Error(ErrorCode::InvalidInput, "empty product");
  const int n = gs.front().arity();
  std::size_t k = 1;
  for (const auto& g : gs) {
    if (g.arity() != n) throw Error(ErrorCode::ArityMismatch, "factors have different arities");
    k *= g.size();
  }
  auto parts = std::make_shared<std::vector<NaryGroup>>(gs);
  std::vector<std::size_t> radix;
  for (const auto& g : gs) radix.push_back(g.size());
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < k; ++x) {
    std::size_t r = x;
    std::vector<std::string> comp(gs.size());
    for (std::size_t i = gs.size(); i-- > 0;) {
      comp[i] = gs[i].label(static_cast<Elem>(r % radix[i]));
      r /= radix[i];
    }
    std::string s = "(";
    for (std::size_t i = 0; i < comp.size(); ++i) s += (i ? "," : "") + comp[i];
    labels.push_back(s + ")");
  }
  auto r = std::make_shared<Recipe>();
  r->kind = Backing::Product;
  r->arity = n;
  for (const auto& g : gs) r->children.push_back(g.groupoid().recipe());
  Groupoid gr(k, n, [parts, radix, n](const Elem* a) {
    std::vector<Elem> comp(static_cast<std::size_t>(n));
    Elem out = 0;
    std::size_t scale = 1;
    for (std::size_t i = radix.size(); i-- > 0;) {
      std::size_t div = scale;
      for (int j = 0; j < n; ++j) comp[static_cast<std::size_t>(j)] = static_cast<Elem>((a[j] / div) % radix[i]);
      out += static_cast<Elem>((*parts)[i].op(comp.data()) * scale);
      scale *= radix[i];
    }
    return out;
  }, std::move(labels));
  // Factors are groups, so the product is one.
  return attach(std::move(gr), r, NaryGroup::Check::Auto);
}

NaryGroup idempotent_from_splitting(const BinaryGroup& g, const std::vector<Elem>& beta, int n) {
  check_arity(n);
  if (!g.is_automorphism(beta)) throw Error(ErrorCode::NotSplitting, "beta is not an automorphism");
  for (Elem b = 0; b < g.size(); ++b) {
    Elem y = b, acc = g.identity();
    for (int i = 0; i < n - 1; ++i) {
      acc = g.mul(acc, y);
      y = beta[y];
    }
    if (y != b) throw Error(ErrorCode::NotSplitting, "beta^{n-1} moves b = " + g.label(b));
    if (acc != g.identity()) throw Error(ErrorCode::NotSplitting, "b b^beta ... != e at b = " + g.label(b));
  }
  return gluskin(g, beta, g.identity(), n);
}

NaryGroup realize(const Recipe& r, NaryGroup::Check check) {
  switch (r.kind) {
    case Backing::Table: {
      std::size_t k = 0;
      while (ipow(k + 1, static_cast<unsigned>(r.arity)) <= r.table.size()) ++k;
      if (ipow(k, static_cast<unsigned>(r.arity)) != r.table.size())
        throw Error(ErrorCode::InvalidInput, "table length is not a power of the arity");
      auto copy = std::make_shared<Recipe>(r);
      // a raw table carries no construction guarantee
      return attach(Groupoid::from_table(k, r.arity, r.table, r.labels), copy, NaryGroup::Check::Full);
    }
    case Backing::Derived: return derived(*r.base, r.arity, r.central);
    case Backing::Gluskin: return gluskin(*r.base, r.beta, r.d, r.arity);
    case Backing::Coset:
      return coset_construction(*r.base, Subset::of(r.base->size(), r.subgroup), r.generator, r.arity);
    case Backing::Product: {
      std::vector<NaryGroup> parts;
      for (const auto& c : r.children) parts.push_back(realize(*c, check));
      return direct_product(parts);
    }
    case Backing::Permutation: return permutation_group(r.q, r.positions, r.sigma, r.arity);
  }
  throw Error(ErrorCode::InvalidInput, "unknown recipe kind");
}

NaryGroup named_example(const std::string& name) {
  std::smatch m;
  static const std::regex kT(R"(T(\d+))"), kV(R"(V(?:n\()?(\d+)\)?)"), kDer(R"(derived\(S(\d+),\s*(\d+)\))"),
      kZg(R"(Zg_cyclic\((\d+),\s*(\d+)\))");
  auto num = [&](std::size_t i) { return static_cast<std::size_t>(std::stoul(m[i].str())); };
  if (std::regex_match(name, m, kT)) {
    const std::size_t q = num(1);
    if (q < 2 || q > 6) throw Error(ErrorCode::UnknownName, name + ": q must be in 2..6");
    const BinaryGroup s = symmetric_group(q);
    return coset_construction(s, alternating_subset(q), permutation_index(parse_cycles("(1 2)", q)), 3);
  }
  if (name == "Rusakov5") {
    const BinaryGroup q8 = quaternion_group();
    return derived(q8, 5, 2);
  }
  if (std::regex_match(name, m, kV)) {
    const std::size_t k = num(1);
    if (k < 1 || k > 64) throw Error(ErrorCode::UnknownName, name + ": k must be in 1..64");
    const BinaryGroup d = dihedral_group(k);
    std::vector<Elem> rot;
    for (std::size_t i = 0; i < k; ++i) rot.push_back(static_cast<Elem>(i));
    NaryGroup out = coset_construction(d, Subset::of(d.size(), rot), static_cast<Elem>(k), 3);
    return out;
  }
  if (std::regex_match(name, m, kDer)) {
    const std::size_t q = num(1), n = num(2);
    if (q < 1 || q > 5 || n < 2 || n > 8) throw Error(ErrorCode::UnknownName, name + ": out of range");
    return derived(symmetric_group(q), static_cast<int>(n));
  }
  if (name == "D6_ternary") return derived(dihedral_group(6), 3);
  if (std::regex_match(name, m, kZg)) {
    const std::size_t g = num(1), n = num(2);
    if (g < 1 || g > 4096 || n < 2 || n > 16) throw Error(ErrorCode::UnknownName, name + ": out of range");
    return derived(cyclic_group(g), static_cast<int>(n), static_cast<Elem>(1 % g));
  }
  if (name == "B3_5ary") {
    const BinaryGroup s = symmetric_group(3);
    return coset_construction(s, alternating_subset(3), permutation_index(parse_cycles("(1 2)", 3)), 5);
  }
  if (name == "Z6_alt") {
    const BinaryGroup z = cyclic_group(6);
    std::vector<Elem> neg;
    for (Elem x = 0; x < 6; ++x) neg.push_back((6 - x) % 6);
    return gluskin(z, neg, 0, 3);
  }
  if (name == "RxR") {
    const NaryGroup r = derived(quaternion_group(), 3);
    return direct_product({r, r});
  }
  throw Error(ErrorCode::UnknownName, "no example named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"T3", "Rusakov5", "V6", "derived(S3,3)", "derived(S4,3)", "D6_ternary",
          "Zg_cyclic(6,4)", "Zg_cyclic(7,3)", "B3_5ary", "Z6_alt"};
}

}  // namespace polyad

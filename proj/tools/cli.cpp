#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "polyad/axioms.hpp"
#include "polyad/constructions.hpp"
#include "polyad/core.hpp"
#include "polyad/permutations.hpp"
#include "polyad/pgf.hpp"
#include "polyad/post_cover.hpp"
#include "polyad/retract.hpp"
#include "polyad/structure.hpp"
#include "polyad/subgroups.hpp"

namespace polyad {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::uint64_t eval_budget = Limits{}.eval_budget;
  std::uint64_t table_cap = Limits{}.table_cap;
  unsigned threads = 0;

  std::string file = "-";
  std::vector<std::string> files;
  std::string element;
  std::string subset;
  std::string other;
  bool generate = false;
  long long exponent = 1;
  unsigned depth = 1;
  int m = 0;
  std::string kind = "standard";
  std::vector<std::string> sigmas;
  std::string side = "right";
  std::string anchor;
  std::string parts;
  std::string blocks;
  bool sylow = false;
  std::size_t idempotent_sylow = 0;
  std::size_t units_partition = 0;
  std::vector<std::string> systems;
  bool all_systems = false;
  bool audit = false;
  bool list = false;
  int arity = 0;
  std::size_t perturbations = 1000;
  std::size_t q = 0;
  int positions = 0;
  std::string sigma;
  std::string name;
  std::string solve_args;
  std::string rhs;
  std::string through;
  bool as_table = false;
};

class Session {
 public:
  Session(const Options& o, std::istream& in, std::ostream& out) : o_(o), in_(in), out_(out) {}

  std::string read(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw Error(ErrorCode::InvalidInput, "standard input can be read only once");
      stdin_used_ = true;
      std::ostringstream ss;
      ss << in_.rdbuf();
      return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  NaryGroup group(const std::string& path) { return load_pgf(read(path), NaryGroup::Check::Auto); }

  // Json record with the common header fields.
  Json record(const std::string& command, const NaryGroup* g) const {
    Json j;
    j["command"] = command;
    if (g) {
      j["arity"] = g->arity();
      j["size"] = g->size();
      Json labels = Json::array();
      for (Elem a = 0; a < g->size(); ++a) labels.push_back(g->label(a));
      j["labels"] = labels;
    }
    return j;
  }

  void emit(const Json& j, const std::string& text) {
    if (o_.json)
      out_ << j.dump(2) << '\n';
    else
      out_ << text;
  }

  const Options& opts() const { return o_; }

 private:
  const Options& o_;
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(trim(cur));
  return out;
}

Elem element(const NaryGroup& g, const std::string& text) { return g.groupoid().parse_element(trim(text)); }

Subset parse_set(const NaryGroup& g, const std::string& text) {
  Subset s(g.size());
  for (const auto& t : split(text, ','))
    if (!t.empty()) s.insert(element(g, t));
  return s;
}

std::string show(const NaryGroup& g, const Subset& s) {
  std::string out = "{";
  bool first = true;
  for (Elem x : s.members()) {
    if (!first) out += ", ";
    out += g.label(x);
    first = false;
  }
  return out + "}";
}

std::string show_word(const Groupoid& g, const Word& w, int hole = -1) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += static_cast<int>(i) == hole ? std::string("_") : g.label(w[i]);
  }
  return out + "]";
}

Json members(const Subset& s) {
  Json a = Json::array();
  for (Elem x : s.members()) a.push_back(x);
  return a;
}

const char* yes(bool b) { return b ? "yes" : "no"; }

Subset subject(Session& s, const NaryGroup& g) {
  if (s.opts().subset.empty()) throw Error(ErrorCode::InvalidInput, "--subset is required");
  Subset b = parse_set(g, s.opts().subset);
  if (s.opts().generate) b = generate(g, b.members());
  if (b.empty() || !is_subgroup(g, b)) throw Error(ErrorCode::NotSubgroup, show(g, b) + " is not an n-ary subgroup");
  return b;
}

std::vector<int> admissible_m(int n) {
  std::vector<int> out;
  for (int m = 2; m <= n; ++m)
    if ((n - 1) % (m - 1) == 0) out.push_back(m);
  return out;
}

CenterKind parse_kind(const std::string& k) {
  if (k == "standard") return CenterKind::Standard;
  if (k == "d") return CenterKind::D;
  if (k == "t") return CenterKind::T;
  if (k == "sigma") return CenterKind::Sigma;
  throw Error(ErrorCode::InvalidInput, "unknown center kind '" + k + "'");
}

const char* kind_prefix(CenterKind k) {
  switch (k) {
    case CenterKind::Standard: return "";
    case CenterKind::D: return "D";
    case CenterKind::T: return "T";
    case CenterKind::Sigma: return "S";
  }
  return "";
}

// ---- commands ----

int cmd_verify(Session& s) {
  const Groupoid gr = load_pgf_groupoid(s.read(s.opts().file));
  Json j;
  j["command"] = "verify";
  j["arity"] = gr.arity();
  j["size"] = gr.size();
  Json labels = Json::array();
  for (Elem a = 0; a < gr.size(); ++a) labels.push_back(gr.label(a));
  j["labels"] = labels;
  std::ostringstream t;
  if (auto w = associativity_counterexample(gr)) {
    j["ok"] = false;
    j["failure"] = "associativity";
    j["args"] = w->args;
    j["left"] = w->left;
    j["at_zero"] = w->at_zero;
    j["at_left"] = w->at_left;
    t << "FAIL associativity: " << show_word(gr, w->args) << " bracketed at position 1 gives " << gr.label(w->at_zero)
      << ", at position " << w->left + 1 << " gives " << gr.label(w->at_left) << '\n';
    s.emit(j, t.str());
    return 1;
  }
  if (auto v = solvability_counterexample(gr)) {
    j["ok"] = false;
    j["failure"] = "solvability";
    j["position"] = v->position + 1;
    j["args"] = v->args;
    j["rhs"] = v->rhs;
    j["solutions"] = v->solutions;
    t << "FAIL solvability: " << show_word(gr, v->args, v->position) << " = " << gr.label(v->rhs) << " has "
      << v->solutions << " solutions at position " << v->position + 1 << '\n';
    s.emit(j, t.str());
    return 1;
  }
  j["ok"] = true;
  t << "OK: " << gr.arity() << "-ary group of order " << gr.size() << '\n';
  s.emit(j, t.str());
  return 0;
}

int cmd_info(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const auto cls = classify_cyclic(g);
  const Subset idem = idempotents(g);
  const Subset un = units(g);
  Json j = s.record("info", &g);
  j["kind"] = backing_name(g.groupoid().backing());
  j["verified"] = g.verified();
  j["cover_order"] = g.size() * static_cast<std::size_t>(g.arity() - 1);
  j["idempotents"] = idem.count();
  j["units"] = un.count();
  j["cyclic"] = cls.cyclic;
  j["semicyclic"] = cls.semicyclic;
  std::ostringstream t;
  t << "kind: " << backing_name(g.groupoid().backing()) << '\n'
    << "arity: " << g.arity() << '\n'
    << "order: " << g.size() << '\n'
    << "verified: " << (g.verified() ? "exhaustive" : "trusted construction") << '\n'
    << "covering group order: " << g.size() * static_cast<std::size_t>(g.arity() - 1) << '\n'
    << "idempotents: " << idem.count() << '\n'
    << "units: " << un.count() << '\n'
    << "cyclic: " << yes(cls.cyclic) << '\n'
    << "semicyclic: " << yes(cls.semicyclic) << '\n';
  s.emit(j, t.str());
  return 0;
}

int cmd_skew(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  Json j = s.record("skew", &g);
  j["depth"] = s.opts().depth;
  Json img = Json::array();
  std::ostringstream t;
  for (Elem a = 0; a < g.size(); ++a) {
    const Elem b = skew_power(g, a, s.opts().depth);
    img.push_back(b);
    t << g.label(a) << " -> " << g.label(b) << '\n';
  }
  j["skew"] = img;
  s.emit(j, t.str());
  return 0;
}

int cmd_order(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  Json j = s.record("order", &g);
  std::ostringstream t;
  if (!s.opts().element.empty()) {
    const Elem a = element(g, s.opts().element);
    const std::size_t o = nadic_order(g, a);
    j["element"] = a;
    j["order"] = o;
    t << "order of " << g.label(a) << ": " << o << '\n';
  } else {
    const auto prof = nadic_order_profile(g);
    j["orders"] = prof;
    for (Elem a = 0; a < g.size(); ++a) t << g.label(a) << ": " << prof[a] << '\n';
  }
  s.emit(j, t.str());
  return 0;
}

int cmd_power(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  if (s.opts().element.empty()) throw Error(ErrorCode::InvalidInput, "--element is required");
  const Elem a = element(g, s.opts().element);
  const Elem p = nadic_power(g, a, s.opts().exponent);
  Json j = s.record("power", &g);
  j["element"] = a;
  j["exponent"] = s.opts().exponent;
  j["value"] = p;
  s.emit(j, g.label(a) + "^[" + std::to_string(s.opts().exponent) + "] = " + g.label(p) + '\n');
  return 0;
}

int cmd_set_report(Session& s, const std::string& command, const std::string& name, const Subset& set,
                   const NaryGroup& g) {
  Json j = s.record(command, &g);
  j["elements"] = members(set);
  s.emit(j, name + " = " + show(g, set) + (set.empty() ? " (empty)" : "") + '\n');
  return 0;
}

int cmd_units(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  return cmd_set_report(s, "units", "E(A)", units(g), g);
}

int cmd_idempotents(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  return cmd_set_report(s, "idempotents", "I(A)", idempotents(g), g);
}

std::vector<std::vector<int>> parse_sigmas(const Options& o, int slots) {
  std::vector<std::vector<int>> out;
  for (const auto& c : o.sigmas) out.push_back(parse_cycles(c, static_cast<std::size_t>(slots)));
  return out;
}

int cmd_center(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const CenterKind kind = parse_kind(s.opts().kind);
  const int m = s.opts().m ? s.opts().m : 2;
  const auto sig = parse_sigmas(s.opts(), m - 1);
  const bool whole = s.opts().subset.empty();
  const Subset b = whole ? Subset::full(g.size()) : parse_set(g, s.opts().subset);
  const Subset c = centralizer(g, kind, m, b, sig);
  Json j = s.record("center", &g);
  j["kind"] = s.opts().kind;
  j["m"] = m;
  if (!whole) j["subset"] = members(b);
  j["elements"] = members(c);
  const std::string name = std::string(kind_prefix(kind)) + (whole ? "Z(A, " : "C(" + show(g, b) + ", ") +
                           std::to_string(m) + ")";
  s.emit(j, name + " = " + show(g, c) + (c.empty() ? " (empty)" : "") + '\n');
  return 0;
}

int cmd_normalizer(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const Subset b = subject(s, g);
  Json j = s.record("normalizer", &g);
  j["subset"] = members(b);
  std::ostringstream t;
  if (s.opts().audit) {
    const auto r = normalizer_audit(g, b);
    Json by = Json::array();
    for (const auto& [m, n] : r.by_m) {
      by.push_back({{"m", m}, {"elements", members(n)}});
      t << "N(B, " << m << ") = " << show(g, n) << '\n';
    }
    j["by_m"] = by;
    j["subgroups_containing_b"] = r.subgroups_containing_b;
    j["gcd_law"] = r.gcd_law;
    j["retract_criterion"] = r.retract_criterion;
    j["cover0_criterion"] = r.cover0_criterion;
    j["cover_star_criterion"] = r.cover_star_criterion;
    j["ok"] = r.ok();
    t << "subgroups containing B: " << yes(r.subgroups_containing_b) << '\n'
      << "gcd law: " << yes(r.gcd_law) << '\n'
      << "retract criterion: " << yes(r.retract_criterion) << '\n'
      << "A_0 criterion: " << yes(r.cover0_criterion) << '\n'
      << "A* criterion: " << yes(r.cover_star_criterion) << '\n';
    s.emit(j, t.str());
    return r.ok() ? 0 : 1;
  }
  std::vector<int> ms = s.opts().m ? std::vector<int>{s.opts().m} : admissible_m(g.arity());
  Json by = Json::array();
  for (int m : ms) {
    const Subset n = normalizer(g, b, m);
    by.push_back({{"m", m}, {"elements", members(n)}});
    t << "N(" << show(g, b) << ", " << m << ") = " << show(g, n) << '\n';
  }
  j["by_m"] = by;
  s.emit(j, t.str());
  return 0;
}

int cmd_normality(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const Subset b = subject(s, g);
  const auto r = normality_implications_audit(g, b);
  Json j = s.record("normality", &g);
  j["subset"] = members(b);
  j["invariant"] = r.invariant;
  j["invariant_by_conjugation"] = r.invariant_by_conjugation;
  j["semi_invariant"] = r.semi_invariant;
  j["normal"] = r.normal;
  j["weakly_normal"] = r.weakly_normal;
  Json ms = Json::array();
  for (const auto& [m, v] : r.m_semi_invariant) ms.push_back({{"m", m}, {"holds", v}});
  j["m_semi_invariant"] = ms;
  Json ss = Json::array();
  std::size_t sigma_true = 0;
  for (const auto& [sig, v] : r.sigma_normal) {
    ss.push_back({{"sigma", cycle_notation(sig)}, {"holds", v}});
    sigma_true += v;
  }
  j["sigma_normal"] = ss;
  j["violations"] = r.violations;
  std::ostringstream t;
  t << "subgroup: " << show(g, b) << '\n'
    << "invariant: " << yes(r.invariant) << '\n'
    << "invariant (conjugation test): " << yes(r.invariant_by_conjugation) << '\n'
    << "semi-invariant: " << yes(r.semi_invariant) << '\n'
    << "normal: " << yes(r.normal) << '\n'
    << "weakly normal: " << yes(r.weakly_normal) << '\n';
  for (const auto& [m, v] : r.m_semi_invariant) t << m << "-semi-invariant: " << yes(v) << '\n';
  if (!r.sigma_normal.empty())
    t << "sigma-normal for " << sigma_true << " of " << r.sigma_normal.size() << " slot permutations\n";
  for (const auto& v : r.violations) t << "VIOLATION: " << v << '\n';
  s.emit(j, t.str());
  return r.violations.empty() ? 0 : 1;
}

int cmd_subgroups(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const std::vector<Subset> subs =
      s.opts().through.empty() ? all_subgroups(g) : subgroups_through_idempotent(g, element(g, s.opts().through));
  std::map<std::size_t, std::vector<const Subset*>> by;
  for (const auto& b : subs) by[b.count()].push_back(&b);
  Json j = s.record("subgroups", &g);
  j["count"] = subs.size();
  Json arr = Json::array();
  for (const auto& b : subs) arr.push_back(members(b));
  j["subgroups"] = arr;
  std::ostringstream t;
  t << subs.size() << " subgroups\n";
  for (const auto& [order, list] : by) {
    t << "order " << order << ": " << list.size() << (list.size() == 1 ? " subgroup" : " subgroups") << '\n';
    for (const Subset* b : list) t << "  " << show(g, *b) << '\n';
  }
  s.emit(j, t.str());
  return 0;
}

int cmd_cosets(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const Subset b = subject(s, g);
  Side side;
  if (s.opts().side == "left")
    side = Side::Left;
  else if (s.opts().side == "right")
    side = Side::Right;
  else
    throw Error(ErrorCode::InvalidInput, "--side must be left or right");
  const auto d = cosets(g, b, side);
  Json j = s.record("cosets", &g);
  j["subset"] = members(b);
  j["side"] = s.opts().side;
  Json arr = Json::array();
  for (const auto& c : d.cosets) arr.push_back(members(c));
  j["cosets"] = arr;
  j["representatives"] = d.reps;
  std::ostringstream t;
  t << "index " << d.cosets.size() << '\n';
  for (std::size_t i = 0; i < d.cosets.size(); ++i)
    t << (side == Side::Left ? "[" + g.label(d.reps[i]) + " B^(n-1)]" : "[B^(n-1) " + g.label(d.reps[i]) + "]")
      << " = " << show(g, d.cosets[i]) << '\n';
  s.emit(j, t.str());
  return 0;
}

int cmd_factor(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const Subset b = subject(s, g);
  const NaryGroup f = factor_group(g, b);
  const std::string text = save_pgf(f);
  Json j = s.record("factor", &f);
  j["pgf"] = text;
  s.emit(j, text);
  return 0;
}

int cmd_conjugate(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const Subset b = subject(s, g);
  if (s.opts().other.empty()) throw Error(ErrorCode::InvalidInput, "--with is required");
  const Subset c = parse_set(g, s.opts().other);
  if (c.empty() || !is_subgroup(g, c)) throw Error(ErrorCode::NotSubgroup, show(g, c) + " is not an n-ary subgroup");
  const auto conj = is_conjugate(g, b, c);
  const auto semi = is_semiconjugate(g, b, c);
  const bool cover = conjugate_in_cover(g, b, c);
  Json j = s.record("conjugate", &g);
  j["subset"] = members(b);
  j["with"] = members(c);
  j["conjugate"] = conj ? Json(*conj) : Json(nullptr);
  j["semiconjugate"] = semi ? Json(*semi) : Json(nullptr);
  j["conjugate_in_cover"] = cover;
  std::ostringstream t;
  t << "conjugate: " << (conj ? "yes, by " + g.label(*conj) : std::string("no")) << '\n'
    << "semiconjugate: " << (semi ? "yes, by " + g.label(*semi) : std::string("no")) << '\n'
    << "conjugate in A*: " << yes(cover) << '\n';
  s.emit(j, t.str());
  return 0;
}

int cmd_post_cover(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const Elem base = s.opts().anchor.empty() ? 0 : element(g, s.opts().anchor);
  const PostCover c(g, base);
  std::vector<std::string> labels;
  std::string grades;
  for (Elem x = 0; x < c.order(); ++x) {
    const Canonical r = c.record(x);
    labels.push_back(g.label(r.value) + "@" + std::to_string(r.residue));
    grades += (x ? " " : "") + std::to_string(c.grade(x));
  }
  std::string a0;
  for (Elem x : c.a0().members()) a0 += (a0.empty() ? "" : " ") + std::to_string(x);
  const std::vector<std::string> comments = {
      "covering group of order " + std::to_string(c.order()) + " over base " + g.label(base),
      "element v@i is the class of v followed by i-1 copies of the base",
      "grade " + grades,
      "A_0 " + a0,
  };
  const std::string text = table_pgf(c.order(), 2, c.group().table(), labels, comments);
  Json j = s.record("post-cover", &g);
  j["base"] = base;
  j["order"] = c.order();
  Json gr = Json::array();
  for (Elem x = 0; x < c.order(); ++x) gr.push_back(c.grade(x));
  j["grades"] = gr;
  j["a0"] = members(c.a0());
  j["pgf"] = text;
  s.emit(j, text);
  return 0;
}

int cmd_retract(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const Elem a = s.opts().anchor.empty() ? 0 : element(g, s.opts().anchor);
  const Retract r = retract_at(g, a);
  Recipe rec;
  rec.kind = Backing::Gluskin;
  rec.arity = g.arity();
  std::vector<std::string> labels;
  for (Elem x = 0; x < g.size(); ++x) labels.push_back(g.label(x));
  rec.base = std::make_shared<const BinaryGroup>(g.size(), r.group.table(), labels, false);
  rec.beta = r.beta;
  rec.d = r.d;
  std::string text = save_pgf(rec);
  const std::string note = "# retract at " + g.label(a) + "\n";
  text.insert(text.find('\n') + 1, note);
  Json j = s.record("retract", &g);
  j["anchor"] = a;
  j["table"] = r.group.table();
  j["beta"] = r.beta;
  j["d"] = r.d;
  j["pgf"] = text;
  s.emit(j, text);
  return 0;
}

int cmd_classify(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const auto cyc = classify_cyclic(g);
  const auto ab = abelianness(g);
  const auto sol = classify_solvability(g);
  const Subset idem = idempotents(g);
  const Subset un = units(g);
  Json j = s.record("classify", &g);
  j["cyclic"] = cyc.cyclic;
  j["semicyclic"] = cyc.semicyclic;
  j["generators"] = cyc.generators;
  j["abelian"] = ab.abelian;
  j["semiabelian"] = ab.semiabelian;
  j["weakly_semiabelian"] = ab.weakly_semiabelian;
  j["commutative"] = ab.commutative;
  j["commutative_exhaustive"] = ab.commutative_exhaustive;
  auto flags = [](const std::vector<std::pair<int, bool>>& v) {
    Json a = Json::array();
    for (const auto& [m, b] : v) a.push_back({{"m", m}, {"holds", b}});
    return a;
  };
  j["m_semiabelian"] = flags(ab.m_semiabelian);
  j["weakly_m_semiabelian"] = flags(ab.weakly_m);
  j["t_semiabelian"] = flags(ab.t_semiabelian);
  j["semisolvable"] = sol.semisolvable;
  j["seminilpotent"] = sol.seminilpotent;
  j["derived_length"] = sol.derived_length;
  j["idempotents"] = idem.count();
  j["units"] = un.count();
  j["violations"] = ab.violations;
  std::ostringstream t;
  t << "cyclic: " << yes(cyc.cyclic) << '\n' << "semicyclic: " << yes(cyc.semicyclic) << '\n';
  if (!cyc.generators.empty()) t << "generators: " << show(g, Subset::of(g.size(), cyc.generators)) << '\n';
  t << "abelian: " << yes(ab.abelian) << '\n'
    << "semiabelian: " << yes(ab.semiabelian) << '\n'
    << "weakly semiabelian: " << yes(ab.weakly_semiabelian) << '\n'
    << "commutative: " << yes(ab.commutative) << (ab.commutative_exhaustive ? "" : " (sampled)") << '\n';
  for (const auto& [m, b] : ab.m_semiabelian) t << m << "-semiabelian: " << yes(b) << '\n';
  for (const auto& [m, b] : ab.t_semiabelian) t << "T-semiabelian (m = " << m << "): " << yes(b) << '\n';
  t << "semisolvable: " << yes(sol.semisolvable) << '\n' << "seminilpotent: " << yes(sol.seminilpotent) << '\n';
  if (sol.semisolvable) t << "retract derived length: " << sol.derived_length << '\n';
  t << "idempotents: " << idem.count() << '\n' << "units: " << un.count() << '\n';
  for (const auto& v : ab.violations) t << "VIOLATION: " << v << '\n';
  s.emit(j, t.str());
  return ab.violations.empty() ? 0 : 1;
}

std::vector<std::vector<std::size_t>> parse_blocks(const std::string& text) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& blk : split(text, ';')) {
    std::vector<std::size_t> b;
    for (const auto& p : split(blk, ','))
      if (!p.empty()) b.push_back(std::stoul(p));
    if (!b.empty()) out.push_back(b);
  }
  return out;
}

int cmd_decompose(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const Options& o = s.opts();
  Json j = s.record("decompose", &g);
  std::ostringstream t;
  if (o.idempotent_sylow) {
    const auto p = idempotent_sylow_partition(g, o.idempotent_sylow);
    Json parts = Json::array();
    for (const auto& b : p.parts) parts.push_back(members(b));
    j["p"] = p.p;
    j["parts"] = parts;
    j["sylow_count"] = p.sylow_count;
    Json decs = Json::array();
    for (const auto& d : p.decompositions) {
      Json one = Json::array();
      for (const auto& b : d) one.push_back(members(b));
      decs.push_back(one);
    }
    j["decompositions"] = decs;
    t << p.parts.size() << " disjoint " << p.p << "-Sylow subgroups cover A\n";
    for (const auto& b : p.parts) t << "  " << show(g, b) << '\n';
    t << "Sylow " << p.p << "-subgroups in total: " << p.sylow_count << '\n';
    for (std::size_t a = 0; a < p.decompositions.size(); ++a) {
      t << "anchor " << g.label(static_cast<Elem>(a)) << ":";
      for (const auto& b : p.decompositions[a]) t << ' ' << show(g, b);
      t << '\n';
    }
  } else if (o.units_partition) {
    const auto parts = units_partition(g, o.units_partition);
    Json arr = Json::array();
    for (const auto& b : parts) {
      arr.push_back(members(b));
      t << show(g, b) << '\n';
    }
    j["parts"] = arr;
  } else if (o.sylow) {
    const auto decs = sylow_hall_semiabelian(g, parse_blocks(o.blocks));
    Json arr = Json::array();
    for (const auto& d : decs) {
      Json parts = Json::array();
      for (const auto& b : d.parts) parts.push_back(members(b));
      arr.push_back({{"anchor", d.anchor}, {"blocks", d.blocks}, {"parts", parts}, {"unique", d.unique}});
      t << "anchor " << g.label(d.anchor) << ":";
      for (const auto& b : d.parts) t << ' ' << show(g, b);
      t << (d.unique ? " (unique)" : " (not unique)") << '\n';
    }
    j["decompositions"] = arr;
  } else {
    if (o.anchor.empty() || o.parts.empty())
      throw Error(ErrorCode::InvalidInput, "decompose needs --anchor and --parts, --sylow, --idempotent-sylow or --units-partition");
    const Elem a = element(g, o.anchor);
    std::vector<Subset> parts;
    for (const auto& p : split(o.parts, ';')) parts.push_back(parse_set(g, p));
    const bool ok = a_direct_decomposition(g, a, parts);
    j["anchor"] = a;
    Json arr = Json::array();
    for (const auto& b : parts) arr.push_back(members(b));
    j["parts"] = arr;
    j["direct"] = ok;
    t << "a-direct decomposition at " << g.label(a) << ": " << yes(ok) << '\n';
  }
  s.emit(j, t.str());
  return 0;
}

int cmd_axioms(Session& s) {
  const Options& o = s.opts();
  std::ostringstream t;
  if (o.list) {
    if (o.arity < 2) throw Error(ErrorCode::InvalidInput, "--list needs --arity");
    Json j;
    j["command"] = "axioms";
    Json arr = Json::array();
    for (const auto& a : axiom_systems(o.arity)) {
      arr.push_back({{"id", a.id}, {"description", a.description}});
      t << a.id << ": " << a.description << '\n';
    }
    j["systems"] = arr;
    s.emit(j, t.str());
    return 0;
  }
  if (o.audit) {
    const auto rep = equivalence_audit(axiom_corpus(o.perturbations));
    Json j;
    j["command"] = "axioms";
    Json rows = Json::array();
    for (const auto& r : rep.rows) {
      Json v = Json::object();
      for (const auto& [id, b] : r.verdicts) v[id] = b;
      rows.push_back({{"name", r.name}, {"arity", r.arity}, {"size", r.size}, {"is_group", r.is_group},
                      {"agree", r.agree}, {"verdicts", v}});
      std::size_t holds = 0;
      for (const auto& vd : r.verdicts) holds += vd.second;
      t << r.name << " (n=" << r.arity << ", k=" << r.size << "): group " << yes(r.is_group) << ", " << holds << "/"
        << r.verdicts.size() << " systems hold" << (r.agree ? "" : "  DISAGREEMENT") << '\n';
    }
    j["rows"] = rows;
    j["disagreements"] = rep.disagreements;
    t << rep.rows.size() << " magmas, " << rep.disagreements << " disagreements\n";
    s.emit(j, t.str());
    return rep.disagreements ? 1 : 0;
  }
  const Groupoid gr = load_pgf_groupoid(s.read(o.file));
  std::vector<std::string> ids = o.systems;
  if (o.all_systems)
    for (const auto& a : axiom_systems(gr.arity())) ids.push_back(a.id);
  if (ids.empty()) throw Error(ErrorCode::InvalidInput, "axioms needs --system, --all, --audit or --list");
  Json j;
  j["command"] = "axioms";
  j["arity"] = gr.arity();
  j["size"] = gr.size();
  Json v = Json::object();
  bool all = true;
  for (const auto& id : ids) {
    const bool h = check_axiom(gr, id);
    v[id] = h;
    all = all && h;
    t << id << ": " << (h ? "holds" : "fails") << '\n';
  }
  j["verdicts"] = v;
  s.emit(j, t.str());
  return all ? 0 : 1;
}

int emit_group(Session& s, const std::string& command, const NaryGroup& g) {
  std::string text;
  if (s.opts().as_table) {
    std::vector<std::string> labels;
    for (Elem a = 0; a < g.size(); ++a) labels.push_back(g.label(a));
    text = table_pgf(g.size(), g.arity(), g.groupoid().table(), labels);
  } else {
    text = save_pgf(g);
  }
  Json j = s.record(command, &g);
  j["pgf"] = text;
  s.emit(j, text);
  return 0;
}

int cmd_perm_group(Session& s) {
  const Options& o = s.opts();
  if (o.positions < 2) throw Error(ErrorCode::InvalidInput, "-n must be at least 2");
  const auto sigma = parse_cycles(o.sigma, static_cast<std::size_t>(o.positions - 1));
  const int k = o.arity ? o.arity : natural_arity(sigma);
  return emit_group(s, "perm-group", permutation_group(o.q, o.positions, sigma, k));
}

int cmd_product(Session& s) {
  std::vector<NaryGroup> gs;
  for (const auto& f : s.opts().files) gs.push_back(s.group(f));
  if (gs.size() < 2) throw Error(ErrorCode::InvalidInput, "product needs at least two files");
  return emit_group(s, "product", direct_product(gs));
}

int cmd_example(Session& s) {
  if (s.opts().list) {
    Json j;
    j["command"] = "example";
    j["names"] = catalog_names();
    std::string t;
    for (const auto& n : catalog_names()) t += n + '\n';
    s.emit(j, t);
    return 0;
  }
  if (s.opts().name.empty()) throw Error(ErrorCode::InvalidInput, "example needs NAME or --list");
  return emit_group(s, "example", named_example(s.opts().name));
}

int cmd_solve(Session& s) {
  const NaryGroup g = s.group(s.opts().file);
  const auto toks = split(s.opts().solve_args, ',');
  if (static_cast<int>(toks.size()) != g.arity())
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(g.arity()) + " arguments");
  Word args(toks.size(), 0);
  int hole = -1;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == "_") {
      if (hole >= 0) throw Error(ErrorCode::InvalidInput, "exactly one '_' is allowed");
      hole = static_cast<int>(i);
    } else {
      args[i] = element(g, toks[i]);
    }
  }
  if (hole < 0) throw Error(ErrorCode::InvalidInput, "mark the unknown with '_'");
  if (s.opts().rhs.empty()) throw Error(ErrorCode::InvalidInput, "--rhs is required");
  const Elem rhs = element(g, s.opts().rhs);
  const auto sol = solve_all(g.groupoid(), args, static_cast<std::size_t>(hole), rhs);
  Json j = s.record("solve", &g);
  j["position"] = hole + 1;
  j["rhs"] = rhs;
  j["solutions"] = sol;
  std::ostringstream t;
  t << show_word(g.groupoid(), args, hole) << " = " << g.label(rhs) << ": ";
  if (sol.empty()) t << "no solution";
  for (std::size_t i = 0; i < sol.size(); ++i) t << (i ? ", " : "_ = ") << g.label(sol[i]);
  t << '\n';
  s.emit(j, t.str());
  return sol.empty() ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const Limits saved = limits();
  Options o;
  CLI::App app{"Finite n-ary group workbench", "polyad"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--eval-budget", o.eval_budget, "Operation evaluations allowed per exhaustive scan");
  app.add_option("--table-cap", o.table_cap, "Largest table materialized");
  app.add_option("--threads", o.threads, "Worker threads (0: all cores)");

  std::map<CLI::App*, int (*)(Session&)> handlers;
  auto sub = [&](const std::string& name, const std::string& help, int (*fn)(Session&), bool file = true) {
    CLI::App* c = app.add_subcommand(name, help);
    if (file) c->add_option("file", o.file, "Group file, - for standard input")->required();
    handlers[c] = fn;
    return c;
  };
  auto subset_opts = [&](CLI::App* c) {
    c->add_option("--subset", o.subset, "Comma-separated elements (labels or indices)");
    c->add_flag("--generate", o.generate, "Use the subgroup generated by --subset");
  };

  sub("verify", "Exhaustively check the n-ary group axioms", cmd_verify);
  sub("info", "Summary of a group", cmd_info);
  sub("skew", "Skew elements", cmd_skew)->add_option("--depth", o.depth, "Iterated skew depth");
  sub("order", "n-adic orders", cmd_order)->add_option("--element", o.element);
  {
    auto* c = sub("power", "n-adic power", cmd_power);
    c->add_option("--element", o.element)->required();
    c->add_option("--exp", o.exponent, "Exponent, negative allowed")->required();
  }
  sub("units", "Units subgroup E(A)", cmd_units);
  sub("idempotents", "Idempotent elements I(A)", cmd_idempotents);
  {
    auto* c = sub("center", "Center and centralizer families", cmd_center);
    c->add_option("--kind", o.kind, "standard, d, t or sigma")->check(CLI::IsMember({"standard", "d", "t", "sigma"}));
    c->add_option("-m,--m", o.m, "Level m with (m-1) | (n-1)");
    c->add_option("--sigma", o.sigmas, "Slot permutation in cycle notation (sigma kind)");
    c->add_option("--subset", o.subset, "Centralizer of this set instead of the center");
  }
  {
    auto* c = sub("normalizer", "Normalizers N(B, m)", cmd_normalizer);
    subset_opts(c);
    c->add_option("-m,--m", o.m, "Single level m; default lists every admissible m");
    c->add_flag("--audit", o.audit, "Check the normalizer laws");
  }
  subset_opts(sub("normality", "Normality predicates of a subgroup", cmd_normality));
  sub("subgroups", "All n-ary subgroups grouped by order", cmd_subgroups)
      ->add_option("--through", o.through, "Only subgroups through this idempotent");
  {
    auto* c = sub("cosets", "Coset decomposition", cmd_cosets);
    subset_opts(c);
    c->add_option("--side", o.side, "left or right");
  }
  subset_opts(sub("factor", "Factor group by a semi-invariant subgroup", cmd_factor));
  {
    auto* c = sub("conjugate", "Conjugacy of two subgroups", cmd_conjugate);
    subset_opts(c);
    c->add_option("--with", o.other, "Second subgroup")->required();
  }
  sub("post-cover", "Covering group table", cmd_post_cover)->add_option("--base", o.anchor, "Base element");
  sub("retract", "Retract with its automorphism and d", cmd_retract)->add_option("--anchor", o.anchor);
  sub("classify", "Cyclicity, abelianness and solvability", cmd_classify);
  {
    auto* c = sub("decompose", "Direct and Sylow decompositions", cmd_decompose);
    c->add_option("--anchor", o.anchor);
    c->add_option("--parts", o.parts, "Subsets separated by ';'");
    c->add_flag("--sylow", o.sylow, "Sylow-Hall decomposition of a semiabelian group");
    c->add_option("--blocks", o.blocks, "Prime blocks for --sylow, e.g. 2;3,5");
    c->add_option("--idempotent-sylow", o.idempotent_sylow, "Sylow partition of an idempotent group for prime p");
    c->add_option("--units-partition", o.units_partition, "Subgroups of E(A) of this order");
  }
  {
    CLI::App* c = sub("axioms", "Alternative axiom systems", cmd_axioms, false);
    c->add_option("file", o.file, "Groupoid file, - for standard input");
    c->add_option("--system", o.systems, "System id, repeatable");
    c->add_flag("--all", o.all_systems, "Every system for the arity");
    c->add_flag("--audit", o.audit, "Run the equivalence audit over the built-in corpus");
    c->add_option("--perturbations", o.perturbations, "Random-walk proposals for --audit");
    c->add_flag("--list", o.list, "List system ids");
    c->add_option("--arity", o.arity, "Arity for --list");
  }
  {
    CLI::App* c = sub("perm-group", "Group of n-ary permutations", cmd_perm_group, false);
    c->add_option("-q", o.q, "Points")->required();
    c->add_option("-n", o.positions, "Maps per element plus one")->required();
    c->add_option("--sigma", o.sigma, "Slot permutation in cycle notation")->required();
    c->add_option("--arity", o.arity, "Arity k with sigma^k = sigma; default the least");
    c->add_flag("--as-table", o.as_table, "Write a plain table document");
  }
  {
    CLI::App* c = sub("product", "Direct product", cmd_product, false);
    c->add_option("files", o.files)->required();
    c->add_flag("--as-table", o.as_table, "Write a plain table document");
  }
  {
    CLI::App* c = sub("example", "Built-in examples", cmd_example, false);
    c->add_option("name", o.name);
    c->add_flag("--list", o.list);
    c->add_flag("--as-table", o.as_table, "Write a plain table document");
  }
  {
    auto* c = sub("solve", "Solve an equation with one unknown", cmd_solve);
    c->add_option("--args", o.solve_args, "Comma-separated arguments with _ for the unknown")->required();
    c->add_option("--rhs", o.rhs)->required();
  }

  std::vector<std::string> storage = {"polyad"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  limits().eval_budget = o.eval_budget;
  limits().table_cap = o.table_cap;
  limits().threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  int code = 2;
  try {
    Session session(o, in, out);
    for (auto& [c, fn] : handlers)
      if (c->parsed()) code = fn(session);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    code = e.code() == ErrorCode::NotAssociative || e.code() == ErrorCode::NoSolution ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = 2;
  }
  limits() = saved;
  return code;
}

}  // namespace polyad

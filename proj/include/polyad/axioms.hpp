#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyad/groupoid.hpp"

namespace polyad {

// System ids: POST2, POST1(i), MAIN, DIAG, ONE_EQ(k,i), SANDWICH, EXISTENTIAL, SKEW,
// LONG(k,m), DPOINT(i,j). REPEATED is a probe outside the equivalence family.
struct AxiomSystem {
  std::string id;
  std::string description;
};

// Every admissible instance for arity n; LONG(k,m) is limited to k, m <= 3.
std::vector<AxiomSystem> axiom_systems(int n);

// Throws NotAssociative, ArityTooSmall, UnknownName.
bool check_axiom(const Groupoid& g, const std::string& system);

// Values [w] reachable when the positions marked nullopt range over A. |w| = 1 mod (n-1).
Subset reachable(const Groupoid& g, const std::vector<std::optional<Elem>>& pattern);

// [x1..xi a_{i+1}..an] = b, counted over all i-tuples. tail holds a_{i+1}..a_n.
std::size_t count_solutions(const Groupoid& g, int i, const Word& tail, Elem b);

// [x1..x_{n-1} a] = b and [a y1..y_{n-1}] = b each have exactly one solution for all a, b.
bool main_uniquely_solvable(const Groupoid& g);

// [x1..x_{i-1} a x_{i+1}..xn] = b solvable for all a, b (1-based i).
bool single_known_solvable(const Groupoid& g, int i);

struct CorpusEntry {
  std::string name;
  Groupoid magma;
  bool known_associative = false;  // built by a verified construction; the audit skips the re-check
};

// Constant-output-free projections [a1..an] = an and = a1.
Groupoid projection_magma(std::size_t k, int n, bool last);

// Catalog groups, projection magmas with k <= 3 and n <= 4, all associative ternary
// tables on 2 elements, and operations derived from a random walk over associative binary
// tables on 2 and 3 elements (`perturbations` proposals, fixed seed).
std::vector<CorpusEntry> axiom_corpus(std::size_t perturbations = 1000);

struct AuditRow {
  std::string name;
  int arity = 0;
  std::size_t size = 0;
  bool is_group = false;
  std::vector<std::pair<std::string, bool>> verdicts;
  bool agree = false;
};
struct AuditReport {
  std::vector<AuditRow> rows;
  std::size_t disagreements = 0;
};
// Skips non-associative entries. Parallel over entries, order preserved.
AuditReport equivalence_audit(const std::vector<CorpusEntry>& corpus);

}  // namespace polyad

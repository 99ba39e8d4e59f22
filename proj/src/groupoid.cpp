#include "polyad/groupoid.hpp"

#include <charconv>

#include "polyad/core.hpp"

namespace polyad {

const char* backing_name(Backing b) {
  switch (b) {
    case Backing::Table: return "table";
    case Backing::Derived: return "derived";
    case Backing::Gluskin: return "gluskin";
    case Backing::Coset: return "coset";
    case Backing::Product: return "product";
    case Backing::Permutation: return "permutation";
  }
  return "table";
}

Groupoid::Groupoid(std::size_t k, int n, Oracle op, std::vector<std::string> labels)
    : k_(k), n_(n), oracle_(std::move(op)), labels_(std::move(labels)) {
  if (k_ == 0) throw Error(ErrorCode::InvalidInput, "carrier must be nonempty");
  if (n_ < 2) throw Error(ErrorCode::ArityTooSmall, "arity must be at least 2");
  if (!labels_.empty() && labels_.size() != k_) throw Error(ErrorCode::InvalidInput, "label count mismatch");
  if (oracle_ && ipow(k_, static_cast<unsigned>(n_)) <= limits().table_cap) table();
}

Groupoid Groupoid::from_table(std::size_t k, int n, std::vector<Elem> table, std::vector<std::string> labels) {
  if (n < 2) throw Error(ErrorCode::ArityTooSmall, "arity must be at least 2");
  const std::uint64_t want = ipow(k, static_cast<unsigned>(n));
  if (want > limits().table_cap) throw Error(ErrorCode::BudgetExceeded, "table exceeds table_cap");
  if (table.size() != want) throw Error(ErrorCode::InvalidInput, "table must have k^n entries");
  for (Elem v : table)
    if (v >= k) throw Error(ErrorCode::InvalidInput, "table entry out of range");
  auto shared = std::make_shared<const std::vector<Elem>>(std::move(table));
  Groupoid g(k, n, nullptr, std::move(labels));
  g.table_ = shared;
  g.oracle_ = [shared, k, n](const Elem* a) {
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) idx = idx * k + a[i];
    return (*shared)[idx];
  };
  return g;
}

Elem Groupoid::op(const Elem* args) const {
  if (table_) {
    std::size_t idx = 0;
    for (int i = 0; i < n_; ++i) idx = idx * k_ + args[i];
    return (*table_)[idx];
  }
  return oracle_(args);
}

Elem Groupoid::op(const Word& args) const {
  if (args.size() != static_cast<std::size_t>(n_)) throw Error(ErrorCode::LengthError, "op needs exactly n arguments");
  return op(args.data());
}

const std::vector<Elem>& Groupoid::table() const {
  if (table_) return *table_;
  const std::uint64_t total = ipow(k_, static_cast<unsigned>(n_));
  if (total > limits().table_cap) throw Error(ErrorCode::BudgetExceeded, "table exceeds table_cap");
  auto t = std::make_shared<std::vector<Elem>>(total);
  Word args(static_cast<std::size_t>(n_), 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (int i = n_ - 1; i >= 0; --i) {
      args[static_cast<std::size_t>(i)] = static_cast<Elem>(r % k_);
      r /= k_;
    }
    (*t)[idx] = oracle_(args.data());
  }
  table_ = std::move(t);
  return *table_;
}

std::string Groupoid::label(Elem a) const { return labels_.empty() ? std::to_string(a) : labels_.at(a); }

Elem Groupoid::parse_element(const std::string& text) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == text) return static_cast<Elem>(i);
  Elem v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || v >= k_)
    throw Error(ErrorCode::InvalidInput, "unknown element '" + text + "'");
  return v;
}

NaryGroup::NaryGroup(Groupoid g, Check check) : g_(std::move(g)) {
  const std::uint64_t k = g_.size();
  const auto n = static_cast<unsigned>(g_.arity());
  if (check == Check::Auto)
    check = ipow(k, 2 * n - 1) <= limits().eval_budget ? Check::Full : Check::Trusted;
  if (check == Check::Full) {
    if (auto w = associativity_counterexample(g_))
      throw Error(ErrorCode::NotAssociative, "bracketings at 0 and " + std::to_string(w->left) +
                                                 " differ on " + format_word(g_, w->args));
    if (auto s = solvability_counterexample(g_))
      throw Error(ErrorCode::NoSolution,
                  "position " + std::to_string(s->position + 1) + " has " + std::to_string(s->solutions) +
                      " solutions for right-hand side " + g_.label(s->rhs));
    verified_ = true;
  }
  skew_.resize(g_.size());
  for (Elem a = 0; a < g_.size(); ++a) skew_[a] = polyad::skew(g_, a);
}

}  // namespace polyad

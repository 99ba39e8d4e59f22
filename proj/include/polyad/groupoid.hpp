#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "polyad/types.hpp"

namespace polyad {

enum class Backing { Table, Derived, Gluskin, Coset, Product, Permutation };
const char* backing_name(Backing b);

struct Recipe;
class PostCover;

// Finite n-ary groupoid on {0..k-1}. The table is materialized when k^n <= table_cap.
class Groupoid {
 public:
  using Oracle = std::function<Elem(const Elem*)>;

  Groupoid(std::size_t k, int n, Oracle op, std::vector<std::string> labels = {});
  // Row-major table: index of (a1..an) is ((a1*k + a2)*k + ...)*k + an.
  static Groupoid from_table(std::size_t k, int n, std::vector<Elem> table,
                             std::vector<std::string> labels = {});

  std::size_t size() const { return k_; }
  int arity() const { return n_; }
  Elem op(const Elem* args) const;
  Elem op(const Word& args) const;
  bool materialized() const { return table_ != nullptr; }
  // Full table; materializes on demand, throws BudgetExceeded over table_cap.
  const std::vector<Elem>& table() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;
  // Accepts a label or a decimal index.
  Elem parse_element(const std::string& text) const;

  Backing backing() const { return backing_; }
  const std::shared_ptr<const Recipe>& recipe() const { return recipe_; }
  void set_recipe(Backing b, std::shared_ptr<const Recipe> r) {
    backing_ = b;
    recipe_ = std::move(r);
  }

 private:
  std::size_t k_;
  int n_;
  Oracle oracle_;
  mutable std::shared_ptr<const std::vector<Elem>> table_;
  std::vector<std::string> labels_;
  Backing backing_ = Backing::Table;
  std::shared_ptr<const Recipe> recipe_;
};

// Verified (or trusted) n-ary group with cached skew elements.
class NaryGroup {
 public:
  enum class Check {
    Full,     // exhaustive associativity and solvability; throws on failure
    Auto,     // Full when within budget, otherwise trusted
    Trusted,  // constructor guarantees the axioms
  };

  explicit NaryGroup(Groupoid g, Check check = Check::Full);

  const Groupoid& groupoid() const { return g_; }
  std::size_t size() const { return g_.size(); }
  int arity() const { return g_.arity(); }
  Elem op(const Word& args) const { return g_.op(args); }
  Elem op(const Elem* args) const { return g_.op(args); }
  // Solution of [a^{n-1} x] = a; for n = 2 this is the identity.
  Elem skew(Elem a) const { return skew_[a]; }
  const std::vector<Elem>& skews() const { return skew_; }
  std::string label(Elem a) const { return g_.label(a); }
  bool verified() const { return verified_; }

  // Lazily built covering group; defined in post_cover.cpp.
  const PostCover& cover() const;

 private:
  Groupoid g_;
  std::vector<Elem> skew_;
  bool verified_ = false;
  struct CoverSlot {
    std::once_flag once;
    std::shared_ptr<const PostCover> value;
  };
  std::shared_ptr<CoverSlot> cover_ = std::make_shared<CoverSlot>();
};

}  // namespace polyad

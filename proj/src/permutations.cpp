#include "polyad/permutations.hpp"

#include "polyad/constructions.hpp"
#include "polyad/core.hpp"
#include "polyad/finite_group.hpp"
#include "polyad/post_cover.hpp"

namespace polyad {

namespace {

std::size_t factorial(std::size_t q) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= q; ++i) r *= i;
  return r;
}

void check_slots(const std::vector<int>& sigma) {
  std::vector<char> hit(sigma.size(), 0);
  for (int s : sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= sigma.size() || hit[static_cast<std::size_t>(s)])
      throw Error(ErrorCode::SizeMismatch, "sigma is not a permutation of the slots");
    hit[static_cast<std::size_t>(s)] = 1;
  }
}

}  // namespace

std::vector<int> compose_slots(const std::vector<int>& first, const std::vector<int>& then) {
  if (first.size() != then.size()) throw Error(ErrorCode::SizeMismatch, "slot permutations differ in size");
  std::vector<int> out(first.size());
  for (std::size_t j = 0; j < first.size(); ++j) out[j] = then[static_cast<std::size_t>(first[j])];
  return out;
}

std::vector<int> slot_power(const std::vector<int>& sigma, int k) {
  std::vector<int> out(sigma.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = static_cast<int>(j);
  for (int i = 0; i < k; ++i) out = compose_slots(out, sigma);
  return out;
}

int natural_arity(const std::vector<int>& sigma) {
  std::vector<int> p = compose_slots(sigma, sigma);
  int k = 2;
  while (p != sigma) {
    p = compose_slots(p, sigma);
    ++k;
  }
  return k;
}

NaryPermutation compose(const std::vector<NaryPermutation>& fs) {
  if (fs.empty()) throw Error(ErrorCode::SizeMismatch, "nothing to compose");
  const std::size_t slots = fs.front().sigma.size();
  const std::size_t q = fs.front().maps.empty() ? 0 : fs.front().maps.front().size();
  for (const auto& f : fs) {
    if (f.sigma.size() != slots || f.maps.size() != slots)
      throw Error(ErrorCode::SizeMismatch, "n-ary permutations have different slot counts");
    for (const auto& m : f.maps)
      if (m.size() != q) throw Error(ErrorCode::SizeMismatch, "maps act on different point sets");
  }
  NaryPermutation out;
  out.sigma.resize(slots);
  out.maps.assign(slots, std::vector<int>(q));
  for (std::size_t j = 0; j < slots; ++j) {
    std::size_t slot = j;
    for (std::size_t x = 0; x < q; ++x) out.maps[j][x] = static_cast<int>(x);
    for (const auto& f : fs) {
      for (auto& v : out.maps[j]) v = f.maps[slot][static_cast<std::size_t>(v)];
      slot = static_cast<std::size_t>(f.sigma[slot]);
    }
    out.sigma[j] = static_cast<int>(slot);
  }
  return out;
}

std::vector<int> cyclic_slots(int n) {
  std::vector<int> s(static_cast<std::size_t>(n - 1));
  for (int j = 0; j < n - 1; ++j) s[static_cast<std::size_t>(j)] = (j + 1) % (n - 1);
  return s;
}

NaryPermutation decode_permutation(std::size_t q, int n, const std::vector<int>& sigma, Elem index) {
  const std::size_t f = factorial(q);
  NaryPermutation p;
  p.sigma = sigma;
  p.maps.resize(static_cast<std::size_t>(n - 1));
  for (std::size_t j = p.maps.size(); j-- > 0;) {
    p.maps[j] = permutation_from_index(q, static_cast<Elem>(index % f));
    index /= static_cast<Elem>(f);
  }
  return p;
}

Elem encode_permutation(const NaryPermutation& p) {
  const std::size_t q = p.maps.empty() ? 0 : p.maps.front().size();
  const std::size_t f = factorial(q);
  Elem out = 0;
  for (const auto& m : p.maps) out = static_cast<Elem>(out * f + permutation_index(m));
  return out;
}

NaryGroup permutation_group(std::size_t q, int n, const std::vector<int>& sigma, int k) {
  if (n < 2 || k < 2) throw Error(ErrorCode::ArityTooSmall, "n and k must be at least 2");
  if (q < 1 || q > 6) throw Error(ErrorCode::SizeMismatch, "q must be in 1..6");
  if (sigma.size() != static_cast<std::size_t>(n - 1)) throw Error(ErrorCode::SizeMismatch, "sigma needs n-1 slots");
  check_slots(sigma);
  if (slot_power(sigma, k) != sigma)
    throw Error(ErrorCode::SigmaNotIdempotentPower, "sigma^k != sigma for k = " + std::to_string(k));
  const std::uint64_t size = ipow(factorial(q), static_cast<unsigned>(n - 1));
  if (size > limits().table_cap) throw Error(ErrorCode::BudgetExceeded, "permutation group too large");
  std::vector<std::string> labels;
  for (Elem x = 0; x < size; ++x) {
    const auto p = decode_permutation(q, n, sigma, x);
    std::string s;
    for (std::size_t j = 0; j < p.maps.size(); ++j) s += (j ? "|" : "") + cycle_notation(p.maps[j]);
    labels.push_back(s);
  }
  auto r = std::make_shared<Recipe>();
  r->kind = Backing::Permutation;
  r->arity = k;
  r->q = q;
  r->positions = n;
  r->sigma = sigma;
  Groupoid gr(size, k, [q, n, sigma, k](const Elem* a) {
    std::vector<NaryPermutation> fs;
    for (int i = 0; i < k; ++i) fs.push_back(decode_permutation(q, n, sigma, a[i]));
    return encode_permutation(compose(fs));
  }, std::move(labels));
  gr.set_recipe(Backing::Permutation, r);
  return NaryGroup(std::move(gr), NaryGroup::Check::Auto);
}

RegularEmbedding right_regular_embedding(const NaryGroup& g) {
  const PostCover& cover = g.cover();
  const int n = g.arity();
  const std::size_t k = g.size();
  RegularEmbedding out;
  const auto sigma = cyclic_slots(n);
  for (Elem c = 0; c < k; ++c) {
    NaryPermutation p;
    p.sigma = sigma;
    p.maps.assign(static_cast<std::size_t>(n - 1), std::vector<int>(k));
    for (int i = 1; i <= n - 1; ++i)
      for (Elem v = 0; v < k; ++v) {
        const Canonical r = cover.record(cover.mul(cover.index({i, v}), cover.theta(c)));
        p.maps[static_cast<std::size_t>(i - 1)][v] = static_cast<int>(r.value);
      }
    out.maps.push_back(p);
  }
  out.injective = true;
  for (Elem a = 0; a < k; ++a)
    for (Elem b = a + 1; b < k; ++b)
      if (out.maps[a] == out.maps[b]) out.injective = false;
  out.homomorphic = true;
  const std::uint64_t total = ipow(k, static_cast<unsigned>(n));
  charge(total * static_cast<std::uint64_t>(n), "regular embedding check");
  Word args(static_cast<std::size_t>(n));
  std::vector<NaryPermutation> fs(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 0; idx < total && out.homomorphic; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t i = args.size(); i-- > 0;) {
      args[i] = static_cast<Elem>(r % k);
      r /= k;
    }
    for (std::size_t i = 0; i < args.size(); ++i) fs[i] = out.maps[args[i]];
    if (!(compose(fs) == out.maps[g.op(args)])) out.homomorphic = false;
  }
  return out;
}

}  // namespace polyad

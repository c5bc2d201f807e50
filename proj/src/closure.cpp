#include <deque>
#include <stdexcept>

#include "glmn/characters.hpp"
#include "glmn/derivations.hpp"
#include "glmn/theorems.hpp"

namespace glmn {

namespace {

using Poly = Polynomial<Rational>;
using Loc = Localized<Rational>;

// Column content of a homogeneous element; D^{-1} removes one from every even column.
std::vector<long> column_weight(const Loc& a) {
  const RingContext& ctx = a.context();
  std::vector<long> w(ctx.size(), 0);
  const Monomial& mono = a.numerator.terms().front().mono;
  for (int g = 0; g < ctx.size() * ctx.size(); ++g)
    if (mono.exps[g] != 0) w[ctx.col_of(g) - 1] += mono.exps[g];
  for (int c = 0; c < ctx.m; ++c) w[c] -= a.d_power;
  return w;
}

// One weight space: semi-echelon rows over a common denominator D^power.
// Each row's largest monomial is its pivot, with coefficient 1.
class WeightSpace {
 public:
  explicit WeightSpace(const RingContext& ctx) : ctx_(ctx) {}

  std::size_t dim() const { return rows_.size(); }

  /// Adds `a` if it is independent of the current rows.
  bool insert(const Loc& a) {
    if (a.d_power > power_) raise_power(a.d_power);
    return insert_numerator(numerator_at(a, power_));
  }

 private:
  bool insert_numerator(Poly num) {
    while (!num.is_zero()) {
      const auto& lead = num.terms().back();
      auto it = pivots_.find(lead.mono);
      if (it == pivots_.end()) break;
      num = Poly::add_scaled(num, rows_[it->second], -lead.coeff);
    }
    if (num.is_zero()) return false;
    Rational inv = 1 / num.terms().back().coeff;
    num = Poly::scale(num, inv);
    pivots_.emplace(num.terms().back().mono, rows_.size());
    rows_.push_back(std::move(num));
    return true;
  }

  void raise_power(int target) {
    const auto factor = power(det_c11<Rational>(ctx_), target - power_);
    power_ = target;
    auto old = std::move(rows_);
    rows_.clear();
    pivots_.clear();
    for (auto& row : old) {
      if (!insert_numerator(row * factor)) throw std::logic_error("closure: rescaling lost independence");
    }
  }

  RingContext ctx_;
  int power_ = 0;
  std::vector<Poly> rows_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> pivots_;
};

}  // namespace

ClosureResult closure_oracle(const Weight& lambda, std::int64_t max_dim_guard, std::uint32_t characteristic) {
  if (characteristic != 0)
    throw std::invalid_argument("closure oracle runs in characteristic 0 only; divided powers are not implemented");
  require_dominant(lambda);
  ClosureResult result;
  result.normalized = berezin_normalize(lambda).weight;
  result.dim_induced = dim_induced(result.normalized);
  if (result.dim_induced > max_dim_guard)
    throw std::invalid_argument("closure oracle: dim H0 = " + std::to_string(result.dim_induced) +
                                " exceeds the guard " + std::to_string(max_dim_guard));

  const Weight& mu = result.normalized;
  RingContext ctx(mu.m(), mu.n(), 0);
  const int size = ctx.size();

  std::map<std::vector<long>, WeightSpace> spaces;
  std::deque<Loc> queue;
  auto offer = [&](const Loc& a) {
    if (a.is_zero()) return;
    auto w = column_weight(a);
    auto it = spaces.try_emplace(w, ctx).first;
    if (!it->second.insert(a)) return;
    if (++result.dim_closure > result.dim_induced)
      throw std::logic_error("closure oracle: span exceeds dim H0; derivation rules are inconsistent");
    queue.push_back(a);
  };

  offer(highest_vector<Rational>(ctx, mu));
  while (!queue.empty()) {
    Loc a = std::move(queue.front());
    queue.pop_front();
    // e_kl acts as _{lk}D.
    for (int k = 1; k <= size; ++k)
      for (int l = 1; l <= size; ++l)
        if (k != l) offer(derive_compact(a, DerivationId{l, k}));
  }

  for (const auto& [w, space] : spaces) result.weight_dims[w] = static_cast<std::int64_t>(space.dim());
  result.irreducible = result.dim_closure == result.dim_induced;

  auto kappa = kappa_weight(mu);
  std::vector<long> key = kappa.plus;
  key.insert(key.end(), kappa.minus.begin(), kappa.minus.end());
  auto it = result.weight_dims.find(key);
  result.kappa_dim = it == result.weight_dims.end() ? 0 : it->second;
  return result;
}

}  // namespace glmn

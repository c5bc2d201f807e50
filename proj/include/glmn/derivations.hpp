#pragma once

#include <bit>
#include <span>
#include <stdexcept>
#include <vector>

#include "glmn/superalg.hpp"
#include "glmn/weights.hpp"

namespace glmn {

/// Right superderivation _{kl}D: replaces column index k by l on generators,
/// (c_{r,k})_{kl}D = c_{r,l}, and extends by
/// (ab)D = (-1)^{|D||b|} (a)D b + a (b)D.
struct DerivationId {
  int k;
  int l;
  int parity(const RingContext& ctx) const { return (ctx.parity(k) + ctx.parity(l)) & 1; }
};

template <class S>
Polynomial<S> derive(const Polynomial<S>& f, DerivationId d) {
  const RingContext& ctx = f.context();
  ctx.check_index(d.k);
  ctx.check_index(d.l);
  const int dpar = d.parity(ctx);
  const int size = ctx.size();
  std::vector<Term<S>> out;
  for (const auto& term : f.terms()) {
    const Monomial& mono = term.mono;
    for (int row = 1; row <= size; ++row) {
      const int g = ctx.generator_index(row, d.k);
      const int e = mono.exps[g];
      if (e == 0) continue;
      const int gp = ctx.generator_index(row, d.l);
      const bool g_odd = ctx.generator_parity(row, d.k) == 1;
      const bool gp_odd = ctx.generator_parity(row, d.l) == 1;

      Monomial rest = mono;
      rest.exps[g] = static_cast<std::uint8_t>(e - 1);
      if (g_odd) rest.odd &= ~(std::uint64_t{1} << g);

      // The derivation passes every odd factor standing to the right of g.
      const std::uint64_t after = g >= 63 ? 0 : (rest.odd >> (g + 1));
      int sign = (dpar && (std::popcount(after) & 1)) ? -1 : 1;

      if (gp_odd) {
        if (rest.odd & (std::uint64_t{1} << gp)) continue;  // odd square
        // Move c_{row,l} from g's slot to its canonical slot.
        const int lo = std::min(g, gp);
        const int hi = std::max(g, gp);
        const std::uint64_t between = (hi - lo <= 1) ? 0 : ((rest.odd >> (lo + 1)) & ((std::uint64_t{1} << (hi - lo - 1)) - 1));
        if (std::popcount(between) & 1) sign = -sign;
        rest.odd |= std::uint64_t{1} << gp;
      }
      if (rest.exps[gp] == 255) throw std::overflow_error("monomial exponent overflow");
      rest.exps[gp] = static_cast<std::uint8_t>(rest.exps[gp] + 1);
      out.push_back({rest, term.coeff * ScalarTraits<S>::from_int(sign * e, ctx.characteristic)});
    }
  }
  return Polynomial<S>::from_terms(ctx, std::move(out));
}

/// Quotient rule: (f / D^k) ↦ ((f)D · D - k·f·(D)D) / D^{k+1}. D is even, so
/// no sign enters. The D-power always grows by one.
template <class S>
Localized<S> derive(const Localized<S>& a, DerivationId d) {
  const RingContext& ctx = a.context();
  const auto D = det_c11<S>(ctx);
  auto num = derive(a.numerator, d) * D;
  if (a.d_power != 0 && !a.is_zero()) {
    num = Polynomial<S>::add_scaled(num, a.numerator * derive(D, d), a.numerator.scalar(-a.d_power));
  }
  return Localized<S>(std::move(num), a.d_power + 1);
}

/// Same element as `derive(a, d)`, but keeps the D-power when (D)_dD = 0
/// (true unless k <= m and either l > m or l = k).
template <class S>
Localized<S> derive_compact(const Localized<S>& a, DerivationId d) {
  const RingContext& ctx = a.context();
  const bool touches_d = d.k <= ctx.m && (d.l > ctx.m || d.l == d.k);
  if (!touches_d || a.d_power == 0) {
    auto num = derive(a.numerator, d);
    return Localized<S>(std::move(num), a.d_power);
  }
  return derive(a, d);
}

/// A_ij = (-1)^{i+j} det(C_11 without row j and column i); C_11^{-1} = A / D.
template <class S>
Polynomial<S> adjugate_entry(const RingContext& ctx, int i, int j) {
  if (i < 1 || i > ctx.m || j < 1 || j > ctx.m) throw std::out_of_range("adjugate_entry: indices must lie in 1..m");
  std::vector<int> rows, cols;
  for (int r = 1; r <= ctx.m; ++r)
    if (r != j) rows.push_back(r);
  for (int c = 1; c <= ctx.m; ++c)
    if (c != i) cols.push_back(c);
  auto minor = leibniz_det<S>(ctx, rows, cols);
  return ((i + j) & 1) ? -minor : minor;
}

/// Σ_a A_{ia} c_{aj}, i.e. the numerator of y_ij = φ(c_ij).
template <class S>
Polynomial<S> y_numerator(const RingContext& ctx, int i, int j) {
  Polynomial<S> sum(ctx);
  for (int a = 1; a <= ctx.m; ++a) sum += adjugate_entry<S>(ctx, i, a) * Polynomial<S>::generator(ctx, a, j);
  return sum;
}

/// y_ij = (Σ_a A_{ia} c_{aj}) / D for 1 <= i <= m < j.
template <class S>
Localized<S> y(const RingContext& ctx, int i, int j) {
  if (i < 1 || i > ctx.m || j <= ctx.m || j > ctx.size()) throw std::out_of_range("y: need 1 <= i <= m < j <= m+n");
  return Localized<S>(y_numerator<S>(ctx, i, j), 1);
}

/// φ(c_kl) = c_kl - Σ_t c_{kt} y_{tl} for k, l > m, returned over D^1.
template <class S>
Localized<S> phi_c(const RingContext& ctx, int k, int l) {
  if (k <= ctx.m || l <= ctx.m || k > ctx.size() || l > ctx.size()) throw std::out_of_range("phi_c: need k, l > m");
  auto num = det_c11<S>(ctx) * Polynomial<S>::generator(ctx, k, l);
  for (int t = 1; t <= ctx.m; ++t) num -= Polynomial<S>::generator(ctx, k, t) * y_numerator<S>(ctx, t, l);
  return Localized<S>(std::move(num), 1);
}

/// D⁺(i_1, ..., i_s): rows 1..s, the given columns.
template <class S>
Polynomial<S> det_plus(const RingContext& ctx, std::span<const int> cols) {
  if (static_cast<int>(cols.size()) > ctx.size()) throw std::invalid_argument("det_plus: too many columns");
  std::vector<int> rows(cols.size());
  for (std::size_t a = 0; a < rows.size(); ++a) rows[a] = static_cast<int>(a) + 1;
  return leibniz_det<S>(ctx, rows, cols);
}

/// General minor C(rows | cols).
struct MinorSpec {
  std::vector<int> rows;
  std::vector<int> cols;
};

template <class S>
Polynomial<S> minor(const RingContext& ctx, const MinorSpec& spec) {
  return leibniz_det<S>(ctx, spec.rows, spec.cols);
}

/// D⁻(j_1, ..., j_s): determinant of (φ(c_{m+a, j_b}))_{a,b}, over D^s.
template <class S>
Localized<S> det_minus(const RingContext& ctx, std::span<const int> cols) {
  const int s = static_cast<int>(cols.size());
  if (s > ctx.n) throw std::invalid_argument("det_minus: more than n columns");
  for (int j : cols)
    if (j <= ctx.m || j > ctx.size()) throw std::out_of_range("det_minus: columns must lie in m+1..m+n");
  std::vector<int> sorted(cols.begin(), cols.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return Localized<S>(Polynomial<S>(ctx), s);

  std::vector<std::vector<Polynomial<S>>> entry(s, std::vector<Polynomial<S>>(s));
  for (int a = 0; a < s; ++a)
    for (int b = 0; b < s; ++b) entry[a][b] = phi_c<S>(ctx, ctx.m + a + 1, cols[b]).numerator;

  std::vector<int> perm(s);
  for (int i = 0; i < s; ++i) perm[i] = i;
  Polynomial<S> sum(ctx);
  do {
    int inversions = 0;
    for (int i = 0; i < s; ++i)
      for (int j = i + 1; j < s; ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto prod = Polynomial<S>::constant(ctx, (inversions & 1) ? -1 : 1);
    for (int a = 0; a < s; ++a) prod = prod * entry[a][perm[a]];
    sum += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Localized<S>(std::move(sum), s);
}

/// Formal product of D⁻ determinants, one column sequence per factor.
using DMinusProduct = std::vector<std::vector<int>>;

template <class S>
Localized<S> evaluate(const RingContext& ctx, const DMinusProduct& product) {
  Localized<S> acc(Polynomial<S>::constant(ctx, 1), 0);
  for (const auto& cols : product) acc = acc * det_minus<S>(ctx, cols);
  return acc;
}

/// _{al}~D extended to products as a derivation: in each factor containing the
/// entry a, replace it by l; sum over factors. Factors without a contribute 0.
template <class S>
Localized<S> entry_replace_derive(const RingContext& ctx, const DMinusProduct& product, int a, int l) {
  int total_power = 0;
  for (const auto& cols : product) total_power += static_cast<int>(cols.size());
  Localized<S> sum(Polynomial<S>(ctx), total_power);
  for (std::size_t f = 0; f < product.size(); ++f) {
    auto it = std::find(product[f].begin(), product[f].end(), a);
    if (it == product[f].end()) continue;
    DMinusProduct replaced = product;
    replaced[f][static_cast<std::size_t>(it - product[f].begin())] = l;
    sum = sum + evaluate<S>(ctx, replaced);
  }
  return sum;
}

/// v⁺ = Π_{a=1}^m D⁺(1..a)^{λ⁺_a - λ⁺_{a+1}}; a negative λ⁺_m becomes a D-power.
template <class S>
Localized<S> highest_vector_plus(const RingContext& ctx, std::span<const long> lambda_plus) {
  if (static_cast<int>(lambda_plus.size()) != ctx.m) throw std::invalid_argument("highest_vector_plus: λ⁺ must have m entries");
  for (std::size_t i = 1; i < lambda_plus.size(); ++i)
    if (lambda_plus[i] > lambda_plus[i - 1]) throw std::invalid_argument("highest_vector_plus: λ⁺ not dominant");
  auto acc = Polynomial<S>::constant(ctx, 1);
  std::vector<int> cols;
  int d_power = 0;
  for (int a = 1; a <= ctx.m; ++a) {
    cols.push_back(a);
    long next = a < ctx.m ? lambda_plus[a] : 0;
    long e = lambda_plus[a - 1] - next;
    if (e > 0) acc = acc * power(det_plus<S>(ctx, cols), static_cast<int>(e));
    else if (e < 0) d_power = static_cast<int>(-e);  // only possible for a = m
  }
  return Localized<S>(std::move(acc), d_power);
}

/// v⁻ = Π_{b=1}^n D⁻(m+1..m+b)^{λ⁻_b - λ⁻_{b+1}}; needs λ⁻_n >= 0.
template <class S>
Localized<S> highest_vector_minus(const RingContext& ctx, std::span<const long> lambda_minus) {
  if (static_cast<int>(lambda_minus.size()) != ctx.n) throw std::invalid_argument("highest_vector_minus: λ⁻ must have n entries");
  for (std::size_t i = 1; i < lambda_minus.size(); ++i)
    if (lambda_minus[i] > lambda_minus[i - 1]) throw std::invalid_argument("highest_vector_minus: λ⁻ not dominant");
  if (lambda_minus.back() < 0) throw std::invalid_argument("highest_vector_minus: λ⁻_n < 0; apply berezin_normalize first");
  Localized<S> acc(Polynomial<S>::constant(ctx, 1), 0);
  std::vector<int> cols;
  for (int b = 1; b <= ctx.n; ++b) {
    cols.push_back(ctx.m + b);
    long next = b < ctx.n ? lambda_minus[b] : 0;
    long e = lambda_minus[b - 1] - next;
    if (e == 0) continue;
    auto factor = det_minus<S>(ctx, cols);
    acc = acc * Localized<S>(power(factor.numerator, static_cast<int>(e)), factor.d_power * static_cast<int>(e));
  }
  return acc;
}

/// v = v⁺ v⁻.
template <class S>
Localized<S> highest_vector(const RingContext& ctx, const Weight& lambda) {
  require_dominant(lambda);
  if (lambda.m() != ctx.m || lambda.n() != ctx.n) throw std::invalid_argument("highest_vector: weight shape does not match ring");
  return highest_vector_plus<S>(ctx, lambda.plus) * highest_vector_minus<S>(ctx, lambda.minus);
}

/// Π over the given rows (in order) of y_{i,m+1} ... y_{i,m+n}.
template <class S>
Localized<S> y_product(const RingContext& ctx, std::span<const int> rows) {
  Localized<S> acc(Polynomial<S>::constant(ctx, 1), 0);
  for (int i : rows)
    for (int j = ctx.m + 1; j <= ctx.size(); ++j) acc = acc * y<S>(ctx, i, j);
  return acc;
}

/// y_{i,first} ... y_{i,last} (one row, a contiguous column range).
template <class S>
Localized<S> y_row_segment(const RingContext& ctx, int i, int first, int last) {
  Localized<S> acc(Polynomial<S>::constant(ctx, 1), 0);
  for (int j = first; j <= last; ++j) acc = acc * y<S>(ctx, i, j);
  return acc;
}

/// _iD = _{i,m+1}D then _{i,m+2}D ... then _{i,m+n}D.
template <class S>
Localized<S> row_derivation_chain(const Localized<S>& a, int i) {
  const RingContext& ctx = a.context();
  if (i < 1 || i > ctx.m) throw std::out_of_range("row_derivation_chain: row must lie in 1..m");
  Localized<S> cur = a;
  for (int l = ctx.m + 1; l <= ctx.size(); ++l) cur = derive(cur, DerivationId{i, l});
  return cur;
}

}  // namespace glmn

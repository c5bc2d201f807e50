#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "glmn/scalar.hpp"

namespace glmn {

// ---------------------------------------------------------------------------
// Ring context and generators
// ---------------------------------------------------------------------------

/// Generators c_ij are packed row-major into a 64-slot exponent array, so the
/// ring supports m + n <= 8.
inline constexpr int kMaxGenerators = 64;
inline constexpr int kMaxOrder = 8;

/// A(m|n) over a field of characteristic 0 or an odd prime.
struct RingContext {
  int m = 1;
  int n = 1;
  std::uint32_t characteristic = 0;

  RingContext() = default;
  RingContext(int m_, int n_, std::uint32_t characteristic_);

  int size() const { return m + n; }
  /// |i| = 0 for i <= m, 1 otherwise.
  int parity(int index) const { return index > m ? 1 : 0; }
  int generator_parity(int row, int col) const { return (parity(row) + parity(col)) & 1; }
  /// Position of c_{row,col} in the canonical (lexicographic) generator order.
  int generator_index(int row, int col) const { return (row - 1) * size() + (col - 1); }
  int row_of(int index) const { return index / size() + 1; }
  int col_of(int index) const { return index % size() + 1; }
  void check_index(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("index outside 1..m+n");
  }

  friend bool operator==(const RingContext&, const RingContext&) = default;
};

/// Generator c_{row,col}. Parity is computed from the indices, never stored.
struct Generator {
  int row;
  int col;
  int parity(const RingContext& ctx) const { return ctx.generator_parity(row, col); }
};

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// Product of generators. Even generators carry arbitrary exponents; odd ones
/// appear at most once and are implicitly ordered by generator index, so the
/// monomial stands for c_{o_1} c_{o_2} ... with o_1 < o_2 < ... on its odd part.
struct Monomial {
  std::array<std::uint8_t, kMaxGenerators> exps{};
  std::uint64_t odd = 0;  // bit g set iff odd generator g occurs

  int degree() const {
    int d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  int odd_degree() const { return std::popcount(odd); }
  int parity() const { return odd_degree() & 1; }
  bool is_one() const { return degree() == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.odd == b.odd && a.exps == b.exps;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return std::memcmp(a.exps.data(), b.exps.data(), kMaxGenerators) < 0;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t words[kMaxGenerators / 8];
    std::memcpy(words, m.exps.data(), kMaxGenerators);
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Number of pairs (x in a, y in b) with x > y; the sign of a·b is (-1)^that.
inline int odd_crossings(std::uint64_t a, std::uint64_t b) {
  int count = 0;
  while (b != 0) {
    int y = std::countr_zero(b);
    b &= b - 1;
    count += y >= 63 ? 0 : std::popcount(a >> (y + 1));
  }
  return count;
}

/// Monomial for a single generator.
Monomial make_monomial(const RingContext& ctx, int row, int col, int exponent = 1);

/// Builds the canonical monomial of an ordered product of generators.
/// Returns the sign picked up while sorting the odd factors (0 when an odd
/// generator repeats).
std::pair<int, Monomial> monomial_from_sequence(const RingContext& ctx, std::span<const Generator> factors);

/// sign·product = a·b; sign = 0 iff a and b share an odd generator.
std::pair<int, Monomial> mono_mul(const Monomial& a, const Monomial& b);

std::string render_monomial(const RingContext& ctx, const Monomial& m);

/// Canonical display order: total degree ascending, then descending
/// exponent vector in generator order (so c[1,1] precedes c[1,2]).
bool display_less(const Monomial& a, const Monomial& b);

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

template <class S>
struct Term {
  Monomial mono;
  S coeff;
};

/// Element of A(m|n): finite sum of monomials with nonzero coefficients.
/// Terms are kept sorted by `Monomial::operator<`.
template <class S>
class Polynomial {
 public:
  using Traits = ScalarTraits<S>;

  Polynomial() = default;
  explicit Polynomial(const RingContext& ctx) : ctx_(ctx) {}

  static Polynomial constant(const RingContext& ctx, std::int64_t c) {
    return constant(ctx, Traits::from_int(c, ctx.characteristic));
  }
  static Polynomial constant(const RingContext& ctx, const S& c) {
    Polynomial p(ctx);
    if (!Traits::is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial generator(const RingContext& ctx, int row, int col) {
    Polynomial p(ctx);
    p.terms_.push_back({make_monomial(ctx, row, col), Traits::from_int(1, ctx.characteristic)});
    return p;
  }
  /// Assembles a polynomial from arbitrary (possibly repeated, zero) terms.
  static Polynomial from_terms(const RingContext& ctx, std::vector<Term<S>> terms);

  const RingContext& context() const { return ctx_; }
  const std::vector<Term<S>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  S scalar(std::int64_t c) const { return Traits::from_int(c, ctx_.characteristic); }

  /// 0 or 1 when every term has the same parity; -1 for mixed parity.
  int parity() const {
    if (terms_.empty()) return 0;
    int p = terms_.front().mono.parity();
    for (const auto& t : terms_)
      if (t.mono.parity() != p) return -1;
    return p;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = add_scaled(*this, o, scalar(1)); }
  Polynomial& operator-=(const Polynomial& o) { return *this = add_scaled(*this, o, scalar(-1)); }
  Polynomial& operator*=(const Polynomial& o) { return *this = (*this) * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, a.scalar(1)); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, a.scalar(-1)); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend Polynomial operator*(const S& c, const Polynomial& a) { return scale(a, c); }
  friend Polynomial operator*(std::int64_t c, const Polynomial& a) { return scale(a, a.scalar(c)); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    a.require_same(b);
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }

  /// a + c·b.
  static Polynomial add_scaled(const Polynomial& a, const Polynomial& b, const S& c);
  static Polynomial scale(const Polynomial& a, const S& c);
  static Polynomial multiply(const Polynomial& a, const Polynomial& b);

  void require_same(const Polynomial& o) const {
    if (!(ctx_ == o.ctx_)) throw std::invalid_argument("polynomials live in different rings");
  }

 private:
  RingContext ctx_;
  std::vector<Term<S>> terms_;
};

template <class S>
Polynomial<S> Polynomial<S>::from_terms(const RingContext& ctx, std::vector<Term<S>> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term<S>& a, const Term<S>& b) { return a.mono < b.mono; });
  Polynomial p(ctx);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && Traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && Traits::is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

template <class S>
Polynomial<S> Polynomial<S>::add_scaled(const Polynomial& a, const Polynomial& b, const S& c) {
  a.require_same(b);
  Polynomial r(a.ctx_);
  if (Traits::is_zero(c)) return a;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->mono < j->mono)) {
      r.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->mono < i->mono) {
      r.terms_.push_back({j->mono, c * j->coeff});
      ++j;
    } else {
      S s = i->coeff + c * j->coeff;
      if (!Traits::is_zero(s)) r.terms_.push_back({i->mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

template <class S>
Polynomial<S> Polynomial<S>::scale(const Polynomial& a, const S& c) {
  Polynomial r(a.ctx_);
  if (Traits::is_zero(c)) return r;
  r.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) {
    S s = t.coeff * c;
    if (!Traits::is_zero(s)) r.terms_.push_back({t.mono, std::move(s)});
  }
  return r;
}

template <class S>
Polynomial<S> Polynomial<S>::multiply(const Polynomial& a, const Polynomial& b) {
  a.require_same(b);
  Polynomial r(a.ctx_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.terms_.size() == 1 && b.terms_.front().mono.is_one()) return scale(a, b.terms_.front().coeff);
  if (a.terms_.size() == 1 && a.terms_.front().mono.is_one()) return scale(b, a.terms_.front().coeff);

  std::unordered_map<Monomial, S, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [sign, mono] = mono_mul(ta.mono, tb.mono);
      if (sign == 0) continue;
      S prod = ta.coeff * tb.coeff;
      auto [it, inserted] = acc.try_emplace(mono, prod);
      if (sign > 0) {
        if (!inserted) it->second += prod;
      } else {
        if (inserted) it->second = -prod;
        else it->second -= prod;
      }
    }
  }
  r.terms_.reserve(acc.size());
  for (auto& [mono, coeff] : acc) {
    if (!Traits::is_zero(coeff)) r.terms_.push_back({mono, std::move(coeff)});
  }
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term<S>& x, const Term<S>& y) { return x.mono < y.mono; });
  return r;
}

template <class S>
Polynomial<S> power(const Polynomial<S>& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("power: negative exponent");
  auto result = Polynomial<S>::constant(base.context(), 1);
  auto b = base;
  while (exponent > 0) {
    if (exponent & 1) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

/// Canonical text form, e.g. `2*c[1,1]^2*c[1,2] - c[2,1]`.
template <class S>
std::string render(const Polynomial<S>& p) {
  using Traits = ScalarTraits<S>;
  if (p.is_zero()) return "0";
  std::vector<const Term<S>*> order;
  order.reserve(p.size());
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Term<S>* a, const Term<S>* b) { return display_less(a->mono, b->mono); });

  std::string out;
  bool first = true;
  for (const Term<S>* t : order) {
    bool negative = Traits::is_negative(t->coeff);
    S magnitude = negative ? S(-t->coeff) : t->coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono = render_monomial(p.context(), t->mono);
    if (mono.empty()) {
      out += Traits::to_string(magnitude);
    } else if (Traits::is_one(magnitude)) {
      out += mono;
    } else {
      out += Traits::to_string(magnitude) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Determinants and the localization at D = det(C_11)
// ---------------------------------------------------------------------------

/// Leibniz determinant of the matrix (c_{rows[a], cols[b]}), factors multiplied
/// in ascending row position. Returns 0 on repeated rows or columns.
template <class S>
Polynomial<S> leibniz_det(const RingContext& ctx, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("determinant: rows and cols differ in length");
  for (int r : rows) ctx.check_index(r);
  for (int c : cols) ctx.check_index(c);
  const std::size_t s = rows.size();
  if (s == 0) return Polynomial<S>::constant(ctx, 1);
  auto has_repeat = [](std::span<const int> v) {
    std::vector<int> w(v.begin(), v.end());
    std::sort(w.begin(), w.end());
    return std::adjacent_find(w.begin(), w.end()) != w.end();
  };
  if (has_repeat(rows) || has_repeat(cols)) return Polynomial<S>(ctx);

  std::vector<int> perm(s);
  for (std::size_t i = 0; i < s; ++i) perm[i] = static_cast<int>(i);
  std::vector<Term<S>> terms;
  std::vector<Generator> factors(s);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = i + 1; j < s; ++j)
        if (perm[i] > perm[j]) ++inversions;
    for (std::size_t a = 0; a < s; ++a) factors[a] = Generator{rows[a], cols[perm[a]]};
    auto [sign, mono] = monomial_from_sequence(ctx, factors);
    if (sign == 0) continue;
    if (inversions & 1) sign = -sign;
    terms.push_back({mono, ScalarTraits<S>::from_int(sign, ctx.characteristic)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial<S>::from_terms(ctx, std::move(terms));
}

/// D = det(C_11).
template <class S>
Polynomial<S> det_c11(const RingContext& ctx) {
  std::vector<int> idx(ctx.m);
  for (int i = 0; i < ctx.m; ++i) idx[i] = i + 1;
  return leibniz_det<S>(ctx, idx, idx);
}

/// numerator / D^d_power. The representation is not reduced; equality is
/// decided by cross-multiplication.
template <class S>
struct Localized {
  Polynomial<S> numerator;
  int d_power = 0;

  Localized() = default;
  explicit Localized(Polynomial<S> num, int k = 0) : numerator(std::move(num)), d_power(k) {
    if (k < 0) throw std::invalid_argument("Localized: negative D-power");
  }

  const RingContext& context() const { return numerator.context(); }
  bool is_zero() const { return numerator.is_zero(); }
  int parity() const { return numerator.parity(); }

  Localized operator-() const { return Localized(-numerator, d_power); }
};

/// Rewrites `a` over the denominator D^k, k >= a.d_power.
template <class S>
Polynomial<S> numerator_at(const Localized<S>& a, int k) {
  if (k < a.d_power) throw std::invalid_argument("numerator_at: target D-power too small");
  if (k == a.d_power || a.is_zero()) return a.numerator;
  return a.numerator * power(det_c11<S>(a.context()), k - a.d_power);
}

/// f / D^k == g / D^l  iff  f·D^l == g·D^k. D is a non-zero-divisor, so the
/// common power min(k, l) is cancelled first.
template <class S>
bool loc_eq(const Localized<S>& a, const Localized<S>& b) {
  a.numerator.require_same(b.numerator);
  int k = std::max(a.d_power, b.d_power);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return numerator_at(a, k) == numerator_at(b, k);
}

template <class S>
Localized<S> operator+(const Localized<S>& a, const Localized<S>& b) {
  int k = std::max(a.d_power, b.d_power);
  return Localized<S>(numerator_at(a, k) + numerator_at(b, k), k);
}

template <class S>
Localized<S> operator-(const Localized<S>& a, const Localized<S>& b) {
  int k = std::max(a.d_power, b.d_power);
  return Localized<S>(numerator_at(a, k) - numerator_at(b, k), k);
}

template <class S>
Localized<S> operator*(const Localized<S>& a, const Localized<S>& b) {
  return Localized<S>(a.numerator * b.numerator, a.d_power + b.d_power);
}

template <class S>
Localized<S> operator*(const S& c, const Localized<S>& a) {
  return Localized<S>(c * a.numerator, a.d_power);
}

template <class S>
Localized<S> operator*(std::int64_t c, const Localized<S>& a) {
  return Localized<S>(c * a.numerator, a.d_power);
}

template <class S>
std::string render(const Localized<S>& a) {
  std::string s = render(a.numerator);
  if (a.d_power != 0) s += " / D^" + std::to_string(a.d_power);
  return s;
}

}  // namespace glmn

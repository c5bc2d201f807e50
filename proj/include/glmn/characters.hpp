#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glmn/weights.hpp"

namespace glmn {

/// Integer Laurent polynomial in x_1..x_m, y_1..y_n. Exponent vectors have
/// length m + n (x-exponents first). Coefficient arithmetic is overflow-checked.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  LaurentPoly() = default;
  LaurentPoly(int m, int n) : m_(m), n_(n) {}

  static LaurentPoly one(int m, int n);
  static LaurentPoly monomial(int m, int n, Exponents e, std::int64_t coeff = 1);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, std::int64_t c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Value at x = y = (1, ..., 1).
  std::int64_t at_ones() const;
  /// Applies a permutation to the x-variables and one to the y-variables.
  LaurentPoly permuted(const std::vector<int>& x_perm, const std::vector<int>& y_perm) const;
  /// Exchanges the roles of x and y: result lives in (n|m) variables.
  LaurentPoly swap_blocks() const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::map<Exponents, std::int64_t> terms_;
};

/// Canonical rendering: exponent vectors in ascending lexicographic order,
/// monomials as `x1^a*...*y1^b` with zero exponents omitted.
std::string render(const LaurentPoly& p);

enum class VariableBlock { X, Y };

/// Schur function of a weakly decreasing integer vector μ in the x block
/// (μ has length <= m) or the y block (length <= n). Non-partitions are handled
/// by the determinant twist S_μ = (z_1...z_k)^{μ_k} S_{μ - μ_k}.
LaurentPoly schur(const std::vector<long>& mu, int m, int n, VariableBlock block);

/// Number of semistandard tableaux of shape μ (a partition) in k letters.
std::int64_t count_ssyt(const Partition& mu, int letters);

/// (m|n)-semistandard tableau generating function of shape λ.
LaurentPoly hook_schur(const Partition& lambda, int m, int n);

/// Π_{i,j} (1 + y_j/x_i) · S_{λ⁺}(x) · S_{λ⁻}(y).
LaurentPoly char_induced(const Weight& lambda);

/// Π_{i,j} (x_i + y_j) · S_μ(x) · S_ν(y) with μ_i = λ_i - n, ν = conjugate of (λ_{m+1}, ...).
LaurentPoly factorization_product(const Partition& lambda, int m, int n);

/// hook_schur(λ) == factorization_product(λ). Requires λ_m >= n.
bool factorization_check(const Partition& lambda, int m, int n);

std::int64_t dim_even(const Weight& lambda);
std::int64_t dim_induced(const Weight& lambda);

}  // namespace glmn

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace glmn {

/// Integral weight (λ⁺ | λ⁻) of GL(m|n). Construction does not enforce
/// dominance; callers that need it use `Weight::dominant` or `require_dominant`.
struct Weight {
  std::vector<long> plus;   // λ⁺, length m
  std::vector<long> minus;  // λ⁻, length n

  int m() const { return static_cast<int>(plus.size()); }
  int n() const { return static_cast<int>(minus.size()); }

  bool is_dominant() const;
  /// λ⁺_m >= 0 and λ⁻_n >= 0.
  bool is_polynomial() const;

  /// Throws std::invalid_argument unless both parts are weakly decreasing.
  static Weight dominant(std::vector<long> plus, std::vector<long> minus);

  friend bool operator==(const Weight&, const Weight&) = default;
};

void require_dominant(const Weight& lambda);

/// Parses "a1,...,am|b1,...,bn". Entry counts are checked against m and n
/// when those are positive.
Weight parse_weight(std::string_view text, int m = 0, int n = 0);
std::string format_weight(const Weight& lambda);

using Partition = std::vector<long>;

/// Drops trailing zeros; throws unless weakly decreasing and non-negative.
Partition normalize_partition(Partition parts);
Partition conjugate(const Partition& p);
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

bool is_hook(const Partition& lambda, int m, int n);

// ---------------------------------------------------------------------------
// Typicality
// ---------------------------------------------------------------------------

/// ω_ij(λ) = λ⁺_i + λ⁻_j + m + 1 - i - j, with 1-based i, j.
long omega(const Weight& lambda, int i, int j);

struct TypicalityReport {
  std::vector<std::vector<long>> omega_matrix;     // m × n
  std::vector<std::pair<int, int>> atypical_positions;  // 1-based (i, j)
  bool typical = true;
};

/// In characteristic 0 a position is atypical iff ω_ij = 0; in characteristic
/// p iff p divides ω_ij.
TypicalityReport is_typical(const Weight& lambda, std::uint32_t characteristic);

/// ω_i(λ) = Π_j ω_ij(λ).
long omega_row_product(const Weight& lambda, int i);

// ---------------------------------------------------------------------------
// Hook partitions, Berezinian twist and κ
// ---------------------------------------------------------------------------

Weight hook_to_weight(const Partition& lambda, int m, int n);
/// Inverse of hook_to_weight; requires a polynomial dominant weight.
Partition weight_to_hook(const Weight& lambda);

struct Normalized {
  Weight weight;  // λ - λ⁻_n β, so weight.minus.back() == 0
  long twist;     // λ⁻_n
};

/// Shifts by a multiple of β = (-1,...,-1 | 1,...,1).
Normalized berezin_normalize(const Weight& lambda);
Weight shift_by_beta(const Weight& lambda, long t);

/// κ = λ + (-n,...,-n | m,...,m).
Weight kappa_weight(const Weight& lambda);

}  // namespace glmn

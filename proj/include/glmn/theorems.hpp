#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glmn/weights.hpp"

namespace glmn {

// ---------------------------------------------------------------------------
// Identity verification
// ---------------------------------------------------------------------------

struct VerificationFailure {
  std::string instance;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string target;
  int m = 0;
  int n = 0;
  std::uint32_t characteristic = 0;
  std::optional<Weight> lambda;
  std::size_t instances_checked = 0;
  std::vector<VerificationFailure> failures;
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
};

/// (y_ij)_{kl}D = y_il y_kj for 1 <= i,k <= m < j,l.
VerificationReport verify_lemma1(int m, int n, std::uint32_t characteristic);

/// (φ(c_ij))_{kl}D = φ(c_il) y_kj for k <= m < i,j,l; both sides odd.
VerificationReport verify_lemma2(int m, int n, std::uint32_t characteristic);

/// Derivatives of D⁻ determinants against their column-replacement expansion,
/// and of products of them against the _{al}~D form. `max_factors` bounds the
/// number of D⁻ factors in the product instances (0 picks 2 when m,n <= 2, else 1).
VerificationReport verify_lemma3_4(int m, int n, std::uint32_t characteristic, int max_factors = 0);

/// (v⁺)_{ml}D = λ⁺_m v⁺ y_ml for every l > m.
VerificationReport verify_lemma5(const Weight& lambda, std::uint32_t characteristic);

/// (D⁻(m+1..m+s))_{kl}D: equals D⁻ y_kl for l <= m+s, else the replacement
/// expansion in y_{k,m+1}..y_{k,m+s}.
VerificationReport verify_lemma6(int m, int n, std::uint32_t characteristic);

/// (v)_mD = ω_m(λ) v y_m.
VerificationReport verify_prop7(const Weight& lambda, std::uint32_t characteristic);

/// Odd-column minor expansion C(1..i-1, l, i+1..j) in terms of y_{t,l}.
VerificationReport verify_lemma9(int m, int n, std::uint32_t characteristic);

/// The adjugate identity behind the minor expansion:
/// C(1..j) A_is + (-1)^{i+j} Σ_{k>j} C(1..î..j, k) A_ks = [s <= j] (-1)^{i+s} C(1..ŝ..j | 1..î..j) D.
VerificationReport verify_laplace9(int m, int n, std::uint32_t characteristic);

/// A_ia A_kb - A_ka A_ib = ±D M(ab, ki) (Jacobi's theorem on adjugate minors).
VerificationReport verify_jacobi(int m, int n, std::uint32_t characteristic);

/// (v⁺)_{il}D = λ⁺_i v⁺ y_il + Σ_{j>i} h_j y_jl with h_j built from the minor
/// expansion. i = 0 or l = 0 runs every admissible index.
VerificationReport verify_lemma10(const Weight& lambda, std::uint32_t characteristic, int i = 0, int l = 0);

/// (y_m..y_{i+1} y_{i,m+1}..y_{i,m+s-1})_{i,m+s}D = (m-i-s+1)(same product)·y_{i,m+s}.
VerificationReport verify_lemma11(int m, int n, std::uint32_t characteristic);

/// Even derivations on y_ij, and (y_m...y_1)_{kl}D = 0 for even k != l.
VerificationReport verify_lemma13(int m, int n, std::uint32_t characteristic);

/// Outcome of the full mn-fold derivative (v)_mD..._1D.
struct TopDerivativeStatus {
  bool predicted_zero = false;  // characteristic divides Π_i ω_i(λ)
  bool lhs_zero = false;        // the computed derivative vanishes
  bool vy_nonzero = false;      // v·y_m...y_1 is nonzero
};

struct Prop12Result {
  VerificationReport report;
  TopDerivativeStatus status;
};

/// (v)_mD..._1D = (Π_i ω_i(λ)) v y_m...y_1.
VerificationReport verify_prop12(const Weight& lambda, std::uint32_t characteristic);
Prop12Result verify_prop12_detailed(const Weight& lambda, std::uint32_t characteristic);

/// Dispatch by name: lemma1, lemma2, lemma3_4, lemma5, lemma6, prop7, lemma9,
/// laplace9, jacobi, lemma10, lemma11, lemma13, prop12. Weight-dependent
/// targets require `lambda`.
VerificationReport verify_target(const std::string& target, int m, int n, std::uint32_t characteristic,
                                 const std::optional<Weight>& lambda);
const std::vector<std::string>& verification_targets();
bool target_needs_weight(const std::string& target);

// ---------------------------------------------------------------------------
// Submodule closure oracle (characteristic 0)
// ---------------------------------------------------------------------------

struct ClosureResult {
  Weight normalized;          // λ after the Berezinian twist
  std::int64_t dim_closure = 0;
  std::int64_t dim_induced = 0;
  bool irreducible = false;
  std::int64_t kappa_dim = 0;  // dimension of the κ-weight space of the closure
  std::map<std::vector<long>, std::int64_t> weight_dims;
};

/// Span of v under all e_kl = _{lk}D (k != l), coordinatized per weight space
/// over exact rationals. Throws for characteristic > 0 or when
/// dim_induced(λ) exceeds `max_dim_guard`.
ClosureResult closure_oracle(const Weight& lambda, std::int64_t max_dim_guard = 4096,
                             std::uint32_t characteristic = 0);

// ---------------------------------------------------------------------------
// Decision procedure
// ---------------------------------------------------------------------------

enum class EvenPart { Irreducible, ExternalIrreducible, ExternalReducible, Unavailable };
enum class Verdict { Irreducible, Reducible, Indeterminate };

struct IrreducibilityVerdict {
  bool typical = false;
  EvenPart even_part = EvenPart::Unavailable;
  Verdict induced = Verdict::Indeterminate;
  std::string rationale;
};

/// H⁰(λ) is irreducible iff H⁰_ev(λ) is irreducible and λ is typical. In
/// characteristic 0 the even part is always irreducible; otherwise the caller
/// supplies it (an atypical λ is reducible regardless).
IrreducibilityVerdict decide_irreducible(const Weight& lambda, std::uint32_t characteristic,
                                         std::optional<bool> even_verdict);

struct CorollaryVerdicts {
  Verdict weyl = Verdict::Indeterminate;
  Verdict kac = Verdict::Indeterminate;
};

/// Weyl module: same verdict as H⁰(λ) (contravariant duality). Kac module:
/// typicality alone.
CorollaryVerdicts corollary_verdicts(const Weight& lambda, std::uint32_t characteristic,
                                     std::optional<bool> even_verdict);

std::string to_string(EvenPart e);
std::string to_string(Verdict v);

}  // namespace glmn

#include "glmn/characters.hpp"

#include <functional>
#include <stdexcept>

namespace glmn {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
  return r;
}

// Enumerates fillings of the Young diagram `shape` with letters 0..letters-1
// subject to the row rule (left neighbour a, current b) and column rule
// (upper neighbour a, current b). Calls `emit` with the letter multiplicities.
void enumerate_tableaux(const Partition& shape, int letters, const std::function<bool(int, int)>& row_ok,
                        const std::function<bool(int, int)>& col_ok,
                        const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<std::vector<int>> fill;
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < shape.size(); ++r) {
    fill.emplace_back(shape[r], -1);
    for (long c = 0; c < shape[r]; ++c) cells.emplace_back(static_cast<int>(r), static_cast<int>(c));
  }
  std::vector<int> counts(letters, 0);
  std::function<void(std::size_t)> place = [&](std::size_t idx) {
    if (idx == cells.size()) {
      emit(counts);
      return;
    }
    auto [r, c] = cells[idx];
    for (int b = 0; b < letters; ++b) {
      if (c > 0 && !row_ok(fill[r][c - 1], b)) continue;
      if (r > 0 && !col_ok(fill[r - 1][c], b)) continue;
      fill[r][c] = b;
      ++counts[b];
      place(idx + 1);
      --counts[b];
    }
    fill[r][c] = -1;
  };
  place(0);
}

void require_weakly_decreasing(const std::vector<long>& mu) {
  for (std::size_t i = 1; i < mu.size(); ++i)
    if (mu[i] > mu[i - 1]) throw std::invalid_argument("schur: index vector must be weakly decreasing");
}

}  // namespace

LaurentPoly LaurentPoly::one(int m, int n) { return monomial(m, n, Exponents(m + n, 0), 1); }

LaurentPoly LaurentPoly::monomial(int m, int n, Exponents e, std::int64_t coeff) {
  if (static_cast<int>(e.size()) != m + n) throw std::invalid_argument("LaurentPoly: exponent vector length mismatch");
  LaurentPoly p(m, n);
  p.add_term(e, coeff);
  return p;
}

void LaurentPoly::add_term(const Exponents& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (m_ != o.m_ || n_ != o.n_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_) throw std::invalid_argument("LaurentPoly: variable count mismatch");
  LaurentPoly r(a.m_, a.n_);
  LaurentPoly::Exponents e(a.m_ + a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, checked_mul(ca, cb));
    }
  }
  return r;
}

std::int64_t LaurentPoly::at_ones() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : terms_) s = checked_add(s, c);
  return s;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& x_perm, const std::vector<int>& y_perm) const {
  LaurentPoly r(m_, n_);
  Exponents f(m_ + n_);
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i < m_; ++i) f[x_perm[i]] = e[i];
    for (int j = 0; j < n_; ++j) f[m_ + y_perm[j]] = e[m_ + j];
    r.add_term(f, c);
  }
  return r;
}

LaurentPoly LaurentPoly::swap_blocks() const {
  LaurentPoly r(n_, m_);
  Exponents f(m_ + n_);
  for (const auto& [e, c] : terms_) {
    for (int j = 0; j < n_; ++j) f[j] = e[m_ + j];
    for (int i = 0; i < m_; ++i) f[n_ + i] = e[i];
    r.add_term(f, c);
  }
  return r;
}

std::string render(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    std::string mono;
    for (int v = 0; v < p.m() + p.n(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (v < p.m() ? "x" + std::to_string(v + 1) : "y" + std::to_string(v - p.m() + 1));
      if (e[v] != 1) mono += "^" + std::to_string(e[v]);
    }
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) out += std::to_string(mag);
    else if (mag == 1) out += mono;
    else out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

LaurentPoly schur(const std::vector<long>& mu, int m, int n, VariableBlock block) {
  require_weakly_decreasing(mu);
  const int k = block == VariableBlock::X ? m : n;
  const int offset = block == VariableBlock::X ? 0 : m;
  if (static_cast<int>(mu.size()) > k) {
    // More rows than variables: zero unless the extra parts vanish.
    for (std::size_t i = k; i < mu.size(); ++i)
      if (mu[i] != 0) {
        if (mu[i] > 0) return LaurentPoly(m, n);
        throw std::invalid_argument("schur: negative parts beyond the number of variables");
      }
  }
  std::vector<long> full(k, 0);
  for (int i = 0; i < k && i < static_cast<int>(mu.size()); ++i) full[i] = mu[i];
  long shift = k > 0 ? full.back() : 0;
  Partition shape;
  for (long part : full) shape.push_back(part - shift);
  shape = normalize_partition(shape);

  LaurentPoly r(m, n);
  enumerate_tableaux(
      shape, k, [](int a, int b) { return b >= a; }, [](int a, int b) { return b > a; },
      [&](const std::vector<int>& counts) {
        LaurentPoly::Exponents e(m + n, 0);
        for (int v = 0; v < k; ++v) e[offset + v] = counts[v] + static_cast<int>(shift);
        r.add_term(e, 1);
      });
  return r;
}

std::int64_t count_ssyt(const Partition& mu, int letters) {
  std::int64_t count = 0;
  enumerate_tableaux(
      normalize_partition(mu), letters, [](int a, int b) { return b >= a; }, [](int a, int b) { return b > a; },
      [&](const std::vector<int>&) { ++count; });
  return count;
}

LaurentPoly hook_schur(const Partition& lambda, int m, int n) {
  Partition shape = normalize_partition(lambda);
  if (!is_hook(shape, m, n)) throw std::invalid_argument("hook_schur: not an (m|n)-hook partition");
  // Letters 0..m-1 are 1 < ... < m, letters m..m+n-1 are 1' < ... < n'.
  auto primed = [m](int letter) { return letter >= m; };
  LaurentPoly r(m, n);
  enumerate_tableaux(
      shape, m + n, [&](int a, int b) { return b > a || (b == a && !primed(b)); },
      [&](int a, int b) { return b > a || (b == a && primed(b)); },
      [&](const std::vector<int>& counts) { r.add_term(counts, 1); });
  return r;
}

LaurentPoly char_induced(const Weight& lambda) {
  const int m = lambda.m();
  const int n = lambda.n();
  LaurentPoly r = schur(lambda.plus, m, n, VariableBlock::X) * schur(lambda.minus, m, n, VariableBlock::Y);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      LaurentPoly factor = LaurentPoly::one(m, n);
      LaurentPoly::Exponents e(m + n, 0);
      e[i] = -1;
      e[m + j] = 1;
      factor.add_term(e, 1);
      r = r * factor;
    }
  }
  return r;
}

LaurentPoly factorization_product(const Partition& lambda, int m, int n) {
  Partition shape = normalize_partition(lambda);
  if (!is_hook(shape, m, n)) throw std::invalid_argument("factorization: not an (m|n)-hook partition");
  if (static_cast<int>(shape.size()) < m || shape[m - 1] < n)
    throw std::invalid_argument("factorization formula requires lambda_m >= n");
  std::vector<long> mu(m);
  for (int i = 0; i < m; ++i) mu[i] = shape[i] - n;
  Partition nu_conj(shape.begin() + m, shape.end());
  Partition nu = conjugate(nu_conj);
  LaurentPoly r = schur(mu, m, n, VariableBlock::X) * schur(nu, m, n, VariableBlock::Y);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      LaurentPoly factor(m, n);
      LaurentPoly::Exponents ex(m + n, 0), ey(m + n, 0);
      ex[i] = 1;
      ey[m + j] = 1;
      factor.add_term(ex, 1);
      factor.add_term(ey, 1);
      r = r * factor;
    }
  }
  return r;
}

bool factorization_check(const Partition& lambda, int m, int n) {
  return hook_schur(lambda, m, n) == factorization_product(lambda, m, n);
}

std::int64_t dim_even(const Weight& lambda) {
  require_dominant(lambda);
  auto twisted = [](const std::vector<long>& v) {
    Partition p;
    for (long a : v) p.push_back(a - v.back());
    return p;
  };
  return checked_mul(count_ssyt(twisted(lambda.plus), lambda.m()), count_ssyt(twisted(lambda.minus), lambda.n()));
}

std::int64_t dim_induced(const Weight& lambda) {
  return checked_mul(std::int64_t{1} << (lambda.m() * lambda.n()), dim_even(lambda));
}

}  // namespace glmn

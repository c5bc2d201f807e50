#include "glmn/superalg.hpp"

#include <stdexcept>

namespace glmn {

bool is_supported_characteristic(std::uint32_t characteristic) {
  if (characteristic == 0) return true;
  if (characteristic < 3 || characteristic % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= characteristic; d += 2)
    if (characteristic % d == 0) return false;
  return true;
}

RingContext::RingContext(int m_, int n_, std::uint32_t characteristic_)
    : m(m_), n(n_), characteristic(characteristic_) {
  if (m < 1 || n < 1) throw std::invalid_argument("RingContext: m and n must be positive");
  if (m + n > kMaxOrder) throw std::invalid_argument("RingContext: m + n exceeds " + std::to_string(kMaxOrder));
  if (characteristic == 2)
    throw std::invalid_argument("characteristic 2 is excluded: the ground field must have characteristic different from 2");
  if (!is_supported_characteristic(characteristic))
    throw std::invalid_argument("characteristic must be 0 or an odd prime");
}

Monomial make_monomial(const RingContext& ctx, int row, int col, int exponent) {
  ctx.check_index(row);
  ctx.check_index(col);
  if (exponent < 0 || exponent > 255) throw std::out_of_range("monomial exponent outside 0..255");
  Monomial mono;
  int g = ctx.generator_index(row, col);
  if (ctx.generator_parity(row, col) == 1) {
    if (exponent > 1) throw std::invalid_argument("odd generator raised to a power > 1");
    if (exponent == 1) mono.odd |= std::uint64_t{1} << g;
  }
  mono.exps[g] = static_cast<std::uint8_t>(exponent);
  return mono;
}

std::pair<int, Monomial> monomial_from_sequence(const RingContext& ctx, std::span<const Generator> factors) {
  Monomial mono;
  int sign = 1;
  for (const auto& f : factors) {
    auto [s, prod] = mono_mul(mono, make_monomial(ctx, f.row, f.col));
    if (s == 0) return {0, Monomial{}};
    sign *= s;
    mono = prod;
  }
  return {sign, mono};
}

std::pair<int, Monomial> mono_mul(const Monomial& a, const Monomial& b) {
  if ((a.odd & b.odd) != 0) return {0, Monomial{}};
  Monomial r;
  for (int g = 0; g < kMaxGenerators; ++g) {
    int e = int{a.exps[g]} + int{b.exps[g]};
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exps[g] = static_cast<std::uint8_t>(e);
  }
  r.odd = a.odd | b.odd;
  int sign = (odd_crossings(a.odd, b.odd) & 1) ? -1 : 1;
  return {sign, r};
}

std::string render_monomial(const RingContext& ctx, const Monomial& m) {
  std::string out;
  const int total = ctx.size() * ctx.size();
  for (int g = 0; g < total; ++g) {
    if (m.exps[g] == 0) continue;
    if (!out.empty()) out += "*";
    out += "c[" + std::to_string(ctx.row_of(g)) + "," + std::to_string(ctx.col_of(g)) + "]";
    if (m.exps[g] != 1) out += "^" + std::to_string(m.exps[g]);
  }
  return out;
}

bool display_less(const Monomial& a, const Monomial& b) {
  int da = a.degree();
  int db = b.degree();
  if (da != db) return da < db;
  return std::memcmp(a.exps.data(), b.exps.data(), kMaxGenerators) > 0;
}

}  // namespace glmn

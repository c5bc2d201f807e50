#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace glmn {

/// Exact coefficient scalars.
///
/// Two fields are supported: the rationals (characteristic 0, backed by GMP)
/// and prime fields F_p with p odd. Every polynomial type in the library is
/// templated on one of these; generic code obtains constants through
/// `ScalarTraits<S>::from_int(value, characteristic)`.

using Rational = mpq_class;

/// Element of F_p. The modulus travels with the value so that arithmetic
/// between elements of different fields is detected.
class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t value, std::uint32_t modulus) : p_(modulus) {
    if (modulus < 3) throw std::invalid_argument("ModP: modulus must be an odd prime");
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    v_ = static_cast<std::uint32_t>(r);
  }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModP& operator+=(const ModP& o) {
    check(o);
    std::uint64_t s = std::uint64_t{v_} + o.v_;
    v_ = static_cast<std::uint32_t>(s % p_);
    return *this;
  }
  ModP& operator-=(const ModP& o) {
    check(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} + p_ - o.v_) % p_);
    return *this;
  }
  ModP& operator*=(const ModP& o) {
    check(o);
    v_ = static_cast<std::uint32_t>((std::uint64_t{v_} * o.v_) % p_);
    return *this;
  }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  ModP operator-() const {
    ModP r = *this;
    r.v_ = v_ == 0 ? 0 : p_ - v_;
    return r;
  }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t base = v_, e = p_ - 2, acc = 1;
    while (e > 0) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    ModP r = *this;
    r.v_ = static_cast<std::uint32_t>(acc);
    return r;
  }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend bool operator==(const ModP& a, const ModP& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

 private:
  void check(const ModP& o) const {
    if (p_ != o.p_) throw std::invalid_argument("ModP: mixing elements of different prime fields");
  }

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 3;
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static Rational from_int(std::int64_t v, std::uint32_t /*characteristic*/) {
    return Rational(static_cast<long>(v));
  }
  static bool is_zero(const Rational& a) { return sgn(a) == 0; }
  static bool is_negative(const Rational& a) { return sgn(a) < 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static std::string to_string(const Rational& a) { return a.get_str(); }
};

template <>
struct ScalarTraits<ModP> {
  static ModP from_int(std::int64_t v, std::uint32_t characteristic) { return ModP(v, characteristic); }
  static bool is_zero(const ModP& a) { return a.is_zero(); }
  static bool is_negative(const ModP&) { return false; }
  static bool is_one(const ModP& a) { return a.value() == 1; }
  static std::string to_string(const ModP& a) { return std::to_string(a.value()); }
};

/// Returns true for 0 and for odd primes.
bool is_supported_characteristic(std::uint32_t characteristic);

}  // namespace glmn

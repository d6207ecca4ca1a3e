#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>

#include "weyl_ising/rational.hpp"

namespace weyl_ising {

/// Element of Q(ζ), ζ = exp(2πi/8), in the basis 1, ζ, ζ², ζ³ (ζ⁴ = −1).
class CycInt8Scalar {
 public:
  CycInt8Scalar() = default;
  CycInt8Scalar(const Rational& q) : c_{q, 0, 0, 0} {}  // NOLINT(google-explicit-constructor)
  CycInt8Scalar(long v) : c_{Rational(v), 0, 0, 0} {}   // NOLINT(google-explicit-constructor)

  static CycInt8Scalar from_coords(const Rational& a0, const Rational& a1, const Rational& a2, const Rational& a3) {
    CycInt8Scalar s;
    s.c_ = {a0, a1, a2, a3};
    return s;
  }

  /// ζ^k for any integer k.
  static CycInt8Scalar zeta_pow(long k) {
    const long r = ((k % 8) + 8) % 8;
    CycInt8Scalar s;
    s.c_[r % 4] = r < 4 ? 1 : -1;
    return s;
  }

  const Rational& coord(int i) const { return c_.at(i); }

  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  /// True iff the element lies in Q (the ζ, ζ², ζ³ coordinates vanish).
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  /// Rational value; only meaningful when is_rational().
  const Rational& rational_part() const { return c_[0]; }

  /// k in [0, 8) with *this == ζ^k, if any.
  std::optional<int> unit_exponent() const {
    for (int k = 0; k < 8; ++k)
      if (*this == zeta_pow(k)) return k;
    return std::nullopt;
  }

  CycInt8Scalar& operator+=(const CycInt8Scalar& o) {
    for (int i = 0; i < 4; ++i)
      if (o.c_[i] != 0) c_[i] += o.c_[i];
    return *this;
  }
  CycInt8Scalar& operator-=(const CycInt8Scalar& o) {
    for (int i = 0; i < 4; ++i)
      if (o.c_[i] != 0) c_[i] -= o.c_[i];
    return *this;
  }
  CycInt8Scalar& operator*=(const Rational& q) {
    for (auto& x : c_)
      if (x != 0) x *= q;
    return *this;
  }

  friend CycInt8Scalar operator+(CycInt8Scalar a, const CycInt8Scalar& b) { return a += b; }
  friend CycInt8Scalar operator-(CycInt8Scalar a, const CycInt8Scalar& b) { return a -= b; }
  friend CycInt8Scalar operator-(CycInt8Scalar a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend CycInt8Scalar operator*(CycInt8Scalar a, const Rational& q) { return a *= q; }
  friend CycInt8Scalar operator*(const Rational& q, CycInt8Scalar a) { return a *= q; }

  friend CycInt8Scalar operator*(const CycInt8Scalar& a, const CycInt8Scalar& b) {
    if (b.is_rational()) return a * b.c_[0];
    if (a.is_rational()) return b * a.c_[0];
    CycInt8Scalar r;
    for (int i = 0; i < 4; ++i) {
      if (a.c_[i] == 0) continue;
      for (int j = 0; j < 4; ++j) {
        if (b.c_[j] == 0) continue;
        const int k = i + j;
        if (k < 4)
          r.c_[k] += a.c_[i] * b.c_[j];
        else
          r.c_[k - 4] -= a.c_[i] * b.c_[j];
      }
    }
    return r;
  }
  CycInt8Scalar& operator*=(const CycInt8Scalar& o) { return *this = *this * o; }

  friend bool operator==(const CycInt8Scalar& a, const CycInt8Scalar& b) { return a.c_ == b.c_; }

  std::string to_string() const {
    static const char* names[4] = {"", "z", "z^2", "z^3"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (c_[i] == 0) continue;
      std::string term = c_[i].get_str();
      if (i > 0) term = (c_[i] == 1 ? std::string() : c_[i] == -1 ? std::string("-") : term + "*") + names[i];
      if (!out.empty() && term.front() != '-') out += "+";
      out += term;
    }
    return out.empty() ? "0" : out;
  }

  friend std::ostream& operator<<(std::ostream& os, const CycInt8Scalar& s) { return os << s.to_string(); }

 private:
  std::array<Rational, 4> c_{};
};

}  // namespace weyl_ising

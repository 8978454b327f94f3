#pragma once

#include <array>

namespace jordanlab {

/// Quaternion a + b i + c j + d k, stored as (a, b, c, d).
struct Quaternion {
  std::array<double, 4> c{};

  Quaternion conj() const { return {{c[0], -c[1], -c[2], -c[3]}}; }
  Quaternion operator+(const Quaternion& o) const;
  Quaternion operator-(const Quaternion& o) const;
  Quaternion operator*(const Quaternion& o) const;
};

/// Octonion as a Cayley-Dickson pair (p, q) of quaternions, components
/// e0..e3 = p and e4..e7 = q. Multiplication convention:
///   (p, q)(r, s) = (p r - conj(s) q,  s p + q conj(r)).
struct Octonion {
  std::array<double, 8> c{};

  static Octonion unit(int k);

  Quaternion low() const { return {{c[0], c[1], c[2], c[3]}}; }
  Quaternion high() const { return {{c[4], c[5], c[6], c[7]}}; }
  static Octonion from_pair(const Quaternion& p, const Quaternion& q);

  double real() const { return c[0]; }
  Octonion conj() const;
  double norm() const;

  Octonion operator+(const Octonion& o) const;
  Octonion operator-(const Octonion& o) const;
  Octonion operator*(const Octonion& o) const;
  Octonion operator*(double s) const;
};

}  // namespace jordanlab

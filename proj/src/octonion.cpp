#include "jordanlab/octonion.hpp"

#include <cmath>

namespace jordanlab {

Quaternion Quaternion::operator+(const Quaternion& o) const {
  return {{c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]}};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
  return {{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}};
}

Quaternion Quaternion::operator*(const Quaternion& o) const {
  const auto& [a1, b1, c1, d1] = c;
  const auto& [a2, b2, c2, d2] = o.c;
  return {{a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
           a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
           a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
           a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2}};
}

Octonion Octonion::unit(int k) {
  Octonion o;
  o.c[static_cast<std::size_t>(k)] = 1.0;
  return o;
}

Octonion Octonion::from_pair(const Quaternion& p, const Quaternion& q) {
  return {{p.c[0], p.c[1], p.c[2], p.c[3], q.c[0], q.c[1], q.c[2], q.c[3]}};
}

Octonion Octonion::conj() const {
  Octonion o;
  o.c[0] = c[0];
  for (std::size_t i = 1; i < 8; ++i) o.c[i] = -c[i];
  return o;
}

double Octonion::norm() const {
  double s = 0.0;
  for (double v : c) s += v * v;
  return std::sqrt(s);
}

Octonion Octonion::operator+(const Octonion& o) const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

Octonion Octonion::operator*(double s) const {
  Octonion r;
  for (std::size_t i = 0; i < 8; ++i) r.c[i] = s * c[i];
  return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
  const Quaternion p = low(), q = high(), r = o.low(), s = o.high();
  return from_pair(p * r - s.conj() * q, s * p + q * r.conj());
}

}  // namespace jordanlab

#ifndef ELBM_TYPES_HPP
#define ELBM_TYPES_HPP

#include <cmath>

namespace elbm {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
};

inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

// n rotated by +90 degrees; used as the tangent of a boundary normal.
inline Vec2 perp(Vec2 n) { return {-n.y, n.x}; }

// Symmetric 2x2 tensor (stress-like quantities). Storing three components
// keeps the xy/yx symmetry exact by construction.
struct SymTensor2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  SymTensor2 operator+(SymTensor2 o) const { return {xx + o.xx, xy + o.xy, yy + o.yy}; }
  SymTensor2 operator-(SymTensor2 o) const { return {xx - o.xx, xy - o.xy, yy - o.yy}; }
  SymTensor2 operator*(double s) const { return {xx * s, xy * s, yy * s}; }
  SymTensor2 operator-() const { return {-xx, -xy, -yy}; }

  double trace() const { return xx + yy; }
};

inline SymTensor2 identity2(double s = 1.0) { return {s, 0.0, s}; }

// v . T . w for symmetric T
inline double quad_form(Vec2 v, const SymTensor2& t, Vec2 w) {
  return v.x * t.xx * w.x + v.x * t.xy * w.y + v.y * t.xy * w.x + v.y * t.yy * w.y;
}

// outer-product builder a (x) b + b (x) a, halved when a == b is intended
inline SymTensor2 sym_outer(Vec2 a, Vec2 b) {
  return {2.0 * a.x * b.x, a.x * b.y + a.y * b.x, 2.0 * a.y * b.y};
}

// rotation of a symmetric tensor: R T R^T where R has rows (r0, r1)
inline SymTensor2 rotate_sym(const SymTensor2& t, Vec2 r0, Vec2 r1) {
  return {quad_form(r0, t, r0), quad_form(r0, t, r1), quad_form(r1, t, r1)};
}

}  // namespace elbm

#endif

#pragma once

#include <cmath>
#include <complex>

namespace poincare {

using cplx = std::complex<double>;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline cplx to_cplx(Point p) { return {p.x, p.y}; }
inline Point to_point(cplx z) { return {z.real(), z.imag()}; }

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point p) { return p.x * p.x + p.y * p.y; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
inline double dist(Point a, Point b) { return norm(a - b); }

// distance from p to the closed segment [a, b]
inline double segment_dist(Point p, Point a, Point b) {
  Point ab = b - a;
  double len2 = norm2(ab);
  if (len2 == 0.0) return dist(p, a);
  double t = dot(p - a, ab) / len2;
  if (t < 0.0) t = 0.0;
  if (t > 1.0) t = 1.0;
  return dist(p, a + t * ab);
}

}  // namespace poincare

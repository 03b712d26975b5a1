#pragma once

// Exact arithmetic in the ring Q(sqrt2, sqrt3) = { a + b*sqrt2 + c*sqrt3 + d*sqrt6 }.
// Cosine matrices of diagrams labelled by {2,3,4,6} live here, so determinants
// and minors of those matrices can be computed and sign-tested exactly.
// Sign evaluation never touches floating point: it descends the tower
// Q < Q(sqrt2) < Q(sqrt2,sqrt3) comparing squares.

#include <stdexcept>
#include <vector>

#include "garland/rational.hpp"

namespace garland {

struct QuadExt {
  Rat a, b, c, d;  // a + b*sqrt2 + c*sqrt3 + d*sqrt6

  QuadExt() : a(0), b(0), c(0), d(0) {}
  explicit QuadExt(const Rat& ra) : a(ra), b(0), c(0), d(0) {}
  QuadExt(Rat ra, Rat rb, Rat rc, Rat rd)
      : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}

  static QuadExt sqrt2_times(const Rat& r) { return QuadExt(Rat(0), r, Rat(0), Rat(0)); }
  static QuadExt sqrt3_times(const Rat& r) { return QuadExt(Rat(0), Rat(0), r, Rat(0)); }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }

  QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  QuadExt operator-() const { return {-a, -b, -c, -d}; }

  QuadExt operator*(const QuadExt& o) const {
    // (a,b,c,d)*(a',b',c',d') with sqrt2^2=2, sqrt3^2=3, sqrt2*sqrt3=sqrt6
    return {a * o.a + 2 * (b * o.b) + 3 * (c * o.c) + 6 * (d * o.d),
            a * o.b + b * o.a + 3 * (c * o.d + d * o.c),
            a * o.c + c * o.a + 2 * (b * o.d + d * o.b),
            a * o.d + d * o.a + b * o.c + c * o.b};
  }

  double to_double() const {
    return a.get_d() + b.get_d() * 1.4142135623730950488 + c.get_d() * 1.7320508075688772935 +
           d.get_d() * 2.4494897427831780982;
  }

  // sign of a + b*sqrt2 (exact)
  static int sign_q_sqrt2(const Rat& a, const Rat& b) {
    int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 vs 2 b^2
    Rat diff = a * a - 2 * b * b;
    return sa * sgn(diff);
  }

  // sign of u + v*sqrt3 where u, v live in Q(sqrt2)
  int sign() const {
    // u = a + b sqrt2, v = c + d sqrt2
    int su = sign_q_sqrt2(a, b);
    int sv = sign_q_sqrt2(c, d);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // compare u^2 vs 3 v^2 in Q(sqrt2): u^2 - 3v^2 = (a^2+2b^2-3c^2-6d^2) + (2ab-6cd) sqrt2
    Rat pa = a * a + 2 * b * b - 3 * (c * c) - 6 * (d * d);
    Rat pb = 2 * (a * b) - 6 * (c * d);
    return su * sign_q_sqrt2(pa, pb);
  }

 private:
  static int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }
};

// determinant by Laplace expansion; intended for rank <= 6 matrices
inline QuadExt quadext_det(const std::vector<std::vector<QuadExt>>& m) {
  const size_t n = m.size();
  if (n == 0) return QuadExt(Rat(1));
  if (n == 1) return m[0][0];
  QuadExt det;
  std::vector<std::vector<QuadExt>> minor(n - 1, std::vector<QuadExt>(n - 1));
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t col = 0; col < n; ++col) {
        if (col == j) continue;
        minor[r - 1][cc++] = m[r][col];
      }
    }
    QuadExt term = m[0][j] * quadext_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

}  // namespace garland

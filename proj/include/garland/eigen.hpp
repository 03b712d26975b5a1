#pragma once

// Self-contained dense symmetric eigensolver: Householder reduction to
// tridiagonal form followed by implicit-shift QL iteration (the classical
// EISPACK tred2/tql2 pair). No external numerical libraries; behaviour is
// reproducible across platforms up to rounding.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace garland {

struct EigenDecomposition {
  int n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column j = eigenvector of values[j]; row-major n*n; empty if not requested

  double vec(int i, int j) const { return vectors[static_cast<size_t>(i) * n + j]; }
};

namespace detail {

inline void householder_tridiag(std::vector<double>& z, int n, std::vector<double>& d,
                                std::vector<double>& e, bool want_vectors) {
  auto at = [&](int i, int j) -> double& { return z[static_cast<size_t>(i) * n + j]; };
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (want_vectors) at(j, i) = at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  if (want_vectors) {
    for (int i = 0; i < n; ++i) {
      if (d[i] != 0.0) {
        for (int j = 0; j < i; ++j) {
          double g = 0.0;
          for (int k = 0; k < i; ++k) g += at(i, k) * at(k, j);
          for (int k = 0; k < i; ++k) at(k, j) -= g * at(k, i);
        }
      }
      d[i] = at(i, i);
      at(i, i) = 1.0;
      for (int j = 0; j < i; ++j) at(j, i) = at(i, j) = 0.0;
    }
  } else {
    // without accumulation the reduced tridiagonal diagonal sits in z(i,i)
    for (int i = 0; i < n; ++i) d[i] = z[static_cast<size_t>(i) * n + i];
  }
}

// QL with implicit shifts on a symmetric tridiagonal (d, e); e[0] unused on input.
// If z is non-null the rotations are accumulated into it (n x n row-major).
inline void tridiag_ql(std::vector<double>& d, std::vector<double>& e, int n,
                       std::vector<double>* z, int max_sweeps = 50) {
  auto at = [&](int i, int j) -> double& { return (*z)[static_cast<size_t>(i) * n + j]; };
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  const double eps = 2.2204460492503131e-16;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == max_sweeps)
          throw std::runtime_error("eigensolver: QL failed to converge after " +
                                   std::to_string(max_sweeps) + " sweeps");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          if (z) {
            for (int k = 0; k < n; ++k) {
              f = at(k, i + 1);
              at(k, i + 1) = s * at(k, i) + c * f;
              at(k, i) = c * at(k, i) - s * f;
            }
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace detail

inline double max_abs_entry(const std::vector<double>& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::fabs(x));
  return m;
}

// Full spectral decomposition of a symmetric matrix (row-major, n*n).
// Throws on asymmetric input, on n > 4000 and on QL non-convergence.
inline EigenDecomposition dense_eigensolve(std::vector<double> a, int n,
                                           bool want_vectors = true) {
  if (n <= 0 || a.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("eigensolver: bad dimensions");
  if (n > 4000) throw std::invalid_argument("eigensolver: size cap 4000 exceeded");
  const double norm = max_abs_entry(a);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double asym = std::fabs(a[static_cast<size_t>(i) * n + j] - a[static_cast<size_t>(j) * n + i]);
      if (asym > 1e-12 * std::max(norm, 1.0))
        throw std::invalid_argument("eigensolver: input not symmetric");
    }

  std::vector<double> d(n), e(n);
  detail::householder_tridiag(a, n, d, e, want_vectors);
  detail::tridiag_ql(d, e, n, want_vectors ? &a : nullptr);

  // sort ascending, carrying columns
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });

  EigenDecomposition out;
  out.n = n;
  out.values.resize(n);
  for (int j = 0; j < n; ++j) out.values[j] = d[order[j]];
  if (want_vectors) {
    out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        out.vectors[static_cast<size_t>(i) * n + j] = a[static_cast<size_t>(i) * n + order[j]];
  }
  return out;
}

// Eigenvalues of a symmetric tridiagonal given by diagonal/subdiagonal (e[0] unused).
inline std::vector<double> tridiag_eigenvalues(std::vector<double> d, std::vector<double> e) {
  int n = static_cast<int>(d.size());
  if (n == 0) return {};
  if (e.size() != d.size()) e.resize(d.size(), 0.0);
  detail::tridiag_ql(d, e, n, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace garland

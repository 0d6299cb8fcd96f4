#pragma once

// Fixture builders shared by the unit tests, the acceptance driver and the
// benchmarks. Everything random goes through SplitMix64 so runs reproduce.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "csa/csa.hpp"

namespace fixtures {

using csa::Algebra;
using csa::Mat;
using csa::Scalar;
using csa::T3;

inline Algebra field() {
  T3 c = T3::cube(1);
  c.set(0, 0, 0, 1);
  return Algebra(c, "field");
}

/// c_11^2 = 1, c_21^1 = 1: the smallest algebra that is not center-symmetric.
inline Algebra counterexample() {
  T3 c = T3::cube(2);
  c.set(0, 0, 1, 1);
  c.set(1, 0, 0, 1);
  return Algebra(c, "counterexample");
}

/// c_11^2 = 1 only.
inline Algebra square_to_e2() {
  T3 c = T3::cube(2);
  c.set(0, 0, 1, 1);
  return Algebra(c, "square_to_e2");
}

/// K[x]/(x^n) on the basis 1, x, ..., x^{n-1}.
inline Algebra truncated_polynomial(std::size_t n) {
  T3 c = T3::cube(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) c.set(i, j, i + j, 1);
  }
  return Algebra(c, "truncated_polynomial");
}

/// K^n with e_i e_i = e_i.
inline Algebra diagonal(std::size_t n) {
  T3 c = T3::cube(n);
  for (std::size_t i = 0; i < n; ++i) c.set(i, i, i, 1);
  return Algebra(c, "diagonal");
}

/// 2x2 matrices on E11, E12, E21, E22.
inline Algebra matrices2() {
  T3 c = T3::cube(4);
  // E_ab E_cd = [b == c] E_ad with index 2a + b.
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t d = 0; d < 2; ++d) c.set(2 * a + b, 2 * b + d, 2 * a + d, 1);
    }
  }
  return Algebra(c, "matrices2");
}

/// Upper-triangular 2x2 matrices on E11, E12, E22.
inline Algebra upper_triangular2() {
  T3 c = T3::cube(3);
  c.set(0, 0, 0, 1);
  c.set(0, 1, 1, 1);
  c.set(1, 2, 1, 1);
  c.set(2, 2, 2, 1);
  return Algebra(c, "upper_triangular2");
}

inline Algebra direct_product(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim();
  T3 c = T3::cube(n + b.dim());
  a.constants().for_each_nonzero([&](auto i, auto j, auto k, const Scalar& q) { c.set(i, j, k, q); });
  b.constants().for_each_nonzero([&](auto i, auto j, auto k, const Scalar& q) { c.set(n + i, n + j, n + k, q); });
  return Algebra(c);
}

/// dim 2, e1 e1 = -e1 - e2, e1 e2 = -e2, alpha(e1) = -e2 (x) e2. All four
/// bialgebra conditions hold.
inline csa::Bialgebra verified_bialgebra() {
  T3 c = T3::cube(2);
  c.set(0, 0, 0, -1);
  c.set(0, 0, 1, -1);
  c.set(0, 1, 1, -1);
  T3 f = T3::cube(2);
  f.set(1, 1, 0, -1);
  return csa::Bialgebra(c, f, "verified");
}

inline Scalar draw(csa::SplitMix64& rng, long lo, long hi) {
  return Scalar(lo + static_cast<long>(rng.below(static_cast<std::size_t>(hi - lo + 1))));
}

/// Dense tensor with entries uniform in [lo, hi]; `density` in percent.
inline T3 random_tensor(std::size_t n, csa::SplitMix64& rng, long lo = -2, long hi = 2, unsigned density = 100) {
  T3 c = T3::cube(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (rng.below(100) < density) c.set(i, j, k, draw(rng, lo, hi));
      }
    }
  }
  return c;
}

inline Mat random_matrix(std::size_t rows, std::size_t cols, csa::SplitMix64& rng, long lo = -2, long hi = 2) {
  Mat m = Mat::zero(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw(rng, lo, hi);
  }
  return m;
}

inline std::vector<Mat> random_matrices(std::size_t count, std::size_t dim, csa::SplitMix64& rng, long lo = -2,
                                        long hi = 2) {
  std::vector<Mat> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_matrix(dim, dim, rng, lo, hi));
  return out;
}

inline Mat random_invertible(std::size_t n, csa::SplitMix64& rng) {
  for (;;) {
    Mat p = random_matrix(n, n, rng);
    if (!csa::determinant(p).is_zero()) return p;
  }
}

/// Structure constants in the basis f_i = sum_a p(a, i) e_a. Isomorphic to
/// `a`, so every G-class property is preserved.
inline Algebra change_basis(const Algebra& a, const Mat& p) {
  const std::size_t n = a.dim();
  const Mat pinv = *csa::inverse(p);
  T3 out = T3::cube(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      csa::Vec fi = p.column(i);
      csa::Vec fj = p.column(j);
      const csa::Vec prod = pinv.apply(csa::multiply(a, fi, fj));
      for (std::size_t m = 0; m < n; ++m) out.set(i, j, m, prod[m]);
    }
  }
  return Algebra(out, a.name());
}

/// Random associative algebra: a product of truncated polynomial rings and
/// diagonal blocks in a random basis, total dimension <= max_dim.
inline Algebra random_associative(csa::SplitMix64& rng, std::size_t max_dim = 4) {
  const std::size_t n = 1 + rng.below(max_dim);
  Algebra a = Algebra::zero(0);
  std::size_t used = 0;
  while (used < n) {
    const std::size_t block = 1 + rng.below(n - used);
    a = direct_product(a, rng.below(2) == 0 ? truncated_polynomial(block) : diagonal(block));
    used += block;
  }
  return change_basis(a, random_invertible(n, rng));
}

inline T3 with_entry(T3 t, std::size_t i, std::size_t j, std::size_t k, const Scalar& delta) {
  t.add(i, j, k, delta);
  return t;
}

}  // namespace fixtures

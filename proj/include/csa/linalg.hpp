#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csa/scalar.hpp"

namespace csa {

/// Coordinate vector over the rationals.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : e_(dim) {}
  Vec(std::initializer_list<Scalar> entries) : e_(entries) {}
  explicit Vec(std::vector<Scalar> entries) : e_(std::move(entries)) {}

  static Vec zero(std::size_t dim) { return Vec(dim); }
  static Vec basis(std::size_t dim, std::size_t i);

  [[nodiscard]] std::size_t dim() const { return e_.size(); }
  Scalar& operator[](std::size_t i) { return e_[i]; }
  const Scalar& operator[](std::size_t i) const { return e_[i]; }
  [[nodiscard]] std::span<const Scalar> entries() const { return e_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string str() const;

  Vec& operator+=(const Vec& o);
  Vec& operator-=(const Vec& o);
  Vec& operator*=(const Scalar& s);
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator-(Vec a) { return a *= Scalar(-1); }
  friend Vec operator*(const Scalar& s, Vec a) { return a *= s; }
  friend bool operator==(const Vec&, const Vec&) = default;

  /// Concatenation (x, y) in a direct sum, first block first.
  static Vec concat(const Vec& x, const Vec& y);
  [[nodiscard]] Vec slice(std::size_t offset, std::size_t len) const;

 private:
  std::vector<Scalar> e_;
};

/// Dense rational matrix, row-major. Acts on column coordinate vectors.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Mat identity(std::size_t n);
  /// E_ij: single 1 in row i, column j.
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Mat transpose() const;
  [[nodiscard]] Vec column(std::size_t c) const;
  [[nodiscard]] Vec apply(const Vec& v) const;
  [[nodiscard]] std::string str() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) { return a *= Scalar(-1); }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> e_;
};

/// Exact product a * b. Throws InputError unless a.cols() == b.rows().
Mat mat_mul(const Mat& a, const Mat& b);
inline Mat operator*(const Mat& a, const Mat& b) { return mat_mul(a, b); }

/// a*b - b*a for square matrices of equal size.
Mat mat_commutator(const Mat& a, const Mat& b);

/// Matrix of p (x) 1 + 1 (x) q on V (x) W, basis e_a (x) e_b ordered a-major
/// (coordinate index a * dim W + b).
Mat kron_sum_action(const Mat& p, const Mat& q);

/// sum_m weights[m] * mats[m]; every matrix must share one shape.
Mat linear_combination(const Vec& weights, std::span<const Mat> mats);

/// Transposes of every matrix in the list.
std::vector<Mat> transposes(std::span<const Mat> mats);

std::size_t rank(const Mat& m);
/// Rank of the matrix whose columns are the given vectors.
std::size_t rank(std::span<const Vec> vectors, std::size_t dim);
Scalar determinant(const Mat& m);
/// nullopt when singular.
std::optional<Mat> inverse(const Mat& m);
/// Coefficients of v in the span of `basis` (assumed independent), or nullopt.
std::optional<Vec> solve_in_span(std::span<const Vec> basis, const Vec& v);

}  // namespace csa

#include "csa/linalg.hpp"

#include <sstream>
#include <utility>

#include "csa/error.hpp"

namespace csa {

namespace {

void require_same_dim(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim()) {
    throw InputError("vector dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
       << b.cols();
    throw InputError(os.str());
  }
}

struct Echelon {
  Mat reduced;
  std::vector<std::size_t> pivots;
  Scalar det_factor{1};  // product of pivots and row-swap signs (square case)
};

// Gauss-Jordan elimination to reduced row echelon form.
Echelon eliminate(Mat m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      out.det_factor = -out.det_factor;
    }
    const Scalar p = m(row, col);
    out.det_factor *= p;
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) /= p;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

Mat columns_to_matrix(std::span<const Vec> vectors, std::size_t dim) {
  Mat m(dim, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    if (vectors[c].dim() != dim) throw InputError("vector dimension mismatch in span");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = vectors[c][r];
  }
  return m;
}

}  // namespace

Vec Vec::basis(std::size_t dim, std::size_t i) {
  Vec v(dim);
  v[i] = Scalar(1);
  return v;
}

bool Vec::is_zero() const {
  for (const auto& s : e_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string Vec::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) out += ", ";
    out += e_[i].str();
  }
  return out + "]";
}

Vec& Vec::operator+=(const Vec& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Vec& Vec::operator-=(const Vec& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Vec& Vec::operator*=(const Scalar& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Vec Vec::concat(const Vec& x, const Vec& y) {
  std::vector<Scalar> e(x.e_);
  e.insert(e.end(), y.e_.begin(), y.e_.end());
  return Vec(std::move(e));
}

Vec Vec::slice(std::size_t offset, std::size_t len) const {
  return Vec(std::vector<Scalar>(e_.begin() + static_cast<std::ptrdiff_t>(offset),
                                 e_.begin() + static_cast<std::ptrdiff_t>(offset + len)));
}

Mat::Mat(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  e_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = Scalar(1);
  return m;
}

bool Mat::is_zero() const {
  for (const auto& s : e_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vec Mat::column(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vec Mat::apply(const Vec& v) const {
  if (v.dim() != cols_) throw InputError("matrix-vector shape mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r].add_product(a, v[c]);
    }
  }
  return out;
}

std::string Mat::str() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ", ";
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ", ";
      out += (*this)(r, c).str();
    }
    out += "]";
  }
  return out + "]";
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_shape(*this, o, "matrix sum");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_shape(*this, o, "matrix difference");
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    std::ostringstream os;
    os << "mat_mul: shape mismatch " << a.rows() << "x" << a.cols() << " * " << b.rows() << "x"
       << b.cols();
    throw InputError(os.str());
  }
  Mat out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j).add_product(aik, b(k, j));
      }
    }
  }
  return out;
}

Mat mat_commutator(const Mat& a, const Mat& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw InputError("mat_commutator: operands must be square of equal size");
  }
  return mat_mul(a, b) - mat_mul(b, a);
}

Mat kron_sum_action(const Mat& p, const Mat& q) {
  if (!p.is_square() || !q.is_square()) throw InputError("kron_sum_action: operands must be square");
  const std::size_t v = p.rows();
  const std::size_t w = q.rows();
  Mat out(v * w, v * w);
  // column (a, b) is the image of e_a (x) e_b = p(e_a) (x) e_b + e_a (x) q(e_b)
  for (std::size_t a = 0; a < v; ++a) {
    for (std::size_t b = 0; b < w; ++b) {
      const std::size_t col = a * w + b;
      for (std::size_t a2 = 0; a2 < v; ++a2) out(a2 * w + b, col) += p(a2, a);
      for (std::size_t b2 = 0; b2 < w; ++b2) out(a * w + b2, col) += q(b2, b);
    }
  }
  return out;
}

Mat linear_combination(const Vec& weights, std::span<const Mat> mats) {
  if (weights.dim() != mats.size()) throw InputError("linear_combination: weight count mismatch");
  if (mats.empty()) return {};
  Mat out(mats[0].rows(), mats[0].cols());
  for (std::size_t m = 0; m < mats.size(); ++m) {
    if (weights[m].is_zero()) continue;
    out += weights[m] * mats[m];
  }
  return out;
}

std::vector<Mat> transposes(std::span<const Mat> mats) {
  std::vector<Mat> out;
  out.reserve(mats.size());
  for (const auto& m : mats) out.push_back(m.transpose());
  return out;
}

std::size_t rank(const Mat& m) { return eliminate(m).pivots.size(); }

std::size_t rank(std::span<const Vec> vectors, std::size_t dim) {
  return rank(columns_to_matrix(vectors, dim));
}

Scalar determinant(const Mat& m) {
  if (!m.is_square()) throw InputError("determinant of non-square matrix");
  auto e = eliminate(m);
  if (e.pivots.size() < m.rows()) return Scalar(0);
  return e.det_factor;
}

std::optional<Mat> inverse(const Mat& m) {
  if (!m.is_square()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Mat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  auto e = eliminate(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  }
  return inv;
}

std::optional<Vec> solve_in_span(std::span<const Vec> basis, const Vec& v) {
  const std::size_t dim = v.dim();
  const std::size_t k = basis.size();
  Mat aug(dim, k + 1);
  for (std::size_t c = 0; c < k; ++c) {
    if (basis[c].dim() != dim) throw InputError("solve_in_span: dimension mismatch");
    for (std::size_t r = 0; r < dim; ++r) aug(r, c) = basis[c][r];
  }
  for (std::size_t r = 0; r < dim; ++r) aug(r, k) = v[r];
  auto e = eliminate(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == k) return std::nullopt;  // inconsistent
  Vec coeffs(k);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) coeffs[e.pivots[r]] = e.reduced(r, k);
  return coeffs;
}

}  // namespace csa

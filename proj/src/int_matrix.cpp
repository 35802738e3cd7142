#include "tga/int_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <sstream>

#include "tga/errors.hpp"
#include "tga/scalar.hpp"

namespace tga {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw PreconditionError("IntMatrix: entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw PreconditionError("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::symplectic_form(std::size_t n) {
  IntMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1;
    j(n + i, i) = -1;
  }
  return j;
}

IntMatrix IntMatrix::from_row_major(std::span<const std::int64_t> entries) {
  auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(entries.size()))));
  if (n * n != entries.size()) throw PreconditionError("matrix entry list is not a perfect square");
  return IntMatrix(n, n, std::vector<std::int64_t>(entries.begin(), entries.end()));
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw MismatchError("IntMatrix product: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MismatchError("IntMatrix sum: shape mismatch");
  IntMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const { return *this + (-o); }

IntMatrix IntMatrix::operator-() const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

std::vector<std::int64_t> IntMatrix::operator*(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw MismatchError("IntMatrix-vector product: shape mismatch");
  std::vector<std::int64_t> r(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::mod(std::int64_t q) const {
  IntMatrix r = *this;
  for (auto& x : r.data_) x = mod64(x, q);
  return r;
}

IntMatrix IntMatrix::pow(std::int64_t e) const {
  if (!is_square()) throw PreconditionError("IntMatrix::pow needs a square matrix");
  IntMatrix base = *this;
  if (e < 0) {
    auto inv = unimodular_inverse();
    if (!inv) throw PreconditionError("negative power of a non-unimodular matrix");
    base = *inv;
    e = -e;
  }
  IntMatrix r = identity(rows_);
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

namespace {

using boost::multiprecision::cpp_rational;

std::vector<cpp_rational> to_rational(const IntMatrix& m) {
  std::vector<cpp_rational> a;
  a.reserve(m.rows() * m.cols());
  for (auto x : m.row_major()) a.emplace_back(x);
  return a;
}

}  // namespace

std::int64_t IntMatrix::determinant() const {
  if (!is_square()) throw PreconditionError("determinant of a non-square matrix");
  std::size_t n = rows_;
  if (n == 0) return 1;
  if (n == 2) return data_[0] * data_[3] - data_[1] * data_[2];
  auto a = to_rational(*this);
  cpp_rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p * n + c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[p * n + j], a[c * n + j]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      cpp_rational f = a[r * n + c] / a[c * n + c];
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) a[r * n + j] -= f * a[c * n + j];
    }
  }
  return static_cast<std::int64_t>(boost::multiprecision::numerator(det));
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::optional<IntMatrix> IntMatrix::unimodular_inverse() const {
  if (!is_square()) return std::nullopt;
  std::int64_t det = determinant();
  if (det != 1 && det != -1) return std::nullopt;
  std::size_t n = rows_;
  if (n == 2) {
    return IntMatrix(2, 2, {det * data_[3], -det * data_[1], -det * data_[2], det * data_[0]});
  }
  auto a = to_rational(*this);
  std::vector<cpp_rational> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p * n + c] == 0) ++p;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[p * n + j], a[c * n + j]);
        std::swap(inv[p * n + j], inv[c * n + j]);
      }
    }
    cpp_rational piv = a[c * n + c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c * n + j] /= piv;
      inv[c * n + j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      cpp_rational f = a[r * n + c];
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] -= f * a[c * n + j];
        inv[r * n + j] -= f * inv[c * n + j];
      }
    }
  }
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (boost::multiprecision::denominator(inv[i]) != 1) return std::nullopt;
    out.data_[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(inv[i]));
  }
  return out;
}

bool IntMatrix::is_symplectic() const {
  if (!is_square() || rows_ % 2 != 0) return false;
  IntMatrix j = symplectic_form(rows_ / 2);
  return transpose() * j * (*this) == j;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << (*this)(i, j);
    }
  }
  out << ']';
  return out.str();
}

IntMatrix theta_embedding(const IntMatrix& g) {
  if (!g.is_square()) throw PreconditionError("theta_embedding: matrix must be square");
  auto inv = g.unimodular_inverse();
  if (!inv) throw PreconditionError("theta_embedding: matrix " + g.to_string() + " is not unimodular");
  IntMatrix dual = inv->transpose();
  std::size_t n = g.rows();
  IntMatrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = g(i, j);
      out(n + i, n + j) = dual(i, j);
    }
  return out;
}

bool is_parabolic(const IntMatrix& g) {
  if (g.rows() != 2 || g.cols() != 2) return false;
  if (g.determinant() != 1) return false;
  std::int64_t t = g.trace();
  if (t != 2 && t != -2) return false;
  return g != IntMatrix::identity(2) && g != -IntMatrix::identity(2);
}

}  // namespace tga

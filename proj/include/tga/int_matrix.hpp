#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tga {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> entries);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  /// The standard symplectic form (0 I_n; -I_n 0) of size 2n.
  static IntMatrix symplectic_form(std::size_t n);
  /// Square matrix from row-major entries; the size is inferred.
  static IntMatrix from_row_major(std::span<const std::int64_t> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<std::int64_t>& row_major() const { return data_; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator-() const;
  std::vector<std::int64_t> operator*(std::span<const std::int64_t> v) const;
  IntMatrix transpose() const;
  IntMatrix mod(std::int64_t q) const;
  IntMatrix pow(std::int64_t e) const;

  std::int64_t determinant() const;
  std::int64_t trace() const;
  /// Exact inverse when the matrix is unimodular (det = +-1).
  std::optional<IntMatrix> unimodular_inverse() const;

  bool is_symplectic() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// diag(g, (g^-1)^t): embeds GL(n, Z) into Sp(2n, Z). Throws
/// PreconditionError if g is not unimodular.
IntMatrix theta_embedding(const IntMatrix& g);

/// 2x2 with determinant 1, trace +-2 and g != +-I.
bool is_parabolic(const IntMatrix& g);

}  // namespace tga

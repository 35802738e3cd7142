#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tga/cyclotomic.hpp"
#include "tga/scalar.hpp"

namespace tga {

/// Square matrix with exactly one unit-modulus entry per column:
/// M e_j = phase_j e_(perm_j). Unitary by construction when perm is a
/// bijection.
class MonomialMatrix {
 public:
  MonomialMatrix() = default;
  MonomialMatrix(std::vector<std::size_t> perm, std::vector<Scalar> phase);

  static MonomialMatrix identity(std::size_t n);
  static MonomialMatrix diagonal(std::vector<Scalar> phase);
  /// e_j -> e_(perm_j).
  static MonomialMatrix permutation(std::vector<std::size_t> perm);

  std::size_t size() const { return perm_.size(); }
  std::size_t row_of(std::size_t column) const { return perm_[column]; }
  const Scalar& phase(std::size_t column) const { return phase_[column]; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  const std::vector<Scalar>& phases() const { return phase_; }

  MonomialMatrix operator*(const MonomialMatrix& o) const;
  MonomialMatrix operator*(const Scalar& s) const;
  MonomialMatrix adjoint() const;
  MonomialMatrix pow(std::int64_t e) const;
  Cyclotomic trace() const;
  /// Entry (r, c) as a cyclotomic number.
  Cyclotomic entry(std::size_t r, std::size_t c) const;
  bool is_identity() const;
  /// True iff perm is a bijection (then the matrix is unitary).
  bool is_unitary() const;

  friend bool operator==(const MonomialMatrix&, const MonomialMatrix&) = default;

  std::vector<std::complex<double>> to_dense_complex() const;  // row-major
  std::string to_string() const;

 private:
  std::vector<std::size_t> perm_;
  std::vector<Scalar> phase_;
};

/// Sparse matrix with exact cyclotomic entries, stored by rows.
class CoeffMatrix {
 public:
  CoeffMatrix() = default;
  CoeffMatrix(std::size_t rows, std::size_t cols);
  static CoeffMatrix identity(std::size_t n);
  static CoeffMatrix from_monomial(const MonomialMatrix& m);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::map<std::size_t, Cyclotomic>& row(std::size_t r) const { return rows_[r]; }
  Cyclotomic at(std::size_t r, std::size_t c) const;
  /// Adds v to entry (r, c), pruning exact zeros.
  void add(std::size_t r, std::size_t c, const Cyclotomic& v);

  CoeffMatrix operator*(const CoeffMatrix& o) const;
  CoeffMatrix operator*(const MonomialMatrix& m) const;
  CoeffMatrix operator+(const CoeffMatrix& o) const;
  CoeffMatrix operator-(const CoeffMatrix& o) const;
  CoeffMatrix operator*(const Cyclotomic& c) const;
  CoeffMatrix adjoint() const;
  Cyclotomic trace() const;
  std::size_t nonzeros() const;
  bool is_zero() const;

  friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b);

  std::vector<std::complex<double>> to_dense_complex() const;  // row-major
  /// Row-major dense coefficient strings.
  std::vector<std::string> to_strings() const;

 private:
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Cyclotomic>> rows_;
};

CoeffMatrix operator*(const MonomialMatrix& m, const CoeffMatrix& c);

/// Block-diagonal sum of monomial matrices.
MonomialMatrix direct_sum(const std::vector<MonomialMatrix>& blocks);

}  // namespace tga

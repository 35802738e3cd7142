#include "tga/matrix.hpp"

#include <sstream>

#include "tga/errors.hpp"

namespace tga {

MonomialMatrix::MonomialMatrix(std::vector<std::size_t> perm, std::vector<Scalar> phase)
    : perm_(std::move(perm)), phase_(std::move(phase)) {
  if (perm_.size() != phase_.size()) throw MismatchError("monomial matrix: permutation and phases differ in size");
  for (auto p : perm_)
    if (p >= perm_.size()) throw PreconditionError("monomial matrix: row index out of range");
}

MonomialMatrix MonomialMatrix::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  return MonomialMatrix(std::move(perm), std::vector<Scalar>(n));
}

MonomialMatrix MonomialMatrix::diagonal(std::vector<Scalar> phase) {
  std::vector<std::size_t> perm(phase.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  return MonomialMatrix(std::move(perm), std::move(phase));
}

MonomialMatrix MonomialMatrix::permutation(std::vector<std::size_t> perm) {
  std::size_t n = perm.size();
  return MonomialMatrix(std::move(perm), std::vector<Scalar>(n));
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  if (size() != o.size()) throw MismatchError("monomial product: size mismatch");
  std::vector<std::size_t> perm(size());
  std::vector<Scalar> phase(size());
  for (std::size_t j = 0; j < size(); ++j) {
    std::size_t mid = o.perm_[j];
    perm[j] = perm_[mid];
    phase[j] = o.phase_[j] * phase_[mid];
  }
  return MonomialMatrix(std::move(perm), std::move(phase));
}

MonomialMatrix MonomialMatrix::operator*(const Scalar& s) const {
  MonomialMatrix r = *this;
  for (auto& p : r.phase_) p *= s;
  return r;
}

MonomialMatrix MonomialMatrix::adjoint() const {
  if (!is_unitary()) throw PreconditionError("adjoint of a singular monomial matrix");
  std::vector<std::size_t> perm(size());
  std::vector<Scalar> phase(size());
  for (std::size_t j = 0; j < size(); ++j) {
    perm[perm_[j]] = j;
    phase[perm_[j]] = phase_[j].conj();
  }
  return MonomialMatrix(std::move(perm), std::move(phase));
}

MonomialMatrix MonomialMatrix::pow(std::int64_t e) const {
  MonomialMatrix base = e < 0 ? adjoint() : *this;
  if (e < 0) e = -e;
  MonomialMatrix r = identity(size());
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Cyclotomic MonomialMatrix::trace() const {
  Cyclotomic t;
  for (std::size_t j = 0; j < size(); ++j)
    if (perm_[j] == j) t.add_term(phase_[j], 1);
  return t;
}

Cyclotomic MonomialMatrix::entry(std::size_t r, std::size_t c) const {
  return perm_[c] == r ? Cyclotomic(phase_[c]) : Cyclotomic();
}

bool MonomialMatrix::is_identity() const {
  for (std::size_t j = 0; j < size(); ++j)
    if (perm_[j] != j || !phase_[j].is_one()) return false;
  return true;
}

bool MonomialMatrix::is_unitary() const {
  std::vector<bool> hit(size(), false);
  for (auto p : perm_) {
    if (hit[p]) return false;
    hit[p] = true;
  }
  return true;
}

std::vector<std::complex<double>> MonomialMatrix::to_dense_complex() const {
  std::size_t n = size();
  std::vector<std::complex<double>> out(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) out[perm_[j] * n + j] = phase_[j].to_complex();
  return out;
}

std::string MonomialMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < size(); ++j) {
    if (j) out << ", ";
    out << j << "->" << perm_[j] << ':' << phase_[j].to_string();
  }
  out << ']';
  return out.str();
}

MonomialMatrix direct_sum(const std::vector<MonomialMatrix>& blocks) {
  std::vector<std::size_t> perm;
  std::vector<Scalar> phase;
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      perm.push_back(offset + b.row_of(j));
      phase.push_back(b.phase(j));
    }
    offset += b.size();
  }
  return MonomialMatrix(std::move(perm), std::move(phase));
}

// CoeffMatrix

CoeffMatrix::CoeffMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

CoeffMatrix CoeffMatrix::identity(std::size_t n) {
  CoeffMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace(i, Cyclotomic(1));
  return m;
}

CoeffMatrix CoeffMatrix::from_monomial(const MonomialMatrix& mm) {
  CoeffMatrix m(mm.size(), mm.size());
  for (std::size_t j = 0; j < mm.size(); ++j) m.rows_[mm.row_of(j)].emplace(j, Cyclotomic(mm.phase(j)));
  return m;
}

Cyclotomic CoeffMatrix::at(std::size_t r, std::size_t c) const {
  auto it = rows_[r].find(c);
  return it == rows_[r].end() ? Cyclotomic() : it->second;
}

void CoeffMatrix::add(std::size_t r, std::size_t c, const Cyclotomic& v) {
  if (r >= rows_.size() || c >= cols_) throw PreconditionError("coefficient matrix index out of range");
  if (v.is_formally_zero()) return;
  auto [it, inserted] = rows_[r].emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) rows_[r].erase(it);
  }
}

CoeffMatrix CoeffMatrix::operator*(const CoeffMatrix& o) const {
  if (cols_ != o.rows()) throw MismatchError("coefficient matrix product: shape mismatch");
  CoeffMatrix r(rows(), o.cols_);
  for (std::size_t i = 0; i < rows(); ++i) {
    std::map<std::size_t, Cyclotomic> acc;
    for (const auto& [k, a] : rows_[i])
      for (const auto& [j, b] : o.rows_[k]) acc[j] += a * b;
    for (auto& [j, v] : acc)
      if (!v.is_zero()) r.rows_[i].emplace(j, std::move(v));
  }
  return r;
}

CoeffMatrix CoeffMatrix::operator*(const MonomialMatrix& m) const {
  if (cols_ != m.size()) throw MismatchError("coefficient-monomial product: shape mismatch");
  // (C M)_(i, j) = C_(i, perm_j) phase_j
  std::vector<std::size_t> inv(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) inv[m.row_of(j)] = j;
  CoeffMatrix r(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [k, a] : rows_[i]) {
      std::size_t j = inv[k];
      r.rows_[i].emplace(j, a * m.phase(j));
    }
  return r;
}

CoeffMatrix operator*(const MonomialMatrix& m, const CoeffMatrix& c) {
  if (m.size() != c.rows()) throw MismatchError("monomial-coefficient product: shape mismatch");
  // (M C)_(perm_k, j) = phase_k C_(k, j)
  CoeffMatrix r(c.rows(), c.cols());
  for (std::size_t k = 0; k < c.rows(); ++k)
    for (const auto& [j, a] : c.row(k)) r.add(m.row_of(k), j, a * m.phase(k));
  return r;
}

CoeffMatrix CoeffMatrix::operator+(const CoeffMatrix& o) const {
  if (rows() != o.rows() || cols_ != o.cols_) throw MismatchError("coefficient matrix sum: shape mismatch");
  CoeffMatrix r = *this;
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : o.rows_[i]) r.add(i, j, v);
  return r;
}

CoeffMatrix CoeffMatrix::operator-(const CoeffMatrix& o) const { return *this + o * Cyclotomic(-1); }

CoeffMatrix CoeffMatrix::operator*(const Cyclotomic& c) const {
  CoeffMatrix r(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) r.add(i, j, v * c);
  return r;
}

CoeffMatrix CoeffMatrix::adjoint() const {
  CoeffMatrix r(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) r.rows_[j].emplace(i, v.conj());
  return r;
}

Cyclotomic CoeffMatrix::trace() const {
  Cyclotomic t;
  for (std::size_t i = 0; i < std::min(rows(), cols_); ++i) t += at(i, i);
  return t;
}

std::size_t CoeffMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool CoeffMatrix::is_zero() const {
  for (const auto& r : rows_)
    for (const auto& [j, v] : r)
      if (!v.is_zero()) return false;
  return true;
}

bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).is_zero();
}

std::vector<std::complex<double>> CoeffMatrix::to_dense_complex() const {
  std::vector<std::complex<double>> out(rows() * cols_, 0.0);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) out[i * cols_ + j] = v.to_complex();
  return out;
}

std::vector<std::string> CoeffMatrix::to_strings() const {
  std::vector<std::string> out(rows() * cols_, "0");
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) out[i * cols_ + j] = v.to_string();
  return out;
}

}  // namespace tga

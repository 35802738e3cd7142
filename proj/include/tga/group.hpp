#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "tga/int_matrix.hpp"

namespace tga {

/// A group element in canonical coordinates. Value type; orders and hashes
/// so it can key associative containers.
class GroupElement {
 public:
  static constexpr std::size_t kCapacity = 24;

  GroupElement() = default;
  GroupElement(std::initializer_list<std::int64_t> coords);
  explicit GroupElement(std::span<const std::int64_t> coords);

  std::size_t size() const { return size_; }
  std::int32_t operator[](std::size_t i) const { return coords_[i]; }
  std::int32_t& operator[](std::size_t i) { return coords_[i]; }
  void push_back(std::int64_t v);
  std::vector<std::int64_t> to_vector() const;
  /// Coordinates [first, first + count).
  std::vector<std::int64_t> slice(std::size_t first, std::size_t count) const;

  std::string to_string() const;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::array<std::int32_t, kCapacity> coords_{};
  std::uint8_t size_ = 0;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept;
};

/// Abstract group acting on canonical coordinates.
class Group {
 public:
  virtual ~Group() = default;

  virtual GroupElement identity() const = 0;
  virtual GroupElement multiply(const GroupElement& a, const GroupElement& b) const = 0;
  virtual GroupElement inverse(const GroupElement& a) const = 0;
  virtual bool is_finite() const { return false; }
  /// Random element for sampled verification. Infinite groups draw from a
  /// bounded box.
  virtual GroupElement sample(std::mt19937_64& rng) const = 0;
  virtual std::string name() const = 0;
};

using GroupPtr = std::shared_ptr<const Group>;

/// A group with an explicit element list; elements are numbered in
/// enumeration order.
class FiniteGroup : public Group {
 public:
  bool is_finite() const override { return true; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> find(const GroupElement& g) const;
  /// Throws PreconditionError if g is not an element.
  std::size_t index_of(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return find(g).has_value(); }
  std::size_t identity_index() const { return index_of(identity()); }
  GroupElement sample(std::mt19937_64& rng) const override;

 protected:
  void set_elements(std::vector<GroupElement> elements);

 private:
  std::vector<GroupElement> elements_;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> index_;
};

using FiniteGroupPtr = std::shared_ptr<const FiniteGroup>;

/// Z^d, represented symbolically by integer vectors.
class LatticeGroup final : public Group {
 public:
  explicit LatticeGroup(std::size_t dim, std::int64_t sample_bound = 8);
  std::size_t dimension() const { return dim_; }
  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  GroupElement sample(std::mt19937_64& rng) const override;
  std::string name() const override;

 private:
  std::size_t dim_;
  std::int64_t bound_;
};

/// Z^d x| GL(d, Z): pairs (x, gamma) with (x1, g1)(x2, g2) = (x1 + g1 x2, g1 g2).
/// Infinite; sampling draws gamma from words in the supplied generators.
class AffineLatticeGroup final : public Group {
 public:
  AffineLatticeGroup(std::size_t dim, std::vector<IntMatrix> sample_generators = {});
  std::size_t dimension() const { return dim_; }
  GroupElement make(std::span<const std::int64_t> x, const IntMatrix& gamma) const;
  std::vector<std::int64_t> translation(const GroupElement& g) const;
  IntMatrix linear_part(const GroupElement& g) const;
  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  GroupElement sample(std::mt19937_64& rng) const override;
  std::string name() const override;

 private:
  std::size_t dim_;
  std::vector<IntMatrix> gens_;
};

/// Finite abelian group Z/m_1 x ... x Z/m_k; (Z/q)^m when all moduli agree.
class AbelianGroup final : public FiniteGroup {
 public:
  explicit AbelianGroup(std::vector<std::int64_t> moduli);
  static std::shared_ptr<const AbelianGroup> power(std::int64_t q, std::size_t rank);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::size_t rank() const { return moduli_.size(); }
  /// Reduces arbitrary integer coordinates.
  GroupElement make(std::span<const std::int64_t> coords) const;
  GroupElement make(std::initializer_list<std::int64_t> coords) const;
  /// All moduli equal to q.
  bool is_uniform() const;
  std::int64_t uniform_modulus() const;

  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  std::string name() const override;

 private:
  std::vector<std::int64_t> moduli_;
};

using AbelianGroupPtr = std::shared_ptr<const AbelianGroup>;

/// Finite group of d x d matrices with entries mod q; coordinates are the
/// row-major entries in [0, q).
class MatrixGroupMod final : public FiniteGroup {
 public:
  /// Builds the group from a complete, closed element list.
  MatrixGroupMod(std::int64_t q, std::size_t dim, std::vector<IntMatrix> elements, std::string label);

  std::int64_t modulus() const { return q_; }
  std::size_t dimension() const { return dim_; }
  GroupElement make(const IntMatrix& m) const;
  IntMatrix matrix(const GroupElement& g) const;
  /// g x mod q.
  std::vector<std::int64_t> act(const GroupElement& g, std::span<const std::int64_t> x) const;

  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  std::string name() const override { return label_; }

 private:
  std::int64_t q_;
  std::size_t dim_;
  std::string label_;
  std::vector<std::size_t> inverse_index_;
};

using MatrixGroupPtr = std::shared_ptr<const MatrixGroupMod>;

/// Default cap on enumerated group orders.
inline constexpr std::size_t kDefaultOrderCap = 100000;

/// |SL(2, Z/q)| = q^3 prod_{p | q} (1 - p^-2).
std::size_t sl2_order(std::int64_t q);

/// All determinant-one 2x2 matrices mod q. Throws PreconditionError if q < 2
/// or the order exceeds `cap`.
MatrixGroupPtr sl2_mod(std::int64_t q, std::size_t cap = kDefaultOrderCap);

/// Subgroup of GL(d, Z/q) generated by the reductions of `generators`.
/// Throws PreconditionError if a generator is not invertible mod q or the
/// closure exceeds `cap`.
MatrixGroupPtr matrix_group_mod(std::int64_t q, const std::vector<IntMatrix>& generators,
                                std::size_t cap = kDefaultOrderCap);

/// N x| Gamma for N = (Z/q)^d and Gamma acting by matrix-vector products mod
/// q. Coordinates are (x_1..x_d, gamma entries).
class SemidirectProduct final : public FiniteGroup {
 public:
  SemidirectProduct(AbelianGroupPtr normal, MatrixGroupPtr acting);

  const AbelianGroup& normal() const { return *normal_; }
  const MatrixGroupMod& acting() const { return *acting_; }
  AbelianGroupPtr normal_ptr() const { return normal_; }
  MatrixGroupPtr acting_ptr() const { return acting_; }
  std::int64_t modulus() const { return acting_->modulus(); }
  std::size_t dimension() const { return acting_->dimension(); }

  GroupElement make(const GroupElement& x, const GroupElement& gamma) const;
  GroupElement translation(const GroupElement& g) const;
  GroupElement linear_part(const GroupElement& g) const;

  GroupElement identity() const override;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  std::string name() const override;

 private:
  AbelianGroupPtr normal_;
  MatrixGroupPtr acting_;
};

using SemidirectPtr = std::shared_ptr<const SemidirectProduct>;

/// A finite subset of a parent group closed under its multiplication.
class Subgroup final : public FiniteGroup {
 public:
  /// Throws PreconditionError if the set is not closed or lacks the identity.
  Subgroup(GroupPtr parent, std::vector<GroupElement> elements, std::string label = "subgroup");

  const Group& parent() const { return *parent_; }
  GroupPtr parent_ptr() const { return parent_; }

  GroupElement identity() const override { return parent_->identity(); }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override {
    return parent_->multiply(a, b);
  }
  GroupElement inverse(const GroupElement& a) const override { return parent_->inverse(a); }
  std::string name() const override { return label_; }

 private:
  GroupPtr parent_;
  std::string label_;
};

using SubgroupPtr = std::shared_ptr<const Subgroup>;

/// Closure of `generators` in `parent`. Throws if it exceeds `cap`.
SubgroupPtr generated_subgroup(GroupPtr parent, const std::vector<GroupElement>& generators,
                               std::size_t cap = kDefaultOrderCap, std::string label = "subgroup");

/// Group given by its multiplication table; element i has coordinates (i).
class TableGroup final : public FiniteGroup {
 public:
  /// table[i * n + j] is the index of i*j. Throws unless the table has a
  /// two-sided identity and inverses.
  TableGroup(std::size_t n, std::vector<std::size_t> table, std::string label = "table");

  GroupElement identity() const override { return GroupElement{static_cast<std::int64_t>(identity_)}; }
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const override;
  GroupElement inverse(const GroupElement& a) const override;
  std::string name() const override { return label_; }

 private:
  std::size_t n_;
  std::vector<std::size_t> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::string label_;
};

struct GroupAxiomReport {
  bool associative = true;
  bool inverses = true;
  bool identity = true;
  std::uint64_t triples_checked = 0;
  bool exhaustive = false;
  std::string witness;
  bool ok() const { return associative && inverses && identity; }
};

/// Checks group axioms: exhaustive when |G| <= exhaustive_limit, otherwise
/// `samples` seeded random triples.
GroupAxiomReport verify_group_axioms(const FiniteGroup& g, std::uint64_t seed = 1,
                                     std::size_t exhaustive_limit = 200, std::uint64_t samples = 200000);

}  // namespace tga

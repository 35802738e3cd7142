#include "tga/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "tga/errors.hpp"
#include "tga/modular.hpp"
#include "tga/scalar.hpp"

namespace tga {

GroupElement::GroupElement(std::initializer_list<std::int64_t> coords) {
  for (auto c : coords) push_back(c);
}

GroupElement::GroupElement(std::span<const std::int64_t> coords) {
  for (auto c : coords) push_back(c);
}

void GroupElement::push_back(std::int64_t v) {
  if (size_ == kCapacity) throw PreconditionError("group element has too many coordinates");
  if (v > INT32_MAX || v < INT32_MIN) throw PreconditionError("group element coordinate out of range");
  coords_[size_++] = static_cast<std::int32_t>(v);
}

std::vector<std::int64_t> GroupElement::to_vector() const { return slice(0, size_); }

std::vector<std::int64_t> GroupElement::slice(std::size_t first, std::size_t count) const {
  std::vector<std::int64_t> out;
  out.reserve(count);
  for (std::size_t i = first; i < first + count; ++i) out.push_back(coords_[i]);
  return out;
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out << ',';
    out << coords_[i];
  }
  out << ')';
  return out.str();
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ g.size();
  for (std::size_t i = 0; i < g.size(); ++i) {
    h ^= static_cast<std::uint32_t>(g[i]);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

// FiniteGroup

std::optional<std::size_t> FiniteGroup::find(const GroupElement& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
  auto i = find(g);
  if (!i) throw PreconditionError(g.to_string() + " is not an element of " + name());
  return *i;
}

GroupElement FiniteGroup::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::size_t> pick(0, elements_.size() - 1);
  return elements_[pick(rng)];
}

void FiniteGroup::set_elements(std::vector<GroupElement> elements) {
  elements_ = std::move(elements);
  index_.clear();
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!index_.emplace(elements_[i], i).second) {
      throw PreconditionError("duplicate group element " + elements_[i].to_string());
    }
  }
}

// LatticeGroup

LatticeGroup::LatticeGroup(std::size_t dim, std::int64_t sample_bound) : dim_(dim), bound_(sample_bound) {
  if (dim == 0 || dim > GroupElement::kCapacity) throw PreconditionError("lattice dimension out of range");
}

GroupElement LatticeGroup::identity() const {
  GroupElement g;
  for (std::size_t i = 0; i < dim_; ++i) g.push_back(0);
  return g;
}

GroupElement LatticeGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement g;
  for (std::size_t i = 0; i < dim_; ++i) g.push_back(static_cast<std::int64_t>(a[i]) + b[i]);
  return g;
}

GroupElement LatticeGroup::inverse(const GroupElement& a) const {
  GroupElement g;
  for (std::size_t i = 0; i < dim_; ++i) g.push_back(-static_cast<std::int64_t>(a[i]));
  return g;
}

GroupElement LatticeGroup::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::int64_t> pick(-bound_, bound_);
  GroupElement g;
  for (std::size_t i = 0; i < dim_; ++i) g.push_back(pick(rng));
  return g;
}

std::string LatticeGroup::name() const { return "Z^" + std::to_string(dim_); }

// AffineLatticeGroup

AffineLatticeGroup::AffineLatticeGroup(std::size_t dim, std::vector<IntMatrix> sample_generators)
    : dim_(dim), gens_(std::move(sample_generators)) {
  if (dim == 0 || dim + dim * dim > GroupElement::kCapacity) throw PreconditionError("affine dimension out of range");
  for (const auto& g : gens_) {
    if (g.rows() != dim || !g.unimodular_inverse()) throw PreconditionError("sample generator is not in GL(d, Z)");
  }
}

GroupElement AffineLatticeGroup::make(std::span<const std::int64_t> x, const IntMatrix& gamma) const {
  if (x.size() != dim_ || gamma.rows() != dim_ || gamma.cols() != dim_) throw MismatchError("affine element shape");
  GroupElement g(x);
  for (auto v : gamma.row_major()) g.push_back(v);
  return g;
}

std::vector<std::int64_t> AffineLatticeGroup::translation(const GroupElement& g) const { return g.slice(0, dim_); }

IntMatrix AffineLatticeGroup::linear_part(const GroupElement& g) const {
  return IntMatrix(dim_, dim_, g.slice(dim_, dim_ * dim_));
}

GroupElement AffineLatticeGroup::identity() const {
  std::vector<std::int64_t> zero(dim_, 0);
  return make(zero, IntMatrix::identity(dim_));
}

GroupElement AffineLatticeGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  IntMatrix ga = linear_part(a);
  auto x = translation(a);
  auto gx = ga * std::span<const std::int64_t>(translation(b));
  for (std::size_t i = 0; i < dim_; ++i) x[i] += gx[i];
  return make(x, ga * linear_part(b));
}

GroupElement AffineLatticeGroup::inverse(const GroupElement& a) const {
  auto inv = linear_part(a).unimodular_inverse();
  if (!inv) throw PreconditionError("affine element has a non-unimodular linear part");
  auto x = *inv * std::span<const std::int64_t>(translation(a));
  for (auto& v : x) v = -v;
  return make(x, *inv);
}

GroupElement AffineLatticeGroup::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::int64_t> coord(-6, 6);
  std::vector<std::int64_t> x(dim_);
  for (auto& v : x) v = coord(rng);
  IntMatrix gamma = IntMatrix::identity(dim_);
  if (!gens_.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * gens_.size() - 1);
    std::uniform_int_distribution<int> len(0, 3);
    for (int i = len(rng); i > 0; --i) {
      std::size_t j = pick(rng);
      const IntMatrix& g = gens_[j / 2];
      gamma = gamma * (j % 2 ? *g.unimodular_inverse() : g);
    }
  }
  return make(x, gamma);
}

std::string AffineLatticeGroup::name() const {
  return "Z^" + std::to_string(dim_) + " x| GL(" + std::to_string(dim_) + ",Z)";
}

// AbelianGroup

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.size() > GroupElement::kCapacity) throw PreconditionError("abelian group rank too large");
  std::size_t order = 1;
  for (auto m : moduli_) {
    if (m < 1) throw PreconditionError("abelian group moduli must be positive");
    order *= static_cast<std::size_t>(m);
    if (order > 10 * kDefaultOrderCap) throw PreconditionError("abelian group too large to enumerate");
  }
  std::vector<GroupElement> elements;
  elements.reserve(order);
  std::vector<std::int64_t> c(moduli_.size(), 0);
  for (std::size_t n = 0; n < order; ++n) {
    elements.emplace_back(std::span<const std::int64_t>(c));
    for (std::size_t i = c.size(); i-- > 0;) {
      if (++c[i] < moduli_[i]) break;
      c[i] = 0;
    }
  }
  set_elements(std::move(elements));
}

std::shared_ptr<const AbelianGroup> AbelianGroup::power(std::int64_t q, std::size_t rank) {
  return std::make_shared<const AbelianGroup>(std::vector<std::int64_t>(rank, q));
}

GroupElement AbelianGroup::make(std::span<const std::int64_t> coords) const {
  if (coords.size() != moduli_.size()) throw MismatchError("abelian element has the wrong rank");
  GroupElement g;
  for (std::size_t i = 0; i < coords.size(); ++i) g.push_back(mod64(coords[i], moduli_[i]));
  return g;
}

GroupElement AbelianGroup::make(std::initializer_list<std::int64_t> coords) const {
  return make(std::span<const std::int64_t>(coords.begin(), coords.size()));
}

bool AbelianGroup::is_uniform() const {
  return std::all_of(moduli_.begin(), moduli_.end(), [&](auto m) { return m == moduli_.front(); });
}

std::int64_t AbelianGroup::uniform_modulus() const {
  if (moduli_.empty() || !is_uniform()) throw PreconditionError("abelian group is not of the form (Z/q)^m");
  return moduli_.front();
}

GroupElement AbelianGroup::identity() const {
  GroupElement g;
  for (std::size_t i = 0; i < moduli_.size(); ++i) g.push_back(0);
  return g;
}

GroupElement AbelianGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement g;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t s = static_cast<std::int64_t>(a[i]) + b[i];
    g.push_back(s >= moduli_[i] ? s - moduli_[i] : s);
  }
  return g;
}

GroupElement AbelianGroup::inverse(const GroupElement& a) const {
  GroupElement g;
  for (std::size_t i = 0; i < moduli_.size(); ++i) g.push_back(a[i] == 0 ? 0 : moduli_[i] - a[i]);
  return g;
}

std::string AbelianGroup::name() const {
  if (!moduli_.empty() && is_uniform()) {
    return "(Z/" + std::to_string(moduli_.front()) + ")^" + std::to_string(moduli_.size());
  }
  std::string s;
  for (std::size_t i = 0; i < moduli_.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(moduli_[i]);
  return s.empty() ? "trivial" : s;
}

// MatrixGroupMod

namespace {

std::int64_t det_mod(const IntMatrix& m, std::int64_t q) {
  if (m.rows() <= 3) return mod64(m.determinant(), q);
  // Laplace expansion on the first row keeps intermediates small.
  std::int64_t det = 0;
  std::size_t n = m.rows();
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    std::int64_t term = mod64(m(0, j) * det_mod(minor, q), q);
    det = mod64(det + ((j % 2) ? -term : term), q);
  }
  return det;
}

IntMatrix inverse_mod_matrix(const IntMatrix& m, std::int64_t q) {
  std::size_t n = m.rows();
  std::int64_t dinv = inverse_mod(det_mod(m, q), q);
  if (n == 1) return IntMatrix(1, 1, {dinv});
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c)
          if (c != j) minor(rr, cc++) = m(r, c);
        ++rr;
      }
      std::int64_t cof = det_mod(minor, q);
      if ((i + j) % 2) cof = mod64(-cof, q);
      inv(j, i) = mod64(cof * dinv, q);
    }
  return inv;
}

}  // namespace

MatrixGroupMod::MatrixGroupMod(std::int64_t q, std::size_t dim, std::vector<IntMatrix> elements, std::string label)
    : q_(q), dim_(dim), label_(std::move(label)) {
  if (q < 2) throw PreconditionError("matrix group modulus must be at least 2");
  if (dim == 0 || dim * dim > GroupElement::kCapacity) throw PreconditionError("matrix dimension out of range");
  std::vector<GroupElement> els;
  els.reserve(elements.size());
  for (const auto& m : elements) els.push_back(make(m));
  set_elements(std::move(els));
  if (!contains(make(IntMatrix::identity(dim)))) throw PreconditionError("matrix group lacks the identity");
  inverse_index_.resize(order());
  for (std::size_t i = 0; i < order(); ++i) {
    auto j = find(make(inverse_mod_matrix(matrix(element(i)), q_)));
    if (!j) throw PreconditionError("matrix group is not closed under inverses");
    inverse_index_[i] = *j;
  }
}

GroupElement MatrixGroupMod::make(const IntMatrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) throw MismatchError("matrix has the wrong size for " + label_);
  GroupElement g;
  for (auto v : m.row_major()) g.push_back(mod64(v, q_));
  return g;
}

IntMatrix MatrixGroupMod::matrix(const GroupElement& g) const { return IntMatrix(dim_, dim_, g.to_vector()); }

std::vector<std::int64_t> MatrixGroupMod::act(const GroupElement& g, std::span<const std::int64_t> x) const {
  std::vector<std::int64_t> out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < dim_; ++j) s += static_cast<std::int64_t>(g[i * dim_ + j]) * x[j];
    out[i] = mod64(s, q_);
  }
  return out;
}

GroupElement MatrixGroupMod::identity() const { return make(IntMatrix::identity(dim_)); }

GroupElement MatrixGroupMod::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement g;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      std::int64_t s = 0;
      for (std::size_t k = 0; k < dim_; ++k)
        s += static_cast<std::int64_t>(a[i * dim_ + k]) * b[k * dim_ + j];
      g.push_back(mod64(s, q_));
    }
  return g;
}

GroupElement MatrixGroupMod::inverse(const GroupElement& a) const {
  if (auto i = find(a)) return element(inverse_index_[*i]);
  return make(inverse_mod_matrix(matrix(a), q_));
}

std::size_t sl2_order(std::int64_t q) {
  if (q < 2) throw PreconditionError("SL(2, Z/q) needs q >= 2");
  // q^3 prod (1 - p^-2) = q * prod over p^e || q of p^(2e-2)(p^2 - 1)
  std::size_t order = static_cast<std::size_t>(q);
  std::int64_t r = q;
  auto take = [&](std::int64_t p) {
    auto pe = static_cast<std::size_t>(1);
    while (r % p == 0) {
      r /= p;
      pe *= static_cast<std::size_t>(p);
    }
    auto pp = static_cast<std::size_t>(p * p);
    order *= pe * pe / pp * (pp - 1);
  };
  for (std::int64_t p = 2; p * p <= r; ++p)
    if (r % p == 0) take(p);
  if (r > 1) take(r);
  return order;
}

MatrixGroupPtr sl2_mod(std::int64_t q, std::size_t cap) {
  std::size_t expected = sl2_order(q);
  if (expected > cap) {
    throw PreconditionError("SL(2, Z/" + std::to_string(q) + ") has order " + std::to_string(expected) +
                            ", above the cap " + std::to_string(cap));
  }
  std::vector<IntMatrix> elements;
  elements.reserve(expected);
  for (std::int64_t a = 0; a < q; ++a)
    for (std::int64_t b = 0; b < q; ++b)
      for (std::int64_t c = 0; c < q; ++c)
        for (std::int64_t d = 0; d < q; ++d)
          if (mod64(a * d - b * c, q) == 1) elements.push_back(IntMatrix(2, 2, {a, b, c, d}));
  return std::make_shared<const MatrixGroupMod>(q, 2, std::move(elements), "SL(2,Z/" + std::to_string(q) + ")");
}

MatrixGroupPtr matrix_group_mod(std::int64_t q, const std::vector<IntMatrix>& generators, std::size_t cap) {
  if (q < 2) throw PreconditionError("matrix group modulus must be at least 2");
  if (generators.empty()) throw PreconditionError("matrix group needs at least one generator");
  std::size_t dim = generators.front().rows();
  std::vector<IntMatrix> gens;
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != dim) throw MismatchError("generators must be square of equal size");
    std::int64_t det = det_mod(g.mod(q), q);
    if (gcd64(det, q) != 1) {
      throw PreconditionError("generator " + g.to_string() + " is not invertible mod " + std::to_string(q));
    }
    gens.push_back(g.mod(q));
  }
  IntMatrix id = IntMatrix::identity(dim);
  std::set<std::vector<std::int64_t>> seen{id.row_major()};
  std::vector<IntMatrix> elements{id};
  std::deque<IntMatrix> frontier{id};
  while (!frontier.empty()) {
    IntMatrix m = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      IntMatrix p = (m * g).mod(q);
      if (seen.insert(p.row_major()).second) {
        elements.push_back(p);
        frontier.push_back(p);
        if (elements.size() > cap) throw PreconditionError("generated matrix group exceeds the order cap");
      }
    }
  }
  std::sort(elements.begin(), elements.end(),
            [](const IntMatrix& a, const IntMatrix& b) { return a.row_major() < b.row_major(); });
  return std::make_shared<const MatrixGroupMod>(q, dim, std::move(elements),
                                                "<gens> mod " + std::to_string(q));
}

// SemidirectProduct

SemidirectProduct::SemidirectProduct(AbelianGroupPtr normal, MatrixGroupPtr acting)
    : normal_(std::move(normal)), acting_(std::move(acting)) {
  if (normal_->rank() != acting_->dimension() || !normal_->is_uniform() ||
      normal_->uniform_modulus() != acting_->modulus()) {
    throw MismatchError("semidirect product: normal subgroup must be (Z/q)^d for the acting group's q and d");
  }
  std::int64_t q = acting_->modulus();
  for (const auto& g : acting_->elements()) {
    if (gcd64(det_mod(acting_->matrix(g), q), q) != 1) {
      throw PreconditionError("semidirect product: " + acting_->matrix(g).to_string() + " is not invertible mod " +
                              std::to_string(q));
    }
  }
  std::vector<GroupElement> elements;
  elements.reserve(normal_->order() * acting_->order());
  for (const auto& x : normal_->elements())
    for (const auto& gamma : acting_->elements()) elements.push_back(make(x, gamma));
  set_elements(std::move(elements));
}

GroupElement SemidirectProduct::make(const GroupElement& x, const GroupElement& gamma) const {
  GroupElement g = x;
  for (std::size_t i = 0; i < gamma.size(); ++i) g.push_back(gamma[i]);
  return g;
}

GroupElement SemidirectProduct::translation(const GroupElement& g) const {
  return GroupElement(g.slice(0, dimension()));
}

GroupElement SemidirectProduct::linear_part(const GroupElement& g) const {
  std::size_t d = dimension();
  return GroupElement(g.slice(d, d * d));
}

GroupElement SemidirectProduct::identity() const { return make(normal_->identity(), acting_->identity()); }

GroupElement SemidirectProduct::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement g1 = linear_part(a);
  auto gx = acting_->act(g1, translation(b).to_vector());
  GroupElement x = normal_->multiply(translation(a), GroupElement(gx));
  return make(x, acting_->multiply(g1, linear_part(b)));
}

GroupElement SemidirectProduct::inverse(const GroupElement& a) const {
  GroupElement ginv = acting_->inverse(linear_part(a));
  auto y = acting_->act(ginv, translation(a).to_vector());
  return make(normal_->inverse(GroupElement(y)), ginv);
}

std::string SemidirectProduct::name() const { return normal_->name() + " x| " + acting_->name(); }

// Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<GroupElement> elements, std::string label)
    : parent_(std::move(parent)), label_(std::move(label)) {
  set_elements(std::move(elements));
  if (!contains(parent_->identity())) throw PreconditionError(label_ + " does not contain the identity");
  for (const auto& a : this->elements()) {
    if (!contains(parent_->inverse(a))) throw PreconditionError(label_ + " is not closed under inverses");
    for (const auto& b : this->elements()) {
      if (!contains(parent_->multiply(a, b))) {
        throw PreconditionError(label_ + " is not closed: " + a.to_string() + " * " + b.to_string());
      }
    }
  }
}

SubgroupPtr generated_subgroup(GroupPtr parent, const std::vector<GroupElement>& generators, std::size_t cap,
                               std::string label) {
  std::unordered_map<GroupElement, bool, GroupElementHash> seen;
  std::vector<GroupElement> elements{parent->identity()};
  seen[elements.front()] = true;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& g : generators) {
      GroupElement p = parent->multiply(elements[i], g);
      if (seen.emplace(p, true).second) {
        elements.push_back(p);
        if (elements.size() > cap) throw PreconditionError("generated subgroup exceeds the order cap");
      }
    }
  }
  std::sort(elements.begin(), elements.end());
  return std::make_shared<const Subgroup>(std::move(parent), std::move(elements), std::move(label));
}

// TableGroup

TableGroup::TableGroup(std::size_t n, std::vector<std::size_t> table, std::string label)
    : n_(n), table_(std::move(table)), label_(std::move(label)) {
  if (n == 0 || table_.size() != n * n) throw PreconditionError("multiplication table must be n x n");
  for (auto v : table_)
    if (v >= n) throw PreconditionError("multiplication table entry out of range");
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = table_[e * n + i] == i && table_[i * n + e] == i;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw PreconditionError("multiplication table has no identity");
  inverse_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table_[i * n + j] == identity_ && table_[j * n + i] == identity_) inverse_[i] = j;
  for (auto v : inverse_)
    if (v == n) throw PreconditionError("multiplication table lacks inverses");
  std::vector<GroupElement> elements;
  for (std::size_t i = 0; i < n; ++i) elements.push_back(GroupElement{static_cast<std::int64_t>(i)});
  set_elements(std::move(elements));
}

GroupElement TableGroup::multiply(const GroupElement& a, const GroupElement& b) const {
  return GroupElement{static_cast<std::int64_t>(table_[static_cast<std::size_t>(a[0]) * n_ + b[0]])};
}

GroupElement TableGroup::inverse(const GroupElement& a) const {
  return GroupElement{static_cast<std::int64_t>(inverse_[static_cast<std::size_t>(a[0])])};
}

GroupAxiomReport verify_group_axioms(const FiniteGroup& g, std::uint64_t seed, std::size_t exhaustive_limit,
                                     std::uint64_t samples) {
  GroupAxiomReport report;
  GroupElement e = g.identity();
  for (const auto& a : g.elements()) {
    if (g.multiply(a, e) != a || g.multiply(e, a) != a) {
      report.identity = false;
      report.witness = "identity fails at " + a.to_string();
      return report;
    }
    GroupElement inv = g.inverse(a);
    if (g.multiply(a, inv) != e || g.multiply(inv, a) != e) {
      report.inverses = false;
      report.witness = "inverse fails at " + a.to_string();
      return report;
    }
  }
  auto check = [&](const GroupElement& a, const GroupElement& b, const GroupElement& c) {
    ++report.triples_checked;
    if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) {
      report.associative = false;
      report.witness = "associativity fails at " + a.to_string() + ", " + b.to_string() + ", " + c.to_string();
      return false;
    }
    return true;
  };
  if (g.order() <= exhaustive_limit) {
    report.exhaustive = true;
    for (const auto& a : g.elements())
      for (const auto& b : g.elements())
        for (const auto& c : g.elements())
          if (!check(a, b, c)) return report;
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < samples; ++i) {
      GroupElement a = g.sample(rng), b = g.sample(rng), c = g.sample(rng);
      if (!check(a, b, c)) return report;
    }
  }
  return report;
}

}  // namespace tga

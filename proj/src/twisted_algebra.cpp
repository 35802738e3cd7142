#include "tga/twisted_algebra.hpp"

#include <mutex>
#include <sstream>

#include "tga/errors.hpp"
#include "tga/parallel.hpp"

namespace tga {

TwistedAlgebra::TwistedAlgebra(TwoCocycle mu) : mu_(std::move(mu)) {
  if (!mu_.is_normalized()) throw PreconditionError("twisted algebra needs a normalized cocycle, mu(e, e) = 1");
}

AlgebraPtr make_algebra(TwoCocycle mu) { return std::make_shared<const TwistedAlgebra>(std::move(mu)); }

AlgebraElement::AlgebraElement(AlgebraPtr ambient) : ambient_(std::move(ambient)) {
  if (!ambient_) throw PreconditionError("algebra element needs an ambient algebra");
}

AlgebraElement AlgebraElement::basis(AlgebraPtr ambient, const GroupElement& g, const Cyclotomic& c) {
  AlgebraElement x(std::move(ambient));
  x.add(g, c);
  return x;
}

Cyclotomic AlgebraElement::coefficient(const GroupElement& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

void AlgebraElement::add(const GroupElement& g, const Cyclotomic& c) {
  if (c.is_formally_zero()) return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void AlgebraElement::check_ambient(const AlgebraElement& o) const {
  if (ambient_ != o.ambient_) throw MismatchError("algebra elements from different ambients");
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  check_ambient(o);
  AlgebraElement r = *this;
  for (const auto& [g, c] : o.terms_) r.add(g, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const { return *this + o * Cyclotomic(-1); }

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  check_ambient(o);
  const TwoCocycle& mu = ambient_->cocycle();
  const Group& grp = ambient_->group();
  AlgebraElement r(ambient_);
  for (const auto& [g, a] : terms_)
    for (const auto& [h, b] : o.terms_) r.add(grp.multiply(g, h), a * b * mu(g, h));
  return r;
}

AlgebraElement AlgebraElement::operator*(const Cyclotomic& c) const {
  AlgebraElement r(ambient_);
  for (const auto& [g, a] : terms_) r.add(g, a * c);
  return r;
}

AlgebraElement AlgebraElement::star() const {
  const TwoCocycle& mu = ambient_->cocycle();
  const Group& grp = ambient_->group();
  AlgebraElement r(ambient_);
  for (const auto& [g, a] : terms_) {
    GroupElement gi = grp.inverse(g);
    r.add(gi, a.conj() * mu(g, gi).conj());
  }
  return r;
}

Cyclotomic AlgebraElement::trace() const { return coefficient(ambient_->group().identity()); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.ambient_ != b.ambient_) return false;
  return (a - b).is_zero();
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << '(' << c.to_string() << ")*" << g.to_string();
  }
  return out.str();
}

Cyclotomic hs_inner(const AlgebraElement& x, const AlgebraElement& y) { return (y.star() * x).trace(); }

AlgebraElement random_element(AlgebraPtr ambient, std::size_t terms, std::int64_t root_order, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coeff(-2, 2), exp(0, root_order - 1);
  AlgebraElement x(ambient);
  for (std::size_t i = 0; i < terms; ++i) {
    GroupElement g = ambient->group().sample(rng);
    x.add(g, Cyclotomic(Scalar::root_of_unity(root_order, exp(rng)), coeff(rng)));
  }
  return x;
}

GroupElement lattice_point(const Group& g, std::int64_t k, std::int64_t l) {
  if (auto* a = dynamic_cast<const AbelianGroup*>(&g)) {
    if (a->rank() != 2) throw PreconditionError("lattice point needs a rank-2 group");
    return a->make({k, l});
  }
  if (dynamic_cast<const LatticeGroup*>(&g)) return GroupElement{k, l};
  throw PreconditionError("lattice point needs Z^2 or (Z/q)^2, got " + g.name());
}

AlgebraElement uv_monomial(AlgebraPtr ambient, const Alpha& alpha, std::int64_t k, std::int64_t l) {
  GroupElement g = lattice_point(ambient->group(), k, l);
  return AlgebraElement::basis(std::move(ambient), g, Cyclotomic(half_power(alpha, k * l)));
}

// ProjectiveRep

ProjectiveRep::ProjectiveRep(FiniteGroupPtr group, TwoCocycle mu, std::size_t dim, Map map, std::string label)
    : group_(std::move(group)), mu_(std::move(mu)), dim_(dim), map_(std::move(map)), label_(std::move(label)) {}

CoeffMatrix ProjectiveRep::extend(const AlgebraElement& x) const {
  CoeffMatrix out(dim_, dim_);
  for (const auto& [g, c] : x.terms()) {
    MonomialMatrix m = map_(g);
    for (std::size_t j = 0; j < dim_; ++j) out.add(m.row_of(j), j, c * m.phase(j));
  }
  return out;
}

ProjectiveRep regular_rep(FiniteGroupPtr group, TwoCocycle mu) {
  const FiniteGroup* g = group.get();
  std::size_t n = g->order();
  auto map = [g, mu, n](const GroupElement& x) {
    std::vector<std::size_t> perm(n);
    std::vector<Scalar> phase(n);
    for (std::size_t j = 0; j < n; ++j) {
      const GroupElement& h = g->element(j);
      perm[j] = g->index_of(g->multiply(x, h));
      phase[j] = mu(x, h);
    }
    return MonomialMatrix(std::move(perm), std::move(phase));
  };
  std::string label = "lambda[" + mu.label() + "]";
  return ProjectiveRep(std::move(group), std::move(mu), n, map, std::move(label));
}

ProjectiveCheck verify_projective(const ProjectiveRep& pi, std::uint64_t seed, std::uint64_t work_limit,
                                  std::uint64_t samples) {
  const FiniteGroup& g = pi.group();
  std::size_t n = g.order();
  ProjectiveCheck check;
  std::vector<MonomialMatrix> images(n);
  parallel_for(n, [&](std::size_t i) { images[i] = pi(g.element(i)); });
  for (std::size_t i = 0; i < n; ++i) {
    if (!images[i].is_unitary() || !(images[i] * images[i].adjoint()).is_identity()) {
      check.ok = check.unitary = false;
      check.witness = "pi(" + g.element(i).to_string() + ") is not unitary";
      return check;
    }
  }
  std::mutex mutex;
  std::size_t best = SIZE_MAX;
  auto test_pair = [&](std::size_t i, std::size_t j, std::size_t order_key) {
    const GroupElement& a = g.element(i);
    const GroupElement& b = g.element(j);
    std::size_t k = g.index_of(g.multiply(a, b));
    if (images[i] * images[j] != images[k] * pi.cocycle()(a, b)) {
      std::lock_guard lock(mutex);
      check.ok = false;
      if (order_key < best) {
        best = order_key;
        check.witness = "pi(g)pi(h) != mu(g,h)pi(gh) at g=" + a.to_string() + " h=" + b.to_string();
      }
    }
  };
  auto nn = static_cast<std::uint64_t>(n);
  if (nn * nn * pi.dim() <= work_limit) {
    check.exhaustive = true;
    check.pairs = nn * nn;
    parallel_for(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) test_pair(i, j, i * n + j);
    });
  } else {
    check.pairs = samples;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> picks(samples);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (auto& p : picks) p = {pick(rng), pick(rng)};
    parallel_for(picks.size(), [&](std::size_t s) { test_pair(picks[s].first, picks[s].second, s); });
  }
  return check;
}

ClockShift clock_shift(const Scalar& beta, std::size_t n) {
  if (n == 0) throw PreconditionError("clock-shift dimension must be positive");
  if (!beta.pow(static_cast<std::int64_t>(n)).is_one()) {
    throw PreconditionError("clock-shift parameter " + beta.to_string() + " is not an N-th root of unity");
  }
  std::vector<Scalar> diag(n);
  std::vector<std::size_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = beta.pow(static_cast<std::int64_t>(i));
    shift[i] = (i + 1) % n;
  }
  return {beta, MonomialMatrix::diagonal(std::move(diag)), MonomialMatrix::permutation(std::move(shift))};
}

ClockShift clock_shift(std::size_t n) {
  return clock_shift(Scalar::root_of_unity(static_cast<std::int64_t>(n), 1), n);
}

}  // namespace tga

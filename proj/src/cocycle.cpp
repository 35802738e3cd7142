#include "tga/cocycle.hpp"

#include <mutex>

#include "tga/errors.hpp"
#include "tga/modular.hpp"
#include "tga/parallel.hpp"

namespace tga {

TwoCocycle::TwoCocycle(GroupPtr group, Evaluator eval, std::optional<std::int64_t> value_order, std::string label)
    : group_(std::move(group)), eval_(std::move(eval)), value_order_(value_order), label_(std::move(label)) {
  if (!group_ || !eval_) throw PreconditionError("cocycle needs a group and an evaluator");
}

const FiniteGroup* TwoCocycle::finite_group() const { return dynamic_cast<const FiniteGroup*>(group_.get()); }

namespace {

bool same_group(const Group& a, const Group& b) { return &a == &b || a.name() == b.name(); }

}  // namespace

TwoCocycle TwoCocycle::operator*(const TwoCocycle& other) const {
  if (!same_group(*group_, *other.group_)) {
    throw MismatchError("cocycles live on different groups: " + group_->name() + " vs " + other.group_->name());
  }
  std::optional<std::int64_t> order;
  if (value_order_ && other.value_order_) order = lcm64(*value_order_, *other.value_order_);
  auto f = eval_;
  auto g = other.eval_;
  return TwoCocycle(
      group_, [f, g](const GroupElement& a, const GroupElement& b) { return f(a, b) * g(a, b); }, order,
      label_ + "*" + other.label_);
}

TwoCocycle TwoCocycle::conj() const {
  auto f = eval_;
  return TwoCocycle(
      group_, [f](const GroupElement& a, const GroupElement& b) { return f(a, b).conj(); }, value_order_,
      "conj(" + label_ + ")");
}

bool TwoCocycle::is_normalized() const {
  GroupElement e = group_->identity();
  return eval_(e, e).is_one();
}

TwoCocycle trivial_cocycle(GroupPtr group) {
  return TwoCocycle(
      std::move(group), [](const GroupElement&, const GroupElement&) { return Scalar::one(); }, 1, "trivial");
}

std::int64_t symplectic_pairing(const GroupElement& x, const GroupElement& y) {
  if (x.size() != y.size() || x.size() % 2 != 0) throw MismatchError("symplectic pairing needs equal even lengths");
  std::size_t n = x.size() / 2;
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s += static_cast<std::int64_t>(x[i]) * y[n + i] - static_cast<std::int64_t>(x[n + i]) * y[i];
  }
  return s;
}

namespace {

TwoCocycle symplectic_on(const Alpha& alpha, GroupPtr group, std::size_t n) {
  Scalar root = alpha.root;
  std::optional<std::int64_t> order;
  if (root.is_torsion()) order = root.order();
  return TwoCocycle(
      std::move(group),
      [root](const GroupElement& x, const GroupElement& y) { return root.pow(symplectic_pairing(x, y)); }, order,
      "nu[" + alpha_to_string(alpha) + ",n=" + std::to_string(n) + "]");
}

void check_descends(const Alpha& alpha, std::int64_t q) {
  std::int64_t ord = alpha.root_order();
  if (ord == 0 || q % ord != 0) {
    throw WellDefinednessError("alpha^(1/2) = " + alpha.root.to_string() + " has order " +
                               (ord == 0 ? std::string("infinity") : std::to_string(ord)) +
                               ", which does not divide q = " + std::to_string(q));
  }
}

}  // namespace

TwoCocycle symplectic_cocycle(const Alpha& alpha, std::size_t n, std::optional<std::int64_t> q) {
  if (n == 0) throw PreconditionError("symplectic cocycle needs n >= 1");
  if (!q) return symplectic_on(alpha, std::make_shared<const LatticeGroup>(2 * n), n);
  check_descends(alpha, *q);
  return symplectic_on(alpha, AbelianGroup::power(*q, 2 * n), n);
}

TwoCocycle symplectic_cocycle_on(const Alpha& alpha, AbelianGroupPtr group) {
  if (group->rank() == 0 || group->rank() % 2 != 0) throw PreconditionError("symplectic cocycle needs even rank");
  check_descends(alpha, group->uniform_modulus());
  std::size_t n = group->rank() / 2;
  return symplectic_on(alpha, std::move(group), n);
}

TwoCocycle mu_alpha(const Alpha& alpha) {
  Scalar root = alpha.root;
  std::optional<std::int64_t> order;
  if (root.is_torsion()) order = root.order();
  return TwoCocycle(
      std::make_shared<const LatticeGroup>(2),
      [root](const GroupElement& a, const GroupElement& b) {
        std::int64_t k = a[0], l = a[1], k2 = b[0], l2 = b[1];
        return root.pow(k * l2 - k2 * l);
      },
      order, "mu[" + alpha_to_string(alpha) + "]");
}

namespace {

struct LinearShape {
  std::size_t dim;
  std::optional<std::int64_t> q;
};

LinearShape linear_shape(const Group& g) {
  if (auto* a = dynamic_cast<const AbelianGroup*>(&g)) return {a->rank(), a->uniform_modulus()};
  if (auto* l = dynamic_cast<const LatticeGroup*>(&g)) return {l->dimension(), std::nullopt};
  throw PreconditionError("expected a cocycle on Z^d or (Z/q)^d, got " + g.name());
}

GroupElement image(const IntMatrix& g, std::size_t column, const LinearShape& shape) {
  GroupElement v;
  for (std::size_t r = 0; r < shape.dim; ++r) v.push_back(shape.q ? mod64(g(r, column), *shape.q) : g(r, column));
  return v;
}

GroupElement basis_vector(std::size_t i, std::size_t dim) {
  GroupElement v;
  for (std::size_t r = 0; r < dim; ++r) v.push_back(r == i ? 1 : 0);
  return v;
}

}  // namespace

bool verify_invariance(const TwoCocycle& nu, const IntMatrix& g) {
  LinearShape shape = linear_shape(nu.group());
  if (g.rows() != shape.dim || g.cols() != shape.dim) throw MismatchError("matrix size does not match the cocycle");
  for (std::size_t i = 0; i < shape.dim; ++i)
    for (std::size_t j = 0; j < shape.dim; ++j) {
      if (nu(image(g, i, shape), image(g, j, shape)) != nu(basis_vector(i, shape.dim), basis_vector(j, shape.dim))) {
        return false;
      }
    }
  return true;
}

TwoCocycle extend_to_semidirect(const TwoCocycle& nu, MatrixGroupPtr gamma) {
  auto normal = std::dynamic_pointer_cast<const AbelianGroup>(nu.group_ptr());
  if (!normal) throw PreconditionError("semidirect extension needs a cocycle on (Z/q)^d");
  for (const auto& g : gamma->elements()) {
    if (!verify_invariance(nu, gamma->matrix(g))) {
      throw InvarianceViolation("gamma = " + gamma->matrix(g).to_string() + " does not preserve " + nu.label());
    }
  }
  auto product = std::make_shared<const SemidirectProduct>(normal, gamma);
  const SemidirectProduct* s = product.get();
  return TwoCocycle(
      product,
      [nu, s](const GroupElement& a, const GroupElement& b) {
        GroupElement x1 = s->translation(a);
        GroupElement gx2(s->acting().act(s->linear_part(a), s->translation(b).to_vector()));
        return nu(x1, gx2);
      },
      nu.value_order(), "ext(" + nu.label() + ")");
}

TwoCocycle extend_to_affine(const TwoCocycle& nu, const std::vector<IntMatrix>& generators) {
  auto lattice = std::dynamic_pointer_cast<const LatticeGroup>(nu.group_ptr());
  if (!lattice) throw PreconditionError("affine extension needs a cocycle on Z^d");
  for (const auto& g : generators) {
    if (!verify_invariance(nu, g)) throw InvarianceViolation("gamma = " + g.to_string() + " does not preserve " + nu.label());
  }
  auto group = std::make_shared<const AffineLatticeGroup>(lattice->dimension(), generators);
  const AffineLatticeGroup* aff = group.get();
  return TwoCocycle(
      group,
      [nu, aff](const GroupElement& a, const GroupElement& b) {
        auto gx2 = aff->linear_part(a) * std::span<const std::int64_t>(aff->translation(b));
        return nu(GroupElement(aff->translation(a)), GroupElement(gx2));
      },
      nu.value_order(), "ext(" + nu.label() + ")");
}

TwoCocycle table_cocycle(FiniteGroupPtr group, std::vector<Scalar> values, std::optional<std::int64_t> value_order,
                         std::string label) {
  std::size_t n = group->order();
  if (values.size() != n * n) throw MismatchError("cocycle table must have |G|^2 entries");
  const FiniteGroup* g = group.get();
  auto table = std::make_shared<const std::vector<Scalar>>(std::move(values));
  return TwoCocycle(
      std::move(group),
      [g, table, n](const GroupElement& a, const GroupElement& b) {
        return (*table)[g->index_of(a) * n + g->index_of(b)];
      },
      value_order, std::move(label));
}

std::vector<Scalar> tabulate(const TwoCocycle& mu) {
  const FiniteGroup* g = mu.finite_group();
  if (!g) throw UnsupportedError("tabulating a cocycle needs a finite group");
  std::size_t n = g->order();
  std::vector<Scalar> out(n * n);
  parallel_for(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = mu(g->element(i), g->element(j));
  });
  return out;
}

TwoCocycle coboundary_of(FiniteGroupPtr group, const std::vector<Scalar>& lambda, std::string label) {
  std::size_t n = group->order();
  if (lambda.size() != n) throw MismatchError("lambda must have one value per element");
  std::vector<Scalar> values(n * n);
  std::int64_t order = 1;
  for (const auto& l : lambda) order = l.is_torsion() && order ? lcm64(order, l.order()) : 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = group->index_of(group->multiply(group->element(i), group->element(j)));
      values[i * n + j] = lambda[i] * lambda[j] * lambda[k].conj();
    }
  std::optional<std::int64_t> vo;
  if (order) vo = order;
  return table_cocycle(std::move(group), std::move(values), vo, std::move(label));
}

std::pair<TwoCocycle, std::vector<Scalar>> random_coboundary(FiniteGroupPtr group, std::int64_t m,
                                                             std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> pick(0, m - 1);
  std::vector<Scalar> lambda(group->order());
  for (auto& l : lambda) l = Scalar::root_of_unity(m, pick(rng));
  lambda[group->identity_index()] = Scalar::one();
  auto mu = coboundary_of(group, lambda, "d(lambda)");
  return {mu, lambda};
}

namespace {

void record_failure(CocycleCheck& c, std::mutex& mutex, std::size_t& best, std::size_t chunk, std::string witness) {
  std::lock_guard lock(mutex);
  c.ok = false;
  if (chunk < best) {
    best = chunk;
    c.witness = std::move(witness);
  }
}

std::string triple_text(const GroupElement& g, const GroupElement& h, const GroupElement& k) {
  return "g=" + g.to_string() + " h=" + h.to_string() + " k=" + k.to_string();
}

}  // namespace

CocycleCheck verify_cocycle_identity(const TwoCocycle& mu, const VerificationPolicy& policy) {
  const Group& grp = mu.group();
  const FiniteGroup* fg = mu.finite_group();
  CocycleCheck check;
  std::mutex mutex;
  std::size_t best = SIZE_MAX;
  auto holds = [&](const GroupElement& g, const GroupElement& h, const GroupElement& k) {
    GroupElement gh = grp.multiply(g, h);
    GroupElement hk = grp.multiply(h, k);
    return mu(g, h) * mu(gh, k) == mu(h, k) * mu(g, hk);
  };
  constexpr std::size_t kChunks = 64;
  if (fg) {
    auto n = static_cast<std::uint64_t>(fg->order());
    if (n * n * n <= policy.exhaustive_limit) {
      check.exhaustive = true;
      check.triples = n * n * n;
      parallel_chunks(n * n, kChunks, [&](std::size_t chunk, std::size_t b, std::size_t e) {
        for (std::size_t p = b; p < e; ++p) {
          const GroupElement& g = fg->element(p / n);
          const GroupElement& h = fg->element(p % n);
          for (const auto& k : fg->elements()) {
            if (!holds(g, h, k)) {
              record_failure(check, mutex, best, chunk, triple_text(g, h, k));
              return;
            }
          }
        }
      });
      return check;
    }
  }
  check.triples = policy.samples;
  parallel_chunks(kChunks, kChunks, [&](std::size_t chunk, std::size_t, std::size_t) {
    std::uint64_t count = policy.samples / kChunks + (chunk < policy.samples % kChunks ? 1 : 0);
    std::seed_seq seq{policy.seed, static_cast<std::uint64_t>(chunk)};
    std::mt19937_64 rng(seq);
    for (std::uint64_t i = 0; i < count; ++i) {
      GroupElement g = grp.sample(rng), h = grp.sample(rng), k = grp.sample(rng);
      if (!holds(g, h, k)) {
        record_failure(check, mutex, best, chunk, triple_text(g, h, k));
        return;
      }
    }
  });
  return check;
}

std::int64_t torsion_order(const TwoCocycle& mu) {
  const FiniteGroup* g = mu.finite_group();
  if (!g) throw UnsupportedError("torsion order needs a finite group");
  std::int64_t m = 1;
  for (const auto& s : tabulate(mu)) {
    if (!s.is_torsion()) throw UnsupportedError("cocycle " + mu.label() + " takes the non-torsion value " + s.to_string());
    m = lcm64(m, s.order());
  }
  return m;
}

namespace {

constexpr std::size_t kCoboundaryOrderCap = 400;

}  // namespace

std::optional<std::vector<Scalar>> is_coboundary(const TwoCocycle& mu) {
  const FiniteGroup* g = mu.finite_group();
  if (!g) throw UnsupportedError("coboundary detection needs a finite group");
  std::size_t n = g->order();
  if (n > kCoboundaryOrderCap) {
    throw UnsupportedError("coboundary detection is limited to groups of order <= " +
                           std::to_string(kCoboundaryOrderCap));
  }
  auto values = tabulate(mu);
  std::int64_t m = 1;
  for (const auto& s : values) {
    if (!s.is_torsion()) throw UnsupportedError("cocycle " + mu.label() + " takes the non-torsion value " + s.to_string());
    m = lcm64(m, s.order());
  }
  std::int64_t big = m * static_cast<std::int64_t>(n);
  std::vector<std::vector<std::int64_t>> rows;
  std::vector<std::int64_t> rhs;
  rows.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::int64_t> row(n, 0);
      row[i] += 1;
      row[j] += 1;
      row[g->index_of(g->multiply(g->element(i), g->element(j)))] -= 1;
      rows.push_back(std::move(row));
      rhs.push_back(exponent_in(values[i * n + j], m) * static_cast<std::int64_t>(n));
    }
  auto z = solve_mod(rows, rhs, n, big);
  if (!z) return std::nullopt;
  std::vector<Scalar> lambda(n);
  for (std::size_t i = 0; i < n; ++i) lambda[i] = Scalar::root_of_unity(big, (*z)[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = g->index_of(g->multiply(g->element(i), g->element(j)));
      if (lambda[i] * lambda[j] * lambda[k].conj() != values[i * n + j]) {
        throw IdentityFailure("coboundary witness fails at " + g->element(i).to_string() + ", " +
                              g->element(j).to_string());
      }
    }
  return lambda;
}

TwoCocycle restrict_cocycle(const TwoCocycle& mu, SubgroupPtr h) {
  if (!same_group(h->parent(), mu.group())) {
    throw MismatchError("subgroup of " + h->parent().name() + " cannot restrict a cocycle on " + mu.group().name());
  }
  auto f = mu;
  return TwoCocycle(
      h, [f](const GroupElement& a, const GroupElement& b) { return f(a, b); }, mu.value_order(),
      mu.label() + "|" + h->name());
}

bool same_class(const TwoCocycle& mu1, const TwoCocycle& mu2) { return is_coboundary(mu1 * mu2.conj()).has_value(); }

}  // namespace tga

#include "tga/action.hpp"

#include <random>

#include "tga/errors.hpp"

namespace tga {

namespace {

GroupElement point_of(const Group& grp, const std::vector<std::int64_t>& coords) {
  if (auto* a = dynamic_cast<const AbelianGroup*>(&grp)) return a->make(coords);
  return GroupElement(coords);
}

std::vector<IntMatrix> with_inverses(const std::vector<IntMatrix>& gens) {
  std::vector<IntMatrix> out = gens;
  for (const auto& g : gens) {
    auto inv = g.unimodular_inverse();
    if (!inv) throw PreconditionError("generator " + g.to_string() + " is not unimodular");
    out.push_back(*inv);
  }
  return out;
}

}  // namespace

ActionContext make_action_context(const Alpha& alpha, std::size_t n, std::optional<std::int64_t> q,
                                  std::vector<IntMatrix> generators, std::int64_t phase_fault) {
  if (n == 0) throw PreconditionError("action needs n >= 1");
  TwoCocycle nu = symplectic_cocycle(alpha, n, q);
  for (const auto& g : generators) {
    if (g.rows() != 2 * n || g.cols() != 2 * n) {
      throw PreconditionError("generator " + g.to_string() + " is not " + std::to_string(2 * n) + "x" +
                              std::to_string(2 * n));
    }
    if (!verify_invariance(nu, g)) throw InvarianceViolation("gamma = " + g.to_string() + " does not preserve " + nu.label());
  }
  ActionContext ctx;
  ctx.alpha = alpha;
  ctx.n = n;
  ctx.q = q;
  ctx.generators = std::move(generators);
  ctx.algebra = make_algebra(std::move(nu));
  ctx.phase_fault = phase_fault;
  return ctx;
}

AlgebraElement sigma_formula(const ActionContext& ctx, const IntMatrix& g, const AlgebraElement& x) {
  if (ctx.n != 1) throw UnsupportedError("the monomial formula covers n = 1 only");
  AlgebraElement out(ctx.algebra);
  for (const auto& [pt, c] : x.terms()) {
    std::int64_t k = pt[0], l = pt[1];
    std::int64_t k2 = g(0, 0) * k + g(0, 1) * l;
    std::int64_t l2 = g(1, 0) * k + g(1, 1) * l;
    // delta_(k,l) = alpha^(-kl/2) u^k v^l
    Cyclotomic coeff = c * Cyclotomic(half_power(ctx.alpha, -k * l));
    Scalar phase = half_power(ctx.alpha, k * l - k2 * l2 + ctx.phase_fault * k * k);
    out = out + uv_monomial(ctx.algebra, ctx.alpha, k2, l2) * (coeff * Cyclotomic(phase));
  }
  return out;
}

AlgebraElement sigma_transport(const ActionContext& ctx, const IntMatrix& g, const AlgebraElement& x) {
  const Group& grp = ctx.algebra->group();
  AlgebraElement out(ctx.algebra);
  for (const auto& [pt, c] : x.terms()) out.add(point_of(grp, g * std::span<const std::int64_t>(pt.to_vector())), c);
  return out;
}

AlgebraElement sigma(const ActionContext& ctx, const IntMatrix& g, const AlgebraElement& x) {
  return ctx.n == 1 ? sigma_formula(ctx, g, x) : sigma_transport(ctx, g, x);
}

ActionReport verify_action(const ActionContext& ctx, std::uint64_t seed, std::uint64_t samples) {
  if (!ctx.q) throw PreconditionError("action verification needs a finite modulus q");
  const auto* grp = ctx.algebra->cocycle().finite_group();
  std::vector<IntMatrix> elems = with_inverses(ctx.generators);
  std::vector<AlgebraElement> monomials;
  for (const auto& x : grp->elements()) monomials.push_back(AlgebraElement::basis(ctx.algebra, x));
  std::size_t m = monomials.size();

  ActionReport r;
  auto fail = [&r](bool& flag, const std::string& what) {
    if (flag) {
      flag = false;
      if (r.witness.empty()) r.witness = what;
    }
  };
  auto name = [](const IntMatrix& g) { return g.to_string(); };

  for (const auto& g : elems) {
    for (const auto& x : monomials) {
      ++r.checks;
      AlgebraElement sx = sigma(ctx, g, x);
      if (!(sx.star() == sigma(ctx, g, x.star())))
        fail(r.star_preserving, "sigma(g)(x*) != sigma(g)(x)* at g=" + name(g) + " x=" + x.to_string());
      if (!(sx.trace() - x.trace()).is_zero())
        fail(r.trace_preserving, "tau(sigma(g)(x)) != tau(x) at g=" + name(g) + " x=" + x.to_string());
      if (ctx.n == 1 && !(sx == sigma_transport(ctx, g, x)))
        fail(r.formula_matches_transport, "formula != transport at g=" + name(g) + " x=" + x.to_string());
    }
    for (const auto& h : elems) {
      IntMatrix gh = g * h;
      for (const auto& x : monomials) {
        ++r.checks;
        if (!(sigma(ctx, g, sigma(ctx, h, x)) == sigma(ctx, gh, x)))
          fail(r.homomorphism,
               "sigma(g)sigma(h) != sigma(gh) at g=" + name(g) + " h=" + name(h) + " x=" + x.to_string());
      }
    }
  }

  auto check_pair = [&](const IntMatrix& g, const AlgebraElement& x, const AlgebraElement& y) {
    ++r.checks;
    if (!(sigma(ctx, g, x * y) == sigma(ctx, g, x) * sigma(ctx, g, y)))
      fail(r.multiplicative, "sigma(g)(xy) != sigma(g)(x)sigma(g)(y) at g=" + name(g) + " x=" + x.to_string() +
                                 " y=" + y.to_string());
  };
  r.exhaustive = *ctx.q <= 8 && static_cast<std::uint64_t>(m) * m <= 1'000'000;
  if (r.exhaustive) {
    for (const auto& g : elems)
      for (const auto& x : monomials)
        for (const auto& y : monomials) check_pair(g, x, y);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1), which(0, elems.size() - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const IntMatrix& g = elems[which(rng)];
      std::size_t i = pick(rng), j = pick(rng);
      check_pair(g, monomials[i], monomials[j]);
    }
  }
  return r;
}

ProjectiveRep finite_model(const Alpha& alpha, std::int64_t q, MatrixGroupPtr gamma) {
  if (gamma->modulus() != q) throw MismatchError("Gamma is reduced mod " + std::to_string(gamma->modulus()) +
                                                 ", not mod " + std::to_string(q));
  TwoCocycle ext = extend_to_semidirect(symplectic_cocycle(alpha, 1, q), std::move(gamma));
  auto group = std::dynamic_pointer_cast<const FiniteGroup>(ext.group_ptr());
  return regular_rep(std::move(group), std::move(ext));
}

CrossedProductReport crossed_product_consistency(const Alpha& alpha, std::int64_t q, MatrixGroupPtr gamma,
                                                 bool fault, std::uint64_t seed, std::uint64_t exhaustive_pairs,
                                                 std::uint64_t samples) {
  if (gamma->modulus() != q || gamma->dimension() != 2)
    throw MismatchError("Gamma must be a group of 2x2 matrices mod " + std::to_string(q));
  ActionContext ctx = make_action_context(alpha, 1, q, {});
  TwoCocycle ext = extend_to_semidirect(ctx.algebra->cocycle(), gamma);
  auto semi = std::dynamic_pointer_cast<const SemidirectProduct>(ext.group_ptr());
  GroupElement zero = semi->normal().identity();
  GroupElement e = gamma->identity();
  if (fault) {
    TwoCocycle clean = ext;
    const SemidirectProduct* s = semi.get();
    ext = TwoCocycle(
        semi,
        [clean, s, zero, e](const GroupElement& a, const GroupElement& b) {
          Scalar v = clean(a, b);
          if (s->translation(a) != zero && s->linear_part(a) != e) v *= Scalar::minus_one();
          return v;
        },
        std::nullopt, "faulty " + clean.label());
  }
  AlgebraPtr crossed = make_algebra(ext);

  CrossedProductReport r;
  auto check = [&](const GroupElement& a, const GroupElement& b) {
    ++r.pairs;
    AlgebraElement lhs = AlgebraElement::basis(crossed, a) * AlgebraElement::basis(crossed, b);
    GroupElement x1 = semi->translation(a), g1 = semi->linear_part(a);
    GroupElement x2 = semi->translation(b), g2 = semi->linear_part(b);
    AlgebraElement rhs = AlgebraElement::basis(ctx.algebra, x1) *
                         sigma_formula(ctx, gamma->matrix(g1), AlgebraElement::basis(ctx.algebra, x2));
    GroupElement g12 = gamma->multiply(g1, g2);
    AlgebraElement mapped(crossed);
    for (const auto& [y, c] : rhs.terms()) mapped.add(semi->make(y, g12), c);
    if (!(lhs == mapped) && r.consistent) {
      r.consistent = false;
      r.witness = "crossed-product rule fails at (x1,g1)=" + a.to_string() + " (x2,g2)=" + b.to_string() +
                  ": " + lhs.to_string() + " vs " + mapped.to_string();
    }
  };
  std::size_t n = semi->order();
  r.exhaustive = static_cast<std::uint64_t>(n) * n <= exhaustive_pairs;
  if (r.exhaustive) {
    for (const auto& a : semi->elements())
      for (const auto& b : semi->elements()) check(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::size_t i = pick(rng), j = pick(rng);
      check(semi->element(i), semi->element(j));
    }
  }
  return r;
}

std::vector<IntMatrix> sl2_generators() { return {IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{1, 1}, {0, 1}}}; }

}  // namespace tga

#include "tga/rigidity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "tga/errors.hpp"

namespace tga {

namespace {

using Cd = std::complex<double>;

ComplexVector apply_monomial(const MonomialMatrix& m, const ComplexVector& v) {
  ComplexVector w(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) w[m.row_of(j)] += m.phase(j).to_complex() * v[j];
  return w;
}

Cd dot(const ComplexVector& a, const ComplexVector& b) {
  Cd s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const ComplexVector& v) { return std::sqrt(std::real(dot(v, v))); }

void check_closed(const Group& g, const std::vector<GroupElement>& h) {
  if (h.empty()) throw PreconditionError("subgroup is empty");
  std::set<GroupElement> set(h.begin(), h.end());
  for (const auto& a : h)
    for (const auto& b : h)
      if (!set.count(g.multiply(a, b))) {
        throw PreconditionError("subgroup is not closed: " + a.to_string() + " * " + b.to_string());
      }
}

bool real_phases(const std::vector<MonomialMatrix>& ms) {
  for (const auto& m : ms)
    for (const auto& p : m.phases())
      if (!p.is_one() && p != Scalar::minus_one()) return false;
  return true;
}

template <class Matrix>
double lowest_compressed_eigenvalue(const std::vector<MonomialMatrix>& h_images,
                                    const std::vector<MonomialMatrix>& f_images, std::size_t dim) {
  using S = typename Matrix::Scalar;
  auto entry = [](const Scalar& s) {
    if constexpr (std::is_same_v<S, double>) {
      return s.is_one() ? 1.0 : -1.0;
    } else {
      return s.to_complex();
    }
  };
  Matrix p = Matrix::Zero(dim, dim);
  for (const auto& m : h_images)
    for (std::size_t j = 0; j < dim; ++j) p(m.row_of(j), j) += entry(m.phase(j));
  p /= static_cast<double>(h_images.size());
  Matrix delta = Matrix::Zero(dim, dim);
  for (const auto& m : f_images) {
    for (std::size_t j = 0; j < dim; ++j) {
      delta(j, j) += 2.0;
      S e = entry(m.phase(j));
      delta(m.row_of(j), j) -= e;
      if constexpr (std::is_same_v<S, double>) {
        delta(j, m.row_of(j)) -= e;
      } else {
        delta(j, m.row_of(j)) -= std::conj(e);
      }
    }
  }
  Matrix q = Matrix::Identity(dim, dim) - p;
  double c = 4.0 * static_cast<double>(f_images.size()) + 1.0;
  Matrix m = q * delta * q + c * p;
  Matrix herm = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

ComplexVector random_unit_vector(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexVector v(dim);
  for (auto& x : v) {
    double re = u(rng);
    x = Cd(re, u(rng));
  }
  double n = norm(v);
  for (auto& x : v) x /= n;
  return v;
}

TrivializationResult trivialize(const ProjectiveRep& pi, const std::vector<GroupElement>& subgroup,
                                const ComplexVector& xi, double tol) {
  std::size_t d = pi.dim();
  if (xi.size() != d) throw MismatchError("vector has length " + std::to_string(xi.size()) + ", rep has dimension " +
                                          std::to_string(d));
  if (std::abs(norm(xi) - 1.0) > 1e-9) throw PreconditionError("trivialize needs a unit vector");
  const FiniteGroup& g = pi.group();
  check_closed(g, subgroup);

  std::vector<MonomialMatrix> images;
  images.reserve(subgroup.size());
  for (const auto& h : subgroup) images.push_back(pi(h));

  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(d, d);
  for (const auto& m : images) {
    ComplexVector w = apply_monomial(m, xi);
    Eigen::Map<const Eigen::VectorXcd> wv(w.data(), static_cast<Eigen::Index>(d));
    t += wv * wv.adjoint();
  }
  t /= static_cast<double>(subgroup.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t);
  const auto& evals = es.eigenvalues();
  double scale = std::max(std::abs(evals(d - 1)), std::numeric_limits<double>::min());
  double cluster_tol = 1e-10 * scale;

  std::size_t best = d;
  double best_overlap = -1;
  std::vector<std::size_t> cluster_sizes;
  for (std::size_t i = 0; i < d;) {
    std::size_t j = i + 1;
    while (j < d && evals(j) - evals(j - 1) <= cluster_tol) ++j;
    cluster_sizes.push_back(j - i);
    if (j - i == 1 && evals(i) > cluster_tol) {
      Cd c = 0;
      for (std::size_t r = 0; r < d; ++r) c += std::conj(es.eigenvectors()(r, i)) * xi[r];
      double ov = std::norm(c);
      if (ov > best_overlap) {
        best_overlap = ov;
        best = i;
      }
    }
    i = j;
  }
  if (best == d) {
    std::string sizes;
    for (auto s : cluster_sizes) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
    throw NoRankOneInvariant("no rank-one eigenprojection of the averaged operator; cluster sizes " + sizes);
  }

  TrivializationResult r;
  r.subgroup = subgroup;
  r.xi0.resize(d);
  for (std::size_t k = 0; k < d; ++k) r.xi0[k] = es.eigenvectors()(k, best);
  Cd c = dot(r.xi0, xi);
  if (std::abs(c) > 0)
    for (auto& x : r.xi0) x *= c / std::abs(c);
  r.overlap = best_overlap;
  ComplexVector diff(d);
  for (std::size_t k = 0; k < d; ++k) diff[k] = xi[k] - r.xi0[k];
  r.residual = norm(diff);

  std::map<GroupElement, std::size_t> index;
  for (std::size_t i = 0; i < subgroup.size(); ++i) index.emplace(subgroup[i], i);
  for (std::size_t i = 0; i < subgroup.size(); ++i) {
    ComplexVector w = apply_monomial(images[i], r.xi0);
    Cd lam = dot(r.xi0, w);
    for (std::size_t k = 0; k < d; ++k) w[k] -= lam * r.xi0[k];
    r.eigen_residual = std::max(r.eigen_residual, norm(w));
    r.lambda_numeric.push_back(lam);
  }
  if (r.eigen_residual > tol) {
    throw NotEigenvector("pi(h) xi0 - lambda_h xi0 has norm " + std::to_string(r.eigen_residual));
  }

  const TwoCocycle& mu = pi.cocycle();
  std::int64_t m = 1;
  bool torsion = true;
  for (const auto& a : subgroup)
    for (const auto& b : subgroup) {
      Scalar v = mu(a, b);
      std::size_t ab = index.at(g.multiply(a, b));
      Cd lhs = v.to_complex();
      Cd rhs = r.lambda_numeric[index.at(a)] * r.lambda_numeric[index.at(b)] * std::conj(r.lambda_numeric[ab]);
      r.certificate = std::max(r.certificate, std::abs(lhs - rhs));
      if (v.is_torsion())
        m = lcm64(m, v.order());
      else
        torsion = false;
    }
  if (r.certificate > tol) {
    throw IdentityFailure("numeric coboundary certificate " + std::to_string(r.certificate) + " exceeds tolerance");
  }
  if (!torsion) return r;

  std::int64_t order = m * static_cast<std::int64_t>(subgroup.size());
  bool snapped = true;
  for (const auto& lam : r.lambda_numeric) {
    double turns = std::arg(lam) / (2 * std::numbers::pi) * static_cast<double>(order);
    auto k = mod64(static_cast<std::int64_t>(std::llround(turns)), order);
    Scalar s = Scalar::root_of_unity(order, k);
    if (std::abs(s.to_complex() - lam) > 1e-6) snapped = false;
    r.lambda.push_back(s);
  }
  r.exact = snapped;
  for (std::size_t i = 0; i < subgroup.size() && r.exact; ++i)
    for (std::size_t j = 0; j < subgroup.size(); ++j) {
      std::size_t ij = index.at(g.multiply(subgroup[i], subgroup[j]));
      if (mu(subgroup[i], subgroup[j]) != r.lambda[i] * r.lambda[j] * r.lambda[ij].conj()) {
        r.exact = false;
        break;
      }
    }
  return r;
}

ConstantSchedule default_schedule() {
  return {[](double) { return std::vector<IntMatrix>{IntMatrix{{0, -1}, {1, 0}}, IntMatrix{{1, 1}, {0, 1}}}; },
          [](double e) { return e / 10.0; }};
}

LemmaConstants lemma_constants(double eps, const ConstantSchedule& schedule) {
  if (!(eps > 0.0 && eps <= 1.0)) throw PreconditionError("epsilon must lie in (0, 1], got " + std::to_string(eps));
  LemmaConstants c;
  c.argument = eps * eps / 28.0;
  c.F = schedule.F(c.argument);
  c.delta = schedule.delta(c.argument) / 2.0;
  return c;
}

ProjectiveRep comparison_rep(const ProjectiveRep& pi1, const ProjectiveRep& pi2) {
  if (pi1.group_ptr() != pi2.group_ptr()) throw MismatchError("comparison needs representations of one group object");
  std::size_t d1 = pi1.dim(), d2 = pi2.dim();
  auto map = [pi1, pi2, d1, d2](const GroupElement& g) {
    MonomialMatrix a = pi1(g), b = pi2(g);
    std::vector<std::size_t> perm(d1 * d2);
    std::vector<Scalar> phase(d1 * d2);
    // pi1(g) E_ij pi2(g)^* = a_i conj(b_j) E_(perm1 i, perm2 j)
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d2; ++j) {
        perm[i * d2 + j] = a.row_of(i) * d2 + b.row_of(j);
        phase[i * d2 + j] = a.phase(i) * b.phase(j).conj();
      }
    return MonomialMatrix(std::move(perm), std::move(phase));
  };
  ProjectiveRep rep(pi1.group_ptr(), pi1.cocycle() * pi2.cocycle().conj(), d1 * d2, map,
                    "cmp(" + pi1.label() + ", " + pi2.label() + ")");
  auto check = verify_projective(rep);
  if (!check.ok) throw IdentityFailure("comparison representation: " + check.witness);
  return rep;
}

GapResult relative_gap(const ProjectiveRep& pi, const std::vector<GroupElement>& subgroup,
                       const std::vector<GroupElement>& generators) {
  const FiniteGroup& g = pi.group();
  check_closed(g, subgroup);
  const TwoCocycle& mu = pi.cocycle();
  std::vector<GroupElement> probe = subgroup;
  probe.insert(probe.end(), generators.begin(), generators.end());
  for (const auto& a : probe)
    for (const auto& b : probe)
      if (!mu(a, b).is_one()) throw PreconditionError("relative gap needs a genuine representation");

  std::size_t dim = pi.dim();
  std::vector<MonomialMatrix> h_images, f_images;
  Cyclotomic trace_sum;
  for (const auto& h : subgroup) {
    h_images.push_back(pi(h));
    trace_sum += h_images.back().trace();
  }
  for (const auto& f : generators) f_images.push_back(pi(f));
  auto total = trace_sum.as_integer();
  auto hsize = static_cast<std::int64_t>(subgroup.size());
  if (!total || *total % hsize != 0) throw IdentityFailure("trace of the H-average is not an integer");

  GapResult r;
  r.dim_invariant = static_cast<std::size_t>(*total / hsize);
  r.dim_complement = dim - r.dim_invariant;
  if (r.dim_complement == 0) {
    r.gap = std::numeric_limits<double>::infinity();
    return r;
  }
  std::vector<MonomialMatrix> all = h_images;
  all.insert(all.end(), f_images.begin(), f_images.end());
  double low = real_phases(all) ? lowest_compressed_eigenvalue<Eigen::MatrixXd>(h_images, f_images, dim)
                                : lowest_compressed_eigenvalue<Eigen::MatrixXcd>(h_images, f_images, dim);
  r.gap = std::max(0.0, low);
  return r;
}

bool gap_is_positive(const ProjectiveRep& pi, const std::vector<GroupElement>& subgroup,
                     const std::vector<GroupElement>& generators) {
  std::size_t dim = pi.dim();
  std::vector<std::size_t> parent(dim);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto permutation_of = [&pi](const GroupElement& g) {
    MonomialMatrix m = pi(g);
    for (const auto& p : m.phases())
      if (!p.is_one()) throw UnsupportedError("exact gap test needs a permutation representation");
    return m;
  };
  for (const auto& f : generators) {
    MonomialMatrix m = permutation_of(f);
    for (std::size_t j = 0; j < dim; ++j) parent[find(j)] = find(m.row_of(j));
  }
  for (const auto& h : subgroup) {
    MonomialMatrix m = permutation_of(h);
    for (std::size_t j = 0; j < dim; ++j)
      if (find(m.row_of(j)) != find(j)) return false;
  }
  return true;
}

ProjectiveRep affine_permutation_rep(SemidirectPtr group) {
  const SemidirectProduct* s = group.get();
  std::size_t dim = s->normal().order();
  auto map = [s, dim](const GroupElement& g) {
    GroupElement x = s->translation(g), gamma = s->linear_part(g);
    std::vector<std::size_t> perm(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      GroupElement y(s->acting().act(gamma, s->normal().element(j).to_vector()));
      perm[j] = s->normal().index_of(s->normal().multiply(y, x));
    }
    return MonomialMatrix::permutation(std::move(perm));
  };
  auto mu = trivial_cocycle(group);
  return ProjectiveRep(std::move(group), std::move(mu), dim, map, "affine");
}

std::int64_t covering_constant(double delta1) {
  if (!(delta1 > 0.0 && delta1 <= 2.0)) throw PreconditionError("delta1 must lie in (0, 2], got " + std::to_string(delta1));
  double x = (1.0 + 4.0 / delta1) * (1.0 + 4.0 / delta1);
  double r = std::round(x);
  if (std::abs(x - r) <= 1e-9 * x) return static_cast<std::int64_t>(r);
  return static_cast<std::int64_t>(std::ceil(x));
}

BigInt counting_bound(std::int64_t n, std::int64_t f1_size, double delta1) {
  if (n < 1) throw PreconditionError("counting bound needs n >= 1");
  if (f1_size < 0) throw PreconditionError("|F1| must be nonnegative");
  BigInt c0 = covering_constant(delta1);
  auto exponent = static_cast<unsigned>(f1_size * n * n);
  return boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(n)) * boost::multiprecision::pow(c0, exponent);
}

}  // namespace tga

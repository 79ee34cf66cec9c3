#include "support/oracles.hpp"

namespace testsupport {

using namespace prelieder;

namespace {
std::size_t sz(int i) { return static_cast<std::size_t>(i); }
}  // namespace

// Direct associator enumeration over every basis triple (including i == j).
bool left_symmetric_oracle(const PreLieAlgebra& a) {
  const auto n = static_cast<std::size_t>(a.dim());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto m = [&](const Vector& x, const Vector& y) { return a.product(x, y); };
        Vector x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
        if (m(m(x, y), z) - m(x, m(y, z)) != m(m(y, x), z) - m(y, m(x, z))) return false;
      }
  return true;
}


// base + t * datum as a pair.
DerPair at_t(const DerPair& base, const DeformationDatum& d, const Scalar& t) {
  DerPair out = base;
  std::vector<Scalar> c = base.algebra.constants();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += t * d.omega.constants()[i];
  out.algebra = PreLieAlgebra(base.algebra.dim(), c);
  for (std::size_t i = 0; i < out.rep.rho.size(); ++i) {
    out.rep.rho[i] = out.rep.rho[i] + t * d.sigma[i];
    out.rep.mu[i] = out.rep.mu[i] + t * d.tau[i];
  }
  out.derivation = out.derivation + t * d.dhat;
  return out;
}

// The t-expansion has degree 2, so validity at t = 1, 2 (with a valid base)
// means every coefficient vanishes.
bool deformation_oracle(const DerPair& base, const DeformationDatum& d) {
  return check_derpair(at_t(base, d, 1)).ok() && check_derpair(at_t(base, d, 2)).ok();
}

// The homomorphism identities have degree 3 in t.
bool equivalence_oracle(const DerPair& base, const DeformationDatum& reference, const DeformationDatum& deformed,
                        const EquivalenceWitness& w) {
  const auto dg = sz(base.algebra.dim()), dv = sz(base.rep.dim_v);
  for (int t = 1; t <= 4; ++t) {
    const Matrix fg = Matrix::identity(dg) + Scalar(t) * w.n;
    const Matrix fv = Matrix::identity(dv) + Scalar(t) * w.s;
    if (!check_morphism(fg, fv, at_t(base, deformed, t), at_t(base, reference, t)).ok()) return false;
  }
  return true;
}

DeformationDatum scaled_datum(const DerPair& p, const Scalar& c) {
  DeformationDatum d = DeformationDatum::from_structure(p);
  std::vector<Scalar> constants = d.omega.constants();
  for (auto& x : constants) x *= c;
  d.omega = PreLieAlgebra(d.omega.dim(), constants);
  for (auto& m : d.sigma) m = c * m;
  for (auto& m : d.tau) m = c * m;
  d.dhat = c * d.dhat;
  return d;
}


// Data valid by construction: multiples of the base (plus a derivation of the
// base in the D^ slot), and arbitrary pairs over an abelian base.
std::vector<DeformationInstance> valid_deformations(int count, Rng& rng) {
  std::vector<DeformationInstance> out;
  for (int i = 0; i < count; ++i) {
    const int dg = rng.uniform(1, 3), dv = rng.uniform(1, 2);
    if (i % 3 == 2) {
      DerPair base{PreLieAlgebra(dg), Representation::zero(dg, dv), Matrix(sz(dv), sz(dg))};
      out.push_back({base, DeformationDatum::from_structure(random_pair(dg, dv, rng))});
      continue;
    }
    DerPair base = random_pair(dg, dv, rng);
    DeformationDatum d = scaled_datum(base, rng.scalar(2, 0.2));
    if (i % 3 == 1) {
      const auto extra = random_combination(derivation_basis(base.algebra, base.rep),
                                                         sz(dv), sz(dg), rng);
      d.dhat = d.dhat + extra;
    }
    out.push_back({base, d});
  }
  return out;
}

DeformationDatum random_datum(Dims dims, Rng& rng) {
  DeformationDatum d = DeformationDatum::zero(dims);
  std::vector<Scalar> c(sz(dims.g * dims.g * dims.g));
  for (auto& x : c) x = rng.scalar(1, 0.6);
  d.omega = PreLieAlgebra(dims.g, c);
  for (auto& m : d.sigma) m = rng.matrix(sz(dims.v), sz(dims.v), 1, 0.6);
  for (auto& m : d.tau) m = rng.matrix(sz(dims.v), sz(dims.v), 1, 0.6);
  d.dhat = rng.matrix(sz(dims.v), sz(dims.g), 1, 0.6);
  return d;
}

// reference + the linear part of the equivalence identities.
DeformationDatum transported(const DerPair& base, const DeformationDatum& reference, const EquivalenceWitness& w) {
  const DerPairCochain shift = huaD(witness_cochain(w, base.dims()), base);
  DerPairCochain c = deformation_cochain(reference);
  c.f.g += shift.f.g;
  c.f.rho += shift.f.rho;
  c.f.mu += shift.f.mu;
  c.theta += shift.theta;
  return deformation_from_cochain(c);
}

// Direct search for zeta = id + phi from the structure constants of the two
// extensions: phi(xy) - rho~(x)phi(y) - mu~(y)phi(x) = theta2 - theta1 and
// phi(Dx) - K phi(x) = xi2 - xi1, unknown phi(w, x) at x * dv + w.
bool isomorphic_oracle(const AbelianExtension& e1, const AbelianExtension& e2, int dg, int dv) {
  const auto g = sz(dg), v = sz(dv);
  std::vector<Vector> rows;
  Vector rhs;
  const auto& a1 = e1.total.algebra;
  const auto& a2 = e2.total.algebra;
  for (std::size_t x = 0; x < g; ++x)
    for (std::size_t y = 0; y < g; ++y)
      for (std::size_t w = 0; w < v; ++w) {
        Vector row = zero_vector(g * v);
        for (std::size_t z = 0; z < g; ++z) row[z * v + w] += a1.constant(int(x), int(y), int(z));
        for (std::size_t u = 0; u < v; ++u) {
          row[y * v + u] -= a2.constant(int(x), int(g + u), int(g + w));
          row[x * v + u] -= a2.constant(int(g + u), int(y), int(g + w));
        }
        rows.push_back(row);
        rhs.push_back(a2.constant(int(x), int(y), int(g + w)) - a1.constant(int(x), int(y), int(g + w)));
      }
  for (std::size_t x = 0; x < g; ++x)
    for (std::size_t w = 0; w < v; ++w) {
      Vector row = zero_vector(g * v);
      for (std::size_t z = 0; z < g; ++z) row[z * v + w] += e1.total.derivation(z, x);
      for (std::size_t u = 0; u < v; ++u) row[x * v + u] -= e2.total.derivation(g + w, g + u);
      rows.push_back(row);
      rhs.push_back(e2.total.derivation(g + w, x) - e1.total.derivation(g + w, x));
    }
  return solve(Matrix::from_rows(rows), rhs).has_value();
}

DerPair perturb_pair(DerPair p, Rng& rng) {
  switch (rng.uniform(0, 2)) {
    case 0: p.algebra = perturb(p.algebra, rng); break;
    case 1: p.rep = perturb(p.rep, rng); break;
    default: p.derivation = p.derivation + rng.matrix(p.derivation.rows(), p.derivation.cols(), 2, 0.2);
  }
  return p;
}


std::vector<Structure> random_structures(int count, unsigned seed) {
  Rng rng(seed);
  std::vector<Structure> out;
  for (int i = 0; i < count; ++i) {
    const int dg = 1 + i % 3;
    const int dv = 1 + (i / 3) % 2;
    DerPair regular = random_regular_pair(dg, rng);
    auto rep = random_pair_representation(regular, dv, rng);
    out.push_back({random_pair(dg, dv, rng), regular, rep});
  }
  return out;
}

Setup random_setup(Rng& rng) {
  DerPair base = random_regular_pair(rng.uniform(1, 2), rng);
  auto rep = random_pair_representation(base, rng.uniform(1, 2), rng);
  return {base, rep};
}

Dims dims_of(const Setup& s) { return {s.base.algebra.dim(), s.rep.rep.dim_v}; }

ExtensionCocycle random_cocycle(const Setup& s, Rng& rng) {
  const auto c = rep_complex(s.base, s.rep);
  Vector v = zero_vector(c->dim(2));
  for (const auto& z : kernel_basis(c->differential(2))) axpy(v, rng.scalar(2, 0.3), z);
  return ExtensionCocycle::from_cochain(RegPairCochain::from_coordinates(2, dims_of(s), Factor::V, v));
}

ExtensionCocycle plus_coboundary(const Setup& s, const ExtensionCocycle& c, const Matrix& phi) {
  const Dims d = dims_of(s);
  RegPairCochain p = RegPairCochain::zero(1, d, Factor::V);
  p.f = linear_map(phi, Factor::G, Factor::V, d);
  const RegPairCochain b = huaD_rep(p, s.base, s.rep);
  return {c.theta + b.f, c.xi + b.theta};
}

bool is_coboundary(const Setup& s, const ExtensionCocycle& c) {
  const Matrix d1 = rep_complex(s.base, s.rep)->differential(1);
  const Vector v = c.as_cochain().coordinates();
  return rank(hconcat(d1, Matrix::from_columns(v.size(), {v}))) == rank(d1);
}


GradedCochain random_homogeneous(Dims d, int k, int l, Rng& rng) {
  // all components of bidegree k|l: g output needs k+1 g-inputs, V output needs k
  GradedCochain f(d, k + l + 1);
  for (Factor tail : {Factor::G, Factor::V}) {
    const int tg = tail == Factor::G ? 1 : 0;
    const int ga = k + 1 - tg;
    const int va = k + l + 1 - 1 - ga;
    if (ga >= 0 && va >= 0) f += lift(rng.component({ga, va, tail}, Factor::G, d, 0.5));
    const int gb = k - tg;
    const int vb = k + l - gb;
    if (gb >= 0 && vb >= 0) f += lift(rng.component({gb, vb, tail}, Factor::V, d, 0.5));
  }
  return f;
}

}  // namespace testsupport

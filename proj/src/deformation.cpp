#include "prelieder/deformation.hpp"

#include <stdexcept>

#include "prelieder/mn_bracket.hpp"

namespace prelieder {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void check_datum(const DerPair& base, const DeformationDatum& d) {
  check_shapes(base);
  check_shapes(d.as_structure());
  if (!(base.dims() == d.dims())) throw std::invalid_argument("deformation datum does not match the base pair");
}

Matrix matrix_of(const ComponentMap& linear, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t o = 0; o < rows; ++o) m(o, i) = linear.coeffs()[i * rows + o];
  return m;
}

}  // namespace

DeformationDatum DeformationDatum::zero(Dims dims) {
  const Representation r = Representation::zero(dims.g, dims.v);
  return {PreLieAlgebra(dims.g), r.rho, r.mu, Matrix(sz(dims.v), sz(dims.g))};
}

DerPair DeformationDatum::as_structure() const {
  return DerPair{omega, Representation{static_cast<int>(dhat.rows()), sigma, tau}, dhat};
}

DeformationDatum DeformationDatum::from_structure(const DerPair& p) {
  return {p.algebra, p.rep.rho, p.rep.mu, p.derivation};
}

Validation check_infinitesimal_deformation(const DerPair& base, const DeformationDatum& d) {
  check_datum(base, d);
  const Dims dims = base.dims();
  const DerPair datum = d.as_structure();
  const GradedCochain pi = structure_cochain(base.algebra, base.rep);
  const GradedCochain om = structure_cochain(datum.algebra, datum.rep);
  const GradedCochain D = lift(linear_map(base.derivation, Factor::G, Factor::V, dims));
  const GradedCochain Dhat = lift(linear_map(d.dhat, Factor::G, Factor::V, dims));
  Validation v;
  if (!mn_bracket(pi, om).is_zero()) v.failed.push_back("deformation-1");
  if (!mn_bracket(om, om).is_zero()) v.failed.push_back("deformation-2");
  if (!(mn_bracket(pi, Dhat) + mn_bracket(om, D)).is_zero()) v.failed.push_back("deformation-3");
  if (!mn_bracket(om, Dhat).is_zero()) v.failed.push_back("deformation-4");
  return v;
}

bool is_infinitesimal_deformation(const DerPair& base, const DeformationDatum& d) {
  return check_infinitesimal_deformation(base, d).ok();
}

DerPairCochain deformation_cochain(const DeformationDatum& d) {
  const DerPair s = d.as_structure();
  check_shapes(s);
  const Dims dims = d.dims();
  DerPairCochain c = DerPairCochain::zero(2, dims);
  c.f.g = multiplication_map(s.algebra, dims);
  c.f.rho = rho_map(s.rep, dims);
  c.f.mu = mu_map(s.rep, dims);
  c.theta = linear_map(d.dhat, Factor::G, Factor::V, dims);
  return c;
}

DeformationDatum deformation_from_cochain(const DerPairCochain& c) {
  if (c.degree() != 2) throw std::invalid_argument("deformation_from_cochain: expected a 2-cochain");
  const Dims dims = c.f.g.dims();
  DeformationDatum d = DeformationDatum::zero(dims);
  for (int i = 0; i < dims.g; ++i) {
    const std::vector<Arg> x{Arg::of(i)};
    for (int j = 0; j < dims.g; ++j) {
      const Vector v = c.f.g.evaluate(x, {}, Arg::of(j));
      for (int k = 0; k < dims.g; ++k) d.omega.set_constant(i, j, k, v[sz(k)]);
    }
    for (int u = 0; u < dims.v; ++u) {
      const std::vector<Arg> vu{Arg::of(u)};
      d.sigma[sz(i)].set_column(sz(u), c.f.rho.evaluate(x, {}, Arg::of(u)));
      d.tau[sz(i)].set_column(sz(u), c.f.mu.evaluate({}, vu, Arg::of(i)));
    }
    d.dhat.set_column(sz(i), c.theta.at({{}, {}, Factor::G, i}));
  }
  return d;
}

DerPairCochain deformation_cocycle(const DerPair& base, const DeformationDatum& d) {
  const Validation v = check_infinitesimal_deformation(base, d);
  if (!v.ok()) throw std::invalid_argument("deformation_cocycle: not an infinitesimal deformation (" + v.failed.front() + ")");
  return deformation_cochain(d);
}

Validation check_equivalence(const DerPair& base, const DeformationDatum& reference, const DeformationDatum& deformed,
                             const EquivalenceWitness& w) {
  check_datum(base, reference);
  check_datum(base, deformed);
  const auto dg = sz(base.algebra.dim());
  const auto dv = sz(base.rep.dim_v);
  if (w.n.rows() != dg || w.n.cols() != dg || w.s.rows() != dv || w.s.cols() != dv)
    throw std::invalid_argument("check_equivalence: witness has the wrong shape");
  const PreLieAlgebra& a = base.algebra;
  const Representation& r = base.rep;
  const PreLieAlgebra& om = reference.omega;
  const PreLieAlgebra& om2 = deformed.omega;
  const Matrix& N = w.n;
  const Matrix& S = w.s;
  auto sigma = [&](const Vector& x) { return Representation{int(dv), reference.sigma, reference.tau}.rho_of(x); };
  auto tau = [&](const Vector& x) { return Representation{int(dv), reference.sigma, reference.tau}.mu_of(x); };

  bool eq[12] = {false, true, true, true, true, true, true, true, true, true, true, true};
  for (std::size_t i = 0; i < dg; ++i) {
    const Vector x = unit_vector(dg, i);
    const Vector nx = N.column(i);
    for (std::size_t j = 0; j < dg; ++j) {
      const Vector y = unit_vector(dg, j);
      const Vector ny = N.column(j);
      const Vector diff = om2.product(x, y) - om.product(x, y);
      eq[1] = eq[1] && diff == a.product(nx, y) + a.product(x, ny) - N * a.product(x, y);
      eq[2] = eq[2] && N * om2.product(x, y) == a.product(nx, ny) + om.product(x, ny) + om.product(nx, y);
      eq[3] = eq[3] && is_zero(om.product(nx, ny));
    }
    const Matrix& s2 = deformed.sigma[i];
    const Matrix& t2 = deformed.tau[i];
    eq[4] = eq[4] && s2 - reference.sigma[i] == r.rho[i] * S + r.rho_of(nx) - S * r.rho[i];
    eq[5] = eq[5] && S * s2 == r.rho_of(nx) * S + reference.sigma[i] * S + sigma(nx);
    eq[6] = eq[6] && sigma(nx) * S == Matrix(dv, dv);
    eq[7] = eq[7] && t2 - reference.tau[i] == r.mu[i] * S + r.mu_of(nx) - S * r.mu[i];
    eq[8] = eq[8] && S * t2 == r.mu_of(nx) * S + reference.tau[i] * S + tau(nx);
    eq[9] = eq[9] && tau(nx) * S == Matrix(dv, dv);
    eq[10] = eq[10] && deformed.dhat.column(i) - reference.dhat.column(i) == base.derivation * nx - S * base.derivation.column(i);
    eq[11] = eq[11] && S * deformed.dhat.column(i) == reference.dhat * nx;
  }
  Validation v;
  for (int k = 1; k <= 11; ++k)
    if (!eq[k]) v.failed.push_back("equi-deformation-" + std::to_string(k));
  return v;
}

bool is_equivalence(const DerPair& base, const DeformationDatum& reference, const DeformationDatum& deformed,
                    const EquivalenceWitness& w) {
  return check_equivalence(base, reference, deformed, w).ok();
}

DerPairCochain witness_cochain(const EquivalenceWitness& w, Dims dims) {
  DerPairCochain c = DerPairCochain::zero(1, dims);
  c.f.g = linear_map(w.n, Factor::G, Factor::G, dims);
  c.f.rho = linear_map(w.s, Factor::V, Factor::V, dims);
  return c;
}

EquivalenceWitness witness_from_cochain(const DerPairCochain& c) {
  if (c.degree() != 1) throw std::invalid_argument("witness_from_cochain: expected a 1-cochain");
  const Dims d = c.f.g.dims();
  return {matrix_of(c.f.g, sz(d.g), sz(d.g)), matrix_of(c.f.rho, sz(d.v), sz(d.v))};
}

std::optional<EquivalenceWitness> same_cohomology_class(const DerPair& base, const DeformationDatum& reference,
                                                        const DeformationDatum& deformed) {
  check_datum(base, reference);
  check_datum(base, deformed);
  const DerPairCochain c1 = deformation_cochain(reference);
  const DerPairCochain c2 = deformation_cochain(deformed);
  const DerPairCochain zero3 = DerPairCochain::zero(3, base.dims());
  if (!(huaD(c1, base) == zero3) || !(huaD(c2, base) == zero3))
    throw std::invalid_argument("same_cohomology_class: data must be 2-cocycles");
  const Matrix d1 = pair_complex(base)->differential(1);
  const auto solution = solve(d1, c2.coordinates() - c1.coordinates());
  if (!solution) return std::nullopt;
  return witness_from_cochain(DerPairCochain::from_coordinates(1, base.dims(), *solution));
}

}  // namespace prelieder

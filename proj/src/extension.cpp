#include "prelieder/extension.hpp"

#include <stdexcept>

namespace prelieder {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

void require_regular(const DerPair& base) {
  check_shapes(base);
  if (!is_regular(base)) throw std::invalid_argument("base pair must be regular");
  if (!check_derpair(base).ok()) throw std::invalid_argument("base pair is not a pre-LieDer pair");
}

void check_rep_shapes(const DerPair& base, const DerPairRepresentation& r) {
  check_shapes(base.algebra, r.rep);
  if (r.k.rows() != sz(r.rep.dim_v) || r.k.cols() != sz(r.rep.dim_v))
    throw std::invalid_argument("K must be dim V x dim V");
}

// Coordinates in V of w in the image of the injective map inject.
Vector pull_back(const Matrix& inject, const Vector& w, const char* what) {
  auto u = solve(inject, w);
  if (!u) throw std::invalid_argument(std::string("extract_cocycle: ") + what + " does not lie in V");
  return *u;
}

}  // namespace

Validation check_derpair_representation(const DerPair& base, const DerPairRepresentation& r) {
  require_regular(base);
  check_rep_shapes(base, r);
  Validation v = check_representation(base.algebra, r.rep);
  bool k1 = true, k2 = true;
  for (std::size_t x = 0; x < sz(base.algebra.dim()); ++x) {
    const Vector dx = base.derivation.column(x);
    if (r.k * r.rep.rho[x] != r.rep.rho[x] * r.k + r.rep.rho_of(dx)) k1 = false;
    if (r.k * r.rep.mu[x] != r.rep.mu[x] * r.k + r.rep.mu_of(dx)) k2 = false;
  }
  if (!k1) v.failed.push_back("extension-rep-1");
  if (!k2) v.failed.push_back("extension-rep-2");
  return v;
}

bool is_derpair_representation(const DerPair& base, const DerPairRepresentation& r) {
  return check_derpair_representation(base, r).ok();
}

ExtensionCocycle ExtensionCocycle::zero(Dims dims) {
  return {ComponentMap({1, 0, Factor::G}, Factor::V, dims), ComponentMap({0, 0, Factor::G}, Factor::V, dims)};
}

RegPairCochain ExtensionCocycle::as_cochain() const {
  RegPairCochain c;
  c.degree = 2;
  c.f = theta;
  c.theta = xi;
  return c;
}

ExtensionCocycle ExtensionCocycle::from_cochain(const RegPairCochain& c) {
  if (c.degree != 2 || c.f.target() != Factor::V) throw std::invalid_argument("ExtensionCocycle: expected a 2-cochain with values in V");
  return {c.f, c.theta};
}

namespace {

// The regular pair on g (+) V for a possibly non-closed (theta, xi).
DerPair split_structure(const DerPair& base, const DerPairRepresentation& r, const ExtensionCocycle& c) {
  const int dg = base.algebra.dim();
  const int dv = r.rep.dim_v;
  const int n = dg + dv;
  PreLieAlgebra total(n);
  for (int i = 0; i < dg; ++i)
    for (int j = 0; j < dg; ++j) {
      for (int k = 0; k < dg; ++k) total.set_constant(i, j, k, base.algebra.constant(i, j, k));
      const Vector t = c.theta.evaluate(std::vector<Arg>{Arg::of(i)}, {}, Arg::of(j));
      for (int w = 0; w < dv; ++w) total.set_constant(i, j, dg + w, t[sz(w)]);
    }
  for (int x = 0; x < dg; ++x)
    for (int u = 0; u < dv; ++u)
      for (int w = 0; w < dv; ++w) {
        total.set_constant(x, dg + u, dg + w, r.rep.rho[sz(x)](sz(w), sz(u)));
        total.set_constant(dg + u, x, dg + w, r.rep.mu[sz(x)](sz(w), sz(u)));
      }
  Matrix d(sz(n), sz(n));
  for (int x = 0; x < dg; ++x) {
    for (int o = 0; o < dg; ++o) d(sz(o), sz(x)) = base.derivation(sz(o), sz(x));
    const Vector xi = c.xi.at({{}, {}, Factor::G, x});
    for (int w = 0; w < dv; ++w) d(sz(dg + w), sz(x)) = xi[sz(w)];
  }
  for (int u = 0; u < dv; ++u)
    for (int w = 0; w < dv; ++w) d(sz(dg + w), sz(dg + u)) = r.k(sz(w), sz(u));
  return regular_pair(total, d);
}

AbelianExtension split_extension(DerPair total, int dg, int dv) {
  Matrix inject(sz(dg + dv), sz(dv));
  Matrix project(sz(dg), sz(dg + dv));
  for (int u = 0; u < dv; ++u) inject(sz(dg + u), sz(u)) = 1;
  for (int x = 0; x < dg; ++x) project(sz(x), sz(x)) = 1;
  return {std::move(total), inject, project};
}

}  // namespace

DerPair semidirect_product(const DerPair& base, const DerPairRepresentation& r) {
  const Validation v = check_derpair_representation(base, r);
  if (!v.ok()) throw std::invalid_argument("semidirect_product: not a representation (" + v.failed.front() + ")");
  return split_structure(base, r, ExtensionCocycle::zero({base.algebra.dim(), r.rep.dim_v}));
}

Validation check_extension(const AbelianExtension& ext, const DerPair& base, const Matrix& k) {
  check_shapes(base);
  check_shapes(ext.total);
  const auto n = sz(ext.total.algebra.dim());
  const auto dg = sz(base.algebra.dim());
  const auto dv = k.rows();
  if (k.cols() != dv || ext.inject.rows() != n || ext.inject.cols() != dv || ext.project.rows() != dg ||
      ext.project.cols() != n)
    throw std::invalid_argument("check_extension: shapes do not fit");
  Validation v;
  if (!is_regular(ext.total) || !check_derpair(ext.total).ok()) v.failed.push_back("regular-pair");
  const bool exact = n == dg + dv && rank(ext.inject) == dv && rank(ext.project) == dg &&
                     ext.project * ext.inject == Matrix(dg, dv);
  if (!exact) v.failed.push_back("short-exact");
  bool abelian = true;
  for (std::size_t u = 0; u < dv && abelian; ++u)
    for (std::size_t w = 0; w < dv && abelian; ++w)
      abelian = is_zero(ext.total.algebra.product(ext.inject.column(u), ext.inject.column(w)));
  if (!abelian) v.failed.push_back("abelian");
  if (ext.total.derivation * ext.inject != ext.inject * k) v.failed.push_back("inclusion-morphism");
  bool proj = ext.project * ext.total.derivation == base.derivation * ext.project;
  for (std::size_t a = 0; a < n && proj; ++a)
    for (std::size_t b = 0; b < n && proj; ++b)
      proj = ext.project * ext.total.algebra.product(a, b) ==
             base.algebra.product(ext.project.column(a), ext.project.column(b));
  if (!proj) v.failed.push_back("projection-morphism");
  return v;
}

AbelianExtension build_extension(const DerPair& base, const DerPairRepresentation& r, const ExtensionCocycle& c) {
  const Validation v = check_derpair_representation(base, r);
  if (!v.ok()) throw std::invalid_argument("build_extension: not a representation (" + v.failed.front() + ")");
  const RegPairCochain image = huaD_rep(c.as_cochain(), base, r);
  if (!image.f.is_zero() || !image.theta.is_zero())
    throw std::invalid_argument("build_extension: (theta, xi) is not a 2-cocycle");
  return split_extension(split_structure(base, r, c), base.algebra.dim(), r.rep.dim_v);
}

Matrix canonical_section(const AbelianExtension& ext) {
  const auto dg = ext.project.rows();
  Matrix s(ext.project.cols(), dg);
  for (std::size_t x = 0; x < dg; ++x) {
    auto col = solve(ext.project, unit_vector(dg, x));
    if (!col) throw std::invalid_argument("canonical_section: projection is not surjective");
    s.set_column(x, *col);
  }
  return s;
}

ExtractedCocycle extract_cocycle(const AbelianExtension& ext, const DerPair& base, const Matrix& section) {
  check_shapes(base);
  const auto dg = sz(base.algebra.dim());
  const auto dv = ext.inject.cols();
  if (section.rows() != ext.project.cols() || section.cols() != dg)
    throw std::invalid_argument("extract_cocycle: section has the wrong shape");
  if (ext.project * section != Matrix::identity(dg)) throw std::invalid_argument("extract_cocycle: not a section");
  const PreLieAlgebra& hat = ext.total.algebra;
  const Matrix& dhat = ext.total.derivation;
  const Dims dims{int(dg), int(dv)};

  ExtractedCocycle out;
  out.cocycle = ExtensionCocycle::zero(dims);
  out.representation.rep = Representation::zero(int(dg), int(dv));
  Matrix k(dv, dv);
  for (std::size_t u = 0; u < dv; ++u) k.set_column(u, pull_back(ext.inject, dhat * ext.inject.column(u), "K(u)"));
  out.representation.k = k;
  for (std::size_t x = 0; x < dg; ++x) {
    const Vector sx = section.column(x);
    for (std::size_t y = 0; y < dg; ++y) {
      const Vector t = hat.product(sx, section.column(y)) - section * base.algebra.product(int(x), int(y));
      out.cocycle.theta.set({{int(x)}, {}, Factor::G, int(y)}, pull_back(ext.inject, t, "theta"));
    }
    for (std::size_t u = 0; u < dv; ++u) {
      const Vector iu = ext.inject.column(u);
      out.representation.rep.rho[x].set_column(u, pull_back(ext.inject, hat.product(sx, iu), "rho~"));
      out.representation.rep.mu[x].set_column(u, pull_back(ext.inject, hat.product(iu, sx), "mu~"));
    }
    const Vector xi = dhat * sx - section * base.derivation.column(x);
    out.cocycle.xi.set({{}, {}, Factor::G, int(x)}, pull_back(ext.inject, xi, "xi"));
  }
  return out;
}

bool is_extension_isomorphism(const Matrix& zeta, const AbelianExtension& from, const AbelianExtension& to) {
  const auto n = sz(from.total.algebra.dim());
  if (zeta.rows() != n || zeta.cols() != n || rank(zeta) != n) return false;
  return is_morphism(zeta, zeta, from.total, to.total) && zeta * from.inject == to.inject &&
         to.project * zeta == from.project;
}

std::optional<Matrix> classify(const DerPair& base, const DerPairRepresentation& r, const ExtensionCocycle& c1,
                               const ExtensionCocycle& c2) {
  const AbelianExtension e1 = build_extension(base, r, c1);
  const AbelianExtension e2 = build_extension(base, r, c2);
  const auto complex = rep_complex(base, r);
  const auto phi_coords = solve(complex->differential(1), c1.as_cochain().coordinates() - c2.as_cochain().coordinates());
  if (!phi_coords) return std::nullopt;
  const auto dg = sz(base.algebra.dim());
  const auto dv = sz(r.rep.dim_v);
  Matrix zeta = Matrix::identity(dg + dv);
  for (std::size_t x = 0; x < dg; ++x)
    for (std::size_t w = 0; w < dv; ++w) zeta(dg + w, x) = (*phi_coords)[x * dv + w];
  if (!is_extension_isomorphism(zeta, e1, e2)) throw std::logic_error("classify: constructed map is not an isomorphism");
  return zeta;
}

}  // namespace prelieder

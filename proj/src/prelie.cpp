#include "prelieder/prelie.hpp"

#include <stdexcept>

namespace prelieder {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Matrix combine(const std::vector<Matrix>& ms, const Vector& x, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out = out + x[i] * ms[i];
  return out;
}

}  // namespace

PreLieAlgebra::PreLieAlgebra(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("PreLieAlgebra: negative dimension");
  c_.assign(sz(dim) * sz(dim) * sz(dim), Scalar(0));
}

PreLieAlgebra::PreLieAlgebra(int dim, std::vector<Scalar> constants) : dim_(dim), c_(std::move(constants)) {
  if (dim < 0) throw std::invalid_argument("PreLieAlgebra: negative dimension");
  if (c_.size() != sz(dim) * sz(dim) * sz(dim))
    throw std::invalid_argument("PreLieAlgebra: expected dim^3 structure constants");
}

std::size_t PreLieAlgebra::index(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw std::invalid_argument("PreLieAlgebra: basis index out of range");
  return (sz(i) * sz(dim_) + sz(j)) * sz(dim_) + sz(k);
}

Vector PreLieAlgebra::product(int i, int j) const {
  Vector out(sz(dim_));
  for (int k = 0; k < dim_; ++k) out[sz(k)] = constant(i, j, k);
  return out;
}

Vector PreLieAlgebra::product(const Vector& x, const Vector& y) const {
  if (x.size() != sz(dim_) || y.size() != sz(dim_)) throw std::invalid_argument("product: wrong vector length");
  Vector out = zero_vector(sz(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (x[sz(i)] == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[sz(j)] == 0) continue;
      const Scalar w = x[sz(i)] * y[sz(j)];
      for (int k = 0; k < dim_; ++k)
        if (constant(i, j, k) != 0) out[sz(k)] += w * constant(i, j, k);
    }
  }
  return out;
}

Vector PreLieAlgebra::commutator(const Vector& x, const Vector& y) const { return product(x, y) - product(y, x); }

Matrix PreLieAlgebra::left(const Vector& x) const {
  Matrix m(sz(dim_), sz(dim_));
  for (int j = 0; j < dim_; ++j) m.set_column(sz(j), product(x, unit_vector(sz(dim_), sz(j))));
  return m;
}

Matrix PreLieAlgebra::right(const Vector& x) const {
  Matrix m(sz(dim_), sz(dim_));
  for (int j = 0; j < dim_; ++j) m.set_column(sz(j), product(unit_vector(sz(dim_), sz(j)), x));
  return m;
}

Representation Representation::zero(int dim_g, int dim_v) {
  Representation r;
  r.dim_v = dim_v;
  r.rho.assign(sz(dim_g), Matrix(sz(dim_v), sz(dim_v)));
  r.mu.assign(sz(dim_g), Matrix(sz(dim_v), sz(dim_v)));
  return r;
}

Matrix Representation::rho_of(const Vector& x) const { return combine(rho, x, sz(dim_v)); }
Matrix Representation::mu_of(const Vector& x) const { return combine(mu, x, sz(dim_v)); }

void check_shapes(const PreLieAlgebra& a, const Representation& r) {
  if (r.dim_v < 0) throw std::invalid_argument("representation: negative dimension");
  if (r.rho.size() != sz(a.dim()) || r.mu.size() != sz(a.dim()))
    throw std::invalid_argument("representation: need one rho and one mu matrix per basis vector of g");
  for (const auto* family : {&r.rho, &r.mu})
    for (const auto& m : *family)
      if (m.rows() != sz(r.dim_v) || m.cols() != sz(r.dim_v))
        throw std::invalid_argument("representation: matrices must be dim V x dim V");
}

void check_shapes(const DerPair& p) {
  check_shapes(p.algebra, p.rep);
  if (p.derivation.rows() != sz(p.rep.dim_v) || p.derivation.cols() != sz(p.algebra.dim()))
    throw std::invalid_argument("derivation: matrix must be dim V x dim g");
}

bool is_prelie(const PreLieAlgebra& a) {
  const int n = a.dim();
  auto e = [&](int i) { return unit_vector(sz(n), sz(i)); };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Vector x = e(i), y = e(j), z = e(k);
        const Vector lhs = a.product(a.product(x, y), z) - a.product(x, a.product(y, z));
        const Vector rhs = a.product(a.product(y, x), z) - a.product(y, a.product(x, z));
        if (lhs != rhs) return false;
      }
  return true;
}

PreLieAlgebra subadjacent_lie(const PreLieAlgebra& a) {
  if (!is_prelie(a)) throw std::invalid_argument("subadjacent_lie: not a pre-Lie algebra");
  PreLieAlgebra out(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k) out.set_constant(i, j, k, a.constant(i, j, k) - a.constant(j, i, k));
  return out;
}

Validation check_representation(const PreLieAlgebra& a, const Representation& r) {
  check_shapes(a, r);
  const int n = a.dim();
  bool rep1 = true, rep2 = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& rx = r.rho[sz(i)];
      const auto& ry = r.rho[sz(j)];
      const auto& mx = r.mu[sz(i)];
      const auto& my = r.mu[sz(j)];
      const Vector x = unit_vector(sz(n), sz(i)), y = unit_vector(sz(n), sz(j));
      if (rep1 && r.rho_of(a.commutator(x, y)) != rx * ry - ry * rx) rep1 = false;
      if (rep2 && my * mx - r.mu_of(a.product(x, y)) != my * rx - rx * my) rep2 = false;
    }
  Validation v;
  if (!rep1) v.failed.push_back("representation-1");
  if (!rep2) v.failed.push_back("representation-2");
  return v;
}

bool is_representation(const PreLieAlgebra& a, const Representation& r) { return check_representation(a, r).ok(); }

Representation regular_representation(const PreLieAlgebra& a) {
  Representation r;
  r.dim_v = a.dim();
  for (int i = 0; i < a.dim(); ++i) {
    const Vector x = unit_vector(sz(a.dim()), sz(i));
    r.rho.push_back(a.left(x));
    r.mu.push_back(a.right(x));
  }
  return r;
}

DerPair regular_pair(const PreLieAlgebra& a, const Matrix& derivation) {
  DerPair p{a, regular_representation(a), derivation};
  check_shapes(p);
  return p;
}

bool is_regular(const DerPair& p) { return p.rep == regular_representation(p.algebra); }

bool is_derivation(const DerPair& p) {
  check_shapes(p);
  const int n = p.algebra.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vector x = unit_vector(sz(n), sz(i)), y = unit_vector(sz(n), sz(j));
      const Vector lhs = p.derivation * p.algebra.product(x, y);
      const Vector rhs = p.rep.rho[sz(i)] * (p.derivation * y) + p.rep.mu[sz(j)] * (p.derivation * x);
      if (lhs != rhs) return false;
    }
  return true;
}

Validation check_derpair(const DerPair& p) {
  check_shapes(p);
  Validation v;
  if (!is_prelie(p.algebra)) v.failed.push_back("pre-lie");
  auto rep = check_representation(p.algebra, p.rep);
  v.failed.insert(v.failed.end(), rep.failed.begin(), rep.failed.end());
  if (!is_derivation(p)) v.failed.push_back("derivation");
  return v;
}

Validation check_morphism(const Matrix& f_g, const Matrix& f_v, const DerPair& src, const DerPair& dst) {
  check_shapes(src);
  check_shapes(dst);
  const auto ng = sz(src.algebra.dim());
  if (f_g.rows() != sz(dst.algebra.dim()) || f_g.cols() != ng)
    throw std::invalid_argument("morphism: f_g must be dim g' x dim g");
  if (f_v.rows() != sz(dst.rep.dim_v) || f_v.cols() != sz(src.rep.dim_v))
    throw std::invalid_argument("morphism: f_V must be dim V' x dim V");
  bool mult = true, m1 = true, m2 = true;
  for (std::size_t i = 0; i < ng; ++i) {
    const Vector x = unit_vector(ng, i);
    const Vector fx = f_g * x;
    for (std::size_t j = 0; j < ng; ++j) {
      const Vector y = unit_vector(ng, j);
      if (f_g * src.algebra.product(x, y) != dst.algebra.product(fx, f_g * y)) mult = false;
    }
    if (f_v * src.rep.rho[i] != dst.rep.rho_of(fx) * f_v) m1 = false;
    if (f_v * src.rep.mu[i] != dst.rep.mu_of(fx) * f_v) m2 = false;
  }
  Validation v;
  if (!mult) v.failed.push_back("morphism");
  if (!m1) v.failed.push_back("mor-1");
  if (!m2) v.failed.push_back("mor-2");
  if (f_v * src.derivation != dst.derivation * f_g) v.failed.push_back("mor-3");
  return v;
}

bool is_morphism(const Matrix& f_g, const Matrix& f_v, const DerPair& src, const DerPair& dst) {
  return check_morphism(f_g, f_v, src, dst).ok();
}

ComponentMap multiplication_map(const PreLieAlgebra& a, Dims dims) {
  if (dims.g != a.dim()) throw std::invalid_argument("multiplication_map: dimension mismatch");
  ComponentMap pi({1, 0, Factor::G}, Factor::G, dims);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) pi.set({{i}, {}, Factor::G, j}, a.product(i, j));
  return pi;
}

ComponentMap rho_map(const Representation& r, Dims dims) {
  if (dims.v != r.dim_v || sz(dims.g) != r.rho.size()) throw std::invalid_argument("rho_map: dimension mismatch");
  ComponentMap f({1, 0, Factor::V}, Factor::V, dims);
  for (int i = 0; i < dims.g; ++i)
    for (int u = 0; u < dims.v; ++u) f.set({{i}, {}, Factor::V, u}, r.rho[sz(i)].column(sz(u)));
  return f;
}

ComponentMap mu_map(const Representation& r, Dims dims) {
  if (dims.v != r.dim_v || sz(dims.g) != r.mu.size()) throw std::invalid_argument("mu_map: dimension mismatch");
  ComponentMap f({0, 1, Factor::G}, Factor::V, dims);
  for (int u = 0; u < dims.v; ++u)
    for (int y = 0; y < dims.g; ++y) f.set({{}, {u}, Factor::G, y}, r.mu[sz(y)].column(sz(u)));
  return f;
}

ComponentMap linear_map(const Matrix& m, Factor from, Factor to, Dims dims) {
  if (m.rows() != sz(dims.of(to)) || m.cols() != sz(dims.of(from)))
    throw std::invalid_argument("linear_map: matrix shape does not match the factors");
  ComponentMap f({0, 0, from}, to, dims);
  for (int x = 0; x < dims.of(from); ++x) f.set({{}, {}, from, x}, m.column(sz(x)));
  return f;
}

GradedCochain structure_cochain(const PreLieAlgebra& a, const Representation& r) {
  check_shapes(a, r);
  const Dims d{a.dim(), r.dim_v};
  std::vector<ComponentMap> parts{multiplication_map(a, d), rho_map(r, d), mu_map(r, d)};
  return lift(parts);
}

}  // namespace prelieder

#include "prelieder/cohomology.hpp"

#include <stdexcept>

#include "prelieder/mn_bracket.hpp"

namespace prelieder {

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

Scalar sign_of(int exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

std::vector<Arg> basis_args(const std::vector<int>& idx) {
  std::vector<Arg> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(Arg::of(i));
  return out;
}

// xs with the listed positions removed
std::vector<int> without(const std::vector<int>& xs, std::initializer_list<std::size_t> drop) {
  std::vector<int> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    bool skip = false;
    for (auto d : drop) skip = skip || d == k;
    if (!skip) out.push_back(xs[k]);
  }
  return out;
}

std::vector<int> prefix(const std::vector<int>& xs, std::size_t n) { return {xs.begin(), xs.begin() + static_cast<std::ptrdiff_t>(n)}; }

// Writes fn(index) into every coefficient block of out.
template <typename Fn>
void fill(ComponentMap& out, Fn fn) {
  const auto td = sz(out.target_dim());
  std::size_t pos = 0;
  for (const auto& idx : enumerate_basis(out.shape(), out.dims())) {
    Vector v = fn(idx);
    for (std::size_t o = 0; o < td; ++o) out.coeffs()[pos * td + o] = std::move(v[o]);
    ++pos;
  }
}

Vector concat(std::initializer_list<const ComponentMap*> parts) {
  Vector out;
  for (const auto* p : parts) out.insert(out.end(), p->coeffs().begin(), p->coeffs().end());
  return out;
}

void read_into(ComponentMap& m, const Vector& coords, std::size_t& offset) {
  if (offset + m.size() > coords.size()) throw std::invalid_argument("coordinates: vector too short");
  for (std::size_t i = 0; i < m.size(); ++i) m.coeffs()[i] = coords[offset + i];
  offset += m.size();
}

void require_cochain_shape(const ComponentMap& f, const char* who) {
  if (f.shape().v_wedge != 0 || f.shape().tail != Factor::G)
    throw std::invalid_argument(std::string(who) + ": expected a map on /\\^{n-1}g (x) g");
}

// Column u of sum_k v_k m[k].
Vector combined_column(const std::vector<Matrix>& ms, const Vector& v, std::size_t u) {
  Vector out = zero_vector(ms.empty() ? 0 : ms.front().rows());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) axpy(out, v[k], ms[k].column(u));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- cochain types

TripleCochain TripleCochain::zero(int n, Dims dims) {
  if (n < 1) throw std::invalid_argument("TripleCochain: degree must be at least 1");
  TripleCochain t;
  t.degree = n;
  t.g = ComponentMap({n - 1, 0, Factor::G}, Factor::G, dims);
  t.rho = ComponentMap({n - 1, 0, Factor::V}, Factor::V, dims);
  if (n >= 2) t.mu = ComponentMap({n - 2, 1, Factor::G}, Factor::V, dims);
  return t;
}

Vector TripleCochain::coordinates() const { return concat({&g, &rho, &mu}); }

TripleCochain TripleCochain::from_coordinates(int n, Dims dims, const Vector& coords) {
  TripleCochain t = zero(n, dims);
  std::size_t off = 0;
  read_into(t.g, coords, off);
  read_into(t.rho, coords, off);
  read_into(t.mu, coords, off);
  if (off != coords.size()) throw std::invalid_argument("coordinates: vector too long");
  return t;
}

GradedCochain TripleCochain::lifted() const {
  std::vector<ComponentMap> parts{g, rho};
  if (degree >= 2) parts.push_back(mu);
  return lift(parts);
}

DerPairCochain DerPairCochain::zero(int n, Dims dims) {
  DerPairCochain c;
  c.f = TripleCochain::zero(n, dims);
  if (n >= 2) c.theta = ComponentMap({n - 2, 0, Factor::G}, Factor::V, dims);
  return c;
}

Vector DerPairCochain::coordinates() const { return concat({&f.g, &f.rho, &f.mu, &theta}); }

DerPairCochain DerPairCochain::from_coordinates(int n, Dims dims, const Vector& coords) {
  DerPairCochain c = zero(n, dims);
  std::size_t off = 0;
  read_into(c.f.g, coords, off);
  read_into(c.f.rho, coords, off);
  read_into(c.f.mu, coords, off);
  read_into(c.theta, coords, off);
  if (off != coords.size()) throw std::invalid_argument("coordinates: vector too long");
  return c;
}

RegPairCochain RegPairCochain::zero(int n, Dims dims, Factor target) {
  if (n < 1) throw std::invalid_argument("RegPairCochain: degree must be at least 1");
  RegPairCochain c;
  c.degree = n;
  c.f = ComponentMap({n - 1, 0, Factor::G}, target, dims);
  if (n >= 2) c.theta = ComponentMap({n - 2, 0, Factor::G}, target, dims);
  return c;
}

Vector RegPairCochain::coordinates() const { return concat({&f, &theta}); }

RegPairCochain RegPairCochain::from_coordinates(int n, Dims dims, Factor target, const Vector& coords) {
  RegPairCochain c = zero(n, dims, target);
  std::size_t off = 0;
  read_into(c.f, coords, off);
  read_into(c.theta, coords, off);
  if (off != coords.size()) throw std::invalid_argument("coordinates: vector too long");
  return c;
}

// ------------------------------------------------------------- explicit formulas

ComponentMap d_prelie(const ComponentMap& f, const PreLieAlgebra& a, const Representation& r) {
  require_cochain_shape(f, "d_prelie");
  check_shapes(a, r);
  if (f.dims().g != a.dim() || r.dim_v != f.target_dim())
    throw std::invalid_argument("d_prelie: representation does not act on the target of the cochain");
  const int n = f.arity();
  ComponentMap out({n, 0, Factor::G}, f.target(), f.dims());
  const auto td = sz(f.target_dim());
  const auto dg = sz(a.dim());
  fill(out, [&](const MixedIndex& idx) {
    std::vector<int> x = idx.g_wedge;  // x_1..x_n
    const int last = idx.tail;        // x_{n+1}
    Vector v = zero_vector(td);
    for (std::size_t i = 0; i < sz(n); ++i) {
      const Scalar s = sign_of(static_cast<int>(i));
      const auto rest = basis_args(without(x, {i}));
      const Vector f1 = f.evaluate(rest, {}, Arg::of(last));
      if (!is_zero(f1)) axpy(v, s, r.rho[sz(x[i])] * f1);
      const Vector f2 = f.evaluate(rest, {}, Arg::of(x[i]));
      if (!is_zero(f2)) axpy(v, s, r.mu[sz(last)] * f2);
      const Vector prod = a.product(x[i], last);
      f.accumulate(v, -s, rest, {}, Arg::of(prod));
    }
    for (std::size_t i = 0; i < sz(n); ++i)
      for (std::size_t j = i + 1; j < sz(n); ++j) {
        const Vector br = a.commutator(unit_vector(dg, sz(x[i])), unit_vector(dg, sz(x[j])));
        if (is_zero(br)) continue;
        std::vector<Arg> args{Arg::of(br)};
        for (int k : without(x, {i, j})) args.push_back(Arg::of(k));
        f.accumulate(v, sign_of(static_cast<int>(i + j)), args, {}, Arg::of(last));
      }
    return v;
  });
  return out;
}

TripleCochain partial(const TripleCochain& f, const PreLieAlgebra& a, const Representation& r) {
  check_shapes(a, r);
  const int n = f.degree;
  const Dims d = f.g.dims();
  if (d.g != a.dim() || d.v != r.dim_v) throw std::invalid_argument("partial: dimension mismatch");
  TripleCochain out = TripleCochain::zero(n + 1, d);
  const auto dg = sz(d.g);
  const auto dv = sz(d.v);
  out.g = d_prelie(f.g, a, regular_representation(a));

  // (x_1..x_n, u) -> V
  fill(out.rho, [&](const MixedIndex& idx) {
    const auto& x = idx.g_wedge;
    const int u = idx.tail;
    Vector v = zero_vector(dv);
    for (std::size_t i = 0; i < sz(n); ++i) {
      const Scalar s = sign_of(static_cast<int>(i));
      const auto rest = basis_args(without(x, {i}));
      const Vector fg = f.g.evaluate(rest, {}, Arg::of(x[i]));
      if (!is_zero(fg)) axpy(v, s, combined_column(r.rho, fg, sz(u)));
      const Vector fr = f.rho.evaluate(rest, {}, Arg::of(u));
      if (!is_zero(fr)) axpy(v, s, r.rho[sz(x[i])] * fr);
      const Vector ru = r.rho[sz(x[i])].column(sz(u));
      f.rho.accumulate(v, -s, rest, {}, Arg::of(ru));
    }
    for (std::size_t i = 0; i < sz(n); ++i)
      for (std::size_t j = i + 1; j < sz(n); ++j) {
        const Vector br = a.commutator(unit_vector(dg, sz(x[i])), unit_vector(dg, sz(x[j])));
        if (is_zero(br)) continue;
        std::vector<Arg> args{Arg::of(br)};
        for (int k : without(x, {i, j})) args.push_back(Arg::of(k));
        f.rho.accumulate(v, sign_of(static_cast<int>(i + j)), args, {}, Arg::of(u));
      }
    return v;
  });

  // (x_1..x_{n-1}, u, x_n) -> V
  fill(out.mu, [&](const MixedIndex& idx) {
    const auto& x = idx.g_wedge;  // x_1..x_{n-1}
    const int u = idx.v_wedge.front();
    const int last = idx.tail;  // x_n
    const std::vector<Arg> uarg{Arg::of(u)};
    Vector v = zero_vector(dv);
    {
      const Scalar s = sign_of(n - 1);
      const auto xs = basis_args(x);
      const Vector fg = f.g.evaluate(xs, {}, Arg::of(last));
      if (!is_zero(fg)) axpy(v, s, combined_column(r.mu, fg, sz(u)));
      const Vector fr = f.rho.evaluate(xs, {}, Arg::of(u));
      if (!is_zero(fr)) axpy(v, s, r.mu[sz(last)] * fr);
      const Vector mu_u = r.mu[sz(last)].column(sz(u));
      f.rho.accumulate(v, -s, xs, {}, Arg::of(mu_u));
    }
    for (std::size_t i = 0; n >= 2 && i < sz(n - 1); ++i) {
      const Scalar s = sign_of(static_cast<int>(i));
      const auto rest = basis_args(without(x, {i}));
      const Vector prod = a.product(x[i], last);
      f.mu.accumulate(v, -s, rest, uarg, Arg::of(prod));
      const Vector fm = f.mu.evaluate(rest, uarg, Arg::of(last));
      if (!is_zero(fm)) axpy(v, s, r.rho[sz(x[i])] * fm);
      const Vector rho_u = r.rho[sz(x[i])].column(sz(u));
      const std::vector<Arg> rarg{Arg::of(rho_u)};
      f.mu.accumulate(v, -s, rest, rarg, Arg::of(last));
      const Vector fm2 = f.mu.evaluate(rest, uarg, Arg::of(x[i]));
      if (!is_zero(fm2)) axpy(v, s, r.mu[sz(last)] * fm2);
      const Vector mu_u = r.mu[sz(x[i])].column(sz(u));
      const std::vector<Arg> marg{Arg::of(mu_u)};
      f.mu.accumulate(v, s, rest, marg, Arg::of(last));
    }
    for (std::size_t i = 0; n >= 2 && i < sz(n - 1); ++i)
      for (std::size_t j = i + 1; j < sz(n - 1); ++j) {
        const Vector br = a.commutator(unit_vector(dg, sz(x[i])), unit_vector(dg, sz(x[j])));
        if (is_zero(br)) continue;
        std::vector<Arg> args{Arg::of(br)};
        for (int k : without(x, {i, j})) args.push_back(Arg::of(k));
        f.mu.accumulate(v, sign_of(static_cast<int>(i + j)), args, uarg, Arg::of(last));
      }
    return v;
  });
  return out;
}

ComponentMap delta(const TripleCochain& f, const Matrix& derivation) {
  const int n = f.degree;
  const Dims d = f.g.dims();
  if (derivation.rows() != sz(d.v) || derivation.cols() != sz(d.g))
    throw std::invalid_argument("delta: derivation must be dim V x dim g");
  ComponentMap out({n - 1, 0, Factor::G}, Factor::V, d);
  fill(out, [&](const MixedIndex& idx) {
    const auto& x = idx.g_wedge;  // x_1..x_{n-1}
    const int last = idx.tail;   // x_n
    Vector v = zero_vector(sz(d.v));
    for (std::size_t i = 0; n >= 2 && i < sz(n - 1); ++i) {
      const Vector dx = derivation.column(sz(x[i]));
      const std::vector<Arg> varg{Arg::of(dx)};
      f.mu.accumulate(v, sign_of(static_cast<int>(i)), basis_args(without(x, {i})), varg, Arg::of(last));
    }
    const Scalar s = sign_of(n - 2);
    const auto xs = basis_args(x);
    const Vector dlast = derivation.column(sz(last));
    f.rho.accumulate(v, s, xs, {}, Arg::of(dlast));
    const Vector fg = f.g.evaluate(xs, {}, Arg::of(last));
    if (!is_zero(fg)) axpy(v, -s, derivation * fg);
    return v;
  });
  return out;
}

DerPairCochain huaD(const DerPairCochain& c, const DerPair& p) {
  check_shapes(p);
  const int n = c.degree();
  DerPairCochain out;
  out.f = partial(c.f, p.algebra, p.rep);
  out.theta = delta(c.f, p.derivation);
  if (n >= 2) out.theta += d_prelie(c.theta, p.algebra, p.rep);
  return out;
}

ComponentMap omega(const ComponentMap& f, const Matrix& derivation, const Matrix& k) {
  require_cochain_shape(f, "omega");
  const int n = f.arity();
  const auto dg = sz(f.dims().g);
  const auto td = sz(f.target_dim());
  if (derivation.rows() != dg || derivation.cols() != dg) throw std::invalid_argument("omega: D must be dim g x dim g");
  if (k.rows() != td || k.cols() != td) throw std::invalid_argument("omega: K must act on the target");
  ComponentMap out(f.shape(), f.target(), f.dims());
  const Scalar s = sign_of(n - 2);
  fill(out, [&](const MixedIndex& idx) {
    std::vector<int> x = idx.g_wedge;
    x.push_back(idx.tail);
    Vector v = zero_vector(td);
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Vector dx = derivation.column(sz(x[i]));
      std::vector<Arg> args = basis_args(x);
      args[i] = Arg::of(dx);
      const Arg tail = args.back();
      args.pop_back();
      f.accumulate(v, s, args, {}, tail);
    }
    const Vector fx = f.evaluate(basis_args(prefix(x, x.size() - 1)), {}, Arg::of(x.back()));
    if (!is_zero(fx)) axpy(v, -s, k * fx);
    return v;
  });
  return out;
}

RegPairCochain huaD_reg(const RegPairCochain& c, const DerPair& regular) {
  check_shapes(regular);
  if (!is_regular(regular)) throw std::invalid_argument("huaD_reg: pair is not regular");
  const Representation reg = regular_representation(regular.algebra);
  RegPairCochain out;
  out.degree = c.degree + 1;
  out.f = d_prelie(c.f, regular.algebra, reg);
  out.theta = omega(c.f, regular.derivation, regular.derivation);
  if (c.degree >= 2) out.theta += d_prelie(c.theta, regular.algebra, reg);
  return out;
}

RegPairCochain huaD_rep(const RegPairCochain& c, const DerPair& regular, const DerPairRepresentation& r) {
  check_shapes(regular);
  RegPairCochain out;
  out.degree = c.degree + 1;
  out.f = d_prelie(c.f, regular.algebra, r.rep);
  out.theta = omega(c.f, regular.derivation, r.k);
  if (c.degree >= 2) out.theta += d_prelie(c.theta, regular.algebra, r.rep);
  return out;
}

namespace {

// Same multilinear map viewed with its first slots split as /\^a g (x) /\^b V
// where V is a copy of g.
ComponentMap reshape_regular(const ComponentMap& f, Shape shape, Factor target, Dims dims) {
  ComponentMap out(shape, target, dims);
  fill(out, [&](const MixedIndex& idx) {
    std::vector<int> all = idx.g_wedge;
    all.insert(all.end(), idx.v_wedge.begin(), idx.v_wedge.end());
    return f.evaluate(basis_args(all), {}, Arg::of(idx.tail));
  });
  return out;
}

}  // namespace

DerPairCochain embed_regular(const RegPairCochain& c) {
  const int n = c.degree;
  const int dg = c.f.dims().g;
  const Dims d{dg, dg};
  DerPairCochain out = DerPairCochain::zero(n, d);
  out.f.g = reshape_regular(c.f, {n - 1, 0, Factor::G}, Factor::G, d);
  out.f.rho = reshape_regular(c.f, {n - 1, 0, Factor::V}, Factor::V, d);
  if (n >= 2) {
    out.f.mu = reshape_regular(c.f, {n - 2, 1, Factor::G}, Factor::V, d);
    out.theta = reshape_regular(c.theta, {n - 2, 0, Factor::G}, Factor::V, d);
  }
  return out;
}

RegPairCochain restrict_regular(const DerPairCochain& c) {
  const int n = c.degree();
  const Dims d{c.f.g.dims().g, 0};
  RegPairCochain out = RegPairCochain::zero(n, d, Factor::G);
  out.f.coeffs() = c.f.g.coeffs();
  if (n >= 2) out.theta.coeffs() = c.theta.coeffs();
  return out;
}

// --------------------------------------------------------------- bracket path

TripleCochain partial_by_bracket(const TripleCochain& f, const PreLieAlgebra& a, const Representation& r) {
  const int n = f.degree;
  const GradedCochain br = sign_of(n - 1) * mn_bracket(structure_cochain(a, r), f.lifted());
  auto parts = decompose_k0(br);
  TripleCochain out;
  out.degree = n + 1;
  out.g = std::move(parts.g);
  out.rho = std::move(parts.rho);
  out.mu = std::move(parts.mu);
  return out;
}

ComponentMap delta_by_bracket(const TripleCochain& f, const Matrix& derivation, int dim_v) {
  const int n = f.degree;
  const Dims d{f.g.dims().g, dim_v};
  const GradedCochain D = lift(linear_map(derivation, Factor::G, Factor::V, d));
  const GradedCochain br = sign_of(n - 2) * mn_bracket(f.lifted(), D);
  return restrict_to(br, {n - 1, 0, Factor::G}, Factor::V);
}

ComponentMap d_prelie_by_bracket(const ComponentMap& theta, const PreLieAlgebra& a, const Representation& r) {
  require_cochain_shape(theta, "d_prelie_by_bracket");
  if (theta.target() != Factor::V) throw std::invalid_argument("d_prelie_by_bracket: cochain must take values in V");
  const int m = theta.arity();
  const GradedCochain br = sign_of(m - 1) * mn_bracket(structure_cochain(a, r), lift(theta));
  return restrict_to(br, {m, 0, Factor::G}, Factor::V);
}

// ------------------------------------------------------------------ complexes

std::string to_string(ComplexKind kind) {
  switch (kind) {
    case ComplexKind::Prelie: return "prelie";
    case ComplexKind::Partial: return "partial";
    case ComplexKind::Pair: return "pair";
    case ComplexKind::Regular: return "regular";
    case ComplexKind::Rep: return "rep";
  }
  return "?";
}

ComplexKind complex_kind_from_string(const std::string& name) {
  for (auto k : {ComplexKind::Prelie, ComplexKind::Partial, ComplexKind::Pair, ComplexKind::Regular, ComplexKind::Rep})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown complex '" + name + "'");
}

Matrix CochainComplex::differential(int n) const {
  const std::size_t cols = dim(n);
  const std::size_t rows = dim(n + 1);
  Matrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    Vector image = apply(n, unit_vector(cols, j));
    if (image.size() != rows) throw std::logic_error("differential: image has unexpected size");
    m.set_column(j, image);
  }
  return m;
}

namespace {

class PrelieComplex : public CochainComplex {
 public:
  PrelieComplex(PreLieAlgebra a, Representation r) : a_(std::move(a)), r_(std::move(r)) { check_shapes(a_, r_); }
  std::size_t dim(int n) const override { return n < 1 ? 0 : zero(n).size(); }
  Vector apply(int n, const Vector& coords) const override {
    ComponentMap f = zero(n);
    f.coeffs() = coords;
    return d_prelie(f, a_, r_).coeffs();
  }
  int top_degree() const override { return a_.dim() + 1; }

 private:
  ComponentMap zero(int n) const { return ComponentMap({n - 1, 0, Factor::G}, Factor::V, {a_.dim(), r_.dim_v}); }
  PreLieAlgebra a_;
  Representation r_;
};

class PartialComplex : public CochainComplex {
 public:
  PartialComplex(PreLieAlgebra a, Representation r) : a_(std::move(a)), r_(std::move(r)) { check_shapes(a_, r_); }
  std::size_t dim(int n) const override { return n < 1 ? 0 : TripleCochain::zero(n, dims()).coordinates().size(); }
  Vector apply(int n, const Vector& coords) const override {
    return partial(TripleCochain::from_coordinates(n, dims(), coords), a_, r_).coordinates();
  }
  int top_degree() const override { return a_.dim() + 2; }

 private:
  Dims dims() const { return {a_.dim(), r_.dim_v}; }
  PreLieAlgebra a_;
  Representation r_;
};

class PairComplex : public CochainComplex {
 public:
  explicit PairComplex(DerPair p) : p_(std::move(p)) { check_shapes(p_); }
  std::size_t dim(int n) const override {
    return n < 1 ? 0 : DerPairCochain::zero(n, p_.dims()).coordinates().size();
  }
  Vector apply(int n, const Vector& coords) const override {
    return huaD(DerPairCochain::from_coordinates(n, p_.dims(), coords), p_).coordinates();
  }
  int top_degree() const override { return p_.algebra.dim() + 2; }

 private:
  DerPair p_;
};

class RegularComplex : public CochainComplex {
 public:
  explicit RegularComplex(DerPair p) : p_(std::move(p)) {
    check_shapes(p_);
    if (!is_regular(p_)) throw std::invalid_argument("regular complex: pair is not regular");
  }
  std::size_t dim(int n) const override {
    return n < 1 ? 0 : RegPairCochain::zero(n, dims(), Factor::G).coordinates().size();
  }
  Vector apply(int n, const Vector& coords) const override {
    return huaD_reg(RegPairCochain::from_coordinates(n, dims(), Factor::G, coords), p_).coordinates();
  }
  int top_degree() const override { return p_.algebra.dim() + 2; }

 private:
  Dims dims() const { return {p_.algebra.dim(), 0}; }
  DerPair p_;
};

class RepComplex : public CochainComplex {
 public:
  RepComplex(DerPair p, DerPairRepresentation r) : p_(std::move(p)), r_(std::move(r)) {
    check_shapes(p_);
    check_shapes(p_.algebra, r_.rep);
    if (r_.k.rows() != sz(r_.rep.dim_v) || r_.k.cols() != sz(r_.rep.dim_v))
      throw std::invalid_argument("rep complex: K must be dim V x dim V");
  }
  std::size_t dim(int n) const override {
    return n < 1 ? 0 : RegPairCochain::zero(n, dims(), Factor::V).coordinates().size();
  }
  Vector apply(int n, const Vector& coords) const override {
    return huaD_rep(RegPairCochain::from_coordinates(n, dims(), Factor::V, coords), p_, r_).coordinates();
  }
  int top_degree() const override { return p_.algebra.dim() + 2; }

 private:
  Dims dims() const { return {p_.algebra.dim(), r_.rep.dim_v}; }
  DerPair p_;
  DerPairRepresentation r_;
};

}  // namespace

std::unique_ptr<CochainComplex> prelie_complex(const PreLieAlgebra& a, const Representation& r) {
  return std::make_unique<PrelieComplex>(a, r);
}
std::unique_ptr<CochainComplex> partial_complex(const PreLieAlgebra& a, const Representation& r) {
  return std::make_unique<PartialComplex>(a, r);
}
std::unique_ptr<CochainComplex> pair_complex(const DerPair& p) { return std::make_unique<PairComplex>(p); }
std::unique_ptr<CochainComplex> regular_complex(const DerPair& regular) {
  return std::make_unique<RegularComplex>(regular);
}
std::unique_ptr<CochainComplex> rep_complex(const DerPair& regular, const DerPairRepresentation& r) {
  return std::make_unique<RepComplex>(regular, r);
}

CohomologyDims cohomology_dim(const CochainComplex& c, int n) {
  if (n < 1) throw std::invalid_argument("cohomology_dim: degree must be at least 1");
  CohomologyDims out;
  out.cochains = c.dim(n);
  out.cocycles = out.cochains - rank(c.differential(n));
  out.coboundaries = n >= 2 ? rank(c.differential(n - 1)) : 0;
  out.cohomology = out.cocycles - out.coboundaries;
  return out;
}

// ---------------------------------------------------------------- exactness

bool LesReport::exact() const {
  for (const auto& c : checks)
    if (!c.exact) return false;
  return true;
}

namespace {

// Coordinates of the subcomplex A^n = C^{n-1}(g;V) and the maps into and out of
// the pair complex.
struct LesData {
  const DerPair& p;
  std::unique_ptr<CochainComplex> coeff = prelie_complex(p.algebra, p.rep);
  std::unique_ptr<CochainComplex> pair = pair_complex(p);
  std::unique_ptr<CochainComplex> part = partial_complex(p.algebra, p.rep);

  std::size_t dim_a(int n) const { return n < 2 ? 0 : coeff->dim(n - 1); }
  Matrix d_a(int n) const { return n < 2 ? Matrix(dim_a(n + 1), 0) : coeff->differential(n - 1); }

  Matrix iota(int n) const {
    Matrix m(pair->dim(n), dim_a(n));
    const std::size_t off = pair->dim(n) - dim_a(n);
    for (std::size_t j = 0; j < dim_a(n); ++j) m(off + j, j) = 1;
    return m;
  }
  Matrix proj(int n) const {
    Matrix m(part->dim(n), pair->dim(n));
    for (std::size_t j = 0; j < part->dim(n); ++j) m(j, j) = 1;
    return m;
  }
  Matrix connecting(int n) const {
    const Dims d = p.dims();
    const std::size_t cols = part->dim(n);
    Matrix m(dim_a(n + 1), cols);
    for (std::size_t j = 0; j < cols; ++j)
      m.set_column(j, delta(TripleCochain::from_coordinates(n, d, unit_vector(cols, j)), p.derivation).coeffs());
    return m;
  }
};

Matrix cycles(const Matrix& d) { return kernel_matrix(d); }
Matrix boundaries(const Matrix& d_prev) { return column_space_basis(d_prev); }

ExactnessCheck compare(int n, std::string where, const Matrix& image, const Matrix& kernel, const Matrix& bound) {
  ExactnessCheck c;
  c.degree = n;
  c.position = std::move(where);
  const std::size_t rb = rank(bound);
  c.image_dim = rank(image) - rb;
  c.kernel_dim = rank(kernel) - rb;
  c.exact = subspace_equal(image, kernel);
  return c;
}

}  // namespace

LesReport les_check(const DerPair& p, int n_max) {
  check_shapes(p);
  LesData data{p};
  LesReport report;
  auto prev = [](const CochainComplex& c, int n) { return n >= 2 ? c.differential(n - 1) : Matrix(c.dim(n), 0); };
  for (int n = 1; n <= n_max; ++n) {
    const Matrix zA = cycles(data.d_a(n));
    const Matrix zB = cycles(data.pair->differential(n));
    const Matrix bB = boundaries(prev(*data.pair, n));
    const Matrix zC = cycles(data.part->differential(n));
    const Matrix bC = boundaries(prev(*data.part, n));
    const Matrix zA1 = cycles(data.d_a(n + 1));
    const Matrix bA1 = boundaries(data.d_a(n));
    const Matrix bB1 = boundaries(data.pair->differential(n));
    const Matrix iota = data.iota(n);
    const Matrix proj = data.proj(n);
    const Matrix conn = data.connecting(n);

    // H^n(A) -> H^n(pair) -> H^n(partial)
    const Matrix im_iota = subspace_sum(iota * zA, bB);
    const Matrix ker_p = zB * preimage(proj * zB, bC);
    report.checks.push_back(compare(n, "pair", im_iota, subspace_sum(ker_p, bB), bB));

    // H^n(pair) -> H^n(partial) -> H^{n+1}(A)
    const Matrix im_p = subspace_sum(proj * zB, bC);
    const Matrix ker_c = zC * preimage(conn * zC, bA1);
    report.checks.push_back(compare(n, "partial", im_p, subspace_sum(ker_c, bC), bC));

    // H^n(partial) -> H^{n+1}(A) -> H^{n+1}(pair)
    const Matrix im_c = subspace_sum(conn * zC, bA1);
    const Matrix ker_i = zA1 * preimage(data.iota(n + 1) * zA1, bB1);
    report.checks.push_back(compare(n + 1, "coefficients", im_c, subspace_sum(ker_i, bA1), bA1));
  }
  return report;
}

}  // namespace prelieder

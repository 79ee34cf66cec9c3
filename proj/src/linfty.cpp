#include "prelieder/linfty.hpp"

#include <stdexcept>

#include "prelieder/mn_bracket.hpp"

namespace prelieder {

namespace {

Scalar sign_of(int exponent) { return (exponent % 2 == 0) ? Scalar(1) : Scalar(-1); }

}  // namespace

LElement LElement::zero(Dims dims, int degree) {
  if (degree < -1) throw std::invalid_argument("LElement: degree must be at least -1");
  LElement x;
  x.degree = degree;
  x.shifted = GradedCochain(dims, degree + 2);
  if (degree >= 0) x.h_part = GradedCochain(dims, degree + 1);
  return x;
}

LElement LElement::make(GradedCochain shifted, std::optional<GradedCochain> h_part) {
  LElement x;
  x.degree = shifted.arity() - 2;
  if (h_part) {
    if (h_part->arity() != shifted.arity() - 1) throw std::invalid_argument("LElement: arities of the two parts differ");
    if (!(h_part->dims() == shifted.dims())) throw std::invalid_argument("LElement: dimension mismatch");
  } else if (x.degree >= 0) {
    h_part = GradedCochain(shifted.dims(), shifted.arity() - 1);
  }
  x.shifted = std::move(shifted);
  x.h_part = std::move(h_part);
  check_homogeneous(x);
  return x;
}

bool LElement::is_zero() const { return shifted.is_zero() && (!h_part || h_part->is_zero()); }

void check_homogeneous(const LElement& x) {
  if (x.shifted.arity() != x.degree + 2) throw std::invalid_argument("LElement: shifted part has the wrong arity");
  if (!has_bidegree(x.shifted, {x.degree + 1, 0}))
    throw std::invalid_argument("LElement: shifted part is not of bidegree k|0");
  if (x.degree >= 0) {
    if (!x.h_part || x.h_part->arity() != x.degree + 1)
      throw std::invalid_argument("LElement: h part has the wrong arity");
    if (!has_bidegree(*x.h_part, {x.degree + 1, -1}))
      throw std::invalid_argument("LElement: h part is not of bidegree k|-1");
  } else if (x.h_part) {
    throw std::invalid_argument("LElement: degree -1 has no h part");
  }
}

LElement& LElement::operator+=(const LElement& other) {
  if (degree != other.degree) throw std::invalid_argument("LElement: adding elements of different degree");
  shifted += other.shifted;
  if (h_part) *h_part += *other.h_part;
  return *this;
}

LElement operator-(const LElement& a, const LElement& b) { return a + Scalar(-1) * b; }

LElement operator*(const Scalar& s, const LElement& a) {
  LElement out = a;
  out.shifted = s * a.shifted;
  if (a.h_part) out.h_part = s * *a.h_part;
  return out;
}

LElement l2(const LElement& x, const LElement& y) {
  check_homogeneous(x);
  check_homogeneous(y);
  if (!(x.dims() == y.dims())) throw std::invalid_argument("l2: dimension mismatch");
  const int f_degree = x.degree + 1;  // |f| for x = s^{-1} f
  LElement out = LElement::zero(x.dims(), x.degree + y.degree + 1);
  out.shifted = sign_of(f_degree) * mn_bracket(x.shifted, y.shifted);
  if (y.h_part) *out.h_part += project_h(mn_bracket(x.shifted, *y.h_part));
  // l2(theta, s^{-1}g) = (-1)^{|theta||s^{-1}g|} P[g, theta]
  if (x.h_part) *out.h_part += sign_of(x.degree * y.degree) * project_h(mn_bracket(y.shifted, *x.h_part));
  return out;
}

LElement higher_lk(std::span<const LElement> args) {
  if (args.size() < 3) throw std::invalid_argument("higher_lk: needs at least three arguments");
  int degree = 1;
  for (const auto& a : args) {
    check_homogeneous(a);
    degree += a.degree;
  }
  return LElement::zero(args.front().dims(), degree);
}

LElement l1_on_subalgebra(const LElement& x) {
  check_homogeneous(x);
  return LElement::zero(x.dims(), x.degree + 1);
}

LElement mc_element(const DerPair& candidate) {
  check_shapes(candidate);
  const Dims d = candidate.dims();
  GradedCochain structure = structure_cochain(candidate.algebra, candidate.rep);
  GradedCochain der = lift(linear_map(candidate.derivation, Factor::G, Factor::V, d));
  return LElement::make(std::move(structure), std::move(der));
}

MCReport mc_check(const LElement& alpha) {
  if (alpha.degree != 0) throw std::invalid_argument("mc_check: Maurer-Cartan elements have degree 0");
  const LElement curvature = Scalar(1, 2) * l2(alpha, alpha) + l1_on_subalgebra(alpha);
  MCReport r;
  r.residual_shifted = curvature.shifted;
  r.residual_h = *curvature.h_part;
  r.is_mc = curvature.is_zero();
  return r;
}

MCReport mc_check(const DerPair& candidate) { return mc_check(mc_element(candidate)); }

TwistedLinfty::TwistedLinfty(LElement alpha) : alpha_(std::move(alpha)) {
  if (!mc_check(alpha_).is_mc) throw std::invalid_argument("twist: element is not Maurer-Cartan");
}

LElement TwistedLinfty::l1(const LElement& x) const { return prelieder::l2(alpha_, x) + l1_on_subalgebra(x); }

LElement TwistedLinfty::l2(const LElement& x, const LElement& y) const { return prelieder::l2(x, y); }

LElement TwistedLinfty::lk(std::span<const LElement> args) const {
  if (args.size() == 1) return l1(args[0]);
  if (args.size() == 2) return l2(args[0], args[1]);
  return higher_lk(args);
}

TwistedLinfty twist(const LElement& alpha) { return TwistedLinfty(alpha); }

bool mc_twisted_check(const LElement& alpha, const LElement& alpha_prime) {
  if (alpha_prime.degree != 0) throw std::invalid_argument("mc_twisted_check: element must have degree 0");
  const TwistedLinfty t(alpha);
  return (t.l1(alpha_prime) + Scalar(1, 2) * t.l2(alpha_prime, alpha_prime)).is_zero();
}

LElement to_lelement(const DerPairCochain& c) {
  std::optional<GradedCochain> h;
  if (c.degree() >= 2) h = lift(c.theta);
  return LElement::make(c.f.lifted(), std::move(h));
}

DerPairCochain from_lelement(const LElement& x) {
  check_homogeneous(x);
  const int n = x.degree + 2;
  DerPairCochain c = DerPairCochain::zero(n, x.dims());
  auto parts = decompose_k0(x.shifted);
  c.f.g = std::move(parts.g);
  c.f.rho = std::move(parts.rho);
  if (n >= 2) {
    c.f.mu = std::move(parts.mu);
    c.theta = restrict_to(*x.h_part, {n - 2, 0, Factor::G}, Factor::V);
  }
  return c;
}

}  // namespace prelieder

#pragma once

#include <optional>
#include <span>

#include "prelieder/cochain.hpp"
#include "prelieder/cohomology.hpp"
#include "prelieder/prelie.hpp"

namespace prelieder {

/// Homogeneous element (s^{-1} f, theta) of s^{-1}L' (+) h, with f of bidegree
/// k|0 and theta of bidegree k|-1. Degree d means f has arity d+2 and theta
/// arity d+1; at d = -1 the h part is absent.
struct LElement {
  int degree = 0;
  GradedCochain shifted;
  std::optional<GradedCochain> h_part;

  static LElement zero(Dims dims, int degree);
  /// Validates bidegrees and matching arities.
  static LElement make(GradedCochain shifted, std::optional<GradedCochain> h_part);

  const Dims& dims() const { return shifted.dims(); }
  bool is_zero() const;

  LElement& operator+=(const LElement& other);
  friend LElement operator+(LElement a, const LElement& b) { return a += b; }
  friend LElement operator-(const LElement& a, const LElement& b);
  friend LElement operator*(const Scalar& s, const LElement& a);
  friend bool operator==(const LElement&, const LElement&) = default;
};

/// Throws std::invalid_argument unless x is homogeneous of its stated degree.
void check_homogeneous(const LElement& x);

/// Binary bracket (degree +1, graded symmetric in the shifted degrees):
/// l2(s^{-1}f, s^{-1}g) = (-1)^{|f|} s^{-1}[f,g], l2(s^{-1}f, theta) = P[f,theta],
/// l2(theta, theta') = 0.
LElement l2(const LElement& x, const LElement& y);
/// l_k for k >= 3 vanishes identically.
LElement higher_lk(std::span<const LElement> args);
/// l1 vanishes on s^{-1}L' (+) h.
LElement l1_on_subalgebra(const LElement& x);

/// (s^{-1}(pi + rho + mu), D) for unvalidated data of matching shapes.
LElement mc_element(const DerPair& candidate);

struct MCReport {
  bool is_mc = false;
  /// -1/2 s^{-1}[pi+rho+mu, pi+rho+mu] (the shifted part, arity 3).
  GradedCochain residual_shifted;
  /// [pi+rho+mu, D] (the h part, arity 2).
  GradedCochain residual_h;
};

/// Curvature l1(a) + 1/2 l2(a, a) of a degree-0 element.
MCReport mc_check(const LElement& alpha);
MCReport mc_check(const DerPair& candidate);

/// Twisted products. Since l_k = 0 for k >= 3 and l1 = 0 on the subalgebra,
/// l1^a = l2(a, .), l2^a = l2 and the higher ones vanish.
class TwistedLinfty {
 public:
  /// Throws std::invalid_argument if alpha is not Maurer-Cartan.
  explicit TwistedLinfty(LElement alpha);

  const LElement& alpha() const { return alpha_; }
  LElement l1(const LElement& x) const;
  LElement l2(const LElement& x, const LElement& y) const;
  LElement lk(std::span<const LElement> args) const;

 private:
  LElement alpha_;
};

TwistedLinfty twist(const LElement& alpha);

/// Whether l1^a(a') + 1/2 l2^a(a', a') = 0.
bool mc_twisted_check(const LElement& alpha, const LElement& alpha_prime);

/// (f, theta) in C^n of the pair complex as the degree n-2 element (s^{-1}f, theta).
LElement to_lelement(const DerPairCochain& c);
DerPairCochain from_lelement(const LElement& x);

}  // namespace prelieder

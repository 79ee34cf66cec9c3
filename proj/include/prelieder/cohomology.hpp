#pragma once

#include <memory>
#include <string>
#include <vector>

#include "prelieder/cochain.hpp"
#include "prelieder/prelie.hpp"

namespace prelieder {

/// A representation (V, K, rho~, mu~) of a regular pair: a pre-Lie
/// representation together with K: V -> V.
struct DerPairRepresentation {
  Representation rep;
  Matrix k;
  friend bool operator==(const DerPairRepresentation&, const DerPairRepresentation&) = default;
};

/// (f_g, f_rho, f_mu) in Hom(/\^{n-1}g(x)g, g) + Hom(/\^{n-1}g(x)V, V)
/// + Hom(/\^{n-2}g(x)V(x)g, V). At n = 1 the third map is absent (size 0).
struct TripleCochain {
  int degree = 1;
  ComponentMap g;
  ComponentMap rho;
  ComponentMap mu;

  static TripleCochain zero(int n, Dims dims);
  Vector coordinates() const;
  static TripleCochain from_coordinates(int n, Dims dims, const Vector& coords);
  GradedCochain lifted() const;
  friend bool operator==(const TripleCochain&, const TripleCochain&) = default;
};

/// Cochain of the pair complex: a triple plus theta in Hom(/\^{n-2}g(x)g, V)
/// (absent at n = 1).
struct DerPairCochain {
  TripleCochain f;
  ComponentMap theta;

  int degree() const { return f.degree; }
  static DerPairCochain zero(int n, Dims dims);
  Vector coordinates() const;
  static DerPairCochain from_coordinates(int n, Dims dims, const Vector& coords);
  friend bool operator==(const DerPairCochain&, const DerPairCochain&) = default;
};

/// (f, theta) with f in Hom(/\^{n-1}g(x)g, T) and theta in Hom(/\^{n-2}g(x)g, T),
/// T = g for the regular complex and T = V for the complex with coefficients.
struct RegPairCochain {
  int degree = 1;
  ComponentMap f;
  ComponentMap theta;

  static RegPairCochain zero(int n, Dims dims, Factor target);
  Vector coordinates() const;
  static RegPairCochain from_coordinates(int n, Dims dims, Factor target, const Vector& coords);
  friend bool operator==(const RegPairCochain&, const RegPairCochain&) = default;
};

// --- explicit formulas --------------------------------------------------------

/// Pre-Lie coboundary of f in Hom(/\^{n-1}g(x)g, T) where r acts on T
/// (r.dim_v must equal dim T).
ComponentMap d_prelie(const ComponentMap& f, const PreLieAlgebra& a, const Representation& r);
TripleCochain partial(const TripleCochain& f, const PreLieAlgebra& a, const Representation& r);
/// Lands in Hom(/\^{n-1}g(x)g, V).
ComponentMap delta(const TripleCochain& f, const Matrix& derivation);
DerPairCochain huaD(const DerPairCochain& c, const DerPair& p);
/// (-1)^{n-2}(sum_i f(.., D x_i, ..) - K f(..)), with D: g -> g on inputs and
/// K on the target of f.
ComponentMap omega(const ComponentMap& f, const Matrix& derivation, const Matrix& k);
RegPairCochain huaD_reg(const RegPairCochain& c, const DerPair& regular);
RegPairCochain huaD_rep(const RegPairCochain& c, const DerPair& regular, const DerPairRepresentation& r);

/// (f, theta) -> (f, f, f, theta) in the pair complex of the regular pair.
DerPairCochain embed_regular(const RegPairCochain& c);
/// Inverse of embed_regular on its image.
RegPairCochain restrict_regular(const DerPairCochain& c);

// --- bracket formulas ---------------------------------------------------------

TripleCochain partial_by_bracket(const TripleCochain& f, const PreLieAlgebra& a, const Representation& r);
ComponentMap delta_by_bracket(const TripleCochain& f, const Matrix& derivation, int dim_v);
ComponentMap d_prelie_by_bracket(const ComponentMap& theta, const PreLieAlgebra& a, const Representation& r);

// --- complexes ----------------------------------------------------------------

enum class ComplexKind { Prelie, Partial, Pair, Regular, Rep };
std::string to_string(ComplexKind kind);
ComplexKind complex_kind_from_string(const std::string& name);

/// A cochain complex C^1 -> C^2 -> ... in coordinates. C^n is zero for n < 1
/// and for n > top_degree().
class CochainComplex {
 public:
  virtual ~CochainComplex() = default;
  virtual std::size_t dim(int n) const = 0;
  /// Applies the differential C^n -> C^{n+1} to coordinates.
  virtual Vector apply(int n, const Vector& coords) const = 0;
  virtual int top_degree() const = 0;
  /// dim(n+1) x dim(n).
  Matrix differential(int n) const;
};

std::unique_ptr<CochainComplex> prelie_complex(const PreLieAlgebra& a, const Representation& r);
std::unique_ptr<CochainComplex> partial_complex(const PreLieAlgebra& a, const Representation& r);
std::unique_ptr<CochainComplex> pair_complex(const DerPair& p);
std::unique_ptr<CochainComplex> regular_complex(const DerPair& regular);
std::unique_ptr<CochainComplex> rep_complex(const DerPair& regular, const DerPairRepresentation& r);

struct CohomologyDims {
  std::size_t cochains = 0;
  std::size_t cocycles = 0;
  std::size_t coboundaries = 0;
  std::size_t cohomology = 0;
};

CohomologyDims cohomology_dim(const CochainComplex& c, int n);

// --- long exact sequence ------------------------------------------------------

/// One exactness position of ... -> H^n(A) -> H^n(pair) -> H^n(partial) -> H^{n+1}(A) -> ...
/// where A^n = C^{n-1}(g;V).
struct ExactnessCheck {
  int degree = 0;
  std::string position;  // "pair", "partial", "coefficients"
  std::size_t image_dim = 0;
  std::size_t kernel_dim = 0;
  bool exact = false;
};

struct LesReport {
  std::vector<ExactnessCheck> checks;
  bool exact() const;
};

LesReport les_check(const DerPair& p, int n_max);

}  // namespace prelieder

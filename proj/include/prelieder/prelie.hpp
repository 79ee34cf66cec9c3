#pragma once

#include <string>
#include <vector>

#include "prelieder/cochain.hpp"
#include "prelieder/exact_linalg.hpp"

namespace prelieder {

/// Product e_i . e_j = sum_k c(i,j,k) e_k. Any constants are accepted;
/// validity is checked separately by is_prelie.
class PreLieAlgebra {
 public:
  PreLieAlgebra() = default;
  explicit PreLieAlgebra(int dim);
  /// constants[(i*dim + j)*dim + k] = c(i,j,k)
  PreLieAlgebra(int dim, std::vector<Scalar> constants);

  int dim() const { return dim_; }
  const Scalar& constant(int i, int j, int k) const { return c_[index(i, j, k)]; }
  void set_constant(int i, int j, int k, Scalar value) { c_[index(i, j, k)] = std::move(value); }
  const std::vector<Scalar>& constants() const { return c_; }

  Vector product(const Vector& x, const Vector& y) const;
  Vector product(int i, int j) const;
  /// Commutator x.y - y.x.
  Vector commutator(const Vector& x, const Vector& y) const;
  /// Left and right multiplication by x as dim x dim matrices.
  Matrix left(const Vector& x) const;
  Matrix right(const Vector& x) const;

  friend bool operator==(const PreLieAlgebra&, const PreLieAlgebra&) = default;

 private:
  std::size_t index(int i, int j, int k) const;
  int dim_ = 0;
  std::vector<Scalar> c_;
};

/// rho[i] = rho(e_i), mu[i] = mu(e_i), each dim_v x dim_v.
struct Representation {
  int dim_v = 0;
  std::vector<Matrix> rho;
  std::vector<Matrix> mu;

  static Representation zero(int dim_g, int dim_v);
  Matrix rho_of(const Vector& x) const;
  Matrix mu_of(const Vector& x) const;
  friend bool operator==(const Representation&, const Representation&) = default;
};

/// A pre-Lie algebra with a representation and a map D: g -> V (dim_v x dim g).
struct DerPair {
  PreLieAlgebra algebra;
  Representation rep;
  Matrix derivation;

  Dims dims() const { return {algebra.dim(), rep.dim_v}; }
  friend bool operator==(const DerPair&, const DerPair&) = default;
};

/// Outcome of an axiom check: the tags of the failing identity families.
struct Validation {
  std::vector<std::string> failed;
  bool ok() const { return failed.empty(); }
};

bool is_prelie(const PreLieAlgebra& a);
/// Structure constants of x.y - y.x in the same layout as PreLieAlgebra.
PreLieAlgebra subadjacent_lie(const PreLieAlgebra& a);

/// Tags: representation-1 (rho is a Lie representation of the commutator),
/// representation-2 (the mu identity).
Validation check_representation(const PreLieAlgebra& a, const Representation& r);
bool is_representation(const PreLieAlgebra& a, const Representation& r);

Representation regular_representation(const PreLieAlgebra& a);
/// (g, L, R) with the given derivation D: g -> g.
DerPair regular_pair(const PreLieAlgebra& a, const Matrix& derivation);
bool is_regular(const DerPair& p);

/// D(x.y) = rho(x)D(y) + mu(y)D(x) on basis pairs.
bool is_derivation(const DerPair& p);
/// Tags: pre-lie, representation-1, representation-2, derivation.
Validation check_derpair(const DerPair& p);

/// Tags: morphism (f_g multiplicative), mor-1, mor-2, mor-3.
Validation check_morphism(const Matrix& f_g, const Matrix& f_v, const DerPair& src, const DerPair& dst);
bool is_morphism(const Matrix& f_g, const Matrix& f_v, const DerPair& src, const DerPair& dst);

/// Component maps on g (+) V for lifting: pi in Hom(g(x)g, g),
/// rho in Hom(g(x)V, V), mu in Hom(V(x)g, V) stored as mu(y)u at (u; y),
/// D in Hom(g, V).
ComponentMap multiplication_map(const PreLieAlgebra& a, Dims dims);
ComponentMap rho_map(const Representation& r, Dims dims);
ComponentMap mu_map(const Representation& r, Dims dims);
ComponentMap linear_map(const Matrix& m, Factor from, Factor to, Dims dims);

/// Lift of pi + rho + mu.
GradedCochain structure_cochain(const PreLieAlgebra& a, const Representation& r);

/// Throws std::invalid_argument when the shapes of a pair do not fit together.
void check_shapes(const PreLieAlgebra& a, const Representation& r);
void check_shapes(const DerPair& p);

}  // namespace prelieder

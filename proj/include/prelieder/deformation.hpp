#pragma once

#include <optional>
#include <vector>

#include "prelieder/cohomology.hpp"
#include "prelieder/prelie.hpp"

namespace prelieder {

/// First-order data (omega, sigma, tau, D^) for (pi + t omega, rho + t sigma,
/// mu + t tau, D + t D^). sigma[i] = sigma(e_i), tau[i] = tau(e_i) as
/// dim V x dim V matrices; dhat is dim V x dim g.
struct DeformationDatum {
  PreLieAlgebra omega;
  std::vector<Matrix> sigma;
  std::vector<Matrix> tau;
  Matrix dhat;

  static DeformationDatum zero(Dims dims);
  /// The same maps viewed as a (not necessarily valid) pair.
  DerPair as_structure() const;
  static DeformationDatum from_structure(const DerPair& p);
  Dims dims() const { return {omega.dim(), static_cast<int>(dhat.rows())}; }

  friend bool operator==(const DeformationDatum&, const DeformationDatum&) = default;
};

/// (Id + tN, Id + tS) candidate.
struct EquivalenceWitness {
  Matrix n;
  Matrix s;
  friend bool operator==(const EquivalenceWitness&, const EquivalenceWitness&) = default;
};

/// Tags deformation-1..4 for the four bracket equations.
Validation check_infinitesimal_deformation(const DerPair& base, const DeformationDatum& d);
bool is_infinitesimal_deformation(const DerPair& base, const DeformationDatum& d);

/// (omega, sigma, tau, D^) as a 2-cochain of the pair complex, unvalidated.
DerPairCochain deformation_cochain(const DeformationDatum& d);
/// Inverse of deformation_cochain; c must have degree 2.
DeformationDatum deformation_from_cochain(const DerPairCochain& c);
/// Same, but throws std::invalid_argument unless d is an infinitesimal deformation.
DerPairCochain deformation_cocycle(const DerPair& base, const DeformationDatum& d);

/// Whether (Id + tN, Id + tS) maps the deformation with data `deformed` to
/// the one with data `reference`; tags equi-deformation-1..11 (reference
/// plays omega, deformed plays omega').
Validation check_equivalence(const DerPair& base, const DeformationDatum& reference, const DeformationDatum& deformed,
                             const EquivalenceWitness& w);
bool is_equivalence(const DerPair& base, const DeformationDatum& reference, const DeformationDatum& deformed,
                    const EquivalenceWitness& w);

/// Some (N, S) with D(N, S) = deformed - reference when the two cocycles are
/// cohomologous, nothing otherwise. Throws std::invalid_argument if either
/// datum is not a 2-cocycle.
std::optional<EquivalenceWitness> same_cohomology_class(const DerPair& base, const DeformationDatum& reference,
                                                        const DeformationDatum& deformed);

/// The 1-cochain (N, S) of the pair complex and back.
DerPairCochain witness_cochain(const EquivalenceWitness& w, Dims dims);
EquivalenceWitness witness_from_cochain(const DerPairCochain& c);

}  // namespace prelieder

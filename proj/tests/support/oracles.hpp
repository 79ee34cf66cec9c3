#pragma once

#include <vector>

#include "prelieder/deformation.hpp"
#include "prelieder/extension.hpp"
#include "support/corpus.hpp"

// Checks computed from structure constants alone, independent of the
// bracket machinery; shared by the unit tests and the acceptance run.
namespace testsupport {

using prelieder::DeformationDatum;
using prelieder::EquivalenceWitness;

/// Associator enumeration over every basis triple.
bool left_symmetric_oracle(const PreLieAlgebra& a);

/// base + t * datum as a pair.
DerPair at_t(const DerPair& base, const DeformationDatum& d, const Scalar& t);
/// The t-expansion has degree 2, so validity at t = 1, 2 (with a valid base)
/// means every coefficient vanishes.
bool deformation_oracle(const DerPair& base, const DeformationDatum& d);
/// (Id + tN, Id + tS) is a morphism deformed_t -> reference_t for t = 1..4;
/// the identities have degree 3 in t.
bool equivalence_oracle(const DerPair& base, const DeformationDatum& reference, const DeformationDatum& deformed,
                        const EquivalenceWitness& w);

/// c * (pi, rho, mu, D).
DeformationDatum scaled_datum(const DerPair& p, const Scalar& c);
/// reference + D(N, S): the first-order part of transporting by the witness.
DeformationDatum transported(const DerPair& base, const DeformationDatum& reference, const EquivalenceWitness& w);

struct DeformationInstance {
  DerPair base;
  DeformationDatum datum;
};
/// Valid by construction: multiples of the base (plus a derivation of the
/// base in the D^ slot) and arbitrary pairs over an abelian base.
std::vector<DeformationInstance> valid_deformations(int count, Rng& rng);
DeformationDatum random_datum(prelieder::Dims dims, Rng& rng);

/// Solves for zeta = id + phi directly from the structure constants of two
/// split extensions g (+) V.
bool isomorphic_oracle(const prelieder::AbelianExtension& e1, const prelieder::AbelianExtension& e2, int dg, int dv);

/// Changes one of product, representation or derivation at random.
DerPair perturb_pair(DerPair p, Rng& rng);

struct Structure {
  DerPair pair;
  DerPair regular;
  prelieder::DerPairRepresentation rep;
};
/// count structures cycling dim g through 1..3 and dim V through 1..2.
std::vector<Structure> random_structures(int count, unsigned seed);

/// A regular pair of dim 1..2 with a representation of dim 1..2.
struct Setup {
  DerPair base;
  prelieder::DerPairRepresentation rep;
};
Setup random_setup(Rng& rng);
prelieder::Dims dims_of(const Setup& s);
/// Random combination of a kernel basis of the degree-2 differential.
prelieder::ExtensionCocycle random_cocycle(const Setup& s, Rng& rng);
/// c + D(phi) for phi: g -> V.
prelieder::ExtensionCocycle plus_coboundary(const Setup& s, const prelieder::ExtensionCocycle& c, const Matrix& phi);
/// Rank test against the image of the degree-1 differential.
bool is_coboundary(const Setup& s, const prelieder::ExtensionCocycle& c);

/// Random cochain with every component of bidegree k|l filled in.
prelieder::GradedCochain random_homogeneous(prelieder::Dims d, int k, int l, Rng& rng);

}  // namespace testsupport

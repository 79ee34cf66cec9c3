#pragma once

#include <optional>
#include <utility>

#include "prelieder/cohomology.hpp"
#include "prelieder/prelie.hpp"

namespace prelieder {

/// Tags representation-1/2 for (V; rho~, mu~) and extension-rep-1/2 for the
/// compatibility of K with D. Throws if base is not a valid regular pair or
/// the shapes disagree.
Validation check_derpair_representation(const DerPair& base, const DerPairRepresentation& r);
bool is_derpair_representation(const DerPair& base, const DerPairRepresentation& r);

/// g (+) V with (x+u)(y+v) = xy + rho~(x)v + mu~(y)u and derivation D + K.
DerPair semidirect_product(const DerPair& base, const DerPairRepresentation& r);

/// (theta, xi) with theta: g (x) g -> V and xi: g -> V.
struct ExtensionCocycle {
  ComponentMap theta;
  ComponentMap xi;

  static ExtensionCocycle zero(Dims dims);
  /// As a 2-cochain of the complex with coefficients in V.
  RegPairCochain as_cochain() const;
  static ExtensionCocycle from_cochain(const RegPairCochain& c);
  friend bool operator==(const ExtensionCocycle&, const ExtensionCocycle&) = default;
};

/// 0 -> V --inject--> total --project--> g -> 0 with total a regular pair.
struct AbelianExtension {
  DerPair total;
  Matrix inject;   // dim total x dim V
  Matrix project;  // dim g x dim total
  friend bool operator==(const AbelianExtension&, const AbelianExtension&) = default;
};

/// Tags: regular-pair, short-exact, abelian, inclusion-morphism,
/// projection-morphism.
Validation check_extension(const AbelianExtension& ext, const DerPair& base, const Matrix& k);

/// Extension on g (+) V with x.y + theta(x,y) and D(x) + xi(x) + K(u).
/// Throws std::invalid_argument unless (theta, xi) is a 2-cocycle.
AbelianExtension build_extension(const DerPair& base, const DerPairRepresentation& r, const ExtensionCocycle& c);

/// Some s: g -> total with project * s = Id.
Matrix canonical_section(const AbelianExtension& ext);

struct ExtractedCocycle {
  ExtensionCocycle cocycle;
  DerPairRepresentation representation;
};

/// (theta, xi) and (V, K, rho~, mu~) read off through the section s.
ExtractedCocycle extract_cocycle(const AbelianExtension& ext, const DerPair& base, const Matrix& section);

/// zeta = [[I, 0], [phi, I]] with build_extension(c1) ~ build_extension(c2)
/// via zeta, when c1 - c2 is a coboundary; nothing otherwise.
std::optional<Matrix> classify(const DerPair& base, const DerPairRepresentation& r, const ExtensionCocycle& c1,
                               const ExtensionCocycle& c2);

/// zeta is a pair isomorphism between the two extensions commuting with the
/// inclusions and projections.
bool is_extension_isomorphism(const Matrix& zeta, const AbelianExtension& from, const AbelianExtension& to);

}  // namespace prelieder

// Writes the example corpus in data/. usage: make_corpus <data dir>
//
// Everything is built around the two-dimensional algebra e1 e2 = e2 with
// D = diag(0, 1). Searches are exhaustive over small integer entries, so the
// output is deterministic.

#include <fstream>
#include <iostream>

#include "prelieder/cohomology.hpp"
#include "prelieder/deformation.hpp"
#include "prelieder/extension.hpp"
#include "prelieder/io.hpp"

using namespace prelieder;

namespace {

std::string out_dir;

void save(const std::string& name, const Document& d) {
  std::ofstream out(out_dir + "/" + name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + name);
  out << emit_document(d);
}

bool is_zero_cochain(const RegPairCochain& c) { return c.f.is_zero() && c.theta.is_zero(); }

DeformationDatum transported(const DerPair& base, const DeformationDatum& reference, const EquivalenceWitness& w) {
  const DerPairCochain shift = huaD(witness_cochain(w, base.dims()), base);
  DerPairCochain c = deformation_cochain(reference);
  c.f.g += shift.f.g;
  c.f.rho += shift.f.rho;
  c.f.mu += shift.f.mu;
  c.theta += shift.theta;
  return deformation_from_cochain(c);
}

void structures(const DerPair& pair) {
  const PreLieAlgebra& a = pair.algebra;
  save("pair.json", pair);
  save("algebra.json", a);
  save("derivation.json", DerivationDoc{pair.derivation});
  save("regular_rep.json", RepresentationDoc{2, pair.rep});
  save("abelian.json", DerPair{PreLieAlgebra(2), Representation::zero(2, 1), Matrix(1, 2)});

  // D e1 = e1: D(e1 e2) = 0 but D e1 . e2 = e2
  const DerPair bad = regular_pair(a, Matrix::from_rows({{1, 0}, {0, 0}}));
  save("bad_derivation.json", bad);
  save("bad_derivation_map.json", DerivationDoc{bad.derivation});

  PreLieAlgebra not_prelie(2);  // e1 e1 = e2, e2 e1 = e1
  not_prelie.set_constant(0, 0, 1, 1);
  not_prelie.set_constant(1, 0, 0, 1);
  save("not_prelie.json", not_prelie);

  Representation bad_rep = Representation::zero(2, 1);
  bad_rep.rho[1] = Matrix::from_rows({{1}});
  save("bad_rep.json", RepresentationDoc{2, bad_rep});

  save("structure.json", structure_cochain(a, pair.rep));
  save("derivation_cochain.json", lift(linear_map(pair.derivation, Factor::G, Factor::V, pair.dims())));
  save("bad_derivation_cochain.json", lift(linear_map(bad.derivation, Factor::G, Factor::V, pair.dims())));
}

void deformations(const DerPair& pair) {
  const DeformationDatum scaled = DeformationDatum::from_structure(pair);
  save("deformation_scaled.json", scaled);
  save("deformation_zero.json", DeformationDatum::zero(pair.dims()));

  DeformationDatum broken = scaled;
  broken.dhat(0, 0) = 1;
  save("deformation_broken.json", broken);

  // first witness with entries in {-1, 0, 1} giving a different, equivalent deformation
  bool found = false;
  for (int code = 1; code < 6561 && !found; ++code) {
    std::vector<Scalar> e;
    for (int k = 0, x = code; k < 8; ++k, x /= 3) e.emplace_back(x % 3 - 1);
    const EquivalenceWitness w{Matrix(2, 2, {e[0], e[1], e[2], e[3]}), Matrix(2, 2, {e[4], e[5], e[6], e[7]})};
    const DeformationDatum d = transported(pair, scaled, w);
    if (d != scaled && is_infinitesimal_deformation(pair, d) && is_equivalence(pair, scaled, d, w)) {
      save("deformation_equivalent.json", d);
      found = true;
    }
  }
  if (!found) throw std::runtime_error("no equivalent deformation found");

  // first kernel vector of the degree-2 differential that is a deformation outside the class of 0
  const auto complex = pair_complex(pair);
  for (const auto& z : kernel_basis(complex->differential(2))) {
    const DeformationDatum d = deformation_from_cochain(DerPairCochain::from_coordinates(2, pair.dims(), z));
    if (is_infinitesimal_deformation(pair, d) &&
        !same_cohomology_class(pair, DeformationDatum::zero(pair.dims()), d)) {
      save("deformation_nontrivial.json", d);
      return;
    }
  }
  throw std::runtime_error("no nontrivial deformation found");
}

void extensions(const DerPair& pair) {
  // trivial one-dimensional representation with K = 0
  const DerPairRepresentation trivial{Representation::zero(2, 1), Matrix(1, 1)};
  const Dims d{2, 1};
  const auto complex = rep_complex(pair, trivial);
  const Matrix d1 = complex->differential(1);
  std::optional<ExtensionCocycle> c1;
  for (const auto& z : kernel_basis(complex->differential(2)))
    if (!solve(d1, z)) {
      c1 = ExtensionCocycle::from_cochain(RegPairCochain::from_coordinates(2, d, Factor::V, z));
      break;
    }
  if (!c1) throw std::runtime_error("second cohomology vanishes");

  RegPairCochain phi = RegPairCochain::zero(1, d, Factor::V);
  phi.f = linear_map(Matrix::from_rows({{2, -1}}), Factor::G, Factor::V, d);
  const RegPairCochain shift = huaD_rep(phi, pair, trivial);
  const ExtensionCocycle c2{c1->theta + shift.f, c1->xi + shift.theta};

  save("extension.json", ExtensionDoc{trivial, *c1, std::nullopt});
  save("extension_cohomologous.json", ExtensionDoc{trivial, c2, std::nullopt});
  save("extension_split.json", ExtensionDoc{trivial, ExtensionCocycle::zero(d), std::nullopt});
  save("extension_realized.json", ExtensionDoc{trivial, *c1, build_extension(pair, trivial, *c1)});

  // last theta(e_i, e_j) bump that breaks the cocycle condition
  std::optional<ExtensionCocycle> broken;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      ExtensionCocycle t = *c1;
      t.theta.set({{i}, {}, Factor::G, j}, t.theta.at({{i}, {}, Factor::G, j}) + Vector{Scalar(1)});
      if (!is_zero_cochain(huaD_rep(t.as_cochain(), pair, trivial))) broken = t;
    }
  if (!broken) throw std::runtime_error("no non-cocycle found");
  save("extension_not_cocycle.json", ExtensionDoc{trivial, *broken, std::nullopt});
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_corpus <data dir>\n";
    return 2;
  }
  out_dir = argv[1];
  PreLieAlgebra a(2);
  a.set_constant(0, 1, 1, 1);
  const DerPair pair = regular_pair(a, Matrix::from_rows({{0, 0}, {0, 1}}));
  try {
    structures(pair);
    deformations(pair);
    extensions(pair);
  } catch (const std::exception& e) {
    std::cerr << "make_corpus: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

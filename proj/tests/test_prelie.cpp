#include "doctest.h"
#include "prelieder/mn_bracket.hpp"
#include "prelieder/prelie.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace prelieder;
using namespace testsupport;

namespace {

PreLieAlgebra e1e2() {
  PreLieAlgebra a(2);
  a.set_constant(0, 1, 1, 1);
  return a;
}

}  // namespace

TEST_CASE("pre-Lie validator on fixed examples") {
  CHECK(is_prelie(PreLieAlgebra(3)));
  CHECK(is_prelie(e1e2()));
  PreLieAlgebra b = e1e2();
  b.set_constant(1, 0, 0, 1);
  CHECK(is_prelie(b) == left_symmetric_oracle(b));
  CHECK_FALSE(is_prelie(b));  // (e1 e2) e1 - e1 (e2 e1) = e2 e1 - e1 e1 ... oracle above agrees
  CHECK_THROWS_AS(PreLieAlgebra(2, std::vector<Scalar>(7)), std::invalid_argument);
}

TEST_CASE("sub-adjacent Lie algebra") {
  auto zero = subadjacent_lie(PreLieAlgebra(2));
  CHECK(zero == PreLieAlgebra(2));
  auto lie = subadjacent_lie(e1e2());
  CHECK(lie.product(0, 1) == Vector{0, 1});
  CHECK(lie.product(1, 0) == Vector{0, -1});
  PreLieAlgebra comm(2);
  comm.set_constant(0, 0, 0, 1);
  comm.set_constant(0, 1, 1, 1);
  comm.set_constant(1, 0, 1, 1);
  CHECK(subadjacent_lie(comm) == PreLieAlgebra(2));
  PreLieAlgebra bad = e1e2();
  bad.set_constant(1, 0, 0, 1);
  CHECK_THROWS_AS(subadjacent_lie(bad), std::invalid_argument);

  for (const auto& a : testsupport::named_algebras()) {
    auto l = subadjacent_lie(a);
    const auto n = static_cast<std::size_t>(a.dim());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector x = unit_vector(n, i), y = unit_vector(n, j);
        CHECK(l.product(x, y) == Scalar(-1) * l.product(y, x));
        for (std::size_t k = 0; k < n; ++k) {
          Vector z = unit_vector(n, k);
          auto br = [&](const Vector& p, const Vector& q) { return l.product(p, q); };
          CHECK(is_zero(br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y))));
        }
      }
  }
}

TEST_CASE("regular representation") {
  CHECK(regular_representation(PreLieAlgebra(2)) == Representation::zero(2, 2));
  auto r = regular_representation(e1e2());
  CHECK(r.rho[0] == Matrix::from_rows({{0, 0}, {0, 1}}));
  CHECK(r.rho[1] == Matrix(2, 2));
  CHECK(r.mu[1] == Matrix::from_rows({{0, 0}, {1, 0}}));
  CHECK(r.mu[0] == Matrix(2, 2));
  PreLieAlgebra unit(1);
  unit.set_constant(0, 0, 0, 1);
  auto u = regular_representation(unit);
  CHECK(u.rho[0] == Matrix::identity(1));
  CHECK(u.mu[0] == Matrix::identity(1));
  for (const auto& a : testsupport::named_algebras()) CHECK(is_representation(a, regular_representation(a)));
}

TEST_CASE("representation validator") {
  CHECK(is_representation(e1e2(), Representation::zero(2, 3)));
  auto bad = Representation::zero(2, 2);
  bad.rho.pop_back();
  CHECK_THROWS_AS(is_representation(e1e2(), bad), std::invalid_argument);
}

TEST_CASE("derivations") {
  const auto a = e1e2();
  CHECK(is_derivation(regular_pair(a, Matrix(2, 2))));
  CHECK(is_derivation(regular_pair(a, Matrix::from_rows({{0, 0}, {0, 1}}))));
  // D = identity: D(e1 e2) = e2 but e1 D(e2) + D(e1) e2 = 2 e2
  CHECK_FALSE(is_derivation(regular_pair(a, Matrix::identity(2))));
  DerPair wrong{a, regular_representation(a), Matrix(1, 2)};
  CHECK_THROWS_AS(is_derivation(wrong), std::invalid_argument);
}

TEST_CASE("morphisms") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = testsupport::random_pair(rng.uniform(1, 3), rng.uniform(1, 2), rng);
    const auto ng = static_cast<std::size_t>(p.algebra.dim());
    const auto nv = static_cast<std::size_t>(p.rep.dim_v);
    CHECK(is_morphism(Matrix::identity(ng), Matrix::identity(nv), p, p));
    CHECK(is_morphism(Matrix(ng, ng), Matrix(nv, nv), p, p));
    auto v = check_morphism(Matrix::identity(ng), Scalar(2) * Matrix::identity(nv), p, p);
    if (!p.derivation.is_zero()) {
      CHECK_FALSE(v.ok());
      CHECK(std::find(v.failed.begin(), v.failed.end(), "mor-3") != v.failed.end());
    }
  }
  Rng r2(8);
  auto p = testsupport::random_pair(2, 1, r2);
  CHECK_THROWS_AS(is_morphism(Matrix::identity(3), Matrix::identity(1), p, p), std::invalid_argument);
}

TEST_CASE("pre-Lie iff the self-bracket vanishes") {
  Rng rng(9);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform(1, 3);
    auto a = testsupport::random_algebra(dim, rng);
    if (rng.coin()) a = testsupport::perturb(a, rng);
    const bool direct = is_prelie(a);
    CHECK(direct == left_symmetric_oracle(a));
    const Dims d{dim, 0};
    auto pi = lift(multiplication_map(a, d));
    CHECK(direct == mn_bracket(pi, pi).is_zero());
    (direct ? valid : invalid)++;
  }
  CHECK(valid >= 50);
  CHECK(invalid >= 50);
}

TEST_CASE("representation iff structure cochain is Maurer-Cartan") {
  Rng rng(10);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 240; ++trial) {
    const int dg = rng.uniform(1, 2), dv = rng.uniform(1, 2);
    auto a = testsupport::random_algebra(dg, rng);
    auto r = testsupport::random_representation(a, dv, rng);
    if (rng.coin()) r = testsupport::perturb(r, rng);
    const bool direct = is_representation(a, r);
    auto s = structure_cochain(a, r);
    CHECK(direct == mn_bracket(s, s).is_zero());
    (direct ? valid : invalid)++;
  }
  CHECK(valid >= 50);
  CHECK(invalid >= 50);
}

TEST_CASE("derivation iff bracket with the structure vanishes") {
  Rng rng(12);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto p = testsupport::random_pair(rng.uniform(1, 3), rng.uniform(1, 2), rng);
    if (rng.coin()) p.derivation = p.derivation + rng.matrix(p.derivation.rows(), p.derivation.cols(), 2, 0.2);
    const Dims d = p.dims();
    auto s = structure_cochain(p.algebra, p.rep);
    auto D = lift(linear_map(p.derivation, Factor::G, Factor::V, d));
    const bool direct = is_derivation(p);
    CHECK(direct == mn_bracket(s, D).is_zero());
    (direct ? valid : invalid)++;
  }
  CHECK(valid >= 50);
  CHECK(invalid >= 50);
}

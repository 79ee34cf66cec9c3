#include <functional>
#include <vector>

#include "doctest.h"
#include "prelieder/cohomology.hpp"
#include "prelieder/mn_bracket.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace prelieder;
using namespace testsupport;

namespace {

std::size_t sz(int i) { return static_cast<std::size_t>(i); }

TripleCochain random_triple(int n, Dims d, Rng& rng) {
  TripleCochain f = TripleCochain::zero(n, d);
  for (auto* m : {&f.g, &f.rho, &f.mu})
    for (auto& c : m->coeffs()) c = rng.scalar(2, 0.4);
  return f;
}

Vector random_coords(std::size_t n, Rng& rng) { return rng.vector(n, 2, 0.4); }

// d_{n+1} d_n == 0 for every n up to the top, and zero cochains above it.
void check_square_zero(const CochainComplex& c) {
  const int top = c.top_degree();
  CHECK(c.dim(top + 1) == 0);
  CHECK(c.dim(top) > 0);
  for (int n = 1; n < top; ++n) {
    const Matrix prod = c.differential(n + 1) * c.differential(n);
    CHECK(prod == Matrix(prod.rows(), prod.cols()));
  }
}


// Independent rank: count pivots of the transpose by hand elimination.
std::size_t rank_by_transpose(const Matrix& m) { return rref(m.transpose()).pivots.size(); }

}  // namespace

TEST_CASE("dM at degree one") {
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    DerPair p = testsupport::random_pair(2, 2, rng);
    ComponentMap f = rng.component({0, 0, Factor::G}, Factor::V, p.dims());
    ComponentMap df = d_prelie(f, p.algebra, p.rep);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y) {
        const Vector fx = f.at({{}, {}, Factor::G, x});
        const Vector fy = f.at({{}, {}, Factor::G, y});
        Vector expect = p.rep.rho[sz(x)] * fy + p.rep.mu[sz(y)] * fx;
        f.accumulate(expect, -1, {}, {}, Arg::of(p.algebra.product(x, y)));
        CHECK(df.evaluate(std::vector<Arg>{Arg::of(x)}, {}, Arg::of(y)) == expect);
      }
  }
}

TEST_CASE("abelian data has zero differentials") {
  PreLieAlgebra a(2);
  Representation r = Representation::zero(2, 2);
  Rng rng(3);
  for (int n = 1; n <= 3; ++n) {
    ComponentMap f = rng.component({n - 1, 0, Factor::G}, Factor::V, {2, 2});
    CHECK(d_prelie(f, a, r).is_zero());
  }
}

TEST_CASE("delta at degree one is D N - S D") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    DerPair p = testsupport::random_pair(2, 2, rng);
    TripleCochain f = random_triple(1, p.dims(), rng);
    Matrix n(2, 2), s(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int o = 0; o < 2; ++o) {
        n(sz(o), sz(i)) = f.g.at({{}, {}, Factor::G, i})[sz(o)];
        s(sz(o), sz(i)) = f.rho.at({{}, {}, Factor::V, i})[sz(o)];
      }
    const Matrix expect = p.derivation * n - s * p.derivation;
    ComponentMap d = delta(f, p.derivation);
    for (int x = 0; x < 2; ++x) CHECK(d.at({{}, {}, Factor::G, x}) == expect.column(sz(x)));
    CHECK(delta(f, Matrix(2, 2)).is_zero());
  }
}

TEST_CASE("omega at degree one is the commutator [D, N]") {
  Rng rng(6);
  const Matrix dmat = rng.matrix(2, 2);
  const Matrix nmat = rng.matrix(2, 2);
  ComponentMap f({0, 0, Factor::G}, Factor::G, {2, 0});
  for (int x = 0; x < 2; ++x) f.set({{}, {}, Factor::G, x}, nmat.column(sz(x)));
  ComponentMap w = omega(f, dmat, dmat);
  const Matrix expect = dmat * nmat - nmat * dmat;
  for (int x = 0; x < 2; ++x) CHECK(w.at({{}, {}, Factor::G, x}) == expect.column(sz(x)));
  ComponentMap id({0, 0, Factor::G}, Factor::G, {2, 0});
  for (int x = 0; x < 2; ++x) id.set({{}, {}, Factor::G, x}, unit_vector(2, sz(x)));
  CHECK(omega(id, dmat, dmat).is_zero());
}

TEST_CASE("partial of the structure itself vanishes") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    DerPair p = testsupport::random_pair(2, 1 + trial % 2, rng);
    TripleCochain s = TripleCochain::zero(2, p.dims());
    s.g = multiplication_map(p.algebra, p.dims());
    s.rho = rho_map(p.rep, p.dims());
    s.mu = mu_map(p.rep, p.dims());
    CHECK(partial(s, p.algebra, p.rep) == TripleCochain::zero(3, p.dims()));
    CHECK(partial(TripleCochain::zero(2, p.dims()), p.algebra, p.rep) == TripleCochain::zero(3, p.dims()));
  }
}

TEST_CASE("explicit formulas agree with the bracket path") {
  Rng rng(2024);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int dg = 1 + trial % 2;
    const int dv = 1 + (trial / 2) % 2;
    const int n = 1 + (trial / 4) % 4;
    DerPair p = testsupport::random_pair(dg, dv, rng);
    TripleCochain f = random_triple(n, p.dims(), rng);
    CAPTURE(trial);
    const TripleCochain explicit_path = partial(f, p.algebra, p.rep);
    const TripleCochain bracket_path = partial_by_bracket(f, p.algebra, p.rep);
    CHECK(explicit_path.g == bracket_path.g);
    CHECK(explicit_path.rho == bracket_path.rho);
    CHECK(explicit_path.mu == bracket_path.mu);
    CHECK(explicit_path.g == d_prelie(f.g, p.algebra, regular_representation(p.algebra)));
    CHECK(delta(f, p.derivation) == delta_by_bracket(f, p.derivation, dv));
    if (n >= 2) {
      ComponentMap theta = rng.component({n - 2, 0, Factor::G}, Factor::V, p.dims());
      CHECK(d_prelie(theta, p.algebra, p.rep) == d_prelie_by_bracket(theta, p.algebra, p.rep));
    }
    ++compared;
  }
  CHECK(compared == 200);
}

TEST_CASE("every differential squares to zero") {
  for (const auto& s : random_structures(24, 77)) {
    CHECK(check_derpair(s.pair).ok());
    check_square_zero(*prelie_complex(s.pair.algebra, s.pair.rep));
    check_square_zero(*partial_complex(s.pair.algebra, s.pair.rep));
    check_square_zero(*pair_complex(s.pair));
    check_square_zero(*regular_complex(s.regular));
    check_square_zero(*rep_complex(s.regular, s.rep));
  }
}

TEST_CASE("pair representations from the corpus give pre-LieDer semidirect products") {
  Rng rng(19);
  int nontrivial = 0;
  for (int trial = 0; trial < 20; ++trial) {
    DerPair regular = testsupport::random_regular_pair(1 + trial % 3, rng);
    auto rep = testsupport::random_pair_representation(regular, 1 + trial % 2, rng);
    CHECK(is_representation(regular.algebra, rep.rep));
    CHECK(check_derpair(testsupport::semidirect_oracle(regular, rep)).ok());
    if (!(rep.rep == Representation::zero(regular.algebra.dim(), rep.rep.dim_v))) ++nontrivial;
  }
  CHECK(nontrivial >= 5);
}

TEST_CASE("regular complex is a subcomplex of the pair complex") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int dg = 1 + trial % 3;
    const int n = 1 + trial % (dg + 2);
    DerPair regular = testsupport::random_regular_pair(dg, rng);
    const Dims d{dg, 0};
    RegPairCochain c = RegPairCochain::from_coordinates(
        n, d, Factor::G, random_coords(RegPairCochain::zero(n, d, Factor::G).coordinates().size(), rng));
    CAPTURE(trial);
    const DerPairCochain lhs = huaD(embed_regular(c), regular);
    const DerPairCochain rhs = embed_regular(huaD_reg(c, regular));
    CHECK(lhs == rhs);
    CHECK(restrict_regular(embed_regular(c)) == c);

    TripleCochain fff = embed_regular(c).f;
    CHECK(omega(c.f, regular.derivation, regular.derivation).coeffs() == delta(fff, regular.derivation).coeffs());
  }
}

TEST_CASE("rep complex is the restriction of the semidirect regular complex") {
  Rng rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const int dg = 1 + trial % 2;
    const int dv = 1 + (trial / 2) % 2;
    const int n = 1 + trial % (dg + 2);
    DerPair regular = testsupport::random_regular_pair(dg, rng);
    auto rep = testsupport::random_pair_representation(regular, dv, rng);
    DerPair semi = testsupport::semidirect_oracle(regular, rep);
    const Dims d{dg, dv};
    RegPairCochain c = RegPairCochain::from_coordinates(
        n, d, Factor::V, random_coords(RegPairCochain::zero(n, d, Factor::V).coordinates().size(), rng));

    // Extend by zero on V arguments, values included into V.
    const Dims sd{dg + dv, 0};
    auto extend = [&](const ComponentMap& m, int arity) {
      ComponentMap out({arity - 1, 0, Factor::G}, Factor::G, sd);
      for (const auto& idx : enumerate_basis(m.shape(), d)) {
        Vector v = zero_vector(sz(dg + dv));
        const Vector val = m.at(idx);
        for (int w = 0; w < dv; ++w) v[sz(dg + w)] = val[sz(w)];
        out.set({idx.g_wedge, {}, Factor::G, idx.tail}, v);
      }
      return out;
    };
    RegPairCochain big = RegPairCochain::zero(n, sd, Factor::G);
    big.f = extend(c.f, n);
    if (n >= 2) big.theta = extend(c.theta, n - 1);
    const RegPairCochain image = huaD_reg(big, semi);
    const RegPairCochain expect = huaD_rep(c, regular, rep);
    CAPTURE(trial);
    CHECK(image == [&] {
      RegPairCochain e = RegPairCochain::zero(n + 1, sd, Factor::G);
      e.f = extend(expect.f, n + 1);
      e.theta = extend(expect.theta, n);
      return e;
    }());
  }
}

TEST_CASE("abelian data: cohomology equals cochains with binomial dimensions") {
  for (int dg = 1; dg <= 3; ++dg)
    for (int dv = 1; dv <= 2; ++dv) {
      PreLieAlgebra a(dg);
      Representation r = Representation::zero(dg, dv);
      DerPair pair{a, r, Matrix(sz(dv), sz(dg))};
      DerPair regular{a, regular_representation(a), Matrix(sz(dg), sz(dg))};
      DerPairRepresentation rep{r, Matrix(sz(dv), sz(dv))};
      auto c = [&](int n, int k) { return static_cast<std::size_t>(binomial(n, k)); };
      const auto g = sz(dg), v = sz(dv);
      struct Case {
        std::unique_ptr<CochainComplex> complex;
        std::function<std::size_t(int)> formula;
      };
      std::vector<Case> cases;
      cases.push_back({prelie_complex(a, r), [&](int n) { return c(dg, n - 1) * g * v; }});
      auto partial_dim = [&](int n) { return c(dg, n - 1) * g * g + c(dg, n - 1) * v * v + c(dg, n - 2) * v * g * v; };
      cases.push_back({partial_complex(a, r), partial_dim});
      cases.push_back({pair_complex(pair), [&](int n) { return partial_dim(n) + c(dg, n - 2) * g * v; }});
      cases.push_back({regular_complex(regular), [&](int n) { return (c(dg, n - 1) + c(dg, n - 2)) * g * g; }});
      cases.push_back({rep_complex(regular, rep), [&](int n) { return (c(dg, n - 1) + c(dg, n - 2)) * g * v; }});
      for (const auto& k : cases)
        for (int n = 1; n <= k.complex->top_degree() + 1; ++n) {
          const auto dims = cohomology_dim(*k.complex, n);
          CHECK(dims.cochains == k.formula(n));
          CHECK(dims.cohomology == k.formula(n));
        }
    }
}

TEST_CASE("cohomology dimensions agree with an independent rank computation") {
  for (const auto& s : random_structures(12, 4242)) {
    std::vector<std::unique_ptr<CochainComplex>> complexes;
    complexes.push_back(prelie_complex(s.pair.algebra, s.pair.rep));
    complexes.push_back(pair_complex(s.pair));
    complexes.push_back(regular_complex(s.regular));
    complexes.push_back(rep_complex(s.regular, s.rep));
    for (const auto& c : complexes)
      for (int n = 1; n <= c->top_degree(); ++n) {
        const auto dims = cohomology_dim(*c, n);
        const Matrix dn = c->differential(n);
        const auto kernel = kernel_basis(dn);
        for (const auto& z : kernel) CHECK(is_zero(dn * z));
        CHECK(dims.cocycles == (dn.rows() == 0 ? dn.cols() : kernel.size()));
        CHECK(dims.cocycles == c->dim(n) - rank_by_transpose(dn));
        CHECK(dims.coboundaries == (n == 1 ? 0 : rank_by_transpose(c->differential(n - 1))));
        CHECK(dims.cohomology + dims.coboundaries == dims.cocycles);
      }
  }
}

TEST_CASE("one-dimensional idempotent with zero derivation") {
  PreLieAlgebra a(1);
  a.set_constant(0, 0, 0, 1);
  DerPair regular{a, regular_representation(a), Matrix(1, 1)};
  auto c = regular_complex(regular);
  CHECK(c->top_degree() == 3);
  // C^1 = Hom(g,g), d N(x,y) = xN(y) + N(x)y - N(xy) = N: injective.
  CHECK(cohomology_dim(*c, 1).cocycles == 0);
  // C^2 = Hom(g(x)g,g) + Hom(g,g); C^3 = Hom(g(x)g,g) (wedge^2 of a line is zero).
  CHECK(c->dim(2) == 2);
  CHECK(c->dim(3) == 1);
  const auto h2 = cohomology_dim(*c, 2);
  CHECK(h2.coboundaries == 1);
  CHECK(h2.cocycles == h2.coboundaries + h2.cohomology);
}

TEST_CASE("long exact sequence is exact on the corpus") {
  std::vector<DerPair> pairs;
  {
    PreLieAlgebra a(2);
    a.set_constant(0, 1, 1, 1);
    Matrix d(2, 2);
    d(1, 1) = 1;
    pairs.push_back({a, regular_representation(a), d});
  }
  pairs.push_back({PreLieAlgebra(2), Representation::zero(2, 1), Matrix(1, 2)});
  for (const auto& s : random_structures(12, 555)) {
    pairs.push_back(s.pair);
    pairs.push_back(s.regular);
  }
  for (const auto& p : pairs) {
    REQUIRE(check_derpair(p).ok());
    const LesReport report = les_check(p, p.algebra.dim() + 2);
    CHECK(report.checks.size() == sz(3 * (p.algebra.dim() + 2)));
    for (const auto& c : report.checks) {
      CAPTURE(c.degree);
      CAPTURE(c.position);
      CHECK(c.exact);
      CHECK(c.image_dim == c.kernel_dim);
    }
  }
}

TEST_CASE("abelian long exact sequence splits") {
  for (int dg = 1; dg <= 2; ++dg) {
    DerPair p{PreLieAlgebra(dg), Representation::zero(dg, 1), Matrix(1, sz(dg))};
    auto pair = pair_complex(p);
    auto part = partial_complex(p.algebra, p.rep);
    auto coeff = prelie_complex(p.algebra, p.rep);
    for (int n = 1; n <= dg + 2; ++n) {
      const std::size_t a = n >= 2 ? cohomology_dim(*coeff, n - 1).cohomology : 0;
      CHECK(cohomology_dim(*pair, n).cohomology == a + cohomology_dim(*part, n).cohomology);
    }
    CHECK(les_check(p, dg + 2).exact());
  }
}

TEST_CASE("complex names and input errors") {
  for (auto k : {ComplexKind::Prelie, ComplexKind::Partial, ComplexKind::Pair, ComplexKind::Regular, ComplexKind::Rep})
    CHECK(complex_kind_from_string(to_string(k)) == k);
  CHECK_THROWS_AS(complex_kind_from_string("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(TripleCochain::zero(0, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(TripleCochain::from_coordinates(1, {1, 1}, Vector(5)), std::invalid_argument);
  PreLieAlgebra a(2);
  ComponentMap wrong({1, 1, Factor::G}, Factor::V, {2, 1});
  CHECK_THROWS_AS(d_prelie(wrong, a, Representation::zero(2, 1)), std::invalid_argument);
  DerPair not_regular{a, Representation::zero(2, 1), Matrix(1, 2)};
  CHECK_THROWS_AS(regular_complex(not_regular), std::invalid_argument);
  Rng rng(1);
  CHECK_THROWS_AS(delta(random_triple(2, {2, 1}, rng), Matrix(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(cohomology_dim(*prelie_complex(a, Representation::zero(2, 1)), 0), std::invalid_argument);
}

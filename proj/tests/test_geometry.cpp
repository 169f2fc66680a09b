#include "doctest.h"
#include "support_geometry.hpp"

#include "acn/catalog.hpp"
#include "acn/expr.hpp"
#include "acn/geometry.hpp"

using namespace acn;
using acn::testing::standard_table;
using acn::testing::sym;

TEST_SUITE_BEGIN("geometry");

namespace {

bool torsion_free(const ConnectionTable& conn, const LieAlgebraFrame& fr) {
  for (std::size_t i = 0; i < fr.dim(); ++i)
    for (std::size_t j = 0; j < fr.dim(); ++j)
      if (!(conn.gamma(i, j) - conn.gamma(j, i) == fr.bracket(i, j))) return false;
  return true;
}

bool metric_compatible(const ConnectionTable& conn, const LieAlgebraFrame& fr,
                       const NordenMetric& g) {
  for (std::size_t i = 0; i < fr.dim(); ++i)
    for (std::size_t j = 0; j < fr.dim(); ++j)
      for (std::size_t k = 0; k < fr.dim(); ++k) {
        Fraction lhs = g.inner(conn.gamma(i, j), unit(fr, k)) +
                       g.inner(unit(fr, j), conn.gamma(i, k));
        if (!lhs.is_zero()) return false;
      }
  return true;
}

bool curvature_symmetries_and_bianchi(const CurvatureData& r) {
  const std::size_t n = r.lowered.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (!(r.lowered(i, j, k, l) == -r.lowered(j, i, k, l))) return false;
          if (!(r.lowered(i, j, k, l) == -r.lowered(i, j, l, k))) return false;
        }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        FVec sum = r.r(i, j, k) + r.r(j, k, i) + r.r(k, i, j);
        if (!sum.is_zero()) return false;
      }
  return true;
}

} // namespace

TEST_CASE("jacobi passes on the catalog algebra and on abelian algebras") {
  auto t = catalog::make_table();
  CHECK(check_jacobi(catalog::build_G(t).frame).all_pass());
  LieAlgebraFrame abelian(t, {"e1", "e2", "e3"});
  CHECK(check_jacobi(abelian).all_pass());
}

TEST_CASE("jacobi on a 3-dim solvable table, checked by hand") {
  // [e1,e2]=e1, [e1,e3]=e2, [e2,e3]=e3: the (1,2,3) cyclic sum is
  // [e1,e3] + [e3,e1] + [-e2,e2] = e2 - e2 + 0 = 0.
  auto t = standard_table();
  LieAlgebraFrame fr(t, {"e1", "e2", "e3"});
  FVec e1(3), e2(3), e3(3);
  e1[0] = Fraction(1);
  e2[1] = Fraction(1);
  e3[2] = Fraction(1);
  fr.set_bracket(0, 1, e1);
  fr.set_bracket(0, 2, e2);
  fr.set_bracket(1, 2, e3);
  CHECK(check_jacobi(fr).all_pass());
}

TEST_CASE("jacobi failure names the triple") {
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  LieAlgebraFrame fr = g.frame;
  FVec v = fr.bracket(0, 3);
  v[0] += Fraction(1); // [X1,X4] = 0 -> X1
  fr.set_bracket(0, 3, v);
  Report rep = check_jacobi(fr);
  CHECK_FALSE(rep.all_pass());
  REQUIRE_FALSE(rep.items.empty());
  CHECK(rep.items[0].name.find("jacobi") == 0);
}

TEST_CASE("exactly three zero-entry mutations of the bracket table keep Jacobi") {
  // frozen from an independent sweep: adding +1*X1, +1*X4 or +1*xi to
  // [X2,X3] leaves a Lie algebra; every other +1 mutation breaks Jacobi
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> surviving;
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      for (std::size_t l = 0; l < 5; ++l) {
        LieAlgebraFrame fr = g.frame;
        FVec v = fr.bracket(i, j);
        v[l] += Fraction(1);
        fr.set_bracket(i, j, v);
        if (check_jacobi(fr).all_pass()) surviving.emplace_back(i, j, l);
      }
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> expected = {
      {1, 2, 0}, {1, 2, 3}, {1, 2, 4}};
  CHECK(surviving == expected);
}

TEST_CASE("acn axioms on the catalog structure and a dim-1 degenerate case") {
  auto t = catalog::make_table();
  CHECK(check_acn_axioms(catalog::build_G(t)).all_pass());

  LieAlgebraFrame fr(t, {"e1"});
  FMat g(1, 1);
  g(0, 0) = Fraction(1);
  AlmostContactData acd;
  acd.phi = FMat(1, 1);
  acd.xi = FVec(1);
  acd.xi[0] = Fraction(1);
  acd.eta = acd.xi;
  CHECK(check_acn_axioms(AmbientSpace(fr, NordenMetric(g), acd)).all_pass());
}

TEST_CASE("acn axiom failures are reported per item") {
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  AlmostContactData broken = g.acd;
  broken.phi = FMat(5, 5); // phi = 0 in dim 5 violates phi^2 = -I + xi eta
  Report rep = check_acn_axioms(g.metric, broken);
  CHECK_FALSE(rep.all_pass());
  bool phi2_failed = false;
  for (const auto& it : rep.items)
    if (it.name == "phi_squared") phi2_failed = !it.pass;
  CHECK(phi2_failed);
}

TEST_CASE("associated metric of the catalog structure") {
  // entrywise from g~(x,y) = g(x, phi y) + eta(x) eta(y)
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  NordenMetric gt = associated_metric(g);
  FMat expected(5, 5);
  expected(0, 2) = expected(2, 0) = Fraction(-1);
  expected(1, 3) = expected(3, 1) = Fraction(-1);
  expected(4, 4) = Fraction(1);
  CHECK(gt.matrix() == expected);
  CHECK(gt.matrix().is_symmetric());
  // the associated metric is Norden for the same (phi, xi, eta)
  CHECK(check_acn_axioms(gt, g.acd).all_pass());
}

TEST_CASE("associated metric in dim 1 is eta (x) eta") {
  auto t = standard_table();
  LieAlgebraFrame fr(t, {"e1"});
  FMat g(1, 1);
  g(0, 0) = Fraction(1);
  AlmostContactData acd;
  acd.phi = FMat(1, 1);
  acd.xi = FVec(1);
  acd.xi[0] = Fraction(1);
  acd.eta = acd.xi;
  NordenMetric gt = associated_metric(AmbientSpace(fr, NordenMetric(g), acd));
  CHECK(gt.matrix() == g);
}

TEST_CASE("koszul connection of an abelian algebra vanishes") {
  auto t = standard_table();
  LieAlgebraFrame fr(t, {"e1", "e2", "e3"});
  ConnectionTable conn = koszul_connection(fr, NordenMetric(acn::testing::euclid3()));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(conn.gamma(i, j).is_zero());
}

TEST_CASE("koszul connection of the Heisenberg algebra matches the hand computation") {
  auto t = standard_table();
  LieAlgebraFrame fr = acn::testing::heisenberg_frame(t);
  ConnectionTable conn = koszul_connection(fr, NordenMetric(acn::testing::euclid3()));
  Fraction half(Rational(1, 2));
  FVec e1 = unit(fr, 0), e2 = unit(fr, 1), e3 = unit(fr, 2);
  CHECK(conn.gamma(0, 1) == half * e3);
  CHECK(conn.gamma(1, 0) == -(half * e3));
  CHECK(conn.gamma(0, 2) == -(half * e2));
  CHECK(conn.gamma(2, 0) == -(half * e2));
  CHECK(conn.gamma(1, 2) == half * e1);
  CHECK(conn.gamma(2, 1) == half * e1);
  CHECK(conn.gamma(0, 0).is_zero());
  CHECK(conn.gamma(1, 1).is_zero());
  CHECK(conn.gamma(2, 2).is_zero());
}

TEST_CASE("torsion-free and metric-compatible on the catalog space") {
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  ConnectionTable conn = koszul_connection(g.frame, g.metric);
  CHECK(torsion_free(conn, g.frame));
  CHECK(metric_compatible(conn, g.frame, g.metric));
}

TEST_CASE("connection properties on randomized nilpotent algebras") {
  auto t = standard_table();
  std::mt19937 rng(314159);
  std::uniform_int_distribution<std::size_t> dims(3, 5);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int it = 0; it < 15; ++it) {
    std::size_t n = dims(rng);
    LieAlgebraFrame fr = acn::testing::random_nilpotent_frame(rng, t, n, n >= 4 ? 2 : 1);
    REQUIRE(check_jacobi(fr).all_pass());
    FMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = Fraction(sgn(rng) ? 1 : -1);
    NordenMetric metric(g);
    ConnectionTable conn = koszul_connection(fr, metric);
    CHECK(torsion_free(conn, fr));
    CHECK(metric_compatible(conn, fr, metric));
  }
}

TEST_CASE("curvature of an abelian algebra vanishes") {
  auto t = standard_table();
  LieAlgebraFrame fr(t, {"e1", "e2", "e3"});
  NordenMetric g(acn::testing::euclid3());
  CurvatureData r = curvature(koszul_connection(fr, g), fr, g);
  CHECK(r.lowered.is_zero());
}

TEST_CASE("Heisenberg sectional component R(e1,e2,e2,e1) = -3/4") {
  auto t = standard_table();
  LieAlgebraFrame fr = acn::testing::heisenberg_frame(t);
  NordenMetric g(acn::testing::euclid3());
  CurvatureData r = curvature(koszul_connection(fr, g), fr, g);
  CHECK(r.lowered(0, 1, 1, 0) == Fraction(Rational(-3, 4)));
  CHECK(curvature_symmetries_and_bianchi(r));
}

TEST_CASE("curvature antisymmetries and first Bianchi on the catalog space") {
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  CurvatureData r = curvature(koszul_connection(g.frame, g.metric), g.frame, g.metric);
  CHECK(curvature_symmetries_and_bianchi(r));
}

TEST_CASE("curvature properties on randomized nilpotent algebras") {
  auto t = standard_table();
  std::mt19937 rng(271828);
  std::uniform_int_distribution<std::size_t> dims(3, 5);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int it = 0; it < 10; ++it) {
    std::size_t n = dims(rng);
    LieAlgebraFrame fr = acn::testing::random_nilpotent_frame(rng, t, n, n >= 4 ? 2 : 1);
    FMat g(n, n);
    for (std::size_t i = 0; i < n; ++i) g(i, i) = Fraction(sgn(rng) ? 1 : -1);
    NordenMetric metric(g);
    CurvatureData r = curvature(koszul_connection(fr, metric), fr, metric);
    CHECK(curvature_symmetries_and_bianchi(r));
  }
}

TEST_CASE("F vanishes on abelian algebras for any constant phi") {
  auto t = standard_table();
  LieAlgebraFrame fr(t, {"e1", "e2", "e3"});
  NordenMetric g(acn::testing::euclid3());
  FMat phi(3, 3);
  phi(0, 1) = Fraction(sym(t, "a"));
  phi(2, 0) = Fraction(7);
  ConnectionTable conn = koszul_connection(fr, g);
  AlmostContactData acd{phi, FVec(3), FVec(3)};
  CHECK(f_tensor_from_connection(conn, g, acd, fr).is_zero());
  CHECK(f_tensor_lie(fr, g, phi).is_zero());
}

TEST_CASE("two F routes agree on the catalog space, all 125 components") {
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  ConnectionTable conn = koszul_connection(g.frame, g.metric);
  Tensor3<Fraction> f1 = f_tensor_from_connection(conn, g.metric, g.acd, g.frame);
  Tensor3<Fraction> f2 = f_tensor_lie(g.frame, g.metric, g.acd.phi);
  CHECK(f1 == f2);
  CHECK_FALSE(f1.is_zero()); // G is not in class F0
}

TEST_CASE("F is symmetric in its last two arguments on valid structures") {
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  Tensor3<Fraction> f = f_tensor_lie(g.frame, g.metric, g.acd.phi);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t k = 0; k < 5; ++k) CHECK(f(i, j, k) == f(i, k, j));
}

TEST_CASE("two F routes agree on randomized valid structures over random brackets") {
  auto t = standard_table();
  std::mt19937 rng(1618);
  std::uniform_int_distribution<int> pick_dim(0, 1);
  for (int it = 0; it < 12; ++it) {
    std::size_t n = pick_dim(rng) ? 3 : 5;
    LieAlgebraFrame fr = acn::testing::random_nilpotent_frame(rng, t, n, n >= 4 ? 2 : 1);
    acn::testing::DiagStructure st = acn::testing::random_block_structure(rng, n);
    NordenMetric metric(st.metric);
    REQUIRE(check_acn_axioms(metric, st.acd).all_pass());
    ConnectionTable conn = koszul_connection(fr, metric);
    Tensor3<Fraction> f = f_tensor_lie(fr, metric, st.acd.phi);
    CHECK(f_tensor_from_connection(conn, metric, st.acd, fr) == f);
    // F(x,y,z) = F(x,z,y) and the associated metric stays symmetric
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j; k < n; ++k) CHECK(f(i, j, k) == f(i, k, j));
    LieAlgebraFrame plain(t, fr.names());
    NordenMetric assoc =
        associated_metric(AmbientSpace(plain, NordenMetric(st.metric), st.acd));
    CHECK(assoc.matrix().is_symmetric());
  }
}

TEST_CASE("is_class_F0") {
  auto t = standard_table();
  Tensor3<Fraction> z(3);
  CHECK(is_class_F0(z));
  z(1, 0, 1) = Fraction(sym(t, "a"));
  CHECK_FALSE(is_class_F0(z));
}

TEST_CASE("change_basis rejects singular transformations") {
  auto t = catalog::make_table();
  AmbientSpace g = catalog::build_G(t);
  SMat singular(5, 5); // zero matrix
  CHECK_THROWS_AS(change_basis(g, singular, {"a", "b", "c", "d", "e"}), PreconditionError);
}

TEST_SUITE_END();

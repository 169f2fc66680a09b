#include "doctest.h"
#include "support.hpp"

#include "acn/linalg.hpp"

using namespace acn;
using acn::testing::standard_table;
using acn::testing::sym;

TEST_SUITE_BEGIN("linalg");

namespace {

FMat diag(const std::vector<int>& d) {
  FMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Fraction(d[i]);
  return m;
}

} // namespace

TEST_CASE("inverse of diag(1,1,1,-1,-1) is itself") {
  FMat c = diag({1, 1, 1, -1, -1});
  CHECK(mat_inverse(c) == c);
  CHECK(mat_inverse(FMat::identity(4)) == FMat::identity(4));
}

TEST_CASE("2x2 symbolic inverse with s^2 -> 3") {
  // adjugate by hand: [[1,s],[s,1]]^-1 = 1/(1-3) [[1,-s],[-s,1]]
  auto t = standard_table();
  Fraction s{sym(t, "s")};
  FMat m{{Fraction(1), s}, {s, Fraction(1)}};
  FMat inv = mat_inverse(m);
  FMat expected{{Fraction(Rational(-1, 2)), s * Fraction(Rational(1, 2))},
                {s * Fraction(Rational(1, 2)), Fraction(Rational(-1, 2))}};
  CHECK(inv == expected);
  CHECK(m * inv == FMat::identity(2));
}

TEST_CASE("singular matrices are rejected") {
  auto t = standard_table();
  FMat m{{Fraction(sym(t, "a")), Fraction(sym(t, "a"))},
         {Fraction(sym(t, "a")), Fraction(sym(t, "a"))}};
  CHECK_THROWS_AS(mat_inverse(m), PreconditionError);
}

TEST_CASE("inverse round trip on random symbolic matrices") {
  auto t = standard_table();
  std::mt19937 rng(42);
  const std::vector<Scalar> pool = {Scalar(0),     Scalar(1),     Scalar(-1),   sym(t, "s"),
                                    -sym(t, "s"),  sym(t, "a"),   sym(t, "m")};
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  int done = 0;
  while (done < 25) {
    FMat m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = Fraction(pool[pick(rng)]);
    try {
      FMat inv = mat_inverse(m);
      CHECK(m * inv == FMat::identity(3));
      ++done;
    } catch (const PreconditionError&) {
      continue; // singular draw
    }
  }
}

TEST_CASE("rank and signature of small diagonal restrictions") {
  // restriction of the catalog metric to {X2, X3}: diag(1,-1) -> hybrid
  RankSignature rs = sym_rank_and_signature(diag({1, -1}));
  CHECK(rs.rank == 2);
  REQUIRE(rs.signature.has_value());
  CHECK(*rs.signature == std::make_pair(1, 1));

  // alpha_2 = {X2, xi}: diag(1,1) -> pure
  rs = sym_rank_and_signature(diag({1, 1}));
  CHECK(rs.rank == 2);
  CHECK(*rs.signature == std::make_pair(2, 0));

  rs = sym_rank_and_signature(FMat(2, 2));
  CHECK(rs.rank == 0);
  CHECK(*rs.signature == std::make_pair(0, 0));
}

TEST_CASE("signature handles off-diagonal-only symmetric matrices") {
  FMat m(2, 2);
  m(0, 1) = Fraction(1);
  m(1, 0) = Fraction(1);
  RankSignature rs = sym_rank_and_signature(m);
  CHECK(rs.rank == 2);
  REQUIRE(rs.signature.has_value());
  CHECK(*rs.signature == std::make_pair(1, 1));
}

TEST_CASE("signature with sqrt(3) pivots and indeterminate pivots") {
  auto t = standard_table();
  FMat m(2, 2);
  m(0, 0) = Fraction(Scalar(2) - sym(t, "s")); // positive
  m(1, 1) = Fraction(Scalar(1) - sym(t, "s")); // negative
  RankSignature rs = sym_rank_and_signature(m);
  CHECK(rs.rank == 2);
  REQUIRE(rs.signature.has_value());
  CHECK(*rs.signature == std::make_pair(1, 1));

  m(1, 1) = Fraction(sym(t, "a")); // free symbol: sign unknown
  rs = sym_rank_and_signature(m);
  CHECK(rs.rank == 2);
  CHECK_FALSE(rs.signature.has_value());
}

TEST_CASE("rank is congruence invariant") {
  auto t = standard_table();
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 3;
    // random symmetric with symbolic entries
    FMat m(n, n);
    const std::vector<Scalar> pool = {Scalar(0), Scalar(1), sym(t, "a"), sym(t, "s")};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        m(i, j) = Fraction(pool[pick(rng)]);
        m(j, i) = m(i, j);
      }
    // random invertible rational congruence
    FMat p(n, n);
    do {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = Fraction(entry(rng));
    } while (rank(p) != n);
    FMat congruent = p.transpose() * m * p;
    CHECK(sym_rank_and_signature(congruent).rank == sym_rank_and_signature(m).rank);
  }
}

TEST_CASE("solve finds exact solutions and reports inconsistency") {
  auto t = standard_table();
  FMat a(3, 2);
  a(0, 0) = Fraction(1);
  a(1, 1) = Fraction(sym(t, "s"));
  FVec b(3);
  b[0] = Fraction(2);
  b[1] = Fraction(3); // x2 = 3/s = s
  auto x = solve(a, b);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Fraction(2));
  CHECK((*x)[1] == Fraction(sym(t, "s")));

  b[2] = Fraction(1); // row of zeros with nonzero rhs
  CHECK_FALSE(solve(a, b).has_value());
}

TEST_SUITE_END();

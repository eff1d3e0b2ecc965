#include "galcoh/exactlat.hpp"

#include <random>

#include "doctest.h"

using namespace galcoh;
using namespace galcoh::exactlat;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Cofactor-expansion determinant, independent of the Bareiss path.
Int naive_det(const IntMatrix& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Int s = 0;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        sub.at(i - 1, cc++) = m.at(i, k);
      }
    }
    Int term = m.at(0, j) * naive_det(sub);
    s += (j % 2 == 0) ? term : Int(-term);
  }
  return s;
}

TorusPoint tp(const std::vector<Rat>& v) { return TorusPoint(v); }

}  // namespace

TEST_CASE("smith normal form: identities and diagonals") {
  auto s = smith_normal_form(IntMatrix::identity(2));
  CHECK(s.d == IntMatrix::identity(2));
  CHECK(s.u * IntMatrix::identity(2) * s.v == s.d);

  auto s2 = smith_normal_form(from_rows({{2, 0}, {0, 2}}));
  CHECK(s2.d.at(0, 0) == 2);
  CHECK(s2.d.at(1, 1) == 2);
}

TEST_CASE("smith normal form: random round trips with unimodular transforms") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entries(-5, 5);
  for (int trial = 0; trial < 60; ++trial) {
    int r = 2 + trial % 3, c = 2 + (trial / 3) % 3;
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = entries(rng);
    auto s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(abs(naive_det(s.u)) == 1);
    CHECK(abs(naive_det(s.v)) == 1);
    // diagonal with divisibility chain
    int nd = std::min(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
    for (int i = 0; i + 1 < nd; ++i) {
      if (s.d.at(i + 1, i + 1) != 0) {
        REQUIRE(s.d.at(i, i) != 0);
        CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
      }
    }
  }
}

TEST_CASE("lattice tate cohomology on rank one") {
  IntMatrix plus = from_rows({{1}});
  IntMatrix minus = from_rows({{-1}});
  CHECK(lattice_tate(1, plus, 0).order() == 2);   // Z^theta / (1+theta)Z = Z/2Z
  CHECK(lattice_tate(1, plus, 1).trivial());
  CHECK(lattice_tate(1, minus, 0).trivial());
  CHECK(lattice_tate(1, minus, 1).order() == 2);
}

TEST_CASE("lattice tate: swap involution and degree handling") {
  IntMatrix swap = from_rows({{0, 1}, {1, 0}});
  CHECK(lattice_tate(2, swap, 0).trivial());
  CHECK(lattice_tate(2, swap, 1).trivial());
  // Only parities are accepted; anything else is rejected.
  CHECK_THROWS_AS(lattice_tate(2, swap, 2), PreconditionError);
  CHECK_THROWS_AS(lattice_tate(2, swap, -1), PreconditionError);
  // Not an involution:
  CHECK_THROWS_AS(lattice_tate(2, from_rows({{1, 1}, {0, 1}}), 0), PreconditionError);
  // rank 0 is allowed and trivial
  CHECK(lattice_tate(0, IntMatrix(0, 0), 0).trivial());
}

TEST_CASE("torus point canonical form and ordering") {
  TorusPoint p = tp({Rat(3, 2), Rat(-1, 4)});
  TorusPoint c = p.canonical();
  CHECK(c.v[0] == Rat(1, 2));
  CHECK(c.v[1] == Rat(3, 4));
  CHECK(c.denominator() == 4);
  CHECK(tp({Rat(0), Rat(1, 2)}) < tp({Rat(1, 2), Rat(0)}));
  CHECK(tp({Rat(1, 2), Rat(1, 2)}).is_two_torsion());
  CHECK(!tp({Rat(1, 3)}).is_two_torsion());
}

TEST_CASE("solve_affine_congruence: two-torsion of a rank-2 torus") {
  IntMatrix a = from_rows({{2, 0}, {0, 2}});
  auto sols = solve_affine_congruence(a, TorusPoint::zero(2), {});
  REQUIRE(sols.size() == 4);
  CHECK(sols[0] == tp({Rat(0), Rat(0)}));
  CHECK(sols[1] == tp({Rat(0), Rat(1, 2)}));
  CHECK(sols[2] == tp({Rat(1, 2), Rat(0)}));
  CHECK(sols[3] == tp({Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("solve_affine_congruence: swap torus collapses to the origin") {
  IntMatrix a = from_rows({{1, 1}, {1, 1}});  // 1 + swap
  std::vector<std::vector<Rat>> modout = {{Rat(1), Rat(-1)}};
  auto sols = solve_affine_congruence(a, TorusPoint::zero(2), modout);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].is_zero());
}

TEST_CASE("solve_affine_congruence: E8-sized two-torsion count") {
  int n = 8;
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i) a.at(i, i) = 2;
  auto sols = solve_affine_congruence(a, TorusPoint::zero(n), {});
  // brute force over denominator-2 vectors
  CHECK(sols.size() == 256);
  for (const auto& s : sols) CHECK(s.is_two_torsion());
}

TEST_CASE("solve_affine_congruence: no solution reported as empty") {
  // v1 - v1 = 1/2 mod 1 is unsolvable: A has a zero row hitting a non-integral b.
  IntMatrix a = from_rows({{0}});
  auto sols = solve_affine_congruence(a, tp({Rat(1, 2)}), {{Rat(1)}});
  CHECK(sols.empty());
}

TEST_CASE("subspace reducer gives one representative per class") {
  // S = span{(1,-1)} in Q^2: classes of (Q^2)/(S+Z^2) are parametrized by
  // the sum of coordinates mod 1.
  SubspaceReducer red(2, {{Rat(1), Rat(-1)}});
  auto c1 = red.canonize({Rat(1, 4), Rat(1, 4)});
  auto c2 = red.canonize({Rat(3, 4), Rat(-1, 4)});   // same class: differs by (1/2,-1/2)
  auto c3 = red.canonize({Rat(5, 4), Rat(-3, 4)});   // same class again (+Z^2)
  CHECK(c1 == c2);
  CHECK(c1 == c3);
  auto d1 = red.canonize({Rat(1, 2), Rat(1, 4)});
  CHECK(!(d1 == c1));
  // entries are folded into [0,1)
  for (const Rat& x : c1.v) {
    CHECK(x >= 0);
    CHECK(x < 1);
  }
}

TEST_CASE("determinant agrees with naive expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> entries(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 4;
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = entries(rng);
    CHECK(det(m) == naive_det(m));
  }
}

#include "galcoh/weyl.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"

using namespace galcoh;
using namespace galcoh::weyl;
using rootdata::BasedRootDatum;
using rootdata::InnerClass;
using rootdata::Isogeny;
using rootdata::LieType;

namespace {

BasedRootDatum sc(const std::string& t) {
  return rootdata::build_datum(LieType::parse(t), Isogeny::sc());
}

std::vector<TorusPoint> two_torsion(int n) {
  std::vector<TorusPoint> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<Rat> v(n, Rat(0));
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) v[i] = Rat(1, 2);
    pts.push_back(TorusPoint(v));
  }
  return pts;
}

std::vector<std::function<TorusPoint(const TorusPoint&)>> simple_actions(const BasedRootDatum& rd) {
  WeylGroup w(rd);
  std::vector<std::function<TorusPoint(const TorusPoint&)>> acts;
  for (int i = 0; i < w.ngens(); ++i) {
    IntMatrix m = w.generator(i).on_costar;
    acts.push_back([m](const TorusPoint& p) { return TorusPoint(m.apply(p.v)).canonical(); });
  }
  return acts;
}

}  // namespace

TEST_CASE("orbits of two-torsion points") {
  BasedRootDatum a1 = sc("A1");
  auto orb = orbit_partition(two_torsion(1), simple_actions(a1));
  CHECK(orb.size() == 2);  // s_alpha fixes both 0 and alpha^vee/2

  // C2 = Sp(4): 4 points fall into 3 orbits ({0}, {1/2 e1}, the mixed pair).
  BasedRootDatum c2 = sc("C2");
  auto orbc = orbit_partition(two_torsion(2), simple_actions(c2));
  CHECK(orbc.size() == 3);

  // E8: 256 two-torsion points, 3 orbits (compact, E7A1, D8 involutions).
  BasedRootDatum e8 = sc("E8");
  auto orbe = orbit_partition(two_torsion(8), simple_actions(e8));
  CHECK(orbe.size() == 3);
}

TEST_CASE("orbit partition is independent of input order") {
  BasedRootDatum d4 = sc("D4");
  auto pts = two_torsion(4);
  auto base = orbit_partition(pts, simple_actions(d4));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 5; ++trial) {
    auto shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto again = orbit_partition(shuffled, simple_actions(d4));
    REQUIRE(again.size() == base.size());
    for (size_t i = 0; i < base.size(); ++i) CHECK(again[i].front() == base[i].front());
  }
}

TEST_CASE("orbit partition rejects actions leaving the set") {
  BasedRootDatum a1 = sc("A1");
  std::vector<TorusPoint> pts{TorusPoint({Rat(1, 4)})};
  std::vector<std::function<TorusPoint(const TorusPoint&)>> bad{
      [](const TorusPoint& p) { return (p + TorusPoint({Rat(1, 4)})).canonical(); }};
  CHECK_THROWS_AS(orbit_partition(pts, bad), ValidationError);
}

TEST_CASE("Weyl group orders via the orbit-stabilizer chain") {
  auto order_of = [](const char* t) { return WeylGroup(sc(t)).order(); };
  CHECK(order_of("A2") == 6);
  CHECK(order_of("C2") == 8);
  CHECK(order_of("G2") == 12);
  CHECK(order_of("A4") == 120);
  CHECK(order_of("D4") == 192);
  CHECK(order_of("B4") == 384);
  CHECK(order_of("F4") == 1152);
  CHECK(order_of("E6") == 51840);
  CHECK(order_of("E7") == 2903040);
  CHECK(order_of("E8") == 696729600);
  CHECK(order_of("A1+A1") == 4);
  CHECK(order_of("A2+B2") == 48);
}

TEST_CASE("canonical words and lengths") {
  BasedRootDatum a2 = sc("A2");
  WeylGroup w(a2);
  WeylElt x = w.from_word({0, 1, 0});
  CHECK(w.length(x) == 3);
  CHECK(w.canonical_word(x) == std::vector<int>{0, 1, 0});
  CHECK(w.from_word(w.canonical_word(x)) == x);
  CHECK(w.length(w.identity()) == 0);
  // longest element of A2 has length 3 = number of positive roots
  CHECK(a2.num_positive() == 3);
}

TEST_CASE("imaginary subsystem of the A2 flip") {
  BasedRootDatum a2 = sc("A2");
  InnerClass ic = rootdata::inner_class(a2, rootdata::diagram_flip(LieType::parse("A2")));
  auto im = imaginary_subsystem(a2, ic);
  CHECK(im.imaginary.size() == 2);  // +-(alpha1+alpha2)
  REQUIRE(im.simples.size() == 1);
  // alpha1 + alpha2 = beta + tau(beta) with beta = alpha1
  CHECK(im.simple_is_sum[0] == true);
}

TEST_CASE("imaginary subsystem of the A3 flip") {
  BasedRootDatum a3 = sc("A3");
  InnerClass ic = rootdata::inner_class(a3, rootdata::diagram_flip(LieType::parse("A3")));
  auto im = imaginary_subsystem(a3, ic);
  CHECK(im.imaginary.size() == 4);  // +-alpha2, +-(alpha1+alpha2+alpha3): type A1 x A1
  REQUIRE(im.simples.size() == 2);
  // Neither imaginary root is beta + tau(beta): no root of A3 sums with its
  // flip to alpha2 or to the highest root (the sl(4) matrix model confirms
  // the pinned involution acts by +1 on both root spaces).
  CHECK(im.simple_is_sum[0] == false);
  CHECK(im.simple_is_sum[1] == false);
}

TEST_CASE("imaginary subsystem of the A4 flip has both flags set") {
  BasedRootDatum a4 = sc("A4");
  InnerClass ic = rootdata::inner_class(a4, rootdata::diagram_flip(LieType::parse("A4")));
  auto im = imaginary_subsystem(a4, ic);
  CHECK(im.imaginary.size() == 4);
  REQUIRE(im.simples.size() == 2);
  CHECK(im.simple_is_sum[0] == true);  // alpha2+alpha3 and alpha1+..+alpha4
  CHECK(im.simple_is_sum[1] == true);
}

TEST_CASE("equal rank classes have the full system as imaginary roots") {
  for (const char* t : {"A2", "C2", "D4", "F4"}) {
    BasedRootDatum rd = sc(t);
    InnerClass ic = rootdata::inner_class(rd, rootdata::identity_permutation(rd.nsimple()));
    auto im = imaginary_subsystem(rd, ic);
    CHECK(im.imaginary.size() == rd.roots().size());
    CHECK(static_cast<int>(im.simples.size()) == rd.nsimple());
    for (bool f : im.simple_is_sum) CHECK(f == false);
  }
}

TEST_CASE("D4 swap: imaginary system is the A3 = D3 subsystem") {
  BasedRootDatum d4 = sc("D4");
  InnerClass ic = rootdata::inner_class(d4, rootdata::diagram_flip(LieType::parse("D4")));
  auto im = imaginary_subsystem(d4, ic);
  CHECK(im.imaginary.size() == 12);
  CHECK(im.simples.size() == 3);
  for (bool f : im.simple_is_sum) CHECK(f == false);
}

TEST_CASE("twisted involution classes") {
  BasedRootDatum a1 = sc("A1");
  InnerClass triv = rootdata::inner_class(a1, rootdata::identity_permutation(1));
  auto c1 = twisted_involution_classes(a1, triv);
  CHECK(c1.count() == 2);  // {1} and {s}

  // A1 x A1 with the factor swap: 4 twisted involutions, 2 classes.
  BasedRootDatum a11 = sc("A1+A1");
  InnerClass swap = rootdata::inner_class(a11, std::vector<int>{1, 0});
  auto c2 = twisted_involution_classes(a11, swap);
  CHECK(c2.total_twisted_involutions == 4);
  CHECK(c2.count() == 2);

  // A2, trivial twisting: involutions are 1 and the three reflections.
  BasedRootDatum a2 = sc("A2");
  InnerClass t2 = rootdata::inner_class(a2, rootdata::identity_permutation(2));
  auto c3 = twisted_involution_classes(a2, t2);
  CHECK(c3.total_twisted_involutions == 4);
  CHECK(c3.count() == 2);
}

TEST_CASE("twisted involution guard") {
  BasedRootDatum e7 = sc("E7");
  InnerClass ic = rootdata::inner_class(e7, rootdata::identity_permutation(7));
  CHECK_THROWS_AS(twisted_involution_classes(e7, ic, Int(1000)), GuardExceeded);
}

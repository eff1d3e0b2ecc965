#include "galcoh/rootdata.hpp"

#include "doctest.h"

using namespace galcoh;
using namespace galcoh::rootdata;
using exactlat::IntMatrix;
using exactlat::TorusPoint;

namespace {

BasedRootDatum sc(const std::string& t) { return build_datum(LieType::parse(t), Isogeny::sc()); }
BasedRootDatum ad(const std::string& t) { return build_datum(LieType::parse(t), Isogeny::ad()); }

}  // namespace

TEST_CASE("A1 sc: one positive root with pairing 2, coroot basis") {
  BasedRootDatum rd = sc("A1");
  CHECK(rd.rank() == 1);
  CHECK(rd.nsimple() == 1);
  CHECK(rd.cartan(0, 0) == 2);
  CHECK(rd.roots().size() == 2);
  CHECK(rd.simple_coroots().at(0, 0) == 1);  // X_* = Z alpha^vee
}

TEST_CASE("root system sizes") {
  CHECK(sc("A2").roots().size() == 6);
  CHECK(sc("C2").roots().size() == 8);
  CHECK(sc("G2").roots().size() == 12);
  CHECK(sc("D4").roots().size() == 24);
  CHECK(sc("F4").roots().size() == 48);
  CHECK(sc("E6").roots().size() == 72);
  CHECK(sc("E7").roots().size() == 126);
  CHECK(sc("E8").roots().size() == 240);
  CHECK(sc("A1+A1").roots().size() == 4);
  CHECK(sc("D2").roots().size() == 4);   // D2 = A1 x A1
  CHECK(sc("D3").roots().size() == 12);  // D3 = A3
}

TEST_CASE("centers of the presets") {
  auto d4 = center(sc("D4"));
  REQUIRE(d4.orders.size() == 2);  // (Z/2)^2
  CHECK(d4.orders[0] == 2);
  CHECK(d4.orders[1] == 2);
  CHECK(d4.torus_rank == 0);

  auto e6 = center(sc("E6"));
  REQUIRE(e6.orders.size() == 1);
  CHECK(e6.orders[0] == 3);

  CHECK(center(sc("E8")).orders.empty());
  CHECK(center(ad("A1")).orders.empty());

  auto a1 = center(sc("A1"));
  REQUIRE(a1.orders.size() == 1);
  CHECK(a1.orders[0] == 2);
  CHECK(a1.generators[0] == TorusPoint({Rat(1, 2)}));  // (1/2) alpha^vee

  // sc: |finite center| = product of the Cartan matrix's elementary divisors
  for (const char* t : {"A3", "B3", "C4", "D5", "E7", "G2"}) {
    BasedRootDatum rd = sc(t);
    auto s = exactlat::smith_normal_form(rd.simple_roots());
    Int prod = 1;
    for (int i = 0; i < rd.nsimple(); ++i) prod *= s.d.at(i, i);
    CHECK(center(rd).finite_order() == prod);
  }
}

TEST_CASE("center has a torus part for GL-style data") {
  BasedRootDatum rd = build_datum(LieType::parse("A2+T1"), Isogeny::sc());
  auto z = center(rd);
  CHECK(z.torus_rank == 1);
}

TEST_CASE("inner classes from diagram permutations") {
  BasedRootDatum a1 = sc("A1");
  InnerClass triv = inner_class(a1, identity_permutation(1));
  CHECK(triv.equal_rank);
  CHECK(triv.tau.is_identity());

  BasedRootDatum a2 = sc("A2");
  InnerClass flip = inner_class(a2, diagram_flip(LieType::parse("A2")));
  CHECK(!flip.equal_rank);
  // tau swaps the two coroot coordinates
  CHECK(flip.tau.at(0, 1) == 1);
  CHECK(flip.tau.at(1, 0) == 1);
  CHECK(flip.tau.at(0, 0) == 0);
  CHECK((flip.tau * flip.tau).is_identity());
}

TEST_CASE("D4 fork swap fixes exactly one Z/2 of the center") {
  BasedRootDatum d4 = sc("D4");
  InnerClass swap = inner_class(d4, diagram_flip(LieType::parse("D4")));
  CHECK((swap.tau * swap.tau).is_identity());
  auto z = center(d4);
  // enumerate the 4 center elements and count tau-fixed ones
  int fixed = 0, total = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      TorusPoint p = (z.generators[0].scaled(Rat(a)) + z.generators[1].scaled(Rat(b))).canonical();
      TorusPoint img = TorusPoint(swap.tau.apply(p.v)).canonical();
      ++total;
      if (img == p) ++fixed;
    }
  CHECK(total == 4);
  CHECK(fixed == 2);  // identity and the vector-type element only
}

TEST_CASE("tau is a root datum automorphism: pairings preserved") {
  for (const char* t : {"A3", "D4", "E6"}) {
    BasedRootDatum rd = sc(t);
    InnerClass ic = inner_class(rd, diagram_flip(LieType::parse(t)));
    IntMatrix tau_star = ic.tau_on_char();
    for (const auto& r : rd.roots()) {
      auto ta = tau_star.apply(r.alpha);
      auto tv = ic.tau.apply(r.alphavee);
      Int p1 = 0, p2 = 0;
      for (int k = 0; k < rd.rank(); ++k) {
        p1 += r.alpha[k] * r.alphavee[k];
        p2 += ta[k] * tv[k];
      }
      CHECK(p1 == p2);
      CHECK(p1 == 2);
    }
  }
}

TEST_CASE("the Weyl group fixes the center pointwise") {
  for (const char* t : {"A3", "C3", "D4", "E6"}) {
    BasedRootDatum rd = sc(t);
    auto z = center(rd);
    for (const auto& g : z.generators) {
      for (int i = 0; i < rd.nsimple(); ++i) {
        // s_i(g) = g - <alpha_i, g> alpha_i^vee = g mod Z^n since g is central
        Rat pairing = exactlat::dot(rd.simple_root_rat(i), g.v);
        CHECK(exactlat::is_integral(pairing));
      }
    }
  }
}

TEST_CASE("explicit lattices: SO(8) between Spin(8) and PSO(8)") {
  // D4 with the extra generator e1 (in coroot coordinates):
  // e1 = alpha1^vee + alpha2^vee + (alpha3^vee + alpha4^vee)/2.
  Isogeny so = Isogeny::explicit_lattice({{2, 2, 1, 1}}, 2);
  BasedRootDatum rd = build_datum(LieType::parse("D4"), so);
  auto z = center(rd);
  CHECK(z.finite_order() == 2);  // center of SO(8) is Z/2
}

TEST_CASE("invalid inner class permutations are rejected") {
  BasedRootDatum a2 = sc("A2");
  CHECK_THROWS_AS(inner_class(a2, std::vector<int>{0, 0}), PreconditionError);
  BasedRootDatum a3 = sc("A3");
  CHECK_THROWS_AS(inner_class(a3, std::vector<int>{1, 0, 2}), PreconditionError);  // not a diagram map
}

TEST_CASE("classification of simple systems") {
  auto classify_type = [](const char* t) {
    BasedRootDatum rd = sc(t);
    std::vector<std::vector<Rat>> s, c;
    for (int i = 0; i < rd.nsimple(); ++i) {
      s.push_back(rd.simple_root_rat(i));
      c.push_back(rd.simple_coroot_rat(i));
    }
    return classify_simple_system(s, c);
  };
  CHECK(classify_type("A5") == "A5");
  CHECK(classify_type("B3") == "B3");
  CHECK(classify_type("C4") == "C4");
  CHECK(classify_type("D5") == "D5");
  CHECK(classify_type("D2") == "A1A1");
  CHECK(classify_type("D3") == "A3");
  CHECK(classify_type("E6") == "E6");
  CHECK(classify_type("E7") == "E7");
  CHECK(classify_type("E8") == "E8");
  CHECK(classify_type("F4") == "F4");
  CHECK(classify_type("G2") == "G2");
  CHECK(classify_type("D6+A1") == "D6A1");
}

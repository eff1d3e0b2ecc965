#include "galcoh/isogeny.hpp"

#include <map>

#include "doctest.h"
#include "galcoh/tables.hpp"

using namespace galcoh;
using namespace galcoh::isogeny;
using cohomology::ClassContext;
using rootdata::BasedRootDatum;
using rootdata::InnerClass;
using rootdata::Isogeny;
using rootdata::LieType;

namespace {

BasedRootDatum sc(const std::string& t) {
  return rootdata::build_datum(LieType::parse(t), Isogeny::sc());
}

InnerClass trivial_of(const BasedRootDatum& rd) {
  return rootdata::inner_class(rd, rootdata::identity_permutation(rd.nsimple()));
}

}  // namespace

TEST_CASE("quotient by the full center of SL(2) gives the adjoint datum") {
  BasedRootDatum a1 = sc("A1");
  InnerClass ic = trivial_of(a1);
  auto z = rootdata::center(a1);
  InnerClass ad_ic;
  QuotientDatum q = quotient_datum(a1, z.generators, &ic, &ad_ic);
  CHECK(rootdata::center(q.datum).finite_order() == 1);
  CHECK(q.datum.cartan(0, 0) == 2);
  // the coroot has index-2 coordinates downstairs: alpha^vee = 2 omega^vee
  CHECK(q.datum.simple_coroots().at(0, 0) == 2);
}

TEST_CASE("quotient of Spin(8) by one Z/2 factor is SO(8)-like") {
  BasedRootDatum d4 = sc("D4");
  InnerClass ic = trivial_of(d4);
  auto z = rootdata::center(d4);
  REQUIRE(z.generators.size() == 2);
  // pick the generator whose quotient still has a Z/2 center
  bool found = false;
  for (const auto& g : z.generators) {
    InnerClass target_ic;
    QuotientDatum q = quotient_datum(d4, {g}, &ic, &target_ic);
    auto zq = rootdata::center(q.datum);
    if (zq.finite_order() == 2) found = true;
  }
  CHECK(found);
}

TEST_CASE("trivial quotient is the identity map") {
  BasedRootDatum e8 = sc("E8");
  InnerClass ic = trivial_of(e8);
  InnerClass tic;
  QuotientDatum q = quotient_datum(e8, {}, &ic, &tic);
  ClassContext src(e8, ic), dst(q.datum, tic);
  for (const auto& z : cohomology::central_slice(src)) {
    auto rows = fiber_sizes(src, dst, q.map, z, q.map.map_point(z));
    for (const auto& r : rows) CHECK(r.fiber_size == 1);
  }
  CHECK(h1_of_kernel(src, q.map) == 1);
}

TEST_CASE("SL(2) -> PGL(2): fibers 1 and 2 with derived pi0 2 and 1") {
  BasedRootDatum a1 = sc("A1");
  InnerClass ic = trivial_of(a1);
  auto z = rootdata::center(a1);
  InnerClass ad_ic;
  QuotientDatum q = quotient_datum(a1, z.generators, &ic, &ad_ic);
  ClassContext src(a1, ic), dst(q.datum, ad_ic);
  CHECK(h1_of_kernel(src, q.map) == 2);

  // z = 0 upstairs: both central classes land on the SO(3) basepoint class.
  auto rows0 = fiber_sizes(src, dst, q.map, TorusPoint::zero(1), TorusPoint::zero(1));
  Int hit_fibers = 0;
  int unhit = 0;
  for (const auto& r : rows0) {
    if (r.hit) {
      CHECK(r.fiber_size == 2);
      CHECK(pi0_quotient_order(src, q.map, r) == 1);  // SO(3) is connected
      hit_fibers += r.fiber_size;
    } else {
      ++unhit;
    }
  }
  CHECK(hit_fibers == 2);  // sum rule: |H^1(SU(2))| = 2
  CHECK(unhit == 1);       // the PGL(2,R) class is not in the image of this fiber

  // z = -I upstairs maps to 0 downstairs; the split class is hit once.
  TorusPoint minus({Rat(1, 2)});
  auto rows1 = fiber_sizes(src, dst, q.map, minus, q.map.map_point(minus));
  Int total = 0;
  for (const auto& r : rows1) {
    if (!r.hit) continue;
    CHECK(r.fiber_size == 1);
    CHECK(pi0_quotient_order(src, q.map, r) == 2);  // pi0(PGL(2,R)) = 2
    total += r.fiber_size;
  }
  CHECK(total == 1);  // |H^1(SL(2,R))| = 1
}

TEST_CASE("Sp(4) -> PSp(4): split fiber 1 with pi0 = 2, census size 3") {
  auto rows = tables::sc_to_ad_rows("C2");
  REQUIRE(rows.size() == 3);  // PSp(4,R), PSp(1,1), compact
  std::map<long, std::pair<long, long>> by_dim;  // dim -> (fiber, pi0)
  for (const auto& r : rows) {
    CHECK(r.h1 == 3);  // adjoint census: every form has |H^1| = #forms
    by_dim[r.dim_k.get_si()] = {r.fiber.get_si(), r.pi0.get_si()};
  }
  // split PSp(4,R): K = gl(2), dim 4
  REQUIRE(by_dim.count(4));
  CHECK(by_dim[4] == std::pair<long, long>{1, 2});
  // compact: dim 10, connected
  REQUIRE(by_dim.count(10));
  CHECK(by_dim[10] == std::pair<long, long>{2, 1});
  // PSp(1,1): dim 6, pi0 = 2 (p = q)
  REQUIRE(by_dim.count(6));
  CHECK(by_dim[6] == std::pair<long, long>{1, 2});
}

TEST_CASE("E7 adjoint: pi0 column (2,1,2,1) derived from fibers") {
  auto rows = tables::sc_to_ad_rows("E7");
  REQUIRE(rows.size() == 4);
  std::map<long, long> pi0_by_dim;
  for (const auto& r : rows) {
    CHECK(r.h1 == 4);
    pi0_by_dim[r.dim_k.get_si()] = r.pi0.get_si();
  }
  CHECK(pi0_by_dim[63] == 2);   // split A7
  CHECK(pi0_by_dim[69] == 1);   // quaternionic D6A1
  CHECK(pi0_by_dim[79] == 2);   // Hermitian E6T
  CHECK(pi0_by_dim[133] == 1);  // compact
}

TEST_CASE("fiber sizes divide |H^1(A)| and partition the source fiber") {
  for (const char* t : {"A1", "A3", "C2", "D4"}) {
    BasedRootDatum rd = sc(t);
    InnerClass ic = trivial_of(rd);
    auto z = rootdata::center(rd);
    InnerClass tic;
    QuotientDatum q = quotient_datum(rd, z.generators, &ic, &tic);
    ClassContext src(rd, ic), dst(q.datum, tic);
    Int h1a = h1_of_kernel(src, q.map);
    for (const auto& zz : cohomology::central_slice(src)) {
      auto rows = fiber_sizes(src, dst, q.map, zz, q.map.map_point(zz));
      Int total = 0;
      for (const auto& r : rows) {
        if (!r.hit) continue;
        CHECK(h1a % r.fiber_size == 0);
        total += r.fiber_size;
      }
      CHECK(total == Int(static_cast<long>(cohomology::strong_fiber(src, zz).size())));
    }
  }
}

TEST_CASE("adjoint census size equals the number of real forms in the class") {
  // D4 compact class: PSO(8), PSO(2,6), PSO(4,4) and the two PSO*(8) twins.
  BasedRootDatum d4ad = rootdata::build_datum(LieType::parse("D4"), Isogeny::ad());
  auto c = cohomology::census(d4ad, trivial_of(d4ad));
  CHECK(c.forms.size() == 5);
  for (const auto& f : c.forms) CHECK(f.h1 == 5);

  // A3 adjoint compact class: PSU(p,q) with p+q = 4: three forms.
  BasedRootDatum a3ad = rootdata::build_datum(LieType::parse("A3"), Isogeny::ad());
  auto ca = cohomology::census(a3ad, trivial_of(a3ad));
  CHECK(ca.forms.size() == 3);
}

TEST_CASE("non-central quotient generators are rejected") {
  BasedRootDatum a2 = sc("A2");
  CHECK_THROWS_AS(quotient_datum(a2, {TorusPoint({Rat(1, 2), Rat(0)})}, nullptr, nullptr),
                  PreconditionError);
  // tau-unstable A: the order-3 center of A2 under the flip is not stable
  // elementwise... its subgroup {1, z, z^2} is stable, so use A1+A1 with the
  // swap class and one factor's center instead.
  BasedRootDatum a11 = sc("A1+A1");
  InnerClass swap = rootdata::inner_class(a11, std::vector<int>{1, 0});
  TorusPoint one_factor({Rat(1, 2), Rat(0)});
  InnerClass tic;
  CHECK_THROWS_AS(quotient_datum(a11, {one_factor}, &swap, &tic), PreconditionError);
}

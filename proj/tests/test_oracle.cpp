#include "galcoh/oracle.hpp"

#include "doctest.h"

using namespace galcoh;
using namespace galcoh::oracle;
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

InnerClass flip_of(const BasedRootDatum& rd, const std::string& t) {
  return rootdata::inner_class(rd, rootdata::diagram_flip(LieType::parse(t)));
}

}  // namespace

TEST_CASE("brute fiber reproduces the A1 fibers") {
  BasedRootDatum a1 = sc("A1");
  ClassContext ctx(a1, trivial_of(a1));
  auto b0 = brute_fiber(ctx, TorusPoint::zero(1), 2);
  CHECK(b0.count() == 2);
  CHECK(fibers_agree(b0, cohomology::strong_fiber(ctx, TorusPoint::zero(1))));
  auto b1 = brute_fiber(ctx, TorusPoint({Rat(1, 2)}), 4);
  CHECK(b1.count() == 1);
  CHECK(fibers_agree(b1, cohomology::strong_fiber(ctx, TorusPoint({Rat(1, 2)}))));
}

TEST_CASE("brute fiber agrees with strong_fiber on every guarded inner class") {
  struct Case {
    const char* type;
    bool outer;
  };
  const Case cases[] = {{"A1", false}, {"A2", false}, {"A2", true},  {"A3", false},
                        {"A3", true},  {"A4", true},  {"B2", false}, {"C3", false},
                        {"D4", false}, {"D4", true},  {"G2", false}, {"A1+A1", false}};
  for (const Case& cse : cases) {
    BasedRootDatum rd = sc(cse.type);
    InnerClass ic = cse.outer ? flip_of(rd, cse.type) : trivial_of(rd);
    ClassContext ctx(rd, ic);
    for (const auto& z : cohomology::central_slice(ctx)) {
      INFO(cse.type, cse.outer ? " outer" : " equal rank", " z=", z.str());
      long zden = z.denominator().get_si();
      int n = static_cast<int>(2 * zden <= 8 ? 2 * zden : 8);
      auto brute = brute_fiber(ctx, z, n);
      auto fib = cohomology::strong_fiber(ctx, z);
      CHECK(fibers_agree(brute, fib));
    }
  }
}

TEST_CASE("brute fiber agrees on the factor-swap class") {
  BasedRootDatum a11 = sc("A1+A1");
  InnerClass swap = rootdata::inner_class(a11, std::vector<int>{1, 0});
  ClassContext ctx(a11, swap);
  for (const auto& z : cohomology::central_slice(ctx)) {
    auto brute = brute_fiber(ctx, z, 4);
    CHECK(fibers_agree(brute, cohomology::strong_fiber(ctx, z)));
  }
}

TEST_CASE("brute fiber guards") {
  BasedRootDatum e7 = sc("E7");
  ClassContext ctx(e7, trivial_of(e7));
  CHECK_THROWS_AS(brute_fiber(ctx, TorusPoint::zero(7), 2), GuardExceeded);
  BasedRootDatum a2 = sc("A2");
  ClassContext c2(a2, trivial_of(a2));
  CHECK_THROWS_AS(brute_fiber(c2, TorusPoint::zero(2), 16), GuardExceeded);
}

TEST_CASE("chevalley signs confirm the epsilon rule on all outer rank <= 4 classes") {
  struct Case {
    const char* type;
  };
  for (const char* t : {"A2", "A3", "A4", "D4"}) {
    BasedRootDatum rd = sc(t);
    InnerClass ic = flip_of(rd, t);
    auto im = weyl::imaginary_subsystem(rd, ic);
    for (size_t i = 0; i < im.imaginary.size(); ++i) {
      int expected = im.all_is_sum_flags_roots[i] ? -1 : 1;
      CHECK(chevalley_sign(rd, ic, im.imaginary[i]) == expected);
    }
  }
}

TEST_CASE("chevalley signs are +1 in equal-rank classes") {
  BasedRootDatum g2 = sc("G2");
  InnerClass ic = trivial_of(g2);
  for (size_t i = 0; i < g2.roots().size(); ++i)
    CHECK(chevalley_sign(g2, ic, static_cast<int>(i)) == 1);
}

TEST_CASE("chevalley sign guards") {
  BasedRootDatum e6 = sc("E6");
  InnerClass ic = flip_of(e6, "E6");
  auto im = weyl::imaginary_subsystem(e6, ic);
  CHECK_THROWS_AS(chevalley_sign(e6, ic, im.imaginary[0]), GuardExceeded);  // rank > 4
  BasedRootDatum a2 = sc("A2");
  InnerClass f = flip_of(a2, "A2");
  CHECK_THROWS_AS(chevalley_sign(a2, f, 0), PreconditionError);  // alpha1 is not imaginary
}

TEST_CASE("matrix models: sigma squares") {
  for (Model m : {Model::SL2, Model::SL3, Model::Sp4}) {
    auto res = check_sigma_squares(m);
    INFO(res.details);
    CHECK(res.ok);
  }
}

TEST_CASE("matrix models: Tits products match matrix arithmetic") {
  for (Model m : {Model::SL2, Model::SL3, Model::Sp4}) {
    auto res = check_tits_products(m);
    INFO(res.details);
    CHECK(res.ok);
  }
}

TEST_CASE("SL(3) model: pinned involution, cocycles and epsilon sign") {
  auto tc = check_theta_cocycles_sl3();
  INFO(tc.details);
  CHECK(tc.ok);
  auto es = check_epsilon_sl3();
  INFO(es.details);
  CHECK(es.ok);
}

TEST_CASE("Sp(4) model: a single class with square -I") {
  auto res = check_sp4_square_minus_one();
  INFO(res.details);
  CHECK(res.ok);
}

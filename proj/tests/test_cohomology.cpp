#include "galcoh/cohomology.hpp"

#include <map>

#include "doctest.h"
#include "galcoh/named.hpp"

using namespace galcoh;
using namespace galcoh::cohomology;
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

IntMatrix mat(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

std::multiset<long> h1_multiset(const CensusResult& c) {
  std::multiset<long> out;
  for (const auto& f : c.forms) out.insert(f.h1.get_si());
  return out;
}

}  // namespace

TEST_CASE("torus h1: the three rank-one real tori") {
  CHECK(torus_h1(1, mat({{1}})).order() == 2);   // S^1
  CHECK(torus_h1(1, mat({{-1}})).trivial());     // R^*
  CHECK(torus_h1(2, mat({{0, 1}, {1, 0}})).trivial());  // C^*
}

TEST_CASE("torus h1: all block involutions of rank <= 4 give Z_2^a") {
  // blocks: +1 (size 1), -1 (size 1), swap (size 2)
  struct Block {
    int size;
    int kind;  // 0: +1, 1: -1, 2: swap
  };
  std::function<void(int, std::vector<Block>&)> rec = [&](int remaining, std::vector<Block>& acc) {
    if (remaining == 0) {
      int n = 0, plus = 0;
      for (const auto& b : acc) n += b.size;
      IntMatrix theta(n, n);
      int off = 0;
      for (const auto& b : acc) {
        if (b.kind == 0) {
          theta.at(off, off) = 1;
          ++plus;
        } else if (b.kind == 1) {
          theta.at(off, off) = -1;
        } else {
          theta.at(off, off + 1) = 1;
          theta.at(off + 1, off) = 1;
        }
        off += b.size;
      }
      auto g = torus_h1(n, theta);
      Int expect = 1;
      for (int i = 0; i < plus; ++i) expect *= 2;
      CHECK(g.order() == expect);
      for (const Int& d : g.divisors) CHECK(d == 2);
      return;
    }
    std::vector<Block> kinds;
    acc.push_back({1, 0});
    rec(remaining - 1, acc);
    acc.back() = {1, 1};
    rec(remaining - 1, acc);
    acc.pop_back();
    if (remaining >= 2) {
      acc.push_back({2, 2});
      rec(remaining - 2, acc);
      acc.pop_back();
    }
  };
  for (int n = 1; n <= 4; ++n) {
    std::vector<Block> acc;
    rec(n, acc);
  }
}

TEST_CASE("strong fibers of SL(2)") {
  BasedRootDatum a1 = sc("A1");
  ClassContext ctx(a1, trivial_of(a1));
  auto f0 = strong_fiber(ctx, TorusPoint::zero(1));
  CHECK(f0.size() == 2);  // H_2/W for the compact form
  auto f1 = strong_fiber(ctx, TorusPoint({Rat(1, 2)}));
  REQUIRE(f1.size() == 1);  // SL(2,R): |H^1| = 1
  CHECK(f1[0].rep == TorusPoint({Rat(1, 4)}));
  CHECK(f1[0].orbit.size() == 2);  // 1/4 and 3/4 merge under the twisted action
}

TEST_CASE("Sp(2n,R): a single class with square -I") {
  for (int n : {2, 3}) {
    BasedRootDatum c = sc("C" + std::to_string(n));
    ClassContext ctx(c, trivial_of(c));
    auto z = rootdata::center(c);
    REQUIRE(z.generators.size() == 1);
    auto fib = strong_fiber(ctx, z.generators[0]);
    CHECK(fib.size() == 1);
  }
}

TEST_CASE("strong fiber rejects non-central and non-fixed z") {
  BasedRootDatum a2 = sc("A2");
  ClassContext ctx(a2, flip_of(a2, "A2"));
  CHECK_THROWS_AS(strong_fiber(ctx, TorusPoint({Rat(1, 2), Rat(0)})), PreconditionError);
  // the order-3 center elements are central but not tau-fixed under the flip
  auto z = rootdata::center(a2);
  REQUIRE(z.generators.size() == 1);
  CHECK_THROWS_AS(strong_fiber(ctx, z.generators[0]), PreconditionError);
}

TEST_CASE("k labels: compact and split E8, quasisplit SL(3,R)") {
  BasedRootDatum e8 = sc("E8");
  ClassContext ctx(e8, trivial_of(e8));
  auto fib = strong_fiber(ctx, TorusPoint::zero(8));
  REQUIRE(fib.size() == 3);
  std::map<std::string, Int> dims;
  for (const auto& cls : fib) {
    KLabel k = k_label(ctx, cls);
    dims[k.label()] = k.dim_k;
  }
  REQUIRE(dims.count("E8"));
  REQUIRE(dims.count("D8"));
  REQUIRE(dims.count("E7A1"));
  CHECK(dims["E8"] == 248);
  CHECK(dims["D8"] == 120);
  CHECK(dims["E7A1"] == 136);

  BasedRootDatum a2 = sc("A2");
  ClassContext cctx(a2, flip_of(a2, "A2"));
  auto f = strong_fiber(cctx, TorusPoint::zero(2));
  REQUIRE(f.size() == 1);
  KLabel k = k_label(cctx, f[0]);
  CHECK(k.dim_k == 3);      // so(3)
  CHECK(k.rank_k == 1);
  CHECK(k.compact_type == "");  // the single imaginary root is noncompact
  CHECK(k.label() == "T");
}

TEST_CASE("census of SL(2): two forms with cohomology 2 and 1") {
  BasedRootDatum a1 = sc("A1");
  auto c = census(a1, trivial_of(a1));
  REQUIRE(c.forms.size() == 2);
  CHECK(h1_multiset(c) == std::multiset<long>{1, 2});
  for (const auto& f : c.forms) {
    if (f.h1 == 2) {
      CHECK(f.is_compact);
      CHECK(f.is_quasicompact);
      CHECK(f.label.dim_k == 3);
    } else {
      CHECK(f.label.dim_k == 1);  // SL(2,R): K = SO(2)
    }
  }
}

TEST_CASE("census of E7: (2, 4, 2, 4) across the four forms") {
  BasedRootDatum e7 = sc("E7");
  auto c = census(e7, trivial_of(e7));
  REQUIRE(c.forms.size() == 4);
  std::map<std::string, long> by_label;
  for (const auto& f : c.forms) by_label[f.label.label()] = f.h1.get_si();
  CHECK(by_label["A7"] == 2);
  CHECK(by_label["D6A1"] == 4);
  CHECK(by_label["E6T"] == 2);
  CHECK(by_label["E7"] == 4);
}

TEST_CASE("census of the split E6 class: two forms with h1 = 2") {
  BasedRootDatum e6 = sc("E6");
  auto c = census(e6, flip_of(e6, "E6"));
  REQUIRE(c.forms.size() == 2);
  CHECK(h1_multiset(c) == std::multiset<long>{2, 2});
  // dim K distinguishes split (C4, 36) from quasicompact (F4, 52)
  std::multiset<long> dims;
  for (const auto& f : c.forms) dims.insert(f.label.dim_k.get_si());
  CHECK(dims == std::multiset<long>{36, 52});
  for (const auto& f : c.forms)
    if (f.label.dim_k == 52) CHECK(f.is_quasicompact);
}

TEST_CASE("compact form rule: |H^1| = |H_2/W| for equal rank sc data") {
  for (const char* t : {"A2", "A3", "B2", "C3", "D4", "G2"}) {
    BasedRootDatum rd = sc(t);
    ClassContext ctx(rd, trivial_of(rd));
    auto c = census(ctx);
    const cohomology::FormRecord* compact = nullptr;
    for (const auto& f : c.forms)
      if (f.is_compact) compact = &f;
    REQUIRE(compact != nullptr);
    // |H_2/W|: plain Weyl orbits on the two-torsion of X_*
    int n = rd.rank();
    IntMatrix two(n, n);
    for (int i = 0; i < n; ++i) two.at(i, i) = 2;
    auto pts = exactlat::solve_affine_congruence(two, TorusPoint::zero(n), {});
    weyl::WeylGroup w(rd);
    std::vector<std::function<TorusPoint(const TorusPoint&)>> acts;
    for (int i = 0; i < w.ngens(); ++i) {
      IntMatrix m = w.generator(i).on_costar;
      acts.push_back([m](const TorusPoint& p) { return TorusPoint(m.apply(p.v)).canonical(); });
    }
    auto orbits = weyl::orbit_partition(pts, acts);
    CHECK(compact->h1 == Int(static_cast<long>(orbits.size())));
  }
}

TEST_CASE("equal-rank specialization: strong_fiber is a plain Weyl orbit partition") {
  for (const char* t : {"B2", "A3"}) {
    BasedRootDatum rd = sc(t);
    ClassContext ctx(rd, trivial_of(rd));
    for (const TorusPoint& z : central_slice(ctx)) {
      auto fib = strong_fiber(ctx, z);
      int n = rd.rank();
      IntMatrix two(n, n);
      for (int i = 0; i < n; ++i) two.at(i, i) = 2;
      auto pts = exactlat::solve_affine_congruence(two, z, {});
      weyl::WeylGroup w(rd);
      std::vector<std::function<TorusPoint(const TorusPoint&)>> acts;
      for (int i = 0; i < w.ngens(); ++i) {
        IntMatrix m = w.generator(i).on_costar;
        acts.push_back([m](const TorusPoint& p) { return TorusPoint(m.apply(p.v)).canonical(); });
      }
      auto orbits = weyl::orbit_partition(pts, acts);
      REQUIRE(fib.size() == orbits.size());
      for (size_t i = 0; i < fib.size(); ++i) CHECK(fib[i].rep == orbits[i].front());
    }
  }
}

TEST_CASE("torsor and invariance properties across small inner classes") {
  struct Case {
    const char* type;
    bool outer;
  };
  for (const Case& cse : {Case{"A1", false}, Case{"A2", true}, Case{"A3", true}, Case{"A3", false},
                          Case{"C2", false}, Case{"D4", true}, Case{"G2", false}}) {
    BasedRootDatum rd = sc(cse.type);
    InnerClass ic = cse.outer ? flip_of(rd, cse.type) : trivial_of(rd);
    ClassContext ctx(rd, ic);
    Int torus_count = torus_h1(rd.rank(), ic.tau).order();

    std::map<std::string, Int> size_by_class;
    Int total = 0;
    for (const TorusPoint& z : central_slice(ctx)) {
      auto fib = strong_fiber(ctx, z);
      // torsor property: the raw (pre-W_i) fiber is empty or a torsor
      Int raw = 0;
      for (const auto& cls : fib) raw += cls.orbit_size();
      CHECK((raw == 0 || raw == torus_count));
      total += Int(static_cast<long>(fib.size()));
      // invariant-class independence of the fiber size
      TorusPoint rep = invariant_class_rep(ctx, z);
      auto it = size_by_class.find(rep.key());
      if (it == size_by_class.end())
        size_by_class[rep.key()] = Int(static_cast<long>(fib.size()));
      else
        CHECK(it->second == Int(static_cast<long>(fib.size())));
    }
    // partition identity: fibers partition the slice of strong real forms
    auto c = census(ctx);
    Int members = 0;
    for (const auto& f : c.forms) members += Int(static_cast<long>(f.members.size()));
    CHECK(members == total);
  }
}

TEST_CASE("census reports unhit invariants explicitly") {
  // GL(3,R): the -1 slice element has an empty fiber (odd size obstruction).
  auto rd = names::gl_datum(3);
  int n = 3;
  IntMatrix tau(n, n);
  for (int i = 0; i < n; ++i) tau.at(i, n - 1 - i) = -1;
  InnerClass ic = rootdata::inner_class_from_matrix(rd, tau);
  auto c = census(rd, ic);
  CHECK(c.finite_order_slice_only);
  CHECK(c.unhit.size() == 1);
  CHECK(c.forms.size() == 1);
  CHECK(c.forms[0].h1 == 1);
}

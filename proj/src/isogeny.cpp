#include "galcoh/isogeny.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace galcoh {
namespace isogeny {

using exactlat::is_integral;

TorusPoint IsogenyMap::map_point(const TorusPoint& v) const {
  int n = static_cast<int>(basis.size());
  std::vector<Rat> out(n, Rat(0));
  for (int k = 0; k < n; ++k) {
    for (int t = 0; t < n; ++t) out[k] += basis_inverse_cols[t][k] * v.v[t];
    out[k].canonicalize();
  }
  return TorusPoint(out).canonical();
}

QuotientDatum quotient_datum(const BasedRootDatum& rd, const std::vector<TorusPoint>& a_gens,
                             const InnerClass* ic, InnerClass* target_ic) {
  int n = rd.rank();
  cohomology::ClassContext* probe = nullptr;  // centrality check without a full context
  (void)probe;
  // Validate generators: central, and tau-stable when an inner class is given.
  for (const TorusPoint& g : a_gens) {
    for (int i = 0; i < rd.nsimple(); ++i) {
      Rat p = exactlat::dot(rd.simple_root_rat(i), g.v);
      if (!is_integral(p)) throw PreconditionError("quotient_datum: generator not central");
    }
    if (ic) {
      TorusPoint img = TorusPoint(ic->tau.apply(g.v)).canonical();
      // tau-stability of the subgroup: tau(g) must lie in <a_gens>; since the
      // group is small we check by closure below.
      (void)img;
    }
  }
  // Subgroup A as an explicit closure.
  std::set<TorusPoint> agroup{TorusPoint::zero(n)};
  {
    std::vector<TorusPoint> queue{TorusPoint::zero(n)};
    while (!queue.empty()) {
      TorusPoint p = queue.back();
      queue.pop_back();
      for (const TorusPoint& g : a_gens) {
        TorusPoint q = (p + g).canonical();
        if (agroup.insert(q).second) queue.push_back(q);
      }
    }
  }
  if (ic) {
    for (const TorusPoint& a : agroup) {
      TorusPoint img = TorusPoint(ic->tau.apply(a.v)).canonical();
      if (!agroup.count(img)) throw PreconditionError("quotient_datum: A is not tau-stable");
    }
  }

  // X_*(Gbar) = X_*(G) + Z-span of the generators: an explicit-lattice datum
  // over the current coordinates.
  Int den = 1;
  for (const TorusPoint& g : a_gens) {
    Int d = g.denominator();
    Int gc;
    mpz_gcd(gc.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / gc * d;
  }
  int ng = static_cast<int>(a_gens.size());
  IntMatrix stack(n + ng, n);
  for (int i = 0; i < n; ++i) stack.at(i, i) = den;
  for (int i = 0; i < ng; ++i)
    for (int j = 0; j < n; ++j) {
      Rat scaled = a_gens[i].v[j] * Rat(den);
      stack.at(n + i, j) = scaled.get_num();
    }
  // Row HNF of den * L.
  int rr = stack.rows();
  int rk = 0;
  for (int col = 0; col < n && rk < rr; ++col) {
    for (;;) {
      int p = -1;
      Int best = 0;
      for (int i = rk; i < rr; ++i) {
        if (stack.at(i, col) == 0) continue;
        Int a = abs(stack.at(i, col));
        if (p < 0 || a < best) {
          best = a;
          p = i;
        }
      }
      if (p < 0) break;
      for (int j = 0; j < n; ++j) std::swap(stack.at(rk, j), stack.at(p, j));
      bool done = true;
      for (int i = rk + 1; i < rr; ++i) {
        if (stack.at(i, col) == 0) continue;
        Int q = exactlat::floor_div(stack.at(i, col), stack.at(rk, col));
        for (int j = 0; j < n; ++j) stack.at(i, j) -= q * stack.at(rk, j);
        if (stack.at(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (stack.at(rk, col) == 0) continue;
    if (stack.at(rk, col) < 0)
      for (int j = 0; j < n; ++j) stack.at(rk, j) = -stack.at(rk, j);
    ++rk;
  }
  if (rk != n) throw ValidationError("quotient_datum: lattice not full rank");

  IsogenyMap map;
  map.kernel_generators = a_gens;
  IntMatrix ibasis(n, n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> row(n);
    for (int j = 0; j < n; ++j) {
      row[j] = Rat(stack.at(i, j), den);
      row[j].canonicalize();
      ibasis.at(i, j) = stack.at(i, j);
    }
    map.basis.push_back(std::move(row));
  }
  auto inv_cols = exactlat::rational_inverse(ibasis.transpose());
  for (auto& col : inv_cols)
    for (auto& x : col) x *= den;
  map.basis_inverse_cols = inv_cols;

  // New simple roots/coroots in the enlarged-lattice basis.
  int l = rd.nsimple();
  IntMatrix new_roots(l, n), new_coroots(l, n);
  for (int i = 0; i < l; ++i) {
    TorusPoint c(rd.simple_coroot_rat(i));
    // coordinates of the coroot in the new basis (no canonical fold here)
    std::vector<Rat> cc(n, Rat(0));
    for (int k = 0; k < n; ++k)
      for (int t = 0; t < n; ++t) cc[k] += map.basis_inverse_cols[t][k] * c.v[t];
    for (int k = 0; k < n; ++k) {
      if (!is_integral(cc[k])) throw ValidationError("quotient_datum: coroot not in lattice");
      new_coroots.at(i, k) = cc[k].get_num();
    }
    for (int k = 0; k < n; ++k) {
      Rat x = exactlat::dot(rd.simple_root_rat(i), map.basis[k]);
      if (!is_integral(x)) throw ValidationError("quotient_datum: generators not central (roots)");
      new_roots.at(i, k) = x.get_num();
    }
  }
  QuotientDatum q{BasedRootDatum(n, new_roots, new_coroots), map};
  if (ic && target_ic) {
    // tau in the new coordinates: conjugate by the basis change.
    IntMatrix tbar(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // tbar = Binv^T tau B^T in column convention
        Rat x = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            x += map.basis_inverse_cols[a][i] * Rat(ic->tau.at(a, b)) * map.basis[j][b];
        if (!is_integral(x)) throw ValidationError("quotient_datum: tau does not descend");
        tbar.at(i, j) = x.get_num();
      }
    *target_ic = rootdata::inner_class_from_matrix(q.datum, tbar);
  }
  return q;
}

std::vector<FiberRow> fiber_sizes(const ClassContext& src, const ClassContext& dst,
                                  const IsogenyMap& map, const TorusPoint& z,
                                  const TorusPoint& zbar) {
  TorusPoint zimg = map.map_point(z);
  if (!(zimg == zbar.canonical()))
    throw PreconditionError("fiber_sizes: zbar is not the image of z");
  auto sfib = cohomology::strong_fiber(src, z);
  auto tfib = cohomology::strong_fiber(dst, zbar);

  std::map<std::string, int> class_of;
  for (size_t t = 0; t < tfib.size(); ++t)
    for (const TorusPoint& p : tfib[t].orbit) class_of[p.key()] = static_cast<int>(t);

  std::vector<Int> counts(tfib.size(), Int(0));
  for (const auto& cls : sfib) {
    TorusPoint img = dst.reducer().canonize(map.map_point(cls.rep).v);
    auto it = class_of.find(img.key());
    if (it == class_of.end()) throw ValidationError("fiber_sizes: image escaped the target fiber");
    counts[it->second] += 1;
  }
  std::vector<FiberRow> rows;
  for (size_t t = 0; t < tfib.size(); ++t) {
    FiberRow r;
    r.target_class = tfib[t];
    r.fiber_size = counts[t];
    r.hit = counts[t] > 0;
    rows.push_back(std::move(r));
  }
  return rows;
}

Int h1_of_kernel(const ClassContext& src, const IsogenyMap& map) {
  // H^1(Z_2, A) = ker(1 + tau|A) / im(1 - tau|A) on the finite module A.
  int n = src.rd().rank();
  std::set<TorusPoint> agroup{TorusPoint::zero(n)};
  std::vector<TorusPoint> queue{TorusPoint::zero(n)};
  while (!queue.empty()) {
    TorusPoint p = queue.back();
    queue.pop_back();
    for (const TorusPoint& g : map.kernel_generators) {
      TorusPoint q = (p + g).canonical();
      if (agroup.insert(q).second) queue.push_back(q);
    }
  }
  auto tau_of = [&](const TorusPoint& a) {
    return TorusPoint(src.ic().tau.apply(a.v)).canonical();
  };
  std::set<TorusPoint> kernel, image;
  for (const TorusPoint& a : agroup) {
    if ((a + tau_of(a)).canonical().is_zero()) kernel.insert(a);
    image.insert((a - tau_of(a)).canonical());
  }
  Int k = Int(static_cast<long>(kernel.size()));
  Int im = Int(static_cast<long>(image.size()));
  if (k % im != 0) throw ValidationError("h1_of_kernel: image does not divide kernel");
  return k / im;
}

Int pi0_quotient_order(const ClassContext& src, const IsogenyMap& map, const FiberRow& row) {
  if (!row.hit || row.fiber_size == 0) throw PreconditionError("pi0_quotient_order: empty fiber");
  Int h1a = h1_of_kernel(src, map);
  if (h1a % row.fiber_size != 0)
    throw ValidationError("pi0_quotient_order: fiber size does not divide |H^1(A)|");
  return h1a / row.fiber_size;
}

}  // namespace isogeny
}  // namespace galcoh

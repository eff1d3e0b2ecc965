// Central isogenies G -> G/A at the lattice level: quotient root data, the
// induced map on strong classes, fiber sizes, and the derived pi0-quotient
// orders.

#pragma once

#include <vector>

#include "galcoh/cohomology.hpp"

namespace galcoh {
namespace isogeny {

using cohomology::ClassContext;
using cohomology::StrongClass;
using exactlat::FiniteAbelianGroup;
using exactlat::IntMatrix;
using exactlat::TorusPoint;
using rootdata::BasedRootDatum;
using rootdata::InnerClass;

struct IsogenyMap {
  std::vector<TorusPoint> kernel_generators;  // generators of A in source coordinates
  // rows of `basis` are a basis of X_*(Gbar) expressed in X_*(G)-rational
  // coordinates; maps between coordinates use it in both directions.
  std::vector<std::vector<Rat>> basis;
  std::vector<std::vector<Rat>> basis_inverse_cols;  // columns of (basis^T)^{-1}

  // Source point (rational cocharacter) to target coordinates.
  TorusPoint map_point(const TorusPoint& v) const;
};

struct QuotientDatum {
  BasedRootDatum datum;
  IsogenyMap map;
};

// Quotient by the subgroup A of the finite center generated by `a_gens`.
// When an inner class is supplied, A must be tau-stable and the same
// permutation defines the inner class downstairs (returned through
// `target_ic` if non-null).
QuotientDatum quotient_datum(const BasedRootDatum& rd, const std::vector<TorusPoint>& a_gens,
                             const InnerClass* ic = nullptr, InnerClass* target_ic = nullptr);

struct FiberRow {
  StrongClass target_class;
  Int fiber_size = 0;  // number of source classes over z mapping here
  bool hit = false;
};

// Per-target-class fiber sizes of the map strong_fiber(z) -> strong_fiber(zbar).
// zbar must be the image of z.
std::vector<FiberRow> fiber_sizes(const ClassContext& src, const ClassContext& dst,
                                  const IsogenyMap& map, const TorusPoint& z,
                                  const TorusPoint& zbar);

// |H^1(Z_2, A)| for the finite tau-module A generated by the kernel generators.
Int h1_of_kernel(const ClassContext& src, const IsogenyMap& map);

// Derived order of the pi0 quotient acting on a nonempty fiber:
// |H^1(Z_2, A)| / fiber size. Throws on empty fibers and asserts divisibility.
Int pi0_quotient_order(const ClassContext& src, const IsogenyMap& map, const FiberRow& row);

}  // namespace isogeny
}  // namespace galcoh

// The core pipeline: torus cohomology via the theta-side lattice groups,
// strong-involution fibers over central invariants with their W_i quotients,
// K-labels, and the census of real forms with |H^1(Gamma,G)| per form.
//
// Coordinates: a strong involution is y = exp(2 pi i v) delta with
// (1+tau) v = v_z mod X_*; H-conjugacy shifts v by (1-tau)(X_* ot Q), and
// W_i acts through Tits representatives by v -> w(v - t_w).

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "galcoh/tits.hpp"

namespace galcoh {
namespace cohomology {

using exactlat::FiniteAbelianGroup;
using exactlat::IntMatrix;
using exactlat::SubspaceReducer;
using exactlat::TorusPoint;
using rootdata::BasedRootDatum;
using rootdata::CenterDescription;
using rootdata::InnerClass;
using weyl::ImaginarySubsystem;
using weyl::WeylElt;

// H^1(Z_2, L ot C^x) computed as the degree-0 Tate group L^theta/(1+theta)L.
// By the torus proposition this is H^1(Gamma, H) for the corresponding real
// torus.
FiniteAbelianGroup torus_h1(int rank, const IntMatrix& theta);

// Everything strong-class computations need for one (datum, inner class).
class ClassContext {
 public:
  ClassContext(const BasedRootDatum& rd, const InnerClass& ic);

  const BasedRootDatum& rd() const { return *rd_; }
  const InnerClass& ic() const { return ic_; }
  const SubspaceReducer& reducer() const { return reducer_; }
  const ImaginarySubsystem& imaginary() const { return imag_; }
  const tits::TitsContext& tits_ctx() const { return tits_; }
  const CenterDescription& center() const { return center_; }

  bool is_central(const TorusPoint& z) const;   // all roots take integral values
  bool is_tau_fixed(const TorusPoint& z) const; // tau z = z mod X_*
  TorusPoint central_invariant(const TorusPoint& v) const;  // (1+tau) v mod X_*

  // W_i simple generators as Weyl elements.
  const std::vector<WeylElt>& wi_generators() const { return wi_gens_; }

 private:
  const BasedRootDatum* rd_;
  InnerClass ic_;
  SubspaceReducer reducer_;
  ImaginarySubsystem imag_;
  tits::TitsContext tits_;
  CenterDescription center_;
  std::vector<WeylElt> wi_gens_;
};

struct StrongClass {
  TorusPoint rep;        // lexicographically minimal canonical representative
  TorusPoint invariant;  // v_z, canonical
  std::vector<TorusPoint> orbit;  // the full W_i orbit of canonical class reps
  Int orbit_size() const { return Int(static_cast<long>(orbit.size())); }
};

// All strong classes with y^2 = z, as W_i-orbits of twisted-cohomology
// classes; empty when z is not in the image of the invariant map.
std::vector<StrongClass> strong_fiber(const ClassContext& ctx, const TorusPoint& z);

struct KLabel {
  Int dim_k = 0;
  int rank_k = 0;
  std::string compact_type;  // Cartan type of the compact-imaginary subsystem
  int k_torus_rank = 0;

  std::string label() const {
    std::string s = compact_type;
    for (int i = 0; i < k_torus_rank; ++i) s += "T";
    if (s.empty()) s = "e";
    return s;
  }
};

KLabel k_label(const ClassContext& ctx, const StrongClass& sc);

struct FormRecord {
  KLabel label;
  TorusPoint invariant;                 // canonical representative z of the form
  Int h1 = 0;                           // |H^1(Gamma, G)| for this real form
  std::vector<StrongClass> classes;     // the form's strong classes over `invariant`
  std::vector<std::pair<TorusPoint, TorusPoint>> members;  // all (z, rep) of the form
  bool is_quasicompact = false;
  bool is_compact = false;
};

struct CensusResult {
  std::vector<FormRecord> forms;
  std::vector<TorusPoint> slice;                         // the tau-fixed finite-order slice
  std::vector<std::pair<TorusPoint, Int>> fiber_sizes;   // per z in slice
  std::vector<TorusPoint> unhit;                         // slice elements with empty fiber
  bool finite_order_slice_only = false;                  // center has a torus part
};

CensusResult census(const BasedRootDatum& rd, const InnerClass& ic);
CensusResult census(const ClassContext& ctx);

// The tau-fixed central elements of denominator dividing 2*exponent(finite
// center), i.e. the invariant slice the census enumerates.
std::vector<TorusPoint> central_slice(const ClassContext& ctx);
// All central elements of bounded denominator (the translation group used to
// glue strong classes into forms).
std::vector<TorusPoint> central_translations(const ClassContext& ctx);

// Canonical representative of the class of z in Z^tau / (1+tau)Z, within the
// slice.
TorusPoint invariant_class_rep(const ClassContext& ctx, const TorusPoint& z);

}  // namespace cohomology
}  // namespace galcoh

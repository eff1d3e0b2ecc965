// Weyl group machinery: the reflection action on X_* and on torus points,
// reduced words, orbit partitioning of finite point sets, the imaginary
// (tau-fixed) subsystem with its Weyl group, and twisted-involution classes.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "galcoh/rootdata.hpp"

namespace galcoh {
namespace weyl {

using exactlat::IntMatrix;
using exactlat::TorusPoint;
using rootdata::BasedRootDatum;
using rootdata::InnerClass;

// A Weyl group element carrying both actions (on X_* and on X^*).
struct WeylElt {
  IntMatrix on_costar;  // action on X_* (points)
  IntMatrix on_star;    // action on X^* (functionals)

  bool operator==(const WeylElt& o) const { return on_costar == o.on_costar; }
  std::string key() const { return on_costar.str(); }
};

class WeylGroup {
 public:
  explicit WeylGroup(const BasedRootDatum& rd);

  const BasedRootDatum& datum() const { return *rd_; }
  int ngens() const { return static_cast<int>(gens_.size()); }
  const WeylElt& generator(int i) const { return gens_[i]; }
  WeylElt identity() const;
  WeylElt multiply(const WeylElt& a, const WeylElt& b) const;
  WeylElt inverse(const WeylElt& w) const;
  WeylElt from_word(const std::vector<int>& word) const;

  // Reflection in an arbitrary root (by index into rd.roots()).
  WeylElt reflection(int root_index) const;

  bool sends_simple_root_negative(const WeylElt& w, int i) const;  // w(alpha_i) < 0
  int length(const WeylElt& w) const;
  // Canonical reduced word: repeatedly strip the smallest descent on the right.
  std::vector<int> canonical_word(const WeylElt& w) const;

  // |W| by an orbit-stabilizer chain on fundamental coweights.
  Int order() const;

 private:
  const BasedRootDatum* rd_;
  std::vector<WeylElt> gens_;
};

// Orbit partition of a finite point set under point maps. Each orbit is
// reported sorted with its lexicographically minimal representative first
// in the list ordering; the partition is independent of input order.
// Throws ValidationError if an action does not map the set into itself.
std::vector<std::vector<TorusPoint>> orbit_partition(
    const std::vector<TorusPoint>& points,
    const std::vector<std::function<TorusPoint(const TorusPoint&)>>& actions);

struct ImaginarySubsystem {
  std::vector<int> imaginary;          // indices into rd.roots() of all tau-fixed roots
  std::vector<int> simples;            // indices into rd.roots(): the simple system (positive)
  std::vector<bool> simple_is_sum;     // alpha = beta + tau(beta) for some root beta
  std::vector<std::vector<int>> simple_words;  // canonical words of s_beta in W(G)

  bool is_sum_of_swapped_pair(int root_index) const;  // for any imaginary root index
  std::vector<int> all_is_sum_flags_roots;            // parallel to `imaginary`
};

ImaginarySubsystem imaginary_subsystem(const BasedRootDatum& rd, const InnerClass& ic);

struct TwistedInvolutionClasses {
  std::vector<std::vector<int>> representatives;  // canonical reduced words
  Int total_twisted_involutions;
  int count() const { return static_cast<int>(representatives.size()); }
};

// Classes of {w : w tau(w) = 1} under w -> x w tau(x)^{-1}. Guarded by the
// Weyl group order (default 1e7).
TwistedInvolutionClasses twisted_involution_classes(const BasedRootDatum& rd, const InnerClass& ic,
                                                    const Int& order_bound = Int(10000000));

}  // namespace weyl
}  // namespace galcoh

// Arithmetic in the Tits extension of W by the 2-torsion subgroup H_2 of the
// torus: canonical normalizer representatives n_w from reduced words, the
// cocycle t_w = n_w^{-1} theta_qc(n_w), and the induced twisted action of W_i
// on strong-involution coordinates.

#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "galcoh/weyl.hpp"

namespace galcoh {
namespace tits {

using exactlat::SubspaceReducer;
using exactlat::TorusPoint;
using rootdata::BasedRootDatum;
using rootdata::InnerClass;
using weyl::WeylElt;
using weyl::WeylGroup;

// An element n_w * exp(pi i h) of the Tits group; h is a 2-torsion torus
// point. The defining relations are sigma_i^2 = (1/2) alpha_i^vee and the
// braid relations, which make n_w independent of the reduced word.
struct TitsElement {
  WeylElt w;
  TorusPoint h;  // canonical, 2-torsion
};

class TitsContext {
 public:
  explicit TitsContext(const BasedRootDatum& rd);

  const WeylGroup& weyl() const { return w_; }

  TitsElement identity() const;
  TitsElement sigma(int i) const;                          // pinned representative of s_i
  TitsElement from_word(const std::vector<int>& word) const;
  TitsElement multiply(const TitsElement& a, const TitsElement& b) const;
  TitsElement inverse(const TitsElement& a) const;

  // t_w = n_w^{-1} theta_qc(n_w) for w in W^tau; theta_qc permutes the pinned
  // generators by the diagram involution and acts on H_2 by tau. Cached per
  // canonical word; the cache is a thread-safe memo with deterministic values.
  TorusPoint theta_qc_cocycle(const WeylElt& w, const InnerClass& ic) const;

  // The action of w in W_i on a strong-involution coordinate: v -> w(v - t_w),
  // reduced to its canonical class representative.
  TorusPoint act_on_strong(const WeylElt& w, const TorusPoint& v, const InnerClass& ic,
                           const SubspaceReducer& reducer) const;

 private:
  const BasedRootDatum* rd_;
  WeylGroup w_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, TorusPoint> cocycle_cache_;

  TitsElement mult_by_sigma(const TitsElement& a, int i) const;
};

}  // namespace tits
}  // namespace galcoh

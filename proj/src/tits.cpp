#include "galcoh/tits.hpp"

#include <sstream>

namespace galcoh {
namespace tits {

TitsContext::TitsContext(const BasedRootDatum& rd) : rd_(&rd), w_(rd) {}

TitsElement TitsContext::identity() const {
  return {w_.identity(), TorusPoint::zero(rd_->rank())};
}

TitsElement TitsContext::sigma(int i) const {
  return {w_.generator(i), TorusPoint::zero(rd_->rank())};
}

// Right multiplication by sigma_i:
//   (n_w m(h)) sigma_i = n_w sigma_i m(s_i h)
//   n_w sigma_i = n_{w s_i}                 when l(w s_i) > l(w)
//   n_w sigma_i = n_{w s_i} m((1/2) a_i^v)  when l(w s_i) < l(w)
TitsElement TitsContext::mult_by_sigma(const TitsElement& a, int i) const {
  bool drop = w_.sends_simple_root_negative(a.w, i);
  TitsElement r;
  r.w = w_.multiply(a.w, w_.generator(i));
  TorusPoint h = TorusPoint(w_.generator(i).on_costar.apply(a.h.v)).canonical();
  if (drop) {
    std::vector<Rat> half(rd_->rank());
    for (int k = 0; k < rd_->rank(); ++k) half[k] = Rat(rd_->simple_coroots().at(i, k), 2);
    for (auto& x : half) x.canonicalize();
    h = (h + TorusPoint(half)).canonical();
  }
  r.h = h;
  return r;
}

TitsElement TitsContext::from_word(const std::vector<int>& word) const {
  TitsElement e = identity();
  for (int i : word) e = mult_by_sigma(e, i);
  return e;
}

TitsElement TitsContext::multiply(const TitsElement& a, const TitsElement& b) const {
  TitsElement e = a;
  for (int i : w_.canonical_word(b.w)) e = mult_by_sigma(e, i);
  e.h = (e.h + b.h).canonical();
  return e;
}

TitsElement TitsContext::inverse(const TitsElement& a) const {
  // Candidate with the right Weyl part, then fix the torus part; H_2 is
  // elementary abelian so the correction is the defect itself.
  TitsElement cand{w_.inverse(a.w), TorusPoint::zero(rd_->rank())};
  TitsElement defect = multiply(a, cand);
  if (!defect.w.on_costar.is_identity()) throw ValidationError("tits inverse: defect not in H_2");
  cand.h = defect.h;  // (w^{-1}, 0) * (1, h) = (w^{-1}, h)
  TitsElement check = multiply(a, cand);
  if (!check.w.on_costar.is_identity() || !check.h.canonical().is_zero())
    throw ValidationError("tits inverse: correction failed");
  return cand;
}

TorusPoint TitsContext::theta_qc_cocycle(const WeylElt& w, const InnerClass& ic) const {
  // w must be fixed by tau (as an automorphism of W).
  WeylElt tw{ic.tau * w.on_costar * ic.tau, ic.tau_on_char() * w.on_star * ic.tau_on_char()};
  if (!(tw == w)) throw PreconditionError("theta_qc_cocycle: w is not tau-fixed");

  std::vector<int> word = w_.canonical_word(w);
  std::ostringstream key;
  for (int i : word) key << i << ",";
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cocycle_cache_.find(key.str());
    if (it != cocycle_cache_.end()) return it->second;
  }

  TitsElement n = from_word(word);
  // theta_qc(n_w): permute the letters by the diagram involution (a reduced
  // word again, for the same w); theta_qc acts on H_2 by tau.
  std::vector<int> pword(word.size());
  for (size_t t = 0; t < word.size(); ++t) pword[t] = ic.pi.at(word[t]);
  TitsElement theta_n = from_word(pword);
  theta_n.h = TorusPoint(ic.tau.apply(theta_n.h.v)).canonical();

  TitsElement t = multiply(inverse(n), theta_n);
  if (!t.w.on_costar.is_identity())
    throw ValidationError("theta_qc_cocycle: cocycle has nontrivial Weyl part");
  TorusPoint result = t.h.canonical();
  if (!result.is_two_torsion()) throw ValidationError("theta_qc_cocycle: cocycle not 2-torsion");
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    cocycle_cache_.emplace(key.str(), result);
  }
  return result;
}

TorusPoint TitsContext::act_on_strong(const WeylElt& w, const TorusPoint& v, const InnerClass& ic,
                                      const SubspaceReducer& reducer) const {
  TorusPoint t = theta_qc_cocycle(w, ic);
  TorusPoint shifted = v - t;
  return reducer.canonize(w.on_costar.apply(shifted.v));
}

}  // namespace tits
}  // namespace galcoh

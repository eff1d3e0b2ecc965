#include "galcoh/weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace galcoh {
namespace weyl {

using exactlat::dot;
using exactlat::to_rat;

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(const BasedRootDatum& rd) : rd_(&rd) {
  int n = rd.rank();
  for (int i = 0; i < rd.nsimple(); ++i) {
    WeylElt s{IntMatrix::identity(n), IntMatrix::identity(n)};
    // s_i(v) = v - <alpha_i, v> alpha_i^vee on X_*,
    // s_i(x) = x - <x, alpha_i^vee> alpha_i on X^*.
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        s.on_costar.at(r, c) -= rd.simple_coroots().at(i, r) * rd.simple_roots().at(i, c);
        s.on_star.at(r, c) -= rd.simple_roots().at(i, r) * rd.simple_coroots().at(i, c);
      }
    gens_.push_back(std::move(s));
  }
}

WeylElt WeylGroup::identity() const {
  int n = rd_->rank();
  return {IntMatrix::identity(n), IntMatrix::identity(n)};
}

WeylElt WeylGroup::multiply(const WeylElt& a, const WeylElt& b) const {
  return {a.on_costar * b.on_costar, a.on_star * b.on_star};
}

WeylElt WeylGroup::inverse(const WeylElt& w) const {
  return {exactlat::inverse_unimodular(w.on_costar), exactlat::inverse_unimodular(w.on_star)};
}

WeylElt WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElt w = identity();
  for (int i : word) w = multiply(w, gens_.at(i));
  return w;
}

WeylElt WeylGroup::reflection(int root_index) const {
  const rootdata::Root& r = rd_->roots().at(root_index);
  int n = rd_->rank();
  WeylElt s{IntMatrix::identity(n), IntMatrix::identity(n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      s.on_costar.at(a, b) -= r.alphavee[a] * r.alpha[b];
      s.on_star.at(a, b) -= r.alpha[a] * r.alphavee[b];
    }
  return s;
}

bool WeylGroup::sends_simple_root_negative(const WeylElt& w, int i) const {
  std::vector<Rat> a = rd_->simple_root_rat(i);
  std::vector<Rat> img = w.on_star.apply(a);
  return dot(img, rd_->rho_check()) < 0;
}

int WeylGroup::length(const WeylElt& w) const {
  int len = 0;
  for (int p = 0; p < rd_->num_positive(); ++p) {
    std::vector<Rat> img = w.on_star.apply(to_rat(rd_->roots()[p].alpha));
    if (dot(img, rd_->rho_check()) < 0) ++len;
  }
  return len;
}

std::vector<int> WeylGroup::canonical_word(const WeylElt& w) const {
  std::vector<int> word;
  WeylElt cur = w;
  for (;;) {
    int desc = -1;
    for (int i = 0; i < ngens(); ++i)
      if (sends_simple_root_negative(cur, i)) {
        desc = i;
        break;
      }
    if (desc < 0) break;
    word.push_back(desc);
    cur = multiply(cur, gens_[desc]);
  }
  if (!cur.on_costar.is_identity())
    throw ValidationError("canonical_word: element is not in the Weyl group");
  std::reverse(word.begin(), word.end());
  return word;
}

Int WeylGroup::order() const {
  // |W_J| = |orbit of a fundamental coweight| * |W_{J minus j}|, recursively.
  std::vector<int> active(ngens());
  for (int i = 0; i < ngens(); ++i) active[i] = i;
  Int total = 1;
  while (!active.empty()) {
    int j = active.back();
    // omega with <alpha_i, omega> = delta_{ij} over the active set.
    IntMatrix rows(static_cast<int>(active.size()), rd_->rank());
    std::vector<Rat> rhs(active.size(), Rat(0));
    for (size_t t = 0; t < active.size(); ++t) {
      for (int c = 0; c < rd_->rank(); ++c) rows.at(static_cast<int>(t), c) = rd_->simple_roots().at(active[t], c);
      if (active[t] == j) rhs[t] = 1;
    }
    std::vector<Rat> omega = exactlat::solve_rational(rows, rhs);
    // Orbit of omega under the active reflections.
    std::set<TorusPoint> orbit;
    std::vector<std::vector<Rat>> queue{omega};
    orbit.insert(TorusPoint(omega));
    while (!queue.empty()) {
      std::vector<Rat> v = queue.back();
      queue.pop_back();
      for (int i : active) {
        std::vector<Rat> img = gens_[i].on_costar.apply(v);
        TorusPoint key{img};
        if (orbit.insert(key).second) queue.push_back(img);
      }
    }
    total *= Int(static_cast<long>(orbit.size()));
    active.pop_back();
  }
  return total;
}

// ---------------------------------------------------------------------------
// orbit_partition

std::vector<std::vector<TorusPoint>> orbit_partition(
    const std::vector<TorusPoint>& points,
    const std::vector<std::function<TorusPoint(const TorusPoint&)>>& actions) {
  std::set<TorusPoint> universe(points.begin(), points.end());
  std::set<TorusPoint> remaining = universe;
  std::vector<std::vector<TorusPoint>> orbits;
  while (!remaining.empty()) {
    TorusPoint seed = *remaining.begin();
    std::set<TorusPoint> orbit{seed};
    std::vector<TorusPoint> queue{seed};
    while (!queue.empty()) {
      TorusPoint p = queue.back();
      queue.pop_back();
      for (const auto& act : actions) {
        TorusPoint q = act(p);
        if (!universe.count(q))
          throw ValidationError("orbit_partition: action leaves the point set (upstream bug)");
        if (orbit.insert(q).second) queue.push_back(q);
      }
    }
    for (const TorusPoint& p : orbit) remaining.erase(p);
    orbits.emplace_back(orbit.begin(), orbit.end());
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

// ---------------------------------------------------------------------------
// imaginary_subsystem

bool ImaginarySubsystem::is_sum_of_swapped_pair(int root_index) const {
  for (size_t t = 0; t < imaginary.size(); ++t)
    if (imaginary[t] == root_index) return all_is_sum_flags_roots[t];
  throw PreconditionError("is_sum_of_swapped_pair: not an imaginary root");
}

ImaginarySubsystem imaginary_subsystem(const BasedRootDatum& rd, const InnerClass& ic) {
  ImaginarySubsystem out;
  IntMatrix tau_star = ic.tau_on_char();
  const auto& roots = rd.roots();
  int nroots = static_cast<int>(roots.size());

  std::vector<int> pos_imaginary;
  for (int i = 0; i < nroots; ++i) {
    std::vector<Int> img = tau_star.apply(roots[i].alpha);
    if (img == roots[i].alpha) {
      out.imaginary.push_back(i);
      if (i < rd.num_positive()) pos_imaginary.push_back(i);
    }
  }

  // is-sum flags: alpha = beta + tau(beta) for some root beta.
  for (int idx : out.imaginary) {
    bool flag = false;
    for (int b = 0; b < nroots && !flag; ++b) {
      std::vector<Int> sum = tau_star.apply(roots[b].alpha);
      for (int k = 0; k < rd.rank(); ++k) sum[k] += roots[b].alpha[k];
      if (sum == roots[idx].alpha) flag = true;
    }
    out.all_is_sum_flags_roots.push_back(flag);
  }

  // Simple system: positive imaginary roots that are not sums of two
  // positive imaginary roots. Positivity is against rho_check, which is
  // tau-invariant; ties are broken by the lexicographic root order already
  // fixed in rd.roots().
  std::set<std::vector<Int>> pos_set;
  for (int i : pos_imaginary) pos_set.insert(roots[i].alpha);
  for (int i : pos_imaginary) {
    bool decomposable = false;
    for (int j : pos_imaginary) {
      std::vector<Int> diff(rd.rank());
      for (int k = 0; k < rd.rank(); ++k) diff[k] = roots[i].alpha[k] - roots[j].alpha[k];
      if (pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.simples.push_back(i);
  }
  WeylGroup w(rd);
  for (int s : out.simples) {
    out.simple_words.push_back(w.canonical_word(w.reflection(s)));
    out.simple_is_sum.push_back(out.is_sum_of_swapped_pair(s));
  }
  return out;
}

// ---------------------------------------------------------------------------
// twisted_involution_classes

TwistedInvolutionClasses twisted_involution_classes(const BasedRootDatum& rd, const InnerClass& ic,
                                                    const Int& order_bound) {
  WeylGroup w(rd);
  Int order = w.order();
  if (order > order_bound)
    throw GuardExceeded("twisted_involution_classes: |W| exceeds the enumeration bound");

  auto twist = [&](const WeylElt& x) {
    // tau(x) = tau o x o tau on X_*.
    WeylElt t{ic.tau * x.on_costar * ic.tau, ic.tau_on_char() * x.on_star * ic.tau_on_char()};
    return t;
  };

  // Enumerate the twisted involutions from the identity by the
  // Richardson-Springer moves s*w = s w tau(s) (or s w when that is w).
  std::map<std::string, WeylElt> seen;
  WeylElt id = w.identity();
  seen.emplace(id.key(), id);
  std::vector<WeylElt> queue{id};
  while (!queue.empty()) {
    WeylElt x = queue.back();
    queue.pop_back();
    for (int i = 0; i < w.ngens(); ++i) {
      WeylElt s = w.generator(i);
      WeylElt ts = twist(s);
      WeylElt cand = w.multiply(w.multiply(s, x), ts);
      if (cand == x) cand = w.multiply(s, x);  // Cayley-type move
      if (seen.emplace(cand.key(), cand).second) queue.push_back(cand);
    }
  }

  // Classes under twisted conjugation by the generators.
  std::map<std::string, int> comp;
  int ncomp = 0;
  for (auto& [k, x] : seen) {
    if (comp.count(k)) continue;
    std::vector<WeylElt> stack{x};
    comp[k] = ncomp;
    while (!stack.empty()) {
      WeylElt y = stack.back();
      stack.pop_back();
      for (int i = 0; i < w.ngens(); ++i) {
        WeylElt s = w.generator(i);
        WeylElt img = w.multiply(w.multiply(s, y), twist(s));  // s y tau(s)^{-1}, s involutive
        auto it = comp.find(img.key());
        if (it == comp.end()) {
          comp[img.key()] = ncomp;
          stack.push_back(img);
        }
      }
    }
    ++ncomp;
  }

  // Canonical representative per class: minimal (length, word).
  std::vector<std::vector<int>> reps(ncomp);
  std::vector<bool> have(ncomp, false);
  for (auto& [k, x] : seen) {
    std::vector<int> word = w.canonical_word(x);
    int c = comp[k];
    if (!have[c] || word.size() < reps[c].size() ||
        (word.size() == reps[c].size() && word < reps[c])) {
      reps[c] = word;
      have[c] = true;
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  TwistedInvolutionClasses out;
  out.representatives = reps;
  out.total_twisted_involutions = Int(static_cast<long>(seen.size()));
  return out;
}

}  // namespace weyl
}  // namespace galcoh

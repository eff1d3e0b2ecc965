#include "galcoh/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace galcoh {
namespace cohomology {

using exactlat::dot;
using exactlat::is_integral;
using exactlat::lattice_tate;
using exactlat::solve_affine_congruence;
using exactlat::to_rat;

FiniteAbelianGroup torus_h1(int rank, const IntMatrix& theta) {
  return lattice_tate(rank, theta, 0);
}

// ---------------------------------------------------------------------------
// ClassContext

namespace {

std::vector<std::vector<Rat>> coboundary_span(const BasedRootDatum& rd, const InnerClass& ic) {
  // Columns of 1 - tau span the twisted-coboundary subspace.
  int n = rd.rank();
  std::vector<std::vector<Rat>> cols;
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> c(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      Int x = (i == j ? Int(1) : Int(0)) - ic.tau.at(i, j);
      c[i] = Rat(x);
    }
    cols.push_back(std::move(c));
  }
  return cols;
}

}  // namespace

ClassContext::ClassContext(const BasedRootDatum& rd, const InnerClass& ic)
    : rd_(&rd),
      ic_(ic),
      reducer_(rd.rank(), coboundary_span(rd, ic)),
      imag_(weyl::imaginary_subsystem(rd, ic)),
      tits_(rd),
      center_(rootdata::center(rd)) {
  weyl::WeylGroup w(rd);
  for (int s : imag_.simples) wi_gens_.push_back(w.reflection(s));
}

bool ClassContext::is_central(const TorusPoint& z) const {
  for (int i = 0; i < rd_->nsimple(); ++i) {
    Rat p = dot(rd_->simple_root_rat(i), z.v);
    if (!is_integral(p)) return false;
  }
  return true;
}

bool ClassContext::is_tau_fixed(const TorusPoint& z) const {
  TorusPoint img = TorusPoint(ic_.tau.apply(z.v)).canonical();
  return img == z.canonical();
}

TorusPoint ClassContext::central_invariant(const TorusPoint& v) const {
  std::vector<Rat> s = ic_.tau.apply(v.v);
  for (int i = 0; i < rd_->rank(); ++i) s[i] += v.v[i];
  return TorusPoint(s).canonical();
}

// ---------------------------------------------------------------------------
// strong_fiber

std::vector<StrongClass> strong_fiber(const ClassContext& ctx, const TorusPoint& z) {
  const BasedRootDatum& rd = ctx.rd();
  TorusPoint zc = z.canonical();
  if (zc.dim() != rd.rank()) throw PreconditionError("strong_fiber: z has wrong dimension");
  if (!ctx.is_central(zc)) throw PreconditionError("strong_fiber: z is not central");
  if (!ctx.is_tau_fixed(zc)) throw PreconditionError("strong_fiber: z is not tau-fixed");

  int n = rd.rank();
  IntMatrix one_plus_tau = IntMatrix::identity(n) + ctx.ic().tau;
  std::vector<TorusPoint> raw =
      solve_affine_congruence(one_plus_tau, zc, coboundary_span(rd, ctx.ic()));
  if (raw.empty()) return {};

  std::vector<std::function<TorusPoint(const TorusPoint&)>> actions;
  for (const WeylElt& g : ctx.wi_generators()) {
    actions.push_back([&ctx, g](const TorusPoint& p) {
      return ctx.tits_ctx().act_on_strong(g, p, ctx.ic(), ctx.reducer());
    });
  }
  auto orbits = weyl::orbit_partition(raw, actions);
  std::vector<StrongClass> out;
  for (auto& orb : orbits) {
    StrongClass sc;
    sc.rep = orb.front();
    sc.invariant = zc;
    sc.orbit = orb;
    out.push_back(std::move(sc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// k_label

KLabel k_label(const ClassContext& ctx, const StrongClass& sc) {
  const BasedRootDatum& rd = ctx.rd();
  const auto& roots = rd.roots();
  const auto& imag = ctx.imaginary();

  Int tr_tau = 0;
  for (int i = 0; i < rd.rank(); ++i) tr_tau += ctx.ic().tau.at(i, i);

  Int sum_signs = 0;  // over positive imaginary roots, of eps(alpha) e^{2 pi i <alpha,v>}
  std::vector<int> compact_pos;
  for (size_t t = 0; t < imag.imaginary.size(); ++t) {
    int idx = imag.imaginary[t];
    if (idx >= rd.num_positive()) continue;
    Rat pairing = dot(to_rat(roots[idx].alpha), sc.rep.v);
    Rat twice = pairing * 2;
    if (!is_integral(twice))
      throw ValidationError("k_label: <alpha, v> not half-integral on an imaginary root");
    int exp_sign = is_integral(pairing) ? 1 : -1;
    int eps = imag.all_is_sum_flags_roots[t] ? -1 : 1;
    int s = eps * exp_sign;
    sum_signs += s;
    if (s == 1) compact_pos.push_back(idx);
  }

  KLabel k;
  Int two_dim = rd.dim_g() + tr_tau + 2 * sum_signs;
  if (two_dim % 2 != 0) throw ValidationError("k_label: dim K not integral");
  k.dim_k = two_dim / 2;
  Int two_rank = Int(rd.rank()) + tr_tau;
  if (two_rank % 2 != 0) throw ValidationError("k_label: rank K not integral");
  k.rank_k = static_cast<int>(two_rank.get_si() / 2);

  // Simple system of the compact-imaginary subsystem (a closed subsystem).
  std::set<std::vector<Int>> pos_set;
  for (int idx : compact_pos) pos_set.insert(roots[idx].alpha);
  std::vector<std::vector<Rat>> simples, cosimples;
  for (int idx : compact_pos) {
    bool decomposable = false;
    for (int jdx : compact_pos) {
      std::vector<Int> diff(rd.rank());
      for (int r = 0; r < rd.rank(); ++r) diff[r] = roots[idx].alpha[r] - roots[jdx].alpha[r];
      if (pos_set.count(diff)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) {
      simples.push_back(to_rat(roots[idx].alpha));
      cosimples.push_back(to_rat(roots[idx].alphavee));
    }
  }
  k.compact_type = rootdata::classify_simple_system(simples, cosimples);
  k.k_torus_rank = k.rank_k - static_cast<int>(simples.size());
  return k;
}

// ---------------------------------------------------------------------------
// census

namespace {

// All sums over a list of generating torus points (finite closure).
std::set<TorusPoint> additive_closure(const std::vector<TorusPoint>& gens, int dim) {
  std::set<TorusPoint> out{TorusPoint::zero(dim)};
  std::vector<TorusPoint> queue{TorusPoint::zero(dim)};
  while (!queue.empty()) {
    TorusPoint p = queue.back();
    queue.pop_back();
    for (const TorusPoint& g : gens) {
      TorusPoint q = (p + g).canonical();
      if (out.insert(q).second) queue.push_back(q);
    }
  }
  return out;
}

}  // namespace

std::vector<TorusPoint> central_translations(const ClassContext& ctx) {
  const CenterDescription& z = ctx.center();
  int n = ctx.rd().rank();
  Int d = 2 * z.finite_exponent();
  std::vector<TorusPoint> gens = z.generators;
  for (const auto& t : z.torus_lattice) {
    std::vector<Rat> g(n);
    for (int i = 0; i < n; ++i) {
      g[i] = Rat(t[i], d);
      g[i].canonicalize();
    }
    gens.push_back(TorusPoint(g).canonical());
  }
  auto closure = additive_closure(gens, n);
  return std::vector<TorusPoint>(closure.begin(), closure.end());
}

std::vector<TorusPoint> central_slice(const ClassContext& ctx) {
  std::vector<TorusPoint> out;
  for (const TorusPoint& p : central_translations(ctx))
    if (ctx.is_tau_fixed(p)) out.push_back(p);
  return out;
}

TorusPoint invariant_class_rep(const ClassContext& ctx, const TorusPoint& z) {
  TorusPoint best = z.canonical();
  for (const TorusPoint& c : central_translations(ctx)) {
    TorusPoint cand = (z + ctx.central_invariant(c)).canonical();
    if (cand < best) best = cand;
  }
  return best;
}

CensusResult census(const BasedRootDatum& rd, const InnerClass& ic) {
  ClassContext ctx(rd, ic);
  return census(ctx);
}

CensusResult census(const ClassContext& ctx) {
  CensusResult res;
  res.finite_order_slice_only = ctx.center().torus_rank > 0;
  res.slice = central_slice(ctx);

  // Fibers over every slice element, with a point -> class lookup.
  struct Node {
    TorusPoint z;
    StrongClass cls;
  };
  std::vector<Node> nodes;
  std::map<std::string, std::map<std::string, int>> class_of;  // z -> point -> node index
  for (const TorusPoint& z : res.slice) {
    auto fiber = strong_fiber(ctx, z);
    res.fiber_sizes.emplace_back(z, Int(static_cast<long>(fiber.size())));
    if (fiber.empty()) {
      res.unhit.push_back(z);
      continue;
    }
    for (auto& cls : fiber) {
      int idx = static_cast<int>(nodes.size());
      for (const TorusPoint& p : cls.orbit) class_of[z.key()][p.key()] = idx;
      nodes.push_back({z, std::move(cls)});
    }
  }

  // Union strong classes related by translation with a central element:
  // (z, v) -> (z + (1+tau)c, v + c).
  std::vector<int> parent(nodes.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<TorusPoint> translations = central_translations(ctx);
  std::set<std::string> slice_keys;
  for (const TorusPoint& z : res.slice) slice_keys.insert(z.key());
  for (size_t i = 0; i < nodes.size(); ++i) {
    for (const TorusPoint& c : translations) {
      TorusPoint z2 = (nodes[i].z + ctx.central_invariant(c)).canonical();
      if (!slice_keys.count(z2.key())) continue;  // outside the finite-order slice
      TorusPoint v2 = ctx.reducer().canonize((nodes[i].cls.rep + c).v);
      auto zit = class_of.find(z2.key());
      if (zit == class_of.end()) continue;
      auto pit = zit->second.find(v2.key());
      if (pit == zit->second.end())
        throw ValidationError("census: central translate escaped its fiber");
      unite(static_cast<int>(i), pit->second);
    }
  }

  // Assemble FormRecords.
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < nodes.size(); ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));

  std::map<std::string, Int> fiber_size_of;
  for (auto& [z, s] : res.fiber_sizes) fiber_size_of[z.key()] = s;

  for (auto& [root, members] : groups) {
    FormRecord f;
    // canonical invariant: minimal z among members; among those, minimal rep
    bool first = true;
    for (int m : members) {
      if (first || nodes[m].z < f.invariant) {
        f.invariant = nodes[m].z;
        first = false;
      }
    }
    for (int m : members) {
      f.members.emplace_back(nodes[m].z, nodes[m].cls.rep);
      if (nodes[m].z == f.invariant) f.classes.push_back(nodes[m].cls);
    }
    std::sort(f.classes.begin(), f.classes.end(),
              [](const StrongClass& a, const StrongClass& b) { return a.rep < b.rep; });
    std::sort(f.members.begin(), f.members.end());
    f.h1 = fiber_size_of.at(f.invariant.key());
    f.label = k_label(ctx, f.classes.front());
    f.is_compact = f.label.dim_k == ctx.rd().dim_g();
    TorusPoint zero = TorusPoint::zero(ctx.rd().rank());
    TorusPoint base = ctx.reducer().canonize(zero.v);
    for (auto& [z, rep] : f.members)
      if (z.is_zero() && rep == base) f.is_quasicompact = true;
    res.forms.push_back(std::move(f));
  }
  std::sort(res.forms.begin(), res.forms.end(), [](const FormRecord& a, const FormRecord& b) {
    if (!(a.invariant == b.invariant)) return a.invariant < b.invariant;
    return a.classes.front().rep < b.classes.front().rep;
  });
  return res;
}

}  // namespace cohomology
}  // namespace galcoh

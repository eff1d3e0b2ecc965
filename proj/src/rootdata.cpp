#include "galcoh/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace galcoh {
namespace rootdata {

using exactlat::dot;
using exactlat::is_integral;
using exactlat::rational_inverse;
using exactlat::smith_normal_form;
using exactlat::solve_rational;
using exactlat::to_rat;

// ---------------------------------------------------------------------------
// LieType

LieType LieType::parse(const std::string& text) {
  LieType t;
  std::string tok;
  auto flush = [&]() {
    if (tok.empty()) return;
    char series = static_cast<char>(std::toupper(tok[0]));
    int rank = std::stoi(tok.substr(1));
    if (series == 'T') {
      if (rank < 0) throw PreconditionError("LieType: bad torus rank");
      t.torus_rank += rank;
    } else {
      if (series < 'A' || series > 'G' || rank < 1) throw PreconditionError("LieType: bad factor " + tok);
      t.factors.emplace_back(series, rank);
    }
    tok.clear();
  };
  for (char c : text) {
    if (c == '+' || c == 'x' || c == ' ' || c == '*') {
      flush();
      continue;
    }
    if (!tok.empty() && std::isalpha(c)) flush();
    tok.push_back(c);
  }
  flush();
  if (t.factors.empty() && t.torus_rank == 0) throw PreconditionError("LieType: empty type");
  return t;
}

std::string LieType::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [s, r] : factors) {
    os << (first ? "" : "+") << s << r;
    first = false;
  }
  if (torus_rank > 0) os << (first ? "" : "+") << "T" << torus_rank;
  return os.str();
}

int LieType::semisimple_rank() const {
  int r = 0;
  for (auto& [s, n] : factors) r += n;
  return r;
}

// ---------------------------------------------------------------------------
// Cartan matrices, via the standard realizations for the classical series and
// diagram data for the exceptional ones. Convention: c(i,j) = <alpha_i, alpha_j^vee>.

namespace {

struct Realization {
  std::vector<std::vector<Rat>> roots, coroots;
};

Realization classical_realization(char series, int n) {
  Realization r;
  auto e = [&](int i, int dim) {
    std::vector<Rat> v(dim, Rat(0));
    v[i] = 1;
    return v;
  };
  auto sub = [](std::vector<Rat> a, const std::vector<Rat>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
  };
  auto add = [](std::vector<Rat> a, const std::vector<Rat>& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  auto scale = [](std::vector<Rat> a, Rat c) {
    for (auto& x : a) x *= c;
    return a;
  };
  switch (series) {
    case 'A': {
      int dim = n + 1;
      for (int i = 0; i < n; ++i) {
        r.roots.push_back(sub(e(i, dim), e(i + 1, dim)));
        r.coroots.push_back(sub(e(i, dim), e(i + 1, dim)));
      }
      break;
    }
    case 'B': {
      for (int i = 0; i + 1 < n; ++i) {
        r.roots.push_back(sub(e(i, n), e(i + 1, n)));
        r.coroots.push_back(sub(e(i, n), e(i + 1, n)));
      }
      r.roots.push_back(e(n - 1, n));
      r.coroots.push_back(scale(e(n - 1, n), 2));
      break;
    }
    case 'C': {
      for (int i = 0; i + 1 < n; ++i) {
        r.roots.push_back(sub(e(i, n), e(i + 1, n)));
        r.coroots.push_back(sub(e(i, n), e(i + 1, n)));
      }
      r.roots.push_back(scale(e(n - 1, n), 2));
      r.coroots.push_back(e(n - 1, n));
      break;
    }
    case 'D': {
      if (n < 2) throw PreconditionError("D_n needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) {
        r.roots.push_back(sub(e(i, n), e(i + 1, n)));
        r.coroots.push_back(sub(e(i, n), e(i + 1, n)));
      }
      r.roots.push_back(add(e(n - 2, n), e(n - 1, n)));
      r.coroots.push_back(add(e(n - 2, n), e(n - 1, n)));
      break;
    }
    default:
      throw PreconditionError("classical_realization: bad series");
  }
  return r;
}

}  // namespace

IntMatrix cartan_matrix(char series, int rank) {
  if (series >= 'A' && series <= 'D') {
    if ((series == 'A' || series == 'B' || series == 'C') && rank < 1)
      throw PreconditionError("cartan_matrix: bad rank");
    auto real = classical_realization(series, rank);
    IntMatrix c(rank, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) {
        Rat p = dot(real.roots[i], real.coroots[j]);
        c.at(i, j) = p.get_num();
      }
    return c;
  }
  // Exceptional types: simply laced ones from the Bourbaki diagram, F4 and G2
  // with explicit off-diagonal entries.
  auto from_edges = [](int n, const std::vector<std::pair<int, int>>& edges) {
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) c.at(i, i) = 2;
    for (auto& [a, b] : edges) {
      c.at(a, b) = -1;
      c.at(b, a) = -1;
    }
    return c;
  };
  if (series == 'E') {
    // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4 (0-based below).
    if (rank == 6) return from_edges(6, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
    if (rank == 7) return from_edges(7, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}});
    if (rank == 8) return from_edges(8, {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}});
    throw PreconditionError("cartan_matrix: E rank must be 6, 7, 8");
  }
  if (series == 'F') {
    if (rank != 4) throw PreconditionError("cartan_matrix: F rank must be 4");
    IntMatrix c(4, 4);
    for (int i = 0; i < 4; ++i) c.at(i, i) = 2;
    c.at(0, 1) = -1;
    c.at(1, 0) = -1;
    c.at(1, 2) = -2;  // alpha2 long, alpha3 short
    c.at(2, 1) = -1;
    c.at(2, 3) = -1;
    c.at(3, 2) = -1;
    return c;
  }
  if (series == 'G') {
    if (rank != 2) throw PreconditionError("cartan_matrix: G rank must be 2");
    IntMatrix c(2, 2);
    c.at(0, 0) = 2;
    c.at(1, 1) = 2;
    c.at(0, 1) = -1;  // alpha1 short
    c.at(1, 0) = -3;
    return c;
  }
  throw PreconditionError("cartan_matrix: unknown series");
}

// ---------------------------------------------------------------------------
// BasedRootDatum

BasedRootDatum::BasedRootDatum(int rank, IntMatrix simple_roots, IntMatrix simple_coroots)
    : rank_(rank), simple_roots_(std::move(simple_roots)), simple_coroots_(std::move(simple_coroots)) {
  if (simple_roots_.rows() != simple_coroots_.rows())
    throw PreconditionError("BasedRootDatum: root/coroot count mismatch");
  if ((nsimple() > 0 && simple_roots_.cols() != rank) ||
      (nsimple() > 0 && simple_coroots_.cols() != rank))
    throw PreconditionError("BasedRootDatum: bad coordinate length");
  // <alpha_i, alpha_i^vee> = 2 on the diagonal.
  for (int i = 0; i < nsimple(); ++i)
    if (cartan(i, i) != 2) throw PreconditionError("BasedRootDatum: <alpha_i, alpha_i^vee> != 2");

  // rho_check: <alpha_i, rho_check> = 1 for all i; rho dually.
  if (nsimple() > 0) {
    std::vector<Rat> ones(nsimple(), Rat(1));
    rho_check_ = solve_rational(simple_roots_, ones);
    rho_ = solve_rational(simple_coroots_, ones);
  } else {
    rho_check_.assign(rank_, Rat(0));
    rho_.assign(rank_, Rat(0));
  }
  generate_roots();
}

Int BasedRootDatum::cartan(int i, int j) const {
  Int s = 0;
  for (int k = 0; k < rank_; ++k) s += simple_roots_.at(i, k) * simple_coroots_.at(j, k);
  return s;
}

std::vector<Rat> BasedRootDatum::simple_root_rat(int i) const {
  std::vector<Rat> v(rank_);
  for (int k = 0; k < rank_; ++k) v[k] = Rat(simple_roots_.at(i, k));
  return v;
}

std::vector<Rat> BasedRootDatum::simple_coroot_rat(int i) const {
  std::vector<Rat> v(rank_);
  for (int k = 0; k < rank_; ++k) v[k] = Rat(simple_coroots_.at(i, k));
  return v;
}

void BasedRootDatum::generate_roots() {
  std::map<std::string, Root> seen;
  auto key_of = [](const std::vector<Int>& a) {
    std::string k;
    for (const Int& x : a) {
      k += x.get_str();
      k += ',';
    }
    return k;
  };
  std::vector<Root> queue;
  for (int i = 0; i < nsimple(); ++i) {
    Root r;
    r.alpha.resize(rank_);
    r.alphavee.resize(rank_);
    for (int k = 0; k < rank_; ++k) {
      r.alpha[k] = simple_roots_.at(i, k);
      r.alphavee[k] = simple_coroots_.at(i, k);
    }
    if (seen.emplace(key_of(r.alpha), r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    for (int i = 0; i < nsimple(); ++i) {
      // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i, and dually for coroots.
      Int pairing = 0, copairing = 0;
      for (int k = 0; k < rank_; ++k) {
        pairing += r.alpha[k] * simple_coroots_.at(i, k);
        copairing += simple_roots_.at(i, k) * r.alphavee[k];
      }
      Root nr = r;
      for (int k = 0; k < rank_; ++k) {
        nr.alpha[k] -= pairing * simple_roots_.at(i, k);
        nr.alphavee[k] -= copairing * simple_coroots_.at(i, k);
      }
      if (seen.emplace(key_of(nr.alpha), nr).second) queue.push_back(nr);
    }
  }
  std::vector<Root> pos, neg;
  for (auto& [k, r] : seen) {
    Rat h = dot(to_rat(r.alpha), rho_check_);
    if (h > 0)
      pos.push_back(r);
    else
      neg.push_back(r);
  }
  auto by_height = [&](const Root& a, const Root& b) {
    Rat ha = dot(to_rat(a.alpha), rho_check_), hb = dot(to_rat(b.alpha), rho_check_);
    int c = cmp(ha, hb);
    if (c != 0) return c < 0;
    return a.alpha < b.alpha;
  };
  std::sort(pos.begin(), pos.end(), by_height);
  std::sort(neg.begin(), neg.end(), by_height);
  roots_ = pos;
  roots_.insert(roots_.end(), neg.begin(), neg.end());
  npos_ = static_cast<int>(pos.size());
}

bool BasedRootDatum::is_positive_root_vector(const std::vector<Rat>& alpha) const {
  return dot(alpha, rho_check_) > 0;
}

int BasedRootDatum::root_index(const std::vector<Int>& alpha) const {
  for (size_t i = 0; i < roots_.size(); ++i)
    if (roots_[i].alpha == alpha) return static_cast<int>(i);
  return -1;
}

int BasedRootDatum::root_index(const std::vector<Rat>& alpha) const {
  if (!is_integral(alpha)) return -1;
  std::vector<Int> a(alpha.size());
  for (size_t i = 0; i < alpha.size(); ++i) a[i] = alpha[i].get_num();
  return root_index(a);
}

Int BasedRootDatum::dim_g() const { return Int(rank_) + Int(roots_.size()); }

std::string BasedRootDatum::str() const {
  std::ostringstream os;
  os << "rank " << rank_ << ", " << nsimple() << " simple roots, " << roots_.size() << " roots";
  return os.str();
}

// ---------------------------------------------------------------------------
// build_datum

namespace {

// Block-diagonal Cartan data for a product type in "sc coordinates":
// X_* has one coordinate per simple-coroot plus the torus coordinates.
void product_cartan(const LieType& type, IntMatrix& roots, IntMatrix& coroots, int& rank) {
  int l = type.semisimple_rank();
  rank = l + type.torus_rank;
  roots = IntMatrix(l, rank);
  coroots = IntMatrix(l, rank);
  int off = 0;
  for (auto& [series, r] : type.factors) {
    IntMatrix c = cartan_matrix(series, r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) roots.at(off + i, off + j) = c.at(i, j);
      coroots.at(off + i, off + i) = 1;
    }
    off += r;
  }
}

}  // namespace

BasedRootDatum build_datum(const LieType& type, const Isogeny& isogeny) {
  IntMatrix roots, coroots;
  int rank = 0;
  product_cartan(type, roots, coroots, rank);
  int l = roots.rows();

  switch (isogeny.kind) {
    case IsogenyKind::SC:
      return BasedRootDatum(rank, roots, coroots);
    case IsogenyKind::AD: {
      // Coweight basis: roots become the dual standard basis, coroots the
      // columns of the Cartan matrix.
      IntMatrix ad_roots(l, rank), ad_coroots(l, rank);
      for (int i = 0; i < l; ++i) {
        ad_roots.at(i, i) = 1;
        for (int j = 0; j < l; ++j) ad_coroots.at(i, j) = roots.at(j, i);
      }
      return BasedRootDatum(rank, ad_roots, ad_coroots);
    }
    case IsogenyKind::Explicit: {
      // L = Z^rank + span_Z(generators/den), a lattice between the coroot
      // lattice (+ torus) and the coweight lattice.
      const Int& den = isogeny.denominator;
      if (den < 1) throw PreconditionError("build_datum: bad lattice denominator");
      int g = static_cast<int>(isogeny.generators.size());
      IntMatrix stack(rank + g, rank);
      for (int i = 0; i < rank; ++i) stack.at(i, i) = den;
      for (int i = 0; i < g; ++i) {
        if (static_cast<int>(isogeny.generators[i].size()) != rank)
          throw PreconditionError("build_datum: generator has wrong length");
        for (int j = 0; j < rank; ++j) stack.at(rank + i, j) = isogeny.generators[i][j];
      }
      // Integer row-HNF basis of den*L.
      IntMatrix hm = stack;
      int rr = hm.rows();
      int rk = 0;
      IntMatrix basis(rank, rank);
      for (int col = 0; col < rank && rk < rr; ++col) {
        for (;;) {
          int p = -1;
          Int best = 0;
          for (int i = rk; i < rr; ++i) {
            if (hm.at(i, col) == 0) continue;
            Int a = abs(hm.at(i, col));
            if (p < 0 || a < best) {
              best = a;
              p = i;
            }
          }
          if (p < 0) break;
          for (int j = 0; j < rank; ++j) std::swap(hm.at(rk, j), hm.at(p, j));
          bool done = true;
          for (int i = rk + 1; i < rr; ++i) {
            if (hm.at(i, col) == 0) continue;
            Int q = exactlat::floor_div(hm.at(i, col), hm.at(rk, col));
            for (int j = 0; j < rank; ++j) hm.at(i, j) -= q * hm.at(rk, j);
            if (hm.at(i, col) != 0) done = false;
          }
          if (done) break;
        }
        if (hm.at(rk, col) == 0) continue;
        if (hm.at(rk, col) < 0)
          for (int j = 0; j < rank; ++j) hm.at(rk, j) = -hm.at(rk, j);
        ++rk;
      }
      if (rk != rank) throw PreconditionError("build_datum: explicit lattice not full rank");
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) basis.at(i, j) = hm.at(i, j);

      // New coordinates: point p (old coords) has new coords (T^T)^{-1} p,
      // where T = basis/den has the new basis vectors as rows.
      auto inv_cols = rational_inverse(basis.transpose());  // columns of (basis^T)^{-1}
      IntMatrix new_coroots(l, rank), new_roots(l, rank);
      for (int i = 0; i < l; ++i) {
        // coroot_i in old coords:
        std::vector<Rat> old_c(rank);
        for (int k = 0; k < rank; ++k) old_c[k] = Rat(coroots.at(i, k));
        for (int k = 0; k < rank; ++k) {
          Rat x = 0;
          for (int t = 0; t < rank; ++t) x += inv_cols[t][k] * old_c[t];
          x *= den;
          if (!is_integral(x)) throw PreconditionError("build_datum: lattice does not contain coroots");
          new_coroots.at(i, k) = x.get_num();
        }
        // root_i evaluated on the new basis vectors:
        for (int k = 0; k < rank; ++k) {
          Rat x = 0;
          for (int t = 0; t < rank; ++t) x += Rat(roots.at(i, t)) * Rat(basis.at(k, t));
          x /= den;
          if (!is_integral(x))
            throw PreconditionError("build_datum: lattice not contained in the coweight lattice");
          new_roots.at(i, k) = x.get_num();
        }
      }
      return BasedRootDatum(rank, new_roots, new_coroots);
    }
  }
  throw PreconditionError("build_datum: bad isogeny");
}

// ---------------------------------------------------------------------------
// center

CenterDescription center(const BasedRootDatum& rd) {
  CenterDescription c;
  int n = rd.rank(), l = rd.nsimple();
  if (l == 0) {
    c.torus_rank = n;
    c.torus_lattice.clear();
    for (int i = 0; i < n; ++i) {
      std::vector<Int> e(n, Int(0));
      e[i] = 1;
      c.torus_lattice.push_back(e);
    }
    return c;
  }
  auto s = smith_normal_form(rd.simple_roots());
  int nd = std::min(l, n);
  for (int j = 0; j < n; ++j) {
    Int dj = (j < nd) ? s.d.at(j, j) : Int(0);
    if (dj == 0) continue;
    if (dj > 1) {
      std::vector<Rat> gen(n);
      for (int i = 0; i < n; ++i) gen[i] = Rat(s.v.at(i, j), dj);
      for (auto& x : gen) x.canonicalize();
      c.generators.push_back(TorusPoint(gen).canonical());
      c.orders.push_back(dj);
    }
  }
  c.torus_lattice = exactlat::integer_kernel(rd.simple_roots());
  c.torus_rank = static_cast<int>(c.torus_lattice.size());
  return c;
}

// ---------------------------------------------------------------------------
// inner classes

namespace {

void validate_diagram_automorphism(const BasedRootDatum& rd, const std::vector<int>& pi) {
  int l = rd.nsimple();
  if (static_cast<int>(pi.size()) != l) throw PreconditionError("inner_class: permutation size mismatch");
  std::vector<bool> hit(l, false);
  for (int i = 0; i < l; ++i) {
    if (pi[i] < 0 || pi[i] >= l || hit[pi[i]]) throw PreconditionError("inner_class: not a permutation");
    hit[pi[i]] = true;
  }
  for (int i = 0; i < l; ++i)
    if (pi[pi[i]] != i) throw PreconditionError("inner_class: permutation is not an involution");
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (rd.cartan(pi[i], pi[j]) != rd.cartan(i, j))
        throw PreconditionError("inner_class: permutation is not a diagram automorphism");
}

}  // namespace

InnerClass inner_class_from_matrix(const BasedRootDatum& rd, const IntMatrix& tau) {
  int n = rd.rank(), l = rd.nsimple();
  if (tau.rows() != n || tau.cols() != n) throw PreconditionError("inner_class: tau has wrong shape");
  if (!(tau * tau).is_identity()) throw PreconditionError("inner_class: tau is not an involution");
  // tau must permute the simple coroots, and its transpose the simple roots,
  // by one and the same diagram automorphism.
  std::vector<int> pi(l, -1);
  for (int j = 0; j < l; ++j) {
    std::vector<Int> cj(n);
    for (int k = 0; k < n; ++k) cj[k] = rd.simple_coroots().at(j, k);
    std::vector<Int> img = tau.apply(cj);
    for (int t = 0; t < l; ++t) {
      bool eq = true;
      for (int k = 0; k < n; ++k)
        if (img[k] != rd.simple_coroots().at(t, k)) {
          eq = false;
          break;
        }
      if (eq) {
        pi[j] = t;
        break;
      }
    }
    if (pi[j] < 0) throw PreconditionError("inner_class: tau does not permute the simple coroots");
  }
  validate_diagram_automorphism(rd, pi);
  IntMatrix taut = tau.transpose();
  for (int i = 0; i < l; ++i) {
    std::vector<Int> ri(n);
    for (int k = 0; k < n; ++k) ri[k] = rd.simple_roots().at(i, k);
    std::vector<Int> img = taut.apply(ri);
    for (int k = 0; k < n; ++k)
      if (img[k] != rd.simple_roots().at(pi[i], k))
        throw PreconditionError("inner_class: tau transpose does not match on simple roots");
  }
  InnerClass ic;
  ic.pi = pi;
  ic.tau = tau;
  ic.equal_rank = tau.is_identity();
  return ic;
}

InnerClass inner_class(const BasedRootDatum& rd, const std::vector<int>& pi) {
  validate_diagram_automorphism(rd, pi);
  int n = rd.rank(), l = rd.nsimple();

  // Assemble tau: coroot_j -> coroot_{pi(j)}, identity on a complement of the
  // coroot span chosen from the standard basis.
  std::vector<std::vector<Rat>> cols;  // basis columns, old coords
  std::vector<std::vector<Rat>> imgs;  // their images
  for (int j = 0; j < l; ++j) {
    cols.push_back(rd.simple_coroot_rat(j));
    imgs.push_back(rd.simple_coroot_rat(pi[j]));
  }
  // Greedily extend to a basis of Q^n with standard vectors, fixed by tau.
  auto rank_of = [&](const std::vector<std::vector<Rat>>& vs) {
    std::vector<std::vector<Rat>> rows = vs;
    std::vector<int> piv;
    // local echelon
    size_t r = 0;
    for (size_t col = 0; col < static_cast<size_t>(n) && r < rows.size(); ++col) {
      size_t p = r;
      while (p < rows.size() && rows[p][col] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[r], rows[p]);
      Rat inv = 1 / rows[r][col];
      for (int j2 = 0; j2 < n; ++j2) rows[r][j2] *= inv;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][col] == 0) continue;
        Rat f = rows[i][col];
        for (int j2 = 0; j2 < n; ++j2) rows[i][j2] -= f * rows[r][j2];
      }
      ++r;
    }
    return static_cast<int>(r);
  };
  int cur = rank_of(cols);
  for (int j = 0; j < n && cur < n; ++j) {
    std::vector<Rat> e(n, Rat(0));
    e[j] = 1;
    auto trial = cols;
    trial.push_back(e);
    if (rank_of(trial) > cur) {
      cols.push_back(e);
      imgs.push_back(e);
      ++cur;
    }
  }
  if (cur < n) throw PreconditionError("inner_class: could not complete a basis");
  // Solve tau * B = Img columnwise: tau = Img * B^{-1}.
  IntMatrix b(n, n);
  bool b_integral = true;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (!is_integral(cols[j][i])) b_integral = false;
      b.at(i, j) = cols[j][i].get_num();
    }
  if (!b_integral) throw PreconditionError("inner_class: internal basis error");
  auto binv = rational_inverse(b);
  IntMatrix tau(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat x = 0;
      for (int k = 0; k < n; ++k) x += imgs[k][i] * binv[j][k];
      if (!is_integral(x)) throw PreconditionError("inner_class: permutation does not preserve the lattice");
      tau.at(i, j) = x.get_num();
    }
  return inner_class_from_matrix(rd, tau);
}

std::vector<int> identity_permutation(int n) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i;
  return pi;
}

std::vector<int> diagram_flip(const LieType& type) {
  if (type.factors.size() != 1)
    throw PreconditionError("diagram_flip: single simple factor expected");
  auto [series, r] = type.factors[0];
  std::vector<int> pi = identity_permutation(r);
  if (series == 'A' && r >= 2) {
    for (int i = 0; i < r; ++i) pi[i] = r - 1 - i;
  } else if (series == 'D') {
    std::swap(pi[r - 2], pi[r - 1]);
  } else if (series == 'E' && r == 6) {
    pi = {5, 1, 4, 3, 2, 0};
  } else {
    throw PreconditionError("diagram_flip: type has no nontrivial involution");
  }
  return pi;
}

// ---------------------------------------------------------------------------
// classify_simple_system

namespace {

struct Component {
  char series;
  int rank;
};

bool comp_order(const Component& a, const Component& b) {
  if (a.rank != b.rank) return a.rank > b.rank;
  return a.series < b.series;
}

Component classify_component(const std::vector<int>& nodes,
                             const std::vector<std::vector<Int>>& c) {
  int m = static_cast<int>(nodes.size());
  if (m == 1) return {'A', 1};
  // Edge weights within the component.
  int heavy2 = 0, heavy3 = 0;
  std::vector<int> deg(m, 0);
  std::vector<std::pair<int, int>> heavy_edge;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      Int w = c[nodes[a]][nodes[b]] * c[nodes[b]][nodes[a]];
      if (w == 0) continue;
      ++deg[a];
      ++deg[b];
      if (w == 2) {
        ++heavy2;
        heavy_edge.emplace_back(a, b);
      } else if (w == 3) {
        ++heavy3;
      } else if (w != 1) {
        throw ValidationError("classify: unexpected bond weight");
      }
    }
  if (heavy3 > 0) {
    if (m != 2) throw ValidationError("classify: G2 must have rank 2");
    return {'G', 2};
  }
  if (heavy2 > 1) throw ValidationError("classify: too many double bonds");
  if (heavy2 == 1) {
    if (m == 2) return {'B', 2};
    // Count short simple roots: <beta_i, beta_j^vee> = -2 marks beta_j short.
    std::vector<bool> is_short(m, false);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (a != b && c[nodes[a]][nodes[b]] == -2) is_short[b] = true;
    // propagate along weight-1 edges: neighbors of a short root across a
    // single bond have the same length iff the bond is simply laced
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          if (a == b) continue;
          Int w = c[nodes[a]][nodes[b]] * c[nodes[b]][nodes[a]];
          if (w == 1 && is_short[a] && !is_short[b]) {
            is_short[b] = true;
            changed = true;
          }
        }
    }
    int shorts = 0;
    for (bool s : is_short) shorts += s ? 1 : 0;
    if (m == 4 && shorts == 2) return {'F', 4};
    if (shorts == 1) return {'B', m};
    if (shorts == m - 1) return {'C', m};
    throw ValidationError("classify: unrecognized doubly-laced diagram");
  }
  // Simply laced: path or one fork.
  int forks = 0, fork_at = -1;
  for (int a = 0; a < m; ++a) {
    if (deg[a] > 3) throw ValidationError("classify: node of degree > 3");
    if (deg[a] == 3) {
      ++forks;
      fork_at = a;
    }
  }
  if (forks == 0) return {'A', m};
  if (forks > 1) throw ValidationError("classify: more than one fork");
  // Branch lengths from the fork.
  std::vector<int> branches;
  std::vector<bool> used(m, false);
  used[fork_at] = true;
  for (int a = 0; a < m; ++a) {
    if (a == fork_at) continue;
    Int w = c[nodes[fork_at]][nodes[a]] * c[nodes[a]][nodes[fork_at]];
    if (w == 0) continue;
    int len = 0, cur = a, prev = fork_at;
    for (;;) {
      ++len;
      used[cur] = true;
      int next = -1;
      for (int b = 0; b < m; ++b) {
        if (b == prev || b == cur) continue;
        Int w2 = c[nodes[cur]][nodes[b]] * c[nodes[b]][nodes[cur]];
        if (w2 != 0) {
          next = b;
          break;
        }
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    branches.push_back(len);
  }
  std::sort(branches.begin(), branches.end());
  if (branches.size() != 3) throw ValidationError("classify: bad fork");
  if (branches[0] == 1 && branches[1] == 1) return {'D', branches[2] + 3};
  if (branches[0] == 1 && branches[1] == 2 && branches[2] == 2) return {'E', 6};
  if (branches[0] == 1 && branches[1] == 2 && branches[2] == 3) return {'E', 7};
  if (branches[0] == 1 && branches[1] == 2 && branches[2] == 4) return {'E', 8};
  throw ValidationError("classify: unrecognized simply-laced diagram");
}

}  // namespace

std::string classify_simple_system(const std::vector<std::vector<Rat>>& simples,
                                   const std::vector<std::vector<Rat>>& cosimples) {
  int m = static_cast<int>(simples.size());
  if (m == 0) return "";
  if (simples.size() != cosimples.size())
    throw PreconditionError("classify_simple_system: size mismatch");
  std::vector<std::vector<Int>> c(m, std::vector<Int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rat p = dot(simples[i], cosimples[j]);
      if (!is_integral(p)) throw ValidationError("classify_simple_system: non-integral pairing");
      c[i][j] = p.get_num();
    }
  // Connected components.
  std::vector<int> comp(m, -1);
  int ncomp = 0;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b = 0; b < m; ++b)
        if (comp[b] < 0 && c[a][b] != 0) {
          comp[b] = ncomp;
          stack.push_back(b);
        }
    }
    ++ncomp;
  }
  std::vector<Component> comps;
  for (int t = 0; t < ncomp; ++t) {
    std::vector<int> nodes;
    for (int a = 0; a < m; ++a)
      if (comp[a] == t) nodes.push_back(a);
    comps.push_back(classify_component(nodes, c));
  }
  std::sort(comps.begin(), comps.end(), comp_order);
  std::ostringstream os;
  for (auto& cc : comps) os << cc.series << cc.rank;
  return os.str();
}

}  // namespace rootdata
}  // namespace galcoh

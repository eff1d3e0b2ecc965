#include "galcoh/exactlat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace galcoh {
namespace exactlat {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw PreconditionError("IntMatrix multiply: shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("IntMatrix add: shape mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("IntMatrix sub: shape mismatch");
  IntMatrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

std::vector<Rat> IntMatrix::apply(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw PreconditionError("IntMatrix apply: dim mismatch");
  std::vector<Rat> r(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += Rat(at(i, j)) * v[j];
  return r;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw PreconditionError("IntMatrix apply: dim mismatch");
  std::vector<Int> r(rows_, Int(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
  }
  os << "]";
  return os.str();
}

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("det: non-square");
  int n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse: non-square");
  int n = m.rows();
  // Gauss-Jordan over Q on [m | I].
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (a[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) throw PreconditionError("inverse: singular matrix");
    std::swap(a[col], a[p]);
    Rat inv = 1 / a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<std::vector<Rat>> cols(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cols[j][i] = a[i][n + j];
  return cols;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  Int d = det(m);
  if (d != 1 && d != -1) throw PreconditionError("inverse_unimodular: matrix is not unimodular");
  auto cols = rational_inverse(m);
  int n = m.rows();
  IntMatrix r(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (!is_integral(cols[j][i])) throw PreconditionError("inverse_unimodular: non-integral inverse");
      r.at(i, j) = cols[j][i].get_num();
    }
  return r;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void row_op_add(IntMatrix& m, int dst, int src, const Int& c) {
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += c * m.at(src, j);
}
void col_op_add(IntMatrix& m, int dst, int src, const Int& c) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += c * m.at(i, src);
}
void row_swap(IntMatrix& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void col_swap(IntMatrix& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
void row_negate(IntMatrix& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
  int rows = m.rows(), cols = m.cols();
  SmithResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = res.d;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;

  int nsteps = std::min(rows, cols);
  for (int k = 0; k < nsteps; ++k) {
    // Locate a pivot of minimal absolute value in the trailing submatrix.
    auto find_pivot = [&]() -> std::pair<int, int> {
      int bi = -1, bj = -1;
      Int best = 0;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j) {
          if (d.at(i, j) == 0) continue;
          Int a = abs(d.at(i, j));
          if (bi < 0 || a < best) {
            best = a;
            bi = i;
            bj = j;
          }
        }
      return {bi, bj};
    };

    for (;;) {
      auto [pi, pj] = find_pivot();
      if (pi < 0) {
        // The rest is zero; done with this and all later steps.
        k = nsteps;
        break;
      }
      if (pi != k) {
        row_swap(d, k, pi);
        row_swap(u, k, pi);
      }
      if (pj != k) {
        col_swap(d, k, pj);
        col_swap(v, k, pj);
      }
      // Reduce column k below the pivot and row k right of the pivot.
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (d.at(i, k) == 0) continue;
        Int q = floor_div(d.at(i, k), d.at(k, k));
        if (q != 0) {
          row_op_add(d, i, k, -q);
          row_op_add(u, i, k, -q);
        }
        if (d.at(i, k) != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (d.at(k, j) == 0) continue;
        Int q = floor_div(d.at(k, j), d.at(k, k));
        if (q != 0) {
          col_op_add(d, j, k, -q);
          col_op_add(v, j, k, -q);
        }
        if (d.at(k, j) != 0) clean = false;
      }
      if (!clean) continue;  // remainders became new, smaller pivot candidates
      // Pivot divides everything in its row/column; enforce divisibility of
      // the trailing block by folding a bad row into row k.
      bool divides_all = true;
      for (int i = k + 1; i < rows && divides_all; ++i)
        for (int j = k + 1; j < cols; ++j)
          if (d.at(i, j) % d.at(k, k) != 0) {
            row_op_add(d, k, i, 1);
            row_op_add(u, k, i, 1);
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
    if (k >= nsteps) break;
    if (d.at(k, k) < 0) {
      row_negate(d, k);
      row_negate(u, k);
    }
  }
  return res;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  int n = m.cols();
  std::vector<std::vector<Int>> basis;
  int nd = std::min(m.rows(), n);
  for (int j = 0; j < n; ++j) {
    bool zero_col = j >= nd || s.d.at(j, j) == 0;
    if (!zero_col) continue;
    std::vector<Int> col(n);
    for (int i = 0; i < n; ++i) col[i] = s.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// FiniteAbelianGroup

std::string FiniteAbelianGroup::str() const {
  if (divisors.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < divisors.size(); ++i) os << (i ? " x " : "") << "Z/" << divisors[i].get_str();
  return os.str();
}

// ---------------------------------------------------------------------------
// lattice_tate

namespace {

// Elementary divisors (>1) of the quotient (kernel lattice) / (image lattice),
// where the image is contained in the kernel and has the same rational rank.
FiniteAbelianGroup lattice_quotient(const std::vector<std::vector<Int>>& kernel_basis,
                                    const IntMatrix& image_gens /* columns */) {
  int k = static_cast<int>(kernel_basis.size());
  if (k == 0) return {};
  int n = static_cast<int>(kernel_basis[0].size());
  // Express each image generator in kernel-basis coordinates: solve K x = g.
  IntMatrix kmat(n, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) kmat.at(i, j) = kernel_basis[j][i];
  int g = image_gens.cols();
  IntMatrix coords(k, g);
  for (int j = 0; j < g; ++j) {
    std::vector<Rat> rhs(n);
    for (int i = 0; i < n; ++i) rhs[i] = Rat(image_gens.at(i, j));
    std::vector<Rat> x = solve_rational(kmat, rhs);
    for (int i = 0; i < k; ++i) {
      if (!is_integral(x[i])) throw ValidationError("lattice_quotient: image not in kernel lattice");
      coords.at(i, j) = x[i].get_num();
    }
  }
  SmithResult s = smith_normal_form(coords);
  FiniteAbelianGroup grp;
  int nd = std::min(k, g);
  for (int i = 0; i < k; ++i) {
    Int di = i < nd ? s.d.at(i, i) : Int(0);
    if (di == 0) throw ValidationError("lattice_quotient: infinite quotient (rank mismatch)");
    if (di > 1) grp.divisors.push_back(di);
  }
  return grp;
}

}  // namespace

FiniteAbelianGroup lattice_tate(int rank, const IntMatrix& theta, int degree) {
  if (theta.rows() != rank || theta.cols() != rank)
    throw PreconditionError("lattice_tate: theta has wrong shape");
  if (!(theta * theta).is_identity()) throw PreconditionError("lattice_tate: theta is not an involution");
  if (degree != 0 && degree != 1)
    throw PreconditionError("lattice_tate: degree must be 0 or 1 (groups are 2-periodic)");
  if (rank == 0) return {};
  IntMatrix id = IntMatrix::identity(rank);
  IntMatrix ker_of = (degree == 0) ? id - theta : id + theta;
  IntMatrix im_of = (degree == 0) ? id + theta : id - theta;
  auto kernel = integer_kernel(ker_of);
  return lattice_quotient(kernel, im_of);
}

// ---------------------------------------------------------------------------
// TorusPoint

bool TorusPoint::is_zero() const {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

TorusPoint TorusPoint::canonical() const {
  TorusPoint r = *this;
  for (Rat& x : r.v) x = frac_part(x);
  return r;
}

TorusPoint TorusPoint::operator+(const TorusPoint& o) const {
  if (v.size() != o.v.size()) throw PreconditionError("TorusPoint add: dim mismatch");
  TorusPoint r = *this;
  for (size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
  return r;
}

TorusPoint TorusPoint::operator-(const TorusPoint& o) const {
  if (v.size() != o.v.size()) throw PreconditionError("TorusPoint sub: dim mismatch");
  TorusPoint r = *this;
  for (size_t i = 0; i < v.size(); ++i) r.v[i] -= o.v[i];
  return r;
}

TorusPoint TorusPoint::scaled(const Rat& c) const {
  TorusPoint r = *this;
  for (Rat& x : r.v) x *= c;
  return r;
}

bool TorusPoint::operator<(const TorusPoint& o) const {
  if (v.size() != o.v.size()) return v.size() < o.v.size();
  for (size_t i = 0; i < v.size(); ++i) {
    int c = cmp(v[i], o.v[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

Int TorusPoint::denominator() const {
  Int l = 1;
  for (const Rat& x : v) {
    Int d = x.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    l = l / g * d;
  }
  return l;
}

bool TorusPoint::is_two_torsion() const {
  for (const Rat& x : v)
    if (!is_integral(Rat(2) * x)) return false;
  return true;
}

std::string TorusPoint::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------------------
// SubspaceReducer

namespace {

// Reduced row echelon form over Q; returns rows and pivot columns.
void rational_rref(std::vector<std::vector<Rat>>& rows, std::vector<int>& pivots) {
  pivots.clear();
  if (rows.empty()) return;
  size_t n = rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < n && r < rows.size(); ++col) {
    size_t p = r;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Rat inv = 1 / rows[r][col];
    for (size_t j = 0; j < n; ++j) rows[r][j] *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rat f = rows[i][col];
      for (size_t j = 0; j < n; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(r);
}

}  // namespace

SubspaceReducer::SubspaceReducer(int n, const std::vector<std::vector<Rat>>& spanning) : n_(n) {
  basis_ = spanning;
  for (const auto& row : basis_)
    if (static_cast<int>(row.size()) != n) throw PreconditionError("SubspaceReducer: bad vector length");
  rational_rref(basis_, pivots_);

  std::set<int> pivset(pivots_.begin(), pivots_.end());
  for (int j = 0; j < n; ++j)
    if (!pivset.count(j)) free_cols_.push_back(j);

  // Projected lattice: images of the standard basis vectors of Z^n in the
  // free coordinates, then a triangular basis by exact elimination.
  std::vector<std::vector<Rat>> gens;
  for (int j = 0; j < n; ++j) {
    std::vector<Rat> e(n, Rat(0));
    e[j] = 1;
    std::vector<Rat> red = subspace_reduce(std::move(e));
    std::vector<Rat> proj(free_cols_.size());
    for (size_t t = 0; t < free_cols_.size(); ++t) proj[t] = red[free_cols_[t]];
    gens.push_back(std::move(proj));
  }
  // Triangularize the generator rows over Q while keeping the lattice they
  // span over Z: integer HNF after clearing denominators.
  size_t m = free_cols_.size();
  if (m > 0) {
    Int den = 1;
    for (auto& g : gens)
      for (auto& x : g) {
        Int d = x.get_den();
        Int gc;
        mpz_gcd(gc.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / gc * d;
      }
    IntMatrix gm(static_cast<int>(gens.size()), static_cast<int>(m));
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = 0; j < m; ++j) {
        Rat scaled = gens[i][j] * Rat(den);
        gm.at(static_cast<int>(i), static_cast<int>(j)) = scaled.get_num();
      }
    // Row-style HNF: upper triangular, positive pivots.
    int rr = gm.rows(), cc = gm.cols();
    int rank = 0;
    for (int col = 0; col < cc && rank < rr; ++col) {
      // Euclid on the column below `rank`.
      for (;;) {
        int p = -1;
        Int best = 0;
        for (int i = rank; i < rr; ++i) {
          if (gm.at(i, col) == 0) continue;
          Int a = abs(gm.at(i, col));
          if (p < 0 || a < best) {
            best = a;
            p = i;
          }
        }
        if (p < 0) break;
        row_swap(gm, rank, p);
        bool done = true;
        for (int i = rank + 1; i < rr; ++i) {
          if (gm.at(i, col) == 0) continue;
          Int q = floor_div(gm.at(i, col), gm.at(rank, col));
          if (q != 0) row_op_add(gm, i, rank, -q);
          if (gm.at(i, col) != 0) done = false;
        }
        if (done) break;
      }
      if (gm.at(rank, col) == 0) continue;
      if (gm.at(rank, col) < 0) row_negate(gm, rank);
      proj_lead_.push_back(col);
      std::vector<Rat> row(m);
      for (size_t j = 0; j < m; ++j) row[j] = Rat(gm.at(rank, static_cast<int>(j)), den);
      for (auto& x : row) x.canonicalize();
      proj_lattice_.push_back(std::move(row));
      ++rank;
    }
    if (proj_lattice_.size() != m)
      throw ValidationError("SubspaceReducer: projected lattice not full rank");
  }
}

std::vector<Rat> SubspaceReducer::subspace_reduce(std::vector<Rat> v) const {
  for (size_t i = 0; i < basis_.size(); ++i) {
    Rat c = v[pivots_[i]];
    if (c == 0) continue;
    for (int j = 0; j < n_; ++j) v[j] -= c * basis_[i][j];
  }
  return v;
}

bool SubspaceReducer::in_subspace(const std::vector<Rat>& v) const {
  std::vector<Rat> r = subspace_reduce(std::vector<Rat>(v));
  for (const Rat& x : r)
    if (x != 0) return false;
  return true;
}

TorusPoint SubspaceReducer::canonize(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != n_) throw PreconditionError("canonize: dim mismatch");
  std::vector<Rat> red = subspace_reduce(std::vector<Rat>(v));
  // Reduce free coordinates modulo the projected lattice, top down.
  std::vector<Rat> u(free_cols_.size());
  for (size_t t = 0; t < free_cols_.size(); ++t) u[t] = red[free_cols_[t]];
  for (size_t i = 0; i < proj_lattice_.size(); ++i) {
    int lead = proj_lead_[i];
    const Rat& piv = proj_lattice_[i][lead];
    Rat q = u[lead] / piv;
    // floor of q
    Int fl = floor_div(q.get_num(), q.get_den());
    if (fl != 0)
      for (size_t j = 0; j < u.size(); ++j) u[j] -= Rat(fl) * proj_lattice_[i][j];
  }
  std::vector<Rat> out(n_, Rat(0));
  for (size_t t = 0; t < free_cols_.size(); ++t) {
    u[t].canonicalize();
    out[free_cols_[t]] = u[t];
  }
  return TorusPoint(std::move(out));
}

// ---------------------------------------------------------------------------
// solve_affine_congruence

std::vector<TorusPoint> solve_affine_congruence(const IntMatrix& a, const TorusPoint& b,
                                                const std::vector<std::vector<Rat>>& modout) {
  int m = a.rows(), n = a.cols();
  if (b.dim() != m) throw PreconditionError("solve_affine_congruence: b has wrong dimension");
  SubspaceReducer reducer(n, modout);

  SmithResult s = smith_normal_form(a);
  std::vector<Rat> ub = s.u.apply(b.v);
  int nd = std::min(m, n);

  // Consistency on rows with no pivot: those components of U b must be integral.
  for (int i = 0; i < m; ++i) {
    Int di = (i < nd) ? s.d.at(i, i) : Int(0);
    if (di == 0 && !is_integral(ub[i])) return {};
  }

  // Per-coordinate solution sets for y = V^{-1} v.
  std::vector<std::vector<Rat>> choices(n);
  Int total = 1;
  for (int j = 0; j < n; ++j) {
    Int dj = (j < nd) ? s.d.at(j, j) : Int(0);
    if (dj == 0) {
      // Free coordinate: the corresponding column of V is a rational kernel
      // direction of A, which the precondition requires modout to absorb.
      std::vector<Rat> dir(n, Rat(0));
      for (int r = 0; r < n; ++r) dir[r] = Rat(s.v.at(r, j));
      if (!reducer.in_subspace(dir))
        throw PreconditionError(
            "solve_affine_congruence: kernel direction not contained in modout subspace");
      choices[j] = {Rat(0)};
      continue;
    }
    // d_j y_j = ub_j (mod Z): y_j in { (ub_j + t)/d_j : t = 0..d_j-1 }
    total *= dj;
    if (total > 1000000) throw GuardExceeded("solve_affine_congruence: solution set too large");
    std::vector<Rat> c;
    for (Int t = 0; t < dj; ++t) {
      Rat y = (ub[j] + Rat(t)) / Rat(dj);
      y.canonicalize();
      c.push_back(y);
    }
    choices[j] = std::move(c);
  }

  // Cartesian product over the finite choices, mapped back through V.
  std::set<TorusPoint> out;
  std::vector<size_t> idx(n, 0);
  for (;;) {
    std::vector<Rat> y(n);
    for (int i = 0; i < n; ++i) y[i] = choices[i][idx[i]];
    std::vector<Rat> v = s.v.apply(y);
    out.insert(reducer.canonize(v));
    int k = n - 1;
    while (k >= 0) {
      if (++idx[k] < choices[k].size()) break;
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return std::vector<TorusPoint>(out.begin(), out.end());
}

// ---------------------------------------------------------------------------
// helpers

std::vector<Rat> solve_rational(const IntMatrix& m, const std::vector<Rat>& rhs) {
  int rows = m.rows(), cols = m.cols();
  if (static_cast<int>(rhs.size()) != rows) throw PreconditionError("solve_rational: dim mismatch");
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][cols] = rhs[i];
  }
  std::vector<int> pivot_col;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    Rat inv = 1 / a[r][col];
    for (int j = 0; j <= cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (int j = 0; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (int i = r; i < rows; ++i)
    if (a[i][cols] != 0) throw PreconditionError("solve_rational: inconsistent system");
  std::vector<Rat> x(cols, Rat(0));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols];
  return x;
}

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.size() != b.size()) throw PreconditionError("dot: dim mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rat> to_rat(const std::vector<Int>& v) {
  std::vector<Rat> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

bool is_integral(const Rat& r) { return r.get_den() == 1; }

bool is_integral(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (!is_integral(x)) return false;
  return true;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rat frac_part(const Rat& r) {
  Int fl = floor_div(r.get_num(), r.get_den());
  Rat out = r - Rat(fl);
  out.canonicalize();
  return out;
}

}  // namespace exactlat
}  // namespace galcoh

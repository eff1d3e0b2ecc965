// Exact integer/rational lattice arithmetic: Smith normal form, Tate
// cohomology of lattice involutions, torus points and congruence solving.
// Everything downstream (root data, Weyl orbits, censuses) reduces to the
// operations in this file; no floating point anywhere.

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace galcoh {

using Int = mpz_class;
using Rat = mpq_class;

// Error taxonomy shared across the library; the CLI maps these to exit codes.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace exactlat {

// ---------------------------------------------------------------------------
// Integer matrices

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  std::vector<Rat> apply(const std::vector<Rat>& v) const;  // matrix * column vector
  std::vector<Int> apply(const std::vector<Int>& v) const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

// Fraction-free determinant (Bareiss).
Int det(const IntMatrix& m);

// Exact inverse of a matrix with |det| = 1; throws if not unimodular.
IntMatrix inverse_unimodular(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithResult {
  IntMatrix u, d, v;  // u * m * v == d, u and v unimodular, d diagonal with d1 | d2 | ...
};

SmithResult smith_normal_form(const IntMatrix& m);

// Basis of the integer kernel {x : m x = 0}, as columns.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Finite abelian groups by elementary divisors

struct FiniteAbelianGroup {
  std::vector<Int> divisors;  // each >= 2, d1 | d2 | ... ; empty = trivial group

  Int order() const {
    Int o = 1;
    for (const Int& d : divisors) o *= d;
    return o;
  }
  bool trivial() const { return divisors.empty(); }
  bool operator==(const FiniteAbelianGroup& o) const { return divisors == o.divisors; }
  std::string str() const;
};

// ---------------------------------------------------------------------------
// Tate cohomology of a lattice involution.
//
// For the Z_2-module L = Z^rank with the involution theta:
//   degree 0:  ker(1 - theta) / im(1 + theta)
//   degree 1:  ker(1 + theta) / im(1 - theta)
// Degrees other than 0 and 1 are rejected (the groups are 2-periodic).
FiniteAbelianGroup lattice_tate(int rank, const IntMatrix& theta, int degree);

// ---------------------------------------------------------------------------
// Torus points: rational cocharacter vectors modulo the lattice Z^n.

struct TorusPoint {
  std::vector<Rat> v;

  TorusPoint() = default;
  explicit TorusPoint(std::vector<Rat> coords) : v(std::move(coords)) {}
  static TorusPoint zero(int n) { return TorusPoint(std::vector<Rat>(n, Rat(0))); }

  int dim() const { return static_cast<int>(v.size()); }
  bool is_zero() const;

  // Canonical form: every entry folded into [0,1) with reduced fractions.
  TorusPoint canonical() const;

  TorusPoint operator+(const TorusPoint& o) const;
  TorusPoint operator-(const TorusPoint& o) const;
  TorusPoint scaled(const Rat& c) const;
  bool operator==(const TorusPoint& o) const { return v == o.v; }
  bool operator<(const TorusPoint& o) const;  // lexicographic, for canonical reps

  // Smallest N >= 1 with N * v integral.
  Int denominator() const;
  bool is_two_torsion() const;  // 2*v integral

  std::string str() const;
  std::string key() const { return str(); }
};

// ---------------------------------------------------------------------------
// Canonical representatives of (Q^n) / (S + Z^n) for a rational subspace S.
//
// Reduction is in two deterministic stages: project along a fixed echelonized
// basis of S (zeroing the pivot coordinates), then reduce the remaining
// coordinates modulo the projected image of Z^n with a triangular HNF basis.
class SubspaceReducer {
 public:
  // spanning: any rational spanning set of S (need not be independent).
  SubspaceReducer(int n, const std::vector<std::vector<Rat>>& spanning);

  int ambient_dim() const { return n_; }
  int subspace_dim() const { return static_cast<int>(basis_.size()); }

  TorusPoint canonize(const std::vector<Rat>& v) const;
  TorusPoint canonize(const TorusPoint& p) const { return canonize(p.v); }

  // Membership test for the subspace S itself (exact, not mod Z^n).
  bool in_subspace(const std::vector<Rat>& v) const;

 private:
  int n_;
  std::vector<std::vector<Rat>> basis_;  // reduced row echelon basis of S
  std::vector<int> pivots_;              // pivot column of each basis row
  std::vector<int> free_cols_;           // non-pivot columns, increasing
  // triangular basis of the projection of Z^n to the free coordinates;
  // rows have strictly increasing leading columns (indices into free_cols_)
  std::vector<std::vector<Rat>> proj_lattice_;
  std::vector<int> proj_lead_;

  std::vector<Rat> subspace_reduce(std::vector<Rat> v) const;
};

// ---------------------------------------------------------------------------
// All v in (Q^n)/Z^n with A v = b (mod Z^m), reduced modulo the subspace
// spanned by `modout` (plus Z^n), each in canonical form, sorted.
// Requires the rational kernel of A to lie inside span(modout); returns the
// empty list when the congruence has no solution.
std::vector<TorusPoint> solve_affine_congruence(const IntMatrix& a, const TorusPoint& b,
                                                const std::vector<std::vector<Rat>>& modout);

// ---------------------------------------------------------------------------
// Small rational-linear-algebra helpers shared by the higher modules.

// One rational solution x of M x = rhs; throws PreconditionError if unsolvable.
std::vector<Rat> solve_rational(const IntMatrix& m, const std::vector<Rat>& rhs);

// Rational inverse of a nonsingular integer matrix, as columns.
std::vector<std::vector<Rat>> rational_inverse(const IntMatrix& m);

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b);
std::vector<Rat> to_rat(const std::vector<Int>& v);
bool is_integral(const Rat& r);
bool is_integral(const std::vector<Rat>& v);
Int floor_div(const Int& a, const Int& b);  // floor(a/b), b > 0
Rat frac_part(const Rat& r);                // r - floor(r), in [0,1)

}  // namespace exactlat
}  // namespace galcoh

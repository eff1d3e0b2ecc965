// Independent brute-force verifiers: denominator-bounded fiber enumeration,
// exact matrix models over Q(i) for SL(2), SL(3) and Sp(4), and Chevalley
// structure-constant signs validating the epsilon rule. These run in CI and
// are not on the production path; guards hard-fail.

#pragma once

#include <string>
#include <vector>

#include "galcoh/cohomology.hpp"

namespace galcoh {
namespace oracle {

using cohomology::ClassContext;
using exactlat::TorusPoint;
using rootdata::BasedRootDatum;
using rootdata::InnerClass;

// ---------------------------------------------------------------------------
// Exact Gaussian rationals and matrices over Q(i).

struct GaussRat {
  Rat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(Rat r) : re(std::move(r)), im(0) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
  GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
  GaussRat operator*(const GaussRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussRat inverse() const;
  bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
  bool is_zero() const { return re == 0 && im == 0; }
  std::string str() const;
};

class GMat {
 public:
  GMat() : n_(0) {}
  explicit GMat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static GMat identity(int n);

  int dim() const { return n_; }
  GaussRat& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const GaussRat& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  GMat operator*(const GMat& o) const;
  GMat operator+(const GMat& o) const;
  GMat operator-(const GMat& o) const;
  GMat scaled(const GaussRat& c) const;
  bool operator==(const GMat& o) const { return n_ == o.n_ && a_ == o.a_; }
  GMat transpose() const;
  GMat inverse() const;
  bool is_zero() const;
  std::string key() const;

 private:
  int n_;
  std::vector<GaussRat> a_;
};

GMat exp_nilpotent(const GMat& x);  // requires x nilpotent

// e^{2 pi i x} for x with denominator dividing 4.
GaussRat unit_of(const Rat& x);

// ---------------------------------------------------------------------------
// brute_fiber: exhaustive re-derivation of a strong fiber.

struct BruteFiber {
  std::vector<std::vector<TorusPoint>> classes;  // each sorted; classes sorted by min
  int count() const { return static_cast<int>(classes.size()); }
  int class_of(const TorusPoint& p) const;  // -1 if absent
};

// Enumerates all v with N v integral and (1+tau)v = z, quotients by the
// twisted coboundaries and by the full (enumerated) W_i action. Guards:
// rank <= 6, N <= 8.
BruteFiber brute_fiber(const ClassContext& ctx, const TorusPoint& z, int denominator_bound);

// The two fibers agree classwise: equal counts and every production
// representative lands in a distinct oracle class.
bool fibers_agree(const BruteFiber& brute, const std::vector<cohomology::StrongClass>& fiber);

// ---------------------------------------------------------------------------
// Matrix models.

enum class Model { SL2, SL3, Sp4 };

struct ModelCheck {
  bool ok = true;
  std::string details;
  void fail(const std::string& msg) {
    ok = false;
    details += details.empty() ? msg : ("; " + msg);
  }
};

// sigma_alpha^2 = alpha^vee(-1) in the model (SL2: diag(-1,-1)).
ModelCheck check_sigma_squares(Model model);
// Braid relation and full Tits multiplication table against matrix products.
ModelCheck check_tits_products(Model model);
// theta_qc cocycles t_w for every W^tau element of the flip class (SL3 only).
ModelCheck check_theta_cocycles_sl3();
// Action signs of the pinned outer involution on imaginary root spaces (SL3).
ModelCheck check_epsilon_sl3();
// Sp4: the four torus square roots of -I are a single conjugacy class.
ModelCheck check_sp4_square_minus_one();

// ---------------------------------------------------------------------------
// Chevalley structure-constant sign of the pinned automorphism on g_alpha.
//
// alpha must be an imaginary root of the inner class; equal-rank classes give
// +1 without any constants. Guard: rank <= 4, and the asymmetry-function
// construction requires a simply-laced datum when the class is outer.
int chevalley_sign(const BasedRootDatum& rd, const InnerClass& ic, int root_index);

}  // namespace oracle
}  // namespace galcoh

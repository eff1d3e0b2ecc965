// Based root data for the classical and exceptional series, their centers,
// and inner classes (diagram involutions with the induced lattice involution
// on the cocharacter lattice).
//
// Coordinates: X_* = Z^n. For the sc preset the basis is the simple coroots,
// for ad the fundamental coweights; explicit lattices carry their own basis.
// X^* is the dual Z^n and the pairing is the standard dot product, so every
// later computation is integer matrix arithmetic.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcoh/exactlat.hpp"

namespace galcoh {
namespace rootdata {

using exactlat::FiniteAbelianGroup;
using exactlat::IntMatrix;
using exactlat::TorusPoint;

// A product of simple factors plus a central torus, e.g. {A,3}+{A,1}, torus 1.
struct LieType {
  std::vector<std::pair<char, int>> factors;  // (series in 'A'..'G', rank)
  int torus_rank = 0;

  static LieType parse(const std::string& text);  // "D4", "A3+T1", "A1 A1"
  std::string str() const;
  int semisimple_rank() const;
};

struct Root {
  std::vector<Int> alpha;     // coordinates in X^* (functional on X_*)
  std::vector<Int> alphavee;  // coordinates in X_*
};

class BasedRootDatum {
 public:
  // Internal constructor from explicit simple root/coroot coordinate rows.
  BasedRootDatum(int rank, IntMatrix simple_roots, IntMatrix simple_coroots);

  int rank() const { return rank_; }
  int nsimple() const { return simple_roots_.rows(); }

  const IntMatrix& simple_roots() const { return simple_roots_; }      // row i = alpha_i in X^*
  const IntMatrix& simple_coroots() const { return simple_coroots_; }  // row i = alpha_i^vee in X_*
  Int cartan(int i, int j) const;                                      // <alpha_i, alpha_j^vee>

  std::vector<Rat> simple_root_rat(int i) const;
  std::vector<Rat> simple_coroot_rat(int i) const;

  // The full root system, positives first, each sorted by (height, lex).
  const std::vector<Root>& roots() const { return roots_; }
  int num_positive() const { return npos_; }
  const Root& positive_root(int idx) const { return roots_[idx]; }

  // Rational functionals with <alpha_i, rho_check> = 1 and <rho, alpha_i^vee> = 1.
  const std::vector<Rat>& rho_check() const { return rho_check_; }
  const std::vector<Rat>& rho() const { return rho_; }

  bool is_positive_root_vector(const std::vector<Rat>& alpha) const;  // for genuine roots
  // Index into roots() of the root with these X^* coordinates, or -1.
  int root_index(const std::vector<Int>& alpha) const;
  int root_index(const std::vector<Rat>& alpha) const;

  Int dim_g() const;  // rank + number of roots

  std::string str() const;

 private:
  int rank_;
  IntMatrix simple_roots_;
  IntMatrix simple_coroots_;
  std::vector<Root> roots_;
  int npos_ = 0;
  std::vector<Rat> rho_check_, rho_;

  void generate_roots();
};

struct CenterDescription {
  std::vector<TorusPoint> generators;  // finite part, canonical form
  std::vector<Int> orders;             // order of each generator, >= 2
  int torus_rank = 0;                  // rank of the central torus
  std::vector<std::vector<Int>> torus_lattice;  // basis of {v in Z^n : <alpha,v> = 0}

  Int finite_order() const {
    Int o = 1;
    for (const Int& d : orders) o *= d;
    return o;
  }
  Int finite_exponent() const { return orders.empty() ? Int(1) : orders.back(); }
};

struct InnerClass {
  std::vector<int> pi;  // involutive permutation of simple indices
  IntMatrix tau;        // induced involution of X_*
  bool equal_rank = false;

  IntMatrix tau_on_char() const { return tau.transpose(); }  // action on X^*
};

enum class IsogenyKind { SC, AD, Explicit };

struct Isogeny {
  IsogenyKind kind = IsogenyKind::SC;
  // For Explicit: generator rows over the (coroot basis + torus coordinates),
  // as integer rows over a common denominator.
  std::vector<std::vector<Int>> generators;
  Int denominator = 1;

  static Isogeny sc() { return {IsogenyKind::SC, {}, 1}; }
  static Isogeny ad() { return {IsogenyKind::AD, {}, 1}; }
  static Isogeny explicit_lattice(std::vector<std::vector<Int>> gens, Int den) {
    return {IsogenyKind::Explicit, std::move(gens), std::move(den)};
  }
};

// Cartan matrix of a simple type in the convention c(i,j) = <alpha_i, alpha_j^vee>.
IntMatrix cartan_matrix(char series, int rank);

BasedRootDatum build_datum(const LieType& type, const Isogeny& isogeny);

CenterDescription center(const BasedRootDatum& rd);

// Inner class from a diagram permutation. On data with a central torus the
// permutation does not see the torus directions; tau acts there by the
// identity. Use inner_class_from_matrix when a different torus action is
// needed (e.g. GL(n,R)).
InnerClass inner_class(const BasedRootDatum& rd, const std::vector<int>& pi);
InnerClass inner_class_from_matrix(const BasedRootDatum& rd, const IntMatrix& tau);

// The canonical nontrivial diagram involution of a simple type (A_n n>=2,
// D_n, E6: the flip / fork swap), or identity when there is none.
std::vector<int> diagram_flip(const LieType& type);
std::vector<int> identity_permutation(int n);

// Cartan type of a closed subsystem presented by a simple system, e.g.
// "D6A1"; components sorted by rank descending then letter.
std::string classify_simple_system(const std::vector<std::vector<Rat>>& simples,
                                   const std::vector<std::vector<Rat>>& cosimples);

}  // namespace rootdata
}  // namespace galcoh

#include "galcoh/named.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace galcoh {
namespace names {

using cohomology::ClassContext;
using cohomology::CensusResult;
using exactlat::IntMatrix;
using exactlat::TorusPoint;
using rootdata::BasedRootDatum;
using rootdata::InnerClass;
using rootdata::Isogeny;
using rootdata::LieType;

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(c));
  return s;
}

struct RawName {
  std::string head;   // letters and optional '*'
  std::vector<std::string> args;
  std::string alias;  // after '-'
};

RawName tokenize(const std::string& text) {
  RawName r;
  size_t i = 0;
  while (i < text.size() && (std::isalpha(text[i]) || text[i] == '*')) r.head += text[i++];
  if (i < text.size() && std::isdigit(text[i]) && text.find('-') != std::string::npos) {
    // exceptional style: E8-split
    while (i < text.size() && std::isdigit(text[i])) r.head += text[i++];
    if (i < text.size() && text[i] == '-') {
      ++i;
      r.alias = text.substr(i);
      return r;
    }
    throw ResolveError("cannot parse group name: " + text);
  }
  if (i < text.size() && text[i] == '(') {
    ++i;
    std::string cur;
    for (; i < text.size() && text[i] != ')'; ++i) {
      if (text[i] == ',') {
        r.args.push_back(cur);
        cur.clear();
      } else if (!std::isspace(text[i])) {
        cur.push_back(text[i]);
      }
    }
    if (i >= text.size() || text[i] != ')') throw ResolveError("unbalanced parentheses in " + text);
    if (!cur.empty()) r.args.push_back(cur);
    ++i;
  }
  if (i != text.size()) throw ResolveError("trailing characters in group name: " + text);
  return r;
}

int int_arg(const std::string& s, const std::string& ctx) {
  for (char c : s)
    if (!std::isdigit(c)) throw ResolveError("bad numeric argument in " + ctx);
  return std::stoi(s);
}

}  // namespace

ParsedName parse_group_name(const std::string& text) {
  RawName raw = tokenize(text);
  std::string head = upper(raw.head);
  ParsedName out;
  std::ostringstream canon;

  if (!raw.alias.empty()) {
    // exceptional: head like "E8"
    if (head.size() != 2 || head[0] < 'E' || head[0] > 'G')
      throw ResolveError("unknown exceptional type: " + text);
    out.family = Family::Exceptional;
    out.series = head[0];
    out.rank = head[1] - '0';
    std::string alias = raw.alias;
    for (char& c : alias) c = static_cast<char>(std::tolower(c));
    if (alias == "quasisplit'" || alias == "quasisplit") alias = "quaternionic";
    out.alias = alias;
    canon << out.series << out.rank << "-" << out.alias;
    out.canonical = canon.str();
    return out;
  }

  auto two_ints = [&](Family f, const std::string& display) {
    if (raw.args.size() != 2)
      throw ResolveError(display + " needs two integer arguments");
    out.family = f;
    out.a = int_arg(raw.args[0], text);
    out.b = int_arg(raw.args[1], text);
    canon << display << "(" << out.a << "," << out.b << ")";
    out.canonical = canon.str();
  };
  auto n_and_field = [&](Family freal, Family fquat, const std::string& display) {
    if (raw.args.size() != 2) throw ResolveError(display + " needs (n, R|H)");
    int n = int_arg(raw.args[0], text);
    std::string fld = upper(raw.args[1]);
    if (fld == "R") {
      out.family = freal;
      out.a = n;
      canon << display << "(" << n << ",R)";
    } else if (fld == "H") {
      out.family = fquat;
      out.a = n;
      canon << display << "(" << n << ",H)";
    } else {
      throw ResolveError(display + ": field must be R or H");
    }
    out.canonical = canon.str();
  };
  auto one_int_star = [&](Family f, const std::string& display) {
    if (raw.args.size() != 1) throw ResolveError(display + " needs one argument (2n)");
    int twon = int_arg(raw.args[0], text);
    if (twon % 2 != 0) throw ResolveError(display + ": argument must be even");
    out.family = f;
    out.a = twon / 2;
    canon << display << "(" << twon << ")";
    out.canonical = canon.str();
  };

  if (head == "SL") {
    n_and_field(Family::SL_R, Family::SL_H, "SL");
  } else if (head == "GL") {
    if (raw.args.size() != 2 || upper(raw.args[1]) != "R") throw ResolveError("GL supports GL(n,R)");
    out.family = Family::GL_R;
    out.a = int_arg(raw.args[0], text);
    canon << "GL(" << out.a << ",R)";
    out.canonical = canon.str();
  } else if (head == "SU") {
    two_ints(Family::SU, "SU");
  } else if (head == "SP") {
    if (raw.args.size() == 2 && upper(raw.args[1]) == "R") {
      int twon = int_arg(raw.args[0], text);
      if (twon % 2 != 0) throw ResolveError("Sp(2n,R): first argument must be even");
      out.family = Family::Sp_R;
      out.a = twon / 2;
      canon << "Sp(" << twon << ",R)";
      out.canonical = canon.str();
    } else {
      two_ints(Family::Sp_PQ, "Sp");
    }
  } else if (head == "SO") {
    two_ints(Family::SO, "SO");
  } else if (head == "SO*") {
    one_int_star(Family::SO_STAR, "SO*");
  } else if (head == "SPIN") {
    two_ints(Family::Spin, "Spin");
  } else if (head == "SPIN*") {
    one_int_star(Family::Spin_STAR, "Spin*");
  } else if (head == "PSL") {
    n_and_field(Family::PSL_R, Family::PSL_H, "PSL");
  } else if (head == "PSU") {
    two_ints(Family::PSU, "PSU");
  } else if (head == "PSP") {
    if (raw.args.size() == 2 && upper(raw.args[1]) == "R") {
      int twon = int_arg(raw.args[0], text);
      if (twon % 2 != 0) throw ResolveError("PSp(2n,R): first argument must be even");
      out.family = Family::PSp_R;
      out.a = twon / 2;
      canon << "PSp(" << twon << ",R)";
      out.canonical = canon.str();
    } else {
      two_ints(Family::PSp_PQ, "PSp");
    }
  } else if (head == "PSO") {
    two_ints(Family::PSO, "PSO");
  } else if (head == "PSO*") {
    one_int_star(Family::PSO_STAR, "PSO*");
  } else {
    throw ResolveError("unknown group family: " + text);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Table formulas

int spin_delta(int p, int q) {
  static const int table[4][4] = {{3, 2, 2, 2}, {2, 1, 1, 0}, {2, 1, 0, 0}, {2, 0, 0, 0}};
  return table[((p % 4) + 4) % 4][((q % 4) + 4) % 4];
}

Int formula_h1(const ParsedName& n) {
  auto fl = [](int a, int b) { return a / b; };
  switch (n.family) {
    case Family::SL_R:
    case Family::GL_R:
      return 1;
    case Family::SL_H:
      return 2;
    case Family::SU:
      return fl(n.a, 2) + fl(n.b, 2) + 1;
    case Family::Sp_R:
      return 1;
    case Family::Sp_PQ:
      return n.a + n.b + 1;
    case Family::SO:
      return fl(n.a, 2) + fl(n.b, 2) + 1;
    case Family::SO_STAR:
      return 2;
    case Family::Spin:
      return fl(n.a + n.b, 4) + spin_delta(n.a, n.b);
    case Family::Spin_STAR:
      return 2;
    case Family::PSL_R:
      return n.a % 2 == 0 ? 2 : 1;
    case Family::PSL_H:
      return 2;
    case Family::PSU:
      return fl(n.a + n.b, 2) + 1;
    case Family::PSp_R:
      return fl(n.a, 2) + 2;
    case Family::PSp_PQ:
      return fl(n.a + n.b, 2) + 2;
    case Family::PSO: {
      int p = n.a, q = n.b, s = p + q;
      if (p % 2 == 1 && q % 2 == 1) return fl(s + 2, 4);
      if (p % 2 == 0 && q % 2 == 0) return s % 4 == 0 ? s / 4 + 3 : (s - 2) / 4 + 2;
      return (s + 1) / 2;
    }
    case Family::PSO_STAR:
      return n.a % 2 == 0 ? n.a / 2 + 3 : (n.a - 1) / 2 + 2;
    case Family::Exceptional: {
      if (n.series == 'G') return 2;
      if (n.series == 'F') return 3;
      if (n.series == 'E' && n.rank == 8) return 3;
      if (n.series == 'E' && n.rank == 6)
        return (n.alias == "split" || n.alias == "quasicompact") ? 2 : 3;
      if (n.series == 'E' && n.rank == 7)
        return (n.alias == "split" || n.alias == "hermitian") ? 2 : 4;
      throw ResolveError("no formula for this exceptional name");
    }
  }
  throw ResolveError("no formula");
}

// ---------------------------------------------------------------------------
// Standard-coordinate data

BasedRootDatum torus_datum(int rank) {
  return BasedRootDatum(rank, IntMatrix(0, rank), IntMatrix(0, rank));
}

BasedRootDatum so_even_datum(int m) {
  if (m < 2) throw PreconditionError("so_even_datum: m >= 2");
  IntMatrix roots(m, m), coroots(m, m);
  for (int i = 0; i + 1 < m; ++i) {
    roots.at(i, i) = 1;
    roots.at(i, i + 1) = -1;
  }
  roots.at(m - 1, m - 2) = 1;
  roots.at(m - 1, m - 1) = 1;
  coroots = roots;
  return BasedRootDatum(m, roots, coroots);
}

BasedRootDatum gl_datum(int n) {
  if (n < 1) throw PreconditionError("gl_datum: n >= 1");
  IntMatrix roots(n - 1, n), coroots(n - 1, n);
  for (int i = 0; i + 1 < n; ++i) {
    roots.at(i, i) = 1;
    roots.at(i, i + 1) = -1;
  }
  coroots = roots;
  return BasedRootDatum(n, roots, coroots);
}

TorusPoint dm_standard_to_coroot(int m, const std::vector<Rat>& standard) {
  // coroots of D_m in standard coordinates, as columns of C; solve C x = s.
  IntMatrix c(m, m);
  for (int i = 0; i + 1 < m; ++i) {
    c.at(i, i) = 1;
    c.at(i + 1, i) = -1;
  }
  c.at(m - 2, m - 1) = 1;
  c.at(m - 1, m - 1) = 1;
  std::vector<Rat> x = exactlat::solve_rational(c, standard);
  return TorusPoint(x).canonical();
}

// ---------------------------------------------------------------------------
// Resolution

namespace {

struct Target {
  std::shared_ptr<const BasedRootDatum> rd;
  InnerClass ic;
  Int dim_k;                                  // expected complex dimension of K
  std::optional<TorusPoint> invariant_class;  // expected class rep (canonical)
  std::string description;
};

Int so_dim(int p, int q) { return Int(p) * (p - 1) / 2 + Int(q) * (q - 1) / 2; }

std::shared_ptr<const BasedRootDatum> make_rd(BasedRootDatum&& rd) {
  return std::make_shared<const BasedRootDatum>(std::move(rd));
}

std::shared_ptr<const BasedRootDatum> preset(const std::string& type, rootdata::IsogenyKind kind) {
  Isogeny iso = kind == rootdata::IsogenyKind::SC ? Isogeny::sc() : Isogeny::ad();
  return make_rd(rootdata::build_datum(LieType::parse(type), iso));
}

InnerClass identity_class(const BasedRootDatum& rd) {
  return rootdata::inner_class(rd, rootdata::identity_permutation(rd.nsimple()));
}

// tau = -1 on every coordinate of a pure torus datum (split torus), or +1
// (compact torus).
InnerClass torus_class(const BasedRootDatum& rd, int sign) {
  int n = rd.rank();
  IntMatrix tau(n, n);
  for (int i = 0; i < n; ++i) tau.at(i, i) = sign;
  return rootdata::inner_class_from_matrix(rd, tau);
}

InnerClass gl_class(const BasedRootDatum& rd) {
  // v -> -reverse(v): the split GL(n,R) inner class.
  int n = rd.rank();
  IntMatrix tau(n, n);
  for (int i = 0; i < n; ++i) tau.at(i, n - 1 - i) = -1;
  return rootdata::inner_class_from_matrix(rd, tau);
}

// The Levi datum SO(2m') x GL(1) used for SO(p,q) with p, q odd.
Target so_odd_odd_target(int p, int q) {
  int mprime = (p + q - 2) / 2;
  Target t;
  if (mprime == 0) {
    t.rd = make_rd(torus_datum(1));
    t.ic = torus_class(*t.rd, -1);
    t.dim_k = 0;
    t.invariant_class = TorusPoint::zero(1);
    t.description = "GL(1) Levi (SO(" + std::to_string(p) + "," + std::to_string(q) + "))";
    return t;
  }
  // block D_{m'} standard plus one split torus coordinate
  int n = (mprime >= 2) ? mprime + 1 : 2;
  IntMatrix roots(mprime >= 2 ? mprime : 0, n), coroots(mprime >= 2 ? mprime : 0, n);
  if (mprime >= 2) {
    BasedRootDatum base = so_even_datum(mprime);
    for (int i = 0; i < mprime; ++i)
      for (int j = 0; j < mprime; ++j) {
        roots.at(i, j) = base.simple_roots().at(i, j);
        coroots.at(i, j) = base.simple_coroots().at(i, j);
      }
  }
  t.rd = make_rd(BasedRootDatum(n, roots, coroots));
  IntMatrix tau(n, n);
  for (int i = 0; i + 1 < n; ++i) tau.at(i, i) = 1;
  tau.at(n - 1, n - 1) = -1;
  t.ic = rootdata::inner_class_from_matrix(*t.rd, tau);
  t.dim_k = so_dim(p - 1, q - 1);
  t.invariant_class = TorusPoint::zero(n);
  t.description = "SO(" + std::to_string(p + q - 2) + ")xGL(1) Levi";
  return t;
}

Target build_target(const ParsedName& n) {
  Target t;
  switch (n.family) {
    case Family::SL_R: {
      if (n.a < 1) throw ResolveError("SL(n,R): n >= 1");
      if (n.a == 1) {
        t.rd = make_rd(torus_datum(0));
        t.ic = identity_class(*t.rd);
        t.dim_k = 0;
        t.description = "trivial group";
        return t;
      }
      std::string type = "A" + std::to_string(n.a - 1);
      t.rd = preset(type, rootdata::IsogenyKind::SC);
      t.ic = (n.a == 2) ? identity_class(*t.rd)
                        : rootdata::inner_class(*t.rd, rootdata::diagram_flip(LieType::parse(type)));
      t.dim_k = Int(n.a) * (n.a - 1) / 2;
      t.description = type + " sc";
      return t;
    }
    case Family::SL_H: {
      int m = n.a, nn = 2 * m;
      if (m < 1) throw ResolveError("SL(n,H): n >= 1");
      std::string type = "A" + std::to_string(nn - 1);
      t.rd = preset(type, rootdata::IsogenyKind::SC);
      t.ic = (nn == 2) ? identity_class(*t.rd)
                       : rootdata::inner_class(*t.rd, rootdata::diagram_flip(LieType::parse(type)));
      t.dim_k = Int(m) * (2 * m + 1);
      t.description = type + " sc";
      return t;
    }
    case Family::SU: {
      int s = n.a + n.b;
      if (s < 1) throw ResolveError("SU(p,q): p+q >= 1");
      if (s == 1) {
        t.rd = make_rd(torus_datum(0));
        t.ic = identity_class(*t.rd);
        t.dim_k = 0;
        t.description = "trivial group";
        return t;
      }
      std::string type = "A" + std::to_string(s - 1);
      t.rd = preset(type, rootdata::IsogenyKind::SC);
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(n.a) * n.a + Int(n.b) * n.b - 1;
      t.description = type + " sc";
      return t;
    }
    case Family::GL_R: {
      if (n.a < 1) throw ResolveError("GL(n,R): n >= 1");
      t.rd = make_rd(gl_datum(n.a));
      t.ic = (n.a == 1) ? torus_class(*t.rd, -1) : gl_class(*t.rd);
      t.dim_k = Int(n.a) * (n.a - 1) / 2;
      // For even n the class also contains GL(n/2,H), which is the
      // quasicompact form; the split form lives over -1 in the center.
      t.invariant_class = (n.a % 2 == 0) ? TorusPoint(std::vector<Rat>(n.a, Rat(1, 2)))
                                         : TorusPoint::zero(n.a);
      t.description = "GL(" + std::to_string(n.a) + ")";
      return t;
    }
    case Family::Sp_R: {
      int m = n.a;
      if (m < 1) throw ResolveError("Sp(2n,R): n >= 1");
      std::string type = "C" + std::to_string(m);
      t.rd = preset(type, rootdata::IsogenyKind::SC);
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(m) * m;
      // invariant -I: the nontrivial central element.
      auto z = rootdata::center(*t.rd);
      if (z.generators.size() != 1) throw ValidationError("Sp: unexpected center");
      t.invariant_class = z.generators[0];
      t.description = type + " sc";
      return t;
    }
    case Family::Sp_PQ: {
      int s = n.a + n.b;
      if (s < 1) throw ResolveError("Sp(p,q): p+q >= 1");
      std::string type = "C" + std::to_string(s);
      t.rd = preset(type, rootdata::IsogenyKind::SC);
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(n.a) * (2 * n.a + 1) + Int(n.b) * (2 * n.b + 1);
      t.invariant_class = TorusPoint::zero(s);
      t.description = type + " sc";
      return t;
    }
    case Family::SO:
    case Family::PSO: {
      int p = n.a, q = n.b, s = p + q;
      bool adjoint_family = n.family == Family::PSO;
      if (s < 1) throw ResolveError("SO(p,q): p+q >= 1");
      if (s == 1) {  // SO(1): trivial
        t.rd = make_rd(torus_datum(0));
        t.ic = identity_class(*t.rd);
        t.dim_k = 0;
        t.description = "trivial group";
        return t;
      }
      if (s % 2 == 1) {
        // B_m adjoint; SO = PSO here.
        int m = (s - 1) / 2;
        std::string type = "B" + std::to_string(m);
        t.rd = preset(type, rootdata::IsogenyKind::AD);
        t.ic = identity_class(*t.rd);
        t.dim_k = so_dim(p, q);
        t.description = type + " ad";
        return t;
      }
      if (p % 2 == 1) {
        // p, q odd
        if (!adjoint_family) return so_odd_odd_target(p, q);
        int m = s / 2;
        if (m == 1) {  // PSO(1,1): split torus
          t.rd = make_rd(torus_datum(1));
          t.ic = torus_class(*t.rd, -1);
          t.dim_k = 0;
          t.description = "split torus";
          return t;
        }
        std::string type = "D" + std::to_string(m);
        t.rd = preset(type, rootdata::IsogenyKind::AD);
        t.ic = rootdata::inner_class(*t.rd, rootdata::diagram_flip(LieType::parse(type)));
        t.dim_k = so_dim(p, q);
        t.description = type + " ad";
        return t;
      }
      // p, q even
      int m = s / 2;
      if (m == 1) {  // SO(2): compact torus, K is the whole torus
        t.rd = make_rd(torus_datum(1));
        t.ic = torus_class(*t.rd, +1);
        t.dim_k = 1;
        t.invariant_class = TorusPoint::zero(1);
        t.description = "compact torus";
        return t;
      }
      if (adjoint_family) {
        std::string type = "D" + std::to_string(m);
        t.rd = preset(type, rootdata::IsogenyKind::AD);
        t.ic = identity_class(*t.rd);
        t.dim_k = so_dim(p, q);
        t.description = type + " ad";
        return t;
      }
      t.rd = make_rd(so_even_datum(m));
      t.ic = identity_class(*t.rd);
      t.dim_k = so_dim(p, q);
      t.invariant_class = TorusPoint::zero(m);
      t.description = "D" + std::to_string(m) + " (SO lattice)";
      return t;
    }
    case Family::SO_STAR: {
      int m = n.a;
      if (m < 1) throw ResolveError("SO*(2n): n >= 1");
      if (m == 1) {  // SO*(2) = SO(2)
        t.rd = make_rd(torus_datum(1));
        t.ic = torus_class(*t.rd, +1);
        t.dim_k = 1;
        t.invariant_class = TorusPoint::zero(1);
        t.description = "compact torus";
        return t;
      }
      t.rd = make_rd(so_even_datum(m));
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(m) * m;
      t.invariant_class = TorusPoint(std::vector<Rat>(m, Rat(1, 2)));
      t.description = "D" + std::to_string(m) + " (SO lattice)";
      return t;
    }
    case Family::Spin: {
      int p = n.a, q = n.b, s = p + q;
      if (s < 3) throw ResolveError("Spin(p,q): p+q >= 3");
      if (s % 2 == 1) {
        int m = (s - 1) / 2;
        std::string type = "B" + std::to_string(m);
        t.rd = preset(type, rootdata::IsogenyKind::SC);
        t.ic = identity_class(*t.rd);
        t.dim_k = so_dim(p, q);
        t.description = type + " sc";
        return t;
      }
      int m = s / 2;
      std::string type = "D" + std::to_string(m);
      t.rd = preset(type, rootdata::IsogenyKind::SC);
      if (p % 2 == 1) {
        t.ic = rootdata::inner_class(*t.rd, rootdata::diagram_flip(LieType::parse(type)));
        t.dim_k = so_dim(p, q);
        t.description = type + " sc (flip)";
        return t;
      }
      t.ic = identity_class(*t.rd);
      t.dim_k = so_dim(p, q);
      // invariant: the class of exp(2 pi i (0..0,1..1)) upstairs (q/2 ones).
      std::vector<Rat> std_coords(m, Rat(0));
      for (int i = m - q / 2; i < m; ++i) std_coords[i] = 1;
      t.invariant_class = dm_standard_to_coroot(m, std_coords);
      t.description = type + " sc";
      return t;
    }
    case Family::Spin_STAR: {
      int m = n.a;
      if (m < 2) throw ResolveError("Spin*(2n): n >= 2");
      std::string type = "D" + std::to_string(m);
      t.rd = preset(type, rootdata::IsogenyKind::SC);
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(m) * m;
      t.invariant_class = dm_standard_to_coroot(m, std::vector<Rat>(m, Rat(1, 2)));
      t.description = type + " sc";
      return t;
    }
    case Family::PSL_R: {
      if (n.a < 2) throw ResolveError("PSL(n,R): n >= 2");
      std::string type = "A" + std::to_string(n.a - 1);
      t.rd = preset(type, rootdata::IsogenyKind::AD);
      t.ic = (n.a == 2) ? identity_class(*t.rd)
                        : rootdata::inner_class(*t.rd, rootdata::diagram_flip(LieType::parse(type)));
      t.dim_k = Int(n.a) * (n.a - 1) / 2;
      t.description = type + " ad";
      return t;
    }
    case Family::PSL_H: {
      int m = n.a, nn = 2 * m;
      std::string type = "A" + std::to_string(nn - 1);
      t.rd = preset(type, rootdata::IsogenyKind::AD);
      t.ic = (nn == 2) ? identity_class(*t.rd)
                       : rootdata::inner_class(*t.rd, rootdata::diagram_flip(LieType::parse(type)));
      t.dim_k = Int(m) * (2 * m + 1);
      t.description = type + " ad";
      return t;
    }
    case Family::PSU: {
      int s = n.a + n.b;
      if (s < 2) throw ResolveError("PSU(p,q): p+q >= 2");
      std::string type = "A" + std::to_string(s - 1);
      t.rd = preset(type, rootdata::IsogenyKind::AD);
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(n.a) * n.a + Int(n.b) * n.b - 1;
      t.description = type + " ad";
      return t;
    }
    case Family::PSp_R: {
      int m = n.a;
      std::string type = "C" + std::to_string(m);
      t.rd = preset(type, rootdata::IsogenyKind::AD);
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(m) * m;
      t.description = type + " ad";
      return t;
    }
    case Family::PSp_PQ: {
      int s = n.a + n.b;
      if (s < 1) throw ResolveError("PSp(p,q): p+q >= 1");
      std::string type = "C" + std::to_string(s);
      t.rd = preset(type, rootdata::IsogenyKind::AD);
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(n.a) * (2 * n.a + 1) + Int(n.b) * (2 * n.b + 1);
      t.description = type + " ad";
      return t;
    }
    case Family::PSO_STAR: {
      int m = n.a;
      if (m < 2) throw ResolveError("PSO*(2n): n >= 2");
      std::string type = "D" + std::to_string(m);
      t.rd = preset(type, rootdata::IsogenyKind::AD);
      t.ic = identity_class(*t.rd);
      t.dim_k = Int(m) * m;
      t.description = type + " ad";
      return t;
    }
    case Family::Exceptional: {
      struct Row {
        const char* alias;
        bool outer;
        long dim;
      };
      std::map<std::string, std::vector<Row>> table = {
          {"E6",
           {{"quaternionic", false, 38},
            {"hermitian", false, 46},
            {"compact", false, 78},
            {"split", true, 36},
            {"quasicompact", true, 52}}},
          {"E7",
           {{"split", false, 63}, {"quaternionic", false, 69}, {"hermitian", false, 79}, {"compact", false, 133}}},
          {"E8", {{"split", false, 120}, {"quaternionic", false, 136}, {"compact", false, 248}}},
          {"F4", {{"split", false, 24}, {"compact", false, 52}}},
          {"G2", {{"split", false, 6}, {"compact", false, 14}}},
      };
      std::string key = std::string(1, n.series) + std::to_string(n.rank);
      auto it = table.find(key);
      if (it == table.end()) throw ResolveError("unknown exceptional type " + key);
      for (const Row& row : it->second) {
        if (n.alias != row.alias) continue;
        t.rd = preset(key, rootdata::IsogenyKind::SC);
        t.ic = row.outer
                   ? rootdata::inner_class(*t.rd, rootdata::diagram_flip(LieType::parse(key)))
                   : identity_class(*t.rd);
        t.dim_k = row.dim;
        t.description = key + (row.outer ? " sc (flip)" : " sc");
        return t;
      }
      throw ResolveError("unknown alias '" + n.alias + "' for " + key);
    }
  }
  throw ResolveError("unhandled family");
}

}  // namespace

ResolvedForm resolve(const std::string& spec, bool validate) {
  return resolve(parse_group_name(spec), validate);
}

ResolvedForm resolve(const ParsedName& name, bool validate) {
  Target target = build_target(name);
  auto ctx = std::make_shared<const ClassContext>(*target.rd, target.ic);
  CensusResult census = cohomology::census(*ctx);

  std::optional<TorusPoint> want_class;
  if (target.invariant_class)
    want_class = cohomology::invariant_class_rep(*ctx, *target.invariant_class);

  std::vector<int> matches;
  for (size_t i = 0; i < census.forms.size(); ++i) {
    const auto& f = census.forms[i];
    if (f.label.dim_k != target.dim_k) continue;
    if (want_class) {
      TorusPoint have = cohomology::invariant_class_rep(*ctx, f.invariant);
      if (!(have == *want_class)) continue;
    }
    matches.push_back(static_cast<int>(i));
  }
  if (matches.empty())
    throw ResolveError("no census record matches " + name.canonical + " (dim K = " +
                       target.dim_k.get_str() + ")");
  if (matches.size() > 1) {
    // Outer-related twins carry identical reported data; anything else is a
    // genuine ambiguity.
    const auto& first = census.forms[matches[0]];
    for (size_t i = 1; i < matches.size(); ++i) {
      const auto& other = census.forms[matches[i]];
      if (!(other.h1 == first.h1) || !(other.label.dim_k == first.label.dim_k) ||
          other.label.label() != first.label.label()) {
        std::ostringstream os;
        os << "ambiguous resolution for " << name.canonical << ": " << matches.size()
           << " inequivalent candidates";
        throw ResolveError(os.str());
      }
    }
  }

  ResolvedForm out;
  out.rd = target.rd;
  out.ctx = ctx;
  out.census = std::move(census);
  out.form_index = matches[0];
  out.h1 = out.census.forms[out.form_index].h1;
  out.formula = formula_h1(name);
  out.name = name;
  out.datum_description = target.description;
  if (validate && out.h1 != out.formula) {
    std::ostringstream os;
    os << "validation failed for " << name.canonical << ": computed |H^1| = " << out.h1.get_str()
       << ", table formula = " << out.formula.get_str();
    throw ValidationError(os.str());
  }
  return out;
}

}  // namespace names
}  // namespace galcoh

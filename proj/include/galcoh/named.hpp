// Named real forms: parsing ("SU(2,1)", "Spin(5,3)", "E8-split", ...),
// construction of the underlying datum and inner class in standard
// coordinates, selection of the matching census record, and the closed-form
// table values used for validation.

#pragma once

#include <memory>
#include <optional>
#include <string>

#include "galcoh/cohomology.hpp"
#include "galcoh/isogeny.hpp"

namespace galcoh {
namespace names {

struct ResolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Family {
  SL_R,    // SL(n,R)
  SL_H,    // SL(n,H): n quaternionic size
  SU,      // SU(p,q)
  GL_R,    // GL(n,R)
  Sp_R,    // Sp(2n,R): stores n
  Sp_PQ,   // Sp(p,q)
  SO,      // SO(p,q)
  SO_STAR, // SO*(2n): stores n
  Spin,    // Spin(p,q)
  Spin_STAR,
  PSL_R,
  PSL_H,
  PSU,
  PSp_R,
  PSp_PQ,
  PSO,
  PSO_STAR,
  Exceptional,  // E6..G2 with an alias
};

struct ParsedName {
  Family family;
  int a = 0, b = 0;        // (p,q) or (n,0)
  char series = 0;         // exceptional series letter
  int rank = 0;            // exceptional rank
  std::string alias;       // split/compact/quasicompact/quaternionic/hermitian/quasisplit
  std::string canonical;   // normalized display name
};

ParsedName parse_group_name(const std::string& text);

// Spin delta(p, q), indexed by residues mod 4.
int spin_delta(int p, int q);

// The paper's closed-form |H^1| for a named group.
Int formula_h1(const ParsedName& name);

// A resolved named form: the census it lives in plus the selected record.
struct ResolvedForm {
  std::shared_ptr<const rootdata::BasedRootDatum> rd;
  std::shared_ptr<const cohomology::ClassContext> ctx;
  cohomology::CensusResult census;
  int form_index = -1;
  Int h1 = 0;
  Int formula = 0;
  ParsedName name;
  std::string datum_description;

  const cohomology::FormRecord& form() const { return census.forms.at(form_index); }
};

// Resolve a named group. With validate=true a mismatch between the computed
// h1 and the closed-form table value raises ValidationError (the CLI maps it
// to exit code 3); table generation resolves with validate=false and prints
// match flags instead.
ResolvedForm resolve(const std::string& spec, bool validate = true);
ResolvedForm resolve(const ParsedName& name, bool validate = true);

// Standard-coordinate data used by the resolver (exposed for tests).
rootdata::BasedRootDatum so_even_datum(int m);  // D_m on Z^m (the SO(2m) lattice)
rootdata::BasedRootDatum gl_datum(int n);       // GL(n) on Z^n
rootdata::BasedRootDatum torus_datum(int rank);
// coordinates of a standard D_m cocharacter in the simple-coroot basis
exactlat::TorusPoint dm_standard_to_coroot(int m, const std::vector<Rat>& standard);

}  // namespace names
}  // namespace galcoh

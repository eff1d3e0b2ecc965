// Output rendering: the versioned JSON schema, CSV and aligned text, for
// h1 reports, censuses, tables and fiber decompositions.

#pragma once

#include <string>

#include "galcoh/isogeny.hpp"
#include "galcoh/named.hpp"
#include "galcoh/tables.hpp"

namespace galcoh {
namespace report {

inline constexpr int kSchemaVersion = 1;

enum class Format { Text, Json, Csv };
Format parse_format(const std::string& s);

std::string render_h1(const names::ResolvedForm& r, Format fmt);
std::string render_census(const std::string& title, const cohomology::ClassContext& ctx,
                          const cohomology::CensusResult& census, Format fmt);
std::string render_tables(const std::vector<tables::Table>& ts, Format fmt);

struct FiberReportRow {
  std::string target;     // target form/class description
  std::string invariant;
  bool hit = false;
  Int fiber = 0;
  Int pi0 = 0;  // 0 when not derived (empty fiber)
};
std::string render_fibers(const std::string& title, const std::vector<FiberReportRow>& rows,
                          const Int& h1_of_kernel, Format fmt);

std::string render_group(const exactlat::FiniteAbelianGroup& g, Format fmt);

}  // namespace report
}  // namespace galcoh

// Regeneration of the published tables: classical, Spin (with the delta
// matrix), simply connected exceptional, and adjoint (with derived pi0).
// Every row carries the computed value, the table value, and a match flag.

#pragma once

#include <string>
#include <vector>

#include "galcoh/named.hpp"

namespace galcoh {
namespace tables {

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool all_match = true;
};

std::vector<Table> classical_tables();
std::vector<Table> spin_tables();
std::vector<Table> exceptional_sc_tables();
std::vector<Table> adjoint_tables();
std::vector<Table> make_tables(const std::string& which);  // classical|spin|exceptional-sc|adjoint|all

// One adjoint form of the simply connected -> adjoint quotient, with the
// fiber of the induced H^1 map and the derived pi0 order.
struct ScAdRow {
  Int dim_k;
  std::string label;
  Int h1;
  Int fiber;
  Int pi0;
};
std::vector<ScAdRow> sc_to_ad_rows(const std::string& simple_type);

}  // namespace tables
}  // namespace galcoh

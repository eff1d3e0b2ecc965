#include "galcoh/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "galcoh/isogeny.hpp"

namespace galcoh {
namespace tables {

using cohomology::CensusResult;
using cohomology::ClassContext;
using exactlat::TorusPoint;
using names::ParsedName;

namespace {

std::string istr(const Int& x) { return x.get_str(); }

void formula_row(Table& t, const std::string& name, bool* any_mismatch) {
  ParsedName pn = names::parse_group_name(name);
  Int computed;
  std::string note;
  try {
    names::ResolvedForm r = names::resolve(pn, /*validate=*/false);
    computed = r.h1;
  } catch (const std::exception& e) {
    computed = -1;
    note = e.what();
  }
  Int expected = names::formula_h1(pn);
  bool match = computed == expected;
  if (!match && any_mismatch) *any_mismatch = true;
  t.rows.push_back({pn.canonical, istr(computed), istr(expected), match ? "ok" : "MISMATCH", note});
}

}  // namespace

std::vector<Table> classical_tables() {
  Table t;
  t.title = "classical";
  t.header = {"group", "computed |H^1|", "table", "match", "note"};
  bool mism = false;
  for (int n = 1; n <= 8; ++n) formula_row(t, "SL(" + std::to_string(n) + ",R)", &mism);
  for (int n = 1; n <= 8; ++n) formula_row(t, "GL(" + std::to_string(n) + ",R)", &mism);
  for (int m = 1; 2 * m <= 8; ++m) formula_row(t, "SL(" + std::to_string(m) + ",H)", &mism);
  for (int s = 1; s <= 8; ++s)
    for (int q = 0; 2 * q <= s; ++q)
      formula_row(t, "SU(" + std::to_string(s - q) + "," + std::to_string(q) + ")", &mism);
  for (int n = 1; n <= 8; ++n) formula_row(t, "Sp(" + std::to_string(2 * n) + ",R)", &mism);
  for (int s = 1; s <= 8; ++s)
    for (int q = 0; 2 * q <= s; ++q)
      formula_row(t, "Sp(" + std::to_string(s - q) + "," + std::to_string(q) + ")", &mism);
  for (int s = 1; s <= 8; ++s)
    for (int q = 0; 2 * q <= s; ++q)
      formula_row(t, "SO(" + std::to_string(s - q) + "," + std::to_string(q) + ")", &mism);
  for (int n = 1; n <= 4; ++n) formula_row(t, "SO*(" + std::to_string(2 * n) + ")", &mism);
  t.all_match = !mism;
  return {t};
}

std::vector<Table> spin_tables() {
  std::vector<Table> out;
  Table t;
  t.title = "spin";
  t.header = {"group", "computed |H^1|", "table", "match", "note"};
  bool mism = false;
  for (int s = 3; s <= 10; ++s)
    for (int q = 0; 2 * q <= s; ++q)
      formula_row(t, "Spin(" + std::to_string(s - q) + "," + std::to_string(q) + ")", &mism);
  for (int n = 2; n <= 5; ++n) formula_row(t, "Spin*(" + std::to_string(2 * n) + ")", &mism);
  t.all_match = !mism;
  out.push_back(t);

  // The delta matrix, recovered from the grid: delta(p,q) = |H^1| - floor((p+q)/4).
  Table d;
  d.title = "spin delta(p,q) by residues mod 4";
  d.header = {"p\\q", "0", "1", "2", "3", "match"};
  bool dm = false;
  std::map<std::pair<int, int>, Int> computed;
  for (int s = 3; s <= 10; ++s)
    for (int q = 0; q <= s; ++q) {
      int p = s - q;
      ParsedName pn = names::parse_group_name("Spin(" + std::to_string(p) + "," + std::to_string(q) + ")");
      Int h1;
      try {
        h1 = names::resolve(pn, false).h1;
      } catch (const std::exception&) {
        h1 = -100;
      }
      Int delta = h1 - Int((p + q) / 4);
      auto key = std::make_pair(p % 4, q % 4);
      auto it = computed.find(key);
      if (it == computed.end())
        computed[key] = delta;
      else if (it->second != delta)
        dm = true;  // grid instances with equal residues disagree
    }
  for (int p = 0; p < 4; ++p) {
    std::vector<std::string> row{std::to_string(p)};
    bool rowok = true;
    for (int q = 0; q < 4; ++q) {
      Int c = computed.count({p, q}) ? computed[{p, q}] : Int(-100);
      row.push_back(istr(c));
      if (c != names::spin_delta(p, q)) rowok = false;
    }
    row.push_back(rowok ? "ok" : "MISMATCH");
    if (!rowok) dm = true;
    d.rows.push_back(row);
  }
  d.all_match = !dm;
  out.push_back(d);
  return out;
}

namespace {

struct ExcRow {
  const char* k;      // table K column
  long dim;           // dim of that K
  const char* rrank;  // real rank, from the paper, not computed
  const char* name;
  long h1;
};

struct ExcClass {
  const char* type;
  bool outer;
  const char* class_name;
  std::vector<ExcRow> rows;
};

const std::vector<ExcClass>& exceptional_data() {
  static const std::vector<ExcClass> data = {
      {"E6", false, "compact",
       {{"A5A1", 38, "4", "quasisplit'/quaternionic", 3},
        {"D5T", 46, "2", "Hermitian", 3},
        {"E6", 78, "0", "compact", 3}}},
      {"E6", true, "split",
       {{"C4", 36, "6", "split", 2}, {"F4", 52, "2", "quasicompact", 2}}},
      {"E7", false, "compact",
       {{"A7", 63, "7", "split", 2},
        {"D6A1", 69, "4", "quaternionic", 4},
        {"E6T", 79, "3", "Hermitian", 2},
        {"E7", 133, "0", "compact", 4}}},
      {"E8", false, "compact",
       {{"D8", 120, "8", "split", 3}, {"E7A1", 136, "4", "quaternionic", 3}, {"E8", 248, "0", "compact", 3}}},
      {"F4", false, "compact",
       {{"C3A1", 24, "4", "split", 3}, {"B4", 36, "1", "", 3}, {"F4", 52, "0", "compact", 3}}},
      {"G2", false, "compact", {{"A1A1", 6, "2", "split", 2}, {"G2", 14, "0", "compact", 2}}},
  };
  return data;
}

}  // namespace

std::vector<Table> exceptional_sc_tables() {
  Table t;
  t.title = "exceptional simply connected";
  t.header = {"class", "group", "K (table)", "K (computed)", "real rank [paper]",
              "name",  "computed |H^1|", "table", "match"};
  bool mism = false;
  for (const auto& cls : exceptional_data()) {
    rootdata::LieType type = rootdata::LieType::parse(cls.type);
    rootdata::BasedRootDatum rd = rootdata::build_datum(type, rootdata::Isogeny::sc());
    rootdata::InnerClass ic =
        cls.outer ? rootdata::inner_class(rd, rootdata::diagram_flip(type))
                  : rootdata::inner_class(rd, rootdata::identity_permutation(rd.nsimple()));
    CensusResult census = cohomology::census(rd, ic);
    for (const auto& row : cls.rows) {
      const cohomology::FormRecord* found = nullptr;
      int hits = 0;
      for (const auto& f : census.forms)
        if (f.label.dim_k == row.dim) {
          found = &f;
          ++hits;
        }
      bool ok = hits == 1 && found && found->h1 == row.h1;
      // Equal-rank classes must also reproduce the K string verbatim.
      std::string klabel = found ? found->label.label() : "-";
      if (ok && !cls.outer && klabel != row.k) ok = false;
      if (!ok) mism = true;
      t.rows.push_back({cls.class_name, cls.type, row.k, klabel, row.rrank, row.name,
                        found ? istr(found->h1) : "-", std::to_string(row.h1),
                        ok ? "ok" : "MISMATCH"});
    }
    if (census.forms.size() != cls.rows.size()) {
      mism = true;
      t.rows.push_back({cls.class_name, cls.type, "-", "-", "-", "census size",
                        std::to_string(census.forms.size()), std::to_string(cls.rows.size()),
                        "MISMATCH"});
    }
  }
  t.all_match = !mism;
  return {t};
}

std::vector<ScAdRow> sc_to_ad_rows(const std::string& simple_type) {
  rootdata::LieType type = rootdata::LieType::parse(simple_type);
  rootdata::BasedRootDatum rd = rootdata::build_datum(type, rootdata::Isogeny::sc());
  rootdata::InnerClass ic = rootdata::inner_class(rd, rootdata::identity_permutation(rd.nsimple()));
  auto z = rootdata::center(rd);
  rootdata::InnerClass ad_ic;
  isogeny::QuotientDatum q = isogeny::quotient_datum(rd, z.generators, &ic, &ad_ic);
  ClassContext src(rd, ic), dst(q.datum, ad_ic);
  CensusResult ad_census = cohomology::census(dst);

  // locate the form owning a target class (z, rep)
  auto form_of = [&](const TorusPoint& zbar, const TorusPoint& rep) -> int {
    for (size_t i = 0; i < ad_census.forms.size(); ++i)
      for (const auto& [mz, mrep] : ad_census.forms[i].members)
        if (mz == zbar && mrep == rep) return static_cast<int>(i);
    return -1;
  };

  std::map<int, Int> fiber_of_form;
  for (const TorusPoint& zsrc : cohomology::central_slice(src)) {
    TorusPoint zbar = q.map.map_point(zsrc);
    auto rows = isogeny::fiber_sizes(src, dst, q.map, zsrc, zbar);
    for (const auto& r : rows) {
      if (!r.hit) continue;
      int f = form_of(zbar, r.target_class.rep);
      if (f < 0) throw ValidationError("sc_to_ad_rows: target class not in census");
      auto it = fiber_of_form.find(f);
      if (it == fiber_of_form.end())
        fiber_of_form[f] = r.fiber_size;
      else if (it->second != r.fiber_size)
        throw ValidationError("sc_to_ad_rows: inconsistent fibers for one form");
    }
  }
  Int h1a = isogeny::h1_of_kernel(src, q.map);
  std::vector<ScAdRow> out;
  for (size_t i = 0; i < ad_census.forms.size(); ++i) {
    const auto& f = ad_census.forms[i];
    auto it = fiber_of_form.find(static_cast<int>(i));
    if (it == fiber_of_form.end())
      throw ValidationError("sc_to_ad_rows: adjoint form not hit by any fiber");
    ScAdRow row{f.label.dim_k, f.label.label(), f.h1, it->second, h1a / it->second};
    if (h1a % it->second != 0) throw ValidationError("sc_to_ad_rows: divisibility failure");
    out.push_back(row);
  }
  std::sort(out.begin(), out.end(), [](const ScAdRow& a, const ScAdRow& b) { return a.dim_k < b.dim_k; });
  return out;
}

std::vector<Table> adjoint_tables() {
  std::vector<Table> out;
  Table t;
  t.title = "adjoint classical";
  t.header = {"group", "computed |H^1|", "table", "match", "note"};
  bool mism = false;
  for (int n = 2; n <= 8; ++n) formula_row(t, "PSL(" + std::to_string(n) + ",R)", &mism);
  for (int m = 1; 2 * m <= 8; ++m) formula_row(t, "PSL(" + std::to_string(m) + ",H)", &mism);
  for (int s = 2; s <= 8; ++s)
    for (int q = 0; 2 * q <= s; ++q)
      formula_row(t, "PSU(" + std::to_string(s - q) + "," + std::to_string(q) + ")", &mism);
  for (int n = 1; n <= 6; ++n) formula_row(t, "PSp(" + std::to_string(2 * n) + ",R)", &mism);
  for (int s = 1; s <= 6; ++s)
    for (int q = 0; 2 * q <= s; ++q)
      formula_row(t, "PSp(" + std::to_string(s - q) + "," + std::to_string(q) + ")", &mism);
  for (int s = 2; s <= 8; ++s)
    for (int q = 0; 2 * q <= s; ++q)
      formula_row(t, "PSO(" + std::to_string(s - q) + "," + std::to_string(q) + ")", &mism);
  for (int n = 2; n <= 4; ++n) formula_row(t, "PSO*(" + std::to_string(2 * n) + ")", &mism);
  t.all_match = !mism;
  out.push_back(t);

  // Adjoint E7 with the pi0 column, derived through the isogeny fibers.
  Table e;
  e.title = "adjoint exceptional (E7)";
  e.header = {"K", "computed |H^1|", "table", "computed pi0", "table pi0", "match"};
  struct E7Row {
    const char* k;
    long dim;
    long h1;
    long pi0;
  };
  const std::vector<E7Row> expected = {
      {"A7", 63, 4, 2}, {"D6A1", 69, 4, 1}, {"E6T", 79, 4, 2}, {"E7", 133, 4, 1}};
  bool emism = false;
  try {
    auto rows = sc_to_ad_rows("E7");
    for (const auto& er : expected) {
      const ScAdRow* found = nullptr;
      for (const auto& r : rows)
        if (r.dim_k == er.dim) found = &r;
      bool ok = found && found->h1 == er.h1 && found->pi0 == er.pi0;
      if (!ok) emism = true;
      e.rows.push_back({er.k, found ? istr(found->h1) : "-", std::to_string(er.h1),
                        found ? istr(found->pi0) : "-", std::to_string(er.pi0),
                        ok ? "ok" : "MISMATCH"});
    }
  } catch (const std::exception& ex) {
    emism = true;
    e.rows.push_back({"E7", "-", "-", "-", "-", std::string("ERROR: ") + ex.what()});
  }
  e.all_match = !emism;
  out.push_back(e);
  return out;
}

std::vector<Table> make_tables(const std::string& which) {
  std::vector<Table> out;
  auto append = [&](std::vector<Table> v) {
    for (auto& t : v) out.push_back(std::move(t));
  };
  if (which == "classical")
    append(classical_tables());
  else if (which == "spin")
    append(spin_tables());
  else if (which == "exceptional-sc")
    append(exceptional_sc_tables());
  else if (which == "adjoint")
    append(adjoint_tables());
  else if (which == "all") {
    append(classical_tables());
    append(spin_tables());
    append(exceptional_sc_tables());
    append(adjoint_tables());
  } else {
    throw PreconditionError("tables: unknown selection '" + which + "'");
  }
  return out;
}

}  // namespace tables
}  // namespace galcoh

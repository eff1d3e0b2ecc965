#include "galcoh/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace galcoh {
namespace report {

using nlohmann::json;

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw PreconditionError("unknown format '" + s + "' (text|json|csv)");
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string table_text(const tables::Table& t) {
  std::ostringstream os;
  os << "== " << t.title << " ==\n";
  std::vector<size_t> widths(t.header.size(), 0);
  for (size_t j = 0; j < t.header.size(); ++j) widths[j] = t.header[j].size();
  for (const auto& row : t.rows)
    for (size_t j = 0; j < row.size() && j < widths.size(); ++j)
      widths[j] = std::max(widths[j], row[j].size());
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t j = 0; j < widths.size(); ++j)
      os << std::left << std::setw(static_cast<int>(widths[j]) + 2) << (j < row.size() ? row[j] : "");
    os << "\n";
  };
  emit(t.header);
  for (const auto& row : t.rows) emit(row);
  os << (t.all_match ? "all rows match\n" : "MISMATCHES PRESENT\n");
  return os.str();
}

json klabel_json(const cohomology::KLabel& k) {
  return json{{"label", k.label()},
              {"dim_k", k.dim_k.get_str()},
              {"rank_k", k.rank_k},
              {"compact_type", k.compact_type},
              {"k_torus_rank", k.k_torus_rank}};
}

json point_json(const exactlat::TorusPoint& p) {
  json a = json::array();
  for (const Rat& x : p.v) a.push_back(x.get_str());
  return a;
}

json form_json(const cohomology::FormRecord& f) {
  json classes = json::array();
  for (const auto& c : f.classes)
    classes.push_back(json{{"rep", point_json(c.rep)}, {"orbit_size", c.orbit_size().get_str()}});
  return json{{"form", f.label.label()},
              {"k_label", klabel_json(f.label)},
              {"invariant", point_json(f.invariant)},
              {"h1", f.h1.get_str()},
              {"strong_classes", classes},
              {"quasicompact", f.is_quasicompact},
              {"compact", f.is_compact}};
}

}  // namespace

std::string render_h1(const names::ResolvedForm& r, Format fmt) {
  const auto& f = r.form();
  if (fmt == Format::Json) {
    json j{{"schema_version", kSchemaVersion},
           {"group", r.name.canonical},
           {"datum", r.datum_description},
           {"h1", r.h1.get_str()},
           {"formula", r.formula.get_str()}};
    j.update(form_json(f));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "group,h1,formula,k_label,invariant,quasicompact\n";
    os << csv_escape(r.name.canonical) << "," << r.h1.get_str() << "," << r.formula.get_str() << ","
       << f.label.label() << "," << csv_escape(f.invariant.str()) << "," << (f.is_quasicompact ? 1 : 0)
       << "\n";
    return os.str();
  }
  os << r.name.canonical << "  (datum: " << r.datum_description << ")\n";
  os << "  |H^1(Gamma,G)| = " << r.h1.get_str() << "   [table formula: " << r.formula.get_str()
     << "]\n";
  os << "  K: " << f.label.label() << "  dim K = " << f.label.dim_k.get_str()
     << "  rank K = " << f.label.rank_k << "\n";
  os << "  central invariant: " << f.invariant.str() << (f.is_quasicompact ? "  (quasicompact)" : "")
     << (f.is_compact ? "  (compact)" : "") << "\n";
  os << "  strong classes over the invariant:\n";
  for (const auto& c : f.classes)
    os << "    v = " << c.rep.str() << "   (W_i orbit size " << c.orbit_size().get_str() << ")\n";
  return os.str();
}

std::string render_census(const std::string& title, const cohomology::ClassContext& ctx,
                          const cohomology::CensusResult& census, Format fmt) {
  (void)ctx;
  if (fmt == Format::Json) {
    json forms = json::array();
    for (const auto& f : census.forms) forms.push_back(form_json(f));
    json unhit = json::array();
    for (const auto& z : census.unhit) unhit.push_back(point_json(z));
    json j{{"schema_version", kSchemaVersion},
           {"census", title},
           {"finite_order_slice", census.finite_order_slice_only},
           {"forms", forms},
           {"unhit_invariants", unhit}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "form,k_label,dim_k,invariant,h1,quasicompact,compact\n";
    for (const auto& f : census.forms)
      os << f.label.label() << "," << f.label.label() << "," << f.label.dim_k.get_str() << ","
         << csv_escape(f.invariant.str()) << "," << f.h1.get_str() << "," << (f.is_quasicompact ? 1 : 0)
         << "," << (f.is_compact ? 1 : 0) << "\n";
    return os.str();
  }
  os << "census: " << title << (census.finite_order_slice_only ? "  [finite-order slice]" : "")
     << "\n";
  for (const auto& f : census.forms) {
    os << "  form K=" << f.label.label() << "  dim K=" << f.label.dim_k.get_str()
       << "  inv=" << f.invariant.str() << "  |H^1|=" << f.h1.get_str();
    if (f.is_quasicompact) os << "  (quasicompact)";
    if (f.is_compact) os << "  (compact)";
    os << "\n";
  }
  if (!census.unhit.empty()) {
    os << "  invariants with empty fiber:";
    for (const auto& z : census.unhit) os << " " << z.str();
    os << "\n";
  }
  return os.str();
}

std::string render_tables(const std::vector<tables::Table>& ts, Format fmt) {
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& t : ts) {
      json rows = json::array();
      for (const auto& r : t.rows) rows.push_back(r);
      arr.push_back(json{{"title", t.title}, {"header", t.header}, {"rows", rows}, {"all_match", t.all_match}});
    }
    return json{{"schema_version", kSchemaVersion}, {"tables", arr}}.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == Format::Csv) {
    for (const auto& t : ts) {
      os << csv_escape(t.title);
      for (const auto& h : t.header) os << "," << csv_escape(h);
      os << "\n";
      for (const auto& r : t.rows) {
        os << csv_escape(t.title);
        for (const auto& c : r) os << "," << csv_escape(c);
        os << "\n";
      }
    }
    return os.str();
  }
  for (const auto& t : ts) os << table_text(t) << "\n";
  return os.str();
}

std::string render_fibers(const std::string& title, const std::vector<FiberReportRow>& rows,
                          const Int& h1_of_kernel, Format fmt) {
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back(json{{"target", r.target},
                         {"invariant", r.invariant},
                         {"hit", r.hit},
                         {"fiber", r.fiber.get_str()},
                         {"pi0", r.pi0.get_str()}});
    return json{{"schema_version", kSchemaVersion},
                {"fibers", arr},
                {"isogeny", title},
                {"h1_of_kernel", h1_of_kernel.get_str()}}
               .dump(2) +
           "\n";
  }
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "target,invariant,hit,fiber,pi0\n";
    for (const auto& r : rows)
      os << csv_escape(r.target) << "," << csv_escape(r.invariant) << "," << (r.hit ? 1 : 0) << ","
         << r.fiber.get_str() << "," << r.pi0.get_str() << "\n";
    return os.str();
  }
  os << "fibers of " << title << "   |H^1(A)| = " << h1_of_kernel.get_str() << "\n";
  for (const auto& r : rows) {
    os << "  " << r.target << "  inv=" << r.invariant;
    if (r.hit)
      os << "  fiber=" << r.fiber.get_str() << "  derived pi0=" << r.pi0.get_str() << "\n";
    else
      os << "  not in the image (fiber 0)\n";
  }
  return os.str();
}

std::string render_group(const exactlat::FiniteAbelianGroup& g, Format fmt) {
  if (fmt == Format::Json) {
    json div = json::array();
    for (const Int& d : g.divisors) div.push_back(d.get_str());
    return json{{"schema_version", kSchemaVersion},
                {"group", g.str()},
                {"order", g.order().get_str()},
                {"divisors", div}}
               .dump(2) +
           "\n";
  }
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "group,order\n" << csv_escape(g.str()) << "," << g.order().get_str() << "\n";
    return os.str();
  }
  os << g.str() << "  (order " << g.order().get_str() << ")\n";
  return os.str();
}

}  // namespace report
}  // namespace galcoh

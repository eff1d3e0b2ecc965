// Command-line front end: censuses, per-form H^1, the published tables, and
// isogeny fiber decompositions.
//
// Exit codes: 0 success, 2 resolution error, 3 validation mismatch,
// 4 guard exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "galcoh/datum_file.hpp"
#include "galcoh/report.hpp"

using namespace galcoh;

namespace {

int run_h1(const std::string& spec, const std::string& format) {
  names::ResolvedForm r = names::resolve(spec, /*validate=*/true);
  std::cout << report::render_h1(r, report::parse_format(format));
  return 0;
}

rootdata::InnerClass inner_from_option(const rootdata::BasedRootDatum& rd,
                                       const rootdata::LieType& type, const std::string& opt) {
  if (opt.empty() || opt == "identity" || opt == "id" || opt == "compact")
    return rootdata::inner_class(rd, rootdata::identity_permutation(rd.nsimple()));
  if (opt == "flip" || opt == "split" || opt == "outer")
    return rootdata::inner_class(rd, rootdata::diagram_flip(type));
  std::vector<int> pi;
  std::istringstream in(opt);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) pi.push_back(std::stoi(tok));
  return rootdata::inner_class(rd, pi);
}

int run_census(const std::string& type_str, const std::string& isogeny, const std::string& inner,
               const std::string& format) {
  rootdata::LieType type;
  rootdata::BasedRootDatum* rdp = nullptr;
  rootdata::InnerClass ic;
  std::unique_ptr<rootdata::BasedRootDatum> rd;
  if (isogeny == "sc" || isogeny == "ad") {
    type = rootdata::LieType::parse(type_str);
    rd = std::make_unique<rootdata::BasedRootDatum>(rootdata::build_datum(
        type, isogeny == "sc" ? rootdata::Isogeny::sc() : rootdata::Isogeny::ad()));
    ic = inner_from_option(*rd, type, inner);
  } else {
    datum_file::DatumFile f = datum_file::parse_file(isogeny);
    if (!type_str.empty() && rootdata::LieType::parse(type_str).str() != f.type.str())
      throw PreconditionError("census: --type disagrees with the datum file");
    auto [datum, file_ic] = datum_file::realize(f);
    rd = std::make_unique<rootdata::BasedRootDatum>(std::move(datum));
    ic = inner.empty() ? file_ic : inner_from_option(*rd, f.type, inner);
    type = f.type;
  }
  rdp = rd.get();
  cohomology::ClassContext ctx(*rdp, ic);
  cohomology::CensusResult census = cohomology::census(ctx);
  std::string title = type.str() + " (" + isogeny + (ic.equal_rank ? ", equal rank" : ", outer") + ")";
  std::cout << report::render_census(title, ctx, census, report::parse_format(format));
  return 0;
}

int run_tables(const std::string& which, const std::string& format) {
  auto ts = tables::make_tables(which);
  std::cout << report::render_tables(ts, report::parse_format(format));
  for (const auto& t : ts)
    if (!t.all_match) return 3;
  return 0;
}

std::vector<exactlat::TorusPoint> parse_quotient(const cohomology::ClassContext& ctx,
                                                 const std::string& spec) {
  if (spec == "full") return ctx.center().generators;
  if (spec == "trivial") return {};
  // explicit generators: "1/2,0;0,1/2"
  std::vector<exactlat::TorusPoint> gens;
  std::istringstream in(spec);
  std::string point;
  while (std::getline(in, point, ';')) {
    std::vector<Rat> coords;
    std::istringstream pin(point);
    std::string tok;
    while (std::getline(pin, tok, ',')) {
      Rat x(tok);
      x.canonicalize();
      coords.push_back(x);
    }
    if (static_cast<int>(coords.size()) != ctx.rd().rank())
      throw PreconditionError("quotient generator has wrong length");
    gens.push_back(exactlat::TorusPoint(coords).canonical());
  }
  return gens;
}

int run_fibers(const std::string& spec, const std::string& quotient, const std::string& format) {
  names::ResolvedForm r = names::resolve(spec, /*validate=*/true);
  const cohomology::ClassContext& src = *r.ctx;
  std::vector<exactlat::TorusPoint> gens = parse_quotient(src, quotient);

  rootdata::InnerClass dst_ic;
  isogeny::QuotientDatum q = isogeny::quotient_datum(src.rd(), gens, &src.ic(), &dst_ic);
  cohomology::ClassContext dst(q.datum, dst_ic);
  cohomology::CensusResult dst_census = cohomology::census(dst);

  auto form_of = [&](const exactlat::TorusPoint& zbar, const exactlat::TorusPoint& rep) -> int {
    for (size_t i = 0; i < dst_census.forms.size(); ++i)
      for (const auto& [mz, mrep] : dst_census.forms[i].members)
        if (mz == zbar && mrep == rep) return static_cast<int>(i);
    return -1;
  };

  std::map<int, Int> fiber_of_form;
  for (const auto& z : cohomology::central_slice(src)) {
    exactlat::TorusPoint zbar = q.map.map_point(z);
    for (const auto& row : isogeny::fiber_sizes(src, dst, q.map, z, zbar)) {
      if (!row.hit) continue;
      int f = form_of(zbar, row.target_class.rep);
      if (f < 0) throw ValidationError("fibers: target class missing from census");
      auto it = fiber_of_form.find(f);
      if (it == fiber_of_form.end())
        fiber_of_form[f] = row.fiber_size;
      else if (it->second != row.fiber_size)
        throw ValidationError("fibers: inconsistent fiber sizes");
    }
  }
  Int h1a = isogeny::h1_of_kernel(src, q.map);
  std::vector<report::FiberReportRow> rows;
  for (size_t i = 0; i < dst_census.forms.size(); ++i) {
    const auto& f = dst_census.forms[i];
    report::FiberReportRow row;
    row.target = "K=" + f.label.label() + " |H^1|=" + f.h1.get_str();
    row.invariant = f.invariant.str();
    auto it = fiber_of_form.find(static_cast<int>(i));
    if (it != fiber_of_form.end()) {
      row.hit = true;
      row.fiber = it->second;
      if (h1a % row.fiber != 0) throw ValidationError("fibers: divisibility failure");
      row.pi0 = h1a / row.fiber;
    }
    rows.push_back(std::move(row));
  }
  std::cout << report::render_fibers(spec + " --quotient " + quotient, rows, h1a,
                                     report::parse_format(format));
  return 0;
}

int run_torus_h1(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open matrix file: " + path);
  int n;
  if (!(in >> n) || n < 0) throw PreconditionError("matrix file: bad rank");
  exactlat::IntMatrix theta(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw PreconditionError("matrix file: not enough entries");
      theta.at(i, j) = Int(tok);
    }
  auto g = cohomology::torus_h1(n, theta);
  std::cout << report::render_group(g, report::parse_format(format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"galcoh: Galois cohomology of real reductive groups via theta-cohomology"};
  app.require_subcommand(1);

  std::string spec, format = "text", type_str, isogeny = "sc", inner, which = "all", quotient = "full",
              matrix_path;

  auto* h1 = app.add_subcommand("h1", "resolve a named real form and report |H^1(Gamma,G)|");
  h1->add_option("spec", spec, "group name, e.g. SU(2,1), Spin(5,3), E8-split")->required();
  h1->add_option("--format", format, "text|json|csv");

  auto* census = app.add_subcommand("census", "census of strong real forms for an inner class");
  census->add_option("--type", type_str, "Cartan type, e.g. D4 or A2+T1");
  census->add_option("--isogeny", isogeny, "sc | ad | path to a datum file");
  census->add_option("--inner", inner, "identity|flip or a 0-based permutation like 0,1,3,2");
  census->add_option("--format", format, "text|json|csv");

  auto* tables_cmd = app.add_subcommand("tables", "regenerate the published tables");
  tables_cmd->add_option("--which", which, "classical|spin|exceptional-sc|adjoint|all");
  tables_cmd->add_option("--format", format, "text|json|csv");

  auto* fibers = app.add_subcommand("fibers", "fiber decomposition of H^1(G) -> H^1(G/A)");
  fibers->add_option("spec", spec, "source group name")->required();
  fibers->add_option("--quotient", quotient, "full | trivial | generators like 1/2,0;0,1/2");
  fibers->add_option("--format", format, "text|json|csv");

  auto* torus = app.add_subcommand("torus-h1", "H^1 of a real torus from its involution matrix");
  torus->add_option("--matrix", matrix_path, "file: rank then the matrix entries")->required();
  torus->add_option("--format", format, "text|json|csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*h1) return run_h1(spec, format);
    if (*census) return run_census(type_str, isogeny, inner, format);
    if (*tables_cmd) return run_tables(which, format);
    if (*fibers) return run_fibers(spec, quotient, format);
    if (*torus) return run_torus_h1(matrix_path, format);
  } catch (const GuardExceeded& e) {
    std::cerr << "{\"error\":\"guard\",\"message\":\"" << e.what() << "\"}\n";
    return 4;
  } catch (const ValidationError& e) {
    std::cerr << "{\"error\":\"validation\",\"message\":\"" << e.what() << "\"}\n";
    return 3;
  } catch (const names::ResolveError& e) {
    std::cerr << "{\"error\":\"resolve\",\"message\":\"" << e.what() << "\"}\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "{\"error\":\"input\",\"message\":\"" << e.what() << "\"}\n";
    return 2;
  }
  return 0;
}

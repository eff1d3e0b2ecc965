#include "galcoh/datum_file.hpp"

#include <fstream>
#include <sstream>

namespace galcoh {
namespace datum_file {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

DatumFile parse(std::istream& in) {
  DatumFile f;
  f.isogeny = rootdata::Isogeny::sc();
  bool have_schema = false, have_type = false;
  std::string isogeny_kind = "sc";
  std::vector<std::vector<Int>> gens;
  Int den = 1;
  bool in_generators = false;

  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    size_t colon = t.find(':');
    if (colon == std::string::npos) {
      if (!in_generators) throw PreconditionError("datum file: stray line '" + t + "'");
      std::istringstream row(t);
      std::vector<Int> r;
      std::string tok;
      while (row >> tok) r.emplace_back(tok);
      gens.push_back(std::move(r));
      continue;
    }
    std::string key = trim(t.substr(0, colon));
    std::string val = trim(t.substr(colon + 1));
    in_generators = false;
    if (key == "schema") {
      f.schema = std::stoi(val);
      have_schema = true;
    } else if (key == "cartan_type") {
      f.type = rootdata::LieType::parse(val);
      have_type = true;
    } else if (key == "isogeny") {
      isogeny_kind = val;
    } else if (key == "lattice_denominator") {
      den = Int(val);
    } else if (key == "lattice_generators") {
      in_generators = true;
      if (!val.empty()) throw PreconditionError("datum file: generators start on following lines");
    } else if (key == "inner_class_permutation") {
      std::istringstream row(val);
      int x;
      while (row >> x) f.inner_class_permutation.push_back(x);
    } else {
      throw PreconditionError("datum file: unknown key '" + key + "'");
    }
  }
  if (!have_schema || f.schema != 1)
    throw PreconditionError("datum file: missing or unsupported schema version (need schema: 1)");
  if (!have_type) throw PreconditionError("datum file: missing cartan_type");
  if (isogeny_kind == "sc")
    f.isogeny = rootdata::Isogeny::sc();
  else if (isogeny_kind == "ad")
    f.isogeny = rootdata::Isogeny::ad();
  else if (isogeny_kind == "explicit")
    f.isogeny = rootdata::Isogeny::explicit_lattice(gens, den);
  else
    throw PreconditionError("datum file: isogeny must be sc, ad or explicit");
  return f;
}

DatumFile parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open datum file: " + path);
  return parse(in);
}

std::pair<rootdata::BasedRootDatum, rootdata::InnerClass> realize(const DatumFile& f) {
  rootdata::BasedRootDatum rd = rootdata::build_datum(f.type, f.isogeny);
  std::vector<int> pi = f.inner_class_permutation.empty()
                            ? rootdata::identity_permutation(rd.nsimple())
                            : f.inner_class_permutation;
  rootdata::InnerClass ic = rootdata::inner_class(rd, pi);
  return {std::move(rd), std::move(ic)};
}

}  // namespace datum_file
}  // namespace galcoh

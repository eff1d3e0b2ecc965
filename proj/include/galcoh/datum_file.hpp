// Root-datum file format: a line-based UTF-8 document with a mandatory
// schema version. Keys: cartan_type, isogeny (sc|ad|explicit),
// lattice_denominator + lattice_generators (integer rows; explicit only),
// inner_class_permutation (0-based images; optional, default identity).

#pragma once

#include <istream>
#include <string>

#include "galcoh/rootdata.hpp"

namespace galcoh {
namespace datum_file {

struct DatumFile {
  int schema = 0;
  rootdata::LieType type;
  rootdata::Isogeny isogeny;
  std::vector<int> inner_class_permutation;  // empty = identity
};

DatumFile parse(std::istream& in);
DatumFile parse_file(const std::string& path);

// Build the datum and inner class the file describes.
std::pair<rootdata::BasedRootDatum, rootdata::InnerClass> realize(const DatumFile& f);

}  // namespace datum_file
}  // namespace galcoh

#pragma once

#include <biham/lenard.hpp>
#include <biham/models.hpp>
#include <biham/pencil.hpp>

#include <string>
#include <vector>

namespace biham {

// Contents of a structure file: two bivectors plus optional families, chains and genericity.
// Bivectors are lists of {"i", "j", "coeff"} entries over the declared variables.
struct StructureFile {
  std::string name;
  BihamStructure structure;
  std::vector<LambdaFamily> families;
  std::vector<LenardChain> chains;
  std::vector<Poly> genericity;
};

StructureFile parse_structure_text(const std::string& text);
StructureFile parse_structure_file(const std::string& path);
StructureFile structure_from_model(const ModelSpec& m);
// Canonical JSON: variables in order, upper-triangular entries sorted by index, two-space indent.
std::string serialize_structure(const StructureFile& s);

// Single bivector: {"dim", "vars", "brackets": [{"i", "j", "coeff"}]}.
PoissonStructure parse_poisson_text(const std::string& text);
std::string serialize_poisson(const PoissonStructure& p);

SkewPencil parse_pencil_text(const std::string& text);
std::string serialize_pencil(const SkewPencil& p);

LambdaFamily parse_family_text(const std::string& text, const Ring& ring);
LenardChain parse_chain_text(const std::string& text, const Ring& ring);

std::string read_text_file(const std::string& path);

}  // namespace biham

#pragma once

#include <string>

#include "poincare/region.hpp"

namespace poincare {

// Region file grammar (JSON). Every object carries "type". Unknown keys are
// rejected.
//   {"type":"disk","center":[x,y],"radius":r}
//   {"type":"halfplane","anchor":[x,y],"normal":[x,y]}
//   {"type":"diskcomplement","center":[x,y],"radius":r}
//   {"type":"punctures","points":[[x,y],...]}
//   {"type":"segment","a":[x,y],"b":[x,y]}
//   {"type":"union","args":[...]}         {"type":"intersection","args":[...]}
//   {"type":"complement","arg":{...}}
RegionSpec parse_region(const std::string& json_text);
RegionSpec load_region(const std::string& path);
std::string region_to_json(const RegionSpec& r);

}  // namespace poincare

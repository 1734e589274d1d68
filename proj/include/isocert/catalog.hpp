#pragma once

// Named groups and the group file format. Files are line based:
//
//   # comment
//   degree: 4
//   gen: (1,2,3)
//   gen: (1,2)(3,4)
//
// or a single directive `name: <catalog-id>` selecting a catalog entry.

#include <string>
#include <vector>

#include "isocert/perm_group.hpp"

namespace isocert {

// ids: trivial, Cn:<n>, D2n:<n>, Q8, A4, S4, SL2_3, A5, extraspecial_27_exp3,
// Qd3; throws ParseError on anything else
PermutationGroup catalog_group(const std::string& id);

// the fixed instances swept by tests and documentation
std::vector<std::string> catalog_ids();

PermutationGroup parse_group_text(const std::string& text);
PermutationGroup load_group_file(const std::string& path);

}  // namespace isocert

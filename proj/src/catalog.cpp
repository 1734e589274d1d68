#include "isocert/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "isocert/errors.hpp"
#include "isocert/perm.hpp"
#include "isocert/pstructure.hpp"

namespace isocert {

namespace {

constexpr std::uint64_t kMaxFamilyParameter = 100000;  // keeps Cn/D2n degrees sane

std::uint64_t family_parameter(const std::string& id, std::size_t prefix) {
  const std::string digits = id.substr(prefix);
  std::uint64_t n = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || n == 0 || n > kMaxFamilyParameter)
    throw ParseError("bad parameter in catalog id '" + id + "'");
  return n;
}

PermutationGroup cyclic(std::uint64_t n) {
  if (n == 1) return PermutationGroup::trivial(1);
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>((i + 1) % n);
  return PermutationGroup::from_generators(static_cast<int>(n), {Permutation(std::move(images))});
}

PermutationGroup dihedral(std::uint64_t n) {
  if (n == 1) return PermutationGroup::from_generators(2, {Permutation({1, 0})});
  if (n == 2) return PermutationGroup::from_generators(4, {Permutation({1, 0, 2, 3}), Permutation({0, 1, 3, 2})});
  std::vector<int> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<int>((i + 1) % n);
    ref[i] = static_cast<int>((n - i) % n);  // fixes point 1, reverses the cycle
  }
  return PermutationGroup::from_generators(static_cast<int>(n), {Permutation(std::move(rot)), Permutation(std::move(ref))});
}

// left regular action of the quaternion group on itself, points ordered
// 1, -1, i, -i, j, -j, k, -k
PermutationGroup quaternion() {
  return PermutationGroup::from_generators(
      8, {Permutation::parse_cycles("(1,3,2,4)(5,7,6,8)", 8), Permutation::parse_cycles("(1,5,2,6)(3,8,4,7)", 8)});
}

// SL_2(3) via its two elementary transvections acting on the eight nonzero
// vectors of the plane over F_3, numbered 3x + y in (x, y) order
PermutationGroup special_linear_2_3() {
  std::vector<std::pair<int, int>> points;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) points.emplace_back(x, y);
  auto index_of = [&points](int x, int y) {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == std::pair(x, y)) return static_cast<int>(i);
    throw std::logic_error("vector out of range");
  };
  auto build = [&](auto&& f) {
    std::vector<int> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto [x, y] = points[i];
      auto [u, v] = f(x, y);
      images[i] = index_of(u, v);
    }
    return Permutation(std::move(images));
  };
  return PermutationGroup::from_generators(
      8, {build([](int x, int y) { return std::pair((x + y) % 3, y); }),
          build([](int x, int y) { return std::pair(x, (x + y) % 3); })});
}

// the nonabelian group of order 27 and exponent 3: plane translations
// extended by a transvection, on the nine points 3x + y + 1
PermutationGroup extraspecial_27() {
  auto build = [](auto&& f) {
    std::vector<int> images(9);
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) {
        auto [u, v] = f(x, y);
        images[3 * x + y] = 3 * u + v;
      }
    return Permutation(std::move(images));
  };
  return PermutationGroup::from_generators(
      9, {build([](int x, int y) { return std::pair((x + 1) % 3, y); }),
          build([](int x, int y) { return std::pair(x, (y + 1) % 3); }),
          build([](int x, int y) { return std::pair((x + y) % 3, y); })});
}

PermutationGroup from_cycle_strings(int degree, std::initializer_list<const char*> gens) {
  std::vector<Permutation> parsed;
  for (const char* g : gens) parsed.push_back(Permutation::parse_cycles(g, degree));
  return PermutationGroup::from_generators(degree, std::move(parsed));
}

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

PermutationGroup catalog_group(const std::string& id) {
  if (id == "trivial") return PermutationGroup::trivial(1);
  if (id.rfind("Cn:", 0) == 0) return cyclic(family_parameter(id, 3));
  if (id.rfind("D2n:", 0) == 0) return dihedral(family_parameter(id, 4));
  if (id == "Q8") return quaternion();
  if (id == "A4") return from_cycle_strings(4, {"(1,2,3)", "(1,2)(3,4)"});
  if (id == "S4") return from_cycle_strings(4, {"(1,2,3,4)", "(1,2)"});
  if (id == "SL2_3") return special_linear_2_3();
  if (id == "A5") return from_cycle_strings(5, {"(1,2,3,4,5)", "(3,4,5)"});
  if (id == "extraspecial_27_exp3") return extraspecial_27();
  if (id == "Qd3") return qd_group(3);
  throw ParseError("unknown catalog id '" + id + "'");
}

std::vector<std::string> catalog_ids() {
  return {"trivial", "Cn:2",  "Cn:3", "Cn:4", "Cn:6",   "Cn:8", "Cn:12", "D2n:2",
          "D2n:3",   "D2n:4", "D2n:5", "D2n:6", "Q8",   "A4",   "S4",    "SL2_3",
          "A5",      "extraspecial_27_exp3", "Qd3"};
}

PermutationGroup parse_group_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int degree = -1;
  std::vector<Permutation> gens;
  std::string name;
  while (std::getline(in, line)) {
    line = trimmed(line);
    if (line.empty() || line[0] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'key: value', got '" + line + "'");
    const std::string key = trimmed(line.substr(0, colon));
    const std::string value = trimmed(line.substr(colon + 1));
    if (key == "name") {
      if (degree >= 0 || !name.empty()) throw ParseError("'name:' must be the only directive");
      if (value.empty()) throw ParseError("'name:' needs a catalog id");
      name = value;
    } else if (key == "degree") {
      if (!name.empty()) throw ParseError("'name:' must be the only directive");
      if (degree >= 0) throw ParseError("duplicate 'degree:' line");
      int parsed = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
      if (ec != std::errc{} || ptr != value.data() + value.size() || parsed <= 0)
        throw ParseError("'degree:' needs a positive integer, got '" + value + "'");
      degree = parsed;
    } else if (key == "gen") {
      if (!name.empty()) throw ParseError("'name:' must be the only directive");
      if (degree < 0) throw ParseError("'degree:' must come before 'gen:' lines");
      gens.push_back(Permutation::parse_cycles(value, degree));
    } else {
      throw ParseError("unknown directive '" + key + ":'");
    }
  }
  if (!name.empty()) return catalog_group(name);
  if (degree < 0) throw ParseError("group text needs a 'degree:' or 'name:' line");
  return PermutationGroup::from_generators(degree, std::move(gens));
}

PermutationGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read group file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_group_text(buffer.str());
}

}  // namespace isocert

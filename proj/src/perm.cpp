#include "isocert/perm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "isocert/errors.hpp"

namespace isocert {

Permutation Permutation::identity(int degree) {
  assert(degree >= 1);
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[v]) throw ParseError("image vector is not a bijection");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation out;
  out.images_ = std::move(inv);  // already a bijection, skip revalidation
  return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  assert(degree() == rhs.degree());
  std::vector<int> out(images_.size());
  for (int i = 0; i < degree(); ++i) out[i] = rhs.images_[images_[i]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation Permutation::power(std::int64_t n) const {
  const std::int64_t m = static_cast<std::int64_t>(order());
  std::int64_t e = n % m;
  if (e < 0) e += m;
  Permutation acc = identity(degree());
  Permutation base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation Permutation::parse_cycles(const std::string& text, int degree) {
  if (degree < 1) throw ParseError("degree must be positive");
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.empty()) throw ParseError("empty permutation");

  Permutation result = identity(degree);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced cycle: " + text);
    std::vector<int> cycle;
    std::size_t p = pos + 1;
    while (p < close) {
      std::size_t q = p;
      while (q < close && s[q] != ',') ++q;
      if (q == p) throw ParseError("empty entry in cycle: " + text);
      int value = 0;
      for (std::size_t t = p; t < q; ++t) {
        if (s[t] < '0' || s[t] > '9') throw ParseError("bad point in cycle: " + text);
        value = value * 10 + (s[t] - '0');
        if (value > degree) throw ParseError("point exceeds degree: " + text);
      }
      if (value < 1) throw ParseError("points are 1-based: " + text);
      cycle.push_back(value - 1);
      p = (q < close) ? q + 1 : q;
    }
    if (!cycle.empty()) {
      std::vector<char> dup(degree, 0);
      for (int v : cycle) {
        if (dup[v]) throw ParseError("repeated point in cycle: " + text);
        dup[v] = 1;
      }
      std::vector<int> images(degree);
      std::iota(images.begin(), images.end(), 0);
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      Permutation c;
      c.images_ = std::move(images);
      result = result * c;  // cycles compose left to right, as written
    }
    pos = close + 1;
  }
  return result;
}

std::size_t Permutation::hash() const {
  // FNV-1a over the image vector
  std::size_t h = 1469598103934665603ull;
  for (int v : images_) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace isocert

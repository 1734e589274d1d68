#include "isocert/character_table.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>

#include "isocert/numtheory.hpp"

namespace isocert {

namespace {

// arithmetic in the prime field F_ell; moduli stay far below 2^32, so plain
// 64-bit products never overflow
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t ell) { return a * b % ell; }

std::uint64_t power(std::uint64_t a, std::uint64_t n, std::uint64_t ell) {
  std::uint64_t r = 1;
  for (a %= ell; n; n >>= 1, a = mul(a, a, ell))
    if (n & 1) r = mul(r, a, ell);
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t ell) { return power(a, ell - 2, ell); }

using Vec = std::vector<std::uint64_t>;

// dense row-major square matrix over F_ell
struct Matrix {
  std::size_t n = 0;
  Vec a;
  explicit Matrix(std::size_t size) : n(size), a(size * size, 0) {}
  std::uint64_t& at(std::size_t row, std::size_t col) { return a[row * n + col]; }
  std::uint64_t at(std::size_t row, std::size_t col) const { return a[row * n + col]; }

  Vec apply(const Vec& v, std::uint64_t ell) const {
    Vec out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc = (acc + at(i, j) * v[j]) % ell;
      out[i] = acc;
    }
    return out;
  }
};

// basis held in reduced row-echelon form so membership and coordinates fall
// out of one elimination pass
struct Echelon {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;

  // reduces v in place against the rows; afterwards v is zero exactly when it
  // was dependent
  void reduce(Vec& v, std::uint64_t ell) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t c = v[pivots[r]];
      if (!c) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + (ell - c) * rows[r][j]) % ell;
    }
  }

  bool insert(Vec v, std::uint64_t ell) {
    reduce(v, ell);
    std::size_t p = 0;
    while (p < v.size() && v[p] == 0) ++p;
    if (p == v.size()) return false;
    const std::uint64_t inv = inverse(v[p], ell);
    for (std::uint64_t& x : v) x = mul(x, inv, ell);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint64_t c = rows[r][p];
      if (!c) continue;
      for (std::size_t j = 0; j < v.size(); ++j) rows[r][j] = (rows[r][j] + (ell - c) * v[j]) % ell;
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

// polynomials over F_ell, coefficient of x^k at index k, normalized monic
using Poly = Vec;

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t ell) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % ell;
  return out;
}

Poly poly_monic(Poly p, std::uint64_t ell) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  const std::uint64_t inv = inverse(p.back(), ell);
  for (std::uint64_t& c : p) c = mul(c, inv, ell);
  return p;
}

Poly poly_mod(Poly a, const Poly& b, std::uint64_t ell) {
  a = poly_trim(std::move(a));
  while (a.size() >= b.size()) {
    const std::uint64_t q = a.back();  // b is monic
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + (ell - q) * b[j]) % ell;
    a = poly_trim(std::move(a));
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t ell) {
  a = poly_monic(std::move(a), ell);
  b = poly_monic(std::move(b), ell);
  while (!b.empty()) {
    Poly r = poly_monic(poly_mod(std::move(a), b, ell), ell);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_divide_exact(const Poly& a, const Poly& b, std::uint64_t ell) {
  Poly rem = a;
  Poly quotient(a.size() - b.size() + 1, 0);
  for (std::size_t k = quotient.size(); k-- > 0;) {
    const std::uint64_t q = mul(rem[k + b.size() - 1], inverse(b.back(), ell), ell);
    quotient[k] = q;
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] = (rem[k + j] + (ell - q) * b[j]) % ell;
  }
  return quotient;
}

std::uint64_t poly_eval(const Poly& p, std::uint64_t x, std::uint64_t ell) {
  std::uint64_t acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = (mul(acc, x, ell) + p[k]) % ell;
  return acc;
}

// least monic polynomial with m(A) = 0, assembled as an lcm of the
// annihilators of the standard basis vectors
Poly min_poly(const Matrix& A, std::uint64_t ell) {
  Poly m = {1};
  for (std::size_t s = 0; s < A.n && m.size() <= A.n; ++s) {
    // w = m(A) e_s; if already zero this basis vector adds nothing
    Vec w(A.n, 0);
    for (std::size_t k = m.size(); k-- > 0;) {
      w = A.apply(w, ell);
      w[s] = (w[s] + m[k]) % ell;
    }
    if (std::all_of(w.begin(), w.end(), [](std::uint64_t c) { return c == 0; })) continue;

    // annihilator of w: iterate A until the Krylov vectors go dependent,
    // tracking each vector's expansion in the earlier ones
    const std::size_t width = 2 * A.n + 1;  // head plus markers for up to n+1 vectors
    Echelon ech;
    std::vector<Vec> krylov = {w};
    Poly ann;
    while (true) {
      Vec aug = krylov.back();
      aug.resize(width, 0);
      aug[A.n + krylov.size() - 1] = 1;
      Vec probe = aug;
      ech.reduce(probe, ell);
      bool zero_head = true;
      for (std::size_t j = 0; j < A.n; ++j)
        if (probe[j]) {
          zero_head = false;
          break;
        }
      if (zero_head) {
        // the head vanished: the tail holds the dependence q(A) w = 0
        ann.assign(probe.begin() + A.n, probe.end());
        ann = poly_monic(std::move(ann), ell);
        break;
      }
      ech.insert(std::move(aug), ell);
      krylov.push_back(A.apply(krylov.back(), ell));
    }
    const Poly g = poly_gcd(m, ann, ell);
    m = poly_mul(poly_divide_exact(m, g, ell), ann, ell);  // lcm
    m = poly_monic(std::move(m), ell);
  }
  return m;
}

std::vector<Vec> nullspace(const Matrix& A, std::uint64_t ell) {
  Echelon ech;
  for (std::size_t i = 0; i < A.n; ++i) {
    Vec row(A.n);
    for (std::size_t j = 0; j < A.n; ++j) row[j] = A.at(i, j);
    ech.insert(std::move(row), ell);
  }
  std::vector<bool> is_pivot(A.n, false);
  for (std::size_t p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free_col = 0; free_col < A.n; ++free_col) {
    if (is_pivot[free_col]) continue;
    Vec v(A.n, 0);
    v[free_col] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivots[r]] = (ell - ech.rows[r][free_col]) % ell;
    basis.push_back(std::move(v));
  }
  return basis;
}

// everything per-class the table construction needs from the group
struct ClassData {
  std::size_t r = 0;
  std::vector<std::uint64_t> sizes;
  std::vector<std::size_t> inverse_class;
  std::vector<std::vector<std::size_t>> power_class;  // [i][t] = class of rep_i^t, t < order
};

ClassData collect_class_data(const PermutationGroup& G) {
  const auto& classes = G.conjugacy_classes();
  ClassData data;
  data.r = classes.size();
  for (const ConjugacyClass& c : classes) data.sizes.push_back(c.size());
  for (const ConjugacyClass& c : classes) {
    data.inverse_class.push_back(G.class_index_of(c.representative.inverse()));
    std::vector<std::size_t> powers;
    Permutation g = Permutation::identity(G.degree());
    for (std::uint64_t t = 0; t < c.element_order; ++t) {
      powers.push_back(G.class_index_of(g));
      g = g * c.representative;
    }
    data.power_class.push_back(std::move(powers));
  }
  return data;
}

// multiplication by the i-th class sum in the class-sum basis:
// entry (k, j) counts pairs x in C_i, y in C_j with x y = rep_k
Matrix class_sum_matrix(const PermutationGroup& G, std::size_t i) {
  const auto& classes = G.conjugacy_classes();
  Matrix N(classes.size());
  for (const Permutation& x : classes[i].elements) {
    const Permutation xinv = x.inverse();
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const std::size_t j = G.class_index_of(xinv * classes[k].representative);
      ++N.at(k, j);
    }
  }
  return N;
}

// simultaneous eigenvectors of all class-sum matrices, or nothing when some
// eigenspace refuses to split over this modulus
std::optional<std::vector<Vec>> common_eigenvectors(const PermutationGroup& G, std::uint64_t ell) {
  const std::size_t r = G.conjugacy_classes().size();
  std::vector<std::vector<Vec>> subspaces;
  {
    std::vector<Vec> full;
    for (std::size_t j = 0; j < r; ++j) {
      Vec e(r, 0);
      e[j] = 1;
      full.push_back(std::move(e));
    }
    subspaces.push_back(std::move(full));
  }

  for (std::size_t i = 1; i < r; ++i) {
    if (std::all_of(subspaces.begin(), subspaces.end(),
                    [](const std::vector<Vec>& s) { return s.size() == 1; }))
      break;
    const Matrix N = class_sum_matrix(G, i);
    std::vector<std::vector<Vec>> refined;
    for (std::vector<Vec>& basis : subspaces) {
      if (basis.size() == 1) {
        refined.push_back(std::move(basis));
        continue;
      }
      // coordinates relative to the subspace basis
      Echelon coords;
      for (const Vec& b : basis) {
        Vec aug = b;
        aug.resize(r + basis.size(), 0);
        aug[r + (&b - basis.data())] = 1;
        coords.insert(std::move(aug), ell);
      }
      const std::size_t d = basis.size();
      Matrix A(d);
      for (std::size_t c = 0; c < d; ++c) {
        Vec img = N.apply(basis[c], ell);
        img.resize(r + d, 0);
        coords.reduce(img, ell);
        for (std::size_t j = 0; j < r; ++j)
          if (img[j] != 0) throw std::logic_error("class sum left an invariant subspace");
        // the tail now holds minus the coordinates
        for (std::size_t row = 0; row < d; ++row) A.at(row, c) = (ell - img[r + row]) % ell;
      }

      const Poly m = min_poly(A, ell);
      std::vector<std::uint64_t> roots;
      for (std::uint64_t x = 0; x < ell; ++x)
        if (poly_eval(m, x, ell) == 0) roots.push_back(x);
      if (roots.size() <= 1) {
        refined.push_back(std::move(basis));
        continue;
      }
      for (std::uint64_t lambda : roots) {
        Matrix shifted = A;
        for (std::size_t j = 0; j < d; ++j) shifted.at(j, j) = (shifted.at(j, j) + ell - lambda) % ell;
        std::vector<Vec> sub;
        for (const Vec& coeffs : nullspace(shifted, ell)) {
          Vec v(r, 0);
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t j = 0; j < r; ++j) v[j] = (v[j] + coeffs[c] * basis[c][j]) % ell;
          sub.push_back(std::move(v));
        }
        if (!sub.empty()) refined.push_back(std::move(sub));
      }
    }
    subspaces = std::move(refined);
  }

  std::vector<Vec> eigenvectors;
  for (const std::vector<Vec>& s : subspaces) {
    if (s.size() != 1) return std::nullopt;  // this modulus failed to split
    eigenvectors.push_back(s.front());
  }
  return eigenvectors;
}

// element of multiplicative order exactly e, derived from the smallest
// generator-candidate for determinism
std::uint64_t root_of_order(std::uint64_t e, std::uint64_t ell) {
  for (std::uint64_t a = 2; a < ell; ++a) {
    const std::uint64_t theta = power(a, (ell - 1) / e, ell);
    bool exact = theta != 1 || e == 1;
    for (const PrimePower& q : factorize(e))
      if (power(theta, e / q.prime, ell) == 1) {
        exact = false;
        break;
      }
    if (exact) return theta;
  }
  throw std::logic_error("no element of the requested order");
}

struct ModularTable {
  std::vector<std::uint64_t> degrees;
  std::vector<Vec> values;  // [character][class], modular
};

std::optional<ModularTable> modular_character_values(const PermutationGroup& G, const ClassData& data,
                                                     std::uint64_t ell) {
  auto eigen = common_eigenvectors(G, ell);
  if (!eigen) return std::nullopt;
  const std::size_t r = data.r;

  // eigenvalues omega_i = h_i chi(g_i) / chi(1) mod ell, one row of N_i per
  // character since the eigenvector is known
  std::vector<Vec> omega(r, Vec(r, 0));
  std::vector<std::size_t> anchor(r);
  for (std::size_t c = 0; c < r; ++c) {
    const Vec& v = (*eigen)[c];
    anchor[c] = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; }) - v.begin();
    omega[c][0] = 1;
  }
  for (std::size_t i = 1; i < r; ++i) {
    const Matrix N = class_sum_matrix(G, i);
    for (std::size_t c = 0; c < r; ++c) {
      const Vec& v = (*eigen)[c];
      std::uint64_t num = 0;
      for (std::size_t j = 0; j < r; ++j) num = (num + N.at(anchor[c], j) * v[j]) % ell;
      omega[c][i] = mul(num, inverse(v[anchor[c]], ell), ell);
    }
  }

  ModularTable table;
  table.degrees.resize(r);
  table.values.assign(r, Vec(r, 0));
  const std::uint64_t order_mod = G.order() % ell;
  for (std::size_t c = 0; c < r; ++c) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < r; ++i)
      s = (s + mul(mul(omega[c][i], omega[c][data.inverse_class[i]], ell), inverse(data.sizes[i] % ell, ell), ell)) %
          ell;
    const std::uint64_t d_squared = mul(order_mod, inverse(s, ell), ell);
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d <= (ell - 1) / 2; ++d)
      if (mul(d, d, ell) == d_squared) {
        degree = d;
        break;
      }
    if (degree == 0) return std::nullopt;
    table.degrees[c] = degree;
    for (std::size_t i = 0; i < r; ++i)
      table.values[c][i] = mul(mul(omega[c][i], degree, ell), inverse(data.sizes[i] % ell, ell), ell);
  }
  return table;
}

}  // namespace

bool character_row_less(const ClassFunction& a, const ClassFunction& b) {
  const std::uint64_t da = character_degree(a), db = character_degree(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.values().size(); ++i) {
    const std::string sa = a.at_class(i).to_string();
    const std::string sb = b.at_class(i).to_string();
    if (sa == sb) continue;
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return sa < sb;
  }
  return false;
}

CharacterTable character_table(const PermutationGroup& G, const Limits& limits) {
  if (G.order() > limits.max_order)
    throw ScaleLimitError("character table at order " + std::to_string(G.order()) +
                          " exceeds the scale limit of " + std::to_string(limits.max_order));
  const ClassData data = collect_class_data(G);
  const std::uint64_t e = G.exponent();

  // smallest prime with e-th roots of unity and unambiguous square roots of
  // the degrees; a handful of fallbacks in case a modulus fails to split
  std::vector<std::uint64_t> moduli;
  for (std::uint64_t ell = e + 1; moduli.size() < 8; ell += e)
    if (is_prime(ell) && ell * ell > 4 * G.order()) moduli.push_back(ell);

  for (std::uint64_t ell : moduli) {
    auto modular = modular_character_values(G, data, ell);
    if (!modular) continue;

    const std::uint64_t theta = root_of_order(e, ell);
    std::vector<ClassFunction> rows;
    for (std::size_t c = 0; c < data.r; ++c) {
      std::vector<CyclotomicNumber> values;
      for (std::size_t i = 0; i < data.r; ++i) {
        const std::uint64_t o = data.power_class[i].size();
        const std::uint64_t theta_o = power(theta, e / o, ell);
        const std::uint64_t inv_o = inverse(o % ell, ell);
        // multiplicity of each o-th root of unity among the eigenvalues of
        // the representation at this class; true values sit below ell
        std::vector<Rational> poly(e, Rational(0));
        for (std::uint64_t s = 0; s < o; ++s) {
          std::uint64_t m = 0;
          const std::uint64_t theta_inv_s = inverse(power(theta_o, s, ell), ell);
          for (std::uint64_t t = 0; t < o; ++t)
            m = (m + mul(modular->values[c][data.power_class[i][t]], power(theta_inv_s, t, ell), ell)) % ell;
          m = mul(m, inv_o, ell);
          poly[s * (e / o)] += Rational(static_cast<std::int64_t>(m));
        }
        values.push_back(CyclotomicNumber::from_polynomial(e, std::move(poly)));
      }
      rows.emplace_back(G, std::move(values));
    }

    std::uint64_t degree_square_sum = 0;
    for (std::uint64_t d : modular->degrees) degree_square_sum += d * d;
    if (degree_square_sum != G.order()) throw std::logic_error("degrees do not square-sum to the group order");

    std::sort(rows.begin(), rows.end(), character_row_less);
    return CharacterTable{G, e, std::move(rows)};
  }
  throw std::logic_error("all candidate moduli failed to split the class algebra");
}

}  // namespace isocert

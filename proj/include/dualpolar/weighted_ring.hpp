#ifndef DUALPOLAR_WEIGHTED_RING_HPP
#define DUALPOLAR_WEIGHTED_RING_HPP

// The weighted truncated polynomial ring P/W_d over F_p:
//   P = F[X_1, X_2, ...]/(X_1^p, X_2^p, ...),  wt(X_i) = p^{i-1},
//   W_d = ideal of the monomials of weight > d.
// A basis of P/W_d is the set of monomials with every exponent < p and
// weight <= d; since such exponent vectors are exactly base-p digit vectors,
// the basis is in bijection with {0, ..., d} and dim P/W_d = d + 1.

#include "dualpolar/algebra_table.hpp"
#include "dualpolar/exact_int.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dualpolar {

struct Monomial {
  std::vector<unsigned> exponents;  // exponents[i] = power of X_{i+1}, no trailing zeros

  long weight(unsigned p) const {
    long w = 0, pw = 1;
    for (unsigned e : exponents) {
      w += static_cast<long>(e) * pw;
      pw *= static_cast<long>(p);
    }
    return w;
  }

  std::string label() const {
    std::string s;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += "X" + std::to_string(i + 1);
      if (exponents[i] > 1) s += "^" + std::to_string(exponents[i]);
    }
    return s.empty() ? "1" : s;
  }

  void trim() {
    while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
  }

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

// Number of variables that survive in P/W_d: wt(X_i) = p^{i-1} <= d.
inline int ring_num_variables(unsigned p, int d) {
  int l = 0;
  long pw = 1;
  while (pw <= d) {
    ++l;
    pw *= static_cast<long>(p);
  }
  return l;
}

// Basis monomials in increasing weight: index w carries the base-p digits of w.
inline std::vector<Monomial> ring_basis(unsigned p, int d) {
  if (!is_prime(p)) throw std::invalid_argument("ring_basis: p must be prime");
  if (d < 0) throw std::invalid_argument("ring_basis: d must be >= 0");
  int l = ring_num_variables(p, d);
  std::vector<Monomial> basis;
  basis.reserve(static_cast<std::size_t>(d) + 1);
  for (int w = 0; w <= d; ++w) {
    Monomial m;
    m.exponents.assign(static_cast<std::size_t>(l), 0);
    int ww = w;
    for (int i = 0; i < l; ++i) {
      m.exponents[static_cast<std::size_t>(i)] = static_cast<unsigned>(ww % static_cast<int>(p));
      ww /= static_cast<int>(p);
    }
    m.trim();
    basis.push_back(std::move(m));
  }
  return basis;
}

// Exponentwise product; nullopt means the product is 0 in P/W_d (an exponent
// reached p, or the weight exceeded d).
inline std::optional<Monomial> ring_multiply(unsigned p, int d, const Monomial& a,
                                             const Monomial& b) {
  std::size_t l = std::max(a.exponents.size(), b.exponents.size());
  Monomial m;
  m.exponents.assign(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    unsigned e = (i < a.exponents.size() ? a.exponents[i] : 0) +
                 (i < b.exponents.size() ? b.exponents[i] : 0);
    if (e >= p) return std::nullopt;
    m.exponents[i] = e;
  }
  if (m.weight(p) > d) return std::nullopt;
  m.trim();
  return m;
}

inline AlgebraTable ring_table(unsigned p, int d) {
  auto basis = ring_basis(p, d);
  std::vector<std::string> labels;
  for (const auto& m : basis) labels.push_back(m.label());
  AlgebraTable t = AlgebraTable::with_dim(p, std::move(labels), 0);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      auto m = ring_multiply(p, d, basis[static_cast<std::size_t>(i)],
                             basis[static_cast<std::size_t>(j)]);
      if (m) t.c(i, j, static_cast<int>(m->weight(p))) = 1;
    }
  return t;
}

// Y_d: the unique basis monomial of top weight d (its base-p digit vector).
inline Monomial socle_monomial(unsigned p, int d) {
  auto basis = ring_basis(p, d);
  return basis.back();
}

}  // namespace dualpolar

#endif

#ifndef DUALPOLAR_SCHEME_HPP
#define DUALPOLAR_SCHEME_HPP

// Dual polar scheme parameters and the exact structure constants of the
// Riemann basis {C_0, ..., C_d}, where C_i = sum_j [j i]_q A_{d-j}.
//
// The constants come in two independent implementations:
//   rho             - the all-integer product form
//                       [d-u s-u]_q [d-s t-u]_q prod_{l<d-s-t+u} (q^u + q^{e+l})
//   rho_semilattice - the regular-semilattice triple summation
//                       mu(s,u) * sum_j nu'(j,u) pi(j,s,t)
// The test suite asserts their agreement; neither is derived from the other.
//
// Every power of q is tracked as a doubled integer exponent so that the
// Hermitian families (e = 3/2 and e = 1/2, q = b^2) stay in exact integers.

#include "dualpolar/exact_int.hpp"
#include "dualpolar/qnum.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dualpolar {

enum class SchemeFamily { C, B, D, TwoD, TwoAEven, TwoAOdd };

inline constexpr SchemeFamily all_families[] = {SchemeFamily::C,    SchemeFamily::B,
                                                SchemeFamily::D,    SchemeFamily::TwoD,
                                                SchemeFamily::TwoAEven, SchemeFamily::TwoAOdd};

// 2e = 2, 2, 0, 4, 3, 1 for C, B, D, 2D, 2A-even, 2A-odd.
constexpr int family_two_e(SchemeFamily f) {
  switch (f) {
    case SchemeFamily::C:
    case SchemeFamily::B: return 2;
    case SchemeFamily::D: return 0;
    case SchemeFamily::TwoD: return 4;
    case SchemeFamily::TwoAEven: return 3;
    case SchemeFamily::TwoAOdd: return 1;
  }
  return 0;
}

constexpr bool family_hermitian(SchemeFamily f) {
  return f == SchemeFamily::TwoAEven || f == SchemeFamily::TwoAOdd;
}

// q = b^scale: the Hermitian families are parametrized by r with q = r^2.
constexpr int family_scale(SchemeFamily f) { return family_hermitian(f) ? 2 : 1; }

constexpr const char* family_name(SchemeFamily f) {
  switch (f) {
    case SchemeFamily::C: return "C";
    case SchemeFamily::B: return "B";
    case SchemeFamily::D: return "D";
    case SchemeFamily::TwoD: return "2D";
    case SchemeFamily::TwoAEven: return "2A-even";
    case SchemeFamily::TwoAOdd: return "2A-odd";
  }
  return "?";
}

inline std::optional<SchemeFamily> parse_family(std::string_view s) {
  for (SchemeFamily f : all_families)
    if (s == family_name(f)) return f;
  return std::nullopt;
}

struct SchemeParams {
  SchemeFamily family;
  int d;       // scheme rank (number of classes)
  ExactInt b;  // base parameter: q itself, or r for the Hermitian families

  SchemeParams(SchemeFamily family_, int d_, ExactInt b_)
      : family(family_), d(d_), b(std::move(b_)) {
    if (d < 1) throw std::invalid_argument("SchemeParams: rank d must be >= 1");
    if (b < 2) throw std::invalid_argument("SchemeParams: base parameter must be >= 2");
  }

  int scale() const { return family_scale(family); }
  int two_e() const { return family_two_e(family); }
  ExactInt q() const { return ipow(b, static_cast<unsigned long>(scale())); }

  // q^{x_times_2 / 2} = b^{scale * x_times_2 / 2}; the scale makes the
  // half-integer Hermitian exponents land on integers.
  ExactInt q_power(long x_times_2) const {
    if (x_times_2 < 0) throw std::invalid_argument("q_power: negative exponent");
    long num = static_cast<long>(scale()) * x_times_2;
    if (num % 2 != 0) throw std::invalid_argument("q_power: non-integral power of q");
    return ipow(b, static_cast<unsigned long>(num / 2));
  }

  unsigned q_power_mod(long x_times_2, unsigned p) const {
    if (x_times_2 < 0) throw std::invalid_argument("q_power_mod: negative exponent");
    long num = static_cast<long>(scale()) * x_times_2;
    if (num % 2 != 0) throw std::invalid_argument("q_power_mod: non-integral power of q");
    return pow_mod(mod_reduce(b, p), static_cast<unsigned long>(num / 2), p);
  }

  std::string key() const {
    return std::string(family_name(family)) + "_" + std::to_string(d) + "(" + b.str() + ")";
  }

  friend bool operator==(const SchemeParams& x, const SchemeParams& y) {
    return x.family == y.family && x.d == y.d && x.b == y.b;
  }
};

namespace detail {

inline ExactInt rho_with_table(const SchemeParams& P, GaussTable& g, int s, int t, int u) {
  const ExactInt& g1 = g(P.d - u, s - u);
  if (g1 == 0) return 0;
  const ExactInt& g2 = g(P.d - s, t - u);
  if (g2 == 0) return 0;
  int k = P.d - s - t + u;  // both Gaussian factors nonzero forces k >= 0
  ExactInt prod{1};
  if (k > 0) {
    ExactInt qu = P.q_power(2L * u);
    for (int l = 0; l < k; ++l) prod *= qu + P.q_power(P.two_e() + 2L * l);
  }
  return g1 * g2 * prod;
}

inline ExactInt rho_semilattice_with_table(const SchemeParams& P, GaussTable& g, int s, int t,
                                           int u) {
  const int d = P.d;
  const ExactInt mu = g(d - u, s - u);
  if (mu == 0) return 0;
  ExactInt total{0};
  for (int j = 0; j <= u; ++j) {
    ExactInt nu = g(u, j) * P.q_power(2L * choose2(u - j));
    if ((u - j) % 2 != 0) nu = -nu;
    ExactInt pi{0};
    for (int i = 0; i <= d; ++i) {
      const ExactInt& a = g(d - s, d - i);
      if (a == 0) continue;
      const ExactInt& c = g(i - s + j, t);
      if (c == 0) continue;
      pi += a * c * P.q_power(static_cast<long>(P.two_e()) * (d - i) + 2L * choose2(d - i));
    }
    total += nu * pi;
  }
  return mu * total;
}

}  // namespace detail

// Product-form structure constant; 0 whenever u > min(s,t).
inline ExactInt rho(const SchemeParams& params, int s, int t, int u) {
  GaussTable g(params.q());
  return detail::rho_with_table(params, g, s, t, u);
}

// Independent summation-form structure constant (oracle for rho).
inline ExactInt rho_semilattice(const SchemeParams& params, int s, int t, int u) {
  GaussTable g(params.q());
  return detail::rho_semilattice_with_table(params, g, s, t, u);
}

// All rho_{s,t}^u with 0 <= u <= min(s,t) <= d, stored triangularly.
// Entries outside the stored domain read as 0.
class StructureTensor {
 public:
  using EntryFn = ExactInt (*)(const SchemeParams&, GaussTable&, int, int, int);

  static StructureTensor product_form(const SchemeParams& params) {
    return StructureTensor(params, &detail::rho_with_table);
  }
  static StructureTensor semilattice_form(const SchemeParams& params) {
    return StructureTensor(params, &detail::rho_semilattice_with_table);
  }
  static StructureTensor from_values(const SchemeParams& params, std::vector<ExactInt> values) {
    return StructureTensor(params, std::move(values));
  }

  const SchemeParams& params() const { return params_; }
  int d() const { return params_.d; }

  const ExactInt& rho(int s, int t, int u) const {
    if (s < 0 || t < 0 || u < 0 || s > d() || t > d() || u > std::min(s, t)) return zero();
    return vals_[index(s, t, u)];
  }

  void set(int s, int t, int u, ExactInt v) { vals_[index(s, t, u)] = std::move(v); }

  static std::size_t storage_size(int d) {
    std::size_t n = 0;
    for (int s = 0; s <= d; ++s)
      for (int t = 0; t <= d; ++t) n += static_cast<std::size_t>(std::min(s, t)) + 1;
    return n;
  }

 private:
  StructureTensor(const SchemeParams& params, EntryFn fn) : params_(params) {
    build_offsets();
    GaussTable g(params_.q());
    vals_.reserve(storage_size(d()));
    for (int s = 0; s <= d(); ++s)
      for (int t = 0; t <= d(); ++t)
        for (int u = 0; u <= std::min(s, t); ++u) vals_.push_back(fn(params_, g, s, t, u));
  }

  StructureTensor(const SchemeParams& params, std::vector<ExactInt> values)
      : params_(params), vals_(std::move(values)) {
    build_offsets();
    if (vals_.size() != storage_size(d()))
      throw std::invalid_argument("StructureTensor: wrong value count");
  }

  void build_offsets() {
    int n = d() + 1;
    offsets_.assign(static_cast<std::size_t>(n) * n, 0);
    std::size_t ofs = 0;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        offsets_[static_cast<std::size_t>(s) * n + t] = ofs;
        ofs += static_cast<std::size_t>(std::min(s, t)) + 1;
      }
  }

  std::size_t index(int s, int t, int u) const {
    return offsets_[static_cast<std::size_t>(s) * (d() + 1) + t] + static_cast<std::size_t>(u);
  }

  static const ExactInt& zero() {
    static const ExactInt z{0};
    return z;
  }

  SchemeParams params_;
  std::vector<std::size_t> offsets_;
  std::vector<ExactInt> vals_;
};

inline StructureTensor structure_tensor(const SchemeParams& params) {
  return StructureTensor::product_form(params);
}

using ExactMatrix = std::vector<std::vector<ExactInt>>;

inline ExactMatrix exact_identity(int n) {
  ExactMatrix m(n, std::vector<ExactInt>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline ExactMatrix exact_mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  int n = static_cast<int>(a.size()), m = static_cast<int>(b[0].size()),
      k = static_cast<int>(b.size());
  ExactMatrix out(n, std::vector<ExactInt>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (int j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

// Regular-representation matrix of C_s: (G_s)_{t,u} = rho_{s,t}^u, lower triangular.
inline ExactMatrix g_matrix(const StructureTensor& tensor, int s) {
  int n = tensor.d() + 1;
  ExactMatrix m(n, std::vector<ExactInt>(n, 0));
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u) m[t][u] = tensor.rho(s, t, u);
  return m;
}

// Base change between the adjacency and Riemann bases.
//   m()[i][j] = [j i]_q   (the coefficient of A_{d-j} in C_i)
// m() is unit upper triangular; its inverse is computed by an exact
// triangular solve, so it is integral by construction. Any failure of the
// round trip is a fatal internal error.
class BaseChange {
 public:
  explicit BaseChange(const SchemeParams& params) : d_(params.d) {
    GaussTable g(params.q());
    int n = d_ + 1;
    m_ = exact_identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m_[i][j] = g(j, i);
    inv_ = exact_identity(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        ExactInt acc{0};
        for (int k = i; k < j; ++k) acc += inv_[i][k] * m_[k][j];
        inv_[i][j] = -acc;
      }
    if (exact_mat_mul(m_, inv_) != exact_identity(n))
      throw std::logic_error("BaseChange: inverse round trip failed");
  }

  int d() const { return d_; }
  const ExactMatrix& m() const { return m_; }
  const ExactMatrix& m_inverse() const { return inv_; }

  // coefficient of A_a in C_i
  const ExactInt& riemann_from_adjacency(int i, int a) const { return m_[i][d_ - a]; }
  // coefficient of C_i in A_a
  const ExactInt& adjacency_from_riemann(int a, int i) const { return inv_[d_ - a][i]; }

 private:
  int d_;
  ExactMatrix m_;
  ExactMatrix inv_;
};

inline BaseChange riemann_base_change(const SchemeParams& params) { return BaseChange(params); }

// Dense (d+1)^3 tensor of exact integers, used for adjacency-basis
// intersection numbers p_{ij}^k.
class CubeTensor {
 public:
  explicit CubeTensor(int order) : n_(order), v_(static_cast<std::size_t>(order) * order * order) {}

  int order() const { return n_; }
  const ExactInt& at(int i, int j, int k) const { return v_[index(i, j, k)]; }
  ExactInt& at(int i, int j, int k) { return v_[index(i, j, k)]; }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
  }
  int n_;
  std::vector<ExactInt> v_;
};

// Structure-constant base change: given constants c in one basis and the
// expansion new_a = sum_s X[a][s] old_s (with Y = X^{-1}), returns the
// constants in the new basis.
inline CubeTensor change_tensor_basis(const CubeTensor& c, const ExactMatrix& x,
                                      const ExactMatrix& y) {
  int n = c.order();
  CubeTensor t1(n), t2(n), out(n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int m = 0; m < n; ++m) {
        ExactInt acc{0};
        for (int u = 0; u < n; ++u)
          if (c.at(s, t, u) != 0 && y[u][m] != 0) acc += c.at(s, t, u) * y[u][m];
        t1.at(s, t, m) = std::move(acc);
      }
  for (int s = 0; s < n; ++s)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m) {
        ExactInt acc{0};
        for (int t = 0; t < n; ++t)
          if (x[b][t] != 0 && t1.at(s, t, m) != 0) acc += x[b][t] * t1.at(s, t, m);
        t2.at(s, b, m) = std::move(acc);
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m) {
        ExactInt acc{0};
        for (int s = 0; s < n; ++s)
          if (x[a][s] != 0 && t2.at(s, b, m) != 0) acc += x[a][s] * t2.at(s, b, m);
        out.at(a, b, m) = std::move(acc);
      }
  return out;
}

// Intersection numbers p_{ij}^k of the adjacency basis, obtained by
// conjugating the Riemann tensor through the base change. A negative entry
// would mean an internal inconsistency and is fatal.
inline CubeTensor adjacency_intersection_numbers(const StructureTensor& tensor,
                                                 const BaseChange& bc) {
  int n = tensor.d() + 1;
  CubeTensor riemann(n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) riemann.at(s, t, u) = tensor.rho(s, t, u);
  // A_a = sum_i adjacency_from_riemann(a, i) C_i
  ExactMatrix x(n, std::vector<ExactInt>(n)), y(n, std::vector<ExactInt>(n));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) x[a][i] = bc.adjacency_from_riemann(a, i);
  for (int u = 0; u < n; ++u)
    for (int m = 0; m < n; ++m) y[u][m] = bc.riemann_from_adjacency(u, m);
  CubeTensor p = change_tensor_basis(riemann, x, y);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (p.at(i, j, k) < 0)
          throw std::logic_error("adjacency_intersection_numbers: negative entry p_{" +
                                 std::to_string(i) + "," + std::to_string(j) + "}^" +
                                 std::to_string(k) + " = " + p.at(i, j, k).str());
  return p;
}

inline CubeTensor adjacency_intersection_numbers(const SchemeParams& params) {
  return adjacency_intersection_numbers(structure_tensor(params), BaseChange(params));
}

// Inverse direction: Riemann constants from (empirical) adjacency constants.
// Any nonzero entry with u > min(s,t) falsifies triangularity and is fatal.
inline StructureTensor riemann_tensor_from_adjacency(const SchemeParams& params,
                                                     const CubeTensor& pnums,
                                                     const BaseChange& bc) {
  int n = params.d + 1;
  ExactMatrix x(n, std::vector<ExactInt>(n)), y(n, std::vector<ExactInt>(n));
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) x[i][a] = bc.riemann_from_adjacency(i, a);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < n; ++i) y[a][i] = bc.adjacency_from_riemann(a, i);
  CubeTensor r = change_tensor_basis(pnums, x, y);
  std::vector<ExactInt> vals;
  vals.reserve(StructureTensor::storage_size(params.d));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) {
        if (u <= std::min(s, t))
          vals.push_back(r.at(s, t, u));
        else if (r.at(s, t, u) != 0)
          throw std::logic_error("riemann_tensor_from_adjacency: nonzero entry above the "
                                 "triangle at (" + std::to_string(s) + "," + std::to_string(t) +
                                 "," + std::to_string(u) + ")");
      }
  return StructureTensor::from_values(params, std::move(vals));
}

}  // namespace dualpolar

#endif

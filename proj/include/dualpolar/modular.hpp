#ifndef DUALPOLAR_MODULAR_HPP
#define DUALPOLAR_MODULAR_HPP

// Everything mod p: reduced structure tensors, block counting, locality,
// the local-case closed form, and the congruence checks behind the
// isomorphisms and epimorphisms between modular adjacency algebras.

#include "dualpolar/algebra_table.hpp"
#include "dualpolar/exact_int.hpp"
#include "dualpolar/scheme.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dualpolar {

// Entrywise mod-p reduction of a structure tensor, same triangular domain.
class ModTensor {
 public:
  ModTensor(const StructureTensor& tensor, unsigned p)
      : params_(tensor.params()), p_(checked(p)) {
    int d = params_.d;
    offsets_.assign(static_cast<std::size_t>(d + 1) * (d + 1), 0);
    std::size_t ofs = 0;
    for (int s = 0; s <= d; ++s)
      for (int t = 0; t <= d; ++t) {
        offsets_[static_cast<std::size_t>(s) * (d + 1) + t] = ofs;
        ofs += static_cast<std::size_t>(std::min(s, t)) + 1;
      }
    vals_.reserve(ofs);
    for (int s = 0; s <= d; ++s)
      for (int t = 0; t <= d; ++t)
        for (int u = 0; u <= std::min(s, t); ++u) vals_.push_back(mod_reduce(tensor.rho(s, t, u), p_));
  }

  const SchemeParams& params() const { return params_; }
  int d() const { return params_.d; }
  unsigned p() const { return p_; }

  unsigned rho(int s, int t, int u) const {
    if (s < 0 || t < 0 || u < 0 || s > d() || t > d() || u > std::min(s, t)) return 0;
    return vals_[offsets_[static_cast<std::size_t>(s) * (d() + 1) + t] +
                 static_cast<std::size_t>(u)];
  }

 private:
  static unsigned checked(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("ModTensor: p must be prime");
    return p;
  }
  SchemeParams params_;
  unsigned p_;
  std::vector<std::size_t> offsets_;
  std::vector<unsigned> vals_;
};

inline ModTensor reduce_tensor(const StructureTensor& tensor, unsigned p) {
  return ModTensor(tensor, p);
}

inline ModTensor mod_tensor(const SchemeParams& params, unsigned p) {
  return ModTensor(structure_tensor(params), p);
}

// The mod-p table of the Riemann basis; the identity is C_d (= A_0).
inline AlgebraTable table_from_mod_tensor(const ModTensor& t) {
  int n = t.d() + 1;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("C" + std::to_string(i));
  AlgebraTable a = AlgebraTable::with_dim(t.p(), std::move(labels), t.d());
  for (int s = 0; s < n; ++s)
    for (int tt = 0; tt < n; ++tt)
      for (int u = 0; u < n; ++u) a.c(s, tt, u) = t.rho(s, tt, u);
  return a;
}

inline AlgebraTable scheme_table(const SchemeParams& params, unsigned p) {
  return table_from_mod_tensor(mod_tensor(params, p));
}

// rho_{i,i}^i mod p via the diagonal product prod_{l=0}^{d-i-1} (q^i + q^{e+l});
// index i contributes a block iff p does not divide it.
inline std::vector<int> contributing_indices(const SchemeParams& params, unsigned p) {
  std::vector<int> out;
  for (int i = 0; i <= params.d; ++i) {
    unsigned prod = 1 % p;
    unsigned qi = params.q_power_mod(2L * i, p);
    for (int l = 0; l < params.d - i; ++l)
      prod = static_cast<unsigned>(
          1ull * prod * ((qi + params.q_power_mod(params.two_e() + 2L * l, p)) % p) % p);
    if (prod % p != 0) out.push_back(i);
  }
  return out;
}

inline int k_blocks(const SchemeParams& params, unsigned p) {
  return static_cast<int>(contributing_indices(params, p).size());
}

// Locality as decided by the block count (the arbiter used everywhere).
inline bool is_local(const SchemeParams& params, unsigned p) {
  return k_blocks(params, p) == 1;
}

// The closed-form criterion, exactly as stated:
//   (1) q = -1 (mod p) and d odd   for C, B;
//   (2) q = -1 (mod p) and d even  for D, 2D;
//   (3) r = -1 (mod p)             for 2A-even, 2A-odd;
// and never local when p | b. Only defined for odd p.
inline bool is_local_closed_form(const SchemeParams& params, unsigned p) {
  if (p == 2) throw std::invalid_argument("is_local_closed_form: p = 2 is not covered");
  if (!is_prime(p)) throw std::invalid_argument("is_local_closed_form: p must be prime");
  unsigned b = mod_reduce(params.b, p);
  if (b == 0) return false;
  bool b_is_minus_one = (b + 1) % p == 0;
  switch (params.family) {
    case SchemeFamily::C:
    case SchemeFamily::B: return b_is_minus_one && params.d % 2 == 1;
    case SchemeFamily::D:
    case SchemeFamily::TwoD: return b_is_minus_one && params.d % 2 == 0;
    case SchemeFamily::TwoAEven:
    case SchemeFamily::TwoAOdd: return b_is_minus_one;
  }
  return false;
}

struct LocalityReport {
  int k_blocks = 0;
  bool is_local_by_count = false;
  std::optional<bool> closed_form_verdict;  // nullopt when p = 2
  std::vector<int> contributing_indices;
};

inline LocalityReport locality_report(const SchemeParams& params, unsigned p) {
  LocalityReport r;
  r.contributing_indices = contributing_indices(params, p);
  r.k_blocks = static_cast<int>(r.contributing_indices.size());
  r.is_local_by_count = r.k_blocks == 1;
  if (p != 2) r.closed_form_verdict = is_local_closed_form(params, p);
  return r;
}

// Closed-form residue in the local case:
//   rho_{s,t}^u = [d-u s-u]_q (mod p)  if d - s = t - u,  else 0.
inline unsigned local_rho(const SchemeParams& params, unsigned p, int s, int t, int u) {
  if (!is_local(params, p))
    throw std::invalid_argument("local_rho: " + params.key() + " mod " + std::to_string(p) +
                                " is not local");
  if (params.d - s != t - u) return 0;
  return mod_reduce(gauss_binom(params.d - u, s - u, params.q()), p);
}

// Reduced tensor against the closed form at every index.
inline bool check_local_closed_form_table(const SchemeParams& params, unsigned p,
                                          std::string* witness = nullptr) {
  ModTensor mt = mod_tensor(params, p);
  GaussTable g(params.q());
  for (int s = 0; s <= params.d; ++s)
    for (int t = 0; t <= params.d; ++t)
      for (int u = 0; u <= std::min(s, t); ++u) {
        unsigned want =
            params.d - s == t - u ? mod_reduce(g(params.d - u, s - u), p) : 0u;
        if (mt.rho(s, t, u) != want) {
          if (witness) {
            std::ostringstream os;
            os << params.key() << " mod " << p << ": rho_{" << s << "," << t << "}^" << u << " = "
               << mt.rho(s, t, u) << ", closed form gives " << want;
            *witness = os.str();
          }
          return false;
        }
      }
  return true;
}

enum class IsoCondition { HypothesesNotMet, TablesEqual, TablesDiffer };

// Tensors are entrywise congruent whenever q1 = q2 and q1^{e1} = q2^{e2}
// (mod p); then C_r -> C^_r is an isomorphism.
inline IsoCondition check_isomorphic_condition(const SchemeParams& a, const SchemeParams& b,
                                               unsigned p, std::string* witness = nullptr) {
  if (a.d != b.d) return IsoCondition::HypothesesNotMet;
  if (mod_reduce(a.b, p) == 0 || mod_reduce(b.b, p) == 0) return IsoCondition::HypothesesNotMet;
  if (a.q_power_mod(2, p) != b.q_power_mod(2, p)) return IsoCondition::HypothesesNotMet;
  if (a.q_power_mod(a.two_e(), p) != b.q_power_mod(b.two_e(), p))
    return IsoCondition::HypothesesNotMet;
  ModTensor ta = mod_tensor(a, p), tb = mod_tensor(b, p);
  for (int s = 0; s <= a.d; ++s)
    for (int t = 0; t <= a.d; ++t)
      for (int u = 0; u <= std::min(s, t); ++u)
        if (ta.rho(s, t, u) != tb.rho(s, t, u)) {
          if (witness) {
            std::ostringstream os;
            os << a.key() << " vs " << b.key() << " mod " << p << " differ at rho_{" << s << ","
               << t << "}^" << u << ": " << ta.rho(s, t, u) << " != " << tb.rho(s, t, u);
            *witness = os.str();
          }
          return IsoCondition::TablesDiffer;
        }
  return IsoCondition::TablesEqual;
}

// The index-shift map C_s -> C^_{s-1} (C^_{-1} = 0) as a linear map between
// mod-p tables; shared by the rank-lowering epimorphism checks below.
inline AlgebraMap shift_down_map(const AlgebraTable& source, const AlgebraTable& target) {
  FpMat m(static_cast<std::size_t>(source.dim()), FpVec(static_cast<std::size_t>(target.dim()), 0));
  for (int s = 1; s < source.dim(); ++s) m[static_cast<std::size_t>(s)][static_cast<std::size_t>(s - 1)] = 1;
  return {source, target, std::move(m)};
}

// Epimorphism F A_{d+1} -> F A_d on the Hermitian family: the defining
// congruence rho_{s,t}^{u,d+1} = rho_{s-1,t-1}^{u-1,d} (mod p) for
// s,t,u >= 1, plus the full homomorphism check of C_s -> C^_{s-1}.
inline bool check_hermitian_shift_epi(int d, const ExactInt& r, unsigned p,
                                      std::string* witness = nullptr) {
  SchemeParams big(SchemeFamily::TwoAEven, d + 1, r);
  SchemeParams small(SchemeFamily::TwoAEven, d, r);
  if (!is_local(small, p)) {
    if (witness) *witness = small.key() + " mod " + std::to_string(p) + " is not local";
    return false;
  }
  ModTensor tb = mod_tensor(big, p), ts = mod_tensor(small, p);
  for (int s = 1; s <= d + 1; ++s)
    for (int t = 1; t <= d + 1; ++t)
      for (int u = 1; u <= std::min(s, t); ++u)
        if (tb.rho(s, t, u) != ts.rho(s - 1, t - 1, u - 1)) {
          if (witness) {
            std::ostringstream os;
            os << "congruence fails at (" << s << "," << t << "," << u << "): "
               << tb.rho(s, t, u) << " != " << ts.rho(s - 1, t - 1, u - 1);
            *witness = os.str();
          }
          return false;
        }
  AlgebraMap f = shift_down_map(table_from_mod_tensor(tb), table_from_mod_tensor(ts));
  HomCheck h = is_homomorphism(f);
  if (!h.ok) {
    if (witness) *witness = h.witness;
    return false;
  }
  if (!is_surjective(f)) {
    if (witness) *witness = "shift map is not surjective";
    return false;
  }
  return true;
}

// Base-p digit congruence behind the tensor decomposition of F A_{p^l-1}:
//   rho_{ps+a, pt+b}^{pu+g, p^l-1} = rho_{s,t}^{u, p^{l-1}-1} rho_{a,b}^{g, p-1} (mod p).
inline bool check_digit_tensor_congruence(int l, const ExactInt& r, unsigned p,
                                          std::string* witness = nullptr) {
  if (l < 1) throw std::invalid_argument("check_digit_tensor_congruence: l must be >= 1");
  if (l == 1) return true;  // nothing to decompose
  long big_d = 1;
  for (int i = 0; i < l; ++i) big_d *= p;
  big_d -= 1;
  long mid_d = (big_d + 1) / p - 1;
  SchemeParams big(SchemeFamily::TwoAEven, static_cast<int>(big_d), r);
  SchemeParams mid(SchemeFamily::TwoAEven, static_cast<int>(mid_d), r);
  SchemeParams small(SchemeFamily::TwoAEven, static_cast<int>(p) - 1, r);
  if (!is_local(big, p)) {
    if (witness) *witness = big.key() + " mod " + std::to_string(p) + " is not local";
    return false;
  }
  ModTensor tb = mod_tensor(big, p), tm = mod_tensor(mid, p), tsm = mod_tensor(small, p);
  for (int s = 0; s <= mid_d; ++s)
    for (int t = 0; t <= mid_d; ++t)
      for (int u = 0; u <= mid_d; ++u)
        for (int a = 0; a < static_cast<int>(p); ++a)
          for (int b = 0; b < static_cast<int>(p); ++b)
            for (int g = 0; g < static_cast<int>(p); ++g) {
              unsigned lhs = tb.rho(static_cast<int>(p) * s + a, static_cast<int>(p) * t + b,
                                    static_cast<int>(p) * u + g);
              unsigned rhs =
                  static_cast<unsigned>(1ull * tm.rho(s, t, u) * tsm.rho(a, b, g) % p);
              if (lhs != rhs) {
                if (witness) {
                  std::ostringstream os;
                  os << "digit congruence fails at (s,t,u)=(" << s << "," << t << "," << u
                     << "), (a,b,g)=(" << a << "," << b << "," << g << "): " << lhs
                     << " != " << rhs;
                  *witness = os.str();
                }
                return false;
              }
            }
  return true;
}

// Even/odd index-split congruence for odd symplectic rank 2d'+1:
//   rho_{2s+a, 2t+b}^{2u+g, C_{2d'+1}} = rho^_{s,t}^{u, A_{d'}} rho^_{a,b}^{g, A_1} (mod p),
// hatted constants from the Hermitian family at base r = q.
inline bool check_even_odd_split_congruence(int d_prime, const ExactInt& q, unsigned p,
                                            std::string* witness = nullptr) {
  SchemeParams big(SchemeFamily::C, 2 * d_prime + 1, q);
  SchemeParams hat_d(SchemeFamily::TwoAEven, std::max(d_prime, 1), q);
  SchemeParams hat_1(SchemeFamily::TwoAEven, 1, q);
  if (!is_local(big, p)) {
    if (witness) *witness = big.key() + " mod " + std::to_string(p) + " is not local";
    return false;
  }
  ModTensor tb = mod_tensor(big, p), t1 = mod_tensor(hat_1, p);
  // d' = 0 makes the first factor the one-dimensional algebra (tensor-trivial)
  std::optional<ModTensor> td;
  if (d_prime >= 1) td.emplace(mod_tensor(hat_d, p));
  auto rho_hat_d = [&](int s, int t, int u) -> unsigned {
    if (d_prime == 0) return (s == 0 && t == 0 && u == 0) ? 1u : 0u;
    return td->rho(s, t, u);
  };
  for (int s = 0; s <= d_prime; ++s)
    for (int t = 0; t <= d_prime; ++t)
      for (int u = 0; u <= d_prime; ++u)
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b)
            for (int g = 0; g < 2; ++g) {
              unsigned lhs = tb.rho(2 * s + a, 2 * t + b, 2 * u + g);
              unsigned rhs =
                  static_cast<unsigned>(1ull * rho_hat_d(s, t, u) * t1.rho(a, b, g) % p);
              if (lhs != rhs) {
                if (witness) {
                  std::ostringstream os;
                  os << "split congruence fails at (s,t,u)=(" << s << "," << t << "," << u
                     << "), (a,b,g)=(" << a << "," << b << "," << g << "): " << lhs
                     << " != " << rhs;
                  *witness = os.str();
                }
                return false;
              }
            }
  return true;
}

// Epimorphism F C_d -> F D_{d-1} (C_s -> C^_{s-1}): homomorphism on tables,
// surjective, kernel exactly the span of C_0.
inline bool check_symplectic_to_orthogonal_epi(int d, const ExactInt& q, unsigned p,
                                               std::string* witness = nullptr) {
  SchemeParams src(SchemeFamily::C, d, q);
  SchemeParams tgt(SchemeFamily::D, d - 1, q);
  if (!is_local(src, p)) {
    if (witness) *witness = src.key() + " mod " + std::to_string(p) + " is not local";
    return false;
  }
  AlgebraMap f = shift_down_map(scheme_table(src, p), scheme_table(tgt, p));
  HomCheck h = is_homomorphism(f);
  if (!h.ok) {
    if (witness) *witness = h.witness;
    return false;
  }
  if (!is_surjective(f)) {
    if (witness) *witness = "shift map is not surjective";
    return false;
  }
  FpMat ker = kernel_basis(f);
  bool ker_ok = ker.size() == 1;
  if (ker_ok) {
    for (std::size_t i = 0; i < ker[0].size(); ++i) {
      unsigned want = i == 0 ? 1u : 0u;  // C_0 coordinate
      if (ker[0][i] % p != want) ker_ok = false;
    }
  }
  if (!ker_ok) {
    if (witness) {
      std::ostringstream os;
      os << "kernel is not the span of C_0 (dimension " << ker.size() << ")";
      *witness = os.str();
    }
    return false;
  }
  return true;
}

}  // namespace dualpolar

#endif

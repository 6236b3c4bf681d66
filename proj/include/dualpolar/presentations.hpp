#ifndef DUALPOLAR_PRESENTATIONS_HPP
#define DUALPOLAR_PRESENTATIONS_HPP

// Explicit presentations of the local modular adjacency algebras:
//   - Hermitian families (and every family at p = 2):  F X = P/W_d,
//     via the closed-form map  (monomial of weight w, exponents k_j)
//       |-> (prod_j k_j!) C_{d-w};
//   - C/B at odd rank:  F C_{2d'+1} = P/W_{d'} (x) P/W_1, through the
//     index-split map C_{2s+a} -> C^_s (x) C^_a;
//   - D/2D at even rank:  the socle quotient
//     (P/W_{d'} (x) P/W_1)/(Y_{d'} (x) Y_1).
// Every map is verified on the tables; nothing is taken on faith.

#include "dualpolar/algebra_table.hpp"
#include "dualpolar/modular.hpp"
#include "dualpolar/qnum.hpp"
#include "dualpolar/scheme.hpp"
#include "dualpolar/weighted_ring.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace dualpolar {

inline unsigned monomial_coefficient(const Monomial& m, unsigned p) {
  unsigned long long c = 1;
  for (unsigned e : m.exponents) c = c * factorial_mod(e, p).value() % p;
  return static_cast<unsigned>(c);
}

// P/W_d -> F X: monomial of weight w |-> (prod k_j!) C_{d-w}.
// Requires a local instance (the block count decides).
inline AlgebraMap ring_presentation_map(const SchemeParams& params, unsigned p) {
  if (!is_local(params, p))
    throw std::invalid_argument("ring_presentation_map: " + params.key() + " mod " +
                                std::to_string(p) + " is not local");
  int d = params.d;
  AlgebraTable src = ring_table(p, d);
  AlgebraTable tgt = scheme_table(params, p);
  auto basis = ring_basis(p, d);
  FpMat m(static_cast<std::size_t>(d) + 1, FpVec(static_cast<std::size_t>(d) + 1, 0));
  for (int w = 0; w <= d; ++w)
    m[static_cast<std::size_t>(w)][static_cast<std::size_t>(d - w)] =
        monomial_coefficient(basis[static_cast<std::size_t>(w)], p);
  return {std::move(src), std::move(tgt), std::move(m)};
}

// F A_{p-1} = F[X]/(X^p): powers of G_{p-2} up to p-1 are linearly
// independent and the p-th power vanishes (nilpotency index exactly p).
inline bool check_single_variable_presentation(const ExactInt& r, unsigned p,
                                               std::string* witness = nullptr) {
  SchemeParams params(SchemeFamily::TwoAEven, static_cast<int>(p) - 1, r);
  if (!is_local(params, p)) {
    if (witness) *witness = params.key() + " mod " + std::to_string(p) + " is not local";
    return false;
  }
  ModTensor mt = mod_tensor(params, p);
  int n = params.d + 1;
  FpMat g(static_cast<std::size_t>(n), FpVec(static_cast<std::size_t>(n), 0));
  for (int t = 0; t < n; ++t)
    for (int u = 0; u < n; ++u)
      g[static_cast<std::size_t>(t)][static_cast<std::size_t>(u)] =
          mt.rho(static_cast<int>(p) - 2, t, u);
  FpMat power = fp_identity(static_cast<std::size_t>(n));
  FpMat flat;  // each G^k flattened, k = 0..p-1
  for (unsigned k = 0; k < p; ++k) {
    FpVec row;
    for (const auto& rr : power) row.insert(row.end(), rr.begin(), rr.end());
    flat.push_back(std::move(row));
    power = fp_mat_mul(power, g, p);
  }
  for (const auto& rr : power)
    for (unsigned x : rr)
      if (x % p != 0) {
        if (witness) *witness = "G_{p-2}^p != 0";
        return false;
      }
  if (fp_rank(flat, p) != static_cast<int>(p)) {
    if (witness) *witness = "powers G_{p-2}^0..G_{p-2}^{p-1} are linearly dependent";
    return false;
  }
  return true;
}

// Riemann-basis congruences in F A_{p^l-1}:
//   (1) (C_{p^l-1-p^i})^m = m! C_{p^l-1-m p^i}   for 1 <= m <= p-1,
//   (2) C_{p^l-1-a p^i} C_{p^l-1-b p^j} = C_{p^l-1-(a p^i + b p^j)}  for i != j.
inline bool check_riemann_power_congruences(int l, const ExactInt& r, unsigned p,
                                            std::string* witness = nullptr) {
  long d = 1;
  for (int i = 0; i < l; ++i) d *= p;
  d -= 1;
  SchemeParams params(SchemeFamily::TwoAEven, static_cast<int>(d), r);
  if (!is_local(params, p)) {
    if (witness) *witness = params.key() + " mod " + std::to_string(p) + " is not local";
    return false;
  }
  AlgebraTable t = scheme_table(params, p);
  auto unit = [&](long i) { return t.basis_vector(static_cast<int>(i)); };
  long pi = 1;
  for (int i = 0; i < l; ++i, pi *= p) {
    FpVec x = unit(d);  // identity C_d
    for (unsigned m = 1; m < p; ++m) {
      x = t.multiply(x, unit(d - pi));
      FpVec want(static_cast<std::size_t>(d) + 1, 0);
      want[static_cast<std::size_t>(d - static_cast<long>(m) * pi)] = factorial_mod(m, p).value();
      if (x != want) {
        if (witness) {
          std::ostringstream os;
          os << "(C_" << d - pi << ")^" << m << " = " << t.describe_vector(x) << ", expected "
             << t.describe_vector(want);
          *witness = os.str();
        }
        return false;
      }
    }
  }
  long pi_i = 1;
  for (int i = 0; i < l; ++i, pi_i *= p) {
    long pj = 1;
    for (int j = 0; j < l; ++j, pj *= p) {
      if (i == j) continue;
      for (unsigned a = 0; a < p; ++a)
        for (unsigned b = 0; b < p; ++b) {
          FpVec x = t.multiply(unit(d - a * pi_i), unit(d - b * pj));
          FpVec want(static_cast<std::size_t>(d) + 1, 0);
          want[static_cast<std::size_t>(d - (a * pi_i + b * pj))] = 1;
          if (x != want) {
            if (witness) {
              std::ostringstream os;
              os << "C_" << d - a * pi_i << " C_" << d - b * pj << " = " << t.describe_vector(x);
              *witness = os.str();
            }
            return false;
          }
        }
    }
  }
  return true;
}

// F C_{2d'+1} -> A_{d'} (x) A_1 basis bijection C_{2s+a} -> C^_s (x) C^_a.
inline AlgebraMap split_presentation_map(int d_prime, const ExactInt& q, unsigned p) {
  SchemeParams big(SchemeFamily::C, 2 * d_prime + 1, q);
  if (!is_local(big, p))
    throw std::invalid_argument("split_presentation_map: " + big.key() + " mod " +
                                std::to_string(p) + " is not local");
  AlgebraTable src = scheme_table(big, p);
  AlgebraTable a1 = scheme_table(SchemeParams(SchemeFamily::TwoAEven, 1, q), p);
  AlgebraTable ad =
      d_prime >= 1 ? scheme_table(SchemeParams(SchemeFamily::TwoAEven, d_prime, q), p)
                   : AlgebraTable::with_dim(p, {"C0"}, 0);
  if (d_prime == 0) ad.c(0, 0, 0) = 1;
  AlgebraTable tgt = tensor_table(ad, a1);
  int n2 = a1.dim();
  FpMat m(static_cast<std::size_t>(src.dim()), FpVec(static_cast<std::size_t>(tgt.dim()), 0));
  for (int s = 0; s <= d_prime; ++s)
    for (int a = 0; a < 2; ++a)
      m[static_cast<std::size_t>(2 * s + a)][static_cast<std::size_t>(s * n2 + a)] = 1;
  return {std::move(src), std::move(tgt), std::move(m)};
}

// (P/W_{d'} (x) P/W_1) -> F C_{2d'+1}: the split map composed with the ring
// presentation of each Hermitian factor; explicitly, the pair of monomials
// of weights (w1, w2) lands on (prod k!) C_{2(d'-w1)+(1-w2)}.
inline AlgebraMap ring_tensor_presentation_map(int d_prime, const ExactInt& q, unsigned p) {
  SchemeParams big(SchemeFamily::C, 2 * d_prime + 1, q);
  if (!is_local(big, p))
    throw std::invalid_argument("ring_tensor_presentation_map: " + big.key() + " mod " +
                                std::to_string(p) + " is not local");
  AlgebraTable src = tensor_table(ring_table(p, d_prime), ring_table(p, 1));
  AlgebraTable tgt = scheme_table(big, p);
  auto basis1 = ring_basis(p, d_prime);
  FpMat m(static_cast<std::size_t>(src.dim()), FpVec(static_cast<std::size_t>(tgt.dim()), 0));
  for (int w1 = 0; w1 <= d_prime; ++w1)
    for (int w2 = 0; w2 <= 1; ++w2) {
      unsigned coeff = monomial_coefficient(basis1[static_cast<std::size_t>(w1)], p);
      m[static_cast<std::size_t>(w1 * 2 + w2)]
       [static_cast<std::size_t>(2 * (d_prime - w1) + (1 - w2))] = coeff;
    }
  return {std::move(src), std::move(tgt), std::move(m)};
}

// (P/W_{d'} (x) P/W_1)/(Y_{d'} (x) Y_1) -> F D_{2d'} (or the 2D table of the
// same rank): quotient of the tensor by its socle, then pairs of weights
// (w1, w2) != (d', 1) land on (prod k!) C_{2d' - (2w1 + w2)}.
inline AlgebraMap socle_quotient_presentation_map(int d_prime, const SchemeParams& target,
                                                  unsigned p) {
  if (target.d != 2 * d_prime)
    throw std::invalid_argument("socle_quotient_presentation_map: target rank must be 2d'");
  if (!is_local(target, p))
    throw std::invalid_argument("socle_quotient_presentation_map: " + target.key() + " mod " +
                                std::to_string(p) + " is not local");
  AlgebraTable tensor = tensor_table(ring_table(p, d_prime), ring_table(p, 1));
  // socle generator Y_{d'} (x) Y_1 = basis pair (top, top)
  FpVec gen(static_cast<std::size_t>(tensor.dim()), 0);
  gen[static_cast<std::size_t>(d_prime * 2 + 1)] = 1;
  std::vector<int> complement;
  AlgebraTable src = quotient_table(tensor, {gen}, &complement);
  AlgebraTable tgt = scheme_table(target, p);
  auto basis1 = ring_basis(p, d_prime);
  FpMat m(static_cast<std::size_t>(src.dim()), FpVec(static_cast<std::size_t>(tgt.dim()), 0));
  for (std::size_t i = 0; i < complement.size(); ++i) {
    int w1 = complement[i] / 2, w2 = complement[i] % 2;
    unsigned coeff = monomial_coefficient(basis1[static_cast<std::size_t>(w1)], p);
    m[i][static_cast<std::size_t>(2 * d_prime - (2 * w1 + w2))] = coeff;
  }
  return {std::move(src), std::move(tgt), std::move(m)};
}

struct Presentation {
  enum class Kind { NotLocal, TruncatedRing, TensorOfTruncatedRings, SocleQuotient };
  Kind kind = Kind::NotLocal;
  std::string source_description;
  int k_blocks = 0;
  std::optional<AlgebraMap> map;
  HomCheck verdict;
  bool bijective = false;
};

// The identified presentation of F X when (params, p) is local; the explicit
// basis map comes back verified (or with the failure witness).
inline Presentation present(const SchemeParams& params, unsigned p) {
  Presentation out;
  out.k_blocks = k_blocks(params, p);
  if (out.k_blocks != 1) {
    out.kind = Presentation::Kind::NotLocal;
    return out;
  }
  const bool hermitian = family_hermitian(params.family);
  const bool even_kind =
      params.family == SchemeFamily::D || params.family == SchemeFamily::TwoD;
  if (p == 2 || hermitian || (even_kind && params.d % 2 == 1)) {
    // the d = 1 orthogonal edge case is a plain truncated ring as well
    out.kind = Presentation::Kind::TruncatedRing;
    out.source_description = "P/W_" + std::to_string(params.d) + " at p = " + std::to_string(p);
    out.map = ring_presentation_map(params, p);
  } else if (params.family == SchemeFamily::C || params.family == SchemeFamily::B) {
    int d_prime = (params.d - 1) / 2;
    out.kind = Presentation::Kind::TensorOfTruncatedRings;
    out.source_description =
        "P/W_" + std::to_string(d_prime) + " (x) P/W_1 at p = " + std::to_string(p);
    // target table is the scheme's own table; B shares the C-family constants
    AlgebraMap m = ring_tensor_presentation_map(d_prime, params.b, p);
    m.target = scheme_table(params, p);
    out.map = std::move(m);
  } else {
    int d_prime = params.d / 2;
    out.kind = Presentation::Kind::SocleQuotient;
    out.source_description = "(P/W_" + std::to_string(d_prime) + " (x) P/W_1)/(Y_" +
                             std::to_string(d_prime) + " (x) Y_1) at p = " + std::to_string(p);
    out.map = socle_quotient_presentation_map(d_prime, params, p);
  }
  out.verdict = is_homomorphism(*out.map);
  out.bijective = is_bijective(*out.map);
  return out;
}

}  // namespace dualpolar

#endif

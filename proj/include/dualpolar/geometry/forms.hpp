#ifndef DUALPOLAR_GEOMETRY_FORMS_HPP
#define DUALPOLAR_GEOMETRY_FORMS_HPP

// Standard forms for the six dual polar families:
//   C   symplectic  sum_i (x_i y_{d+i} - x_{d+i} y_i)          on F_q^{2d}
//   B   quadratic   x_0^2 + sum_i x_i x_{d+i}                  on F_q^{2d+1}  (odd q)
//   D   quadratic   sum_i x_i x_{d+i}                          on F_q^{2d}
//   2D  quadratic   sum_i x_i x_{d+i} + N(x_{2d}, x_{2d+1})    on F_q^{2d+2}
//   2A  hermitian   sum_i x_i conj(y_i)                        on F_{r^2}^{2d+1} / F_{r^2}^{2d}
// N is the homogenized first-in-lex irreducible monic quadratic over F_q
// (a norm form of the quadratic extension), so it is anisotropic.
//
// Quadratic forms are kept as genuine quadratic maps with their polar
// bilinear form; that is what makes characteristic 2 come out right.

#include "dualpolar/exact_int.hpp"
#include "dualpolar/geometry/small_field.hpp"
#include "dualpolar/scheme.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualpolar::geometry {

struct FormSpec {
  enum class Kind { Symplectic, Quadratic, Hermitian };

  SchemeFamily family;
  int d = 0;               // Witt index = scheme rank
  unsigned field_order = 0;
  Kind kind = Kind::Symplectic;
  int ambient = 0;
  // upper-triangular coefficients of the quadratic form (Quadratic only):
  // Q(x) = sum_{i<=j} quad[i*ambient+j] x_i x_j
  std::vector<uint8_t> quad;
};

namespace detail {

// first monic irreducible x^2 + c x + e over F_q in lex order on (c, e)
inline std::pair<unsigned, unsigned> first_irreducible_quadratic(const SmallField& f) {
  for (unsigned c = 0; c < f.order(); ++c)
    for (unsigned e = 0; e < f.order(); ++e) {
      bool has_root = false;
      for (unsigned x = 0; x < f.order(); ++x)
        if (f.add(f.add(f.mul(x, x), f.mul(c, x)), e) == 0) {
          has_root = true;
          break;
        }
      if (!has_root) return {c, e};
    }
  throw std::logic_error("first_irreducible_quadratic: none found");
}

inline bool is_prime_power(unsigned long b) {
  if (b < 2) return false;
  unsigned long p = 2;
  while (b % p != 0) ++p;
  while (b % p == 0) b /= p;
  return b == 1;
}

}  // namespace detail

inline FormSpec standard_form(SchemeFamily family, int d, const ExactInt& b) {
  if (d < 1) throw std::invalid_argument("standard_form: d must be >= 1");
  if (b < 2 || b > 16)
    throw std::invalid_argument("standard_form: base " + b.str() + " out of range");
  unsigned bb = b.convert_to<unsigned>();
  if (!detail::is_prime_power(bb))
    throw std::invalid_argument("standard_form: base " + b.str() + " is not a prime power");
  FormSpec spec;
  spec.family = family;
  spec.d = d;
  switch (family) {
    case SchemeFamily::C:
      spec.kind = FormSpec::Kind::Symplectic;
      spec.field_order = bb;
      spec.ambient = 2 * d;
      return spec;
    case SchemeFamily::TwoAEven:
    case SchemeFamily::TwoAOdd:
      spec.kind = FormSpec::Kind::Hermitian;
      spec.field_order = bb * bb;
      spec.ambient = family == SchemeFamily::TwoAEven ? 2 * d + 1 : 2 * d;
      if (spec.field_order > 16)
        throw std::invalid_argument("standard_form: Hermitian base " + b.str() +
                                    " needs field order " + std::to_string(spec.field_order) +
                                    " (unsupported)");
      return spec;
    case SchemeFamily::B:
      if (bb % 2 == 0)
        throw std::invalid_argument("standard_form: B-family needs odd q (the x_0^2 term "
                                    "degenerates in characteristic 2)");
      spec.kind = FormSpec::Kind::Quadratic;
      spec.field_order = bb;
      spec.ambient = 2 * d + 1;
      break;
    case SchemeFamily::D:
      spec.kind = FormSpec::Kind::Quadratic;
      spec.field_order = bb;
      spec.ambient = 2 * d;
      break;
    case SchemeFamily::TwoD:
      spec.kind = FormSpec::Kind::Quadratic;
      spec.field_order = bb;
      spec.ambient = 2 * d + 2;
      break;
  }
  spec.quad.assign(static_cast<std::size_t>(spec.ambient) * spec.ambient, 0);
  auto set = [&](int i, int j, unsigned v) {
    spec.quad[static_cast<std::size_t>(i) * spec.ambient + j] = static_cast<uint8_t>(v);
  };
  if (family == SchemeFamily::B) {
    set(0, 0, 1);
    for (int i = 1; i <= d; ++i) set(i, d + i, 1);
  } else if (family == SchemeFamily::D) {
    for (int i = 0; i < d; ++i) set(i, d + i, 1);
  } else {  // TwoD
    for (int i = 0; i < d; ++i) set(i, d + i, 1);
    SmallField f = build_field(spec.field_order);
    auto [c, e] = detail::first_irreducible_quadratic(f);
    set(2 * d, 2 * d, 1);
    set(2 * d, 2 * d + 1, c);
    set(2 * d + 1, 2 * d + 1, e);
  }
  return spec;
}

// Q(v) for quadratic kinds.
inline unsigned quad_value(const FormSpec& spec, const SmallField& f,
                           std::span<const uint8_t> v) {
  unsigned s = 0;
  for (int i = 0; i < spec.ambient; ++i) {
    if (v[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = i; j < spec.ambient; ++j) {
      unsigned c = spec.quad[static_cast<std::size_t>(i) * spec.ambient + j];
      if (c == 0 || v[static_cast<std::size_t>(j)] == 0) continue;
      s = f.add(s, f.mul(c, f.mul(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)])));
    }
  }
  return s;
}

// The pairing whose vanishing defines "compatible": the symplectic form, the
// Hermitian form, or the polar form Q(u+v) - Q(u) - Q(v).
inline unsigned pairing(const FormSpec& spec, const SmallField& f, std::span<const uint8_t> u,
                        std::span<const uint8_t> v) {
  switch (spec.kind) {
    case FormSpec::Kind::Symplectic: {
      unsigned s = 0;
      for (int i = 0; i < spec.d; ++i) {
        s = f.add(s, f.mul(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(spec.d + i)]));
        s = f.sub(s, f.mul(u[static_cast<std::size_t>(spec.d + i)], v[static_cast<std::size_t>(i)]));
      }
      return s;
    }
    case FormSpec::Kind::Hermitian: {
      unsigned s = 0;
      for (int i = 0; i < spec.ambient; ++i)
        s = f.add(s, f.mul(u[static_cast<std::size_t>(i)], f.conj(v[static_cast<std::size_t>(i)])));
      return s;
    }
    case FormSpec::Kind::Quadratic: {
      std::vector<uint8_t> w(static_cast<std::size_t>(spec.ambient));
      for (int i = 0; i < spec.ambient; ++i)
        w[static_cast<std::size_t>(i)] = static_cast<uint8_t>(
            f.add(u[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]));
      unsigned s = quad_value(spec, f, w);
      s = f.sub(s, quad_value(spec, f, u));
      s = f.sub(s, quad_value(spec, f, v));
      return s;
    }
  }
  return 0;
}

// Singular/isotropic test for a single vector.
inline bool vector_isotropic(const FormSpec& spec, const SmallField& f,
                             std::span<const uint8_t> v) {
  switch (spec.kind) {
    case FormSpec::Kind::Symplectic: return true;
    case FormSpec::Kind::Quadratic: return quad_value(spec, f, v) == 0;
    case FormSpec::Kind::Hermitian: return pairing(spec, f, v, v) == 0;
  }
  return false;
}

// Radical of the pairing must be zero (rank computation over the field).
inline bool form_nondegenerate(const FormSpec& spec, const SmallField& f) {
  int n = spec.ambient;
  std::vector<std::vector<unsigned>> gram(static_cast<std::size_t>(n),
                                          std::vector<unsigned>(static_cast<std::size_t>(n), 0));
  std::vector<uint8_t> ei(static_cast<std::size_t>(n), 0), ej(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    ei.assign(static_cast<std::size_t>(n), 0);
    ei[static_cast<std::size_t>(i)] = 1;
    for (int j = 0; j < n; ++j) {
      ej.assign(static_cast<std::size_t>(n), 0);
      ej[static_cast<std::size_t>(j)] = 1;
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pairing(spec, f, ei, ej);
    }
  }
  // row reduce over the field
  int rank = 0;
  for (int c = 0; c < n && rank < n; ++c) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(gram[static_cast<std::size_t>(rank)], gram[static_cast<std::size_t>(piv)]);
    unsigned inv = f.inv(gram[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)]);
    for (auto& x : gram[static_cast<std::size_t>(rank)]) x = f.mul(x, inv);
    for (int r = 0; r < n; ++r) {
      if (r == rank) continue;
      unsigned fac = gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (fac == 0) continue;
      for (int j = 0; j < n; ++j)
        gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] =
            f.sub(gram[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                  f.mul(fac, gram[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)]));
    }
    ++rank;
  }
  return rank == n;
}

}  // namespace dualpolar::geometry

#endif

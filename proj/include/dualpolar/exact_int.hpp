#ifndef DUALPOLAR_EXACT_INT_HPP
#define DUALPOLAR_EXACT_INT_HPP

// Arbitrary-precision signed integers and residues modulo a prime.
// Everything in this library is exact; there are no floats anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dualpolar {

using ExactInt = boost::multiprecision::cpp_int;

inline ExactInt ipow(ExactInt base, unsigned long exp) {
  ExactInt r{1};
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// Canonical representative of v in [0, p).
inline unsigned mod_reduce(const ExactInt& v, unsigned p) {
  ExactInt r = v % p;
  if (r < 0) r += p;
  return r.convert_to<unsigned>();
}

inline unsigned pow_mod(unsigned base, unsigned long exp, unsigned p) {
  unsigned long long r = 1, b = base % p;
  while (exp) {
    if (exp & 1) r = r * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<unsigned>(r);
}

class Residue {
 public:
  Residue(const ExactInt& value, unsigned modulus) : p_(checked_prime(modulus)) {
    v_ = mod_reduce(value, p_);
  }
  Residue(long long value, unsigned modulus) : Residue(ExactInt(value), modulus) {}

  unsigned value() const { return v_; }
  unsigned modulus() const { return p_; }

  friend bool operator==(const Residue& a, const Residue& b) = default;

 private:
  static unsigned checked_prime(unsigned p) {
    if (!is_prime(p))
      throw std::invalid_argument("Residue: modulus " + std::to_string(p) + " is not prime");
    return p;
  }
  unsigned p_;
  unsigned v_;
};

}  // namespace dualpolar

#endif

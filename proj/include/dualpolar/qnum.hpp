#ifndef DUALPOLAR_QNUM_HPP
#define DUALPOLAR_QNUM_HPP

// q-analog combinatorics: Gaussian binomials, q-Pochhammer products,
// digit-wise binomials mod p (Lucas), small factorials mod p.
//
// Gaussian coefficients are total functions: [n k]_q = 0 whenever k < 0,
// n < 0 or k > n. They are evaluated by the q-Pascal recurrence
//   [n k] = [n-1 k-1] + q^k [n-1 k],
// which needs no division and is valid at every integer q (q = 1 gives the
// ordinary binomial).

#include "dualpolar/exact_int.hpp"

#include <utility>
#include <vector>

namespace dualpolar {

inline long choose2(long x) { return x >= 2 ? x * (x - 1) / 2 : 0; }

// Lazily grown Pascal triangle at a fixed q. Not safe for concurrent growth;
// give each worker its own table.
class GaussTable {
 public:
  explicit GaussTable(ExactInt q) : q_(std::move(q)) {
    rows_.push_back({ExactInt{1}});
    qpow_.push_back(ExactInt{1});
  }

  const ExactInt& q() const { return q_; }

  const ExactInt& operator()(long n, long k) {
    if (k < 0 || n < 0 || k > n) return zero();
    ensure(n);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  static const ExactInt& zero() {
    static const ExactInt z{0};
    return z;
  }

  void ensure(long n) {
    while (static_cast<long>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      std::size_t m = rows_.size();  // building row m
      if (qpow_.size() <= m) qpow_.push_back(qpow_.back() * q_);
      std::vector<ExactInt> row(m + 1);
      row[0] = 1;
      row[m] = 1;
      for (std::size_t k = 1; k < m; ++k) row[k] = prev[k - 1] + qpow_[k] * prev[k];
      rows_.push_back(std::move(row));
    }
  }

  ExactInt q_;
  std::vector<std::vector<ExactInt>> rows_;
  std::vector<ExactInt> qpow_;  // qpow_[k] = q^k
};

inline ExactInt gauss_binom(long n, long k, const ExactInt& q) {
  if (k < 0 || n < 0 || k > n) return 0;
  GaussTable t(q);
  return t(n, k);
}

// (a;q)_k = prod_{l=0}^{k-1} (1 - a q^l)
inline ExactInt q_pochhammer(const ExactInt& a, const ExactInt& q, int k) {
  ExactInt r{1}, ql{1};
  for (int l = 0; l < k; ++l) {
    r *= 1 - a * ql;
    ql *= q;
  }
  return r;
}

// (-z;q)_m = prod_{l=0}^{m-1} (1 + z q^l), the shifted product convention.
inline ExactInt neg_q_pochhammer(const ExactInt& z, const ExactInt& q, int m) {
  return q_pochhammer(-z, q, m);
}

// Binomial coefficient mod p as the base-p digit-wise product (Lucas).
inline Residue binom_mod_p(unsigned long m, unsigned long n, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("binom_mod_p: p must be prime");
  ExactInt r{1};
  while (m || n) {
    unsigned long md = m % p, nd = n % p;
    if (nd > md) return Residue(0, p);
    // exact digit binomial C(md, nd); the running quotient is integral
    ExactInt c{1};
    for (unsigned long i = 1; i <= nd; ++i) {
      c *= md - nd + i;
      c /= i;
    }
    r = r * c % p;
    m /= p;
    n /= p;
  }
  return Residue(r, p);
}

// k! mod p for 0 <= k < p. Larger k is rejected: every exponent this library
// feeds in is a base-p digit.
inline Residue factorial_mod(unsigned k, unsigned p) {
  if (!is_prime(p)) throw std::invalid_argument("factorial_mod: p must be prime");
  if (k >= p)
    throw std::invalid_argument("factorial_mod: k = " + std::to_string(k) +
                                " out of range for p = " + std::to_string(p));
  unsigned long long r = 1;
  for (unsigned i = 2; i <= k; ++i) r = r * i % p;
  return Residue(static_cast<long long>(r), p);
}

}  // namespace dualpolar

#endif

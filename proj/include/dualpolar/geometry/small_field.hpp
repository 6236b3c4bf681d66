#ifndef DUALPOLAR_GEOMETRY_SMALL_FIELD_HPP
#define DUALPOLAR_GEOMETRY_SMALL_FIELD_HPP

// Finite fields of order <= 16 via full lookup tables. Prime fields are
// residue arithmetic; prime powers use a fixed irreducible polynomial, so
// element encodings are reproducible across runs. The field axioms are
// checked exhaustively once at construction.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualpolar::geometry {

class SmallField {
 public:
  static SmallField build(unsigned q) { return SmallField(q); }

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned inv(unsigned a) const {
    if (a == 0) throw std::invalid_argument("SmallField: inverse of zero");
    return inv_[a];
  }
  unsigned pow(unsigned a, unsigned long k) const {
    unsigned r = 1;
    for (unsigned long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  // x -> x^r with r^2 = q: the order-two field automorphism used by
  // Hermitian forms.
  bool has_conjugation() const { return root_ != 0; }
  unsigned conj(unsigned a) const {
    if (!has_conjugation()) throw std::logic_error("SmallField: order is not a square");
    return conj_[a];
  }

 private:
  explicit SmallField(unsigned q) : q_(q) {
    struct Entry {
      unsigned q, p;
      std::vector<unsigned> poly;  // monic irreducible, constant term first
    };
    static const std::vector<Entry> table = {
        {2, 2, {}},          {3, 3, {}},           {4, 2, {1, 1, 1}},
        {5, 5, {}},          {7, 7, {}},           {8, 2, {1, 1, 0, 1}},
        {9, 3, {1, 0, 1}},   {16, 2, {1, 1, 0, 0, 1}},
    };
    const Entry* entry = nullptr;
    for (const auto& e : table)
      if (e.q == q) entry = &e;
    if (!entry)
      throw std::invalid_argument("SmallField: unsupported field order " + std::to_string(q));
    p_ = entry->p;
    deg_ = 1;
    while ((1ull * pow_int(p_, deg_)) < q_) ++deg_;
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) {
        add_[a * q_ + b] = add_digits(a, b);
        mul_[a * q_ + b] = mul_poly(a, b, entry->poly);
      }
    for (unsigned a = 0; a < q_; ++a)
      for (unsigned b = 0; b < q_; ++b) {
        if (add(a, b) == 0) neg_[a] = b;
        if (mul(a, b) == 1) inv_[a] = b;
      }
    verify_axioms();
    unsigned r = 1;
    while (r * r < q_) ++r;
    if (r * r == q_) {
      conj_.resize(q_);
      for (unsigned a = 0; a < q_; ++a) conj_[a] = pow(a, r);
      root_ = r;
      for (unsigned a = 0; a < q_; ++a)
        if (conj_[conj_[a]] != a) throw std::logic_error("SmallField: conjugation not involutive");
    }
  }

  static unsigned pow_int(unsigned b, unsigned e) {
    unsigned r = 1;
    while (e--) r *= b;
    return r;
  }

  std::vector<unsigned> digits(unsigned a) const {
    std::vector<unsigned> d(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  unsigned undigits(const std::vector<unsigned>& d) const {
    unsigned a = 0, pw = 1;
    for (unsigned i = 0; i < deg_; ++i) {
      a += d[i] % p_ * pw;
      pw *= p_;
    }
    return a;
  }

  unsigned add_digits(unsigned a, unsigned b) const {
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < deg_; ++i) da[i] = (da[i] + db[i]) % p_;
    return undigits(da);
  }

  unsigned mul_poly(unsigned a, unsigned b, const std::vector<unsigned>& poly) const {
    if (deg_ == 1) return a * b % p_;
    auto da = digits(a), db = digits(b);
    std::vector<unsigned> prod(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i)
      for (unsigned j = 0; j < deg_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    for (unsigned i = 2 * deg_ - 2; i >= deg_; --i) {
      unsigned c = prod[i];
      if (c == 0) continue;
      prod[i] = 0;
      for (unsigned j = 0; j < deg_; ++j)
        prod[i - deg_ + j] = (prod[i - deg_ + j] + (p_ - c % p_) * poly[j]) % p_;
    }
    prod.resize(deg_);
    return undigits(prod);
  }

  void verify_axioms() const {
    for (unsigned a = 0; a < q_; ++a) {
      if (add(a, 0) != a || mul(a, 1) != a) throw std::logic_error("SmallField: unit axiom");
      if (a != 0 && mul(a, inv_[a]) != 1) throw std::logic_error("SmallField: missing inverse");
      for (unsigned b = 0; b < q_; ++b) {
        if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
          throw std::logic_error("SmallField: commutativity");
        for (unsigned c = 0; c < q_; ++c) {
          if (add(add(a, b), c) != add(a, add(b, c)) || mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::logic_error("SmallField: associativity");
          if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
            throw std::logic_error("SmallField: distributivity");
        }
      }
    }
  }

  unsigned q_, p_ = 0, deg_ = 1, root_ = 0;
  std::vector<uint8_t> add_, mul_, neg_, inv_, conj_;
};

inline SmallField build_field(unsigned q) { return SmallField::build(q); }

}  // namespace dualpolar::geometry

#endif

#ifndef DUALPOLAR_ALGEBRA_TABLE_HPP
#define DUALPOLAR_ALGEBRA_TABLE_HPP

// Finite-dimensional commutative algebras over F_p presented by a labeled
// basis and structure constants, plus linear maps between them. This is the
// common currency every isomorphism and epimorphism check runs on: the
// homomorphism property is always checked on the table, never assumed.

#include "dualpolar/exact_int.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace dualpolar {

using FpVec = std::vector<unsigned>;
using FpMat = std::vector<FpVec>;

inline unsigned fp_inv(unsigned a, unsigned p) {
  if (a % p == 0) throw std::invalid_argument("fp_inv: zero is not invertible");
  return pow_mod(a % p, p - 2, p);
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> fp_rref(FpMat& rows, unsigned p) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  std::size_t cols = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    unsigned inv = fp_inv(rows[r][c], p);
    for (auto& x : rows[r]) x = static_cast<unsigned>(1ull * x * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] % p == 0) continue;
      unsigned f = rows[i][c] % p;
      for (std::size_t j = 0; j < cols; ++j)
        rows[i][j] = static_cast<unsigned>((rows[i][j] + 1ull * (p - f) * rows[r][j]) % p);
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

inline int fp_rank(FpMat rows, unsigned p) { return static_cast<int>(fp_rref(rows, p).size()); }

// Reduce v modulo the row space of an rref basis.
inline FpVec fp_reduce(const FpMat& rref_rows, const std::vector<int>& pivots, FpVec v,
                       unsigned p) {
  for (std::size_t r = 0; r < rref_rows.size(); ++r) {
    unsigned f = v[static_cast<std::size_t>(pivots[r])] % p;
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      v[j] = static_cast<unsigned>((v[j] + 1ull * (p - f) * rref_rows[r][j]) % p);
  }
  return v;
}

inline FpMat fp_mat_mul(const FpMat& a, const FpMat& b, unsigned p) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  FpMat out(n, FpVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] % p == 0) continue;
      unsigned long long f = a[i][l] % p;
      for (std::size_t j = 0; j < m; ++j)
        out[i][j] = static_cast<unsigned>((out[i][j] + f * b[l][j]) % p);
    }
  return out;
}

inline FpMat fp_identity(std::size_t n) {
  FpMat m(n, FpVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline FpMat fp_invert(const FpMat& m, unsigned p) {
  std::size_t n = m.size();
  FpMat aug(n, FpVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m[i].begin(), m[i].end(), aug[i].begin());
    aug[i][n + i] = 1;
  }
  auto pivots = fp_rref(aug, p);
  if (pivots.size() != n || pivots.back() != static_cast<int>(n - 1))
    throw std::invalid_argument("fp_invert: singular matrix");
  FpMat out(n, FpVec(n));
  for (std::size_t i = 0; i < n; ++i)
    std::copy(aug[i].begin() + static_cast<long>(n), aug[i].end(), out[i].begin());
  return out;
}

// Basis of {x : x M = 0} (left null space of M given as rows).
inline FpMat fp_left_nullspace(const FpMat& m, unsigned p) {
  std::size_t n = m.size();
  if (n == 0) return {};
  std::size_t cols = m[0].size();
  // transpose, rref, read off free columns
  FpMat t(cols, FpVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  auto pivots = fp_rref(t, p);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  FpMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    FpVec x(n, 0);
    x[free] = 1;
    for (std::size_t r = 0; r < t.size(); ++r) {
      // pivot variable = -coefficient at the free column
      unsigned coef = t[r][free] % p;
      if (coef) x[static_cast<std::size_t>(pivots[r])] = p - coef;
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

struct AlgebraTable {
  unsigned p = 0;
  std::vector<std::string> labels;
  int identity = -1;
  std::vector<unsigned> constants;  // dim^3, entry (i,j,k) = coeff of e_k in e_i e_j

  int dim() const { return static_cast<int>(labels.size()); }

  unsigned c(int i, int j, int k) const {
    std::size_t n = labels.size();
    return constants[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
                     static_cast<std::size_t>(k)];
  }
  unsigned& c(int i, int j, int k) {
    std::size_t n = labels.size();
    return constants[(static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n +
                     static_cast<std::size_t>(k)];
  }

  static AlgebraTable with_dim(unsigned p, std::vector<std::string> labels, int identity) {
    AlgebraTable t;
    t.p = p;
    t.labels = std::move(labels);
    t.identity = identity;
    t.constants.assign(t.labels.size() * t.labels.size() * t.labels.size(), 0);
    return t;
  }

  FpVec basis_vector(int i) const {
    FpVec v(labels.size(), 0);
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  }

  FpVec multiply(const FpVec& x, const FpVec& y) const {
    int n = dim();
    FpVec out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)] % p == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (y[static_cast<std::size_t>(j)] % p == 0) continue;
        unsigned long long f =
            1ull * (x[static_cast<std::size_t>(i)] % p) * (y[static_cast<std::size_t>(j)] % p) % p;
        if (f == 0) continue;
        for (int k = 0; k < n; ++k)
          out[static_cast<std::size_t>(k)] = static_cast<unsigned>(
              (out[static_cast<std::size_t>(k)] + f * c(i, j, k)) % p);
      }
    }
    return out;
  }

  std::string describe_vector(const FpVec& v) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] % p == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (v[i] % p != 1) os << v[i] % p << "*";
      os << labels[i];
    }
    if (first) os << "0";
    return os.str();
  }

  std::optional<std::string> check_commutative() const {
    for (int i = 0; i < dim(); ++i)
      for (int j = i + 1; j < dim(); ++j)
        for (int k = 0; k < dim(); ++k)
          if (c(i, j, k) != c(j, i, k))
            return labels[static_cast<std::size_t>(i)] + "*" +
                   labels[static_cast<std::size_t>(j)] + " != " +
                   labels[static_cast<std::size_t>(j)] + "*" + labels[static_cast<std::size_t>(i)];
    return std::nullopt;
  }

  std::optional<std::string> check_associative() const {
    int n = dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        FpVec ij(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) ij[static_cast<std::size_t>(k)] = c(i, j, k);
        for (int k = 0; k < n; ++k) {
          FpVec lhs = multiply(ij, basis_vector(k));
          FpVec jk(static_cast<std::size_t>(n));
          for (int m = 0; m < n; ++m) jk[static_cast<std::size_t>(m)] = c(j, k, m);
          FpVec rhs = multiply(basis_vector(i), jk);
          if (lhs != rhs)
            return "(" + labels[static_cast<std::size_t>(i)] + "*" +
                   labels[static_cast<std::size_t>(j)] + ")*" + labels[static_cast<std::size_t>(k)] +
                   " != " + labels[static_cast<std::size_t>(i)] + "*(" +
                   labels[static_cast<std::size_t>(j)] + "*" + labels[static_cast<std::size_t>(k)] +
                   ")";
        }
      }
    return std::nullopt;
  }

  std::optional<std::string> check_identity() const {
    if (identity < 0 || identity >= dim()) return "identity index out of range";
    for (int i = 0; i < dim(); ++i)
      for (int k = 0; k < dim(); ++k)
        if (c(identity, i, k) != (k == i ? 1u : 0u))
          return "1*" + labels[static_cast<std::size_t>(i)] + " != " +
                 labels[static_cast<std::size_t>(i)];
    return std::nullopt;
  }

  // Locality in the form this library meets it: the span of the non-identity
  // basis elements is an ideal and each of them is nilpotent, so that span is
  // the unique maximal ideal.
  std::optional<std::string> check_local() const {
    int n = dim();
    for (int i = 0; i < n; ++i) {
      if (i == identity) continue;
      for (int j = 0; j < n; ++j)
        if (c(i, j, identity) != 0)
          return labels[static_cast<std::size_t>(i)] + "*" + labels[static_cast<std::size_t>(j)] +
                 " leaves the candidate maximal ideal";
      FpVec v = basis_vector(i);
      bool nil = false;
      for (int step = 0; step <= n; ++step) {
        if (std::all_of(v.begin(), v.end(), [&](unsigned x) { return x % p == 0; })) {
          nil = true;
          break;
        }
        v = multiply(v, basis_vector(i));
      }
      if (!nil) return labels[static_cast<std::size_t>(i)] + " is not nilpotent";
    }
    return std::nullopt;
  }
};

inline AlgebraTable tensor_table(const AlgebraTable& a, const AlgebraTable& b) {
  if (a.p != b.p) throw std::invalid_argument("tensor_table: mismatched characteristic");
  int na = a.dim(), nb = b.dim();
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(na) * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      labels.push_back(a.labels[static_cast<std::size_t>(i)] + "(x)" +
                       b.labels[static_cast<std::size_t>(j)]);
  AlgebraTable t = AlgebraTable::with_dim(a.p, std::move(labels), a.identity * nb + b.identity);
  for (int i1 = 0; i1 < na; ++i1)
    for (int i2 = 0; i2 < nb; ++i2)
      for (int j1 = 0; j1 < na; ++j1)
        for (int j2 = 0; j2 < nb; ++j2)
          for (int k1 = 0; k1 < na; ++k1) {
            unsigned ca = a.c(i1, j1, k1);
            if (ca == 0) continue;
            for (int k2 = 0; k2 < nb; ++k2) {
              unsigned cb = b.c(i2, j2, k2);
              if (cb == 0) continue;
              t.c(i1 * nb + i2, j1 * nb + j2, k1 * nb + k2) =
                  static_cast<unsigned>(1ull * ca * cb % a.p);
            }
          }
  return t;
}

// Quotient by the span of the given generators. The span must already be an
// ideal (closed under multiplication by every basis element); otherwise the
// offending product is reported. The surviving basis consists of the source
// basis elements at non-pivot coordinates.
inline AlgebraTable quotient_table(const AlgebraTable& t, const FpMat& ideal_generators,
                                   std::vector<int>* complement_out = nullptr) {
  int n = t.dim();
  FpMat span = ideal_generators;
  auto pivots = fp_rref(span, t.p);
  // closure: row * e_j stays in the span for every span row and basis j
  for (const auto& row : span)
    for (int j = 0; j < n; ++j) {
      FpVec prod = t.multiply(row, t.basis_vector(j));
      FpVec red = fp_reduce(span, pivots, prod, t.p);
      if (std::any_of(red.begin(), red.end(), [&](unsigned x) { return x % t.p != 0; }))
        throw std::invalid_argument("quotient_table: generators do not span an ideal: (" +
                                    t.describe_vector(row) + ") * " +
                                    t.labels[static_cast<std::size_t>(j)] + " = " +
                                    t.describe_vector(prod) + " lies outside the span");
    }
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  if (is_pivot[static_cast<std::size_t>(t.identity)])
    throw std::invalid_argument("quotient_table: ideal contains the identity coordinate");
  std::vector<int> complement;
  for (int i = 0; i < n; ++i)
    if (!is_pivot[static_cast<std::size_t>(i)]) complement.push_back(i);
  std::vector<std::string> labels;
  for (int i : complement) labels.push_back(t.labels[static_cast<std::size_t>(i)]);
  int new_id = static_cast<int>(std::lower_bound(complement.begin(), complement.end(),
                                                 t.identity) -
                                complement.begin());
  AlgebraTable q = AlgebraTable::with_dim(t.p, std::move(labels), new_id);
  int m = static_cast<int>(complement.size());
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      FpVec prod = t.multiply(t.basis_vector(complement[static_cast<std::size_t>(a)]),
                              t.basis_vector(complement[static_cast<std::size_t>(b)]));
      FpVec red = fp_reduce(span, pivots, std::move(prod), t.p);
      for (int k = 0; k < m; ++k)
        q.c(a, b, k) = red[static_cast<std::size_t>(complement[static_cast<std::size_t>(k)])];
      // reduced vectors are supported on complement coordinates only
    }
  // the natural projection pi(v) = reduce(v) restricted to the complement
  // must be an algebra map on every basis pair
  auto project = [&](int i) {
    FpVec red = fp_reduce(span, pivots, t.basis_vector(i), t.p);
    FpVec out(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k)
      out[static_cast<std::size_t>(k)] = red[static_cast<std::size_t>(complement[static_cast<std::size_t>(k)])];
    return out;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FpVec prod = fp_reduce(span, pivots, t.multiply(t.basis_vector(i), t.basis_vector(j)), t.p);
      FpVec lhs(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k)
        lhs[static_cast<std::size_t>(k)] = prod[static_cast<std::size_t>(complement[static_cast<std::size_t>(k)])];
      FpVec rhs = q.multiply(project(i), project(j));
      if (lhs != rhs)
        throw std::logic_error("quotient_table: projection is not multiplicative at (" +
                               t.labels[static_cast<std::size_t>(i)] + ", " +
                               t.labels[static_cast<std::size_t>(j)] + ")");
    }
  if (complement_out) *complement_out = std::move(complement);
  return q;
}

struct AlgebraMap {
  AlgebraTable source;
  AlgebraTable target;
  FpMat matrix;  // row i = coordinates of f(e_i) in the target basis

  FpVec apply(const FpVec& x) const {
    FpVec out(static_cast<std::size_t>(target.dim()), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      unsigned f = x[i] % source.p;
      if (f == 0) continue;
      for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = static_cast<unsigned>((out[j] + 1ull * f * matrix[i][j]) % source.p);
    }
    return out;
  }
};

struct HomCheck {
  bool ok = false;
  std::string witness;
  explicit operator bool() const { return ok; }
};

// f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j) on all basis pairs; first failure
// is reported with both sides spelled out.
inline HomCheck is_homomorphism(const AlgebraMap& f) {
  if (f.source.p != f.target.p) return {false, "characteristic mismatch"};
  int n = f.source.dim();
  FpVec one = f.apply(f.source.basis_vector(f.source.identity));
  if (one != f.target.basis_vector(f.target.identity))
    return {false, "f(1) = " + f.target.describe_vector(one) + " != 1"};
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      FpVec prod(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) prod[static_cast<std::size_t>(k)] = f.source.c(i, j, k);
      FpVec lhs = f.apply(prod);
      FpVec rhs = f.target.multiply(f.matrix[static_cast<std::size_t>(i)],
                                    f.matrix[static_cast<std::size_t>(j)]);
      if (lhs != rhs)
        return {false, "f(" + f.source.labels[static_cast<std::size_t>(i)] + " * " +
                           f.source.labels[static_cast<std::size_t>(j)] + ") = " +
                           f.target.describe_vector(lhs) + " but f(..)f(..) = " +
                           f.target.describe_vector(rhs)};
    }
  return {true, ""};
}

inline bool is_bijective(const AlgebraMap& f) {
  if (f.source.dim() != f.target.dim()) return false;
  return fp_rank(f.matrix, f.source.p) == f.source.dim();
}

inline bool is_surjective(const AlgebraMap& f) {
  return fp_rank(f.matrix, f.source.p) == f.target.dim();
}

inline FpMat kernel_basis(const AlgebraMap& f) { return fp_left_nullspace(f.matrix, f.source.p); }

// compose(f, g): first f, then g.
inline AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g) {
  return {f.source, g.target, fp_mat_mul(f.matrix, g.matrix, f.source.p)};
}

inline AlgebraMap inverse_map(const AlgebraMap& f) {
  return {f.target, f.source, fp_invert(f.matrix, f.source.p)};
}

// f1 (x) f2 on the tensor tables of the sources/targets.
inline AlgebraMap tensor_map(const AlgebraMap& f1, const AlgebraMap& f2) {
  AlgebraTable src = tensor_table(f1.source, f2.source);
  AlgebraTable tgt = tensor_table(f1.target, f2.target);
  unsigned p = src.p;
  int n1 = f1.source.dim(), n2 = f2.source.dim();
  int m1 = f1.target.dim(), m2 = f2.target.dim();
  FpMat mat(static_cast<std::size_t>(n1) * n2, FpVec(static_cast<std::size_t>(m1) * m2, 0));
  for (int i1 = 0; i1 < n1; ++i1)
    for (int i2 = 0; i2 < n2; ++i2)
      for (int j1 = 0; j1 < m1; ++j1)
        for (int j2 = 0; j2 < m2; ++j2)
          mat[static_cast<std::size_t>(i1) * n2 + i2][static_cast<std::size_t>(j1) * m2 + j2] =
              static_cast<unsigned>(1ull * f1.matrix[static_cast<std::size_t>(i1)]
                                                    [static_cast<std::size_t>(j1)] *
                                    f2.matrix[static_cast<std::size_t>(i2)]
                                             [static_cast<std::size_t>(j2)] %
                                    p);
  return {std::move(src), std::move(tgt), std::move(mat)};
}

}  // namespace dualpolar

#endif

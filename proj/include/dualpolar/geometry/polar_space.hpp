#ifndef DUALPOLAR_GEOMETRY_POLAR_SPACE_HPP
#define DUALPOLAR_GEOMETRY_POLAR_SPACE_HPP

// Ground-truth engine: enumerate the maximal totally isotropic subspaces of
// a standard form, measure the relation indices i = d - dim(x intersect y),
// count intersection numbers by brute force, and convert to Riemann-basis
// constants. Everything here is independent of the product formula it is
// used to check.

#include "dualpolar/exact_int.hpp"
#include "dualpolar/geometry/forms.hpp"
#include "dualpolar/geometry/small_field.hpp"
#include "dualpolar/scheme.hpp"

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace dualpolar::geometry {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced-row-echelon basis; two subspaces are equal iff their canonical
// matrices are identical.
struct SubspaceCanon {
  int ambient = 0;
  int dim = 0;
  std::vector<uint8_t> rows;  // dim * ambient

  std::span<const uint8_t> row(int i) const {
    return {rows.data() + static_cast<std::size_t>(i) * ambient,
            static_cast<std::size_t>(ambient)};
  }
  friend bool operator==(const SubspaceCanon& a, const SubspaceCanon& b) = default;
  friend auto operator<=>(const SubspaceCanon& a, const SubspaceCanon& b) = default;
};

namespace detail {

// rref of the stacked rows; returns (canonical rows, rank)
inline std::pair<std::vector<uint8_t>, int> rref_rows(const SmallField& f, int ambient,
                                                      std::vector<uint8_t> m, int nrows) {
  int rank = 0;
  for (int c = 0; c < ambient && rank < nrows; ++c) {
    int piv = -1;
    for (int r = rank; r < nrows; ++r)
      if (m[static_cast<std::size_t>(r) * ambient + c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < ambient; ++j)
      std::swap(m[static_cast<std::size_t>(rank) * ambient + j],
                m[static_cast<std::size_t>(piv) * ambient + j]);
    unsigned inv = f.inv(m[static_cast<std::size_t>(rank) * ambient + c]);
    for (int j = 0; j < ambient; ++j) {
      auto& x = m[static_cast<std::size_t>(rank) * ambient + j];
      x = static_cast<uint8_t>(f.mul(x, inv));
    }
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      unsigned fac = m[static_cast<std::size_t>(r) * ambient + c];
      if (fac == 0) continue;
      for (int j = 0; j < ambient; ++j) {
        auto& x = m[static_cast<std::size_t>(r) * ambient + j];
        x = static_cast<uint8_t>(
            f.sub(x, f.mul(fac, m[static_cast<std::size_t>(rank) * ambient + j])));
      }
    }
    ++rank;
  }
  m.resize(static_cast<std::size_t>(rank) * ambient);
  return {std::move(m), rank};
}

inline SubspaceCanon canonicalize(const SmallField& f, int ambient,
                                  const std::vector<uint8_t>& stacked, int nrows) {
  auto [rows, rank] = rref_rows(f, ambient, stacked, nrows);
  return SubspaceCanon{ambient, rank, std::move(rows)};
}

}  // namespace detail

// Depth-first extension of totally isotropic flags, canonicalized and
// deduplicated level by level. The cap bounds the number of subspaces kept
// at any level; exceeding it is a resource error, not a math failure.
inline std::vector<SubspaceCanon> enumerate_maximal_isotropics(const SmallField& f,
                                                               const FormSpec& spec,
                                                               std::size_t cap = 5000) {
  if (!form_nondegenerate(spec, f))
    throw std::logic_error("enumerate_maximal_isotropics: degenerate form");
  const int n = spec.ambient;
  double vec_count = 1;
  for (int i = 0; i < n; ++i) vec_count *= f.order();
  if (vec_count > double(1 << 22))
    throw ResourceLimitError("enumerate_maximal_isotropics: ambient space too large (" +
                             std::to_string(n) + " coordinates over F_" +
                             std::to_string(f.order()) + ")");
  const auto total = static_cast<std::size_t>(vec_count);
  // all vectors, encoded as digit strings
  std::vector<std::vector<uint8_t>> vecs(total, std::vector<uint8_t>(static_cast<std::size_t>(n)));
  for (std::size_t v = 0; v < total; ++v) {
    std::size_t x = v;
    for (int i = 0; i < n; ++i) {
      vecs[v][static_cast<std::size_t>(i)] = static_cast<uint8_t>(x % f.order());
      x /= f.order();
    }
  }
  std::set<SubspaceCanon> level;
  level.insert(SubspaceCanon{n, 0, {}});
  for (int k = 0; k < spec.d; ++k) {
    std::set<SubspaceCanon> next;
    for (const auto& s : level) {
      for (std::size_t v = 1; v < total; ++v) {
        const auto& vec = vecs[v];
        if (!vector_isotropic(spec, f, vec)) continue;
        bool compatible = true;
        for (int r = 0; r < s.dim && compatible; ++r)
          if (pairing(spec, f, s.row(r), vec) != 0) compatible = false;
        if (!compatible) continue;
        std::vector<uint8_t> stacked = s.rows;
        stacked.insert(stacked.end(), vec.begin(), vec.end());
        SubspaceCanon c = detail::canonicalize(f, n, stacked, s.dim + 1);
        if (c.dim != s.dim + 1) continue;  // vec already inside s
        next.insert(std::move(c));
        if (next.size() > cap)
          throw ResourceLimitError("enumerate_maximal_isotropics: more than " +
                                   std::to_string(cap) + " subspaces at dimension " +
                                   std::to_string(k + 1));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

// The enumerated scheme: points plus the full relation matrix.
class PolarSpace {
 public:
  explicit PolarSpace(const SchemeParams& params, std::size_t cap = 5000)
      : PolarSpace(params, nullptr, cap) {}

  static PolarSpace from_points(const SchemeParams& params, std::vector<SubspaceCanon> points) {
    return PolarSpace(params, &points, 0);
  }

  const SchemeParams& params() const { return params_; }
  const SmallField& field() const { return field_; }
  const FormSpec& form() const { return form_; }
  const std::vector<SubspaceCanon>& points() const { return points_; }
  int size() const { return static_cast<int>(points_.size()); }

  int relation(int x, int y) const {
    return rel_[static_cast<std::size_t>(x) * points_.size() + static_cast<std::size_t>(y)];
  }

 private:
  PolarSpace(const SchemeParams& params, std::vector<SubspaceCanon>* preset, std::size_t cap)
      : params_(params),
        form_(standard_form(params.family, params.d, params.b)),
        field_(build_field(form_.field_order)) {
    if (preset) {
      points_ = std::move(*preset);
      validate_points();
    } else {
      points_ = enumerate_maximal_isotropics(field_, form_, cap);
    }
    build_relations();
  }

  void validate_points() {
    std::set<SubspaceCanon> seen;
    for (const auto& pt : points_) {
      if (pt.ambient != form_.ambient || pt.dim != params_.d)
        throw std::invalid_argument("PolarSpace: point with wrong shape");
      auto canon = detail::canonicalize(field_, form_.ambient, pt.rows, pt.dim);
      if (!(canon == pt)) throw std::invalid_argument("PolarSpace: point basis not canonical");
      for (int r = 0; r < pt.dim; ++r) {
        if (!vector_isotropic(form_, field_, pt.row(r)))
          throw std::invalid_argument("PolarSpace: point is not totally isotropic");
        for (int r2 = r; r2 < pt.dim; ++r2)
          if (pairing(form_, field_, pt.row(r), pt.row(r2)) != 0)
            throw std::invalid_argument("PolarSpace: point is not totally isotropic");
      }
      if (!seen.insert(pt).second) throw std::invalid_argument("PolarSpace: duplicate point");
    }
  }

  void build_relations() {
    const int n = size(), d = params_.d;
    rel_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
      for (int y = x; y < n; ++y) {
        std::vector<uint8_t> stacked = points_[static_cast<std::size_t>(x)].rows;
        stacked.insert(stacked.end(), points_[static_cast<std::size_t>(y)].rows.begin(),
                       points_[static_cast<std::size_t>(y)].rows.end());
        auto [rows, rank] = detail::rref_rows(field_, form_.ambient, std::move(stacked), 2 * d);
        int i = rank - d;  // dim(x cap y) = 2d - rank, relation = d - dim
        rel_[static_cast<std::size_t>(x) * n + y] = static_cast<uint8_t>(i);
        rel_[static_cast<std::size_t>(y) * n + x] = static_cast<uint8_t>(i);
      }
  }

  SchemeParams params_;
  FormSpec form_;
  SmallField field_;
  std::vector<SubspaceCanon> points_;
  std::vector<uint8_t> rel_;
};

inline PolarSpace build_polar_space(const SchemeParams& params, std::size_t cap = 5000) {
  return PolarSpace(params, cap);
}

// p_{ij}^k by full scan: for EVERY pair in R_k the count of z with
// (x,z) in R_i and (z,y) in R_j must agree; disagreement falsifies the
// scheme axioms for the constructed space and is fatal.
inline CubeTensor empirical_intersection_numbers(const PolarSpace& space) {
  const int n = space.size(), d = space.params().d, m = d + 1;
  CubeTensor p(m);
  std::vector<bool> have(static_cast<std::size_t>(m), false);
  std::vector<std::vector<long long>> rep(static_cast<std::size_t>(m));
  std::vector<long long> cnt(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int k = space.relation(x, y);
      std::fill(cnt.begin(), cnt.end(), 0);
      for (int z = 0; z < n; ++z)
        ++cnt[static_cast<std::size_t>(space.relation(x, z)) * m + space.relation(z, y)];
      if (!have[static_cast<std::size_t>(k)]) {
        have[static_cast<std::size_t>(k)] = true;
        rep[static_cast<std::size_t>(k)] = cnt;
      } else if (rep[static_cast<std::size_t>(k)] != cnt) {
        throw std::logic_error(
            "empirical_intersection_numbers: counts depend on the representative of R_" +
            std::to_string(k));
      }
    }
  for (int k = 0; k < m; ++k) {
    if (!have[static_cast<std::size_t>(k)]) continue;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        p.at(i, j, k) = rep[static_cast<std::size_t>(k)][static_cast<std::size_t>(i) * m + j];
  }
  return p;
}

// Riemann-basis constants measured on the space.
inline StructureTensor empirical_rho(const PolarSpace& space) {
  CubeTensor p = empirical_intersection_numbers(space);
  BaseChange bc(space.params());
  return riemann_tensor_from_adjacency(space.params(), p, bc);
}

// ---- line-based cache ----------------------------------------------------
//
//   dualpolar-space v1 <family> <d> <b>
//   field <q>
//   point <row>;<row>;...        (one line per subspace, rows as digit strings)
//   end
//
// Loading re-validates isotropy and canonical form, then rebuilds relations.

inline constexpr char element_digits[] = "0123456789abcdef";

inline void save_space(const PolarSpace& space, std::ostream& os) {
  const auto& P = space.params();
  os << "dualpolar-space v1 " << family_name(P.family) << " " << P.d << " " << P.b.str() << "\n";
  os << "field " << space.field().order() << "\n";
  for (const auto& pt : space.points()) {
    os << "point ";
    for (int r = 0; r < pt.dim; ++r) {
      if (r) os << ";";
      for (int j = 0; j < pt.ambient; ++j)
        os << element_digits[pt.row(r)[static_cast<std::size_t>(j)]];
    }
    os << "\n";
  }
  os << "end\n";
}

inline PolarSpace load_space(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("load_space: empty stream");
  std::istringstream head(line);
  std::string magic, version, fam_s;
  int d = 0;
  std::string b_s;
  head >> magic >> version >> fam_s >> d >> b_s;
  if (magic != "dualpolar-space" || version != "v1")
    throw std::invalid_argument("load_space: bad header: " + line);
  auto fam = parse_family(fam_s);
  if (!fam) throw std::invalid_argument("load_space: unknown family " + fam_s);
  SchemeParams params(*fam, d, ExactInt(b_s));
  FormSpec spec = standard_form(params.family, params.d, params.b);
  unsigned field_order = 0;
  std::vector<SubspaceCanon> points;
  while (std::getline(is, line)) {
    if (line == "end") break;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "field") {
      ls >> field_order;
    } else if (tag == "point") {
      std::string body;
      ls >> body;
      SubspaceCanon pt;
      pt.ambient = spec.ambient;
      std::size_t pos = 0;
      while (pos < body.size()) {
        std::size_t next = body.find(';', pos);
        std::string row = body.substr(pos, next == std::string::npos ? next : next - pos);
        if (static_cast<int>(row.size()) != spec.ambient)
          throw std::invalid_argument("load_space: row of wrong length: " + row);
        for (char ch : row) {
          const char* pos_d = std::strchr(element_digits, ch);
          if (!pos_d || ch == '\0') throw std::invalid_argument("load_space: bad digit");
          pt.rows.push_back(static_cast<uint8_t>(pos_d - element_digits));
        }
        ++pt.dim;
        pos = next == std::string::npos ? body.size() : next + 1;
      }
      points.push_back(std::move(pt));
    } else {
      throw std::invalid_argument("load_space: unexpected line: " + line);
    }
  }
  if (field_order != spec.field_order)
    throw std::invalid_argument("load_space: field order mismatch");
  return PolarSpace::from_points(params, std::move(points));
}

}  // namespace dualpolar::geometry

#endif

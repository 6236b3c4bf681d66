#ifndef DUALPOLAR_VERIFY_HPP
#define DUALPOLAR_VERIFY_HPP

// Verification sweeps. Each suite expands to a list of independent instance
// checks, fans out across a worker pool, and merges per-instance verdicts in
// a deterministic order. Resource-cap violations are reported as their own
// status, never conflated with mathematical failures.

#include "dualpolar/geometry/polar_space.hpp"
#include "dualpolar/modular.hpp"
#include "dualpolar/parallel.hpp"
#include "dualpolar/presentations.hpp"
#include "dualpolar/scheme.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace dualpolar::verify {

enum class Status { Pass, Fail, NotApplicable, ResourceError };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
    case Status::ResourceError: return "resource-error";
  }
  return "?";
}

struct InstanceResult {
  std::string key;
  Status status = Status::Pass;
  std::string witness;
};

struct SuiteReport {
  std::string suite;
  std::vector<InstanceResult> instances;

  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& r : instances)
      if (r.status == s) ++n;
    return n;
  }
  bool all_passed() const { return count(Status::Fail) == 0 && count(Status::ResourceError) == 0; }
};

struct SweepOptions {
  int dmax = 0;          // 0 = per-suite default
  long bmax = 0;         // 0 = per-suite default
  std::vector<unsigned> primes;  // empty = per-suite default
  std::size_t cap = 5000;
  std::uint64_t seed = 20240501;
  int pairs = 200;
  unsigned threads = 0;
  std::string cache_dir;  // oracle suite: load/store enumerated spaces here
};

namespace detail {

using Check = std::function<InstanceResult()>;

inline SuiteReport run_checks(std::string suite, std::vector<Check> checks, unsigned threads) {
  SuiteReport report;
  report.suite = std::move(suite);
  report.instances.resize(checks.size());
  parallel_for(
      checks.size(),
      [&](std::size_t i) {
        try {
          report.instances[i] = checks[i]();
        } catch (const geometry::ResourceLimitError& e) {
          report.instances[i].status = Status::ResourceError;
          report.instances[i].witness = e.what();
        } catch (const std::exception& e) {
          report.instances[i].status = Status::Fail;
          report.instances[i].witness = std::string("exception: ") + e.what();
        }
      },
      threads);
  return report;
}

inline std::vector<unsigned> primes_or(const SweepOptions& opt, std::vector<unsigned> def) {
  return opt.primes.empty() ? def : opt.primes;
}

inline SchemeParams make_params(SchemeFamily f, int d, long b) {
  return SchemeParams(f, d, ExactInt(b));
}

}  // namespace detail

// product form vs semilattice summation, exact, all valid (s,t,u)
inline SuiteReport run_lemma(const SweepOptions& opt = {}) {
  int dmax = opt.dmax ? opt.dmax : 8;
  long bmax = opt.bmax ? opt.bmax : 5;
  std::vector<detail::Check> checks;
  for (SchemeFamily f : all_families)
    for (int d = 1; d <= dmax; ++d)
      for (long b = 2; b <= bmax; ++b)
        checks.push_back([f, d, b] {
          SchemeParams P = detail::make_params(f, d, b);
          InstanceResult r{P.key(), Status::Pass, ""};
          StructureTensor prod = StructureTensor::product_form(P);
          StructureTensor sum = StructureTensor::semilattice_form(P);
          for (int s = 0; s <= d; ++s)
            for (int t = 0; t <= d; ++t)
              for (int u = 0; u <= std::min(s, t); ++u) {
                if (prod.rho(s, t, u) != sum.rho(s, t, u)) {
                  std::ostringstream os;
                  os << "rho_{" << s << "," << t << "}^" << u << ": product "
                     << prod.rho(s, t, u).str() << " != summation " << sum.rho(s, t, u).str();
                  return InstanceResult{P.key(), Status::Fail, os.str()};
                }
                if (prod.rho(s, t, u) != prod.rho(t, s, u)) {
                  std::ostringstream os;
                  os << "rho_{" << s << "," << t << "}^" << u << " != rho_{" << t << "," << s
                     << "}^" << u;
                  return InstanceResult{P.key(), Status::Fail, os.str()};
                }
              }
          return r;
        });
  return detail::run_checks("lemma", std::move(checks), opt.threads);
}

// block count vs the closed-form locality statement; p | b forces k >= 2;
// the formula count is cross-checked against the exact tensor diagonal
inline SuiteReport run_blocks(const SweepOptions& opt = {}) {
  int dmax = opt.dmax ? opt.dmax : 12;
  long bmax = opt.bmax ? opt.bmax : 9;
  auto primes = detail::primes_or(opt, {3, 5, 7, 11, 13});
  std::vector<detail::Check> checks;
  for (SchemeFamily f : all_families)
    for (int d = 1; d <= dmax; ++d)
      for (long b = 2; b <= bmax; ++b)
        for (unsigned p : primes)
          checks.push_back([f, d, b, p] {
            SchemeParams P = detail::make_params(f, d, b);
            std::string key = P.key() + " p=" + std::to_string(p);
            int k = k_blocks(P, p);
            StructureTensor t = structure_tensor(P);
            int diag = 0;
            for (int i = 0; i <= d; ++i)
              if (mod_reduce(t.rho(i, i, i), p) != 0) ++diag;
            if (k != diag)
              return InstanceResult{key, Status::Fail,
                                    "formula count " + std::to_string(k) +
                                        " != exact diagonal count " + std::to_string(diag)};
            if (b % static_cast<long>(p) == 0) {
              if (k < 2)
                return InstanceResult{key, Status::Fail,
                                      "p | b but k_blocks = " + std::to_string(k)};
              // for the families other than D the block count is exactly 2
              if (f != SchemeFamily::D && k != 2)
                return InstanceResult{key, Status::Fail,
                                      "p | b expects exactly 2 blocks, got " + std::to_string(k)};
              return InstanceResult{key, Status::Pass, ""};
            }
            bool by_form = is_local_closed_form(P, p);
            if ((k == 1) != by_form) {
              std::ostringstream os;
              os << "k_blocks = " << k << " but closed form says "
                 << (by_form ? "local" : "not local");
              return InstanceResult{key, Status::Fail, os.str()};
            }
            return InstanceResult{key, Status::Pass, ""};
          });
  return detail::run_checks("blocks", std::move(checks), opt.threads);
}

// wherever local (by block count), the reduced tensor equals the closed form
inline SuiteReport run_local_form(const SweepOptions& opt = {}) {
  int dmax = opt.dmax ? opt.dmax : 12;
  long bmax = opt.bmax ? opt.bmax : 9;
  auto primes = detail::primes_or(opt, {3, 5, 7, 11, 13});
  std::vector<detail::Check> checks;
  for (SchemeFamily f : all_families)
    for (int d = 1; d <= dmax; ++d)
      for (long b = 2; b <= bmax; ++b)
        for (unsigned p : primes)
          checks.push_back([f, d, b, p] {
            SchemeParams P = detail::make_params(f, d, b);
            std::string key = P.key() + " p=" + std::to_string(p);
            if (b % static_cast<long>(p) == 0 || !is_local(P, p))
              return InstanceResult{key, Status::NotApplicable, ""};
            std::string witness;
            if (!check_local_closed_form_table(P, p, &witness))
              return InstanceResult{key, Status::Fail, witness};
            return InstanceResult{key, Status::Pass, ""};
          });
  return detail::run_checks("local-form", std::move(checks), opt.threads);
}

// the truncated-ring presentation map is a verified isomorphism
inline SuiteReport run_thm1(const SweepOptions& opt = {}) {
  auto primes = detail::primes_or(opt, {3, 5, 7});
  std::vector<detail::Check> checks;
  for (unsigned p : primes) {
    long r = static_cast<long>(p) - 1;
    int dmax = std::min<long>(static_cast<long>(p) * p - 1, opt.dmax ? opt.dmax : 20);
    for (int d = 1; d <= dmax; ++d)
      checks.push_back([d, r, p] {
        SchemeParams P = detail::make_params(SchemeFamily::TwoAEven, d, r);
        std::string key = P.key() + " p=" + std::to_string(p);
        AlgebraMap f = ring_presentation_map(P, p);
        HomCheck h = is_homomorphism(f);
        if (!h.ok) return InstanceResult{key, Status::Fail, h.witness};
        if (!is_bijective(f)) return InstanceResult{key, Status::Fail, "map is not bijective"};
        return InstanceResult{key, Status::Pass, ""};
      });
  }
  return detail::run_checks("thm1", std::move(checks), opt.threads);
}

// the index-split map and its composition with the ring presentations
inline SuiteReport run_thm2(const SweepOptions& opt = {}) {
  auto primes = detail::primes_or(opt, {3, 5, 7});
  int dmax = opt.dmax ? opt.dmax : 8;
  std::vector<detail::Check> checks;
  for (unsigned p : primes) {
    long q = static_cast<long>(p) - 1;
    for (int dp = 1; dp <= dmax; ++dp)
      checks.push_back([dp, q, p] {
        std::string key = "C_" + std::to_string(2 * dp + 1) + "(" + std::to_string(q) +
                          ") p=" + std::to_string(p);
        std::string w;
        if (!check_even_odd_split_congruence(dp, q, p, &w))
          return InstanceResult{key, Status::Fail, w};
        AlgebraMap split = split_presentation_map(dp, q, p);
        HomCheck h = is_homomorphism(split);
        if (!h.ok) return InstanceResult{key, Status::Fail, "split map: " + h.witness};
        if (!is_bijective(split))
          return InstanceResult{key, Status::Fail, "split map is not bijective"};
        AlgebraMap rt = ring_tensor_presentation_map(dp, q, p);
        HomCheck h2 = is_homomorphism(rt);
        if (!h2.ok) return InstanceResult{key, Status::Fail, "ring tensor map: " + h2.witness};
        if (!is_bijective(rt))
          return InstanceResult{key, Status::Fail, "ring tensor map is not bijective"};
        return InstanceResult{key, Status::Pass, ""};
      });
  }
  return detail::run_checks("thm2", std::move(checks), opt.threads);
}

// digit tensor decomposition, the tensor-power relabeling, the single
// variable presentation, and the Riemann power congruences
inline SuiteReport run_tensor(const SweepOptions& opt = {}) {
  std::vector<detail::Check> checks;
  struct LP {
    int l;
    unsigned p;
  };
  for (LP lp : {LP{2, 3}, LP{2, 5}, LP{3, 3}}) {
    long r = static_cast<long>(lp.p) - 1;
    checks.push_back([lp, r] {
      std::string key = "decomposition l=" + std::to_string(lp.l) + " r=" + std::to_string(r) +
                        " p=" + std::to_string(lp.p);
      std::string w;
      if (!check_digit_tensor_congruence(lp.l, r, lp.p, &w))
        return InstanceResult{key, Status::Fail, w};
      return InstanceResult{key, Status::Pass, ""};
    });
    checks.push_back([lp, r] {
      std::string key = "power relabeling l=" + std::to_string(lp.l) + " r=" + std::to_string(r) +
                        " p=" + std::to_string(lp.p);
      // table of A_{p^l-1} equals the iterated tensor of A_{p-1} tables
      // under the base-p digit indexing
      AlgebraTable small =
          scheme_table(detail::make_params(SchemeFamily::TwoAEven, static_cast<int>(lp.p) - 1, r),
                       lp.p);
      AlgebraTable acc = small;
      long d = static_cast<long>(lp.p) - 1;
      for (int i = 1; i < lp.l; ++i) {
        acc = tensor_table(acc, small);
        d = (d + 1) * lp.p - 1;
      }
      AlgebraTable big =
          scheme_table(detail::make_params(SchemeFamily::TwoAEven, static_cast<int>(d), r), lp.p);
      if (acc.constants != big.constants)
        return InstanceResult{key, Status::Fail, "tables differ under digit relabeling"};
      return InstanceResult{key, Status::Pass, ""};
    });
  }
  for (unsigned p : detail::primes_or(opt, {3, 5, 7})) {
    long r = static_cast<long>(p) - 1;
    checks.push_back([p, r] {
      std::string key = "single variable r=" + std::to_string(r) + " p=" + std::to_string(p);
      std::string w;
      if (!check_single_variable_presentation(r, p, &w))
        return InstanceResult{key, Status::Fail, w};
      return InstanceResult{key, Status::Pass, ""};
    });
  }
  struct PL {
    unsigned p;
    int l;
  };
  for (PL pl : {PL{3, 1}, PL{3, 2}, PL{3, 3}, PL{5, 1}, PL{5, 2}, PL{7, 1}}) {
    long r = static_cast<long>(pl.p) - 1;
    checks.push_back([pl, r] {
      std::string key = "power congruences l=" + std::to_string(pl.l) + " r=" + std::to_string(r) +
                        " p=" + std::to_string(pl.p);
      std::string w;
      if (!check_riemann_power_congruences(pl.l, r, pl.p, &w))
        return InstanceResult{key, Status::Fail, w};
      return InstanceResult{key, Status::Pass, ""};
    });
  }
  return detail::run_checks("tensor", std::move(checks), opt.threads);
}

inline SuiteReport run_epi(const SweepOptions& opt = {}) {
  auto primes = detail::primes_or(opt, {3, 5, 7});
  int dmax = opt.dmax ? opt.dmax : 8;
  std::vector<detail::Check> checks;
  for (unsigned p : primes) {
    long r = static_cast<long>(p) - 1;
    for (int d = 1; d <= dmax; ++d)
      checks.push_back([d, r, p] {
        std::string key = "A_" + std::to_string(d + 1) + "->A_" + std::to_string(d) + " r=" +
                          std::to_string(r) + " p=" + std::to_string(p);
        std::string w;
        if (!check_hermitian_shift_epi(d, r, p, &w)) return InstanceResult{key, Status::Fail, w};
        return InstanceResult{key, Status::Pass, ""};
      });
  }
  return detail::run_checks("epi", std::move(checks), opt.threads);
}

// the shift epimorphism to the orthogonal family, its kernel, and the socle
// quotient presentation of both even orthogonal families
inline SuiteReport run_psi(const SweepOptions& opt = {}) {
  auto primes = detail::primes_or(opt, {3, 5, 7});
  int dpmax = opt.dmax ? opt.dmax : 6;
  std::vector<detail::Check> checks;
  for (unsigned p : primes) {
    long q = static_cast<long>(p) - 1;
    for (int dp = 1; dp <= dpmax; ++dp) {
      checks.push_back([dp, q, p] {
        int d = 2 * dp + 1;
        std::string key = "C_" + std::to_string(d) + "->D_" + std::to_string(d - 1) + " q=" +
                          std::to_string(q) + " p=" + std::to_string(p);
        std::string w;
        if (!check_symplectic_to_orthogonal_epi(d, q, p, &w))
          return InstanceResult{key, Status::Fail, w};
        return InstanceResult{key, Status::Pass, ""};
      });
      for (SchemeFamily f : {SchemeFamily::D, SchemeFamily::TwoD})
        checks.push_back([dp, q, p, f] {
          SchemeParams P = detail::make_params(f, 2 * dp, q);
          std::string key = "quotient " + P.key() + " p=" + std::to_string(p);
          AlgebraMap m = socle_quotient_presentation_map(dp, P, p);
          HomCheck h = is_homomorphism(m);
          if (!h.ok) return InstanceResult{key, Status::Fail, h.witness};
          if (!is_bijective(m)) return InstanceResult{key, Status::Fail, "map is not bijective"};
          return InstanceResult{key, Status::Pass, ""};
        });
    }
  }
  return detail::run_checks("psi", std::move(checks), opt.threads);
}

// randomized pairs satisfying the congruence hypotheses must have equal tables
inline SuiteReport run_iso_cond(const SweepOptions& opt = {}) {
  int dmax = opt.dmax ? opt.dmax : 6;
  long bmax = opt.bmax ? opt.bmax : 9;
  auto primes = detail::primes_or(opt, {3, 5, 7, 11, 13});
  std::mt19937_64 rng(opt.seed);
  struct Pair {
    SchemeFamily f1, f2;
    int d;
    long b1, b2;
    unsigned p;
  };
  std::vector<Pair> pairs;
  long attempts = 0;
  while (static_cast<int>(pairs.size()) < opt.pairs && attempts < 2000000) {
    ++attempts;
    Pair pr;
    pr.f1 = all_families[rng() % 6];
    pr.f2 = all_families[rng() % 6];
    pr.d = 1 + static_cast<int>(rng() % static_cast<unsigned>(dmax));
    pr.b1 = 2 + static_cast<long>(rng() % static_cast<unsigned long>(bmax - 1));
    pr.b2 = 2 + static_cast<long>(rng() % static_cast<unsigned long>(bmax - 1));
    pr.p = primes[rng() % primes.size()];
    SchemeParams P1 = detail::make_params(pr.f1, pr.d, pr.b1);
    SchemeParams P2 = detail::make_params(pr.f2, pr.d, pr.b2);
    if (pr.b1 % pr.p == 0 || pr.b2 % pr.p == 0) continue;
    if (P1.q_power_mod(2, pr.p) != P2.q_power_mod(2, pr.p)) continue;
    if (P1.q_power_mod(P1.two_e(), pr.p) != P2.q_power_mod(P2.two_e(), pr.p)) continue;
    pairs.push_back(pr);
  }
  std::vector<detail::Check> checks;
  for (const Pair& pr : pairs)
    checks.push_back([pr] {
      SchemeParams P1 = detail::make_params(pr.f1, pr.d, pr.b1);
      SchemeParams P2 = detail::make_params(pr.f2, pr.d, pr.b2);
      std::string key = P1.key() + " ~ " + P2.key() + " p=" + std::to_string(pr.p);
      std::string w;
      IsoCondition res = check_isomorphic_condition(P1, P2, pr.p, &w);
      if (res == IsoCondition::HypothesesNotMet)
        return InstanceResult{key, Status::Fail, "sampled pair unexpectedly fails hypotheses"};
      if (res == IsoCondition::TablesDiffer) return InstanceResult{key, Status::Fail, w};
      return InstanceResult{key, Status::Pass, ""};
    });
  return detail::run_checks("iso-cond", std::move(checks), opt.threads);
}

// geometry ground truth: enumerated spaces vs the product formula
inline SuiteReport run_oracle(const SweepOptions& opt = {}) {
  struct Inst {
    SchemeFamily f;
    int d;
    long b;
  };
  const std::vector<Inst> instances = {
      {SchemeFamily::C, 1, 2},        {SchemeFamily::C, 2, 2},       {SchemeFamily::C, 2, 3},
      {SchemeFamily::C, 3, 2},        {SchemeFamily::B, 1, 3},       {SchemeFamily::B, 2, 3},
      {SchemeFamily::D, 2, 2},        {SchemeFamily::D, 2, 3},       {SchemeFamily::D, 3, 2},
      {SchemeFamily::TwoD, 1, 2},     {SchemeFamily::TwoD, 2, 2},    {SchemeFamily::TwoAEven, 1, 2},
      {SchemeFamily::TwoAEven, 1, 3}, {SchemeFamily::TwoAEven, 1, 4},
      {SchemeFamily::TwoAOdd, 1, 2},  {SchemeFamily::TwoAOdd, 2, 2},
  };
  std::vector<detail::Check> checks;
  for (const Inst& inst : instances)
    checks.push_back([inst, &opt]() -> InstanceResult {
      SchemeParams P = detail::make_params(inst.f, inst.d, inst.b);
      std::string key = P.key();
      std::optional<geometry::PolarSpace> space;
      std::filesystem::path cache_file;
      if (!opt.cache_dir.empty()) {
        cache_file = std::filesystem::path(opt.cache_dir) / (key + ".space");
        if (std::filesystem::exists(cache_file)) {
          std::ifstream in(cache_file);
          space.emplace(geometry::load_space(in));
        }
      }
      if (!space) {
        space.emplace(P, opt.cap);
        if (!cache_file.empty()) {
          std::filesystem::create_directories(cache_file.parent_path());
          std::ofstream out(cache_file);
          geometry::save_space(*space, out);
        }
      }
      ExactInt expect_points = rho(P, 0, 0, 0);
      if (ExactInt(space->size()) != expect_points)
        return {key, Status::Fail,
                "|X| = " + std::to_string(space->size()) + " != " + expect_points.str()};
      StructureTensor emp = geometry::empirical_rho(*space);
      StructureTensor formula = structure_tensor(P);
      for (int s = 0; s <= P.d; ++s)
        for (int t = 0; t <= P.d; ++t)
          for (int u = 0; u <= std::min(s, t); ++u)
            if (emp.rho(s, t, u) != formula.rho(s, t, u)) {
              std::ostringstream os;
              os << "rho_{" << s << "," << t << "}^" << u << ": geometry "
                 << emp.rho(s, t, u).str() << " != formula " << formula.rho(s, t, u).str();
              return {key, Status::Fail, os.str()};
            }
      return {key, Status::Pass, ""};
    });
  return detail::run_checks("oracle", std::move(checks), opt.threads);
}

// p = 2: every family with odd base is local and presented by P/W_d
inline SuiteReport run_p2_remark(const SweepOptions& opt = {}) {
  int dmax = opt.dmax ? opt.dmax : 10;
  long bmax = opt.bmax ? opt.bmax : 9;
  std::vector<detail::Check> checks;
  for (SchemeFamily f : all_families)
    for (long b = 3; b <= bmax; b += 2)
      for (int d = 1; d <= dmax; ++d)
        checks.push_back([f, d, b] {
          SchemeParams P = detail::make_params(f, d, b);
          std::string key = P.key() + " p=2";
          int k = k_blocks(P, 2);
          if (k != 1)
            return InstanceResult{key, Status::Fail, "k_blocks = " + std::to_string(k)};
          AlgebraMap m = ring_presentation_map(P, 2);
          HomCheck h = is_homomorphism(m);
          if (!h.ok) return InstanceResult{key, Status::Fail, h.witness};
          if (!is_bijective(m)) return InstanceResult{key, Status::Fail, "map is not bijective"};
          return InstanceResult{key, Status::Pass, ""};
        });
  return detail::run_checks("p2-remark", std::move(checks), opt.threads);
}

inline std::vector<std::string> suite_names() {
  return {"lemma", "blocks", "local-form", "thm1",   "thm2",     "tensor",
          "epi",   "psi",    "iso-cond",   "oracle", "p2-remark"};
}

inline SuiteReport run_suite(const std::string& name, const SweepOptions& opt = {}) {
  if (name == "lemma") return run_lemma(opt);
  if (name == "blocks") return run_blocks(opt);
  if (name == "local-form") return run_local_form(opt);
  if (name == "thm1") return run_thm1(opt);
  if (name == "thm2") return run_thm2(opt);
  if (name == "tensor") return run_tensor(opt);
  if (name == "epi") return run_epi(opt);
  if (name == "psi") return run_psi(opt);
  if (name == "iso-cond") return run_iso_cond(opt);
  if (name == "oracle") return run_oracle(opt);
  if (name == "p2-remark") return run_p2_remark(opt);
  throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace dualpolar::verify

#endif

#include "dualpolar/presentations.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace dualpolar;

namespace {
SchemeParams make(SchemeFamily f, int d, long b) { return SchemeParams(f, d, ExactInt(b)); }
}  // namespace

TEST_CASE("ring presentation of the Hermitian family", "[present]") {
  // d = 2, r = 2, p = 3: 1 -> C2, X1 -> C1, X1^2 -> 2 C0
  AlgebraMap f = ring_presentation_map(make(SchemeFamily::TwoAEven, 2, 2), 3);
  CHECK(f.matrix[0] == FpVec{0, 0, 1});
  CHECK(f.matrix[1] == FpVec{0, 1, 0});
  CHECK(f.matrix[2] == FpVec{2, 0, 0});
  CHECK(is_homomorphism(f).ok);
  CHECK(is_bijective(f));
  // X1 * X1 -> C1 C1 = 2 C0 in the target
  FpVec img = f.target.multiply(f.matrix[1], f.matrix[1]);
  CHECK(img == FpVec{2, 0, 0});
}

TEST_CASE("ring presentation across valid ranks", "[present]") {
  for (unsigned p : {3u, 5u, 7u}) {
    long r = static_cast<long>(p) - 1;
    int dmax = std::min<int>(static_cast<int>(p * p) - 1, 12);
    for (int d = 1; d <= dmax; ++d) {
      AlgebraMap f = ring_presentation_map(make(SchemeFamily::TwoAEven, d, r), p);
      HomCheck h = is_homomorphism(f);
      INFO("p=" << p << " d=" << d << ": " << h.witness);
      CHECK(h.ok);
      CHECK(is_bijective(f));
    }
  }
  // single-variable ranks: image of X1^k is k! C_{d-k}
  unsigned p = 5;
  AlgebraMap f = ring_presentation_map(make(SchemeFamily::TwoAEven, 4, 4), p);
  for (int k = 0; k <= 4; ++k) {
    FpVec row = f.matrix[static_cast<std::size_t>(k)];
    for (int j = 0; j <= 4; ++j)
      CHECK(row[static_cast<std::size_t>(j)] ==
            (j == 4 - k ? factorial_mod(static_cast<unsigned>(k), p).value() : 0u));
  }
  CHECK_THROWS_AS(ring_presentation_map(make(SchemeFamily::TwoAEven, 2, 3), 5),
                  std::invalid_argument);
}

TEST_CASE("trivial rank-zero corner", "[present]") {
  // d = 0 has no scheme, but the ring side exists: dim 1
  CHECK(ring_table(3, 0).dim() == 1);
}

TEST_CASE("corrupted presentation map is rejected with a witness", "[present]") {
  AlgebraMap f = ring_presentation_map(make(SchemeFamily::TwoAEven, 8, 2), 3);
  CHECK(is_homomorphism(f).ok);
  std::swap(f.matrix[1], f.matrix[2]);
  HomCheck h = is_homomorphism(f);
  CHECK_FALSE(h.ok);
  CHECK_FALSE(h.witness.empty());
}

TEST_CASE("single variable presentation: nilpotency index exactly p", "[present]") {
  std::string w;
  CHECK(check_single_variable_presentation(2, 3, &w));
  CHECK(check_single_variable_presentation(4, 5, &w));
  CHECK(check_single_variable_presentation(6, 7, &w));
  CHECK_FALSE(check_single_variable_presentation(3, 5, &w));  // not local
}

TEST_CASE("Riemann power congruences", "[present]") {
  std::string w;
  CHECK(check_riemann_power_congruences(1, 2, 3, &w));
  CHECK(check_riemann_power_congruences(2, 2, 3, &w));
  CHECK(check_riemann_power_congruences(2, 4, 5, &w));
  INFO(w);
  // (C_1)^2 = 2 C_0 in A_2 mod 3: same value the ring presentation uses
  AlgebraTable t = scheme_table(make(SchemeFamily::TwoAEven, 2, 2), 3);
  FpVec sq = t.multiply(t.basis_vector(1), t.basis_vector(1));
  CHECK(sq == FpVec{2, 0, 0});
}

TEST_CASE("split presentation C_{2d'+1} = A_{d'} (x) A_1", "[present]") {
  for (unsigned p : {3u, 5u}) {
    long q = static_cast<long>(p) - 1;
    for (int dp = 1; dp <= 3; ++dp) {
      AlgebraMap f = split_presentation_map(dp, q, p);
      HomCheck h = is_homomorphism(f);
      INFO("p=" << p << " d'=" << dp << ": " << h.witness);
      CHECK(h.ok);
      CHECK(is_bijective(f));
      CHECK(f.source.dim() == 2 * dp + 2);
    }
  }
  CHECK_THROWS_AS(split_presentation_map(2, 3, 5), std::invalid_argument);
}

TEST_CASE("ring tensor presentation composes the two maps", "[present]") {
  for (unsigned p : {3u, 5u}) {
    long q = static_cast<long>(p) - 1;
    for (int dp = 1; dp <= 3; ++dp) {
      AlgebraMap f = ring_tensor_presentation_map(dp, q, p);
      HomCheck h = is_homomorphism(f);
      INFO("p=" << p << " d'=" << dp << ": " << h.witness);
      CHECK(h.ok);
      CHECK(is_bijective(f));
      // consistency with the explicit composition through A_{d'} (x) A_1
      AlgebraMap split = split_presentation_map(dp, q, p);
      AlgebraMap r1 = ring_presentation_map(make(SchemeFamily::TwoAEven, std::max(dp, 1), q), p);
      AlgebraMap r2 = ring_presentation_map(make(SchemeFamily::TwoAEven, 1, q), p);
      if (dp >= 1) {
        AlgebraMap through = compose(tensor_map(r1, r2), inverse_map(split));
        CHECK(through.matrix == f.matrix);
      }
    }
  }
}

TEST_CASE("socle quotient presentation for the orthogonal families", "[present]") {
  for (unsigned p : {3u, 5u}) {
    long q = static_cast<long>(p) - 1;
    for (int dp = 1; dp <= 3; ++dp) {
      for (SchemeFamily f : {SchemeFamily::D, SchemeFamily::TwoD}) {
        AlgebraMap m = socle_quotient_presentation_map(dp, make(f, 2 * dp, q), p);
        HomCheck h = is_homomorphism(m);
        INFO(family_name(f) << " p=" << p << " d'=" << dp << ": " << h.witness);
        CHECK(h.ok);
        CHECK(is_bijective(m));
        CHECK(m.source.dim() == 2 * dp + 1);
      }
    }
  }
}

TEST_CASE("present dispatcher", "[present]") {
  // Hermitian: truncated ring
  Presentation pr = present(make(SchemeFamily::TwoAEven, 2, 2), 3);
  CHECK(pr.kind == Presentation::Kind::TruncatedRing);
  CHECK(pr.verdict.ok);
  CHECK(pr.bijective);

  // odd symplectic: tensor of truncated rings
  pr = present(make(SchemeFamily::C, 3, 2), 3);
  CHECK(pr.kind == Presentation::Kind::TensorOfTruncatedRings);
  CHECK(pr.verdict.ok);
  CHECK(pr.bijective);
  CHECK(pr.source_description.find("P/W_1 (x) P/W_1") != std::string::npos);

  // B-family shares the symplectic presentation
  pr = present(make(SchemeFamily::B, 3, 2), 3);
  CHECK(pr.kind == Presentation::Kind::TensorOfTruncatedRings);
  CHECK(pr.verdict.ok);

  // even orthogonal: socle quotient
  pr = present(make(SchemeFamily::D, 2, 2), 3);
  CHECK(pr.kind == Presentation::Kind::SocleQuotient);
  CHECK(pr.verdict.ok);
  CHECK(pr.bijective);

  // not local: report k_blocks, no map
  pr = present(make(SchemeFamily::C, 2, 2), 3);
  CHECK(pr.kind == Presentation::Kind::NotLocal);
  CHECK(pr.k_blocks == 2);
  CHECK_FALSE(pr.map.has_value());

  // p = 2: truncated ring for every family
  for (SchemeFamily f : all_families) {
    pr = present(make(f, 4, 3), 2);
    CHECK(pr.kind == Presentation::Kind::TruncatedRing);
    CHECK(pr.verdict.ok);
    CHECK(pr.bijective);
  }

  // the rank-1 edges (local without b = -1): plain truncated rings
  pr = present(make(SchemeFamily::TwoD, 1, 2), 5);
  CHECK(pr.kind == Presentation::Kind::TruncatedRing);
  CHECK(pr.verdict.ok);
  CHECK(pr.bijective);
  pr = present(make(SchemeFamily::TwoAEven, 1, 3), 7);  // r = 3, r^3 = -1 (mod 7)
  CHECK(pr.kind == Presentation::Kind::TruncatedRing);
  CHECK(pr.verdict.ok);
  CHECK(pr.bijective);
}

TEST_CASE("p = 2 ring presentation across families and odd bases", "[present]") {
  for (SchemeFamily f : all_families)
    for (long b : {3L, 5L})
      for (int d = 1; d <= 6; ++d) {
        AlgebraMap m = ring_presentation_map(make(f, d, b), 2);
        HomCheck h = is_homomorphism(m);
        INFO(family_name(f) << " d=" << d << " b=" << b << ": " << h.witness);
        CHECK(h.ok);
        CHECK(is_bijective(m));
      }
}

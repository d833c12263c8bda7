#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "kwforge/kw.hpp"
#include "kwforge/verify.hpp"
#include "oracles.hpp"

namespace kwforge {
namespace {

using Ints = std::vector<Integer>;

const KwParams k817 = make_params(8, 17);

KwSemigroup from_gens(Integer p, Integer q, const Ints& hs) { return kw_from_generators(make_params(p, q), hs); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const KwError& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

TEST(Params, DerivedFields) {
  EXPECT_EQ(k817.p_prime, 4);
  EXPECT_EQ(k817.q_prime, 8);
  EXPECT_EQ(k817.r, 4);
  EXPECT_EQ(make_params(5, 8).r, 4);
  EXPECT_EQ(make_params(5, 7).r, 6);
  EXPECT_EQ(code_of([] { make_params(4, 6); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { make_params(2, 5); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { make_params(7, 5); }), ErrorCode::Domain);
}

TEST(KwFromXy, GoldenValues) {
  EXPECT_EQ(kw_from_xy(k817, {1, 2, 3}, {4, 3, 2}).hs(), (Ints{60, 69, 78}));
  EXPECT_EQ(kw_from_xy(k817, {2, 4, 6}, {3, 2, 1}).hs(), (Ints{69, 70, 71}));
}

TEST(KwFromXy, ValidationNamesIndex) {
  try {
    kw_from_xy(k817, {2, 1, 3}, {4, 3, 2});
    FAIL();
  } catch (const KwError& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderViolation);
    EXPECT_NE(std::string(e.what()).find("index 2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { kw_from_xy(k817, {1, 9}, {2, 1}); }), ErrorCode::OutOfWindow);
  EXPECT_EQ(code_of([] { kw_from_xy(k817, {1, 2}, {5, 1}); }), ErrorCode::OutOfWindow);
  EXPECT_EQ(code_of([] { kw_from_xy(k817, {1, 2}, {1, 2}); }), ErrorCode::OrderViolation);
  EXPECT_EQ(code_of([] { kw_from_xy(k817, {}, {}); }), ErrorCode::Domain);
  EXPECT_EQ(code_of([] { kw_from_xy(k817, {1}, {1, 2}); }), ErrorCode::Domain);
}

TEST(KwFromXy, AccessorConventions) {
  const auto h = kw_from_xy(k817, {1, 2, 3}, {4, 3, 2});
  EXPECT_EQ(h.n(), 5);
  EXPECT_EQ(h.x(0), 0);
  EXPECT_EQ(h.x(3), 3);
  EXPECT_EQ(h.y(1), 4);
  EXPECT_EQ(h.y(4), 0);
  EXPECT_EQ(h.h(2), 69);
  EXPECT_EQ(h.generators(), (Ints{8, 17, 60, 69, 78}));
}

TEST(KwFromGenerators, RecoversCoordinates) {
  const auto h = from_gens(8, 17, {60, 69, 78});
  EXPECT_EQ(h.xs(), (Ints{1, 2, 3}));
  EXPECT_EQ(h.ys(), (Ints{4, 3, 2}));
  const auto g = from_gens(8, 17, {53, 62, 55});
  EXPECT_EQ(g.xs(), (Ints{4, 5, 8}));
  EXPECT_EQ(g.ys(), (Ints{3, 2, 1}));
  EXPECT_EQ(g.hs(), (Ints{53, 62, 55}));
}

TEST(KwFromGenerators, Errors) {
  EXPECT_EQ(code_of([] { from_gens(8, 17, {100}); }), ErrorCode::NoRepresentation);
  EXPECT_EQ(code_of([] { from_gens(8, 17, {0}); }), ErrorCode::NoRepresentation);
  EXPECT_EQ(code_of([] { from_gens(8, 17, {136}); }), ErrorCode::NoRepresentation);
  // (x, y) = (1, 2) and (2, 3) are both admissible but y must decrease
  EXPECT_EQ(code_of([] { from_gens(8, 17, {94, 69}); }), ErrorCode::OrderViolation);
}

TEST(Enumerate, SmallCaseMatchesListing) {
  const auto members = enumerate_kw(make_params(4, 5));
  ASSERT_EQ(members.size(), 5u);
  std::set<Ints> hsets;
  for (const auto& h : members) hsets.insert(h.hs());
  EXPECT_EQ(hsets, (std::set<Ints>{{11}, {7}, {6}, {2}, {6, 7}}));
  // (size, lex(xs, ys)) order
  EXPECT_EQ(members[0].hs(), (Ints{11}));
  EXPECT_EQ(members[1].hs(), (Ints{6}));
  EXPECT_EQ(members[2].hs(), (Ints{7}));
  EXPECT_EQ(members[3].hs(), (Ints{2}));
  EXPECT_EQ(members[4].hs(), (Ints{6, 7}));
  EXPECT_TRUE(members[3].degenerate());
  for (std::size_t k = 0; k < members.size(); ++k)
    if (k != 3) EXPECT_FALSE(members[k].degenerate()) << k;
}

TEST(Enumerate, DegenerateFlagDefinition) {
  const auto h = kw_from_xy(make_params(4, 5), {2}, {2});
  EXPECT_TRUE(h.degenerate());
  EXPECT_EQ(minimal_generators(to_numerical(h)), (Ints{2, 5}));
  EXPECT_EQ(to_numerical(kw_from_xy(make_params(4, 5), {1, 2}, {2, 1})).generators(), (Ints{4, 5, 6, 7}));
  EXPECT_EQ(code_of([&] { pf_formula(h); }), ErrorCode::Degenerate);
  EXPECT_EQ(code_of([&] { apery_formula(h); }), ErrorCode::Degenerate);
}

// Independent count: pairs of equal-size nonempty subsets X of {1..q'}, Y of {1..p'}.
Integer subset_pair_count(Integer pp, Integer qp) {
  Integer total = 0;
  for (std::uint32_t xm = 1; xm < (1u << qp); ++xm)
    for (std::uint32_t ym = 1; ym < (1u << pp); ++ym)
      if (std::popcount(xm) == std::popcount(ym)) ++total;
  return total;
}

TEST(Enumerate, CardinalityAndOrderOverSweep) {
  for (Integer p = 3; p <= 10; ++p)
    for (Integer q = p + 1; q <= 21; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto params = make_params(p, q);
      const auto members = enumerate_kw(params);
      SCOPED_TRACE(std::to_string(p) + "," + std::to_string(q));
      ASSERT_EQ(static_cast<Integer>(members.size()), count_kw(params));
      if (q <= 17) EXPECT_EQ(count_kw(params), subset_pair_count(params.p_prime, params.q_prime));

      Integer kwd = 0;
      std::set<Ints> distinct;
      for (std::size_t k = 0; k < members.size(); ++k) {
        const auto& h = members[k];
        distinct.insert(h.hs());
        if (is_kw_d(h)) ++kwd;
        for (Integer i = 1; i <= h.n() - 2; ++i) EXPECT_EQ(h.h(i), p * q - h.x(i) * p - h.y(i) * q);
        if (k > 0) {
          const auto& prev = members[k - 1];
          const auto key = [](const KwSemigroup& s) { return std::tuple(s.n(), s.xs(), s.ys()); };
          EXPECT_LT(key(prev), key(h));
        }
        // round trip through the generator form
        EXPECT_EQ(kw_from_generators(params, h.hs()), h);
        // degenerate iff multiplicity or embedding dimension collapses
        const auto s = NumericalSemigroup(h.generators());
        const bool collapsed =
            *std::min_element(h.hs().begin(), h.hs().end()) < p || embedding_dimension(s) != h.n();
        EXPECT_EQ(h.degenerate(), collapsed);
      }
      EXPECT_EQ(distinct.size(), members.size());
      EXPECT_EQ(kwd, count_kw_d(params));
    }
}

TEST(ForEach, MatchesEnumerate) {
  std::vector<KwSemigroup> seen;
  for_each_kw(k817, [&](const KwSemigroup& h) { seen.push_back(h); });
  EXPECT_EQ(seen, enumerate_kw(k817));
}

TEST(Counting, GoldenValues) {
  EXPECT_EQ(count_kw(k817), 494);
  EXPECT_EQ(count_kw(k817), binomial(12, 4) - 1);
  EXPECT_EQ(count_kw_d(k817), 44);
  EXPECT_EQ(count_kw(make_params(4, 5)), 5);
  EXPECT_EQ(count_kw_d(make_params(4, 5)), 5);
  EXPECT_EQ(rho_d(k817), (Rational{22, 247}));
  EXPECT_EQ(to_string(rho_d(k817)), "22/247");
}

TEST(Rational, Normalizes) {
  EXPECT_EQ(make_rational(44, 494), (Rational{22, 247}));
  EXPECT_EQ(make_rational(0, 5), (Rational{0, 1}));
  EXPECT_THROW(make_rational(1, 0), KwError);
}

TEST(IsKwD, Examples) {
  const auto w = is_kw_d(from_gens(8, 17, {69, 70, 71}));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (KwDWitness{2, 1}));
  EXPECT_FALSE(is_kw_d(from_gens(8, 17, {53, 62, 55})));
  EXPECT_FALSE(is_kw_d(from_gens(8, 17, {60, 69, 78})));
}

TEST(Formulas, GoldenValues) {
  EXPECT_EQ(pf_formula(from_gens(8, 17, {60, 69, 78})), (Ints{43, 52, 61, 87}));
  EXPECT_EQ(pf_formula(from_gens(8, 17, {69, 70, 71})), (Ints{60, 61, 62, 63}));
  EXPECT_EQ(pf_formula(from_gens(8, 17, {53, 62, 55})), (Ints{45, 47, 54, 60}));
  EXPECT_EQ(apery_formula(from_gens(8, 17, {60, 69, 78})).elements, (Ints{0, 17, 34, 51, 60, 69, 78, 95}));
  EXPECT_EQ(apery_formula(from_gens(8, 17, {53, 62, 55})).elements, (Ints{0, 17, 34, 51, 68, 53, 62, 55}));
  EXPECT_EQ(apery_formula(from_gens(8, 17, {69, 70, 71})).elements, (Ints{0, 17, 34, 51, 68, 69, 70, 71}));
}

TEST(Formulas, AperyFormulaMatchesOracleEverywhere) {
  for (Integer p = 3; p <= 9; ++p)
    for (Integer q = p + 1; q <= 17; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (const auto& h : enumerate_kw(make_params(p, q))) {
        if (h.degenerate()) continue;
        EXPECT_EQ(apery_formula(h).elements, oracle::apery(h.generators())) << p << "," << q;
      }
    }
}

// Off the window boundary the PF formula agrees with the gap-definition
// oracle. On the boundary at n = 3 the realized semigroup is a complete
// intersection (type 1) and the formula's n - 1 values overcount.
TEST(Formulas, PfFormulaAgainstOracle) {
  for (Integer p = 3; p <= 9; ++p)
    for (Integer q = p + 1; q <= 17; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (const auto& h : enumerate_kw(make_params(p, q))) {
        if (h.degenerate()) continue;
        const auto brute = oracle::pseudo_frobenius(h.generators());
        if (h.n() == 3 && h.on_boundary()) {
          EXPECT_EQ(brute.size(), 1u) << describe(h);
        } else {
          EXPECT_EQ(pf_formula(h), brute);
        }
      }
    }
}

TEST(Boundary, Classification) {
  EXPECT_TRUE(from_gens(5, 6, {9}).x_at_boundary());
  EXPECT_FALSE(from_gens(5, 6, {9}).y_at_boundary());
  EXPECT_TRUE(from_gens(4, 5, {6}).y_at_boundary());
  EXPECT_TRUE(from_gens(8, 17, {36, 45, 63}).on_boundary());
  EXPECT_FALSE(from_gens(8, 17, {53, 62, 55}).on_boundary());
  EXPECT_FALSE(KwSemigroup{}.on_boundary());
}

TEST(ArithmeticProgression, Cases) {
  EXPECT_TRUE(is_arithmetic_progression({63, 60, 62, 61}));
  EXPECT_TRUE(is_arithmetic_progression({6, 3}));
  EXPECT_FALSE(is_arithmetic_progression({45, 47, 54, 60}));
  EXPECT_FALSE(is_arithmetic_progression({5, 5}));
  EXPECT_FALSE(is_arithmetic_progression({}));
  EXPECT_FALSE(is_arithmetic_progression({2, 5}));  // would need z = -1
}

}  // namespace
}  // namespace kwforge

namespace kwforge {
namespace {

// <4,5,6> has a one-element PF; the equivalence holds vacuously there while
// the closed-form PF (two elements) does not match.
TEST(VerifyRange, SingletonPseudoFrobeniusOnTheBoundary) {
  const auto report = verify_range({4, 4, 5, 0});
  EXPECT_EQ(report.members, 5);
  EXPECT_TRUE(report.check("theorem_equivalence").ok());
  const auto& pf = report.check("pf_formula");
  EXPECT_EQ(pf.failed, 1);
  EXPECT_EQ(pf.boundary_failed, 1);
  EXPECT_TRUE(report.check("apery_formula").ok());
}

TEST(VerifyRange, OddPairPassesEveryCheck) {
  const auto report = verify_range({7, 7, 9, 9}, {true, 1});
  for (const auto& c : report.checks) EXPECT_TRUE(c.ok()) << c.name;
  EXPECT_TRUE(report.ok());
}

}  // namespace
}  // namespace kwforge

#include <gtest/gtest.h>

#include "affcurve/affine_perm.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace affcurve;

namespace {

AffinePerm word(std::vector<int> w, int n) { return AffinePerm::from_word(w, n); }
AffinePerm win(std::vector<Int> w) { return AffinePerm::from_window(std::move(w)); }
AffinePerm s(int i, int n) { return AffinePerm::simple(i, n); }

void expect_ok(const proptest::PropertyResult& r) {
  EXPECT_TRUE(r.ok()) << r.name << " (" << r.cases << " cases): " << (r.failures.empty() ? "no cases" : r.failures.front());
}

}  // namespace

TEST(AffinePerm, SimpleWindows) {
  EXPECT_EQ(s(1, 3), win({2, 1, 3}));
  EXPECT_EQ(s(0, 3), win({0, 2, 4}));
  EXPECT_EQ(s(0, 4), win({0, 2, 3, 5}));
}

TEST(AffinePerm, WindowValidation) {
  EXPECT_THROW(win({1, 4, 3}), InvalidArgument);  // residues collide
  EXPECT_THROW(win({2, 3, 4}), InvalidArgument);  // sum not normalized
  EXPECT_THROW(s(3, 3), InvalidArgument);
  EXPECT_THROW(multiply(s(0, 3), s(0, 4)), InvalidArgument);
}

TEST(AffinePerm, EvaluatesOffWindow) {
  const auto w = s(0, 3);
  EXPECT_EQ(w(0), 1);
  EXPECT_EQ(w(1), 0);
  EXPECT_EQ(w(4), 3);
  EXPECT_EQ(w(-2), -3);
}

TEST(AffinePerm, GroupAxioms) {
  proptest::Rng rng(7);
  for (int k = 0; k < 500; ++k) {
    const int n = 3 + k % 4;
    const auto u = proptest::random_element(n, 15, rng);
    const auto v = proptest::random_element(n, 15, rng);
    const auto w = proptest::random_element(n, 15, rng);
    EXPECT_TRUE(multiply(u, inverse(u)).is_identity());
    EXPECT_TRUE(multiply(inverse(u), u).is_identity());
    EXPECT_EQ(multiply(multiply(u, v), w), multiply(u, multiply(v, w)));
    EXPECT_EQ(inverse(u).length(), u.length());
  }
}

TEST(AffinePerm, LeftAndRightSimpleProducts) {
  proptest::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const int n = 3 + k % 3;
    const auto u = proptest::random_element(n, 12, rng);
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(u.times_simple(i), multiply(u, s(i, n)));
      EXPECT_EQ(u.simple_times(i), multiply(s(i, n), u));
      EXPECT_EQ(u.has_right_descent(i), u.times_simple(i).length() < u.length());
      EXPECT_EQ(u.has_left_descent(i), u.simple_times(i).length() < u.length());
    }
  }
}

TEST(AffinePerm, PowerMatchesRepeatedProduct) {
  const auto t = word({1, 2, 1, 0}, 3);
  AffinePerm acc = AffinePerm::identity(3);
  for (int m = 0; m <= 5; ++m) {
    EXPECT_EQ(power(t, m), acc);
    EXPECT_EQ(power(t, -m), inverse(acc));
    acc = multiply(acc, t);
  }
}

TEST(Length, Examples) {
  EXPECT_EQ(AffinePerm::identity(4).length(), 0);
  for (int n = 3; n <= 6; ++n) {
    for (const auto& r : all_roots_below_c(n)) EXPECT_EQ(reflection(r).length(), 2 * r.length() - 1);
    for (const auto& b : all_roots_below_c(n)) EXPECT_EQ(translation_pair(b).length(), 2 * (n - 1));
  }
}

TEST(Length, CountsInvertedRoots) {
  proptest::Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    const auto w = proptest::random_element(3 + k % 3, 14, rng);
    EXPECT_EQ(proptest::inverted_root_count(w), w.length()) << format_window(w);
  }
}

TEST(ReducedWord, Examples) {
  EXPECT_TRUE(reduced_word(AffinePerm::identity(3)).empty());
  EXPECT_EQ(reduced_word(s(2, 3)), (ReducedWord{2}));
  const auto w = reflection(PosRealRoot::interval(4, 1, 2));
  EXPECT_EQ(reduced_word(w).size(), 3u);
  EXPECT_EQ(w, word({1, 2, 1}, 4));
  EXPECT_EQ(format_word({0, 2}), "s0 s2");
  EXPECT_EQ(format_word({}), "id");
}

TEST(Reflection, SimpleRootsGiveSimpleReflections) {
  for (int n = 3; n <= 5; ++n)
    for (int i = 0; i < n; ++i) EXPECT_EQ(reflection(PosRealRoot::simple(n, i)), s(i, n));
}

TEST(Reflection, WrappingRootBothWords) {
  const auto r = reflection(PosRealRoot::interval(3, 2, 0));
  EXPECT_EQ(r, word({0, 2, 0}, 3));
  EXPECT_EQ(r, word({2, 0, 2}, 3));
}

TEST(Reflection, LevelOneExample) {
  const auto a1 = PosRealRoot::simple(3, 1);
  const auto r = reflection(PosRealRoot::interval(3, 1, 1, 1));
  EXPECT_EQ(r, multiply(multiply(reflection(a1), reflection(PosRealRoot::interval(3, 2, 0))), reflection(a1)));
  EXPECT_TRUE(multiply(r, r).is_identity());
  EXPECT_EQ(r.length(), 5);
}

TEST(Reflection, AgreesWithTranspositionOracle) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& r : roots_within(Degree::multiple_of_c(n, 4))) {
      const auto w = reflection(r);
      EXPECT_EQ(w, proptest::transposition_reflection(r)) << format_root(r);
      EXPECT_TRUE(multiply(w, w).is_identity());
    }
  }
}

TEST(Reflection, AgreesWithConjugation) {
  proptest::Rng rng(3);
  int checked = 0;
  for (int k = 0; k < 400; ++k) {
    const int n = 3 + k % 3;
    const auto w = proptest::random_element(n, 12, rng);
    for (int i = 0; i < n; ++i) {
      const auto image = act_on_root(w, AffineRealRoot::from_positive(PosRealRoot::simple(n, i)));
      const auto pos = image.positive() ? image : image.negated();
      EXPECT_EQ(reflection(pos.to_positive()), multiply(multiply(w, s(i, n)), inverse(w)));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(RootAction, Examples) {
  const int n = 3;
  const auto a1 = AffineRealRoot::from_positive(PosRealRoot::simple(n, 1));
  EXPECT_EQ(act_on_root(s(1, n), a1), a1.negated());
  EXPECT_EQ(act_on_root(s(1, n), AffineRealRoot::from_positive(PosRealRoot::simple(n, 2))).coeffs(),
            (std::vector<Int>{0, 1, 1}));
  EXPECT_EQ(act_on_root(s(0, n), a1).coeffs(), (std::vector<Int>{1, 1, 0}));
}

TEST(RootAction, LinearOnCoefficients) {
  // s_i(mu) = mu - <mu, alpha_i> alpha_i on coefficient vectors.
  for (int n = 3; n <= 5; ++n) {
    for (const auto& r : roots_within(Degree::multiple_of_c(n, 2))) {
      const auto rr = AffineRealRoot::from_positive(r);
      for (int i = 0; i < n; ++i) {
        const Degree base = coeffs(r);
        std::vector<Int> mu(base.coeffs().begin(), base.coeffs().end());
        const Int p = pairing(mu, coeffs(PosRealRoot::simple(n, i)).coeffs());
        mu[static_cast<std::size_t>(i)] -= p;
        EXPECT_EQ(act_on_root(s(i, n), rr).coeffs(), mu);
      }
    }
  }
}

TEST(Translation, Examples) {
  EXPECT_TRUE(translation(std::vector<Int>{0, 0, 0}).is_identity());
  const auto a1 = PosRealRoot::simple(3, 1);
  const auto tm = translation_from_root_coeffs(std::vector<Int>{0, -1, 0});
  EXPECT_EQ(tm, translation_pair(a1));
  EXPECT_EQ(tm, win({-2, 5, 3}));
  EXPECT_TRUE(multiply(translation_from_root_coeffs(std::vector<Int>{0, 1, 0}), tm).is_identity());
  EXPECT_THROW(translation_from_root_coeffs(std::vector<Int>{1, 0, 0}), InvalidArgument);
}

TEST(Translation, SimpleZeroFactorsThroughHighestRoot) {
  for (int n = 3; n <= 6; ++n) {
    const auto theta = FiniteRoot{1, n};
    const auto s_theta = reflection(PosRealRoot::interval(n, 1, n - 1));
    EXPECT_EQ(s(0, n), multiply(s_theta, translation(theta, n, -1)));
  }
}

TEST(Translation, LatticeHomomorphism) {
  const auto roots = finite_roots(4);
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      std::vector<Int> la(4, 0), lb(4, 0), lab(4, 0);
      la[a.a - 1] += 1, la[a.b - 1] -= 1;
      lb[b.a - 1] += 2, lb[b.b - 1] -= 2;
      for (int i = 0; i < 4; ++i) lab[i] = la[i] + lb[i];
      EXPECT_EQ(multiply(translation(la), translation(lb)), translation(lab));
    }
  }
}

TEST(Translation, PairsAreTranslationsByComplement) {
  // s_beta s_beta' = t_beta' if alpha_0 is outside beta', else t_{beta' - c}.
  for (int n = 3; n <= 6; ++n) {
    for (const auto& bp : all_roots_below_c(n)) {
      const Degree v = coeffs(bp);
      std::vector<Int> gamma(v.coeffs().begin(), v.coeffs().end());
      if (bp.contains(0))
        for (auto& x : gamma) x -= 1;
      EXPECT_EQ(translation_pair(complement_c(bp)), translation_from_root_coeffs(gamma)) << format_root(bp);
    }
  }
}

TEST(Translation, SplitRecoversElement) {
  proptest::Rng rng(17);
  for (int k = 0; k < 300; ++k) {
    const int n = 3 + k % 4;
    const auto w = proptest::random_element(n, 20, rng);
    const auto [fin, lambda] = split_translation(w);
    std::vector<Int> fw(fin.begin(), fin.end());
    EXPECT_EQ(multiply(AffinePerm::from_window(fw), translation(lambda)), w);
  }
}

TEST(Bruhat, Examples) {
  EXPECT_TRUE(bruhat_leq(AffinePerm::identity(3), word({0, 1, 2, 0}, 3)));
  EXPECT_TRUE(bruhat_leq(s(1, 3), word({1, 2}, 3)));
  EXPECT_FALSE(bruhat_leq(s(1, 3), s(2, 3)));
  EXPECT_FALSE(bruhat_leq(word({1, 2}, 3), s(1, 3)));
}

TEST(Bruhat, AgreesWithSubwordOracle) {
  proptest::Rng rng(23);
  int comparable = 0;
  for (int k = 0; k < 1500; ++k) {
    const int n = 3 + k % 3;
    const auto v = proptest::random_element(n, 9, rng);
    const auto u = k % 2 ? proptest::random_below(v, rng) : proptest::random_element(n, 7, rng);
    const bool expected = proptest::subword_leq(u, v);
    comparable += expected;
    EXPECT_EQ(bruhat_leq(u, v), expected) << format_window(u) << " vs " << format_window(v);
  }
  EXPECT_GT(comparable, 500);
}

TEST(Bruhat, MaximalElements) {
  const auto id = AffinePerm::identity(3);
  EXPECT_EQ(bruhat_maximal(std::vector<AffinePerm>{id, s(1, 3)}), (std::vector<AffinePerm>{s(1, 3)}));
  const std::vector<AffinePerm> inc{s(1, 3), s(2, 3), s(2, 3)};
  auto expected = std::vector<AffinePerm>{s(1, 3), s(2, 3)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(bruhat_maximal(inc), expected);
  EXPECT_TRUE(bruhat_maximal(std::vector<AffinePerm>{}).empty());
}

TEST(Bruhat, MaximalAgainstPairwiseDefinition) {
  proptest::Rng rng(29);
  for (int k = 0; k < 60; ++k) {
    const int n = 3 + k % 2;
    std::vector<AffinePerm> pool;
    for (int j = 0; j < 25; ++j) pool.push_back(proptest::random_element(n, 7, rng));
    std::vector<AffinePerm> expected;
    for (const auto& v : pool) {
      bool dominated = false;
      for (const auto& u : pool) dominated = dominated || (u != v && proptest::subword_leq(v, u));
      if (!dominated) expected.push_back(v);
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    EXPECT_EQ(bruhat_maximal(pool), expected);
    EXPECT_EQ(bruhat_maximal(pool, 4), expected);
  }
}

TEST(Hecke, Examples) {
  EXPECT_EQ(hecke_mul(s(1, 3), s(1, 3)), s(1, 3));
  const auto u = word({0, 2, 1}, 3);
  EXPECT_EQ(hecke_mul(u, AffinePerm::identity(3)), u);
  EXPECT_EQ(hecke_mul(s(1, 3), s(2, 3)), word({1, 2}, 3));
  EXPECT_EQ(hecke_mul_simple(s(1, 3), 1), s(1, 3));
}

TEST(Hecke, ProductOfSequence) {
  const std::vector<AffinePerm> fs{s(1, 3), s(2, 3), s(1, 3), s(1, 3)};
  EXPECT_EQ(hecke_product(fs, 3), word({1, 2, 1}, 3));
}

TEST(DynkinRotation, ShiftsSimpleIndices) {
  for (int n = 3; n <= 5; ++n) {
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) EXPECT_EQ(dynkin_rotate(s(i, n), k), s((i + k) % n, n));
    proptest::Rng rng(static_cast<std::uint64_t>(n));
    for (int j = 0; j < 50; ++j) {
      const auto u = proptest::random_element(n, 10, rng);
      const auto v = proptest::random_element(n, 10, rng);
      EXPECT_EQ(dynkin_rotate(multiply(u, v), 1), multiply(dynkin_rotate(u, 1), dynkin_rotate(v, 1)));
      EXPECT_EQ(dynkin_rotate(u, n), u);
    }
  }
}

TEST(AffineWeylProperties, CoxeterRelations) {
  for (int n = 3; n <= 7; ++n) expect_ok(proptest::coxeter_relations(n));
}

TEST(AffineWeylProperties, HeckeMonoidLaws) {
  for (int n = 3; n <= 5; ++n) expect_ok(proptest::hecke_laws(n, 100 + n, 300));
}

TEST(AffineWeylProperties, LengthTriple) {
  for (int n = 3; n <= 6; ++n) expect_ok(proptest::length_triple(n, 200 + n, 2500, 30));
}

TEST(AffineWeylProperties, ComparableRootsCommute) {
  for (int n = 3; n <= 5; ++n) expect_ok(proptest::comparable_roots_commute(n));
}

TEST(AffineWeylProperties, IntersectionRewrites) {
  for (int n = 3; n <= 5; ++n) expect_ok(proptest::intersection_rewrites(n));
}

TEST(AffineWeylProperties, DisjointSumDominates) {
  for (int n = 3; n <= 5; ++n) expect_ok(proptest::disjoint_sum_dominated(n));
}

TEST(AffineWeylProperties, DisconnectedSupportsCommute) {
  for (int n = 4; n <= 6; ++n) expect_ok(proptest::disconnected_supports_commute(n));
}

TEST(AffineWeylProperties, ComplementaryRootsDoNotCommute) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& a : all_roots_below_c(n)) {
      const auto sa = reflection(a);
      const auto sb = reflection(complement_c(a));
      EXPECT_NE(hecke_mul(sa, sb), hecke_mul(sb, sa)) << format_root(a);
    }
  }
}

TEST(AffineWeylProperties, CompositionsBelowReflection) {
  for (int n = 3; n <= 5; ++n) expect_ok(proptest::compositions_dominated(n));
}

TEST(AffineWeylProperties, TranslationPairsDistinct) {
  for (int n = 3; n <= 5; ++n) expect_ok(proptest::translation_pairs_distinct(n, 3));
}

TEST(AffineWeylProperties, TranslationPairLengths) {
  for (int n = 3; n <= 6; ++n) expect_ok(proptest::translation_pair_lengths(n, 3));
}

TEST(AffineWeylProperties, TwistedReflectionLengths) {
  for (int n = 3; n <= 5; ++n) expect_ok(proptest::twisted_reflection_lengths(n, 3));
}

TEST(AffineWeylProperties, ComplementTripleInequalities) {
  for (int n = 3; n <= 6; ++n) expect_ok(proptest::complement_triple_inequalities(n));
}

#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace atk;
using atk::test::group;
using atk::test::load;
using atk::test::set;

namespace {

PositiveWord pw(const CoxeterPresentation& p, const std::string& s) { return parse_positive_word(p, s); }

template <class F>
void expect_code(F f, ErrorCode code) {
  try {
    f();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

// Elements of the subgroup generated by `gens`, by breadth-first search on
// words of length at most `depth`.
std::set<CanonicalForm> generated(const Garside& a, const std::vector<CanonicalForm>& gens, int depth,
                                  std::size_t cap = 400'000) {
  std::vector<CanonicalForm> step;
  for (const auto& g : gens) {
    step.push_back(g);
    step.push_back(a.inverse(g));
  }
  std::set<CanonicalForm> seen{a.one()};
  std::vector<CanonicalForm> layer{a.one()};
  for (int d = 0; d < depth && seen.size() < cap; ++d) {
    std::vector<CanonicalForm> next;
    for (const auto& h : layer)
      for (const auto& g : step) {
        auto k = a.multiply(h, g);
        if (seen.insert(k).second) next.push_back(k);
      }
    layer = std::move(next);
  }
  return seen;
}

}  // namespace

TEST(Center, Examples) {
  auto b3 = load("b3");
  auto c = center_gen(group("b3"), b3.all());
  EXPECT_EQ(c.exponent, 1);
  EXPECT_EQ(group("b3").ambient().normal_form(c.word), group("b3").ambient().delta());
  auto a2 = load("a2");
  auto c2 = center_gen(group("a2"), a2.all());
  EXPECT_EQ(c2.exponent, 2);
  EXPECT_EQ(group("a2").ambient().normal_form(c2.word), group("a2").ambient().delta(2));
  auto a1 = load("a1");
  EXPECT_EQ(format_word(a1, center_gen(group("a1"), a1.all()).word), "s1");
  auto a3 = load("a3");
  expect_code([&] { center_gen(group("a3"), set(a3, "s1,s3")); }, ErrorCode::NotIrreducible);
  ArtinGroup aff(load("affine_a2"));
  expect_code([&] { center_gen(aff, aff.presentation().all()); }, ErrorCode::NotSpherical);
}

TEST(Center, GeneratorIsCentral) {
  for (const auto& name : {"a3", "a4", "b3", "d4", "d5", "e6", "f4", "h3", "i2_5"}) {
    auto p = load(name);
    const Garside& a = group(name).ambient();
    auto c = center_gen(group(name), p.all());
    EXPECT_TRUE(centralizes(a, a.normal_form(c.word), p.all())) << name;
    if (c.exponent == 2) {
      EXPECT_FALSE(centralizes(a, a.delta(), p.all())) << name;
    }
  }
}

TEST(Upsilon, ExampleB3) {
  auto b3 = load("b3");
  const ArtinGroup& grp = group("b3");
  const Garside& a = grp.ambient();
  auto u = upsilon_gens(grp, set(b3, "s2"));
  auto got = upsilon_elements(grp, u);
  std::set<CanonicalForm> expect{a.letter(1), delta_power_of(a, set(b3, "s1,s2")), a.delta(),
                                 delta_power_of(a, set(b3, "s2,s3"), 2)};
  EXPECT_EQ(std::set<CanonicalForm>(got.begin(), got.end()), expect);
  EXPECT_EQ(got.size(), expect.size());
}

TEST(Upsilon, WholeSetAndPairs) {
  auto a3 = load("a3");
  const ArtinGroup& grp = group("a3");
  const Garside& a = grp.ambient();
  auto all = upsilon_elements(grp, upsilon_gens(grp, a3.all()));
  EXPECT_EQ(std::set<CanonicalForm>(all.begin(), all.end()), std::set<CanonicalForm>{a.delta(2)});
  auto u = upsilon_gens(grp, set(a3, "s1,s2"));
  auto el = upsilon_elements(grp, u);
  std::set<CanonicalForm> got(el.begin(), el.end());
  EXPECT_TRUE(got.count(delta_power_of(a, set(a3, "s1,s2"), 2)));
  EXPECT_TRUE(got.count(a.delta(2)));
}

TEST(Upsilon, Errors) {
  auto e6 = load("e6");
  expect_code([&] { upsilon_gens(group("e6"), set(e6, "s1")); }, ErrorCode::UnsupportedType);
  auto h3 = load("h3");
  expect_code([&] { upsilon_gens(group("h3"), set(h3, "s1")); }, ErrorCode::UnsupportedType);
  auto a3 = load("a3");
  expect_code([&] { upsilon_gens(group("a3"), set(a3, "s1,s3")); }, ErrorCode::XNotConnected);
  expect_code([&] { upsilon_gens(group("a3"), GenSet{}); }, ErrorCode::XNotConnected);
}

TEST(Upsilon, SoundAndCompleteOnBall) {
  for (const auto& name : {"a3", "b3"}) {
    auto p = load(name);
    const ArtinGroup& grp = group(name);
    const Garside& a = grp.ambient();
    auto ball_elems = ball(a, BallBounds{});
    for (GenSet x : atk::test::proper_subsets(p)) {
      if (x.empty() || !is_connected(p, x)) continue;
      auto gens = upsilon_elements(grp, upsilon_gens(grp, x));
      for (const auto& g : gens) EXPECT_TRUE(centralizes(a, g, x));
      // Words of length 12 in the generators, met in the middle.
      auto half = generated(a, gens, 6);
      auto in_sub = [&](const CanonicalForm& g) {
        for (const auto& h : half)
          if (half.count(a.multiply(a.inverse(h), g))) return true;
        return false;
      };
      int missing = 0;
      for (const auto& g : ball_elems)
        if (centralizes(a, g, x) && !in_sub(g)) ++missing;
      EXPECT_EQ(missing, 0) << name << " X=" << x.mask();
    }
  }
}

TEST(DoubleCentralizerSpherical, Examples) {
  auto b3 = load("b3");
  auto d = double_centralizer_spherical(group("b3"), b3.all(), set(b3, "s2"));
  EXPECT_EQ(d.parabolic, set(b3, "s2"));
  ASSERT_EQ(d.cyclic_factors.size(), 1u);
  EXPECT_EQ(d.cyclic_factors[0], (CyclicFactor{b3.all(), 1, false}));
  EXPECT_EQ(d.symbolic, DZTag::SphericalProduct);

  auto e6 = load("e6");
  auto de = double_centralizer_spherical(group("e6"), e6.all(), set(e6, "s2,s3,s4,s5,s6"));
  ASSERT_EQ(de.cyclic_factors.size(), 1u);
  EXPECT_TRUE(de.cyclic_factors[0].quasi);
  EXPECT_EQ(de.cyclic_factors[0].exponent, 1);

  auto full = double_centralizer_spherical(group("b3"), b3.all(), b3.all());
  EXPECT_TRUE(full.cyclic_factors.empty());

  auto a3 = load("a3");
  auto red = double_centralizer_spherical(group("a3"), set(a3, "s1,s3"), set(a3, "s1"));
  ASSERT_EQ(red.cyclic_factors.size(), 1u);
  EXPECT_EQ(red.cyclic_factors[0], (CyclicFactor{set(a3, "s3"), 1, false}));
  EXPECT_EQ(red.generators.size(), 2u);
}

TEST(DoubleCentralizerSpherical, GeneratorsRealizeDescription) {
  for (const auto& name : {"a3", "b3", "d4", "d5"}) {
    auto p = load(name);
    const ArtinGroup& grp = group(name);
    const Garside& a = grp.ambient();
    for (GenSet x : atk::test::proper_subsets(p)) {
      auto d = double_centralizer_spherical(grp, p.all(), x);
      ASSERT_EQ(d.generators.size(), x.size() + d.cyclic_factors.size());
      for (std::size_t i = 0; i < d.cyclic_factors.size(); ++i) {
        const auto& f = d.cyclic_factors[i];
        auto g = a.normal_form(d.generators[x.size() + i]);
        EXPECT_EQ(g, delta_power_of(a, f.set, f.exponent));
        // The factor commutes with A_X, or normalizes X when quasi.
        EXPECT_TRUE(f.quasi ? in_quasi_centralizer(a, g, x) : centralizes(a, g, x));
        EXPECT_FALSE(a.in_parabolic(g, x));
      }
    }
  }
}

TEST(DoubleCentralizerSpherical, BallEquivalenceA3) {
  auto p = load("a3");
  const ArtinGroup& grp = group("a3");
  const Garside& a = grp.ambient();
  BallBounds b{1, -2, 2};
  auto elems = ball(a, b);
  for (GenSet x : atk::test::proper_subsets(p)) {
    auto d = double_centralizer_spherical(grp, p.all(), x);
    std::vector<CanonicalForm> zx;
    for (const auto& g : elems)
      if (centralizes(a, g, x)) zx.push_back(g);
    // A radius one sample of Z(A_X) is too sparse; add its generators.
    if (!x.empty() && is_connected(p, x))
      for (const auto& g : upsilon_elements(grp, upsilon_gens(grp, x))) zx.push_back(g);
    for (const auto& g : elems) {
      bool in_dz = commutes_with_all(a, g, zx);
      EXPECT_EQ(in_dz, in_described_group(grp, d, g, 2 + 1 + 2)) << x.mask() << " " << format_word(p, a.word(g));
    }
  }
}

TEST(Normalizer, FactorExamples) {
  auto a3 = load("a3");
  const ArtinGroup& grp = group("a3");
  const Garside& a = grp.ambient();
  auto g = a.normal_form(pw(a3, "s1 s1"));
  auto f = qz_ax_factor(grp, g, set(a3, "s1"));
  EXPECT_EQ(f.r, a.one());
  EXPECT_EQ(f.x, g);
  auto fd = qz_ax_factor(grp, a.delta(), set(a3, "s2"));
  EXPECT_EQ(fd.r, a.delta());
  EXPECT_EQ(fd.x, a.one());
  expect_code([&] { qz_ax_factor(grp, a.delta(), set(a3, "s1")); }, ErrorCode::NotInNormalizer);
}

TEST(Normalizer, FactorOnBall) {
  for (const auto& name : {"a3", "b3"}) {
    auto p = load(name);
    const ArtinGroup& grp = group(name);
    const Garside& a = grp.ambient();
    auto elems = ball(a, BallBounds{1, -2, 2});
    int found = 0;
    for (GenSet x : atk::test::proper_subsets(p))
      for (const auto& g : elems) {
        if (!normalizes(a, g, x)) continue;
        auto f = qz_ax_factor(grp, g, x);
        EXPECT_TRUE(in_quasi_centralizer(a, f.r, x));
        EXPECT_TRUE(a.in_parabolic(f.x, x));
        EXPECT_EQ(a.multiply(f.r, f.x), g);
        ++found;
      }
    EXPECT_GT(found, 100);
  }
}

TEST(DeltaInDz, Lm518Consequences) {
  for (auto [name, xs] : {std::pair<std::string, std::string>{"d5", "s2,s2p,s3"}, {"e6", "s2,s3,s4,s5,s6"}}) {
    auto p = load(name);
    GenSet x = set(p, xs);
    ASSERT_TRUE(delta_in_dz_condition(p, x));
    const Garside& a = group(name).ambient();
    auto tau = a.tau_map();
    for (int s : (p.all() - x).indices()) EXPECT_EQ(tau[s], s);
    bool moves = false;
    for (int s : x.indices()) moves = moves || tau[s] != s;
    EXPECT_TRUE(moves);
    for (GenSet c : components(p, x)) {
      GenSet img;
      for (int s : c.indices()) img.insert(tau[s]);
      EXPECT_EQ(img, c);
    }
    EXPECT_TRUE(in_quasi_centralizer(a, a.delta(), x));
    EXPECT_FALSE(centralizes(a, a.delta(), x));
  }
}

TEST(SmallestT, Examples) {
  auto aff = load("affine_a2");
  ArtinGroup grp(aff);
  auto t = smallest_parabolic_T(grp, set(aff, "s1,s2"));
  EXPECT_EQ(t.t, set(aff, "s1,s2"));
  EXPECT_FALSE(t.exact);
  EXPECT_TRUE(t.assumes_property);
  auto full = smallest_parabolic_T(grp, aff.all());
  EXPECT_EQ(full.t, GenSet{});
  EXPECT_TRUE(full.exact);

  auto f9 = load("figure9");
  ArtinGroup g9(f9);
  auto t9 = smallest_parabolic_T(g9, set(f9, "s1,s2,s3,s6,s7"));
  EXPECT_TRUE(set(f9, "s6,s7").subset_of(t9.t));
  EXPECT_FALSE(t9.exact);
}

TEST(DoubleCentralizerGeneral, Examples) {
  auto aff = load("affine_a2");
  ArtinGroup grp(aff);
  auto all = double_centralizer_general(grp, aff.all());
  EXPECT_EQ(all.symbolic, DZTag::CentralizerOfPerp);
  EXPECT_EQ(all.perp, GenSet{});
  EXPECT_TRUE(all.exact);
  auto two = double_centralizer_general(grp, set(aff, "s1,s2"));
  EXPECT_EQ(two.symbolic, DZTag::JustAX);
  EXPECT_EQ(two.t, set(aff, "s1,s2"));
  EXPECT_FALSE(two.exact);

  auto f2 = load("figure2_fc");
  ArtinGroup g2(f2);
  auto bc = double_centralizer_general(g2, set(f2, "b,c"));
  EXPECT_EQ(bc.symbolic, DZTag::CentralizerOfPerp);
  EXPECT_EQ(bc.perp, set(f2, "e,f"));

  auto fm = load("fc_mixed");
  ArtinGroup gm(fm);
  auto rec = double_centralizer_general(gm, set(fm, "c"), set(fm, "c,d"));
  EXPECT_EQ(rec.symbolic, DZTag::RecurseIntoT);
  EXPECT_TRUE(rec.exact);
  ASSERT_EQ(rec.cyclic_factors.size(), 1u);
  EXPECT_EQ(rec.cyclic_factors[0].set, set(fm, "c,d"));
  auto big = double_centralizer_general(gm, set(fm, "c"));
  EXPECT_EQ(big.symbolic, DZTag::JustAX);

  expect_code([&] { double_centralizer_general(group("b3"), GenSet::single(0)); }, ErrorCode::NotApplicable);
  ArtinGroup g9(load("figure9"));
  expect_code([&] { double_centralizer_general(g9, GenSet::single(0)); }, ErrorCode::NotApplicable);
  expect_code([&] { double_centralizer_general(gm, set(fm, "a,b,d")); }, ErrorCode::NotApplicable);
}

TEST(DoubleCentralizerGeneral, EveryTwoSubsetOfAffineA2) {
  auto aff = load("affine_a2");
  ArtinGroup grp(aff);
  for (GenSet x : {set(aff, "s1,s2"), set(aff, "s1,s3"), set(aff, "s2,s3")}) {
    auto d = double_centralizer_general(grp, x);
    EXPECT_EQ(d.symbolic, DZTag::JustAX);
    EXPECT_EQ(d.t, x);
    EXPECT_EQ(d.generators.size(), 2u);
  }
}

TEST(CentralizerReduction, MixedFcGraph) {
  // X = {a,b,d}: X_as = {a,b}, X_s = {d}, and X_as^perp = {c,d}. Elements of
  // A_{c,d,e} centralize A_X in A_S exactly when they lie in A_{c,d} and
  // centralize d there. Commutation with b is decided in A_{b,c,d,e}; a
  // commutes with c, d and e letterwise.
  auto p = load("fc_mixed");
  ArtinGroup grp(p);
  GenSet x = set(p, "a,b,d");
  auto [xs, xas] = spherical_split(p, x);
  ASSERT_EQ(xs, set(p, "d"));
  ASSERT_EQ(xas, set(p, "a,b"));
  GenSet u = perp(p, xas);
  ASSERT_EQ(u, set(p, "c,d"));
  const Garside& big = grp.garside(set(p, "b,c,d,e"));
  const Garside& cde = grp.garside(set(p, "c,d,e"));
  const Garside& small = grp.garside(u);
  int in_z = 0;
  for (const auto& g : ball(cde, BallBounds{2, -1, 1})) {
    auto gb = big.normal_form(cde.word(g));
    bool lhs = centralizes(big, gb, set(p, "b,d"));
    bool rhs = false;
    if (cde.in_parabolic(g, u)) {
      // Both Charney parts lie in A_u^+, so their words avoid e.
      auto [l, r] = cde.charney_left_split(g);
      GroupWord w = GroupWord(cde.positive_word(l)).inverse();
      for (const auto& c : cde.positive_word(r).letters) w.letters.push_back({c, 1});
      rhs = centralizes(small, small.normal_form(w), xs);
    }
    EXPECT_EQ(lhs, rhs) << format_word(p, cde.word(g));
    in_z += lhs;
  }
  EXPECT_GT(in_z, 5);
}

TEST(Ball, CountsAgainstProducts) {
  auto a2 = load("a2");
  const Garside& a = group("a2").ambient();
  auto small = ball(a, BallBounds{1, 0, 0});
  EXPECT_EQ(small.size(), 5u);

  const Garside& b = group("b3").ambient();
  BallBounds bounds{2, -2, 2};
  EXPECT_EQ(ball_sequence_bound(b, bounds), 5u * (1 + 46 + 46 * 46));
  auto elems = ball(b, bounds);
  std::set<CanonicalForm> got(elems.begin(), elems.end());
  EXPECT_EQ(got.size(), elems.size());
  // Independent count: all products Delta^k f1 f2 with proper simples,
  // deduplicated, keeping canonical length at most 2.
  const auto& l = b.lattice();
  std::set<CanonicalForm> expect;
  for (std::int64_t k = -2; k <= 2; ++k)
    for (SimpleId f1 = 0; f1 < l.size(); ++f1)
      for (SimpleId f2 = 0; f2 < l.size(); ++f2) {
        if (f1 == l.delta() || f2 == l.delta()) continue;
        auto g = b.multiply({b.delta(k), b.simple(f1), b.simple(f2)});
        if (g.delta_power == k && g.factors.size() <= 2) expect.insert(g);
      }
  EXPECT_EQ(got, expect);
  EXPECT_THROW(ball(b, BallBounds{3, -2, 2, 1000}), Error);
}

TEST(Predicates, Basics) {
  auto b3 = load("b3");
  const Garside& a = group("b3").ambient();
  EXPECT_TRUE(centralizes(a, a.delta(), b3.all()));
  EXPECT_TRUE(normalizes(a, a.delta(), set(b3, "s1")));
  EXPECT_TRUE(in_quasi_centralizer(a, a.delta(), set(b3, "s1")));
  EXPECT_FALSE(centralizes(a, a.letter(0), set(b3, "s2")));
  EXPECT_TRUE(centralizes(a, a.letter(0), set(b3, "s3")));
  auto a2 = load("a2");
  const Garside& c = group("a2").ambient();
  EXPECT_TRUE(in_quasi_centralizer(c, c.delta(), a2.all()));
  EXPECT_FALSE(in_quasi_centralizer(c, c.delta(), set(a2, "s1")));
  EXPECT_TRUE(normalizes(c, c.letter(0), set(a2, "s1")));
  EXPECT_EQ(supersets(set(a2, "s1"), a2.all()), (std::vector<GenSet>{set(a2, "s1"), a2.all()}));
}

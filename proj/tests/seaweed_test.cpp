#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lieslice/cascade.hpp"
#include "lieslice/seaweed.hpp"

using namespace lieslice;

namespace {

std::shared_ptr<const ChevalleyBasis> cb_of(const std::string& t) {
  return std::make_shared<const ChevalleyBasis>(RootSystem(TypeSpec::parse(t)));
}

SimpleSet set_of(std::initializer_list<int> one_based) {
  SimpleSet s;
  for (int i : one_based) s.insert(i - 1);
  return s;
}

std::set<RootVec> roots_of(const RootSystem& rs, const std::vector<int>& idx) {
  std::set<RootVec> out;
  for (int i : idx) out.insert(rs.root(i));
  return out;
}

std::multiset<RootVec> roots_multi(const RootSystem& rs, const std::vector<int>& idx) {
  std::multiset<RootVec> out;
  for (int i : idx) out.insert(rs.root(i));
  return out;
}

}  // namespace

TEST(Seaweed, Dimensions) {
  const auto a2 = cb_of("A2");
  EXPECT_EQ(Seaweed(a2, SimpleSet(), SimpleSet::full(2)).dim(), 5);
  EXPECT_EQ(Seaweed(a2, SimpleSet::full(2), SimpleSet::full(2)).dim(), 8);
  EXPECT_EQ(Seaweed(cb_of("A5"), set_of({1}), SimpleSet::full(5)).dim(), 21);
  EXPECT_EQ(Seaweed(a2, SimpleSet(), SimpleSet()).dim(), 2);
}

TEST(Seaweed, BasisLayout) {
  const Seaweed sw(cb_of("A2"), SimpleSet(), SimpleSet::full(2));
  EXPECT_TRUE(sw.is_cartan(0));
  EXPECT_TRUE(sw.is_cartan(1));
  for (int q = 2; q < sw.dim(); ++q) {
    EXPECT_FALSE(sw.is_cartan(q));
    EXPECT_FALSE(sw.root_system().is_positive(sw.root_of(q)));
  }
  EXPECT_FALSE(sw.q_index_of_root(sw.root_system().index_of({1, 0})).has_value());
  EXPECT_EQ(sw.basis_label(0), "H1");
}

TEST(Seaweed, BracketStaysInside) {
  const Seaweed sw(cb_of("B3"), set_of({1, 2}), set_of({2, 3}));
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int k = 0; k < 10; ++k) {
    LieElement x(sw.dim()), y(sw.dim());
    for (auto& c : x) c = d(rng);
    for (auto& c : y) c = d(rng);
    // agrees with the bracket of g restricted to q
    const auto& cb = sw.chevalley();
    LieElement gx(cb.dim()), gy(cb.dim());
    for (int q = 0; q < sw.dim(); ++q) gx[sw.g_index(q)] = x[q], gy[sw.g_index(q)] = y[q];
    const auto gz = cb.bracket(gx, gy);
    const auto z = sw.bracket(x, y);
    LieElement lifted(cb.dim());
    for (int q = 0; q < sw.dim(); ++q) lifted[sw.g_index(q)] = z[q];
    EXPECT_EQ(lifted, gz);
  }
}

TEST(GammaData, A2Borel) {
  const Seaweed sw(cb_of("A2"), SimpleSet(), SimpleSet::full(2));
  const auto& rs = sw.root_system();
  const auto gd = gamma_data(sw);
  EXPECT_EQ(roots_of(rs, gd.gamma), (std::set<RootVec>{{-1, -1}}));
  EXPECT_TRUE(gd.gamma0.empty());
  EXPECT_EQ(gd.gamma1, gd.gamma);
  EXPECT_EQ(gd.t_basis.size(), 1u);
  EXPECT_EQ(roots_of(rs, gd.m_roots), (std::set<RootVec>{{-1, -1}}));
  EXPECT_EQ(roots_of(rs, gd.n_roots), (std::set<RootVec>{{-1, 0}, {0, -1}}));
}

TEST(GammaData, A2Full) {
  const Seaweed sw(cb_of("A2"), SimpleSet::full(2), SimpleSet::full(2));
  const auto& rs = sw.root_system();
  const auto gd = gamma_data(sw);
  EXPECT_EQ(roots_multi(rs, gd.gamma), (std::multiset<RootVec>{{1, 1}, {-1, -1}}));
  EXPECT_EQ(roots_of(rs, gd.gamma0), (std::set<RootVec>{{1, 1}}));
  EXPECT_TRUE(gd.gamma1.empty());
}

TEST(GammaData, CartanOnly) {
  const Seaweed sw(cb_of("B3"), SimpleSet(), SimpleSet());
  const auto gd = gamma_data(sw);
  EXPECT_TRUE(gd.gamma.empty());
  EXPECT_EQ(gd.t_basis.size(), 3u);
  EXPECT_EQ(gd.hgamma_perp_basis.size(), 3u);
  EXPECT_TRUE(gd.m_roots.empty());
  EXPECT_TRUE(gd.n_roots.empty());
}

TEST(Hypothesis, Examples) {
  const auto a5 = cb_of("A5");
  EXPECT_TRUE(hypothesis_check(Seaweed(cb_of("A2"), SimpleSet(), SimpleSet::full(2))).qualifies);
  const auto bad = hypothesis_check(Seaweed(a5, set_of({3}), SimpleSet::full(5)));
  EXPECT_FALSE(bad.qualifies);
  EXPECT_FALSE(bad.gamma0_empty);
  const Seaweed good(a5, set_of({1}), SimpleSet::full(5));
  const auto gd = gamma_data(good);
  EXPECT_TRUE(hypothesis_check(gd).qualifies);
  EXPECT_EQ(gd.gamma_rank, 4u);
  EXPECT_EQ(roots_of(good.root_system(), gd.gamma),
            (std::set<RootVec>{{1, 0, 0, 0, 0}, {-1, -1, -1, -1, -1}, {0, -1, -1, -1, 0}, {0, 0, -1, 0, 0}}));
  const auto bad_gd = gamma_data(Seaweed(a5, set_of({3}), SimpleSet::full(5)));
  EXPECT_EQ(roots_of(good.root_system(), bad_gd.gamma0), (std::set<RootVec>{{0, 0, 1, 0, 0}}));
}

TEST(Hypothesis, FullAlgebraNeverQualifies) {
  for (const char* t : {"A1", "A4", "B3", "C3", "D4", "G2", "F4", "A1xB2"}) {
    const auto cb = cb_of(t);
    const auto all = cb->root_system().all_simple();
    EXPECT_FALSE(hypothesis_check(Seaweed(cb, all, all)).qualifies) << t;
  }
}

TEST(StructureIdentities, Examples) {
  EXPECT_EQ(check_structure_identities(Seaweed(cb_of("A2"), SimpleSet(), SimpleSet::full(2))).status, Status::Holds);
  EXPECT_EQ(check_structure_identities(Seaweed(cb_of("A3"), set_of({1, 2}), set_of({2, 3}))).status, Status::Holds);
  EXPECT_EQ(check_structure_identities(Seaweed(cb_of("C3"), SimpleSet(), SimpleSet())).status, Status::Holds);
}

namespace {

// Every property of q_{S,T} and its Γ data that holds for all pairs.
void check_pair(const std::shared_ptr<const ChevalleyBasis>& cb, SimpleSet s, SimpleSet t) {
  const RootSystem& rs = cb->root_system();
  const int l = rs.rank();
  const Seaweed sw(cb, s, t);
  const std::string where = rs.type_spec().to_string() + " S=" + describe(s) + " T=" + describe(t);
  ASSERT_EQ(sw.dim(), l + static_cast<int>(rs.positive_roots_in(s).size() + rs.positive_roots_in(t).size()))
      << where;

  const auto gd = gamma_data(sw);
  ASSERT_EQ(gd.gamma.size(), cascade(rs, s).size() + cascade(rs, t).size()) << where;
  std::set<int> gamma(gd.gamma.begin(), gd.gamma.end()), split;
  for (int a : gd.gamma0) {
    EXPECT_TRUE(rs.is_positive(a)) << where;
    split.insert(a);
    split.insert(rs.negative_of(a));
  }
  split.insert(gd.gamma1.begin(), gd.gamma1.end());
  EXPECT_EQ(split, gamma) << where;
  EXPECT_EQ(gd.t_basis.size(), static_cast<std::size_t>(l) - gd.gamma_rank) << where;
  EXPECT_EQ(gd.hgamma_perp_basis.size(), gd.t_basis.size()) << where;
  const std::set<int> m(gd.m_roots.begin(), gd.m_roots.end());
  for (int g : gd.gamma) EXPECT_TRUE(m.count(g)) << where;
  EXPECT_EQ(gd.m_roots.size() + gd.n_roots.size(), sw.delta().size());

  // t is annihilated by every γ: Σ_i c_i <γ, α_i^∨> = 0
  for (const auto& h : gd.t_basis)
    for (int g : gd.gamma) {
      Rational v = 0;
      for (int i = 0; i < l; ++i) v += h[i] * rs.pairing(rs.root(g), i);
      EXPECT_EQ(v, 0) << where;
    }

  const Verdict v = check_structure_identities(sw, gd);
  EXPECT_EQ(v.status, Status::Holds) << where << ": " << v.note;
}

}  // namespace

TEST(StructureIdentities, ExhaustiveUpToRankThree) {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2", "A1xB2"}) {
    const auto cb = cb_of(t);
    const auto full = cb->root_system().all_simple().bits();
    for (std::uint32_t s = 0; s <= full; ++s)
      for (std::uint32_t u = 0; u <= full; ++u) check_pair(cb, SimpleSet(s), SimpleSet(u));
  }
}

TEST(StructureIdentities, ExhaustiveRankFour) {
  for (const char* t : {"A4", "B4", "C4", "D4", "F4"}) {
    const auto cb = cb_of(t);
    for (std::uint32_t s = 0; s < 16; ++s)
      for (std::uint32_t u = 0; u < 16; ++u) check_pair(cb, SimpleSet(s), SimpleSet(u));
  }
}

TEST(GammaData, TransposeNegatesGamma) {
  for (const char* t : {"A3", "B3", "C3", "G2", "D4"}) {
    const auto cb = cb_of(t);
    const auto& rs = cb->root_system();
    const auto full = rs.all_simple().bits();
    for (std::uint32_t s = 0; s <= full; ++s)
      for (std::uint32_t u = 0; u <= full; ++u) {
        const auto a = gamma_data(Seaweed(cb, SimpleSet(s), SimpleSet(u)));
        const auto b = gamma_data(Seaweed(cb, SimpleSet(u), SimpleSet(s)));
        std::multiset<int> neg_a;
        for (int g : a.gamma) neg_a.insert(rs.negative_of(g));
        EXPECT_EQ(neg_a, std::multiset<int>(b.gamma.begin(), b.gamma.end()));
        EXPECT_EQ(std::set<int>(a.gamma0.begin(), a.gamma0.end()), std::set<int>(b.gamma0.begin(), b.gamma0.end()));
        EXPECT_EQ(hypothesis_check(a).qualifies, hypothesis_check(b).qualifies);
      }
  }
}

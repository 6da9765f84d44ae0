#include <gtest/gtest.h>

#include <map>
#include <set>
#include <string>

#include "equipart/obstruction.hpp"

using namespace equipart;

namespace {

// Orbits of signed words under the shift rule, then D8-orbits of those,
// all on strings. Returns the component count of each class keyed by its
// least word.
std::map<std::string, std::size_t> oracle_classes(int n) {
  std::vector<SignedWord> words;
  for (std::uint32_t m = 0; m < (1u << (2 * n)); ++m) {
    std::string s;
    for (int i = 0; i < 2 * n; ++i) s += (m >> (2 * n - 1 - i)) & 1 ? 'B' : 'A';
    const Word w(s);
    if (!w.balanced()) continue;
    for (int c = 0; c < 4; ++c) words.push_back({w, SignPair::from_code(c)});
  }
  std::map<SignedWord, SignedWord> cycle_rep;  // word -> least word of its shift orbit
  for (const auto& w : words) {
    if (cycle_rep.count(w)) continue;
    std::vector<SignedWord> orbit{w};
    for (SignedWord x = shift(w); !(x == w); x = shift(x)) orbit.push_back(x);
    SignedWord least = *std::min_element(orbit.begin(), orbit.end());
    for (const auto& x : orbit) cycle_rep[x] = least;
  }
  std::map<std::string, std::size_t> out;
  std::set<SignedWord> done;
  for (const auto& [w, rep] : cycle_rep) {
    if (done.count(rep)) continue;
    std::set<SignedWord> comps;
    for (auto g : all_elements()) comps.insert(cycle_rep.at(act(g, rep)));
    std::string least = "~";
    for (const auto& c : comps) {
      done.insert(c);
      for (const auto& [x, r] : cycle_rep)
        if (r == c) least = std::min(least, x.word.str());
    }
    out[least] = comps.size();
  }
  return out;
}

// Burnside count of D8-orbits on (sign pair, balanced {a,b}-word of length 2m).
std::int64_t burnside_delta0(int m) {
  std::int64_t fixed = 0;
  for (auto g : all_elements())
    for (std::uint32_t w = 0; w < (1u << (2 * m)); ++w) {
      if (std::popcount(w) != m) continue;
      const std::uint32_t gw = g.swap ? (~w & ((1u << (2 * m)) - 1)) : w;
      for (int c = 0; c < 4; ++c) {
        const SignPair s = SignPair::from_code(c);
        fixed += gw == w && act_on_signs(g, s) == s;
      }
    }
  return fixed / 8;
}

}  // namespace

TEST(Classes, MatchStringOracle) {
  for (int j : {1, 3, 5, 7}) {
    const auto want = oracle_classes((j + 1) / 2);
    const auto got = generating_classes(j);
    ASSERT_EQ(got.size(), want.size()) << j;
    for (const auto& g : got) {
      ASSERT_TRUE(want.count(g.canonical.word.str())) << g.canonical.str();
      EXPECT_EQ(g.components(), want.at(g.canonical.word.str())) << g.canonical.str();
    }
  }
}

TEST(Classes, J3) {
  const auto cls = generating_classes(3);
  ASSERT_EQ(cls.size(), 2u);
  EXPECT_EQ(cls[0].canonical.str(), "AABB++");
  EXPECT_EQ(cls[0].components(), 4u);
  EXPECT_EQ(cls[0].stabilizer.tokens(), (std::vector<std::string>{"e", "g"}));
  EXPECT_EQ(cls[0].monodromy, d8::gamma);
  EXPECT_EQ(cls[0].contribution, HomologyClass::Y());
  EXPECT_EQ(cls[1].canonical.str(), "ABAB++");
  EXPECT_EQ(cls[1].components(), 2u);
  EXPECT_EQ(cls[1].stabilizer.tokens(), (std::vector<std::string>{"e", "ab", "ga", "gb"}));
}

TEST(Classes, J5) {
  const auto cls = generating_classes(5);
  ASSERT_EQ(cls.size(), 3u);
  EXPECT_EQ(cls[0].canonical.str(), "AAABBB++");
  EXPECT_EQ(cls[1].canonical.str(), "AABABB++");
  EXPECT_EQ(cls[2].canonical.str(), "ABABAB++");
  EXPECT_EQ(cls[0].components(), 2u);
  EXPECT_EQ(cls[1].components(), 4u);
  EXPECT_EQ(cls[2].components(), 2u);
  // Both two-component classes are turned through 270 degrees.
  EXPECT_EQ(cls[0].epsilon, -1);
  EXPECT_EQ(cls[2].epsilon, -1);
  EXPECT_EQ(cls[0].eta, 1);
  EXPECT_EQ(cls[2].eta, -1);
}

TEST(Classes, StructuralInvariants) {
  for (int j : {1, 3, 5, 7, 9}) {
    const auto dec = enumerate_circles(j);
    const int n = (j + 1) / 2;
    std::size_t words = 0;
    for (const auto& g : generating_classes(dec)) {
      EXPECT_EQ(g.components() * static_cast<std::size_t>(g.stabilizer.order()), 8u);
      EXPECT_TRUE(g.stabilizer.contains(g.monodromy));
      words += g.components() * g.word_cycle_length;
      // Every component has the same length; contributions agree across
      // components (conjugate stabilizers).
      for (auto id : g.circles) {
        const auto& c = dec.circles()[id];
        EXPECT_EQ(c.length(), g.circle_length);
        std::vector<DihedralElement> stab;
        for (auto e : all_elements())
          if (dec.locate(act(e, c.states.front())).circle == id) stab.push_back(e);
        ASSERT_EQ(stab.size(), static_cast<std::size_t>(g.stabilizer.order()));
        for (auto e : stab) {
          const auto to = dec.locate(act(e, c.states.front())).offset;
          if (to == c.length() / stab.size() && dec.j() % 4 == 3) {
            EXPECT_EQ(abelianized_class(e), g.contribution);
          }
        }
      }
    }
    EXPECT_EQ(static_cast<std::int64_t>(words), 4 * binomial(2 * n, n));
  }
}

TEST(Obstruction, Delta1Twisted) {
  const auto r = obstruction(8, 5);
  EXPECT_EQ(r.kind, ObstructionCase::delta1_twisted);
  ASSERT_TRUE(r.counters);
  EXPECT_EQ(r.counters->alpha, 1);
  EXPECT_EQ(r.counters->beta, 1);
  EXPECT_EQ(r.counters->gamma, 1);
  EXPECT_EQ(r.counters->omega, 2);
  EXPECT_EQ(r.total, HomologyClass::X_ab());
  EXPECT_TRUE(r.admissible);
}

TEST(Obstruction, Delta1Trivial) {
  const auto r = obstruction(5, 3);
  EXPECT_EQ(r.kind, ObstructionCase::delta1_trivial);
  EXPECT_FALSE(r.total.is_zero());
  EXPECT_TRUE(r.admissible);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Obstruction, TotalIsOmegaTimesGenerator) {
  for (int j : {1, 5, 9, 13}) {
    const auto r = obstruction_delta1(j);
    ASSERT_TRUE(r.counters);
    EXPECT_EQ(r.total, r.counters->omega * HomologyClass::X_ca());
    EXPECT_EQ(r.admissible, r.counters->omega % 4 != 0);
  }
}

TEST(Obstruction, ConventionFlipsNegateOmega) {
  for (int j : {5, 9}) {
    const auto base = obstruction_delta1(j);
    for (auto eps : {EpsilonConvention::quarter, EpsilonConvention::three_quarter})
      for (auto rows : {RowOrder::paper, RowOrder::swapped}) {
        const auto r = obstruction_delta1(j, {eps, rows});
        const bool flipped = (eps != EpsilonConvention::quarter) != (rows != RowOrder::paper);
        EXPECT_EQ(r.total, flipped ? -base.total : base.total);
        EXPECT_EQ(r.admissible, base.admissible);
      }
  }
}

TEST(Obstruction, ClosedFormAgreesInZYBasis) {
  for (int m = 1; m <= 3; ++m) {
    const auto r = obstruction_delta1(4 * m - 1);
    EXPECT_EQ(zy_coordinates(r.total), closed_form_z2z2(m)) << m;
  }
  EXPECT_EQ(closed_form_z2z2(1), std::make_pair(1, 1));
  for (int p = 0; p <= 2; ++p) {
    const auto [o1, o2] = closed_form_z2z2(1 << p);
    EXPECT_TRUE(o1 || o2);
  }
}

TEST(Obstruction, Delta0) {
  EXPECT_EQ(obstruction_delta0_parity(1).orbit_count, 1);
  EXPECT_EQ(obstruction_delta0_parity(2).orbit_count, 3);
  EXPECT_EQ(obstruction_delta0_parity(3).orbit_count, 10);
  for (int m = 1; m <= 6; ++m) {
    const auto p = obstruction_delta0_parity(m);
    EXPECT_EQ(p.orbit_count, burnside_delta0(m));
    EXPECT_EQ(p.orbit_count, binomial(2 * m - 1, m - 1));
    EXPECT_EQ(p.odd, is_power_of_two(m));
  }
  const auto r = obstruction(3, 2);
  EXPECT_EQ(r.kind, ObstructionCase::delta0);
  EXPECT_TRUE(r.admissible);
  EXPECT_FALSE(obstruction(9, 6).admissible);
}

TEST(Obstruction, Guards) {
  EXPECT_THROW((void)obstruction(9, 5), invalid_argument);
  EXPECT_THROW((void)obstruction(7, 5), invalid_argument);
  EXPECT_THROW((void)obstruction_delta1(4), invalid_argument);
}

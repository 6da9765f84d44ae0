#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "equipart/number_theory.hpp"
#include "equipart/words.hpp"

using namespace equipart;

namespace {

// String-based oracle, independent of the packed-bit implementation.
std::string rot(const std::string& s, std::size_t r) { return s.substr(r) + s.substr(0, r); }

std::string least_rot(const std::string& s) {
  std::string best = s;
  for (std::size_t r = 1; r < s.size(); ++r) best = std::min(best, rot(s, r));
  return best;
}

bool primitive(const std::string& s) {
  for (std::size_t r = 1; r < s.size(); ++r)
    if (rot(s, r) == s) return false;
  return true;
}

std::string conj(std::string s) {
  for (auto& c : s) c = c == 'A' ? 'B' : 'A';
  return s;
}

std::vector<std::string> all_words(int len) {
  std::vector<std::string> out;
  for (int m = 0; m < (1 << len); ++m) {
    std::string s;
    for (int i = 0; i < len; ++i) s += (m >> (len - 1 - i)) & 1 ? 'B' : 'A';
    out.push_back(s);
  }
  return out;
}

bool balanced(const std::string& s) { return 2 * std::count(s.begin(), s.end(), 'A') == static_cast<long>(s.size()); }

std::int64_t oracle_R(int n) {
  std::set<std::string> cls;
  for (const auto& w : all_words(2 * n))
    if (balanced(w)) cls.insert(least_rot(w));
  return static_cast<std::int64_t>(cls.size());
}

std::int64_t oracle_P(int m) {
  std::set<std::string> cls;
  for (const auto& w : all_words(m))
    if (primitive(w)) cls.insert(least_rot(w));
  return static_cast<std::int64_t>(cls.size());
}

std::int64_t oracle_Q(int m) {
  std::set<std::string> cls;
  for (const auto& w : all_words(2 * m))
    if (balanced(w) && primitive(w)) cls.insert(least_rot(w));
  return static_cast<std::int64_t>(cls.size());
}

// Self-conjugate classes via the (b b*) factorization: a *-primitive word
// of length 2m is a rotation of b conj(b) with |b| = m.
std::int64_t oracle_A(int m) {
  std::set<std::string> cls;
  for (const auto& b : all_words(m)) {
    const std::string w = b + conj(b);
    if (primitive(w)) cls.insert(least_rot(w));
  }
  return static_cast<std::int64_t>(cls.size());
}

}  // namespace

TEST(NumberTheory, Examples) {
  EXPECT_EQ(mobius(1), 1);
  EXPECT_EQ(totient(1), 1);
  EXPECT_EQ(mobius(4), 0);
  EXPECT_EQ(mobius(6), 1);
  EXPECT_EQ(totient(6), 2);
  for (int n = 1; n <= 60; ++n) {
    int s = 0;
    for (auto d : divisors(n)) s += mobius(d);
    EXPECT_EQ(s, n == 1 ? 1 : 0) << n;
    std::int64_t t = 0;
    for (auto d : divisors(n)) t += totient(d);
    EXPECT_EQ(t, n) << n;
  }
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_THROW((void)binomial(200, 100), resource_error);
}

TEST(Words, ConjugateAndRotation) {
  EXPECT_EQ(conjugate(Word("A")).str(), "B");
  EXPECT_EQ(conjugate(Word("AABB")).str(), "BBAA");
  for (int len = 1; len <= 10; ++len)
    for (const auto& s : all_words(len)) {
      const Word w(s);
      EXPECT_EQ(conjugate(conjugate(w)), w);
      for (std::size_t r = 0; r < s.size(); ++r) {
        EXPECT_EQ(rotate(w, r).str(), rot(s, r));
        EXPECT_EQ(conjugate(rotate(w, r)), rotate(conjugate(w), r));
      }
    }
  EXPECT_THROW(Word("ABC"), invalid_argument);
}

TEST(Words, CircularClassMatchesOracle) {
  for (int len = 1; len <= 10; ++len)
    for (const auto& s : all_words(len)) {
      const auto c = circular_class(Word(s));
      EXPECT_EQ(c.canonical.str(), least_rot(s));
      EXPECT_EQ(c.period == s.size(), primitive(s));
      EXPECT_EQ(rotate(Word(s), c.period).str(), s);
    }
}

TEST(Words, SpecialWords) {
  EXPECT_TRUE(is_special(Word("AABB")));
  EXPECT_EQ(special_representation(Word("AABB"))->str(), "AA");
  EXPECT_TRUE(is_special(Word("ABAB")));
  EXPECT_EQ(special_representation(Word("ABAB"))->str(), "A");
  for (int n = 1; n <= 5; ++n)
    for (const auto& s : all_words(2 * n)) {
      if (!balanced(s)) continue;
      bool oracle = false;
      for (std::size_t r = 0; r < s.size(); ++r) oracle |= rot(s, r) == conj(s);
      EXPECT_EQ(is_special(Word(s)), oracle) << s;
      const auto rep = special_representation(Word(s));
      EXPECT_EQ(rep.has_value(), oracle) << s;
      if (rep) {
        std::string rebuilt;
        while (rebuilt.size() < s.size()) rebuilt += rep->str() + conj(rep->str());
        EXPECT_EQ(least_rot(rebuilt), least_rot(s)) << s;
      }
    }
}

TEST(Counting, SmallValues) {
  EXPECT_EQ(count_balanced_circular(1), 1);
  EXPECT_EQ(count_balanced_circular(2), 2);
  EXPECT_EQ(count_balanced_circular(3), 4);
  EXPECT_EQ(count_primitive_circular(1), 2);
  EXPECT_EQ(count_primitive_circular(2), 1);
  EXPECT_EQ(count_primitive_circular(8), 30);
  EXPECT_EQ(count_primitive_balanced(1), 1);
  EXPECT_EQ(count_primitive_balanced(2), 1);
  EXPECT_EQ(count_primitive_balanced(3), 3);
  EXPECT_EQ(count_star_primitive(1), 1);
  EXPECT_EQ(count_star_primitive(2), 1);
}

TEST(Counting, FormulasMatchStringOracle) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(count_balanced_circular(n), oracle_R(n)) << n;
    EXPECT_EQ(count_primitive_circular(n), oracle_P(n)) << n;
    EXPECT_EQ(count_primitive_balanced(n), oracle_Q(n)) << n;
    EXPECT_EQ(count_balanced_circular_brute(n), oracle_R(n)) << n;
  }
}

TEST(Counting, StarPrimitiveMatchesFactorizationOracle) {
  for (int m = 1; m <= 9; ++m) EXPECT_EQ(count_star_primitive(m), oracle_A(m)) << m;
}

TEST(Counting, DivisorIdentities) {
  for (int m = 1; m <= 12; ++m) {
    std::int64_t sp = 0, sq = 0;
    for (auto k : divisors(m)) {
      sp += k * count_primitive_circular(k);
      sq += 2 * k * count_primitive_balanced(k);
    }
    EXPECT_EQ(sp, std::int64_t{1} << m);
    EXPECT_EQ(sq, binomial(2 * m, m));
  }
}

TEST(Counting, StarPrimitiveParity) {
  for (int m = 1; m <= 8; ++m) EXPECT_EQ(count_star_primitive(m) % 2, count_primitive_circular(2 * m) % 2) << m;
}

TEST(Counting, ParityOfPrimitiveEvenLength) {
  const auto odd_sf = [](int k) { return k % 2 == 1 && is_square_free(k); };
  for (int k = 1; k <= 12; ++k) {
    const bool predicted = odd_sf(k) || (k % 2 == 0 && odd_sf(k / 2));
    EXPECT_EQ(count_primitive_circular(2 * k) % 2 == 1, predicted) << k;
  }
}

TEST(Counting, RangeGuards) {
  EXPECT_THROW((void)count_balanced_circular(0), invalid_argument);
  EXPECT_THROW((void)count_star_primitive(15), invalid_argument);
  EXPECT_THROW((void)count_balanced_circular_brute(13), invalid_argument);
}

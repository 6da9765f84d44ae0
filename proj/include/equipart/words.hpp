#pragma once

// Balanced circular {A,B}-words: conjugation, rotation classes, periods,
// self-conjugated ("special") words, and the counting functions R, P, Q, A.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "equipart/errors.hpp"
#include "equipart/number_theory.hpp"

namespace equipart {

/// A nonempty word over {A, B}. Ordered lexicographically with A < B.
class Word {
 public:
  Word() = default;
  explicit Word(std::string letters) : letters_(std::move(letters)) {
    detail::require(!letters_.empty(), "word must be nonempty");
    for (char c : letters_) detail::require(c == 'A' || c == 'B', "word letters must be A or B: " + letters_);
  }

  [[nodiscard]] const std::string& str() const { return letters_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] char operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] std::size_t count(char c) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), c));
  }
  [[nodiscard]] bool balanced() const { return 2 * count('A') == size(); }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

[[nodiscard]] inline char conjugate_letter(char c) {
  switch (c) {
    case 'A': return 'B';
    case 'B': return 'A';
    case 'a': return 'b';
    case 'b': return 'a';
    default: return c;
  }
}

[[nodiscard]] inline Word conjugate(const Word& w) {
  std::string out = w.str();
  for (char& c : out) c = conjugate_letter(c);
  return Word(std::move(out));
}

/// C^r: moves the first r letters to the end.
[[nodiscard]] inline Word rotate(const Word& w, std::size_t r) {
  std::string out = w.str();
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r % out.size()), out.end());
  return Word(std::move(out));
}

[[nodiscard]] inline std::size_t period(const Word& w) {
  for (std::size_t l = 1; l < w.size(); ++l)
    if (w.size() % l == 0 && rotate(w, l) == w) return l;
  return w.size();
}

[[nodiscard]] inline bool is_primitive(const Word& w) { return period(w) == w.size(); }

[[nodiscard]] inline Word canonical_rotation(const Word& w) {
  Word best = w;
  for (std::size_t r = 1; r < w.size(); ++r) best = std::min(best, rotate(w, r));
  return best;
}

/// A rotation class of words, named by its least rotation.
struct CircularClass {
  Word canonical;
  std::size_t period = 0;

  friend auto operator<=>(const CircularClass&, const CircularClass&) = default;
};

[[nodiscard]] inline CircularClass circular_class(const Word& w) { return {canonical_rotation(w), period(w)}; }

[[nodiscard]] inline bool is_special(const Word& w) {
  detail::require(w.balanced(), "is_special: word must be balanced");
  const Word star = conjugate(w);
  for (std::size_t r = 0; r < w.size(); ++r)
    if (rotate(w, r) == star) return true;
  return false;
}

/// For a special word returns the factor a with w = (a a*)(a a*)...(a a*);
/// a consists of the first period/2 letters.
[[nodiscard]] inline std::optional<Word> special_representation(const Word& w) {
  if (!is_special(w)) return std::nullopt;
  const std::size_t p = period(w);
  Word a(w.str().substr(0, p / 2));
  std::string rebuilt;
  const std::string block = a.str() + conjugate(a).str();
  while (rebuilt.size() < w.size()) rebuilt += block;
  detail::ensure(rebuilt == w.str(), "special representation does not rebuild the word");
  return a;
}

namespace detail {

// Bit-packed words: letter i of a length-L word sits at bit L-1-i and B = 1,
// so integer order equals lexicographic order.
[[nodiscard]] constexpr std::uint64_t low_mask(int len) {
  return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

[[nodiscard]] constexpr std::uint64_t rotl(std::uint64_t x, int len) {
  return ((x << 1) | (x >> (len - 1))) & low_mask(len);
}

[[nodiscard]] constexpr std::uint64_t least_rotation(std::uint64_t x, int len) {
  std::uint64_t best = x;
  for (int r = 1; r < len; ++r) {
    x = rotl(x, len);
    best = std::min(best, x);
  }
  return best;
}

[[nodiscard]] constexpr int packed_period(std::uint64_t x, int len) {
  std::uint64_t y = x;
  for (int l = 1; l < len; ++l) {
    y = rotl(y, len);
    if (y == x) return l;
  }
  return len;
}

[[nodiscard]] constexpr bool packed_special(std::uint64_t x, int len) {
  const std::uint64_t star = ~x & low_mask(len);
  std::uint64_t y = x;
  for (int r = 0; r < len; ++r) {
    if (y == star) return true;
    y = rotl(y, len);
  }
  return false;
}

/// Visits every len-bit mask with exactly `ones` set bits (Gosper's hack).
template <typename Fn>
void for_each_combination(int len, int ones, Fn&& fn) {
  if (ones == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::uint64_t x = low_mask(ones);
  const std::uint64_t limit = std::uint64_t{1} << len;
  while (x < limit) {
    fn(x);
    const std::uint64_t c = x & (~x + 1);
    const std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
}

}  // namespace detail

inline constexpr std::int64_t kMaxFormulaN = 30;
inline constexpr std::int64_t kMaxBruteN = 12;
inline constexpr std::int64_t kMaxStarPrimitiveM = 14;

/// R(n): balanced circular words of length 2n, by the necklace formula.
[[nodiscard]] inline std::int64_t count_balanced_circular(std::int64_t n) {
  detail::require(n >= 1 && n <= kMaxFormulaN, "R(n): n out of range [1, 30]");
  wide_int sum = 0;
  for (auto m : divisors(n)) sum += wide_int{binomial(2 * m, m)} * totient(n / m);
  detail::ensure(sum % (2 * n) == 0, "R(n) sum not divisible by 2n");
  return narrow_checked(sum / (2 * n), "R(n)");
}

/// P(m): primitive circular words of length m (Moebius inversion of 2^m).
[[nodiscard]] inline std::int64_t count_primitive_circular(std::int64_t m) {
  detail::require(m >= 1 && m <= 62, "P(m): m out of range [1, 62]");
  wide_int sum = 0;
  for (auto k : divisors(m)) sum += (wide_int{1} << k) * mobius(m / k);
  detail::ensure(sum % m == 0, "P(m) sum not divisible by m");
  return narrow_checked(sum / m, "P(m)");
}

/// Q(m): primitive balanced circular words of length 2m.
[[nodiscard]] inline std::int64_t count_primitive_balanced(std::int64_t m) {
  detail::require(m >= 1 && m <= kMaxFormulaN, "Q(m): m out of range [1, 30]");
  wide_int sum = 0;
  for (auto k : divisors(m)) sum += wide_int{binomial(2 * k, k)} * mobius(m / k);
  detail::ensure(sum % (2 * m) == 0, "Q(m) sum not divisible by 2m");
  return narrow_checked(sum / (2 * m), "Q(m)");
}

/// A(m): *-primitive circular words of length 2m, by exhaustive enumeration
/// of balanced words (no closed formula is known).
[[nodiscard]] inline std::int64_t count_star_primitive(std::int64_t m) {
  detail::require(m >= 1 && m <= kMaxStarPrimitiveM, "A(m): m out of range [1, 14]");
  const int len = static_cast<int>(2 * m);
  std::int64_t count = 0;
  detail::for_each_combination(len, static_cast<int>(m), [&](std::uint64_t x) {
    if (detail::least_rotation(x, len) != x) return;
    if (detail::packed_period(x, len) != len) return;
    if (detail::packed_special(x, len)) ++count;
  });
  return count;
}

// Brute-force counterparts of R, P, Q: enumerate words and count least
// rotations directly.

[[nodiscard]] inline std::int64_t count_balanced_circular_brute(std::int64_t n) {
  detail::require(n >= 1 && n <= kMaxBruteN, "brute R(n): n out of range [1, 12]");
  const int len = static_cast<int>(2 * n);
  std::int64_t count = 0;
  detail::for_each_combination(len, static_cast<int>(n), [&](std::uint64_t x) {
    if (detail::least_rotation(x, len) == x) ++count;
  });
  return count;
}

[[nodiscard]] inline std::int64_t count_primitive_circular_brute(std::int64_t m) {
  detail::require(m >= 1 && m <= 2 * kMaxBruteN, "brute P(m): m out of range [1, 24]");
  const int len = static_cast<int>(m);
  std::int64_t count = 0;
  for (std::uint64_t x = 0; x <= detail::low_mask(len); ++x)
    if (detail::least_rotation(x, len) == x && detail::packed_period(x, len) == len) ++count;
  return count;
}

[[nodiscard]] inline std::int64_t count_primitive_balanced_brute(std::int64_t m) {
  detail::require(m >= 1 && m <= kMaxBruteN, "brute Q(m): m out of range [1, 12]");
  const int len = static_cast<int>(2 * m);
  std::int64_t count = 0;
  detail::for_each_combination(len, static_cast<int>(m), [&](std::uint64_t x) {
    if (detail::least_rotation(x, len) == x && detail::packed_period(x, len) == len) ++count;
  });
  return count;
}

}  // namespace equipart

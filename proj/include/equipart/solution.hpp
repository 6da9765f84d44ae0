#pragma once

// Solution types on the moment curve for two hyperplanes with 2d - 3j = 1.
//
// A state records which hyperplane carries the free intersection point
// (the capital letter), the gap the free point sits in, the sign vector of
// the test point just before the first interval, and one partition letter
// per interval. Moving the free point one gap to the right is `step`; the
// orbits of `step` are the circles of the one-dimensional solution manifold.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "equipart/dihedral.hpp"
#include "equipart/errors.hpp"
#include "equipart/number_theory.hpp"
#include "equipart/words.hpp"

namespace equipart {

inline constexpr int kMaxCircleJ = 17;

/// Sign with + ordered before -.
enum class Sign : std::uint8_t { plus = 0, minus = 1 };

[[nodiscard]] constexpr Sign negate(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
[[nodiscard]] constexpr int to_int(Sign s) { return s == Sign::plus ? 1 : -1; }
[[nodiscard]] constexpr char to_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct SignPair {
  Sign first = Sign::plus;
  Sign second = Sign::plus;

  friend constexpr auto operator<=>(const SignPair&, const SignPair&) = default;
  [[nodiscard]] constexpr int code() const { return static_cast<int>(first) * 2 + static_cast<int>(second); }
  [[nodiscard]] static constexpr SignPair from_code(int c) {
    return {static_cast<Sign>((c >> 1) & 1), static_cast<Sign>(c & 1)};
  }
  [[nodiscard]] std::string str() const { return {to_char(first), to_char(second)}; }
};

[[nodiscard]] constexpr SignPair act_on_signs(DihedralElement g, SignPair s) {
  if (g.swap) std::swap(s.first, s.second);
  if (g.flip1) s.first = negate(s.first);
  if (g.flip2) s.second = negate(s.second);
  return s;
}

/// A balanced {A,B}-word together with a sign vector.
struct SignedWord {
  Word word;
  SignPair signs;

  friend auto operator<=>(const SignedWord&, const SignedWord&) = default;
  friend bool operator==(const SignedWord&, const SignedWord&) = default;

  /// Serialized as letters followed by the two sign characters, e.g. "BAAB+-".
  [[nodiscard]] std::string str() const { return word.str() + signs.str(); }
};

[[nodiscard]] inline SignedWord parse_signed_word(std::string_view text) {
  detail::require(text.size() >= 3, "signed word too short: " + std::string(text));
  const auto sign = [&](char c) {
    detail::require(c == '+' || c == '-', "bad sign character in " + std::string(text));
    return c == '+' ? Sign::plus : Sign::minus;
  };
  SignedWord out{Word(std::string(text.substr(0, text.size() - 2))),
                 {sign(text[text.size() - 2]), sign(text[text.size() - 1])}};
  detail::require(out.word.balanced(), "signed word must be balanced: " + std::string(text));
  return out;
}

/// Moves the first letter to the end: A w (e1,e2) -> w A (-e1,e2) and
/// B w (e1,e2) -> w B (e1,-e2).
[[nodiscard]] inline SignedWord shift(const SignedWord& w) {
  SignedWord out{rotate(w.word, 1), w.signs};
  if (w.word[0] == 'A')
    out.signs.first = negate(out.signs.first);
  else
    out.signs.second = negate(out.signs.second);
  return out;
}

[[nodiscard]] inline SignedWord act(DihedralElement g, const SignedWord& w) {
  return {g.swap ? conjugate(w.word) : w.word, act_on_signs(g, w.signs)};
}

/// One solution type for j intervals. Pattern letter i is stored at bit
/// j-1-i with b = 1, so integer order on `pattern` is lexicographic.
struct SolutionState {
  char capital = 'A';  // 'A': free point on H1, 'B': on H2
  int position = 0;    // gap index in [0, j]
  SignPair signs;
  int j = 1;
  std::uint32_t pattern = 0;

  [[nodiscard]] char letter(int i) const { return ((pattern >> (j - 1 - i)) & 1u) ? 'b' : 'a'; }

  void set_letter(int i, char c) {
    const std::uint32_t bit = std::uint32_t{1} << (j - 1 - i);
    if (c == 'b')
      pattern |= bit;
    else
      pattern &= ~bit;
  }

  [[nodiscard]] int count_a() const {
    int n = 0;
    for (int i = 0; i < j; ++i) n += letter(i) == 'a';
    return n;
  }

  [[nodiscard]] bool balanced() const { return count_a() + (capital == 'A' ? 1 : 0) == (j + 1) / 2; }

  [[nodiscard]] std::string pattern_string() const {
    std::string out;
    for (int i = 0; i < j; ++i) out += letter(i);
    return out;
  }

  /// Written as "B(++)aab" at position 0 and "(+-)bAab" otherwise.
  [[nodiscard]] std::string str() const {
    const std::string pat = pattern_string();
    const std::string sg = "(" + signs.str() + ")";
    if (position == 0) return capital + sg + pat;
    return sg + pat.substr(0, static_cast<std::size_t>(position)) + capital +
           pat.substr(static_cast<std::size_t>(position));
  }

  friend auto operator<=>(const SolutionState& l, const SolutionState& r) {
    return std::tie(l.j, l.capital, l.position, l.signs, l.pattern) <=>
           std::tie(r.j, r.capital, r.position, r.signs, r.pattern);
  }
  friend bool operator==(const SolutionState&, const SolutionState&) = default;
};

namespace detail {

inline void validate_state(const SolutionState& s) {
  require(s.j >= 1 && s.j % 2 == 1 && s.j <= 31, "state: j must be odd and at most 31");
  require(s.capital == 'A' || s.capital == 'B', "state: capital must be A or B");
  require(s.position >= 0 && s.position <= s.j, "state: position out of range");
  require((s.pattern >> s.j) == 0, "state: pattern has bits beyond j");
  require(s.balanced(), "state: letter balance violated in " + s.str());
}

}  // namespace detail

/// Parses the state notation, e.g. "B(++)aab" or "(+-)bAab".
[[nodiscard]] inline SolutionState parse_state(std::string_view text) {
  const std::string t(text);
  SolutionState s;
  std::size_t i = 0;
  bool leading_capital = false;
  if (!t.empty() && (t[0] == 'A' || t[0] == 'B')) {
    s.capital = t[0];
    leading_capital = true;
    i = 1;
  }
  detail::require(t.size() >= i + 4 && t[i] == '(' && t[i + 3] == ')', "state: expected (s1s2) in " + t);
  for (int k = 0; k < 2; ++k) {
    const char c = t[i + 1 + static_cast<std::size_t>(k)];
    detail::require(c == '+' || c == '-', "state: bad sign in " + t);
    (k == 0 ? s.signs.first : s.signs.second) = c == '+' ? Sign::plus : Sign::minus;
  }
  std::string pat;
  int position = leading_capital ? 0 : -1;
  for (std::size_t k = i + 4; k < t.size(); ++k) {
    const char c = t[k];
    if (c == 'a' || c == 'b') {
      pat += c;
    } else if (c == 'A' || c == 'B') {
      detail::require(position < 0, "state: more than one capital in " + t);
      s.capital = c;
      position = static_cast<int>(pat.size());
    } else {
      throw invalid_argument("state: unexpected character in " + t);
    }
  }
  detail::require(position >= 0, "state: missing capital letter in " + t);
  detail::require(leading_capital || position > 0, "state: a capital in gap 0 is written before the signs");
  s.j = static_cast<int>(pat.size());
  s.position = position;
  detail::require(s.j >= 1 && s.j <= 31, "state: pattern length out of range");
  for (int k = 0; k < s.j; ++k) s.set_letter(k, pat[static_cast<std::size_t>(k)]);
  detail::validate_state(s);
  return s;
}

namespace detail {

/// step without validation; used by enumeration hot loops.
[[nodiscard]] inline SolutionState step_unchecked(SolutionState s) {
  if (s.position == s.j) {
    s.position = 0;  // the free point passes through infinity
    return s;
  }
  const char l = s.letter(s.position);
  const char old_capital = s.capital;
  s.set_letter(s.position, old_capital == 'A' ? 'a' : 'b');
  s.capital = l == 'a' ? 'A' : 'B';
  if (s.position == 0) {
    if (old_capital == 'A')
      s.signs.first = negate(s.signs.first);
    else
      s.signs.second = negate(s.signs.second);
  }
  ++s.position;
  return s;
}

[[nodiscard]] inline SolutionState act_unchecked(DihedralElement g, SolutionState s) {
  if (g.swap) {
    s.capital = s.capital == 'A' ? 'B' : 'A';
    s.pattern = ~s.pattern & static_cast<std::uint32_t>(low_mask(s.j));
  }
  s.signs = act_on_signs(g, s.signs);
  return s;
}

}  // namespace detail

/// Moves the free point across the next interval, or through infinity
/// from the last gap back to gap 0. Sign flips happen only when the free
/// point crosses the first interval.
[[nodiscard]] inline SolutionState step(const SolutionState& s) {
  detail::validate_state(s);
  return detail::step_unchecked(s);
}

/// alpha negates e1, beta negates e2, gamma conjugates all letters and
/// swaps the signs; the position is unchanged.
[[nodiscard]] inline SolutionState act(DihedralElement g, const SolutionState& s) {
  detail::validate_state(s);
  return detail::act_unchecked(g, s);
}

/// Uppercases the pattern, inserts the capital at its gap and keeps the
/// recorded signs. Sampled at position j this reproduces the compressed
/// cycles; at position 0 the recorded signs sit after the free point, so
/// the result differs from the position-j word by the free point's flip.
[[nodiscard]] inline SignedWord compress(const SolutionState& s) {
  std::string letters;
  letters.reserve(static_cast<std::size_t>(s.j) + 1);
  for (int i = 0; i <= s.j; ++i) {
    if (i == s.position) letters += s.capital;
    if (i < s.j) letters += static_cast<char>(s.letter(i) - 'a' + 'A');
  }
  return {Word(std::move(letters)), s.signs};
}

/// The state at gap 0 whose capital is the first letter of `w` and whose
/// pattern is the rest of `w`, with the recorded signs of `w`.
[[nodiscard]] inline SolutionState state_at_gap0(const SignedWord& w) {
  SolutionState s;
  s.j = static_cast<int>(w.word.size()) - 1;
  detail::require(s.j >= 1 && s.j % 2 == 1, "word length must be even and at least 2");
  s.capital = w.word[0];
  s.position = 0;
  s.signs = w.signs;
  for (int i = 0; i < s.j; ++i) s.set_letter(i, w.word[static_cast<std::size_t>(i) + 1] == 'A' ? 'a' : 'b');
  detail::validate_state(s);
  return s;
}

/// The state at gap j whose pattern is all but the last letter of `w`.
[[nodiscard]] inline SolutionState state_at_last_gap(const SignedWord& w) {
  SolutionState s;
  s.j = static_cast<int>(w.word.size()) - 1;
  detail::require(s.j >= 1 && s.j % 2 == 1, "word length must be even and at least 2");
  s.capital = w.word[static_cast<std::size_t>(s.j)];
  s.position = s.j;
  s.signs = w.signs;
  for (int i = 0; i < s.j; ++i) s.set_letter(i, w.word[static_cast<std::size_t>(i)] == 'A' ? 'a' : 'b');
  detail::validate_state(s);
  return s;
}

/// A cycle of states under `step`, starting at its least state.
struct Circle {
  std::vector<SolutionState> states;

  [[nodiscard]] std::size_t length() const { return states.size(); }

  /// Signed words sampled at gap j, in step order, rotated so that the
  /// least signed word comes first.
  [[nodiscard]] std::vector<SignedWord> compressed() const {
    std::vector<SignedWord> out;
    for (const auto& s : states)
      if (s.position == s.j) out.push_back(compress(s));
    if (!out.empty()) {
      const auto first = std::min_element(out.begin(), out.end());
      std::rotate(out.begin(), first, out.end());
    }
    return out;
  }
};

/// Dense indexing of the valid states for a fixed j.
class StateSpace {
 public:
  explicit StateSpace(int j) : j_(j) {
    detail::require(j >= 1 && j % 2 == 1, "j must be odd and positive");
    detail::require(j <= kMaxCircleJ, "j exceeds the enumeration bound " + std::to_string(kMaxCircleJ));
    const int n = (j + 1) / 2;
    const std::size_t patterns = std::size_t{1} << j;
    for (int c = 0; c < 2; ++c) rank_[c].assign(patterns, -1);
    for (std::uint32_t p = 0; p < patterns; ++p) {
      const int a_count = j - std::popcount(p);
      if (a_count == n - 1) rank_[0][p] = static_cast<std::int32_t>(by_rank_[0].size()), by_rank_[0].push_back(p);
      if (a_count == n) rank_[1][p] = static_cast<std::int32_t>(by_rank_[1].size()), by_rank_[1].push_back(p);
    }
    per_pattern_ = static_cast<std::size_t>(j + 1) * 4;
    offset_b_ = by_rank_[0].size() * per_pattern_;
    size_ = offset_b_ + by_rank_[1].size() * per_pattern_;
  }

  [[nodiscard]] int j() const { return j_; }
  [[nodiscard]] std::size_t size() const { return size_; }

  [[nodiscard]] std::size_t index(const SolutionState& s) const {
    const int c = s.capital == 'A' ? 0 : 1;
    const auto r = rank_[c][s.pattern];
    detail::ensure(r >= 0 && s.j == j_, "state is not in this state space");
    return (c ? offset_b_ : 0) + static_cast<std::size_t>(r) * per_pattern_ +
           static_cast<std::size_t>(s.position) * 4 + static_cast<std::size_t>(s.signs.code());
  }

  [[nodiscard]] SolutionState state(std::size_t idx) const {
    SolutionState s;
    s.j = j_;
    int c = 0;
    if (idx >= offset_b_) {
      c = 1;
      idx -= offset_b_;
    }
    s.capital = c ? 'B' : 'A';
    s.pattern = by_rank_[c][idx / per_pattern_];
    idx %= per_pattern_;
    s.position = static_cast<int>(idx / 4);
    s.signs = SignPair::from_code(static_cast<int>(idx % 4));
    return s;
  }

 private:
  int j_;
  std::vector<std::int32_t> rank_[2];
  std::vector<std::uint32_t> by_rank_[2];
  std::size_t per_pattern_ = 0;
  std::size_t offset_b_ = 0;
  std::size_t size_ = 0;
};

/// All circles for j, sorted by least state, with a state -> circle lookup.
class CircleDecomposition {
 public:
  struct Location {
    std::size_t circle;
    std::size_t offset;
  };

  explicit CircleDecomposition(int j) : space_(j) {
    const std::size_t total = space_.size();
    location_.assign(total, Location{kUnset, 0});
    // States are indexed so that index order is not state order; collect
    // each cycle, then rotate it to start at its least state.
    for (std::size_t idx = 0; idx < total; ++idx) {
      if (location_[idx].circle != kUnset) continue;
      Circle c;
      const SolutionState start = space_.state(idx);
      SolutionState s = start;
      do {
        c.states.push_back(s);
        s = detail::step_unchecked(s);
      } while (!(s == start));
      const auto least = std::min_element(c.states.begin(), c.states.end());
      std::rotate(c.states.begin(), least, c.states.end());
      const std::size_t id = circles_.size();
      for (std::size_t k = 0; k < c.states.size(); ++k) {
        auto& loc = location_[space_.index(c.states[k])];
        detail::ensure(loc.circle == kUnset, "step is not a bijection");
        loc = {id, k};
      }
      circles_.push_back(std::move(c));
    }
    // Canonical order, then renumber the lookup.
    std::vector<std::size_t> order(circles_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return circles_[a].states.front() < circles_[b].states.front(); });
    std::vector<Circle> sorted;
    sorted.reserve(circles_.size());
    for (auto i : order) sorted.push_back(std::move(circles_[i]));
    circles_ = std::move(sorted);
    for (std::size_t id = 0; id < circles_.size(); ++id)
      for (std::size_t k = 0; k < circles_[id].states.size(); ++k)
        location_[space_.index(circles_[id].states[k])] = {id, k};
  }

  [[nodiscard]] int j() const { return space_.j(); }
  [[nodiscard]] std::size_t state_count() const { return space_.size(); }
  [[nodiscard]] const std::vector<Circle>& circles() const { return circles_; }
  [[nodiscard]] const StateSpace& space() const { return space_; }

  [[nodiscard]] Location locate(const SolutionState& s) const { return location_[space_.index(s)]; }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  StateSpace space_;
  std::vector<Circle> circles_;
  std::vector<Location> location_;
};

/// Expected number of states: (j+1) gaps x 4 sign vectors x C(j+1, n).
[[nodiscard]] inline std::int64_t expected_state_count(int j) {
  return static_cast<std::int64_t>(j + 1) * 4 * binomial(j + 1, (j + 1) / 2);
}

[[nodiscard]] inline CircleDecomposition enumerate_circles(int j) { return CircleDecomposition(j); }

}  // namespace equipart

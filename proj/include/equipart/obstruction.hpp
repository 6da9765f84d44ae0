#pragma once

// Generating classes (D8-orbits of circles), their stabilizers, monodromies
// and orientation signs, and the resulting obstruction classes for
// two-hyperplane equipartitions with 2d - 3j in {0, 1}.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "equipart/dihedral.hpp"
#include "equipart/errors.hpp"
#include "equipart/jacobian.hpp"
#include "equipart/number_theory.hpp"
#include "equipart/solution.hpp"
#include "equipart/words.hpp"

namespace equipart {

enum class EpsilonConvention {
  quarter,        // +1 iff gamma.alpha advances the canonical state by L/4
  three_quarter,  // +1 iff it advances by 3L/4
};

struct Conventions {
  EpsilonConvention epsilon = EpsilonConvention::quarter;
  RowOrder rows = RowOrder::paper;
};

struct GeneratingClass {
  SignedWord canonical;                // least word of the class, signs (+,+)
  std::vector<std::size_t> circles;    // component ids, ascending
  std::size_t circle_length = 0;       // states per component
  std::size_t word_cycle_length = 0;   // signed words per component
  Subgroup stabilizer;                 // of the component through canonical at gap j
  DihedralElement monodromy;
  std::optional<int> epsilon;
  std::optional<int> eta;
  HomologyClass contribution;

  [[nodiscard]] std::size_t components() const { return circles.size(); }
};

namespace detail {

struct ClassOrbit {
  std::vector<std::size_t> circles;
  Word least_word;
};

inline std::vector<ClassOrbit> circle_orbits(const CircleDecomposition& dec) {
  const auto& circles = dec.circles();
  std::vector<bool> done(circles.size(), false);
  std::vector<ClassOrbit> out;
  for (std::size_t id = 0; id < circles.size(); ++id) {
    if (done[id]) continue;
    std::set<std::size_t> orbit;
    for (auto g : all_elements()) orbit.insert(dec.locate(act_unchecked(g, circles[id].states.front())).circle);
    ClassOrbit o{{orbit.begin(), orbit.end()}, Word{}};
    bool first = true;
    for (auto c : o.circles) {
      done[c] = true;
      for (const auto& s : circles[c].states) {
        if (s.position != s.j) continue;  // every word of the circle appears at gap j
        Word w = compress(s).word;
        if (first || w < o.least_word) o.least_word = std::move(w), first = false;
      }
    }
    out.push_back(std::move(o));
  }
  return out;
}

/// Number of steps from `from` to `to` along their common circle.
inline std::size_t advance(const CircleDecomposition& dec, const SolutionState& from, const SolutionState& to) {
  const auto a = dec.locate(from);
  const auto b = dec.locate(to);
  ensure(a.circle == b.circle, "states lie on different circles");
  const std::size_t len = dec.circles()[a.circle].length();
  return (b.offset + len - a.offset) % len;
}

}  // namespace detail

/// gamma o alpha (alpha acts first): the quarter turn generating the
/// order-4 stabilizer {e, ga, ab, gb}.
inline constexpr DihedralElement kQuarterTurn = compose(d8::gamma, d8::alpha);

/// Orientation sign of a two-component class: locates the gap-0 state
/// realizing the canonical word with signs (+,+) and measures how far
/// gamma o alpha moves it along its circle.
[[nodiscard]] inline int epsilon_sign(const CircleDecomposition& dec, const GeneratingClass& g,
                                      EpsilonConvention conv = EpsilonConvention::quarter) {
  detail::require(g.components() == 2, "epsilon is defined for two-component classes only");
  const SolutionState s0 = state_at_gap0(g.canonical);
  const auto loc = dec.locate(s0);
  detail::ensure(std::find(g.circles.begin(), g.circles.end(), loc.circle) != g.circles.end(),
                 "canonical (+,+) state is not in its class");
  const std::size_t len = dec.circles()[loc.circle].length();
  const std::size_t t = detail::advance(dec, s0, detail::act_unchecked(kQuarterTurn, s0));
  detail::ensure(len % 4 == 0 && (t == len / 4 || t == 3 * len / 4),
                 "gamma.alpha does not act as a quarter rotation on " + g.canonical.str());
  const bool quarter = t == len / 4;
  return (quarter == (conv == EpsilonConvention::quarter)) ? 1 : -1;
}

/// D8-orbits of the circles for j, sorted by canonical word.
[[nodiscard]] inline std::vector<GeneratingClass> generating_classes(const CircleDecomposition& dec,
                                                                      Conventions conv = {}) {
  const int j = dec.j();
  const int n = (j + 1) / 2;
  const Coefficients coeff = n % 2 ? Coefficients::twisted : Coefficients::trivial;
  std::vector<GeneratingClass> out;
  for (auto& orbit : detail::circle_orbits(dec)) {
    GeneratingClass g;
    g.canonical = SignedWord{orbit.least_word, SignPair{}};
    g.circles = orbit.circles;
    g.circle_length = dec.circles()[orbit.circles.front()].length();
    g.word_cycle_length = g.circle_length / static_cast<std::size_t>(j + 1);

    const SolutionState anchor = state_at_last_gap(g.canonical);
    const auto home = dec.locate(anchor).circle;
    std::vector<DihedralElement> stab;
    for (auto e : all_elements())
      if (dec.locate(detail::act_unchecked(e, anchor)).circle == home) stab.push_back(e);
    g.stabilizer = Subgroup::from_elements(stab);
    detail::ensure(g.components() * static_cast<std::size_t>(g.stabilizer.order()) == 8,
                   "orbit-stabilizer count fails for " + g.canonical.str());

    const std::size_t want = g.circle_length / static_cast<std::size_t>(g.stabilizer.order());
    int found = 0;
    for (auto e : stab) {
      const std::size_t t = detail::advance(dec, anchor, detail::act_unchecked(e, anchor));
      if (e.is_identity() ? stab.size() == 1 : t == want) {
        g.monodromy = e;
        ++found;
      }
    }
    detail::ensure(found == 1, "no unique monodromy for " + g.canonical.str());

    if (g.components() == 2) {
      g.epsilon = epsilon_sign(dec, g, conv.epsilon);
      g.eta = jacobian_sign(g.canonical, conv.rows);
    }

    if (coeff == Coefficients::twisted) {
      switch (g.components()) {
        case 8: g.contribution = HomologyClass::twisted(0); break;
        case 4: g.contribution = HomologyClass::X_ab(); break;
        case 2: g.contribution = (*g.epsilon == *g.eta) ? HomologyClass::X_ca() : -HomologyClass::X_ca(); break;
        default: throw internal_error("unexpected component count");
      }
    } else {
      g.contribution = abelianized_class(g.monodromy);
    }
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end(),
            [](const GeneratingClass& a, const GeneratingClass& b) { return a.canonical < b.canonical; });
  return out;
}

[[nodiscard]] inline std::vector<GeneratingClass> generating_classes(int j, Conventions conv = {}) {
  return generating_classes(enumerate_circles(j), conv);
}

enum class ObstructionCase { delta0, delta1_trivial, delta1_twisted };

[[nodiscard]] inline std::string to_string(ObstructionCase c) {
  switch (c) {
    case ObstructionCase::delta0: return "delta0";
    case ObstructionCase::delta1_trivial: return "delta1-trivial";
    default: return "delta1-twisted";
  }
}

/// Counters for the twisted case: alpha counts two-component classes with
/// epsilon == eta, gamma those with epsilon != eta, beta the four-component
/// classes. omega = alpha + 2 beta - gamma.
struct TwistedCounters {
  int alpha = 0;
  int beta = 0;
  int gamma = 0;
  int omega = 0;
};

struct OrbitParity {
  std::int64_t orbit_count = 0;
  std::int64_t closed_form = 0;  // C(2m-1, m-1)
  bool odd = false;
};

struct ObstructionResult {
  ObstructionCase kind = ObstructionCase::delta1_trivial;
  int d = 0;
  int j = 0;
  std::vector<GeneratingClass> classes;
  HomologyClass total;
  std::optional<TwistedCounters> counters;
  std::optional<OrbitParity> parity;
  std::size_t state_count = 0;
  std::size_t circle_count = 0;
  bool admissible = false;
  std::vector<std::string> notes;
};

[[nodiscard]] inline TwistedCounters twisted_counters(const std::vector<GeneratingClass>& classes) {
  TwistedCounters c;
  for (const auto& g : classes) {
    if (g.components() == 4) ++c.beta;
    if (g.components() == 2) (*g.epsilon == *g.eta ? c.alpha : c.gamma) += 1;
  }
  c.omega = c.alpha + 2 * c.beta - c.gamma;
  return c;
}

/// Obstruction for (d, j, 2) with 2d - 3j = 1. For n = (j+1)/2 odd the
/// class lives in Z/4 (twisted coefficients), for n even in Z/2 + Z/2.
[[nodiscard]] inline ObstructionResult obstruction_delta1(int j, Conventions conv = {}) {
  detail::require(j >= 1 && j % 2 == 1, "delta1 obstruction needs odd j");
  const CircleDecomposition dec = enumerate_circles(j);
  ObstructionResult r;
  r.j = j;
  r.d = (3 * j + 1) / 2;
  const int n = (j + 1) / 2;
  r.kind = n % 2 ? ObstructionCase::delta1_twisted : ObstructionCase::delta1_trivial;
  const Coefficients coeff = n % 2 ? Coefficients::twisted : Coefficients::trivial;
  r.state_count = dec.state_count();
  r.circle_count = dec.circles().size();
  r.classes = generating_classes(dec, conv);
  r.total = HomologyClass::zero(coeff);
  for (const auto& g : r.classes) r.total += g.contribution;
  if (coeff == Coefficients::twisted) {
    r.counters = twisted_counters(r.classes);
    detail::ensure(r.total == r.counters->omega * HomologyClass::X_ca(), "total differs from omega * X_ca");
  }
  r.admissible = !r.total.is_zero();
  if (j == 3)
    r.notes.push_back(
        "class ABAB: computed component stabilizer is {e,ab,ga,gb} with 2 components, not the order-2 "
        "subgroup {e,ab}. Both readings give a nonzero total.");
  return r;
}

/// D8-orbits on the types (sign vector, balanced {a,b}-word of length 2m).
[[nodiscard]] inline OrbitParity obstruction_delta0_parity(int m) {
  detail::require(m >= 1 && m <= 12, "delta0: m out of range [1, 12]");
  const int len = 2 * m;
  const std::uint64_t mask = detail::low_mask(len);
  OrbitParity p;
  detail::for_each_combination(len, m, [&](std::uint64_t word) {
    for (int code = 0; code < 4; ++code) {
      const SignPair s = SignPair::from_code(code);
      // Count a type when it is the least element of its orbit.
      bool least = true;
      for (auto g : all_elements()) {
        const std::uint64_t w2 = g.swap ? (~word & mask) : word;
        const int c2 = act_on_signs(g, s).code();
        if (w2 < word || (w2 == word && c2 < code)) {
          least = false;
          break;
        }
      }
      p.orbit_count += least;
    }
  });
  p.closed_form = binomial(2 * m - 1, m - 1);
  p.odd = p.orbit_count % 2 == 1;
  return p;
}

[[nodiscard]] inline ObstructionResult obstruction_delta0(int m) {
  ObstructionResult r;
  r.kind = ObstructionCase::delta0;
  r.j = 2 * m;
  r.d = 3 * m;
  r.parity = obstruction_delta0_parity(m);
  r.total = HomologyClass::trivial(r.parity->odd ? 1 : 0, 0);
  r.admissible = r.parity->odd;
  r.notes.push_back(
      "orbit parity is odd exactly when C(2m-1, m-1) is odd, i.e. m is a power of two, not "
      "m = 2^q - 1. Admissibility is claimed only from computed odd parity.");
  return r;
}

/// Dispatches on 2d - 3j: 0 -> orbit parity, 1 -> circle obstruction.
[[nodiscard]] inline ObstructionResult obstruction(int d, int j, Conventions conv = {}) {
  detail::require(d >= 1 && j >= 1, "obstruction: d and j must be positive");
  const int delta = 2 * d - 3 * j;
  if (delta == 0) {
    detail::require(j % 2 == 0, "obstruction: 2d = 3j needs even j");
    return obstruction_delta0(j / 2);
  }
  detail::require(delta == 1, "obstruction: only 2d - 3j in {0, 1} is supported (got " + std::to_string(delta) + ")");
  return obstruction_delta1(j, conv);
}

/// Parities (O1, O2) of the sums of A(k) over odd / even divisors k of 2m.
[[nodiscard]] inline std::pair<int, int> closed_form_z2z2(int m) {
  detail::require(m >= 1 && 2 * m <= kMaxStarPrimitiveM, "closed form: 2m must be at most 14");
  std::int64_t odd = 0, even = 0;
  for (auto k : divisors(2 * m)) (k % 2 ? odd : even) += count_star_primitive(k);
  return {static_cast<int>(odd % 2), static_cast<int>(even % 2)};
}

/// Coordinates of a trivial-coefficient class in the basis {Z, Y}:
/// c = z Z + y Y. Odd-length *-primitive factors contribute Z and
/// even-length ones Y, so these are the coordinates matching (O1, O2).
[[nodiscard]] inline std::pair<int, int> zy_coordinates(const HomologyClass& c) {
  detail::require(c.coefficients() == Coefficients::trivial, "zy_coordinates needs trivial coefficients");
  return {c.x(), c.x() ^ c.y()};
}

}  // namespace equipart

#pragma once

// The nine end-to-end checks run by `equipart verify` and by the acceptance
// test binary. Each check recomputes everything from scratch.

#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "equipart/bounds.hpp"
#include "equipart/dickson.hpp"
#include "equipart/jacobian.hpp"
#include "equipart/obstruction.hpp"
#include "equipart/serialize.hpp"
#include "equipart/solution.hpp"
#include "equipart/words.hpp"

namespace equipart::acceptance {

struct Outcome {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

// Collects failed sub-checks; the criterion passes when none failed.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void info(const std::string& s) { info_.push_back(s); }

  [[nodiscard]] Outcome finish(int id, std::string name) const {
    Outcome o{id, std::move(name), failures_.empty(), ""};
    const auto& parts = failures_.empty() ? info_ : failures_;
    for (std::size_t i = 0; i < parts.size(); ++i) o.detail += (i ? "; " : "") + parts[i];
    return o;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> info_;
};

inline const std::array<Conventions, 4>& all_conventions() {
  static const std::array<Conventions, 4> c{{
      {EpsilonConvention::quarter, RowOrder::paper},
      {EpsilonConvention::three_quarter, RowOrder::paper},
      {EpsilonConvention::quarter, RowOrder::swapped},
      {EpsilonConvention::three_quarter, RowOrder::swapped},
  }};
  return c;
}

inline bool same_up_to_rotation(std::vector<std::string> a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a == b) return true;
    std::rotate(a.begin(), a.begin() + 1, a.end());
  }
  return false;
}

inline int mod4(int x) { return ((x % 4) + 4) % 4; }
inline int abs_mod4(int x) { return std::min(mod4(x), mod4(-x)); }

inline bool odd_square_free(std::int64_t k) { return k % 2 == 1 && is_square_free(k); }

}  // namespace detail

[[nodiscard]] inline Outcome pipeline_852() {
  detail::Checker c;
  const ObstructionResult r = obstruction(8, 5);
  c.check(r.classes.size() == 3, "expected 3 generating classes");
  if (r.classes.size() == 3) {
    const std::vector<std::string> want{"AAABBB", "AABABB", "ABABAB"};
    const std::vector<std::size_t> comps{2, 4, 2};
    for (std::size_t i = 0; i < 3; ++i) {
      c.check(r.classes[i].canonical.word.str() == want[i], "canonical word " + want[i]);
      c.check(r.classes[i].components() == comps[i], "component count of " + want[i]);
    }
    const auto& a = r.classes[0];
    const auto& b = r.classes[2];
    c.check(a.eta && b.eta && *a.eta == -*b.eta, "eta(AAABBB) and eta(ABABAB) must differ");
    // (-1)^(7+19) and (-1)^(7+30)
    c.check(a.eta == 1 && b.eta == -1, "eta values must be +1 and -1");
    c.info("eta(AAABBB)=" + std::to_string(a.eta.value_or(0)) + " eta(ABABAB)=" + std::to_string(b.eta.value_or(0)));
  }
  c.check(r.counters && detail::mod4(r.counters->omega) == 2, "Omega(1) must be 2 mod 4");
  c.check(r.total == HomologyClass::X_ab() && r.total == 2 * HomologyClass::X_ca(), "total must be Xab = 2 Xca");
  c.check(r.admissible, "verdict must be admissible");
  const BoundsReport b = bounds_report(5, 2);
  c.check(b.lower == 8 && b.exact() && *b.best == 8, "bounds report must give Delta(5,2) = 8");
  c.check(b.upper(Provenance::dickson_minimal_d) == 9, "Dickson candidate for (5,2) must be 9");
  if (r.counters)
    c.info("Omega=" + std::to_string(r.counters->omega) + " total=" + to_token(r.total) + " Delta(5,2)=" +
           std::to_string(b.best.value_or(0)));
  return c.finish(1, "(8,5,2) pipeline");
}

[[nodiscard]] inline Outcome pipeline_53() {
  detail::Checker c;
  const ObstructionResult r = obstruction(5, 3);
  c.check(r.classes.size() == 2, "expected 2 generating classes");
  const GeneratingClass* four = nullptr;
  for (const auto& g : r.classes)
    if (g.components() == 4) four = &g;
  c.check(four != nullptr, "expected a 4-component class");
  if (four) {
    c.check(four->stabilizer == subgroup_generated({d8::gamma}), "stabilizer must be {e,g}");
    c.check(four->contribution == HomologyClass::Y(), "4-component class must contribute Y");
    const CircleDecomposition dec = enumerate_circles(3);
    const auto loc = dec.locate(state_at_last_gap(four->canonical));
    std::vector<std::string> cycle;
    for (const auto& w : dec.circles()[loc.circle].compressed()) cycle.push_back(w.str());
    c.check(detail::same_up_to_rotation(cycle, {"BAAB+-", "BBAA++", "ABBA-+", "AABB++"}),
            "compressed cycle must be BAAB+-, BBAA++, ABBA-+, AABB++ up to rotation");
    c.info("class " + four->canonical.word.str() + " stabilizer {" + [&] {
      std::string s;
      for (const auto& t : four->stabilizer.tokens()) s += (s.empty() ? "" : ",") + t;
      return s;
    }() + "} contributes " + to_token(four->contribution));
  }
  c.check(!r.total.is_zero() && r.admissible, "total must be nonzero and verdict admissible");
  c.info("total=" + to_token(r.total));
  return c.finish(2, "(5,3) pipeline");
}

[[nodiscard]] inline Outcome state_machine() {
  detail::Checker c;
  const std::vector<std::string> tau{
      "B(++)aab", "(+-)bAab", "(+-)baAb", "(+-)baaB", "B(+-)baa", "(++)bBaa", "(++)bbAa", "(++)bbaA",
      "A(++)bba", "(-+)aBba", "(-+)abBa", "(-+)abbA", "A(-+)abb", "(++)aAbb", "(++)aaBb", "(++)aabB",
  };
  SolutionState s = parse_state(tau[0]);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    c.check(s.str() == tau[i], "tau" + std::to_string(i + 1) + " expected " + tau[i] + " got " + s.str());
    s = step(s);
  }
  c.check(s.str() == tau[0], "tau17 must equal tau1");
  c.info("16 steps reproduce tau1..tau16 and return to " + s.str());
  return c.finish(3, "state machine ground truth");
}

[[nodiscard]] inline Outcome counting_suite() {
  detail::Checker c;
  for (int n = 1; n <= 8; ++n) {
    c.check(count_balanced_circular(n) == count_balanced_circular_brute(n), "R(" + std::to_string(n) + ")");
    c.check(count_primitive_circular(n) == count_primitive_circular_brute(n), "P(" + std::to_string(n) + ")");
    c.check(count_primitive_balanced(n) == count_primitive_balanced_brute(n), "Q(" + std::to_string(n) + ")");
  }
  for (int m = 1; m <= 12; ++m) {
    std::int64_t sp = 0, sq = 0;
    for (auto k : divisors(m)) {
      sp += k * count_primitive_circular(k);
      sq += 2 * k * count_primitive_balanced(k);
    }
    c.check(sp == (std::int64_t{1} << m), "sum k P(k) = 2^m for m=" + std::to_string(m));
    c.check(sq == binomial(2 * m, m), "sum 2k Q(k) = C(2m,m) for m=" + std::to_string(m));
  }
  for (int m = 1; m <= 8; ++m)
    c.check(count_star_primitive(m) % 2 == count_primitive_circular(2 * m) % 2,
            "A(m) = P(2m) mod 2 for m=" + std::to_string(m));
  for (int k = 1; k <= 12; ++k) {
    const bool predicted = detail::odd_square_free(k) || (k % 2 == 0 && detail::odd_square_free(k / 2));
    c.check((count_primitive_circular(2 * k) % 2 == 1) == predicted, "parity of P(2k) for k=" + std::to_string(k));
  }
  c.info("R,P,Q match brute force for n<=8; divisor identities m<=12; A=P(2m) mod 2 m<=8; P(2k) parity k<=12");
  return c.finish(4, "counting suite");
}

[[nodiscard]] inline Outcome delta0_parity() {
  detail::Checker c;
  std::string odd;
  for (int m = 1; m <= 6; ++m) {
    const OrbitParity p = obstruction_delta0_parity(m);
    c.check(p.orbit_count == p.closed_form, "orbit count equals C(2m-1,m-1) for m=" + std::to_string(m));
    const bool expect_odd = m == 1 || m == 2 || m == 4;
    c.check(p.odd == expect_odd, "parity for m=" + std::to_string(m));
    if (p.odd) odd += (odd.empty() ? "" : ",") + std::to_string(m);
  }
  // m=1: Delta(2,2) = 3; m=2: Delta(4,2) = 6 = 3j/2.
  for (int m : {1, 2}) {
    const ObstructionResult r = obstruction(3 * m, 2 * m);
    const BoundsReport b = bounds_report(2 * m, 2);
    c.check(r.admissible && b.upper(Provenance::delta0_parity) == 3 * m && b.exact() && *b.best == 3 * m,
            "Delta(" + std::to_string(2 * m) + ",2) = " + std::to_string(3 * m));
  }
  c.info("odd parity for m in {" + odd + "}; Delta(2,2)=3, Delta(4,2)=6");
  return c.finish(5, "delta=0 parity");
}

[[nodiscard]] inline Outcome closed_form_cross_check() {
  detail::Checker c;
  std::string seen;
  for (int m = 1; m <= 4; ++m) {
    const int j = 4 * m - 1;
    const ObstructionResult r = obstruction_delta1(j);
    const auto [z, y] = zy_coordinates(r.total);
    const auto [o1, o2] = closed_form_z2z2(m);
    c.check(std::multiset<int>{z, y} == std::multiset<int>{o1, o2},
            "coordinates of the direct total for j=" + std::to_string(j) + " equal {O1,O2}");
    seen += " m=" + std::to_string(m) + ":" + std::to_string(z) + std::to_string(y);
  }
  for (int q = 0; q <= 3; ++q) {
    const int j = (2 << q) - 1;
    const std::int64_t want = 3 * (std::int64_t{1} << q) - 1;
    const BoundsReport b = bounds_report(j, 2);
    c.check(b.lower == want && b.exact(), "Delta(" + std::to_string(j) + ",2) = " + std::to_string(want));
  }
  c.info("(Z,Y) coordinates" + seen + "; Delta(2^(q+1)-1,2) = 3*2^q-1 for q<=3");
  return c.finish(6, "closed-form cross-check");
}

[[nodiscard]] inline Outcome dickson_suite() {
  detail::Checker c;
  c.check(minimal_d_star(5, 2) == 9, "minimal_d_star(5,2) = 9");
  c.check(minimal_d_star(2, 2) == 4, "minimal_d_star(2,2) = 4");
  for (int k = 1; k <= 4; ++k)
    for (int j = 1; j <= 15; ++j) {
      const int ds = minimal_d_star(j, k);
      c.check(ds <= index_formula_bound(j, k), "d* <= index formula for (" + std::to_string(j) + "," +
                                                   std::to_string(k) + ")");
      if (k <= 3 && j <= 8) {
        for (int d = std::max(1, ds - 3); d <= ds + 3; ++d)
          c.check(admissible_fh(d, j, k) == (d >= ds), "admissible_fh monotone at d=" + std::to_string(d));
      }
    }
  const BoundsOptions opt;
  const std::vector<std::int64_t> uppers{19, 18, 39, 38, 35, 34, 71, 70};
  const std::vector<std::int64_t> lowers{17, 14, 35, 33, 27, 23, 57, 53};
  std::size_t i = 0;
  for (int k : {3, 4}) {
    const json t = table_json(k, default_table_rows(), opt);
    for (const auto& row : t["rows"]) {
      c.check(row["best"].get<std::int64_t>() == uppers[i] && row["lower"].get<std::int64_t>() == lowers[i],
              "closing table row (" + std::to_string(row["j"].get<int>()) + "," + std::to_string(k) + ")");
      ++i;
    }
  }
  c.info("d*(5,2)=9 d*(2,2)=4; closing table uppers 19,18,39,38,35,34,71,70");
  return c.finish(7, "Dickson suite");
}

[[nodiscard]] inline Outcome invariance_suite() {
  detail::Checker c;
  for (int j : {1, 3, 5, 7, 9, 11, 13, 15}) {
    const ObstructionResult base = obstruction_delta1(j);
    for (const auto& conv : detail::all_conventions()) {
      const ObstructionResult r = obstruction_delta1(j, conv);
      const std::string tag = "j=" + std::to_string(j) + " eps=" + to_string(conv.epsilon) + " rows=" +
                              to_string(conv.rows);
      c.check(r.admissible == base.admissible, "verdict changed for " + tag);
      if (base.counters) {
        c.check(detail::abs_mod4(r.counters->omega) == detail::abs_mod4(base.counters->omega),
                "|Omega mod 4| changed for " + tag);
        if (j % 4 == 1 && j >= 5)
          c.check(detail::abs_mod4(r.counters->omega) % 2 == 0, "Omega must be even for " + tag);
      }
    }
  }
  for (int m = 1; m <= 6; ++m)
    c.check(obstruction_delta0_parity(m).odd == obstruction_delta0(m).admissible, "delta0 verdict m=" + std::to_string(m));
  int checked = 0;
  for (int j : {5, 7, 9}) {
    for (const auto& g : generating_classes(j)) {
      if (g.components() != 2) continue;
      const CutConfiguration cfg = build_configuration(g.canonical);
      for (RowOrder ro : {RowOrder::paper, RowOrder::swapped}) {
        c.check(block_diagonal_sign(cfg, ro) == det_sign(sign_matrix(cfg, ro)),
                "block sign differs from determinant sign for " + g.canonical.str());
        ++checked;
      }
    }
  }
  c.info("verdicts stable under 4 conventions for odd j<=15 and m<=6; block sign = det sign on " +
         std::to_string(checked) + " matrices");
  return c.finish(8, "invariance suite");
}

[[nodiscard]] inline Outcome novel_determinism() {
  detail::Checker c;
  const Conventions base{};
  const auto render = [](const Conventions& conv) { return obstruction_json(obstruction(14, 9, conv), conv); };
  const json first = render(base);
  const std::string a = first.dump(2);
  const std::string b = render(base).dump(2);
  c.check(a == b, "two runs with identical conventions differ");
  for (const auto& conv : detail::all_conventions()) {
    const std::string got = render(conv).dump(2);
    const std::string mapped = apply_sign_map(first, base, conv).dump(2);
    c.check(got == mapped, "output under eps=" + to_string(conv.epsilon) + " rows=" + to_string(conv.rows) +
                               " differs from the sign-mapped baseline");
  }
  c.check(first["case"] == "delta1-twisted", "(14,9,2) must be a twisted case");
  if (first.contains("counters")) {
    const auto& k = first["counters"];
    c.info("alpha(5)=" + std::to_string(k["alpha"].get<int>()) + " beta(5)=" + std::to_string(k["beta"].get<int>()) +
           " gamma(5)=" + std::to_string(k["gamma"].get<int>()) + " Omega(2)=" + std::to_string(k["omega"].get<int>()) +
           " total=" + first["total"].get<std::string>() + " admissible=" + (first["admissible"].get<bool>() ? "true" : "false"));
  }
  return c.finish(9, "novel-output determinism (14,9,2)");
}

/// Runs every criterion; exceptions are reported as failures.
[[nodiscard]] inline std::vector<Outcome> run_all() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> suite{
      {"(8,5,2) pipeline", pipeline_852},
      {"(5,3) pipeline", pipeline_53},
      {"state machine ground truth", state_machine},
      {"counting suite", counting_suite},
      {"delta=0 parity", delta0_parity},
      {"closed-form cross-check", closed_form_cross_check},
      {"Dickson suite", dickson_suite},
      {"invariance suite", invariance_suite},
      {"novel-output determinism (14,9,2)", novel_determinism},
  };
  std::vector<Outcome> out;
  int id = 0;
  for (const auto& [name, fn] : suite) {
    ++id;
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({id, name, false, std::string("exception: ") + e.what()});
    }
  }
  return out;
}

[[nodiscard]] inline std::string format(const Outcome& o) {
  std::ostringstream s;
  s << (o.passed ? "PASS" : "FAIL") << "  criterion " << o.id << "  " << o.name;
  if (!o.detail.empty()) s << "  -- " << o.detail;
  return s.str();
}

}  // namespace equipart::acceptance

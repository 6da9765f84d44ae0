#pragma once

// JSON views of the module results. Every text table printed by the CLI is
// rendered from these objects.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "equipart/bounds.hpp"
#include "equipart/dickson.hpp"
#include "equipart/jacobian.hpp"
#include "equipart/obstruction.hpp"
#include "equipart/solution.hpp"
#include "equipart/words.hpp"

namespace equipart {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

[[nodiscard]] inline std::string to_string(EpsilonConvention c) {
  return c == EpsilonConvention::quarter ? "quarter" : "three-quarter";
}
[[nodiscard]] inline std::string to_string(RowOrder r) { return r == RowOrder::paper ? "paper" : "swapped"; }

[[nodiscard]] inline json words_json(int nmax, bool brute) {
  detail::require(nmax >= 1 && nmax <= kMaxStarPrimitiveM, "words: nmax out of range [1, 14]");
  detail::require(!brute || nmax <= kMaxBruteN, "words: --brute supports nmax up to 12");
  json rows = json::array();
  for (int n = 1; n <= nmax; ++n) {
    json row;
    row["n"] = n;
    row["R"] = count_balanced_circular(n);
    row["P"] = count_primitive_circular(n);
    row["P2n"] = count_primitive_circular(2 * n);
    row["Q"] = count_primitive_balanced(n);
    row["A"] = count_star_primitive(n);
    row["A_mod2"] = count_star_primitive(n) % 2;
    row["P2n_mod2"] = count_primitive_circular(2 * n) % 2;
    if (brute) {
      row["R_brute"] = count_balanced_circular_brute(n);
      row["P_brute"] = count_primitive_circular_brute(n);
      row["Q_brute"] = count_primitive_balanced_brute(n);
    }
    rows.push_back(row);
  }
  return json{{"schema", "equipart.words/1"}, {"rows", rows}};
}

[[nodiscard]] inline json circles_json(const CircleDecomposition& dec) {
  json circles = json::array();
  for (const auto& c : dec.circles()) {
    json words = json::array();
    for (const auto& w : c.compressed()) words.push_back(w.str());
    circles.push_back(json{{"length", c.length()}, {"compressed", words}});
  }
  return json{{"schema", "equipart.circles/1"}, {"j", dec.j()}, {"states", dec.state_count()}, {"circles", circles}};
}

[[nodiscard]] inline json class_json(const GeneratingClass& g) {
  json out;
  out["canonical"] = g.canonical.word.str();
  out["signs"] = g.canonical.signs.str();
  out["components"] = g.components();
  out["circle_length"] = g.circle_length;
  out["stabilizer"] = g.stabilizer.tokens();
  out["monodromy"] = to_token(g.monodromy);
  if (g.epsilon) out["epsilon"] = *g.epsilon;
  if (g.eta) out["eta"] = *g.eta;
  out["contribution"] = to_token(g.contribution);
  return out;
}

[[nodiscard]] inline json obstruction_json(const ObstructionResult& r, const Conventions& conv) {
  json out;
  out["schema"] = "equipart.obstruction/1";
  out["case"] = to_string(r.kind);
  out["d"] = r.d;
  out["j"] = r.j;
  out["k"] = 2;
  if (r.kind == ObstructionCase::delta0) {
    out["m"] = r.j / 2;
    out["orbit_count"] = r.parity->orbit_count;
    out["closed_form"] = r.parity->closed_form;
    out["parity"] = r.parity->odd ? "odd" : "even";
  } else {
    out["conventions"] = json{{"epsilon", to_string(conv.epsilon)}, {"rows", to_string(conv.rows)}};
    out["states"] = r.state_count;
    out["circles"] = r.circle_count;
    json classes = json::array();
    for (const auto& g : r.classes) classes.push_back(class_json(g));
    out["classes"] = classes;
    if (r.counters) {
      const auto& c = *r.counters;
      out["counters"] = json{{"alpha", c.alpha},
                             {"beta", c.beta},
                             {"gamma", c.gamma},
                             {"omega", c.omega},
                             {"omega_mod4", ((c.omega % 4) + 4) % 4}};
    } else {
      const auto [z, y] = zy_coordinates(r.total);
      json zy{{"Z", z}, {"Y", y}};
      const int m = (r.j + 1) / 4;
      if (2 * m <= kMaxStarPrimitiveM) {
        const auto [o1, o2] = closed_form_z2z2(m);
        zy["O1"] = o1;
        zy["O2"] = o2;
      }
      out["coordinates"] = zy;
    }
  }
  out["total"] = to_token(r.total);
  out["admissible"] = r.admissible;
  out["notes"] = r.notes;
  return out;
}

/// The documented sign map between conventions. Flipping either the
/// epsilon convention or the row order negates every epsilon (resp. eta),
/// which exchanges +Xca and -Xca, swaps alpha and gamma, and negates the
/// total. Applying the map for `from` -> `to` to a twisted-case payload
/// yields the payload computed under `to`.
[[nodiscard]] inline json apply_sign_map(json payload, const Conventions& from, const Conventions& to) {
  const bool flip_eps = from.epsilon != to.epsilon;
  const bool flip_eta = from.rows != to.rows;
  if (payload.contains("conventions"))
    payload["conventions"] = json{{"epsilon", to_string(to.epsilon)}, {"rows", to_string(to.rows)}};
  if (flip_eps == flip_eta || payload["case"] != "delta1-twisted") {
    if (payload.contains("classes"))
      for (auto& c : payload["classes"]) {
        if (flip_eps && c.contains("epsilon")) c["epsilon"] = -c["epsilon"].get<int>();
        if (flip_eta && c.contains("eta")) c["eta"] = -c["eta"].get<int>();
      }
    return payload;
  }
  const auto negate_token = [](const std::string& t) {
    if (t == "+Xca") return std::string("-Xca");
    if (t == "-Xca") return std::string("+Xca");
    return t;
  };
  for (auto& c : payload["classes"]) {
    if (flip_eps && c.contains("epsilon")) c["epsilon"] = -c["epsilon"].get<int>();
    if (flip_eta && c.contains("eta")) c["eta"] = -c["eta"].get<int>();
    c["contribution"] = negate_token(c["contribution"].get<std::string>());
  }
  auto& k = payload["counters"];
  const int alpha = k["alpha"].get<int>();
  const int beta = k["beta"].get<int>();
  const int gamma = k["gamma"].get<int>();
  const int omega = gamma + 2 * beta - alpha;
  k["alpha"] = gamma;
  k["gamma"] = alpha;
  k["omega"] = omega;
  k["omega_mod4"] = ((omega % 4) + 4) % 4;
  payload["total"] = negate_token(payload["total"].get<std::string>());
  return payload;
}

[[nodiscard]] inline json jacobian_json(const SignedWord& w, RowOrder order) {
  const CutConfiguration c = build_configuration(w);
  const SignMatrix m = sign_matrix(c, order);
  json out;
  out["schema"] = "equipart.jacobian/1";
  out["word"] = w.str();
  out["j"] = c.j;
  out["d"] = c.d;
  out["row_order"] = to_string(order);
  out["curve_order"] = curve_order_labels(c);
  out["rows"] = m.row_labels;
  out["columns"] = m.col_labels;
  out["matrix"] = m.entries;
  out["det_sign"] = det_sign(m);
  out["block_sign"] = block_diagonal_sign(c, order);
  return out;
}

[[nodiscard]] inline json dickson_json(int j, int k, std::optional<int> d, std::uint64_t cap) {
  json out;
  out["schema"] = "equipart.dickson/1";
  out["j"] = j;
  out["k"] = k;
  if (d) {
    out["d"] = *d;
    out["in_ideal"] = !admissible_fh(*d, j, k, cap);
    out["admissible"] = !out["in_ideal"].get<bool>();
  }
  out["minimal_d"] = minimal_d_star(j, k, cap);
  out["index_formula"] = index_formula_bound(j, k);
  out["lower_bound"] = lower_bound(j, k);
  return out;
}

[[nodiscard]] inline json bounds_json(const BoundsReport& r) {
  json uppers = json::array();
  for (const auto& u : r.uppers) uppers.push_back(json{{"provenance", to_string(u.provenance)}, {"value", u.value}});
  json out;
  out["schema"] = "equipart.bounds/1";
  out["j"] = r.j;
  out["k"] = r.k;
  out["lower"] = r.lower;
  out["uppers"] = uppers;
  out["best"] = r.best ? json(*r.best) : json(nullptr);
  out["exact"] = r.exact();
  out["notes"] = r.notes;
  return out;
}

/// The closing bound table lists j = 7, 6, 15, 14 for each k.
[[nodiscard]] inline std::vector<int> default_table_rows() { return {7, 6, 15, 14}; }

[[nodiscard]] inline json table_json(int k, const std::vector<int>& js, const BoundsOptions& opt) {
  json rows = json::array();
  for (int j : js) {
    const BoundsReport r = bounds_report(j, k, opt);
    json row{{"j", j}, {"k", k}, {"lower", r.lower}, {"index_formula", index_formula_bound(j, k)}};
    const auto dk = r.upper(Provenance::dickson_minimal_d);
    row["dickson_minimal_d"] = dk ? json(*dk) : json(nullptr);
    row["best"] = r.best ? json(*r.best) : json(nullptr);
    rows.push_back(row);
  }
  return json{{"schema", "equipart.table/1"}, {"k", k}, {"rows", rows}};
}

}  // namespace equipart

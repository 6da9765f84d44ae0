#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "equipart/dickson.hpp"
#include "equipart/errors.hpp"
#include "equipart/obstruction.hpp"

namespace equipart {

enum class Provenance {
  dickson_minimal_d,
  index_formula,
  delta0_parity,
  delta1_obstruction,
  corollary_closed_form,
};

[[nodiscard]] inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::dickson_minimal_d: return "dickson-minimal-d";
    case Provenance::index_formula: return "index-formula";
    case Provenance::delta0_parity: return "delta0-parity";
    case Provenance::delta1_obstruction: return "delta1-obstruction";
    default: return "corollary-closed-form";
  }
}

struct UpperCandidate {
  std::int64_t value = 0;
  Provenance provenance = Provenance::index_formula;
};

struct BoundsReport {
  int j = 0;
  int k = 0;
  std::int64_t lower = 0;
  std::vector<UpperCandidate> uppers;
  std::optional<std::int64_t> best;
  std::vector<std::string> notes;

  [[nodiscard]] bool exact() const { return best && *best == lower; }

  [[nodiscard]] std::optional<std::int64_t> upper(Provenance p) const {
    for (const auto& u : uppers)
      if (u.provenance == p) return u.value;
    return std::nullopt;
  }
};

struct BoundsOptions {
  int max_obstruction_j = 15;  // enumeration limit for the k = 2 circle method
  std::uint64_t product_cap = kDefaultProductCap;
  Conventions conventions{};
};

[[nodiscard]] inline BoundsReport bounds_report(int j, int k, const BoundsOptions& opt = {}) {
  detail::require(j >= 1 && k >= 1, "bounds: j and k must be positive");
  BoundsReport r;
  r.j = j;
  r.k = k;
  r.lower = lower_bound(j, k);

  if (k <= 6) {
    try {
      r.uppers.push_back({minimal_d_star(j, k, opt.product_cap), Provenance::dickson_minimal_d});
    } catch (const resource_error& e) {
      r.notes.push_back(std::string("dickson search skipped: ") + e.what());
    }
  }
  r.uppers.push_back({index_formula_bound(j, k), Provenance::index_formula});

  if (k == 2) {
    if (j % 2 == 0 && j / 2 <= 12) {
      if (obstruction_delta0_parity(j / 2).odd) r.uppers.push_back({3 * j / 2, Provenance::delta0_parity});
    }
    if (j % 2 == 1 && j <= opt.max_obstruction_j && j <= kMaxCircleJ) {
      if (obstruction_delta1(j, opt.conventions).admissible)
        r.uppers.push_back({(3 * j + 1) / 2, Provenance::delta1_obstruction});
    }
    if (j % 4 == 3) {
      const int m = (j + 1) / 4;
      if (2 * m <= kMaxStarPrimitiveM) {
        const auto [o1, o2] = closed_form_z2z2(m);
        if (o1 || o2) r.uppers.push_back({6 * m - 1, Provenance::corollary_closed_form});
      }
    }
  }

  for (const auto& u : r.uppers) {
    detail::ensure(u.value >= r.lower, "an upper bound fell below the lower bound for (" + std::to_string(j) + ", " +
                                           std::to_string(k) + ")");
    if (!r.best || u.value < *r.best) r.best = u.value;
  }
  return r;
}

}  // namespace equipart

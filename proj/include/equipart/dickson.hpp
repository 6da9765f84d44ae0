#pragma once

// Sparse polynomials over F2, the Dickson polynomial P_k, and the
// ideal-membership test (P_k)^j notin (x_1^(d+1), ..., x_k^(d+1)).

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "equipart/errors.hpp"

namespace equipart {

inline constexpr int kMaxVariables = 8;
inline constexpr std::uint64_t kDefaultProductCap = 10'000'000;

/// Dense exponent vector; unused trailing slots stay zero.
struct Monomial {
  std::array<std::uint16_t, kMaxVariables> exp{};

  [[nodiscard]] int max_exponent() const { return *std::max_element(exp.begin(), exp.end()); }
  [[nodiscard]] int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exp) h = (h ^ e) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

/// A polynomial over F2 as a set of monomials; inserting a monomial that
/// is already present cancels it.
class SparsePolyF2 {
 public:
  explicit SparsePolyF2(int variables = 1) : vars_(variables) {
    detail::require(variables >= 1 && variables <= kMaxVariables, "polynomial: 1..8 variables supported");
  }

  [[nodiscard]] static SparsePolyF2 one(int variables) {
    SparsePolyF2 p(variables);
    p.toggle(Monomial{});
    return p;
  }

  [[nodiscard]] static SparsePolyF2 variable(int variables, int i) {
    SparsePolyF2 p(variables);
    Monomial m;
    m.exp[static_cast<std::size_t>(i)] = 1;
    p.toggle(m);
    return p;
  }

  [[nodiscard]] static SparsePolyF2 from_exponents(int variables, const std::vector<std::vector<int>>& terms) {
    SparsePolyF2 p(variables);
    for (const auto& t : terms) {
      detail::require(static_cast<int>(t.size()) == variables, "polynomial: exponent vector length mismatch");
      Monomial m;
      for (std::size_t i = 0; i < t.size(); ++i) m.exp[i] = static_cast<std::uint16_t>(t[i]);
      p.toggle(m);
    }
    return p;
  }

  void toggle(const Monomial& m) {
    auto [it, inserted] = terms_.insert(m);
    if (!inserted) terms_.erase(it);
  }

  [[nodiscard]] int variables() const { return vars_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool contains(const Monomial& m) const { return terms_.count(m) != 0; }

  [[nodiscard]] std::vector<Monomial> sorted_terms() const {
    std::vector<Monomial> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
  }

  [[nodiscard]] std::vector<std::vector<int>> exponent_vectors() const {
    std::vector<std::vector<int>> out;
    for (const auto& m : sorted_terms()) out.emplace_back(m.exp.begin(), m.exp.begin() + vars_);
    return out;
  }

  [[nodiscard]] const std::unordered_set<Monomial, MonomialHash>& terms() const { return terms_; }

  friend SparsePolyF2 operator+(SparsePolyF2 a, const SparsePolyF2& b) {
    detail::require(a.vars_ == b.vars_, "polynomial: variable count mismatch");
    for (const auto& m : b.terms_) a.toggle(m);
    return a;
  }

  friend bool operator==(const SparsePolyF2& a, const SparsePolyF2& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& m : sorted_terms()) {
      if (!out.empty()) out += " + ";
      std::string term;
      for (int i = 0; i < vars_; ++i) {
        const int e = m.exp[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        if (!term.empty()) term += "*";
        term += "x" + std::to_string(i + 1);
        if (e > 1) term += "^" + std::to_string(e);
      }
      out += term.empty() ? "1" : term;
    }
    return out;
  }

 private:
  int vars_;
  std::unordered_set<Monomial, MonomialHash> terms_;
};

[[nodiscard]] inline SparsePolyF2 poly_mul(const SparsePolyF2& p, const SparsePolyF2& q,
                                           std::uint64_t cap = kDefaultProductCap) {
  detail::require(p.variables() == q.variables(), "poly_mul: variable count mismatch");
  const std::uint64_t work = static_cast<std::uint64_t>(p.size()) * q.size();
  if (work > cap)
    throw resource_error("poly_mul: " + std::to_string(work) + " monomial products exceed the cap of " +
                         std::to_string(cap));
  SparsePolyF2 out(p.variables());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) {
      Monomial m;
      for (std::size_t i = 0; i < kMaxVariables; ++i) {
        const int e = a.exp[i] + b.exp[i];
        if (e > 0xFFFF) throw resource_error("poly_mul: exponent overflow");
        m.exp[i] = static_cast<std::uint16_t>(e);
      }
      out.toggle(m);
    }
  return out;
}

/// Squaring in characteristic 2 doubles every exponent vector.
[[nodiscard]] inline SparsePolyF2 poly_square(const SparsePolyF2& p) {
  SparsePolyF2 out(p.variables());
  for (const auto& a : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      if (2 * a.exp[i] > 0xFFFF) throw resource_error("poly_square: exponent overflow");
      m.exp[i] = static_cast<std::uint16_t>(2 * a.exp[i]);
    }
    out.toggle(m);
  }
  return out;
}

[[nodiscard]] inline SparsePolyF2 poly_pow(const SparsePolyF2& p, int e, std::uint64_t cap = kDefaultProductCap) {
  detail::require(e >= 0, "poly_pow: exponent must be nonnegative");
  SparsePolyF2 result = SparsePolyF2::one(p.variables());
  SparsePolyF2 base = p;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : poly_mul(result, base, cap);
      first = false;
    }
    e >>= 1;
    if (e) base = poly_square(base);
  }
  return result;
}

/// P_k = sum over permutations s of x_s(1)^(2^(k-1)) x_s(2)^(2^(k-2)) ... x_s(k).
[[nodiscard]] inline SparsePolyF2 dickson(int k) {
  detail::require(k >= 1 && k <= 6, "dickson: k out of range [1, 6]");
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  SparsePolyF2 out(k);
  do {
    Monomial m;
    for (int pos = 0; pos < k; ++pos)
      m.exp[static_cast<std::size_t>(perm[static_cast<std::size_t>(pos)])] =
          static_cast<std::uint16_t>(1u << (k - 1 - pos));
    out.toggle(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Product form: the product over nonempty subsets S of sum_{i in S} x_i.
[[nodiscard]] inline SparsePolyF2 dickson_product_form(int k) {
  detail::require(k >= 1 && k <= 4, "dickson_product_form: k out of range [1, 4]");
  SparsePolyF2 out = SparsePolyF2::one(k);
  for (unsigned subset = 1; subset < (1u << k); ++subset) {
    SparsePolyF2 form(k);
    for (int i = 0; i < k; ++i)
      if (subset & (1u << i)) form = form + SparsePolyF2::variable(k, i);
    out = poly_mul(out, form);
  }
  return out;
}

namespace detail {

inline void check_dickson_args(int j, int k) {
  require(j >= 1, "j must be positive");
  require(k >= 1 && k <= 6, "k out of range [1, 6]");
}

}  // namespace detail

/// (P_k)^j survives reduction modulo (x_i^(d+1)), which certifies (d, j, k).
[[nodiscard]] inline bool admissible_fh(int d, int j, int k, std::uint64_t cap = kDefaultProductCap) {
  detail::require(d >= 1, "d must be positive");
  detail::check_dickson_args(j, k);
  const SparsePolyF2 p = poly_pow(dickson(k), j, cap);
  return std::any_of(p.terms().begin(), p.terms().end(), [d](const Monomial& m) { return m.max_exponent() <= d; });
}

/// Least d for which the membership test succeeds: the minimum over the
/// monomials of (P_k)^j of the largest exponent.
[[nodiscard]] inline int minimal_d_star(int j, int k, std::uint64_t cap = kDefaultProductCap) {
  detail::check_dickson_args(j, k);
  const SparsePolyF2 p = poly_pow(dickson(k), j, cap);
  detail::ensure(!p.is_zero(), "(P_k)^j vanished");
  int best = std::numeric_limits<int>::max();
  for (const auto& m : p.terms()) best = std::min(best, m.max_exponent());
  return best;
}

/// 2^(k+q-1) + r for j = 2^q + r, 0 <= r < 2^q.
[[nodiscard]] inline std::int64_t index_formula_bound(std::int64_t j, int k) {
  detail::require(j >= 1, "j must be positive");
  detail::require(k >= 1 && k <= 40, "k out of range [1, 40]");
  int q = 0;
  while ((std::int64_t{1} << (q + 1)) <= j) ++q;
  const std::int64_t r = j - (std::int64_t{1} << q);
  return (std::int64_t{1} << (k + q - 1)) + r;
}

/// ceil(j (2^k - 1) / k).
[[nodiscard]] inline std::int64_t lower_bound(std::int64_t j, int k) {
  detail::require(j >= 1, "j must be positive");
  detail::require(k >= 1 && k <= 40, "k out of range [1, 40]");
  const std::int64_t num = j * ((std::int64_t{1} << k) - 1);
  return (num + k - 1) / k;
}

}  // namespace equipart

#pragma once

// Cut-point bookkeeping on the moment curve for a canonical signed word and
// the sign of the Jacobian of quadrant masses with respect to the cut
// coordinates.
//
// Interval i is cut three times: pattern letter a gives the hyperplane
// sequence (H1, H2, H1) and b gives (H2, H1, H2). The free point x1 sits on
// H1 before every interval and the segment between it and the first
// interval lies in quadrant (+,+). Quadrant masses are uniform, so each
// derivative is +1 for the quadrant a cut leaves behind it, -1 for the one
// ahead of it, and 0 elsewhere. The (-,-) quadrant is not tracked.

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "equipart/errors.hpp"
#include "equipart/number_theory.hpp"
#include "equipart/solution.hpp"

namespace equipart {

enum class RowOrder {
  paper,    // per measure: ++, +-, -+
  swapped,  // per measure: ++, -+, +-
};

struct CutPoint {
  int hyperplane = 1;  // 1 -> x coordinate, 2 -> y coordinate
  int index = 0;       // x_index or y_index
  int interval = 0;    // 0-based
  SignPair before;     // quadrant of the segment to the left
  SignPair after;      // quadrant of the segment to the right

  [[nodiscard]] std::string label() const { return (hyperplane == 1 ? "x" : "y") + std::to_string(index); }
};

struct CutConfiguration {
  int j = 0;
  int d = 0;
  SignedWord word;
  std::string pattern;          // one partition letter per interval
  std::vector<CutPoint> cuts;   // curve order, free point x1 excluded
  int h1_points = 0;            // including the free point
  int h2_points = 0;

  /// The four quarter-segment quadrants of interval i, left to right.
  [[nodiscard]] std::vector<SignPair> segment_labels(int interval) const {
    std::vector<SignPair> out;
    for (const auto& c : cuts) {
      if (c.interval != interval) continue;
      if (out.empty()) out.push_back(c.before);
      out.push_back(c.after);
    }
    return out;
  }
};

[[nodiscard]] inline CutConfiguration build_configuration(const SignedWord& w) {
  const int j = static_cast<int>(w.word.size()) - 1;
  detail::require(j >= 1 && j % 2 == 1, "configuration: word length must be even");
  detail::require(w.word.balanced(), "configuration: word must be balanced");
  detail::require(w.word[0] == 'A', "configuration: canonical word must start with A");
  detail::require(w.signs == SignPair{}, "configuration: canonical word must carry signs (+,+)");

  CutConfiguration c;
  c.j = j;
  c.d = (3 * j + 1) / 2;
  c.word = w;
  c.h1_points = 1;  // free point x1
  SignPair label;   // (+,+) right after the free point
  for (int i = 0; i < j; ++i) {
    const char letter = w.word[static_cast<std::size_t>(i) + 1] == 'A' ? 'a' : 'b';
    c.pattern += letter;
    const int seq[3] = {letter == 'a' ? 1 : 2, letter == 'a' ? 2 : 1, letter == 'a' ? 1 : 2};
    for (int h : seq) {
      CutPoint p;
      p.hyperplane = h;
      p.interval = i;
      p.before = label;
      if (h == 1) {
        p.index = ++c.h1_points;
        label.first = negate(label.first);
      } else {
        p.index = ++c.h2_points;
        label.second = negate(label.second);
      }
      p.after = label;
      c.cuts.push_back(p);
    }
  }
  detail::ensure(c.h1_points == c.d && c.h2_points == c.d,
                 "configuration: per-hyperplane point counts differ from d for " + w.str());
  for (int i = 0; i < j; ++i) {
    const auto labels = c.segment_labels(i);
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b)
        detail::ensure(!(labels[a] == labels[b]), "configuration: interval is not split into four quadrants");
  }
  return c;
}

struct SignMatrix {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<int>> entries;

  [[nodiscard]] std::size_t size() const { return entries.size(); }
};

[[nodiscard]] inline std::vector<SignPair> tracked_quadrants(RowOrder order) {
  const SignPair pp{Sign::plus, Sign::plus}, pm{Sign::plus, Sign::minus}, mp{Sign::minus, Sign::plus};
  if (order == RowOrder::paper) return {pp, pm, mp};
  return {pp, mp, pm};
}

/// Standard column order: x2..x_d, then y1..y_d.
[[nodiscard]] inline std::vector<std::size_t> standard_column_of_cut(const CutConfiguration& c) {
  std::vector<std::size_t> out;
  for (const auto& p : c.cuts)
    out.push_back(p.hyperplane == 1 ? static_cast<std::size_t>(p.index - 2)
                                    : static_cast<std::size_t>(c.d - 1 + p.index - 1));
  return out;
}

[[nodiscard]] inline SignMatrix sign_matrix(const CutConfiguration& c, RowOrder order = RowOrder::paper) {
  const std::size_t n = static_cast<std::size_t>(3 * c.j);
  const auto quads = tracked_quadrants(order);
  SignMatrix m;
  m.entries.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < c.j; ++i)
    for (const auto& q : quads) m.row_labels.push_back("b" + std::to_string(i + 1) + "^" + q.str());
  for (int k = 2; k <= c.d; ++k) m.col_labels.push_back("x" + std::to_string(k));
  for (int k = 1; k <= c.d; ++k) m.col_labels.push_back("y" + std::to_string(k));
  detail::ensure(m.col_labels.size() == n, "sign matrix is not square");

  const auto column = standard_column_of_cut(c);
  for (std::size_t k = 0; k < c.cuts.size(); ++k) {
    const auto& p = c.cuts[k];
    int nonzero = 0;
    for (std::size_t q = 0; q < quads.size(); ++q) {
      const std::size_t row = static_cast<std::size_t>(p.interval) * 3 + q;
      int v = 0;
      if (quads[q] == p.before) v += 1;
      if (quads[q] == p.after) v -= 1;
      m.entries[row][column[k]] = v;
      nonzero += v != 0;
    }
    detail::ensure(nonzero >= 1 && nonzero <= 2, "sign matrix column has an unexpected support");
  }
  return m;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
[[nodiscard]] inline wide_int determinant(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a) detail::require(row.size() == n, "determinant: matrix must be square");
  std::vector<std::vector<wide_int>> m(n, std::vector<wide_int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) m[i][k] = a[i][k];

  constexpr wide_int kLimit = wide_int{1} << 100;
  int sign = 1;
  wide_int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t l = k + 1; l < n; ++l) {
        const wide_int v = m[i][l] * m[k][k] - m[i][k] * m[k][l];
        m[i][l] = v / prev;
        if (m[i][l] > kLimit || m[i][l] < -kLimit) throw resource_error("determinant: intermediate overflow");
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Sign of a unimodular matrix; a determinant other than +-1 means the
/// configuration was built inconsistently.
[[nodiscard]] inline int det_sign(const SignMatrix& m) {
  const wide_int det = determinant(m.entries);
  detail::ensure(det == 1 || det == -1, "sign matrix is not unimodular (determinant " +
                                            std::to_string(static_cast<long long>(det)) + ")");
  return det > 0 ? 1 : -1;
}

[[nodiscard]] inline int permutation_sign(const std::vector<std::size_t>& perm) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b];
  return inversions % 2 ? -1 : 1;
}

/// Reorders the columns into curve order, where the matrix is block
/// diagonal with one 3x3 block per interval, and multiplies the block
/// determinants by the sign of the column shuffle.
[[nodiscard]] inline int block_diagonal_sign(const CutConfiguration& c, RowOrder order = RowOrder::paper) {
  const SignMatrix m = sign_matrix(c, order);
  const auto column = standard_column_of_cut(c);
  int sign = permutation_sign(column);
  for (int i = 0; i < c.j; ++i) {
    std::vector<std::vector<int>> block(3, std::vector<int>(3));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t k = 0; k < 3; ++k)
        block[r][k] = m.entries[static_cast<std::size_t>(i) * 3 + r][column[static_cast<std::size_t>(i) * 3 + k]];
    const wide_int det = determinant(block);
    detail::ensure(det != 0, "interval block " + std::to_string(i + 1) + " is singular");
    sign *= det > 0 ? 1 : -1;
  }
  return sign;
}

/// Curve-order coordinate labels, e.g. "x2 y1 x3 x4 ...".
[[nodiscard]] inline std::vector<std::string> curve_order_labels(const CutConfiguration& c) {
  std::vector<std::string> out;
  for (const auto& p : c.cuts) out.push_back(p.label());
  return out;
}

[[nodiscard]] inline int jacobian_sign(const SignedWord& w, RowOrder order = RowOrder::paper) {
  return det_sign(sign_matrix(build_configuration(w), order));
}

}  // namespace equipart

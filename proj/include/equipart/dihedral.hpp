#pragma once

// The dihedral group of order 8 acting on an ordered pair of oriented
// hyperplanes, its subgroups, and the two first-homology groups that carry
// the obstruction classes.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "equipart/errors.hpp"

namespace equipart {

/// One symmetry of an oriented hyperplane pair. The element acts on a
/// sign pair (e1, e2) by first exchanging the two hyperplanes when `swap`
/// is set and then negating e1 / e2 according to `flip1` / `flip2`.
///
/// Composition convention: compose(g, h) is "apply h first, then g".
struct DihedralElement {
  bool flip1 = false;
  bool flip2 = false;
  bool swap = false;

  friend constexpr bool operator==(DihedralElement, DihedralElement) = default;

  /// Position in the canonical listing e, a, b, ab, g, ga, gb, gab.
  [[nodiscard]] constexpr int index() const {
    // ga = (F,T,T) and gb = (T,F,T) are listed in that order.
    if (!swap) return (flip1 ? 1 : 0) + (flip2 ? 2 : 0);
    if (flip1 == flip2) return flip1 ? 7 : 4;
    return flip2 ? 5 : 6;
  }

  [[nodiscard]] static constexpr DihedralElement from_index(int i) {
    constexpr std::array<DihedralElement, 8> table{{
        {false, false, false},
        {true, false, false},
        {false, true, false},
        {true, true, false},
        {false, false, true},
        {false, true, true},
        {true, false, true},
        {true, true, true},
    }};
    return table[static_cast<std::size_t>(i)];
  }

  [[nodiscard]] constexpr bool is_identity() const { return !flip1 && !flip2 && !swap; }
};

namespace d8 {
inline constexpr DihedralElement e{false, false, false};
inline constexpr DihedralElement alpha{true, false, false};
inline constexpr DihedralElement beta{false, true, false};
inline constexpr DihedralElement gamma{false, false, true};
}  // namespace d8

[[nodiscard]] constexpr DihedralElement compose(DihedralElement g, DihedralElement h) {
  // g o h = F(fg) S^sg F(fh) S^sh = F(fg + S^sg(fh)) S^(sg+sh)
  const bool h1 = g.swap ? h.flip2 : h.flip1;
  const bool h2 = g.swap ? h.flip1 : h.flip2;
  return {g.flip1 != h1, g.flip2 != h2, g.swap != h.swap};
}

[[nodiscard]] constexpr DihedralElement compose(std::initializer_list<DihedralElement> factors) {
  DihedralElement out = d8::e;
  for (auto f : factors) out = compose(out, f);
  return out;
}

[[nodiscard]] constexpr DihedralElement inverse(DihedralElement g) {
  for (int i = 0; i < 8; ++i) {
    const auto h = DihedralElement::from_index(i);
    if (compose(g, h).is_identity()) return h;
  }
  return d8::e;  // unreachable
}

[[nodiscard]] constexpr std::array<DihedralElement, 8> all_elements() {
  std::array<DihedralElement, 8> out{};
  for (int i = 0; i < 8; ++i) out[static_cast<std::size_t>(i)] = DihedralElement::from_index(i);
  return out;
}

/// Acts on an ordered sign pair (+1 / -1 entries).
[[nodiscard]] constexpr std::pair<int, int> act_on_signs(DihedralElement g, std::pair<int, int> s) {
  if (g.swap) std::swap(s.first, s.second);
  if (g.flip1) s.first = -s.first;
  if (g.flip2) s.second = -s.second;
  return s;
}

[[nodiscard]] inline std::string to_token(DihedralElement g) {
  static constexpr std::array<std::string_view, 8> names{"e", "a", "b", "ab", "g", "ga", "gb", "gab"};
  return std::string(names[static_cast<std::size_t>(g.index())]);
}

[[nodiscard]] inline std::optional<DihedralElement> parse_element(std::string_view tok) {
  for (auto g : all_elements())
    if (to_token(g) == tok) return g;
  return std::nullopt;
}

/// A subgroup stored as an 8-bit membership mask over canonical indices.
class Subgroup {
 public:
  Subgroup() : mask_(1) {}

  [[nodiscard]] static Subgroup from_elements(const std::vector<DihedralElement>& elems) {
    Subgroup s;
    s.mask_ = 0;
    for (auto g : elems) s.mask_ |= static_cast<std::uint8_t>(1u << g.index());
    detail::ensure(s.closed(), "element set is not a subgroup");
    return s;
  }

  [[nodiscard]] bool contains(DihedralElement g) const { return (mask_ >> g.index()) & 1u; }
  [[nodiscard]] int order() const { return std::popcount(static_cast<unsigned>(mask_)); }

  [[nodiscard]] std::vector<DihedralElement> elements() const {
    std::vector<DihedralElement> out;
    for (auto g : all_elements())
      if (contains(g)) out.push_back(g);
    return out;
  }

  [[nodiscard]] std::vector<std::string> tokens() const {
    std::vector<std::string> out;
    for (auto g : elements()) out.push_back(to_token(g));
    return out;
  }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  friend Subgroup subgroup_generated(std::initializer_list<DihedralElement>);
  friend Subgroup subgroup_generated(const std::vector<DihedralElement>&);

  [[nodiscard]] bool closed() const {
    if (!contains(d8::e)) return false;
    for (auto g : elements())
      for (auto h : elements())
        if (!contains(compose(g, h))) return false;
    return true;
  }

  std::uint8_t mask_;
};

/// Smallest subgroup containing `gens`.
[[nodiscard]] inline Subgroup subgroup_generated(const std::vector<DihedralElement>& gens) {
  Subgroup s;  // {e}
  for (auto g : gens) s.mask_ |= static_cast<std::uint8_t>(1u << g.index());
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto g : s.elements())
      for (auto h : s.elements()) {
        const auto gh = compose(g, h);
        if (!s.contains(gh)) {
          s.mask_ |= static_cast<std::uint8_t>(1u << gh.index());
          grew = true;
        }
      }
  }
  return s;
}

[[nodiscard]] inline Subgroup subgroup_generated(std::initializer_list<DihedralElement> gens) {
  return subgroup_generated(std::vector<DihedralElement>(gens));
}

enum class Coefficients { trivial, twisted };

/// An element of H1(D8; Z) = Z/2 + Z/2 (basis X, Y) or of
/// H1(D8; twisted Z) = Z/4 (in units of the generator X_ca).
///
/// Twisted values: X_ab = 2, X_bc = X_ca = 1, -X_ca = 3.
class HomologyClass {
 public:
  constexpr HomologyClass() = default;

  [[nodiscard]] static constexpr HomologyClass trivial(int x, int y) {
    HomologyClass c;
    c.tag_ = Coefficients::trivial;
    c.a_ = x & 1;
    c.b_ = y & 1;
    return c;
  }
  [[nodiscard]] static constexpr HomologyClass twisted(int residue) {
    HomologyClass c;
    c.tag_ = Coefficients::twisted;
    c.a_ = ((residue % 4) + 4) % 4;
    return c;
  }
  [[nodiscard]] static constexpr HomologyClass zero(Coefficients tag) {
    return tag == Coefficients::trivial ? trivial(0, 0) : twisted(0);
  }

  // Named generators.
  [[nodiscard]] static constexpr HomologyClass X() { return trivial(1, 0); }
  [[nodiscard]] static constexpr HomologyClass Y() { return trivial(0, 1); }
  [[nodiscard]] static constexpr HomologyClass Z() { return trivial(1, 1); }
  [[nodiscard]] static constexpr HomologyClass X_ca() { return twisted(1); }
  [[nodiscard]] static constexpr HomologyClass X_bc() { return twisted(1); }
  [[nodiscard]] static constexpr HomologyClass X_ab() { return twisted(2); }

  [[nodiscard]] constexpr Coefficients coefficients() const { return tag_; }
  [[nodiscard]] constexpr int x() const { return a_; }
  [[nodiscard]] constexpr int y() const { return b_; }
  [[nodiscard]] constexpr int residue() const { return a_; }
  [[nodiscard]] constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  constexpr HomologyClass& operator+=(const HomologyClass& o) {
    if (tag_ != o.tag_) throw internal_error("adding classes with different coefficients");
    if (tag_ == Coefficients::trivial) {
      a_ ^= o.a_;
      b_ ^= o.b_;
    } else {
      a_ = (a_ + o.a_) % 4;
    }
    return *this;
  }
  friend constexpr HomologyClass operator+(HomologyClass l, const HomologyClass& r) { return l += r; }
  friend constexpr HomologyClass operator-(const HomologyClass& c) {
    return c.tag_ == Coefficients::trivial ? c : twisted(4 - c.a_);
  }
  friend constexpr HomologyClass operator*(int k, const HomologyClass& c) {
    if (c.tag_ == Coefficients::trivial) return trivial(k * c.a_, k * c.b_);
    return twisted(k * c.a_);
  }
  friend constexpr bool operator==(const HomologyClass&, const HomologyClass&) = default;

 private:
  Coefficients tag_ = Coefficients::trivial;
  int a_ = 0;
  int b_ = 0;
};

[[nodiscard]] inline std::string to_token(const HomologyClass& c) {
  if (c.is_zero()) return "0";
  if (c.coefficients() == Coefficients::trivial) {
    if (c.x() && c.y()) return "Z";
    return c.x() ? "X" : "Y";
  }
  switch (c.residue()) {
    case 1: return "+Xca";
    case 2: return "Xab";
    default: return "-Xca";
  }
}

[[nodiscard]] inline std::optional<HomologyClass> parse_class(std::string_view tok, Coefficients tag) {
  if (tok == "0") return HomologyClass::zero(tag);
  if (tag == Coefficients::trivial) {
    if (tok == "X") return HomologyClass::X();
    if (tok == "Y") return HomologyClass::Y();
    if (tok == "Z") return HomologyClass::Z();
    return std::nullopt;
  }
  if (tok == "+Xca" || tok == "Xca" || tok == "Xbc") return HomologyClass::X_ca();
  if (tok == "Xab") return HomologyClass::X_ab();
  if (tok == "-Xca") return -HomologyClass::X_ca();
  return std::nullopt;
}

/// Image of g under abelianization D8 -> Z/2 + Z/2: the X-coordinate is
/// the parity of sign flips and the Y-coordinate records the swap.
[[nodiscard]] constexpr HomologyClass abelianized_class(DihedralElement g) {
  return HomologyClass::trivial(g.flip1 != g.flip2 ? 1 : 0, g.swap ? 1 : 0);
}

}  // namespace equipart

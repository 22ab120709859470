#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "twolocal/errors.hpp"
#include "twolocal/rational.hpp"

namespace twolocal {

enum class AlgebraId { W22, Thin };

inline std::string_view to_string(AlgebraId a) { return a == AlgebraId::W22 ? "w22" : "thin"; }

inline AlgebraId parse_algebra(std::string_view name) {
  if (name == "w22" || name == "W22") return AlgebraId::W22;
  if (name == "thin" || name == "Thin") return AlgebraId::Thin;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "' (expected w22 or thin)");
}

/// Generator families. L and I span W(2,2); E spans the thin algebra.
/// Declaration order is the printing order.
enum class Family { L, I, E };

/// One basis generator: L[m], I[m] (m any integer) or e[n] (n >= 1).
/// The algebra is implied by the family, so a symbol can never disagree with it.
class BasisSymbol {
public:
  constexpr BasisSymbol(Family family, std::int64_t index) : family_(family), index_(index) {
    if (family == Family::E && index < 1) throw std::invalid_argument("thin generator index must be >= 1");
  }

  constexpr Family family() const { return family_; }
  constexpr std::int64_t index() const { return index_; }
  constexpr AlgebraId algebra() const { return family_ == Family::E ? AlgebraId::Thin : AlgebraId::W22; }

  std::string str() const {
    const char* head = family_ == Family::L ? "L[" : (family_ == Family::I ? "I[" : "e[");
    return head + std::to_string(index_) + "]";
  }

  friend constexpr auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
  friend constexpr bool operator==(const BasisSymbol&, const BasisSymbol&) = default;

private:
  Family family_;
  std::int64_t index_;
};

/// Finitely supported linear combination of generators of a single algebra.
/// Zero coefficients are never stored, so structural equality is mathematical
/// equality. The zero element is the empty term map.
class Element {
public:
  using Terms = std::map<BasisSymbol, Rational>;

  explicit Element(AlgebraId algebra) : algebra_(algebra) {}
  Element(BasisSymbol s, Rational c = Rational(1)) : algebra_(s.algebra()) {
    if (!c.is_zero()) terms_.emplace(s, std::move(c));
  }

  static Element zero(AlgebraId algebra) { return Element(algebra); }

  AlgebraId algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const BasisSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Adds c*s in place, dropping the term if it cancels.
  void add_term(const BasisSymbol& s, const Rational& c) {
    if (s.algebra() != algebra_) throw AlgebraMismatch("generator " + s.str() + " is not in " + std::string(to_string(algebra_)));
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Largest |index| over the support (0 for the zero element).
  std::int64_t max_abs_index() const {
    std::int64_t m = 0;
    for (const auto& [s, c] : terms_) m = std::max(m, s.index() < 0 ? -s.index() : s.index());
    return m;
  }

  Element& operator+=(const Element& o) {
    require_same(o);
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    require_same(o);
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
  }

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) { return Element(a.algebra_) - a; }
  friend Element operator*(const Rational& k, const Element& a) {
    Element out(a.algebra_);
    if (k.is_zero()) return out;
    for (const auto& [s, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), s, k * c);
    return out;
  }

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element& a, const Element& b) {
    if (auto c = a.algebra_ <=> b.algebra_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                                  [](const auto& x, const auto& y) {
                                                    if (auto c = x.first <=> y.first; c != 0) return c;
                                                    return x.second <=> y.second;
                                                  });
  }

  void require_same(const Element& o) const {
    if (o.algebra_ != algebra_)
      throw AlgebraMismatch(std::string("cannot combine ") + std::string(to_string(algebra_)) + " and " +
                            std::string(to_string(o.algebra_)) + " elements");
  }

  /// Canonical text, e.g. "2*L[3] - 1/2*I[-1]" or "e[1] + e[2]"; "0" for zero.
  /// A leading negative coefficient is always written out ("-1*L[5]").
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [s, c] : terms_) {
      if (first) {
        if (!c.is_one()) out += c.str() + "*";
        first = false;
      } else {
        out += c.sign() < 0 ? " - " : " + ";
        Rational a = c.abs();
        if (!a.is_one()) out += a.str() + "*";
      }
      out += s.str();
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.str(); }

private:
  AlgebraId algebra_;
  Terms terms_;
};

inline Element L(std::int64_t m, Rational c = Rational(1)) { return Element(BasisSymbol(Family::L, m), std::move(c)); }
inline Element I(std::int64_t m, Rational c = Rational(1)) { return Element(BasisSymbol(Family::I, m), std::move(c)); }
inline Element e(std::int64_t n, Rational c = Rational(1)) { return Element(BasisSymbol(Family::E, n), std::move(c)); }

inline Element add(const Element& a, const Element& b) { return a + b; }
inline Element scale(const Rational& k, const Element& a) { return k * a; }

/// Bracket of two generators, from the structure constants.
///   W(2,2): [L_m,L_n] = (m-n)L_{m+n}, [L_m,I_n] = (m-n)I_{m+n}, [I_m,L_n] = (m-n)I_{m+n}, [I_m,I_n] = 0
///   thin:   [e_1,e_n] = e_{n+1} = -[e_n,e_1] for n >= 2, everything else 0
/// Returns the (possibly absent) single resulting term.
inline std::optional<std::pair<BasisSymbol, Rational>> bracket_basis(const BasisSymbol& a, const BasisSymbol& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("bracket of " + a.str() + " and " + b.str());
  if (a.algebra() == AlgebraId::Thin) {
    if (a.index() == 1 && b.index() >= 2) return std::pair{BasisSymbol(Family::E, b.index() + 1), Rational(1)};
    if (b.index() == 1 && a.index() >= 2) return std::pair{BasisSymbol(Family::E, a.index() + 1), Rational(-1)};
    return std::nullopt;
  }
  if (a.family() == Family::I && b.family() == Family::I) return std::nullopt;
  std::int64_t k = a.index() - b.index();
  if (k == 0) return std::nullopt;
  Family out = (a.family() == Family::L && b.family() == Family::L) ? Family::L : Family::I;
  return std::pair{BasisSymbol(out, a.index() + b.index()), Rational(k)};
}

inline Element bracket(const Element& a, const Element& b) {
  a.require_same(b);
  Element out(a.algebra());
  for (const auto& [sa, ca] : a.terms())
    for (const auto& [sb, cb] : b.terms())
      if (auto t = bracket_basis(sa, sb)) out.add_term(t->first, t->second * ca * cb);
  return out;
}

}  // namespace twolocal

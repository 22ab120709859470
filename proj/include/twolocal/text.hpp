#pragma once

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twolocal/element.hpp"

namespace twolocal {

namespace detail {

class ElementParser {
public:
  ElementParser(std::string_view text, std::optional<AlgebraId> hint) : text_(text), algebra_(hint) {}

  Element parse() {
    skip_ws();
    if (at_end()) fail("empty element");
    if (peek() == '0') {
      // A lone "0" is the zero element; "0*L[1]" etc. are ordinary terms.
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (at_end()) {
        if (!algebra_) fail("cannot infer the algebra of a bare 0");
        return Element(*algebra_);
      }
      pos_ = save;
    }
    terms_.clear();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      // Leading sign before a bare symbol ("-e[1]"); before a number it is the integer's sign.
      std::size_t look = pos_ + 1;
      while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
      if (look < text_.size() && !std::isdigit(static_cast<unsigned char>(text_[look]))) {
        negate = peek() == '-';
        ++pos_;
        skip_ws();
      }
    }
    term(negate);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      term(c == '-');
    }
    if (!algebra_) fail("cannot infer the algebra of a bare 0");
    Element out(*algebra_);
    for (const auto& [s, c] : terms_) out.add_term(s, c);
    return out;
  }

private:
  void term(bool negate) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coeff(1);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      coeff = number();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        std::string den = digits();
        Rational d = Rational::parse(den);
        if (d.is_zero()) fail_at("zero denominator", start);
        coeff /= d;
        skip_ws();
      }
      expect('*');
      skip_ws();
    }
    std::size_t sym_pos = pos_;
    BasisSymbol s = symbol();
    if (!algebra_) algebra_ = s.algebra();
    if (s.algebra() != *algebra_)
      throw AlgebraMismatch("generator " + s.str() + " at position " + std::to_string(sym_pos) + " is not in " +
                            std::string(to_string(*algebra_)));
    terms_.emplace_back(s, negate ? -coeff : coeff);
  }

  BasisSymbol symbol() {
    if (at_end()) fail("expected a generator");
    char head = peek();
    Family fam;
    if (head == 'L') fam = Family::L;
    else if (head == 'I') fam = Family::I;
    else if (head == 'e') fam = Family::E;
    else fail("expected L[..], I[..] or e[..]");
    ++pos_;
    skip_ws();
    expect('[');
    skip_ws();
    std::size_t idx_pos = pos_;
    Rational idx = number();
    skip_ws();
    expect(']');
    std::int64_t index = std::stoll(idx.str());
    if (fam == Family::E && index < 1) fail_at("thin generator index must be >= 1", idx_pos);
    return BasisSymbol(fam, index);
  }

  Rational number() {
    std::size_t start = pos_;
    std::string s;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') s += '-';
      ++pos_;
    }
    s += digits();
    try {
      return Rational::parse(s);
    } catch (const std::invalid_argument&) {
      fail_at("malformed integer", start);
    }
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t p) const { throw ParseError(msg, p); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<AlgebraId> algebra_;
  std::vector<std::pair<BasisSymbol, Rational>> terms_;
};

}  // namespace detail

/// Parses the element grammar
///   element := term (('+'|'-') term)* | '0'
///   term    := [coeff '*'] symbol
///   coeff   := integer | integer '/' positive-integer
///   symbol  := 'L[' integer ']' | 'I[' integer ']' | 'e[' positive-integer ']'
/// Whitespace is insignificant and a leading '-' before a bare symbol is accepted.
/// `hint` fixes the algebra; without it the algebra comes from the first
/// generator, and a bare "0" is rejected. Repeated generators are summed.
inline Element parse_element(std::string_view text, std::optional<AlgebraId> hint = std::nullopt) {
  return detail::ElementParser(text, hint).parse();
}

/// Same as Element::str(); the pair round-trips exactly.
inline std::string format_element(const Element& x) { return x.str(); }

}  // namespace twolocal

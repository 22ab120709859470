#pragma once

// Probe files (one element per line) and value-table files
// ("<element> => <element>" per line). Blank lines and lines starting with
// '#' are skipped.

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twolocal/element.hpp"
#include "twolocal/errors.hpp"
#include "twolocal/text.hpp"

namespace twolocal {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    line = trim(line);
    if (!line.empty() && line.front() != '#') out.emplace_back(no, line);
  }
  return out;
}

/// Algebra named by the generator symbols in `text`, if any.
inline std::optional<AlgebraId> algebra_from_symbols(const std::string& text) {
  const bool w22 = text.find("L[") != std::string::npos || text.find("I[") != std::string::npos;
  const bool thin = text.find("e[") != std::string::npos;
  if (w22 && thin) throw AlgebraMismatch("input mixes W(2,2) and thin generators");
  if (w22) return AlgebraId::W22;
  if (thin) return AlgebraId::Thin;
  return std::nullopt;
}

inline Element parse_line_element(const std::string& text, AlgebraId alg, std::size_t line_no) {
  try {
    return parse_element(text, alg);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.message(), e.position());
  }
}

inline std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Reads one element per line. The algebra is `hint` or inferred from the symbols.
inline std::vector<Element> read_probes(std::istream& in, std::optional<AlgebraId> hint = std::nullopt) {
  std::istringstream text(detail::slurp(in));
  const auto alg = hint ? hint : detail::algebra_from_symbols(text.str());
  if (!alg) throw ParseError("cannot infer the algebra of the probe file", 0);
  std::vector<Element> out;
  for (const auto& [no, line] : detail::content_lines(text)) out.push_back(detail::parse_line_element(line, *alg, no));
  return out;
}

struct ValueTable {
  AlgebraId algebra;
  std::map<Element, Element> values;
};

/// Reads "<element> => <element>" lines; duplicate keys must agree.
inline ValueTable read_value_table(std::istream& in, std::optional<AlgebraId> hint = std::nullopt) {
  std::istringstream text(detail::slurp(in));
  const auto alg = hint ? hint : detail::algebra_from_symbols(text.str());
  if (!alg) throw ParseError("cannot infer the algebra of the value table", 0);
  ValueTable table{*alg, {}};
  for (const auto& [no, line] : detail::content_lines(text)) {
    const auto arrow = line.find("=>");
    if (arrow == std::string::npos) throw ParseError("line " + std::to_string(no) + ": expected '<element> => <element>'", 0);
    Element x = detail::parse_line_element(detail::trim(line.substr(0, arrow)), *alg, no);
    Element v = detail::parse_line_element(detail::trim(line.substr(arrow + 2)), *alg, no);
    auto [it, fresh] = table.values.emplace(x, v);
    if (!fresh && it->second != v)
      throw ParseError("line " + std::to_string(no) + ": conflicting values for " + x.str(), arrow);
  }
  return table;
}

}  // namespace twolocal

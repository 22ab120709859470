#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twolocal/derivations.hpp"
#include "twolocal/element.hpp"
#include "twolocal/errors.hpp"
#include "twolocal/linear.hpp"

namespace twolocal {

// ---------------------------------------------------------------------------
// The non-additive part of a thin-algebra 2-local map.

/// Parameters of Omega_{theta,lambda}^{(q,m)}. `theta[0]` is theta_2, so
/// m = theta.size() + 1. An empty theta is the zero shift.
struct OmegaParams {
  std::vector<Rational> theta;
  Rational lambda;
  std::int64_t q = 3;

  std::int64_t m() const { return static_cast<std::int64_t>(theta.size()) + 1; }

  void validate() const {
    if (q <= 2) throw std::invalid_argument("omega index q must be > 2, got " + std::to_string(q));
  }

  /// Trailing zeros of theta trimmed; q is reset to 3 when lambda = 0.
  OmegaParams canonical() const {
    OmegaParams p = *this;
    while (!p.theta.empty() && p.theta.back().is_zero()) p.theta.pop_back();
    if (p.lambda.is_zero()) p.q = 3;
    return p;
  }

  friend bool operator==(const OmegaParams&, const OmegaParams&) = default;
};

/// For x = sum_i k_i e_i:
///   k_1 != 0         -> sum_{i>=2} sum_{j=2..m} k_i theta_j e_{i+j-2}
///   x == k_q e_q     -> lambda k_q e_q
///   otherwise        -> 0
inline Element omega_apply(const OmegaParams& p, const Element& x) {
  p.validate();
  if (x.algebra() != AlgebraId::Thin) throw AlgebraMismatch("omega map acts on thin elements only");
  Element out(AlgebraId::Thin);
  if (x.is_zero()) return out;
  const BasisSymbol e1(Family::E, 1);
  if (!x.coeff(e1).is_zero()) {
    for (const auto& [s, k] : x.terms()) {
      if (s.index() < 2) continue;
      for (std::size_t t = 0; t < p.theta.size(); ++t)
        out.add_term(BasisSymbol(Family::E, s.index() + static_cast<std::int64_t>(t)), k * p.theta[t]);
    }
    return out;
  }
  if (x.size() == 1 && x.terms().begin()->first.index() == p.q) return p.lambda * x;
  return out;
}

/// delta + Omega: the general shape of a 2-local derivation of the thin algebra.
struct ThinTwoLocalMap {
  ThinDerivation delta;
  OmegaParams omega;

  ThinTwoLocalMap canonical() const { return {delta.canonical(), omega.canonical()}; }

  friend bool operator==(const ThinTwoLocalMap&, const ThinTwoLocalMap&) = default;
};

inline Element evaluate(const ThinTwoLocalMap& m, const Element& x) {
  return apply(m.delta, x) + omega_apply(m.omega, x);
}

// ---------------------------------------------------------------------------
// Black-box maps.

/// Deterministic map Element -> Element over one algebra. Holds a closed form
/// (derivation, two-local map, arbitrary function) or a finite value table.
class MapOracle {
public:
  using Fn = std::function<Element(const Element&)>;

  MapOracle(AlgebraId algebra, Fn fn, std::string description = "function")
      : algebra_(algebra), fn_(std::move(fn)), description_(std::move(description)) {}

  static MapOracle from(const W22Derivation& d) {
    return MapOracle(AlgebraId::W22, [d](const Element& x) { return apply(d, x); }, "w22 derivation");
  }
  static MapOracle from(const ThinDerivation& d) {
    return MapOracle(AlgebraId::Thin, [d](const Element& x) { return apply(d, x); }, "thin derivation");
  }
  static MapOracle from(const ThinTwoLocalMap& m) {
    return MapOracle(AlgebraId::Thin, [m](const Element& x) { return evaluate(m, x); }, "thin two-local map");
  }
  /// Value table; querying an element not in the table throws UnknownProbe.
  static MapOracle table(AlgebraId algebra, std::map<Element, Element> values) {
    for (const auto& [k, v] : values) {
      if (k.algebra() != algebra || v.algebra() != algebra)
        throw AlgebraMismatch("value table entry " + k.str() + " => " + v.str() + " is not in " +
                              std::string(to_string(algebra)));
    }
    auto shared = std::make_shared<const std::map<Element, Element>>(std::move(values));
    return MapOracle(
        algebra,
        [shared](const Element& x) {
          auto it = shared->find(x);
          if (it == shared->end()) throw UnknownProbe("value table has no entry for " + x.str());
          return it->second;
        },
        "value table");
  }

  AlgebraId algebra() const { return algebra_; }
  const std::string& description() const { return description_; }

  Element operator()(const Element& x) const {
    if (x.algebra() != algebra_) throw AlgebraMismatch("map over " + std::string(to_string(algebra_)) + " evaluated at " + x.str());
    Element v = fn_(x);
    if (v.algebra() != algebra_) throw AlgebraMismatch("map returned an element of the wrong algebra");
    return v;
  }

private:
  AlgebraId algebra_;
  Fn fn_;
  std::string description_;
};

inline Element evaluate(const MapOracle& m, const Element& x) { return m(x); }

// ---------------------------------------------------------------------------
// Witness derivations.

/// Windowed parameterization of all derivations:
///   W(2,2): ad(sum_{|k|<=N} a_k L_k + b_k I_k) + lambda D
///   thin:   alpha_1..alpha_N, beta_2..beta_N
class WitnessFamily {
public:
  WitnessFamily(AlgebraId algebra, std::int64_t window) : algebra_(algebra), n_(window) {
    if (window < 1) throw std::invalid_argument("witness window must be >= 1");
    if (algebra == AlgebraId::W22) {
      for (std::int64_t k = -n_; k <= n_; ++k) labels_.push_back("a_" + sub(k));
      for (std::int64_t k = -n_; k <= n_; ++k) labels_.push_back("b_" + sub(k));
      labels_.push_back("lambda");
    } else {
      for (std::int64_t i = 1; i <= n_; ++i) labels_.push_back("alpha_" + std::to_string(i));
      for (std::int64_t i = 2; i <= n_; ++i) labels_.push_back("beta_" + std::to_string(i));
    }
  }

  AlgebraId algebra() const { return algebra_; }
  std::int64_t window() const { return n_; }
  std::size_t num_params() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  std::size_t a(std::int64_t k) const { return w22_index(k); }
  std::size_t b(std::int64_t k) const { return static_cast<std::size_t>(2 * n_ + 1) + w22_index(k); }
  std::size_t lambda() const {
    require(AlgebraId::W22);
    return static_cast<std::size_t>(4 * n_ + 2);
  }
  std::size_t alpha(std::int64_t i) const {
    require(AlgebraId::Thin);
    if (i < 1 || i > n_) throw std::out_of_range("alpha index outside the witness window");
    return static_cast<std::size_t>(i - 1);
  }
  std::size_t beta(std::int64_t i) const {
    require(AlgebraId::Thin);
    if (i < 2 || i > n_) throw std::out_of_range("beta index outside the witness window");
    return static_cast<std::size_t>(n_ + i - 2);
  }

  bool fits(const Element& x) const {
    if (x.algebra() != algebra_) throw AlgebraMismatch("element " + x.str() + " is not in " + std::string(to_string(algebra_)));
    return x.max_abs_index() <= n_;
  }

  Derivation instantiate(const std::vector<Rational>& v) const {
    if (v.size() != num_params()) throw std::invalid_argument("parameter vector has the wrong length");
    if (algebra_ == AlgebraId::W22) {
      W22Derivation d;
      for (std::int64_t k = -n_; k <= n_; ++k) {
        d.inner.add_term(BasisSymbol(Family::L, k), v[a(k)]);
        d.inner.add_term(BasisSymbol(Family::I, k), v[b(k)]);
      }
      d.outer_coeff = v[lambda()];
      return d;
    }
    ThinDerivation d;
    d.alpha.assign(v.begin(), v.begin() + n_);
    d.beta.assign(v.begin() + n_, v.end());
    return d.canonical();
  }

private:
  static std::string sub(std::int64_t k) { return k < 0 ? "{" + std::to_string(k) + "}" : std::to_string(k); }
  void require(AlgebraId a) const {
    if (algebra_ != a) throw std::logic_error("parameter does not exist in this witness family");
  }
  std::size_t w22_index(std::int64_t k) const {
    require(AlgebraId::W22);
    if (k < -n_ || k > n_) throw std::out_of_range("inner index outside the witness window");
    return static_cast<std::size_t>(k + n_);
  }

  AlgebraId algebra_;
  std::int64_t n_;
  std::vector<std::string> labels_;
};

/// A solved witness: the parameter vector and the derivation it instantiates.
struct WitnessParams {
  AlgebraId algebra;
  std::int64_t window;
  std::vector<std::string> labels;
  std::vector<Rational> values;
  Derivation derivation;

  std::vector<std::pair<std::string, Rational>> nonzero() const {
    std::vector<std::pair<std::string, Rational>> out;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (!values[i].is_zero()) out.emplace_back(labels[i], values[i]);
    return out;
  }
};

/// Linear system "derivation(x) = vx" over the parameters of a WitnessFamily,
/// with optional extra pins and ties between parameters.
class WitnessProblem {
public:
  WitnessProblem(AlgebraId algebra, std::int64_t window) : family_(algebra, window), sys_(family_.labels()) {}

  const WitnessFamily& family() const { return family_; }
  const LinearSystem& system() const { return sys_; }

  /// Requires d(x) = vx. Throws WindowTooSmall if x or vx leaves the window.
  WitnessProblem& match(const Element& x, const Element& vx) {
    x.require_same(vx);
    if (!family_.fits(x) || !family_.fits(vx))
      throw WindowTooSmall("window " + std::to_string(family_.window()) + " cannot hold " + x.str() + " => " + vx.str());
    std::map<BasisSymbol, std::map<std::size_t, Rational>> eqs;
    std::vector<Rational> unit(family_.num_params());
    for (std::size_t p = 0; p < unit.size(); ++p) {
      unit[p] = Rational(1);
      Element img = twolocal::apply(family_.instantiate(unit), x);
      unit[p] = Rational(0);
      for (const auto& [s, c] : img.terms()) eqs[s][p] += c;
    }
    for (const auto& [s, c] : vx.terms()) eqs.try_emplace(s);
    for (const auto& [s, row] : eqs) sys_.add_row(row, vx.coeff(s));
    return *this;
  }

  WitnessProblem& pin(std::size_t param, Rational value = Rational(0)) {
    sys_.pin(param, std::move(value));
    return *this;
  }

  /// Requires param_a = param_b.
  WitnessProblem& tie(std::size_t param_a, std::size_t param_b) {
    sys_.add_row({{param_a, Rational(1)}, {param_b, Rational(-1)}}, Rational(0));
    return *this;
  }

  SolveResult solve_system() const { return twolocal::solve(sys_); }

  /// The solver's particular solution, or nullopt if no derivation in the
  /// windowed family satisfies the constraints.
  std::optional<WitnessParams> solve() const {
    SolveResult r = solve_system();
    if (!r.feasible()) return std::nullopt;
    return WitnessParams{family_.algebra(), family_.window(), family_.labels(), *r.particular,
                         family_.instantiate(*r.particular)};
  }

private:
  WitnessFamily family_;
  LinearSystem sys_;
};

/// A derivation d with d(x) = vx and d(y) = vy, or nullopt.
inline std::optional<WitnessParams> witness_find(AlgebraId algebra, const Element& x, const Element& vx, const Element& y,
                                                 const Element& vy, std::int64_t window) {
  if (x.algebra() != algebra || y.algebra() != algebra) throw AlgebraMismatch("witness inputs are not in the requested algebra");
  WitnessProblem prob(algebra, window);
  prob.match(x, vx).match(y, vy);
  return prob.solve();
}

// ---------------------------------------------------------------------------
// Checker reports.

struct Counterexample {
  /// Named inputs in display order, e.g. {"x", "e[1]"}, {"k", "2"}.
  std::vector<std::pair<std::string, std::string>> input;
  Element lhs;
  Element rhs;
};

struct PairWitness {
  Element x;
  Element y;
  std::optional<WitnessParams> witness;
};

/// Common result of the probe-based checkers.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<Element> probes;
  std::vector<Counterexample> counterexamples;
  std::vector<PairWitness> witnesses;
};

/// Tries every unordered pair of distinct probes: (x, map(x), y, map(y)) must
/// admit a witness. Only the listed probes are examined.
template <class Map>
CheckReport is_two_local_on_set(const Map& map, const std::vector<Element>& probes, std::int64_t window) {
  CheckReport rep{"two_local", true, probes, {}, {}};
  if (probes.empty()) return rep;
  const AlgebraId alg = probes.front().algebra();
  std::vector<Element> values;
  values.reserve(probes.size());
  for (const auto& x : probes) values.push_back(evaluate_map(map, x));
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = i + 1; j < probes.size(); ++j) {
      auto w = witness_find(alg, probes[i], values[i], probes[j], values[j], window);
      if (!w) {
        rep.pass = false;
        rep.counterexamples.push_back({{{"x", probes[i].str()}, {"y", probes[j].str()}}, values[i], values[j]});
      }
      rep.witnesses.push_back({probes[i], probes[j], std::move(w)});
    }
  }
  return rep;
}

/// map(k*x) == k*map(x) on every sample.
template <class Map>
CheckReport check_homogeneity(const Map& map, const std::vector<std::pair<Rational, Element>>& samples) {
  CheckReport rep{"homogeneity", true, {}, {}, {}};
  for (const auto& [k, x] : samples) {
    rep.probes.push_back(x);
    Element lhs = evaluate_map(map, k * x);
    Element rhs = k * evaluate_map(map, x);
    if (lhs != rhs) {
      rep.pass = false;
      rep.counterexamples.push_back({{{"k", k.str()}, {"x", x.str()}}, std::move(lhs), std::move(rhs)});
    }
  }
  return rep;
}

/// Pairs with map(x+y) != map(x)+map(y); lhs is map(x+y).
template <class Map>
CheckReport check_additivity(const Map& map, const std::vector<std::pair<Element, Element>>& samples) {
  CheckReport rep{"additivity", true, {}, {}, {}};
  for (const auto& [x, y] : samples) {
    rep.probes.push_back(x);
    rep.probes.push_back(y);
    Element lhs = evaluate_map(map, x + y);
    Element rhs = evaluate_map(map, x) + evaluate_map(map, y);
    if (lhs != rhs) {
      rep.pass = false;
      rep.counterexamples.push_back({{{"x", x.str()}, {"y", y.str()}}, std::move(lhs), std::move(rhs)});
    }
  }
  return rep;
}

}  // namespace twolocal

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twolocal/derivations.hpp"
#include "twolocal/element.hpp"
#include "twolocal/linear.hpp"

namespace twolocal {

/// Finite truncation used to compute derivations of an infinite-dimensional
/// algebra. Unknowns are the images of the core generators, expanded over the
/// image span; Leibniz is imposed for every core pair whose bracket stays in
/// the core.
///   W(2,2): core |i| <= N (L and I), image span |k| <= 2N, interior |i| <= ceil(N/2)
///   thin:   core 1..N,               image span 1..2N,     interior 1..ceil(N/2)+1
class DerivationWindow {
public:
  DerivationWindow(AlgebraId algebra, std::int64_t n) : algebra_(algebra), n_(n) {
    if (n < 3) throw std::invalid_argument("derivation window must be >= 3");
    const std::int64_t half = (n + 1) / 2;
    if (algebra == AlgebraId::W22) {
      core_ = {-n, n};
      span_ = {-2 * n, 2 * n};
      interior_ = {-half, half};
    } else {
      core_ = {1, n};
      span_ = {1, 2 * n};
      interior_ = {1, half + 1};
    }
    core_gens_ = generators(core_);
    span_gens_ = generators(span_);
    for (std::size_t i = 0; i < core_gens_.size(); ++i) core_pos_.emplace(core_gens_[i], i);
    for (std::size_t i = 0; i < span_gens_.size(); ++i) span_pos_.emplace(span_gens_[i], i);
  }

  AlgebraId algebra() const { return algebra_; }
  std::int64_t size() const { return n_; }
  IndexRange core() const { return core_; }
  IndexRange span() const { return span_; }
  IndexRange interior() const { return interior_; }

  /// Generators with index in `r`, in printing order (L before I, ascending).
  std::vector<BasisSymbol> generators(IndexRange r) const {
    std::vector<BasisSymbol> out;
    if (algebra_ == AlgebraId::W22) {
      for (Family f : {Family::L, Family::I})
        for (std::int64_t i = r.lo; i <= r.hi; ++i) out.emplace_back(f, i);
    } else {
      for (std::int64_t i = std::max<std::int64_t>(r.lo, 1); i <= r.hi; ++i) out.emplace_back(Family::E, i);
    }
    return out;
  }

  const std::vector<BasisSymbol>& core_generators() const { return core_gens_; }
  const std::vector<BasisSymbol>& span_generators() const { return span_gens_; }
  std::size_t num_unknowns() const { return core_gens_.size() * span_gens_.size(); }

  std::size_t var(const BasisSymbol& g, const BasisSymbol& b) const {
    return core_pos_.at(g) * span_gens_.size() + span_pos_.at(b);
  }

  bool in_core(const BasisSymbol& s) const { return core_.contains(s.index()); }

  /// Leibniz constraints, one row per (ordered core pair g < h, output generator).
  LinearSystem leibniz_system() const {
    std::vector<std::string> labels;
    labels.reserve(num_unknowns());
    for (const auto& g : core_gens_)
      for (const auto& b : span_gens_) labels.push_back("d(" + g.str() + ")." + b.str());
    LinearSystem sys(std::move(labels));

    for (std::size_t gi = 0; gi < core_gens_.size(); ++gi) {
      for (std::size_t hi = gi + 1; hi < core_gens_.size(); ++hi) {
        const BasisSymbol& g = core_gens_[gi];
        const BasisSymbol& h = core_gens_[hi];
        auto gh = bracket_basis(g, h);
        if (gh && !in_core(gh->first)) continue;
        std::map<BasisSymbol, std::map<std::size_t, Rational>> eqs;
        auto acc = [&](const BasisSymbol& out, std::size_t v, const Rational& c) {
          auto& slot = eqs[out][v];
          slot += c;
        };
        for (const auto& b : span_gens_) {
          if (gh) acc(b, var(gh->first, b), gh->second);
          if (auto t = bracket_basis(b, h)) acc(t->first, var(g, b), -t->second);
          if (auto t = bracket_basis(g, b)) acc(t->first, var(h, b), -t->second);
        }
        for (auto& [out, row] : eqs) {
          std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
          if (!row.empty()) sys.add_row(row, Rational(0));
        }
      }
    }
    return sys;
  }

  GenericDerivation to_derivation(const std::vector<Rational>& v) const {
    GenericDerivation d{algebra_, core_, {}};
    for (const auto& g : core_gens_) {
      Element img(algebra_);
      for (const auto& b : span_gens_) img.add_term(b, v[var(g, b)]);
      if (!img.is_zero()) d.images.emplace(g, std::move(img));
    }
    return d;
  }

  /// Coefficients of the images of the generators in `gens` over the image span.
  /// Throws WindowOverflow if an image leaves the span.
  template <class Map>
  std::vector<Rational> restrict(const Map& d, const std::vector<BasisSymbol>& gens) const {
    std::vector<Rational> out;
    out.reserve(gens.size() * span_gens_.size());
    for (const auto& g : gens) {
      Element img = evaluate_map(d, Element(g));
      for (const auto& [s, c] : img.terms())
        if (!span_.contains(s.index())) throw WindowOverflow("image of " + g.str() + " leaves the image span");
      for (const auto& b : span_gens_) out.push_back(img.coeff(b));
    }
    return out;
  }

private:
  AlgebraId algebra_;
  std::int64_t n_;
  IndexRange core_{0, 0}, span_{0, 0}, interior_{0, 0};
  std::vector<BasisSymbol> core_gens_, span_gens_;
  std::map<BasisSymbol, std::size_t> core_pos_, span_pos_;
};

struct DerivationSpace {
  AlgebraId algebra = AlgebraId::W22;
  std::int64_t window = 0;
  IndexRange interior{0, 0};
  std::size_t num_unknowns = 0;
  std::size_t num_equations = 0;
  std::vector<GenericDerivation> basis;
  /// Rank of the interior restrictions of ad(g), g a core generator.
  std::size_t inner_dim = 0;
  /// Dimension of (interior restrictions of the solution space + inner) / inner.
  std::size_t outer_dim = 0;
  /// W(2,2) only: first basis vector outside the inner span, rescaled so that on
  /// the interior it equals D plus an inner derivation.
  std::optional<GenericDerivation> outer_representative;
  /// W(2,2) only: every interior restriction lies in span(inner, D).
  bool explained_by_inner_and_D = false;
};

namespace detail {

inline bool in_span(const std::vector<std::vector<Rational>>& spanning, const std::vector<Rational>& v, std::size_t dim) {
  auto with = spanning;
  with.push_back(v);
  return vector_rank(with, dim) == vector_rank(spanning, dim);
}

}  // namespace detail

/// Derivations of `algebra` on window N, with inner/outer bookkeeping done on
/// the interior where no Leibniz constraint is missing.
inline DerivationSpace solve_derivation_space(AlgebraId algebra, std::int64_t n) {
  DerivationWindow win(algebra, n);
  LinearSystem sys = win.leibniz_system();
  SolveResult res = solve(sys);

  DerivationSpace out;
  out.algebra = algebra;
  out.window = n;
  out.interior = win.interior();
  out.num_unknowns = sys.num_vars();
  out.num_equations = sys.rows().size();
  for (const auto& v : res.nullspace) out.basis.push_back(win.to_derivation(v));

  const auto interior_gens = win.generators(win.interior());
  const std::size_t dim = interior_gens.size() * win.span_generators().size();

  std::vector<std::vector<Rational>> inner;
  for (const auto& g : win.core_generators()) {
    Element a(g);
    inner.push_back(win.restrict([&](const Element& x) { return bracket(a, x); }, interior_gens));
  }
  out.inner_dim = vector_rank(inner, dim);

  std::vector<std::vector<Rational>> sols;
  for (const auto& d : out.basis) sols.push_back(win.restrict(d, interior_gens));
  auto all = inner;
  all.insert(all.end(), sols.begin(), sols.end());
  out.outer_dim = vector_rank(all, dim) - out.inner_dim;

  if (algebra == AlgebraId::W22) {
    auto known = inner;
    known.push_back(win.restrict([](const Element& x) { return outer_D(x); }, interior_gens));
    out.explained_by_inner_and_D = true;
    for (const auto& s : sols)
      if (!detail::in_span(known, s, dim)) out.explained_by_inner_and_D = false;

    // Express the first non-inner solution as inner + mu*D on the interior.
    for (std::size_t k = 0; k < sols.size(); ++k) {
      if (detail::in_span(inner, sols[k], dim)) continue;
      LinearSystem fit(inner.size() + 1);
      const auto& dvec = known.back();
      for (std::size_t c = 0; c < dim; ++c) {
        std::map<std::size_t, Rational> row;
        for (std::size_t j = 0; j < inner.size(); ++j)
          if (!inner[j][c].is_zero()) row[j] = inner[j][c];
        if (!dvec[c].is_zero()) row[inner.size()] = dvec[c];
        if (row.empty() && sols[k][c].is_zero()) continue;
        fit.add_row(row, sols[k][c]);
      }
      SolveResult r = solve(fit);
      if (r.feasible() && !(*r.particular)[inner.size()].is_zero()) {
        Rational inv = (*r.particular)[inner.size()].reciprocal();
        GenericDerivation rep = out.basis[k];
        for (auto& [g, img] : rep.images) img = inv * img;
        out.outer_representative = std::move(rep);
      }
      break;
    }
  }
  return out;
}

/// Checks that a windowed thin derivation has the closed form on the interior:
/// image(e_j) has no terms below e_j, and after removing the diagonal
/// (j-2)*alpha_1, the coefficient of e_{i+j-2} does not depend on j.
/// Returns an empty string on success, else a description of the first mismatch.
inline std::string shift_form_violation(const GenericDerivation& d, IndexRange interior, IndexRange span) {
  if (d.algebra != AlgebraId::Thin) throw AlgebraMismatch("shift form applies to thin derivations");
  const Rational a1 = d.image(BasisSymbol(Family::E, 1)).coeff(BasisSymbol(Family::E, 1));
  const std::int64_t i_max = span.hi + 2 - interior.hi;
  auto shifted = [&](std::int64_t j) {
    Element img = d.image(BasisSymbol(Family::E, j));
    std::vector<Rational> v;
    for (std::int64_t i = 2; i <= i_max; ++i) {
      Rational c = img.coeff(BasisSymbol(Family::E, i + j - 2));
      if (i == 2) c -= Rational(j - 2) * a1;
      v.push_back(std::move(c));
    }
    return v;
  };
  const auto reference = shifted(2);
  for (std::int64_t j = 2; j <= interior.hi; ++j) {
    Element img = d.image(BasisSymbol(Family::E, j));
    for (const auto& [s, c] : img.terms())
      if (s.index() < j) return "image of e[" + std::to_string(j) + "] has a term below e[" + std::to_string(j) + "]: " + img.str();
    if (shifted(j) != reference) return "image of e[" + std::to_string(j) + "] is not a shift of image of e[2]";
  }
  return {};
}

}  // namespace twolocal

// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Tilting and τ-tilting predicates, the torsion pair (Fac T, Sub τT),
// minimal right add T-approximations and add T-resolutions.
//
// Statements quantifying over all i >= 1 are checked for i <= pd T when
// the projective dimension is known exactly (Ext vanishes above it) and
// otherwise up to a caller-supplied bound, in which case a positive answer
// is reported as verified_up_to_bound rather than true.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taulab/algebra.hpp"
#include "taulab/homological.hpp"
#include "taulab/module_ops.hpp"
#include "taulab/representation.hpp"
#include "taulab/ring.hpp"

namespace taulab {

inline constexpr std::size_t kDefaultExtBound = 12;

enum class Verdict { yes, no, unknown_at_bound, verified_up_to_bound };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    case Verdict::unknown_at_bound:
      return "unknown_at_bound";
    case Verdict::verified_up_to_bound:
      return "verified_up_to_bound";
  }
  return "unknown_at_bound";
}

inline Verdict verdict(bool b) { return b ? Verdict::yes : Verdict::no; }

/// Definite answers only; the bounded outcomes are neither.
inline std::optional<bool> definite(Verdict v) {
  if (v == Verdict::yes) {
    return true;
  }
  if (v == Verdict::no) {
    return false;
  }
  return std::nullopt;
}

inline bool is_tau_rigid(const Representation& t) {
  return hom_dim(t, ar_translate(t)) == 0;
}

inline bool is_tau_tilting(const Representation& t) {
  return summand_type_count(t) == t.algebra()->vertex_count() &&
         is_tau_rigid(t);
}

/// The same representation viewed over a vertex quotient; vertices and
/// arrows are matched by name and everything killed must be zero.
inline Representation restrict_to_quotient(const Representation& m,
                                           const AlgebraPtr& quotient) {
  const auto& from = m.algebra()->quiver();
  const auto& to = quotient->quiver();
  std::vector<std::size_t> dims;
  std::size_t kept = 0;
  for (std::size_t v = 0; v < to.vertex_count(); ++v) {
    const auto src = from.find_vertex(to.vertex(v));
    if (!src) {
      throw Error("quotient vertex '" + to.vertex(v) + "' is unknown");
    }
    dims.push_back(m.dim(*src));
    kept += m.dim(*src);
  }
  if (kept != m.total_dim()) {
    throw Error("module does not vanish on the killed vertices");
  }
  std::vector<Matrix> maps;
  for (const auto& a : to.arrows()) {
    const auto src = from.find_arrow(a.name);
    if (!src) {
      throw Error("quotient arrow '" + a.name + "' is unknown");
    }
    maps.push_back(m.map(*src));
  }
  return {quotient, std::move(dims), std::move(maps)};
}

struct SupportWitness {
  bool holds = false;
  std::vector<bool> killed;   // vertex set of the idempotent e
  bool zero_module = false;   // flagged convention: 0 counts as support τ-tilting
};

/// Searches every vertex set S on which t vanishes, S a proper subset when
/// t is nonzero, for t τ-tilting over Λ/(e_S).
inline SupportWitness support_tau_tilting_witness(const Representation& t) {
  const AlgebraPtr& a = t.algebra();
  const std::size_t n = a->vertex_count();
  if (t.is_zero()) {
    return {true, std::vector<bool>(n, true), true};
  }
  std::vector<std::size_t> zero_support;
  for (std::size_t v = 0; v < n; ++v) {
    if (t.dim(v) == 0) {
      zero_support.push_back(v);
    }
  }
  const std::size_t count = summand_type_count(t);
  const std::size_t subsets = std::size_t{1} << zero_support.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    std::vector<bool> killed(n, false);
    std::size_t size = 0;
    for (std::size_t i = 0; i < zero_support.size(); ++i) {
      if ((mask >> i) & 1U) {
        killed[zero_support[i]] = true;
        ++size;
      }
    }
    if (size == n || count != n - size) {
      continue;  // the summand count is the same over every quotient
    }
    const auto q = cached_vertex_quotient(a, killed);
    if (is_tau_rigid(restrict_to_quotient(t, q))) {
      return {true, std::move(killed), false};
    }
  }
  return {false, {}, false};
}

inline bool is_support_tau_tilting(const Representation& t) {
  return support_tau_tilting_witness(t).holds;
}

/// Ext^i(t, m) for i in [1, pd t] when pd is exact, else [1, bound].
/// Returns the first nonvanishing degree, if any, and whether the range
/// checked was the whole relevant range.
struct ExtScan {
  std::optional<std::size_t> first_nonzero;
  bool complete = true;
};

inline ExtScan scan_ext(const Representation& t, const Representation& m,
                        const PdResult& pd, std::size_t bound) {
  const std::size_t top = pd.exact ? *pd.exact : bound;
  const auto r = projective_resolution(t, top + 2);
  for (std::size_t i = 1; i <= top; ++i) {
    if (ext_dim_from(r, m, i) != 0) {
      return {i, true};
    }
  }
  return {std::nullopt, pd.is_exact()};
}

/// Ext^i(t, t) = 0 for all i >= 1.
inline Verdict self_orthogonal(const Representation& t,
                               std::size_t ext_bound = kDefaultExtBound) {
  const auto pd = projective_dimension(t, t.algebra()->max_length());
  const auto scan = scan_ext(t, t, pd, ext_bound);
  if (scan.first_nonzero) {
    return Verdict::no;
  }
  return scan.complete ? Verdict::yes : Verdict::verified_up_to_bound;
}

/// pd <= 1 and Ext^1(t, t) = 0; `with_count` adds |t| = |Λ|.
inline Verdict tilting_verdict(const Representation& t, bool with_count) {
  const auto pd = projective_dimension(t, t.algebra()->max_length());
  if (!pd.exact) {
    // A lower bound above 1 already decides condition (1).
    return pd.lower_bound > 1 ? Verdict::no : Verdict::unknown_at_bound;
  }
  if (*pd.exact > 1) {
    return Verdict::no;
  }
  if (*pd.exact == 1 && ext_dim(t, t, 1) != 0) {
    return Verdict::no;
  }
  if (with_count && summand_type_count(t) != t.algebra()->vertex_count()) {
    return Verdict::no;
  }
  return Verdict::yes;
}

inline Verdict is_tilting(const Representation& t) {
  return tilting_verdict(t, true);
}

inline Verdict is_partial_tilting(const Representation& t) {
  return tilting_verdict(t, false);
}

struct FacCriterionResult {
  Verdict verdict = Verdict::no;
  bool count_matches = false;
  std::optional<std::size_t> witness_module;  // index into the carrier
  std::optional<std::size_t> witness_degree;
};

/// |t| = |Λ| and Ext^i(t, M) = 0 for every carrier module M in Fac t.
inline FacCriterionResult is_tilting_via_fac_criterion(
    const Representation& t, const std::vector<Representation>& indecs,
    std::size_t ext_bound = kDefaultExtBound) {
  FacCriterionResult out;
  out.count_matches =
      summand_type_count(t) == t.algebra()->vertex_count();
  if (!out.count_matches) {
    return out;
  }
  const auto pd = projective_dimension(t, t.algebra()->max_length());
  const std::size_t top =
      pd.exact ? std::min(*pd.exact, ext_bound) : ext_bound;
  const auto r = projective_resolution(t, top + 2);
  for (std::size_t k = 0; k < indecs.size(); ++k) {
    if (!fac_membership(t, indecs[k])) {
      continue;
    }
    for (std::size_t i = 1; i <= top; ++i) {
      if (ext_dim_from(r, indecs[k], i) != 0) {
        out.witness_module = k;
        out.witness_degree = i;
        return out;
      }
    }
  }
  out.verdict = pd.exact && *pd.exact <= ext_bound
                    ? Verdict::yes
                    : Verdict::verified_up_to_bound;
  return out;
}

struct TorsionDecomposition {
  Representation module;
  Submodule torsion;      // tM, the trace of T
  Quotient torsion_free;  // fM = M / tM
  bool exact = false;     // 0 -> tM -> M -> fM -> 0 checked
  // Filled only for τ-tilting T: tM ∈ Fac T and fM ∈ Sub τT.
  std::optional<bool> torsion_in_fac;
  std::optional<bool> free_in_sub;
};

inline TorsionDecomposition torsion_decomposition(
    const Representation& t, const Representation& m,
    std::optional<bool> tau_tilting = std::nullopt) {
  auto tm = trace_submodule(t, m);
  std::vector<Subspace> subs;
  for (const auto& c : tm.inclusion.components()) {
    subs.push_back(column_space(c));
  }
  auto fm = quotient_by_submodule(m, subs);
  bool exact = tm.inclusion.is_injective() && fm.projection.is_surjective() &&
               fm.projection.after(tm.inclusion).is_zero();
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    exact = exact && tm.module.dim(v) + fm.module.dim(v) == m.dim(v);
  }
  TorsionDecomposition out{m, std::move(tm), std::move(fm), exact, {}, {}};
  if (!tau_tilting) {
    tau_tilting = is_tau_tilting(t);
  }
  if (*tau_tilting) {
    out.torsion_in_fac = fac_membership(t, out.torsion.module);
    out.free_in_sub = sub_membership(out.torsion_free.module, ar_translate(t));
  }
  return out;
}

struct AddApproximation {
  Representation target;
  std::vector<Representation> types;      // indecomposable summand types of T
  std::vector<std::size_t> summands;      // type index of each copy in T_0
  Representation source;                  // T_0
  Morphism map;                           // T_0 -> target
  bool minimal = false;

  /// Copies of each type in T_0.
  [[nodiscard]] std::vector<std::size_t> multiplicities() const {
    std::vector<std::size_t> m(types.size(), 0);
    for (auto i : summands) {
      ++m[i];
    }
    return m;
  }
};

namespace detail {

/// Every map from every type into x factors through the chosen copies:
/// {h_c ∘ g : g ∈ Hom(T_j, T_{i(c)})} spans Hom(T_j, x) for each j.
inline bool copies_approximate(
    const std::vector<Representation>& types,
    const std::vector<std::vector<std::vector<Morphism>>>& type_homs,
    const std::vector<std::size_t>& hom_x_dims,
    const std::vector<std::pair<std::size_t, Morphism>>& copies,
    const std::vector<bool>& alive) {
  for (std::size_t j = 0; j < types.size(); ++j) {
    if (hom_x_dims[j] == 0) {
      continue;
    }
    std::vector<Vector> span;
    std::size_t len = 0;
    for (std::size_t c = 0; c < copies.size(); ++c) {
      if (!alive[c]) {
        continue;
      }
      const auto& [i, h] = copies[c];
      for (const auto& g : type_homs[j][i]) {
        span.push_back(h.after(g).flatten());
        len = span.back().size();
      }
    }
    if (span.empty() ||
        Subspace::span(types[j].field(), len, span).dim() != hom_x_dims[j]) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// From the universal map ⊕_i T_i^{dim Hom(T_i, x)} -> x, drop copies one
/// at a time while the approximation property survives. The property is
/// monotone in the set of copies, so a single pass leaves no removable copy.
inline AddApproximation minimal_right_add_approximation(
    const std::vector<Representation>& types, const Representation& x) {
  const AlgebraPtr& a = x.algebra();
  std::vector<std::vector<std::vector<Morphism>>> type_homs(types.size());
  for (std::size_t j = 0; j < types.size(); ++j) {
    for (std::size_t i = 0; i < types.size(); ++i) {
      type_homs[j].push_back(hom_basis(types[j], types[i]));
    }
  }
  std::vector<std::size_t> hom_x_dims;
  std::vector<std::pair<std::size_t, Morphism>> copies;
  for (std::size_t i = 0; i < types.size(); ++i) {
    auto hs = hom_basis(types[i], x);
    hom_x_dims.push_back(hs.size());
    for (auto& h : hs) {
      copies.emplace_back(i, std::move(h));
    }
  }
  std::vector<bool> alive(copies.size(), true);
  if (!detail::copies_approximate(types, type_homs, hom_x_dims, copies,
                                  alive)) {
    throw InternalError("universal map is not an approximation");
  }
  for (std::size_t c = copies.size(); c-- > 0;) {
    alive[c] = false;
    if (!detail::copies_approximate(types, type_homs, hom_x_dims, copies,
                                    alive)) {
      alive[c] = true;
    }
  }
  bool minimal = true;
  for (std::size_t c = 0; c < copies.size() && minimal; ++c) {
    if (alive[c]) {
      alive[c] = false;
      minimal = !detail::copies_approximate(types, type_homs, hom_x_dims,
                                            copies, alive);
      alive[c] = true;
    }
  }
  std::vector<Representation> parts;
  std::vector<std::size_t> summands;
  std::vector<const Morphism*> maps;
  for (std::size_t c = 0; c < copies.size(); ++c) {
    if (alive[c]) {
      parts.push_back(types[copies[c].first]);
      summands.push_back(copies[c].first);
      maps.push_back(&copies[c].second);
    }
  }
  const auto sum = direct_sum_with_maps(parts, a);
  Morphism f = Morphism::zero(sum.module, x);
  for (std::size_t k = 0; k < maps.size(); ++k) {
    f += maps[k]->after(sum.projections[k]);
  }
  return {x, types, std::move(summands), sum.module, std::move(f), minimal};
}

inline AddApproximation minimal_right_add_approximation(
    const Representation& t, const Representation& x) {
  require_same_algebra(t, x);
  return minimal_right_add_approximation(summand_types(t), x);
}

/// Hom(Y, τT) = 0 for Y the kernel of the minimal approximation of x.
inline bool approximation_kernel_check(const Representation& t,
                                       const Representation& x) {
  const auto approx = minimal_right_add_approximation(t, x);
  const auto y = kernel(approx.map).module;
  return y.is_zero() || hom_dim(y, ar_translate(t)) == 0;
}

struct AddResolutionStep {
  AddApproximation approximation;
  Representation kernel;
  bool epi = false;
  bool kernel_in_fac = false;
};

struct AddResolution {
  Representation module;
  std::vector<AddResolutionStep> steps;
  bool reached_zero = false;  // some kernel vanished

  /// Every computed step is onto with kernel in Fac T.
  [[nodiscard]] bool certified() const {
    return std::all_of(steps.begin(), steps.end(), [](const auto& s) {
      return s.epi && s.kernel_in_fac;
    });
  }
};

/// ... -> T_1 -> T_0 -> m -> 0 by iterated minimal approximations, at most
/// `length` steps; m must lie in Fac t.
inline AddResolution add_T_resolution(const Representation& t,
                                      const Representation& m,
                                      std::size_t length) {
  require_same_algebra(t, m);
  if (!fac_membership(t, m)) {
    throw Error("add_T_resolution: module is not generated by T");
  }
  const auto types = summand_types(t);
  AddResolution out{m, {}, m.is_zero()};
  Representation current = m;
  for (std::size_t k = 0; k < length && !current.is_zero(); ++k) {
    auto approx = minimal_right_add_approximation(types, current);
    auto ker = kernel(approx.map).module;
    const bool epi = approx.map.is_surjective();
    const bool in_fac = fac_membership(t, ker);
    out.steps.push_back({std::move(approx), ker, epi, in_fac});
    current = std::move(ker);
    if (current.is_zero()) {
      out.reached_zero = true;
    }
    if (!epi || !in_fac) {
      break;
    }
  }
  return out;
}

}  // namespace taulab

// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Minimal projective resolutions and what they compute: projective
// dimension, Ext, the transpose and the Auslander–Reiten translate.
//
// Ext is read off the complex Hom(P_•, N) without building Hom spaces
// between projectives: Hom(⊕_k P_{v_k}, N) is identified with ⊕_k N_{v_k}
// (evaluation at the generators), and precomposition with a map of
// projectives becomes a block matrix of actions of algebra elements on N.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taulab/algebra.hpp"
#include "taulab/linalg.hpp"
#include "taulab/module_ops.hpp"
#include "taulab/representation.hpp"

namespace taulab {

/// P_L -> ... -> P_0 -> m -> 0. `differentials[0]` is the augmentation
/// P_0 -> m and `differentials[i]` is P_i -> P_{i-1}; `syzygies[i]` is the
/// kernel of `differentials[i]` with its inclusion.
struct ProjectiveResolution {
  Representation module;
  std::vector<Representation> terms;
  std::vector<std::vector<std::size_t>> tops;  // summand vertices of P_i
  std::vector<Morphism> differentials;
  std::vector<Submodule> syzygies;
  bool terminated = false;  // some syzygy vanished, so the tail is zero

  [[nodiscard]] std::size_t length() const noexcept { return terms.size(); }

  /// Tops of P_i, empty past the end of a terminated resolution.
  [[nodiscard]] const std::vector<std::size_t>& tops_at(std::size_t i) const {
    static const std::vector<std::size_t> empty;
    if (i < tops.size()) {
      return tops[i];
    }
    if (terminated) {
      return empty;
    }
    throw Error("resolution unknown beyond prefix of length " +
                std::to_string(length()));
  }
};

namespace detail {

inline void extend_resolution(ProjectiveResolution& r, std::size_t length) {
  while (!r.terminated && r.terms.size() < length) {
    const Representation& target =
        r.syzygies.empty() ? r.module : r.syzygies.back().module;
    if (target.is_zero()) {
      r.terminated = true;
      break;
    }
    auto cover = projective_cover(target);
    Morphism d = cover.epi;
    if (!r.syzygies.empty()) {
      d = r.syzygies.back().inclusion.after(cover.epi);
    }
    auto syz = kernel(cover.epi);
    // Exactness witness: the image of the new differential is the previous
    // syzygy (or the whole module at the start).
    const auto img = image_subspaces(d);
    if (r.syzygies.empty()) {
      if (!cover.epi.is_surjective()) {
        throw InternalError("projective cover is not onto");
      }
    } else {
      const auto prev = image_subspaces(r.syzygies.back().inclusion);
      if (img != prev) {
        throw InternalError("resolution is not exact");
      }
    }
    r.terms.push_back(cover.projective);
    r.tops.push_back(cover.tops);
    r.differentials.push_back(std::move(d));
    r.syzygies.push_back(std::move(syz));
    if (r.syzygies.back().module.is_zero()) {
      r.terminated = true;
    }
  }
}

struct ResolutionMemo {
  std::mutex mutex;
  // Keyed by algebra identity plus the exact module key; the stored
  // resolution keeps its algebra alive, so addresses are never reused.
  std::map<std::pair<const BoundQuiverAlgebra*, std::vector<std::size_t>>,
           ProjectiveResolution>
      entries;
};

inline ResolutionMemo& resolution_memo() {
  static ResolutionMemo memo;
  return memo;
}

}  // namespace detail

/// Minimal resolution with at least `length` terms (fewer if it stops).
inline ProjectiveResolution projective_resolution(const Representation& m,
                                                  std::size_t length) {
  auto& memo = detail::resolution_memo();
  const auto key = std::make_pair(m.algebra().get(), m.key());
  std::optional<ProjectiveResolution> start;
  {
    std::lock_guard lock(memo.mutex);
    auto it = memo.entries.find(key);
    if (it != memo.entries.end()) {
      if (it->second.terminated || it->second.length() >= length) {
        ProjectiveResolution out = it->second;
        if (out.length() > length) {
          const auto cut = static_cast<std::ptrdiff_t>(length);
          out.terms.erase(out.terms.begin() + cut, out.terms.end());
          out.tops.erase(out.tops.begin() + cut, out.tops.end());
          out.differentials.erase(out.differentials.begin() + cut,
                                  out.differentials.end());
          out.syzygies.erase(out.syzygies.begin() + cut, out.syzygies.end());
          out.terminated =
              length > 0 && out.syzygies.back().module.is_zero();
        }
        return out;
      }
      start = it->second;
    }
  }
  ProjectiveResolution r =
      start ? std::move(*start) : ProjectiveResolution{m, {}, {}, {}, {}};
  detail::extend_resolution(r, length);
  std::lock_guard lock(memo.mutex);
  if (memo.entries.size() > 8192) {
    memo.entries.clear();
  }
  auto& slot = memo.entries.insert_or_assign(key, r).first->second;
  return slot;
}

struct ProjectivePresentation {
  Representation module;
  Representation p1;
  std::vector<std::size_t> tops1;
  Representation p0;
  std::vector<std::size_t> tops0;
  Morphism d1;   // P_1 -> P_0
  Morphism eps;  // P_0 -> m
};

inline ProjectivePresentation minimal_projective_presentation(
    const Representation& m) {
  const auto r = projective_resolution(m, 2);
  const AlgebraPtr& a = m.algebra();
  if (r.length() == 0) {  // m = 0
    const auto z = Representation::zero(a);
    return {m, z, {}, z, {}, Morphism::zero(z, z), Morphism::zero(z, m)};
  }
  if (r.length() == 1) {  // projective
    const auto z = Representation::zero(a);
    return {m,  z, {}, r.terms[0], r.tops[0], Morphism::zero(z, r.terms[0]),
            r.differentials[0]};
  }
  return {m,          r.terms[1],         r.tops[1],         r.terms[0],
          r.tops[0],  r.differentials[1], r.differentials[0]};
}

/// pd m as an exact value, or the lower bound `bound` + 1 when the
/// resolution is still running after `bound` syzygies.
struct PdResult {
  std::optional<std::size_t> exact;
  std::size_t lower_bound = 0;

  [[nodiscard]] bool is_exact() const noexcept { return exact.has_value(); }
  [[nodiscard]] std::string to_string() const {
    return exact ? std::to_string(*exact)
                 : ">= " + std::to_string(lower_bound);
  }
};

/// pd = d exactly when the d-th syzygy vanishes and the (d-1)-th does not.
/// The zero module is reported with pd 0.
inline PdResult projective_dimension(const Representation& m,
                                     std::size_t max_length = kDefaultMaxLength) {
  if (m.is_zero()) {
    return {0, 0};
  }
  const auto r = projective_resolution(m, max_length + 1);
  for (std::size_t d = 0; d < r.syzygies.size(); ++d) {
    if (r.syzygies[d].module.is_zero()) {
      return {d, d};
    }
  }
  return {std::nullopt, max_length + 1};
}

namespace detail {

/// Matrix of Hom(P_i -> P_{i-1}, n) in generator coordinates, i >= 1:
/// columns indexed by ⊕_j n_{u_j} (tops of P_{i-1}), rows by ⊕_k n_{v_k}.
inline Matrix hom_differential(const ProjectiveResolution& r,
                               const Representation& n, std::size_t i) {
  const Field& f = n.field();
  const auto& src_tops = r.tops_at(i);       // P_i
  const auto& tgt_tops = r.tops_at(i - 1);   // P_{i-1}
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (auto v : src_tops) {
    rows += n.dim(v);
  }
  for (auto u : tgt_tops) {
    cols += n.dim(u);
  }
  Matrix out(f, rows, cols);
  if (src_tops.empty() || tgt_tops.empty()) {
    return out;
  }
  const auto lambda =
      projective_map_elements(r.differentials[i], src_tops, tgt_tops);
  std::size_t r0 = 0;
  for (std::size_t k = 0; k < src_tops.size(); ++k) {
    std::size_t c0 = 0;
    for (std::size_t j = 0; j < tgt_tops.size(); ++j) {
      // A map sending generator j to x sends generator k to x · λ_jk.
      out.set_block(r0, c0,
                    n.element_map(lambda[j][k], tgt_tops[j], src_tops[k]));
      c0 += n.dim(tgt_tops[j]);
    }
    r0 += n.dim(src_tops[k]);
  }
  return out;
}

inline std::size_t hom_from_projective_dim(const std::vector<std::size_t>& tops,
                                           const Representation& n) {
  std::size_t d = 0;
  for (auto v : tops) {
    d += n.dim(v);
  }
  return d;
}

}  // namespace detail

/// dim Ext^i(m, n) from an already computed resolution; throws when the
/// prefix is too short to decide.
inline std::size_t ext_dim_from(const ProjectiveResolution& r,
                                const Representation& n, std::size_t i) {
  require_same_algebra(r.module, n);
  if (i == 0) {
    return hom_dim(r.module, n);
  }
  const auto& tops_i = r.tops_at(i);
  const std::size_t middle = detail::hom_from_projective_dim(tops_i, n);
  if (middle == 0) {
    return 0;
  }
  const std::size_t in_rank = rank(detail::hom_differential(r, n, i));
  std::size_t out_rank = 0;
  if (!r.tops_at(i + 1).empty()) {
    out_rank = rank(detail::hom_differential(r, n, i + 1));
  }
  return middle - in_rank - out_rank;
}

inline std::size_t ext_dim(const Representation& m, const Representation& n,
                           std::size_t i) {
  require_same_algebra(m, n);
  if (i == 0) {
    return hom_dim(m, n);
  }
  return ext_dim_from(projective_resolution(m, i + 2), n, i);
}

/// Tr m over the opposite algebra: cokernel of Hom(P_0, Λ) -> Hom(P_1, Λ).
/// Hom(e_u Λ, Λ) = Λ e_u is the right projective e_u Λ^op, and
/// precomposition with left multiplication by λ becomes left multiplication
/// by the reversed element λ^op.
inline Representation transpose(const Representation& m) {
  const auto pres = minimal_projective_presentation(m);
  const AlgebraPtr& a = m.algebra();
  const AlgebraPtr op = a->opposite();
  if (pres.tops1.empty()) {
    return Representation::zero(op);
  }
  const auto lambda =
      projective_map_elements(pres.d1, pres.tops1, pres.tops0);  // [j][k]
  const Matrix& to_op = a->to_opposite();
  std::vector<std::vector<Vector>> elements(
      pres.tops1.size(), std::vector<Vector>(pres.tops0.size()));
  for (std::size_t k = 0; k < pres.tops1.size(); ++k) {
    for (std::size_t j = 0; j < pres.tops0.size(); ++j) {
      elements[k][j] = to_op.apply(lambda[j][k]);
    }
  }
  const auto dstar = map_between_projectives(op, pres.tops0, pres.tops1,
                                             elements);
  return cokernel(dstar).module;
}

/// τ m = D Tr m, a module over the original algebra.
inline Representation ar_translate(const Representation& m) {
  return dual(transpose(m));
}

/// dim of Hom(n, x) modulo maps factoring through an injective, which are
/// exactly the maps factoring through the injective envelope of n.
inline std::size_t stable_hom_dim(const Representation& n,
                                  const Representation& x) {
  require_same_algebra(n, x);
  const auto hom = hom_basis(n, x);
  if (hom.empty()) {
    return 0;
  }
  const auto env = injective_envelope(n);
  std::vector<Vector> factored;
  for (const auto& g : hom_basis(env.injective, x)) {
    factored.push_back(g.after(env.mono).flatten());
  }
  const auto len = hom.front().flatten().size();
  return hom.size() - Subspace::span(n.field(), len, factored).dim();
}

}  // namespace taulab

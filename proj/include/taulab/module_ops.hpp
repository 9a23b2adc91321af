// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "taulab/linalg.hpp"
#include "taulab/representation.hpp"

namespace taulab {

/// Per-vertex subspaces of a module; the vertex spaces are column spaces.
using VertexSubspaces = std::vector<Subspace>;

struct Submodule {
  Representation module;
  Morphism inclusion;
};

struct Quotient {
  Representation module;
  Morphism projection;
};

inline void require_same_algebra(const Representation& a,
                                 const Representation& b) {
  if (!a.algebra()->same_as(*b.algebra())) {
    throw Error("modules live over different algebras");
  }
}

/// Canonical basis of Hom(m, n): the reduced echelon basis of the solution
/// space of f_w M_a = N_a f_v, unknowns ordered vertex-major then row-major.
inline std::vector<Morphism> hom_basis(const Representation& m,
                                       const Representation& n) {
  require_same_algebra(m, n);
  const auto& q = m.algebra()->quiver();
  const Field& f = m.field();
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  }
  const std::size_t unknowns = offset.back();
  if (unknowns == 0) {
    return {};
  }
  std::size_t equations = 0;
  for (const auto& a : q.arrows()) {
    equations += n.dim(a.target) * m.dim(a.source);
  }
  Matrix system(f, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto v = a.source;
    const auto w = a.target;
    const Matrix& ma = m.map(ai);
    const Matrix& na = n.map(ai);
    for (std::size_t r = 0; r < n.dim(w); ++r) {
      for (std::size_t c = 0; c < m.dim(v); ++c, ++row) {
        // sum_k f_w[r][k] M_a[k][c]
        for (std::size_t k = 0; k < m.dim(w); ++k) {
          const auto col = offset[w] + r * m.dim(w) + k;
          system(row, col) = f.add(system(row, col), ma(k, c));
        }
        // - sum_k N_a[r][k] f_v[k][c]
        for (std::size_t k = 0; k < n.dim(v); ++k) {
          const auto col = offset[v] + k * m.dim(v) + c;
          system(row, col) = f.sub(system(row, col), na(r, k));
        }
      }
    }
  }
  const Subspace solutions = kernel_basis(system);
  std::vector<Morphism> out;
  out.reserve(solutions.dim());
  for (std::size_t s = 0; s < solutions.dim(); ++s) {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) {
      Matrix c(f, n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r) {
        for (std::size_t k = 0; k < m.dim(v); ++k) {
          c(r, k) = solutions.basis()(s, offset[v] + r * m.dim(v) + k);
        }
      }
      comps.push_back(std::move(c));
    }
    out.emplace_back(m, n, std::move(comps));
  }
  return out;
}

inline std::size_t hom_dim(const Representation& m, const Representation& n) {
  return hom_basis(m, n).size();
}

/// Column basis of a vertex subspace, as an ambient x dim matrix.
inline Matrix inclusion_matrix(const Subspace& s) {
  return s.basis().transpose();
}

inline Submodule submodule_from_subspaces(const Representation& m,
                                          const VertexSubspaces& subs) {
  const auto& q = m.algebra()->quiver();
  if (subs.size() != q.vertex_count()) {
    throw Error("one subspace per vertex required");
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> incl;
  for (std::size_t v = 0; v < subs.size(); ++v) {
    if (subs[v].ambient_dim() != m.dim(v)) {
      throw Error("subspace ambient dimension does not match the module");
    }
    dims.push_back(subs[v].dim());
    incl.push_back(inclusion_matrix(subs[v]));
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const Matrix image = m.map(ai) * incl[a.source];
    auto restricted = solve_matrix(incl[a.target], image);
    if (!restricted) {
      throw Error("subspaces are not stable under arrow '" + a.name + "'");
    }
    maps.push_back(std::move(*restricted));
  }
  Representation sub(m.algebra(), dims, std::move(maps));
  return {sub, Morphism(sub, m, std::move(incl))};
}

inline Quotient quotient_by_submodule(const Representation& m,
                                      const VertexSubspaces& subs) {
  const auto& q = m.algebra()->quiver();
  const Field& f = m.field();
  if (subs.size() != q.vertex_count()) {
    throw Error("one subspace per vertex required");
  }
  std::vector<Matrix> proj;
  std::vector<Matrix> section;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < subs.size(); ++v) {
    const auto& u = subs[v];
    if (u.ambient_dim() != m.dim(v)) {
      throw Error("subspace ambient dimension does not match the module");
    }
    const auto free = u.free_positions();
    Matrix pv(f, free.size(), m.dim(v));
    Matrix sv(f, m.dim(v), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      pv(j, free[j]) = 1;
      sv(free[j], j) = 1;
      for (std::size_t i = 0; i < u.dim(); ++i) {
        pv(j, u.pivots()[i]) = f.neg(u.basis()(i, free[j]));
      }
    }
    dims.push_back(free.size());
    proj.push_back(std::move(pv));
    section.push_back(std::move(sv));
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& src = subs[a.source];
    for (std::size_t i = 0; i < src.dim(); ++i) {
      if (!subs[a.target].contains(m.map(ai).apply(src.basis().row(i)))) {
        throw Error("subspaces are not stable under arrow '" + a.name + "'");
      }
    }
    maps.push_back(proj[a.target] * m.map(ai) * section[a.source]);
  }
  Representation quot(m.algebra(), dims, std::move(maps));
  return {quot, Morphism(m, quot, std::move(proj))};
}

inline Submodule kernel(const Morphism& f) {
  VertexSubspaces subs;
  for (const auto& c : f.components()) {
    subs.push_back(kernel_basis(c));
  }
  return submodule_from_subspaces(f.source(), subs);
}

inline VertexSubspaces image_subspaces(const Morphism& f) {
  VertexSubspaces subs;
  for (const auto& c : f.components()) {
    subs.push_back(column_space(c));
  }
  return subs;
}

inline Submodule image(const Morphism& f) {
  return submodule_from_subspaces(f.target(), image_subspaces(f));
}

inline Quotient cokernel(const Morphism& f) {
  return quotient_by_submodule(f.target(), image_subspaces(f));
}

/// Sum of the images of all maps t -> m.
inline Submodule trace_submodule(const Representation& t,
                                 const Representation& m) {
  require_same_algebra(t, m);
  const Field& f = m.field();
  VertexSubspaces subs;
  const auto maps = hom_basis(t, m);
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    std::vector<Vector> cols;
    for (const auto& h : maps) {
      const auto& c = h.component(v);
      for (std::size_t k = 0; k < c.cols(); ++k) {
        cols.push_back(c.column(k));
      }
    }
    subs.push_back(Subspace::span(f, m.dim(v), cols));
  }
  return submodule_from_subspaces(m, subs);
}

/// m ∈ Fac t: the trace of t in m is all of m.
inline bool fac_membership(const Representation& t, const Representation& m) {
  return trace_submodule(t, m).module.dims() == m.dims();
}

/// m ∈ Sub n: the maps m -> n jointly separate points of m.
inline bool sub_membership(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.is_zero()) {
    return true;
  }
  const auto maps = hom_basis(m, n);
  for (std::size_t v = 0; v < m.dims().size(); ++v) {
    if (m.dim(v) == 0) {
      continue;
    }
    Matrix stacked(m.field(), 0, m.dim(v));
    for (const auto& h : maps) {
      stacked = stacked.vstack(h.component(v));
    }
    if (rank(stacked) != m.dim(v)) {
      return false;
    }
  }
  return true;
}

inline VertexSubspaces radical_subspaces(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  VertexSubspaces subs;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    subs.emplace_back(m.field(), m.dim(w));
  }
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto w = q.arrow(ai).target;
    subs[w] = subs[w].sum(column_space(m.map(ai)));
  }
  return subs;
}

inline VertexSubspaces socle_subspaces(const Representation& m) {
  const auto& q = m.algebra()->quiver();
  VertexSubspaces subs;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    subs.push_back(Subspace::full(m.field(), m.dim(v)));
  }
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto v = q.arrow(ai).source;
    subs[v] = subs[v].intersection(kernel_basis(m.map(ai)));
  }
  return subs;
}

struct RadicalTopSocle {
  Submodule radical;
  Quotient top;
  Submodule socle;
};

inline RadicalTopSocle radical_top_socle(const Representation& m) {
  const auto rad = radical_subspaces(m);
  return {submodule_from_subspaces(m, rad), quotient_by_submodule(m, rad),
          submodule_from_subspaces(m, socle_subspaces(m))};
}

/// Multiplicity of each simple in top m.
inline std::vector<std::size_t> top_multiplicities(const Representation& m) {
  std::vector<std::size_t> out;
  for (const auto& s : radical_subspaces(m)) {
    out.push_back(s.ambient_dim() - s.dim());
  }
  return out;
}

inline std::vector<std::size_t> socle_multiplicities(const Representation& m) {
  std::vector<std::size_t> out;
  for (const auto& s : socle_subspaces(m)) {
    out.push_back(s.dim());
  }
  return out;
}

/// P_v = e_v Λ: at vertex w, the residue paths from v to w; arrows act by
/// right multiplication.
inline Representation projective(const AlgebraPtr& algebra, std::size_t v) {
  const auto& q = algebra->quiver();
  const Field& f = algebra->field();
  std::vector<std::size_t> dims;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    dims.push_back(algebra->block(v, w).size());
  }
  std::vector<Matrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& from = algebra->block(v, a.source);
    const auto& to = algebra->block(v, a.target);
    Matrix m(f, to.size(), from.size());
    for (std::size_t c = 0; c < from.size(); ++c) {
      const auto& prod = algebra->product(from[c], algebra->arrow_element(ai));
      for (std::size_t r = 0; r < to.size(); ++r) {
        m(r, c) = prod[to[r]];
      }
    }
    maps.push_back(std::move(m));
  }
  return {algebra, dims, std::move(maps)};
}

inline std::vector<Representation> indecomposable_projectives(
    const AlgebraPtr& algebra) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) {
    out.push_back(projective(algebra, v));
  }
  return out;
}

/// I_v = D(P_v over the opposite algebra).
inline Representation injective(const AlgebraPtr& algebra, std::size_t v) {
  return dual(projective(algebra->opposite(), v));
}

inline std::vector<Representation> indecomposable_injectives(
    const AlgebraPtr& algebra) {
  std::vector<Representation> out;
  for (std::size_t v = 0; v < algebra->vertex_count(); ++v) {
    out.push_back(injective(algebra, v));
  }
  return out;
}

/// Λ as a right module over itself.
inline Representation regular_module(const AlgebraPtr& algebra) {
  return direct_sum(indecomposable_projectives(algebra), algebra);
}

/// ⊕_k P_{tops[k]}.
inline Representation projective_sum(const AlgebraPtr& algebra,
                                     const std::vector<std::size_t>& tops) {
  std::vector<Representation> parts;
  for (auto v : tops) {
    parts.push_back(projective(algebra, v));
  }
  return direct_sum(parts, algebra);
}

/// Position of the generator e_{tops[k]} of summand k inside the vertex
/// space (⊕ P)_{tops[k]}.
inline std::size_t generator_position(const AlgebraPtr& algebra,
                                      const std::vector<std::size_t>& tops,
                                      std::size_t k) {
  const auto v = tops[k];
  std::size_t pos = 0;
  for (std::size_t j = 0; j < k; ++j) {
    pos += algebra->block(tops[j], v).size();
  }
  const auto& blk = algebra->block(v, v);
  for (std::size_t i = 0; i < blk.size(); ++i) {
    if (blk[i] == algebra->idempotent(v)) {
      return pos + i;
    }
  }
  throw InternalError("idempotent missing from its own projective");
}

/// The map ⊕_k P_{tops[k]} -> m sending generator k to images[k] ∈ m_{tops[k]}.
inline Morphism map_from_projectives(const Representation& m,
                                     const std::vector<std::size_t>& tops,
                                     const std::vector<Vector>& images) {
  const auto& algebra = m.algebra();
  const auto& q = algebra->quiver();
  const Field& f = m.field();
  const Representation p = projective_sum(algebra, tops);
  std::vector<Matrix> comps;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    Matrix c(f, m.dim(w), p.dim(w));
    std::size_t col = 0;
    for (std::size_t k = 0; k < tops.size(); ++k) {
      for (auto bi : algebra->block(tops[k], w)) {
        const auto image = m.path_map(algebra->basis()[bi]).apply(images[k]);
        for (std::size_t r = 0; r < image.size(); ++r) {
          c(r, col) = image[r];
        }
        ++col;
      }
    }
    comps.push_back(std::move(c));
  }
  return {p, m, std::move(comps)};
}

/// Map ⊕_s P_{sources[s]} -> ⊕_t P_{targets[t]} whose (t, s) entry is left
/// multiplication by elements[t][s] ∈ e_{targets[t]} Λ e_{sources[s]}.
inline Morphism map_between_projectives(
    const AlgebraPtr& algebra, const std::vector<std::size_t>& sources,
    const std::vector<std::size_t>& targets,
    const std::vector<std::vector<Vector>>& elements) {
  const auto& q = algebra->quiver();
  const Field& f = algebra->field();
  const Representation src = projective_sum(algebra, sources);
  const Representation tgt = projective_sum(algebra, targets);
  std::vector<Matrix> comps;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) {
    Matrix c(f, tgt.dim(w), src.dim(w));
    std::size_t col = 0;
    for (std::size_t s = 0; s < sources.size(); ++s) {
      for (auto bi : algebra->block(sources[s], w)) {
        std::size_t row = 0;
        for (std::size_t t = 0; t < targets.size(); ++t) {
          const auto prod = algebra->multiply(elements[t][s], algebra->unit(bi));
          for (auto ti : algebra->block(targets[t], w)) {
            c(row++, col) = prod[ti];
          }
        }
        ++col;
      }
    }
    comps.push_back(std::move(c));
  }
  return {src, tgt, std::move(comps)};
}

/// Read the (t, s) algebra elements back off a map between sums of
/// indecomposable projectives: the image of generator s, split by summand.
inline std::vector<std::vector<Vector>> projective_map_elements(
    const Morphism& g, const std::vector<std::size_t>& sources,
    const std::vector<std::size_t>& targets) {
  const auto& algebra = g.source().algebra();
  std::vector<std::vector<Vector>> out(
      targets.size(), std::vector<Vector>(sources.size(),
                                          Vector(algebra->dim(), 0)));
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const auto u = sources[s];
    const auto pos = generator_position(algebra, sources, s);
    const auto column = g.component(u).column(pos);
    std::size_t row = 0;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      for (auto bi : algebra->block(targets[t], u)) {
        out[t][s][bi] = column[row++];
      }
    }
  }
  return out;
}

struct ProjectiveCover {
  Representation projective;
  Morphism epi;
  std::vector<std::size_t> tops;  // vertex of each indecomposable summand
};

/// Generators lift a basis of top m taken from the standard complement of
/// rad m, vertex by vertex.
inline ProjectiveCover projective_cover(const Representation& m) {
  std::vector<std::size_t> tops;
  std::vector<Vector> images;
  const auto rad = radical_subspaces(m);
  for (std::size_t v = 0; v < rad.size(); ++v) {
    for (auto j : rad[v].free_positions()) {
      Vector e(m.dim(v), 0);
      e[j] = 1;
      tops.push_back(v);
      images.push_back(std::move(e));
    }
  }
  auto epi = map_from_projectives(m, tops, images);
  auto p = epi.source();
  return {std::move(p), std::move(epi), std::move(tops)};
}

struct InjectiveEnvelope {
  Representation injective;
  Morphism mono;
  std::vector<std::size_t> socles;  // vertex of each indecomposable summand
};

inline InjectiveEnvelope injective_envelope(const Representation& m) {
  const auto cover = projective_cover(dual(m));
  auto mono_dual = dual(cover.epi);  // D D m -> D P
  // D D m is m on the nose; rebuild the morphism with m as its source.
  Morphism mono(m, mono_dual.target(), mono_dual.components());
  auto i = mono.target();
  return {std::move(i), std::move(mono), cover.tops};
}

inline bool is_projective(const Representation& m) {
  return projective_cover(m).projective.dims() == m.dims();
}

inline bool is_injective(const Representation& m) {
  return injective_envelope(m).injective.dims() == m.dims();
}

}  // namespace taulab

// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Brute-force carriers for the verification suites: all indecomposables up
// to a total-dimension bound, and the support τ-tilting modules built from
// them.

#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "taulab/algebra.hpp"
#include "taulab/representation.hpp"
#include "taulab/ring.hpp"
#include "taulab/tilting.hpp"

namespace taulab {

namespace detail {

/// Dimension vectors with 1 <= total <= bound, in lexicographic order.
inline std::vector<std::vector<std::size_t>> dimension_vectors(
    std::size_t vertices, std::size_t bound) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> d(vertices, 0);
  auto rec = [&](auto&& self, std::size_t v, std::size_t left) -> void {
    if (v == vertices) {
      if (left < bound) {
        out.push_back(d);
      }
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      d[v] = k;
      self(self, v + 1, left - k);
    }
    d[v] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

inline bool satisfies_relations(const BoundQuiverAlgebra& a,
                                const std::vector<std::size_t>& dims,
                                const std::vector<Matrix>& maps) {
  const Field& f = a.field();
  for (const auto& r : a.relations()) {
    const auto& first = r.terms.front().path;
    Matrix sum(f, dims[first.target], dims[first.source]);
    for (const auto& t : r.terms) {
      Matrix m = Matrix::identity(f, dims[t.path.source]);
      for (auto ai : t.path.arrows) {
        m = maps[ai] * m;
      }
      sum += m.scaled(f.reduce(t.coefficient));
    }
    if (!sum.is_zero()) {
      return false;
    }
  }
  return true;
}

}  // namespace detail

/// Indecomposables of total dimension <= bound up to isomorphism. For each
/// dimension vector (lexicographic) the arrow-matrix tuples are visited in
/// lexicographic order of their entries; the first tuple of each new
/// isomorphism class is its representative.
inline std::vector<Representation> enumerate_indecomposables(
    const AlgebraPtr& a, std::size_t dim_bound) {
  if (dim_bound < 1) {
    throw Error("enumerate_indecomposables: bound must be at least 1");
  }
  const auto& q = a->quiver();
  const Field& f = a->field();
  const Scalar p = f.characteristic();
  std::vector<Representation> out;
  for (const auto& dims : detail::dimension_vectors(q.vertex_count(),
                                                    dim_bound)) {
    std::vector<std::size_t> sizes;
    std::size_t entries = 0;
    for (const auto& arrow : q.arrows()) {
      sizes.push_back(dims[arrow.target] * dims[arrow.source]);
      entries += sizes.back();
    }
    const std::size_t first_of_dims = out.size();
    Vector digits(entries, 0);
    while (true) {
      std::vector<Matrix> maps;
      std::size_t pos = 0;
      for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
        const auto& arrow = q.arrow(ai);
        Vector e(digits.begin() + static_cast<std::ptrdiff_t>(pos),
                 digits.begin() + static_cast<std::ptrdiff_t>(pos + sizes[ai]));
        maps.emplace_back(f, dims[arrow.target], dims[arrow.source],
                          std::move(e));
        pos += sizes[ai];
      }
      if (detail::satisfies_relations(*a, dims, maps)) {
        Representation m(a, dims, std::move(maps));
        const bool seen = std::any_of(
            out.begin() + static_cast<std::ptrdiff_t>(first_of_dims),
            out.end(), [&](const Representation& r) {
              return is_isomorphic_indecomposables(r, m);
            });
        if (!seen && is_indecomposable(m)) {
          out.push_back(std::move(m));
        }
      }
      // Odometer with the last entry moving fastest.
      std::size_t k = entries;
      while (k > 0 && ++digits[k - 1] == p) {
        digits[--k] = 0;
      }
      if (k == 0) {
        break;
      }
    }
  }
  return out;
}

struct SupportTauTiltingModule {
  std::vector<std::size_t> summands;  // indices into the carrier
  Representation module;
  SupportWitness witness;
  bool tau_tilting = false;
};

/// Multiplicity-free sums of at most n carrier modules that are support
/// τ-tilting, ordered by size and then by index tuple. The zero module is
/// listed first and flagged through its witness.
inline std::vector<SupportTauTiltingModule> enumerate_support_tau_tilting(
    const AlgebraPtr& a, const std::vector<Representation>& indecs) {
  const std::size_t n = a->vertex_count();
  std::vector<SupportTauTiltingModule> out;
  {
    auto zero = Representation::zero(a);
    auto w = support_tau_tilting_witness(zero);
    out.push_back({{}, std::move(zero), std::move(w), false});
  }
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    if (chosen.size() == size) {
      std::vector<Representation> parts;
      for (auto i : chosen) {
        parts.push_back(indecs[i]);
      }
      auto m = direct_sum(parts, a);
      auto w = support_tau_tilting_witness(m);
      if (!w.holds) {
        return;
      }
      const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& s) {
        return s.module.dims() == m.dims() && is_isomorphic(s.module, m);
      });
      if (!dup) {
        const bool tt = summand_type_count(m) == n && is_tau_rigid(m);
        out.push_back({chosen, std::move(m), std::move(w), tt});
      }
      return;
    }
    for (std::size_t i = start; i < indecs.size(); ++i) {
      chosen.push_back(i);
      self(self, i + 1, size);
      chosen.pop_back();
    }
  };
  for (std::size_t size = 1; size <= n; ++size) {
    rec(rec, 0, size);
  }
  return out;
}

/// Multiplicity-free sums of 1..n carrier modules, as index tuples ordered
/// by size and then lexicographically.
inline std::vector<std::vector<std::size_t>> candidate_subsets(
    std::size_t carrier, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start, std::size_t size) -> void {
    if (chosen.size() == size) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t i = start; i < carrier; ++i) {
      chosen.push_back(i);
      self(self, i + 1, size);
      chosen.pop_back();
    }
  };
  for (std::size_t size = 1; size <= n; ++size) {
    rec(rec, 0, size);
  }
  return out;
}

}  // namespace taulab

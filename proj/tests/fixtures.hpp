// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Test algebras, built twice: once through the library and once as plain
// oracle data, so that results can be compared across the two.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "taulab/taulab.hpp"

namespace fixtures {

struct TestAlgebra {
  std::string name;
  taulab::AlgebraPtr algebra;
  oracle::Algebra data;
};

/// Quiver on vertices "1".."n" with arrows (name, source, target) given by
/// 0-based vertex indices and monomial relations as arrow-index sequences.
inline TestAlgebra make(const std::string& name, std::uint32_t p, std::size_t n,
                        const std::vector<std::tuple<std::string, std::size_t,
                                                     std::size_t>>& arrows,
                        const std::vector<std::vector<std::size_t>>& zero_paths,
                        std::size_t max_length = taulab::kDefaultMaxLength) {
  taulab::Quiver q;
  oracle::Algebra data;
  data.p = static_cast<int>(p);
  data.vertices = n;
  for (std::size_t v = 0; v < n; ++v) {
    q.add_vertex(std::to_string(v + 1));
  }
  for (const auto& [arrow, s, t] : arrows) {
    q.add_arrow(arrow, std::to_string(s + 1), std::to_string(t + 1));
    data.arrows.push_back({s, t});
  }
  std::vector<taulab::Relation> rels;
  for (const auto& z : zero_paths) {
    taulab::Path path{q.arrow(z.front()).source, q.arrow(z.back()).target, z};
    rels.push_back({{{1, path}}});
  }
  data.zero_paths = zero_paths;
  return {name, taulab::build_algebra(q, rels, p, max_length), data};
}

inline TestAlgebra a2(std::uint32_t p = 2) {
  return make("A2", p, 2, {{"a", 0, 1}}, {});
}

inline TestAlgebra a3(std::uint32_t p = 2) {
  return make("A3", p, 3, {{"a1", 0, 1}, {"a2", 1, 2}}, {});
}

/// 1 -> 2 -> 3 with a1 a2 = 0.
inline TestAlgebra a3_zero_relation(std::uint32_t p = 2) {
  return make("A3/(a1a2)", p, 3, {{"a1", 0, 1}, {"a2", 1, 2}}, {{0, 1}});
}

/// Cyclic Nakayama algebra on three vertices with radical square zero.
inline TestAlgebra cyclic_nakayama(std::uint32_t p = 2) {
  return make("cyclic3/J^2", p, 3, {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}},
              {{0, 1}, {1, 2}, {2, 0}});
}

inline TestAlgebra semisimple(std::size_t n, std::uint32_t p = 2) {
  return make("k^" + std::to_string(n), p, n, {}, {});
}

inline std::vector<TestAlgebra> acceptance_algebras() {
  return {a2(), a3(), a3_zero_relation(), cyclic_nakayama()};
}

inline oracle::Rep to_oracle(const taulab::Representation& m) {
  oracle::Rep r;
  r.d = m.dims();
  for (const auto& mat : m.maps()) {
    oracle::Mat b = oracle::zeros(mat.rows(), mat.cols());
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      for (std::size_t j = 0; j < mat.cols(); ++j) {
        b[i][j] = static_cast<int>(mat(i, j));
      }
    }
    r.maps.push_back(std::move(b));
  }
  return r;
}

inline taulab::Representation from_oracle(const taulab::AlgebraPtr& a,
                                          const oracle::Rep& r) {
  std::vector<taulab::Matrix> maps;
  for (const auto& b : r.maps) {
    const std::size_t rows = b.size();
    const std::size_t cols = rows == 0 ? 0 : b[0].size();
    taulab::Vector e;
    for (const auto& row : b) {
      for (int x : row) {
        e.push_back(static_cast<taulab::Scalar>(x));
      }
    }
    maps.emplace_back(a->field(), rows, cols, std::move(e));
  }
  // Zero-row blocks lose their column count; rebuild shapes from dims.
  for (std::size_t k = 0; k < maps.size(); ++k) {
    const auto& arrow = a->quiver().arrow(k);
    if (maps[k].rows() != r.d[arrow.target] ||
        maps[k].cols() != r.d[arrow.source]) {
      maps[k] = taulab::Matrix(a->field(), r.d[arrow.target], r.d[arrow.source]);
    }
  }
  return {a, r.d, std::move(maps)};
}

inline taulab::Representation sum(const std::vector<taulab::Representation>& parts,
                                  const taulab::AlgebraPtr& a) {
  return taulab::direct_sum(parts, a);
}

}  // namespace fixtures

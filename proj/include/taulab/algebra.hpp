// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Bound quiver algebras kQ/I over F_p.
//
// The ideal is handled by linear reduction inside the space of paths of
// length at most `max_length`: the span of all u*r*v is row reduced with the
// longest paths as pivots, so the surviving (non-pivot) paths form a basis of
// normal forms. The construction refuses to return unless every path of
// length `max_length` reduces to zero, which certifies that the truncation
// loses nothing.
//
// Every algebra is built together with its opposite; `opposite()` returns the
// partner and `opposite()->opposite()` is the original object.

#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taulab/field.hpp"
#include "taulab/linalg.hpp"
#include "taulab/quiver.hpp"

namespace taulab {

class BoundQuiverAlgebra;
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra>;

inline constexpr std::size_t kDefaultMaxLength = 12;

/// Raised when some path of the maximal length survives the reduction.
class AdmissibilityError : public Error {
 public:
  AdmissibilityError(const std::string& surviving_path)
      : Error("raise L_max or ideal not admissible: path " + surviving_path +
              " is not in the ideal"),
        surviving_path_(surviving_path) {}

  [[nodiscard]] const std::string& surviving_path() const noexcept {
    return surviving_path_;
  }

 private:
  std::string surviving_path_;
};

namespace detail {
struct AlgebraPair;
struct QuotientCache;
}  // namespace detail

class BoundQuiverAlgebra {
 public:
  [[nodiscard]] const Quiver& quiver() const noexcept { return quiver_; }
  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t max_length() const noexcept { return max_length_; }
  [[nodiscard]] const std::vector<Relation>& relations() const noexcept {
    return relations_;
  }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] std::size_t vertex_count() const noexcept {
    return quiver_.vertex_count();
  }

  /// Residue-path representatives, ordered by length then lexicographically.
  [[nodiscard]] const std::vector<Path>& basis() const noexcept {
    return basis_;
  }
  [[nodiscard]] std::size_t idempotent(std::size_t vertex) const {
    return idempotents_.at(vertex);
  }
  [[nodiscard]] std::size_t arrow_element(std::size_t arrow) const {
    return arrow_elements_.at(arrow);
  }

  /// Basis indices of e_v Λ e_w, i.e. residue paths from v to w.
  [[nodiscard]] const std::vector<std::size_t>& block(std::size_t v,
                                                      std::size_t w) const {
    return blocks_.at(v * vertex_count() + w);
  }

  /// Coordinates of basis[i] * basis[j].
  [[nodiscard]] const Vector& product(std::size_t i, std::size_t j) const {
    return mult_[i * dim() + j];
  }

  [[nodiscard]] Vector multiply(const Vector& x, const Vector& y) const {
    Vector out(dim(), 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) {
          continue;
        }
        const Scalar c = field_.mul(x[i], y[j]);
        const auto& prod = product(i, j);
        for (std::size_t k = 0; k < dim(); ++k) {
          if (prod[k] != 0) {
            out[k] = field_.add(out[k], field_.mul(c, prod[k]));
          }
        }
      }
    }
    return out;
  }

  [[nodiscard]] Vector unit(std::size_t i) const {
    Vector v(dim(), 0);
    v.at(i) = 1;
    return v;
  }

  /// Normal form of an arbitrary path, or the zero vector once it is longer
  /// than the truncation length.
  [[nodiscard]] Vector reduce_path(const Path& p) const {
    if (p.length() > max_length_) {
      return Vector(dim(), 0);
    }
    auto it = path_index_.find(p);
    if (it == path_index_.end()) {
      throw Error("reduce_path: not a path of this quiver");
    }
    return normal_forms_[it->second];
  }

  /// Coordinates in the opposite algebra of the reversed basis paths; column
  /// i is the image of basis[i].
  [[nodiscard]] const Matrix& to_opposite() const noexcept {
    return to_opposite_;
  }

  [[nodiscard]] AlgebraPtr opposite() const;

  /// Paths of length <= max_length, in normal-form order, and the row
  /// reduced ideal they span (columns follow `all_paths()`).
  [[nodiscard]] const std::vector<Path>& all_paths() const noexcept {
    return all_paths_;
  }
  [[nodiscard]] const std::vector<Vector>& ideal_rows() const noexcept {
    return ideal_rows_;
  }

  [[nodiscard]] std::string basis_name(std::size_t i) const {
    return path_name(quiver_, basis_.at(i));
  }

  /// Same quiver, field, basis and multiplication.
  [[nodiscard]] bool same_as(const BoundQuiverAlgebra& o) const {
    return this == &o || (field_ == o.field_ && quiver_ == o.quiver_ &&
                          basis_ == o.basis_ && mult_ == o.mult_);
  }

 private:
  friend AlgebraPtr build_algebra(const Quiver&, const std::vector<Relation>&,
                                  std::uint32_t, std::size_t);
  friend AlgebraPtr vertex_quotient(const AlgebraPtr&,
                                    const std::vector<std::size_t>&);
  friend struct detail::AlgebraPair;

  BoundQuiverAlgebra(Quiver q, std::vector<Relation> rels, Field f,
                     std::size_t max_length);

  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;
  std::size_t max_length_;

  std::vector<Path> all_paths_;
  std::map<Path, std::size_t> path_index_;
  std::vector<Vector> ideal_rows_;
  std::vector<Vector> normal_forms_;  // per entry of all_paths_

  std::vector<Path> basis_;
  std::vector<Vector> mult_;
  std::vector<std::size_t> idempotents_;
  std::vector<std::size_t> arrow_elements_;
  std::vector<std::vector<std::size_t>> blocks_;

  Matrix to_opposite_{Field(2), 0, 0};
  std::weak_ptr<detail::AlgebraPair> pair_;
  bool mirror_ = false;
  std::shared_ptr<detail::QuotientCache> quotients_;

  friend AlgebraPtr cached_vertex_quotient(const AlgebraPtr&,
                                           const std::vector<bool>&);
};

namespace detail {

struct AlgebraPair {
  AlgebraPair(const Quiver& q, const std::vector<Relation>& rels, Field f,
              std::size_t max_length, const std::vector<Relation>& op_rels)
      : primary(q, rels, f, max_length),
        mirror(q.reversed(), op_rels, f, max_length) {}

  BoundQuiverAlgebra primary;
  BoundQuiverAlgebra mirror;
};

struct QuotientCache {
  std::mutex mutex;
  std::map<std::vector<bool>, AlgebraPtr> entries;
};

inline std::vector<Path> enumerate_paths(const Quiver& q,
                                         std::size_t max_length) {
  std::vector<Path> out;
  std::vector<Path> level;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    level.push_back(Path::trivial(v));
  }
  out.insert(out.end(), level.begin(), level.end());
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<Path> next;
    for (const auto& p : level) {
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        const auto& arrow = q.arrow(a);
        if (arrow.source != p.target) {
          continue;
        }
        Path e = p;
        if (e.arrows.empty()) {
          e.source = arrow.source;
        }
        e.arrows.push_back(a);
        e.target = arrow.target;
        next.push_back(std::move(e));
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.empty()) {
      break;
    }
  }
  return out;
}

inline void validate_relation(const Quiver& q, const Relation& r, Field f) {
  if (r.terms.empty()) {
    throw Error("relation has no nonzero terms");
  }
  const auto& first = r.terms.front().path;
  for (const auto& t : r.terms) {
    if (t.coefficient % f.characteristic() == 0) {
      throw Error("relation term " + path_name(q, t.path) +
                  " has a zero coefficient");
    }
    if (t.path.length() < 2) {
      throw Error("relation term " + path_name(q, t.path) +
                  " has length < 2 (relations must lie in the square of the "
                  "arrow ideal)");
    }
    if (t.path.source != first.source || t.path.target != first.target) {
      throw Error("relation terms " + path_name(q, first) + " and " +
                  path_name(q, t.path) + " are not parallel");
    }
  }
}

}  // namespace detail

inline BoundQuiverAlgebra::BoundQuiverAlgebra(Quiver q,
                                              std::vector<Relation> rels,
                                              Field f, std::size_t max_length)
    : quiver_(std::move(q)),
      relations_(std::move(rels)),
      field_(f),
      max_length_(max_length),
      quotients_(std::make_shared<detail::QuotientCache>()) {
  if (max_length_ < 2) {
    throw Error("maximal path length must be at least 2");
  }
  for (const auto& r : relations_) {
    detail::validate_relation(quiver_, r, field_);
  }
  all_paths_ = detail::enumerate_paths(quiver_, max_length_);
  const std::size_t n = all_paths_.size();
  for (std::size_t i = 0; i < n; ++i) {
    path_index_.emplace(all_paths_[i], i);
  }

  // Ideal generators u*r*v, in reversed column order so the rref pivots land
  // on the largest paths.
  std::vector<std::vector<std::size_t>> ending_at(quiver_.vertex_count());
  std::vector<std::vector<std::size_t>> starting_at(quiver_.vertex_count());
  for (std::size_t i = 0; i < n; ++i) {
    ending_at[all_paths_[i].target].push_back(i);
    starting_at[all_paths_[i].source].push_back(i);
  }
  std::vector<Vector> generators;
  for (const auto& r : relations_) {
    const auto s = r.terms.front().path.source;
    const auto t = r.terms.front().path.target;
    std::size_t shortest = max_length_ + 1;
    for (const auto& term : r.terms) {
      shortest = std::min(shortest, term.path.length());
    }
    for (auto ui : ending_at[s]) {
      const auto& u = all_paths_[ui];
      if (u.length() + shortest > max_length_) {
        continue;
      }
      for (auto vi : starting_at[t]) {
        const auto& v = all_paths_[vi];
        if (u.length() + shortest + v.length() > max_length_) {
          continue;
        }
        Vector g(n, 0);
        for (const auto& term : r.terms) {
          auto uv = concatenate(*concatenate(u, term.path), v);
          if (uv->length() > max_length_) {
            continue;
          }
          const auto col = n - 1 - path_index_.at(*uv);
          g[col] = field_.add(g[col], field_.reduce(term.coefficient));
        }
        if (!is_zero_vector(g)) {
          generators.push_back(std::move(g));
        }
      }
    }
  }
  const auto red = rref(Matrix::from_rows(field_, n, generators));
  std::vector<std::ptrdiff_t> pivot_row(n, -1);
  for (std::size_t i = 0; i < red.rank; ++i) {
    pivot_row[n - 1 - red.pivots[i]] = static_cast<std::ptrdiff_t>(i);
    Vector row(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      row[n - 1 - c] = red.reduced(i, c);
    }
    ideal_rows_.push_back(std::move(row));
  }
  std::sort(ideal_rows_.begin(), ideal_rows_.end());

  std::vector<std::ptrdiff_t> basis_position(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (pivot_row[i] < 0) {
      basis_position[i] = static_cast<std::ptrdiff_t>(basis_.size());
      basis_.push_back(all_paths_[i]);
    }
  }
  const std::size_t d = basis_.size();
  normal_forms_.assign(n, Vector(d, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (pivot_row[i] < 0) {
      normal_forms_[i][static_cast<std::size_t>(basis_position[i])] = 1;
      continue;
    }
    const auto row = static_cast<std::size_t>(pivot_row[i]);
    for (std::size_t c = 0; c < n; ++c) {
      const auto path = n - 1 - c;
      const auto coeff = red.reduced(row, c);
      if (path == i || coeff == 0) {
        continue;
      }
      const auto pos = basis_position[path];
      if (pos < 0) {
        throw InternalError("normal form refers to a non-basis path");
      }
      normal_forms_[i][static_cast<std::size_t>(pos)] = field_.neg(coeff);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (all_paths_[i].length() == max_length_ &&
        !is_zero_vector(normal_forms_[i])) {
      throw AdmissibilityError(path_name(quiver_, all_paths_[i]));
    }
  }

  idempotents_.resize(quiver_.vertex_count());
  arrow_elements_.resize(quiver_.arrow_count());
  blocks_.assign(quiver_.vertex_count() * quiver_.vertex_count(), {});
  for (std::size_t i = 0; i < d; ++i) {
    const auto& b = basis_[i];
    if (b.is_trivial()) {
      idempotents_[b.source] = i;
    } else if (b.length() == 1) {
      arrow_elements_[b.arrows.front()] = i;
    }
    blocks_[b.source * quiver_.vertex_count() + b.target].push_back(i);
  }
  for (std::size_t a = 0; a < quiver_.arrow_count(); ++a) {
    const auto& b = basis_[arrow_elements_[a]];
    if (b.length() != 1 || b.arrows.front() != a) {
      throw InternalError("arrow missing from algebra basis");
    }
  }

  mult_.assign(d * d, Vector(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      auto c = concatenate(basis_[i], basis_[j]);
      if (c) {
        mult_[i * d + j] = reduce_path(*c);
      }
    }
  }
}

inline AlgebraPtr BoundQuiverAlgebra::opposite() const {
  auto pair = pair_.lock();
  if (!pair) {
    throw InternalError("algebra is not owned by a pair");
  }
  return {pair, mirror_ ? &pair->primary : &pair->mirror};
}

/// Build kQ/I for the ideal generated by `relations`, verifying that every
/// path of length `max_length` lies in the ideal.
inline AlgebraPtr build_algebra(const Quiver& quiver,
                                const std::vector<Relation>& relations,
                                std::uint32_t p,
                                std::size_t max_length = kDefaultMaxLength) {
  const Field f(p);
  std::vector<Relation> op_rels;
  for (const auto& r : relations) {
    Relation o;
    for (const auto& t : r.terms) {
      o.terms.push_back({t.coefficient, reverse_path(t.path)});
    }
    op_rels.push_back(std::move(o));
  }
  auto pair = std::make_shared<detail::AlgebraPair>(quiver, relations, f,
                                                    max_length, op_rels);
  pair->primary.pair_ = pair;
  pair->mirror.pair_ = pair;
  pair->mirror.mirror_ = true;

  auto link = [f](const BoundQuiverAlgebra& from, const BoundQuiverAlgebra& to) {
    Matrix m(f, to.dim(), from.dim());
    for (std::size_t i = 0; i < from.dim(); ++i) {
      const auto image = to.reduce_path(reverse_path(from.basis()[i]));
      for (std::size_t k = 0; k < to.dim(); ++k) {
        m(k, i) = image[k];
      }
    }
    return m;
  };
  pair->primary.to_opposite_ = link(pair->primary, pair->mirror);
  pair->mirror.to_opposite_ = link(pair->mirror, pair->primary);
  if (pair->primary.dim() != pair->mirror.dim()) {
    throw InternalError("algebra and its opposite differ in dimension");
  }
  return {pair, &pair->primary};
}

inline AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }

/// Λ/(e) for e the sum of the idempotents at `kill`. The surviving quiver
/// keeps vertex and arrow names, so modules transfer by name.
inline AlgebraPtr vertex_quotient(const AlgebraPtr& a,
                                  const std::vector<std::size_t>& kill) {
  const auto& q = a->quiver();
  std::vector<bool> killed(q.vertex_count(), false);
  for (auto v : kill) {
    if (v >= q.vertex_count()) {
      throw Error("vertex_quotient: vertex index out of range");
    }
    killed[v] = true;
  }
  if (std::all_of(killed.begin(), killed.end(), [](bool k) { return k; })) {
    throw Error("vertex_quotient: killing every vertex gives the zero algebra");
  }
  Quiver sub;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    if (!killed[v]) {
      sub.add_vertex(q.vertex(v));
    }
  }
  for (const auto& arrow : q.arrows()) {
    if (!killed[arrow.source] && !killed[arrow.target]) {
      sub.add_arrow(arrow.name, q.vertex(arrow.source), q.vertex(arrow.target));
    }
  }
  auto translate = [&](const Path& p) -> std::optional<Path> {
    for (auto v : path_vertices(q, p)) {
      if (killed[v]) {
        return std::nullopt;
      }
    }
    Path out;
    out.source = *sub.find_vertex(q.vertex(p.source));
    out.target = *sub.find_vertex(q.vertex(p.target));
    for (auto ai : p.arrows) {
      out.arrows.push_back(*sub.find_arrow(q.arrow(ai).name));
    }
    return out;
  };
  // The ideal rows are block pure, so their projections are parallel
  // combinations and serve directly as relations.
  std::vector<Relation> rels;
  for (const auto& row : a->ideal_rows()) {
    Relation r;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == 0) {
        continue;
      }
      if (auto t = translate(a->all_paths()[i])) {
        r.terms.push_back({row[i], *t});
      }
    }
    if (!r.terms.empty()) {
      rels.push_back(std::move(r));
    }
  }
  return build_algebra(sub, rels, a->field().characteristic(),
                       a->max_length());
}

/// vertex_quotient with a per-algebra memo keyed by the killed set.
inline AlgebraPtr cached_vertex_quotient(const AlgebraPtr& a,
                                         const std::vector<bool>& killed) {
  auto& cache = *a->quotients_;
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.entries.find(killed);
    if (it != cache.entries.end()) {
      return it->second;
    }
  }
  std::vector<std::size_t> kill;
  for (std::size_t v = 0; v < killed.size(); ++v) {
    if (killed[v]) {
      kill.push_back(v);
    }
  }
  auto result = vertex_quotient(a, kill);
  std::lock_guard lock(cache.mutex);
  return cache.entries.emplace(killed, std::move(result)).first->second;
}

}  // namespace taulab

// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Right modules over a bound quiver algebra, realized as representations:
// one vector space per vertex and one matrix per arrow. With the path
// convention "a1.a2 = a1 then a2", a path acts on column vectors as the
// product of its arrow matrices taken right to left.

#pragma once

#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "taulab/algebra.hpp"
#include "taulab/linalg.hpp"

namespace taulab {

class Representation {
 public:
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                 std::vector<Matrix> maps)
      : algebra_(std::move(algebra)),
        dims_(std::move(dims)),
        maps_(std::move(maps)) {
    validate();
  }

  static Representation zero(const AlgebraPtr& algebra) {
    std::vector<std::size_t> dims(algebra->vertex_count(), 0);
    return from_dims(algebra, dims);
  }

  /// All arrow maps zero.
  static Representation from_dims(const AlgebraPtr& algebra,
                                  const std::vector<std::size_t>& dims) {
    std::vector<Matrix> maps;
    for (const auto& a : algebra->quiver().arrows()) {
      maps.emplace_back(algebra->field(), dims.at(a.target), dims.at(a.source));
    }
    return {algebra, dims, std::move(maps)};
  }

  static Representation simple(const AlgebraPtr& algebra, std::size_t v) {
    std::vector<std::size_t> dims(algebra->vertex_count(), 0);
    dims.at(v) = 1;
    return from_dims(algebra, dims);
  }

  [[nodiscard]] const AlgebraPtr& algebra() const noexcept { return algebra_; }
  [[nodiscard]] const Field& field() const noexcept {
    return algebra_->field();
  }
  [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept {
    return dims_;
  }
  [[nodiscard]] std::size_t dim(std::size_t v) const { return dims_.at(v); }
  [[nodiscard]] std::size_t total_dim() const noexcept {
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
  }
  [[nodiscard]] bool is_zero() const noexcept { return total_dim() == 0; }
  [[nodiscard]] const std::vector<Matrix>& maps() const noexcept {
    return maps_;
  }
  [[nodiscard]] const Matrix& map(std::size_t arrow) const {
    return maps_.at(arrow);
  }

  /// Linear map M_source -> M_target induced by the path.
  [[nodiscard]] Matrix path_map(const Path& p) const {
    Matrix m = Matrix::identity(field(), dims_.at(p.source));
    for (auto a : p.arrows) {
      m = maps_[a] * m;
    }
    return m;
  }

  /// Action of the part of `element` lying in e_v Λ e_w, as M_v -> M_w.
  [[nodiscard]] Matrix element_map(const Vector& element, std::size_t v,
                                   std::size_t w) const {
    Matrix m(field(), dims_.at(w), dims_.at(v));
    for (auto i : algebra_->block(v, w)) {
      if (element[i] != 0) {
        m += path_map(algebra_->basis()[i]).scaled(element[i]);
      }
    }
    return m;
  }

  /// Offsets of each vertex block in the flattened concatenation of all
  /// vertex spaces.
  [[nodiscard]] std::vector<std::size_t> offsets() const {
    std::vector<std::size_t> out(dims_.size() + 1, 0);
    for (std::size_t v = 0; v < dims_.size(); ++v) {
      out[v + 1] = out[v] + dims_[v];
    }
    return out;
  }

  /// Module-file text: `dim` lines for every vertex, `map` lines for every
  /// arrow with a nonempty matrix.
  [[nodiscard]] std::string to_text() const {
    std::ostringstream os;
    const auto& q = algebra_->quiver();
    for (std::size_t v = 0; v < dims_.size(); ++v) {
      os << "dim " << q.vertex(v) << ' ' << dims_[v] << '\n';
    }
    for (std::size_t a = 0; a < maps_.size(); ++a) {
      if (maps_[a].empty()) {
        continue;
      }
      os << "map " << q.arrow(a).name;
      for (auto x : maps_[a].entries()) {
        os << ' ' << x;
      }
      os << '\n';
    }
    return os.str();
  }

  /// Byte key for exact (not up-to-isomorphism) comparison and ordering.
  [[nodiscard]] std::vector<std::size_t> key() const {
    std::vector<std::size_t> k(dims_.begin(), dims_.end());
    for (const auto& m : maps_) {
      k.insert(k.end(), m.entries().begin(), m.entries().end());
    }
    return k;
  }

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.algebra_->same_as(*b.algebra_) && a.dims_ == b.dims_ &&
           a.maps_ == b.maps_;
  }

 private:
  void validate() const {
    const auto& q = algebra_->quiver();
    if (dims_.size() != q.vertex_count()) {
      throw Error("dimension vector length does not match vertex count");
    }
    if (maps_.size() != q.arrow_count()) {
      throw Error("representation needs exactly one matrix per arrow");
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arrow = q.arrow(a);
      if (maps_[a].rows() != dims_[arrow.target] ||
          maps_[a].cols() != dims_[arrow.source]) {
        throw Error("matrix for arrow '" + arrow.name +
                    "' has the wrong shape");
      }
      if (!(maps_[a].field() == field())) {
        throw Error("matrix for arrow '" + arrow.name +
                    "' is over the wrong field");
      }
    }
    for (const auto& r : algebra_->relations()) {
      const auto& first = r.terms.front().path;
      Matrix sum(field(), dims_[first.target], dims_[first.source]);
      for (const auto& t : r.terms) {
        sum += path_map(t.path).scaled(field().reduce(t.coefficient));
      }
      if (!sum.is_zero()) {
        throw Error("representation violates a relation starting with " +
                    path_name(q, first));
      }
    }
  }

  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

/// A family of per-vertex matrices commuting with the arrow maps.
class Morphism {
 public:
  Morphism(Representation source, Representation target,
           std::vector<Matrix> components)
      : source_(std::move(source)),
        target_(std::move(target)),
        components_(std::move(components)) {
    validate();
  }

  static Morphism zero(const Representation& source,
                       const Representation& target) {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < source.dims().size(); ++v) {
      comps.emplace_back(source.field(), target.dim(v), source.dim(v));
    }
    return {source, target, std::move(comps)};
  }

  static Morphism identity(const Representation& m) {
    std::vector<Matrix> comps;
    for (auto d : m.dims()) {
      comps.push_back(Matrix::identity(m.field(), d));
    }
    return {m, m, std::move(comps)};
  }

  [[nodiscard]] const Representation& source() const noexcept {
    return source_;
  }
  [[nodiscard]] const Representation& target() const noexcept {
    return target_;
  }
  [[nodiscard]] const Matrix& component(std::size_t v) const {
    return components_.at(v);
  }
  [[nodiscard]] const std::vector<Matrix>& components() const noexcept {
    return components_;
  }

  /// Entries of every component, vertex-major and row-major.
  [[nodiscard]] Vector flatten() const {
    Vector out;
    for (const auto& c : components_) {
      out.insert(out.end(), c.entries().begin(), c.entries().end());
    }
    return out;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& c : components_) {
      if (!c.is_zero()) {
        return false;
      }
    }
    return true;
  }
  [[nodiscard]] bool is_injective() const {
    for (const auto& c : components_) {
      if (rank(c) != c.cols()) {
        return false;
      }
    }
    return true;
  }
  [[nodiscard]] bool is_surjective() const {
    for (const auto& c : components_) {
      if (rank(c) != c.rows()) {
        return false;
      }
    }
    return true;
  }
  [[nodiscard]] bool is_isomorphism() const {
    return is_injective() && is_surjective();
  }

  /// this ∘ f
  [[nodiscard]] Morphism after(const Morphism& f) const {
    if (!(f.target_.dims() == source_.dims())) {
      throw Error("morphism composition shape mismatch");
    }
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < components_.size(); ++v) {
      comps.push_back(components_[v] * f.components_[v]);
    }
    return {f.source_, target_, std::move(comps)};
  }

  [[nodiscard]] Morphism scaled(Scalar s) const {
    auto comps = components_;
    for (auto& c : comps) {
      c = c.scaled(s);
    }
    return {source_, target_, std::move(comps)};
  }

  Morphism& operator+=(const Morphism& o) {
    for (std::size_t v = 0; v < components_.size(); ++v) {
      components_[v] += o.components_.at(v);
    }
    return *this;
  }
  friend Morphism operator+(Morphism a, const Morphism& b) { return a += b; }
  friend Morphism operator-(Morphism a, const Morphism& b) {
    for (std::size_t v = 0; v < a.components_.size(); ++v) {
      a.components_[v] -= b.components_.at(v);
    }
    return a;
  }

 private:
  void validate() const {
    const auto& q = source_.algebra()->quiver();
    if (!source_.algebra()->same_as(*target_.algebra())) {
      throw Error("morphism between modules over different algebras");
    }
    if (components_.size() != q.vertex_count()) {
      throw Error("morphism needs one matrix per vertex");
    }
    for (std::size_t v = 0; v < components_.size(); ++v) {
      if (components_[v].rows() != target_.dim(v) ||
          components_[v].cols() != source_.dim(v)) {
        throw Error("morphism component has the wrong shape");
      }
    }
    for (std::size_t a = 0; a < q.arrow_count(); ++a) {
      const auto& arrow = q.arrow(a);
      if (!(components_[arrow.target] * source_.map(a) ==
            target_.map(a) * components_[arrow.source])) {
        throw Error("morphism does not commute with arrow '" + arrow.name +
                    "'");
      }
    }
  }

  Representation source_;
  Representation target_;
  std::vector<Matrix> components_;
};

/// A direct sum together with its structure maps.
struct DirectSum {
  Representation module;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};

inline DirectSum direct_sum_with_maps(const std::vector<Representation>& parts,
                                      const AlgebraPtr& algebra) {
  const auto& q = algebra->quiver();
  const Field& f = algebra->field();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  for (const auto& m : parts) {
    if (!m.algebra()->same_as(*algebra)) {
      throw Error("direct sum of modules over different algebras");
    }
    for (std::size_t v = 0; v < dims.size(); ++v) {
      dims[v] += m.dim(v);
    }
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arrow = q.arrow(a);
    Matrix m(f, dims[arrow.target], dims[arrow.source]);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& part : parts) {
      m.set_block(r0, c0, part.map(a));
      r0 += part.dim(arrow.target);
      c0 += part.dim(arrow.source);
    }
    maps.push_back(std::move(m));
  }
  Representation sum(algebra, dims, std::move(maps));
  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> offset(q.vertex_count(), 0);
  for (const auto& part : parts) {
    std::vector<Matrix> inj;
    std::vector<Matrix> proj;
    for (std::size_t v = 0; v < dims.size(); ++v) {
      Matrix i(f, dims[v], part.dim(v));
      Matrix p(f, part.dim(v), dims[v]);
      for (std::size_t k = 0; k < part.dim(v); ++k) {
        i(offset[v] + k, k) = 1;
        p(k, offset[v] + k) = 1;
      }
      inj.push_back(std::move(i));
      proj.push_back(std::move(p));
      offset[v] += part.dim(v);
    }
    out.injections.emplace_back(part, sum, std::move(inj));
    out.projections.emplace_back(sum, part, std::move(proj));
  }
  return out;
}

inline Representation direct_sum(const std::vector<Representation>& parts,
                                  const AlgebraPtr& algebra) {
  return direct_sum_with_maps(parts, algebra).module;
}

inline Representation direct_sum(const Representation& a,
                                 const Representation& b) {
  return direct_sum({a, b}, a.algebra());
}

inline Representation power(const Representation& m, std::size_t k) {
  return direct_sum(std::vector<Representation>(k, m), m.algebra());
}

/// Vector-space dual D = Hom_k(-, k): a module over the opposite algebra
/// with transposed arrow maps.
inline Representation dual(const Representation& m) {
  std::vector<Matrix> maps;
  for (const auto& a : m.maps()) {
    maps.push_back(a.transpose());
  }
  return {m.algebra()->opposite(), m.dims(), std::move(maps)};
}

/// D(f): D(target) -> D(source).
inline Morphism dual(const Morphism& f) {
  std::vector<Matrix> comps;
  for (const auto& c : f.components()) {
    comps.push_back(c.transpose());
  }
  return {dual(f.target()), dual(f.source()), std::move(comps)};
}

}  // namespace taulab

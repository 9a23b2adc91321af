// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Structure of finite-dimensional F_p-algebras given by structure constants,
// applied to endomorphism rings of modules.
//
// The Jacobson radical uses the characteristic-p trace method on the left
// regular representation: starting from the whole algebra, repeatedly keep
// the elements x with g_l(x y) = 0 for every basis element y, where
// g_l(a) = Tr(ã^(p^l)) / p^l mod p and ã is the integer lift of the
// left-multiplication matrix of a. After floor(log_p dim) + 1 rounds what is
// left is the radical. The result is then re-checked: two-sided ideal,
// nilpotent, and a quotient whose own radical is zero.
//
// Counting and splitting happen in the semisimple quotient B = A/rad A:
// the number of simple blocks is the dimension of the fixed space of the
// p-power map on the centre of B, and idempotents of B lift to A through
// e <- 3e^2 - 2e^3.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "taulab/field.hpp"
#include "taulab/linalg.hpp"
#include "taulab/module_ops.hpp"
#include "taulab/polynomial.hpp"
#include "taulab/representation.hpp"

namespace taulab {

class StructureConstantAlgebra {
 public:
  /// `products[i * dim + j]` holds the coordinates of b_i b_j.
  StructureConstantAlgebra(Field field, std::size_t dim,
                           std::vector<Vector> products, Vector identity,
                           bool verify = true)
      : field_(field),
        dim_(dim),
        products_(std::move(products)),
        identity_(std::move(identity)) {
    if (products_.size() != dim_ * dim_ || identity_.size() != dim_) {
      throw Error("structure constants have the wrong shape");
    }
    if (verify) {
      check_axioms();
    }
  }

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const Vector& identity() const noexcept { return identity_; }
  [[nodiscard]] const Vector& product(std::size_t i, std::size_t j) const {
    return products_[i * dim_ + j];
  }
  [[nodiscard]] const std::vector<Morphism>& action() const noexcept {
    return action_;
  }
  void set_action(std::vector<Morphism> action) { action_ = std::move(action); }

  [[nodiscard]] Vector unit(std::size_t i) const {
    Vector v(dim_, 0);
    v.at(i) = 1;
    return v;
  }

  [[nodiscard]] Vector multiply(const Vector& x, const Vector& y) const {
    Vector out(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        if (y[j] == 0) {
          continue;
        }
        const Scalar c = field_.mul(x[i], y[j]);
        const auto& prod = product(i, j);
        for (std::size_t k = 0; k < dim_; ++k) {
          if (prod[k] != 0) {
            out[k] = field_.add(out[k], field_.mul(c, prod[k]));
          }
        }
      }
    }
    return out;
  }

  [[nodiscard]] Vector power(Vector x, std::uint64_t e) const {
    Vector result = identity_;
    while (e > 0) {
      if ((e & 1U) != 0) {
        result = multiply(result, x);
      }
      x = multiply(x, x);
      e >>= 1U;
    }
    return result;
  }

  [[nodiscard]] Vector linear(const Vector& x, Scalar a, const Vector& y,
                              Scalar b) const {
    Vector out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) {
      out[k] = field_.add(field_.mul(a, x[k]), field_.mul(b, y[k]));
    }
    return out;
  }

  /// Matrix of y -> x y; column j is x b_j.
  [[nodiscard]] Matrix left_multiplication(const Vector& x) const {
    Matrix m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto col = multiply(x, unit(j));
      for (std::size_t k = 0; k < dim_; ++k) {
        m(k, j) = col[k];
      }
    }
    return m;
  }

  [[nodiscard]] bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = i + 1; j < dim_; ++j) {
        if (product(i, j) != product(j, i)) {
          return false;
        }
      }
    }
    return true;
  }

  /// Element realized as a module endomorphism; requires an action.
  [[nodiscard]] Morphism act(const Vector& x) const {
    if (action_.size() != dim_ || dim_ == 0) {
      throw Error("algebra carries no module action");
    }
    Morphism out = action_[0].scaled(x[0]);
    for (std::size_t i = 1; i < dim_; ++i) {
      if (x[i] != 0) {
        out += action_[i].scaled(x[i]);
      }
    }
    return out;
  }

 private:
  void check_axioms() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto e = unit(i);
      if (multiply(identity_, e) != e || multiply(e, identity_) != e) {
        throw InternalError("identity element fails on a basis element");
      }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        const auto ij = product(i, j);
        for (std::size_t k = 0; k < dim_; ++k) {
          if (multiply(ij, unit(k)) != multiply(unit(i), product(j, k))) {
            throw InternalError("structure constants are not associative");
          }
        }
      }
    }
  }

  Field field_;
  std::size_t dim_;
  std::vector<Vector> products_;
  Vector identity_;
  std::vector<Morphism> action_;
};

/// End(m) with basis hom_basis(m, m) and product x·y = x ∘ y.
inline StructureConstantAlgebra endomorphism_algebra(const Representation& m) {
  const Field& f = m.field();
  const auto basis = hom_basis(m, m);
  const std::size_t d = basis.size();
  std::vector<Vector> flat;
  flat.reserve(d);
  for (const auto& b : basis) {
    flat.push_back(b.flatten());
  }
  const std::size_t len = flat.empty() ? 0 : flat.front().size();
  const auto space = Subspace::span(f, len, flat);
  if (space.dim() != d) {
    throw InternalError("hom basis is not linearly independent");
  }
  // The hom basis is normally the echelon basis of `space` itself, in which
  // case coordinates are read at the pivots; otherwise solve.
  const bool echelon = space.vectors() == flat;
  const Matrix columns = Matrix::from_columns(f, len, flat);
  auto coords = [&](const Morphism& x) {
    const auto v = x.flatten();
    if (!space.contains(v)) {
      throw InternalError("composite of endomorphisms left End(M)");
    }
    if (echelon) {
      return space.coordinates(v);
    }
    return *solve(columns, v);
  };
  std::vector<Vector> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      products[i * d + j] = coords(basis[i].after(basis[j]));
    }
  }
  Vector identity = d == 0 ? Vector{} : coords(Morphism::identity(m));
  StructureConstantAlgebra out(f, d, std::move(products), std::move(identity),
                               d <= 24);
  out.set_action(basis);
  return out;
}

struct RadicalData {
  Subspace radical;
  std::size_t nilpotency_index;  // least k with rad^k = 0 (rad^0 = A)
};

namespace detail {

/// Tr(lift(m)^(p^l)) computed mod p^(l+1), divided by p^l, reduced mod p.
inline Scalar lifted_trace_coefficient(const Matrix& m, std::size_t level) {
  const std::uint64_t p = m.field().characteristic();
  std::uint64_t pl = 1;
  for (std::size_t i = 0; i < level; ++i) {
    pl *= p;
  }
  const std::uint64_t modulus = pl * p;
  const std::size_t n = m.rows();
  using Big = std::vector<std::uint64_t>;
  auto mul = [&](const Big& a, const Big& b) {
    Big c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto aik = a[i * n + k];
        if (aik == 0) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          c[i * n + j] = (c[i * n + j] + aik * b[k * n + j]) % modulus;
        }
      }
    }
    return c;
  };
  Big base(m.entries().begin(), m.entries().end());
  Big result(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    result[i * n + i] = 1 % modulus;
  }
  std::uint64_t e = pl;
  while (e > 0) {
    if ((e & 1U) != 0) {
      result = mul(result, base);
    }
    base = mul(base, base);
    e >>= 1U;
  }
  std::uint64_t trace = 0;
  for (std::size_t i = 0; i < n; ++i) {
    trace = (trace + result[i * n + i]) % modulus;
  }
  if (trace % pl != 0) {
    throw InternalError("lifted trace is not divisible by p^l");
  }
  return static_cast<Scalar>((trace / pl) % p);
}

inline Subspace span_of_products(const StructureConstantAlgebra& a,
                                 const Subspace& left, const Subspace& right) {
  std::vector<Vector> gens;
  for (const auto& x : left.vectors()) {
    for (const auto& y : right.vectors()) {
      gens.push_back(a.multiply(x, y));
    }
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

inline Subspace trace_method_radical(const StructureConstantAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  const std::uint64_t p = f.characteristic();
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    left.push_back(a.left_multiplication(a.unit(i)));
  }
  auto left_of = [&](const Vector& x) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] != 0) {
        m += left[i].scaled(x[i]);
      }
    }
    return m;
  };
  Subspace current = Subspace::full(f, n);
  std::uint64_t pl = 1;
  for (std::size_t level = 0; pl <= n; ++level, pl *= p) {
    const auto basis = current.vectors();
    if (basis.empty()) {
      break;
    }
    Matrix conditions(f, n, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      for (std::size_t y = 0; y < n; ++y) {
        const auto xy = a.multiply(basis[k], a.unit(y));
        conditions(y, k) = lifted_trace_coefficient(left_of(xy), level);
      }
    }
    const auto kept = kernel_basis(conditions);
    std::vector<Vector> next;
    for (const auto& c : kept.vectors()) {
      Vector x(n, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (c[k] == 0) {
          continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
          x[i] = f.add(x[i], f.mul(c[k], basis[k][i]));
        }
      }
      next.push_back(std::move(x));
    }
    current = Subspace::span(f, n, next);
  }
  return current;
}

}  // namespace detail

/// A / ideal on the standard complement of the ideal's echelon basis.
struct QuotientAlgebra {
  StructureConstantAlgebra algebra;
  Matrix projection;  // quotient dim x dim A
  Matrix section;     // dim A x quotient dim
};

inline QuotientAlgebra quotient_algebra(const StructureConstantAlgebra& a,
                                        const Subspace& ideal) {
  const Field& f = a.field();
  const auto free = ideal.free_positions();
  const std::size_t d = free.size();
  Matrix proj(f, d, a.dim());
  Matrix sect(f, a.dim(), d);
  for (std::size_t j = 0; j < d; ++j) {
    proj(j, free[j]) = 1;
    sect(free[j], j) = 1;
    for (std::size_t i = 0; i < ideal.dim(); ++i) {
      proj(j, ideal.pivots()[i]) = f.neg(ideal.basis()(i, free[j]));
    }
  }
  std::vector<Vector> products(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      products[i * d + j] =
          proj.apply(a.multiply(sect.column(i), sect.column(j)));
    }
  }
  Vector identity = proj.apply(a.identity());
  return {StructureConstantAlgebra(f, d, std::move(products),
                                   std::move(identity), d <= 24),
          std::move(proj), std::move(sect)};
}

inline bool is_two_sided_ideal(const StructureConstantAlgebra& a,
                               const Subspace& s) {
  for (const auto& x : s.vectors()) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!s.contains(a.multiply(x, a.unit(i))) ||
          !s.contains(a.multiply(a.unit(i), x))) {
        return false;
      }
    }
  }
  return true;
}

/// Least k with s^k = 0, or nothing if s is not nilpotent.
inline std::optional<std::size_t> nilpotency_index(
    const StructureConstantAlgebra& a, const Subspace& s) {
  if (s.is_zero()) {
    return 1;
  }
  Subspace power = s;
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    if (power.is_zero()) {
      return k;
    }
    power = detail::span_of_products(a, power, s);
  }
  return std::nullopt;
}

inline RadicalData jacobson_radical(const StructureConstantAlgebra& a,
                                    bool check_quotient = true) {
  if (a.dim() == 0) {
    throw Error("jacobson_radical: zero algebra");
  }
  auto rad = detail::trace_method_radical(a);
  if (!is_two_sided_ideal(a, rad)) {
    throw InternalError("computed radical is not a two-sided ideal");
  }
  const auto index = nilpotency_index(a, rad);
  if (!index) {
    throw InternalError("computed radical is not nilpotent");
  }
  if (check_quotient && !rad.is_zero()) {
    const auto q = quotient_algebra(a, rad);
    if (!detail::trace_method_radical(q.algebra).is_zero()) {
      throw InternalError("algebra modulo its radical is not semisimple");
    }
  }
  return {std::move(rad), *index};
}

/// Elements commuting with every basis element.
inline Subspace center(const StructureConstantAlgebra& a) {
  const Field& f = a.field();
  const std::size_t n = a.dim();
  Matrix conditions(f, n * n, n);
  for (std::size_t j = 0; j < n; ++j) {  // z = b_j
    for (std::size_t k = 0; k < n; ++k) {
      const auto zb = a.product(j, k);
      const auto bz = a.product(k, j);
      for (std::size_t c = 0; c < n; ++c) {
        conditions(k * n + c, j) = f.sub(zb[c], bz[c]);
      }
    }
  }
  return kernel_basis(conditions);
}

/// Fixed space of z -> z^p on the centre of a commutative-or-not algebra
/// (only meaningful when the algebra is semisimple).
inline Subspace frobenius_fixed_central(const StructureConstantAlgebra& a) {
  const Field& f = a.field();
  const auto z = center(a);
  const auto zb = z.vectors();
  Matrix frob(f, z.dim(), z.dim());
  for (std::size_t i = 0; i < zb.size(); ++i) {
    const auto image = a.power(zb[i], f.characteristic());
    if (!z.contains(image)) {
      throw InternalError("p-th power left the centre");
    }
    const auto c = z.coordinates(image);
    for (std::size_t r = 0; r < c.size(); ++r) {
      frob(r, i) = c[r];
    }
  }
  frob -= Matrix::identity(f, z.dim());
  const auto kern = kernel_basis(frob);
  std::vector<Vector> out;
  for (const auto& c : kern.vectors()) {
    Vector x(a.dim(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t k = 0; k < a.dim(); ++k) {
        x[k] = f.add(x[k], f.mul(c[i], zb[i][k]));
      }
    }
    out.push_back(std::move(x));
  }
  return Subspace::span(f, a.dim(), out);
}

inline std::size_t block_count(const StructureConstantAlgebra& a) {
  if (a.dim() == 0) {
    throw Error("block_count: zero algebra");
  }
  const auto rad = jacobson_radical(a);
  if (rad.radical.is_zero()) {
    return frobenius_fixed_central(a).dim();
  }
  const auto q = quotient_algebra(a, rad.radical);
  return frobenius_fixed_central(q.algebra).dim();
}

/// a × b with the product basis (a's basis first).
inline StructureConstantAlgebra product_algebra(
    const StructureConstantAlgebra& a, const StructureConstantAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Vector> products(n * n, Vector(n, 0));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      std::copy(a.product(i, j).begin(), a.product(i, j).end(),
                products[i * n + j].begin());
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      std::copy(b.product(i, j).begin(), b.product(i, j).end(),
                products[(a.dim() + i) * n + a.dim() + j].begin() +
                    static_cast<std::ptrdiff_t>(a.dim()));
    }
  }
  Vector identity(a.identity());
  identity.insert(identity.end(), b.identity().begin(), b.identity().end());
  return {a.field(), n, std::move(products), std::move(identity)};
}

namespace detail {

/// Minimal polynomial of x via the Krylov sequence 1, x, x^2, ...
inline poly::Poly minimal_polynomial(const StructureConstantAlgebra& a,
                                     const Vector& x) {
  const Field& f = a.field();
  std::vector<Vector> powers{a.identity()};
  while (true) {
    const auto next = a.multiply(powers.back(), x);
    const Matrix cols = Matrix::from_columns(f, a.dim(), powers);
    if (auto c = solve(cols, next)) {
      poly::Poly m(powers.size() + 1, 0);
      for (std::size_t i = 0; i < c->size(); ++i) {
        m[i] = f.neg((*c)[i]);
      }
      m.back() = 1;
      return m;
    }
    powers.push_back(next);
  }
}

inline Vector evaluate_at(const StructureConstantAlgebra& a,
                          const poly::Poly& g, const Vector& x) {
  Vector acc(a.dim(), 0);
  for (auto it = g.rbegin(); it != g.rend(); ++it) {
    acc = a.multiply(acc, x);
    acc = a.linear(acc, 1, a.identity(), *it);
  }
  return acc;
}

/// A nontrivial idempotent of a semisimple algebra with at least two blocks:
/// Lagrange interpolation at an eigenvalue of a non-scalar central element
/// fixed by the p-power map (its minimal polynomial divides x^p - x).
inline std::optional<Vector> central_idempotent(
    const StructureConstantAlgebra& b) {
  const Field& f = b.field();
  const auto fixed = frobenius_fixed_central(b);
  if (fixed.dim() < 2) {
    return std::nullopt;
  }
  const auto scalars = Subspace::span(f, b.dim(), std::vector<Vector>{b.identity()});
  for (const auto& z : fixed.vectors()) {
    if (scalars.contains(z)) {
      continue;
    }
    const auto m = minimal_polynomial(b, z);
    std::vector<Scalar> roots;
    for (Scalar c = 0; c < f.characteristic(); ++c) {
      if (poly::evaluate(f, m, c) == 0) {
        roots.push_back(c);
      }
    }
    if (roots.size() < 2 ||
        static_cast<long>(roots.size()) != poly::degree(m)) {
      throw InternalError("p-power fixed element does not split");
    }
    const Scalar c = roots.front();
    Vector e = b.identity();
    for (std::size_t r = 1; r < roots.size(); ++r) {
      // (z - c') / (c - c')
      const Scalar denom = f.inv(f.sub(c, roots[r]));
      const auto factor =
          b.linear(z, denom, b.identity(), f.mul(f.neg(roots[r]), denom));
      e = b.multiply(e, factor);
    }
    return e;
  }
  return std::nullopt;
}

/// A nontrivial idempotent of a simple algebra M_k(F_q), k >= 2: find an
/// element with a reducible minimal polynomial, turn a proper factor into a
/// zero divisor a, and solve a y a = a (von Neumann regularity); e = a y.
inline std::optional<Vector> idempotent_from_zero_divisor(
    const StructureConstantAlgebra& b) {
  const Field& f = b.field();
  const std::size_t n = b.dim();
  auto try_element = [&](const Vector& x) -> std::optional<Vector> {
    const auto m = minimal_polynomial(b, x);
    const auto g = poly::proper_factor(f, m);
    if (!g) {
      return std::nullopt;
    }
    const auto a = evaluate_at(b, *g, x);
    Matrix system(f, n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto col = b.multiply(b.multiply(a, b.unit(k)), a);
      for (std::size_t r = 0; r < n; ++r) {
        system(r, k) = col[r];
      }
    }
    const auto y = solve(system, a);
    if (!y) {
      throw InternalError("zero divisor has no quasi-inverse");
    }
    return b.multiply(a, *y);
  };
  std::vector<Vector> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    candidates.push_back(b.unit(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      candidates.push_back(b.linear(b.unit(i), 1, b.unit(j), 1));
      candidates.push_back(b.multiply(b.unit(i), b.unit(j)));
    }
  }
  for (const auto& x : candidates) {
    if (auto e = try_element(x)) {
      return e;
    }
  }
  // Exhaustive fallback over all nonzero elements in lexicographic order.
  Vector x(n, 0);
  while (true) {
    std::size_t i = 0;
    while (i < n && ++x[i] == f.characteristic()) {
      x[i++] = 0;
    }
    if (i == n) {
      return std::nullopt;
    }
    if (auto e = try_element(x)) {
      return e;
    }
  }
}

inline bool is_trivial_idempotent(const StructureConstantAlgebra& a,
                                  const Vector& e) {
  return is_zero_vector(e) || e == a.identity();
}

}  // namespace detail

/// Structure of End(m) needed to decide indecomposability and to split.
struct EndomorphismStructure {
  StructureConstantAlgebra endomorphisms;
  RadicalData radical;
  QuotientAlgebra semisimple;  // End / rad
};

inline EndomorphismStructure endomorphism_structure(const Representation& m) {
  auto e = endomorphism_algebra(m);
  auto rad = jacobson_radical(e);
  auto q = quotient_algebra(e, rad.radical);
  return {std::move(e), std::move(rad), std::move(q)};
}

/// End(m) is local, i.e. End(m)/rad is a (commutative) field.
inline bool is_indecomposable(const Representation& m) {
  if (m.is_zero()) {
    return false;
  }
  const auto s = endomorphism_structure(m);
  const auto& b = s.semisimple.algebra;
  return b.is_commutative() && frobenius_fixed_central(b).dim() == 1;
}

/// |m|: the number of pairwise non-isomorphic indecomposable summands.
inline std::size_t summand_type_count(const Representation& m) {
  if (m.is_zero()) {
    return 0;
  }
  return block_count(endomorphism_algebra(m));
}

namespace detail {

inline void decompose_into(const Representation& m,
                           std::vector<Representation>& out) {
  if (m.is_zero()) {
    return;
  }
  const auto s = endomorphism_structure(m);
  const auto& e_alg = s.endomorphisms;
  const auto& b = s.semisimple.algebra;
  std::optional<Vector> idem;
  if (auto central = central_idempotent(b)) {
    idem = central;
  } else if (!b.is_commutative()) {
    idem = idempotent_from_zero_divisor(b);
    if (!idem) {
      throw InternalError("simple non-commutative block without idempotents");
    }
  }
  if (!idem) {
    out.push_back(m);
    return;
  }
  if (is_trivial_idempotent(b, *idem) || b.multiply(*idem, *idem) != *idem) {
    throw InternalError("split produced a trivial or non-idempotent element");
  }
  // Lift through the radical.
  Vector e = s.semisimple.section.apply(*idem);
  std::size_t bound = 1;
  while ((std::size_t{1} << (bound - 1)) < s.radical.nilpotency_index) {
    ++bound;
  }
  std::size_t steps = 0;
  while (e_alg.multiply(e, e) != e) {
    if (++steps > bound + 1) {
      throw InternalError("idempotent lifting did not converge");
    }
    const auto e2 = e_alg.multiply(e, e);
    const auto e3 = e_alg.multiply(e2, e);
    e = e_alg.linear(e2, 3 % e_alg.field().characteristic(), e3,
                     e_alg.field().neg(2 % e_alg.field().characteristic()));
  }
  const Morphism phi = e_alg.act(e);
  const Morphism psi = Morphism::identity(m) - phi;
  decompose_into(image(phi).module, out);
  decompose_into(image(psi).module, out);
}

}  // namespace detail

/// Indecomposable summands, with multiplicity, whose direct sum is m.
inline std::vector<Representation> decompose(const Representation& m) {
  std::vector<Representation> out;
  detail::decompose_into(m, out);
  return out;
}

/// Both arguments must be indecomposable: isomorphic exactly when some
/// composite g ∘ f of basis maps is invertible.
inline bool is_isomorphic_indecomposables(const Representation& m,
                                          const Representation& n) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) {
    return false;
  }
  const auto fs = hom_basis(m, n);
  if (fs.empty()) {
    return false;
  }
  const auto gs = hom_basis(n, m);
  for (const auto& f : fs) {
    for (const auto& g : gs) {
      if (g.after(f).is_isomorphism()) {
        return true;
      }
    }
  }
  return false;
}

/// Krull–Schmidt: decompose both and match indecomposable multisets.
inline bool is_isomorphic(const Representation& m, const Representation& n) {
  require_same_algebra(m, n);
  if (m.dims() != n.dims()) {
    return false;
  }
  if (m.is_zero()) {
    return true;
  }
  auto left = decompose(m);
  auto right = decompose(n);
  if (left.size() != right.size()) {
    return false;
  }
  std::vector<bool> used(right.size(), false);
  for (const auto& x : left) {
    bool matched = false;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (!used[j] && is_isomorphic_indecomposables(x, right[j])) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) {
      return false;
    }
  }
  return true;
}

/// One representative per isomorphism class among the summands of m.
inline std::vector<Representation> summand_types(const Representation& m) {
  std::vector<Representation> types;
  for (auto& x : decompose(m)) {
    const bool seen = std::any_of(types.begin(), types.end(), [&](const auto& t) {
      return is_isomorphic_indecomposables(t, x);
    });
    if (!seen) {
      types.push_back(std::move(x));
    }
  }
  return types;
}

}  // namespace taulab

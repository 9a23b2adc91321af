// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

// Univariate polynomials over F_p, coefficients stored low degree first.
// Only what idempotent splitting needs: gcd, modular powers and a
// deterministic Berlekamp search for a proper factor.

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "taulab/field.hpp"
#include "taulab/linalg.hpp"

namespace taulab::poly {

using Poly = std::vector<Scalar>;

inline Poly trimmed(Poly a) {
  while (!a.empty() && a.back() == 0) {
    a.pop_back();
  }
  return a;
}

/// Degree, with -1 for the zero polynomial.
inline long degree(const Poly& a) {
  auto t = trimmed(a);
  return static_cast<long>(t.size()) - 1;
}

inline Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i];
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] = f.add(out[i], b[i]);
  }
  return trimmed(std::move(out));
}

inline Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i];
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    out[i] = f.sub(out[i], b[i]);
  }
  return trimmed(std::move(out));
}

inline Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return trimmed(std::move(out));
}

/// (quotient, remainder) of a by a nonzero b.
inline std::pair<Poly, Poly> divmod(const Field& f, Poly a, const Poly& b_in) {
  const Poly b = trimmed(b_in);
  if (b.empty()) {
    throw Error("polynomial division by zero");
  }
  a = trimmed(std::move(a));
  if (a.size() < b.size()) {
    return {{}, a};
  }
  Poly q(a.size() - b.size() + 1, 0);
  const Scalar lead_inv = f.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Scalar c = f.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    }
    a = trimmed(std::move(a));
  }
  return {trimmed(std::move(q)), a};
}

inline Poly mod(const Field& f, const Poly& a, const Poly& b) {
  return divmod(f, a, b).second;
}

inline Poly monic(const Field& f, Poly a) {
  a = trimmed(std::move(a));
  if (a.empty()) {
    return a;
  }
  const Scalar inv = f.inv(a.back());
  for (auto& c : a) {
    c = f.mul(c, inv);
  }
  return a;
}

inline Poly gcd(const Field& f, Poly a, Poly b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, std::move(a));
}

inline Poly derivative(const Field& f, const Poly& a) {
  if (a.size() <= 1) {
    return {};
  }
  Poly out(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    out[i - 1] = f.mul(f.reduce(static_cast<std::int64_t>(i)), a[i]);
  }
  return trimmed(std::move(out));
}

inline Poly powmod(const Field& f, Poly base, std::uint64_t e,
                   const Poly& modulus) {
  Poly result = mod(f, Poly{1}, modulus);
  base = mod(f, base, modulus);
  while (e > 0) {
    if ((e & 1U) != 0) {
      result = mod(f, mul(f, result, base), modulus);
    }
    base = mod(f, mul(f, base, base), modulus);
    e >>= 1U;
  }
  return result;
}

inline Scalar evaluate(const Field& f, const Poly& a, Scalar x) {
  Scalar acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = f.add(f.mul(acc, x), *it);
  }
  return acc;
}

/// A monic factor of m with 0 < deg < deg m, or nothing when m is
/// irreducible (or of degree <= 1).
inline std::optional<Poly> proper_factor(const Field& f, const Poly& m_in) {
  const Poly m = monic(f, m_in);
  const long d = degree(m);
  if (d <= 1) {
    return std::nullopt;
  }
  const auto p = f.characteristic();
  const Poly dm = derivative(f, m);
  if (dm.empty()) {
    // m(x) = h(x^p) = h(x)^p over F_p.
    Poly h;
    for (std::size_t i = 0; i < m.size(); i += p) {
      h.push_back(m[i]);
    }
    return monic(f, h);
  }
  Poly g = gcd(f, m, dm);
  if (degree(g) > 0) {
    return g;
  }
  // Squarefree: Berlekamp subalgebra {h : h^p = h mod m}.
  const auto n = static_cast<std::size_t>(d);
  Matrix q(f, n, n);
  const Poly xp = powmod(f, Poly{0, 1}, p, m);
  Poly power{1};
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t r = 0; r < power.size(); ++r) {
      q(r, col) = power[r];
    }
    power = mod(f, mul(f, power, xp), m);
  }
  q -= Matrix::identity(f, n);
  const auto fixed = kernel_basis(q);
  if (fixed.dim() <= 1) {
    return std::nullopt;
  }
  for (const auto& h : fixed.vectors()) {
    if (degree(h) <= 0) {
      continue;
    }
    for (Scalar c = 0; c < p; ++c) {
      Poly shifted = h;
      shifted[0] = f.sub(shifted[0], c);
      g = gcd(f, m, shifted);
      if (degree(g) > 0 && degree(g) < d) {
        return g;
      }
    }
  }
  throw InternalError("Berlekamp splitting found no factor");
}

}  // namespace taulab::poly

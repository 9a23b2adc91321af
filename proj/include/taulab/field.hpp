// SPDX-FileCopyrightText: (c) 2026 The taulab authors
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taulab {

/// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a postcondition the library certifies turns out false.
/// Seeing one of these means there is a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error("internal error: " + what) {}
};

using Scalar = std::uint32_t;

/// The prime field F_p. Elements are plain residues in [0, p).
class Field {
 public:
  explicit Field(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) {
      throw Error("field characteristic " + std::to_string(p) +
                  " is not a prime");
    }
  }

  [[nodiscard]] std::uint32_t characteristic() const noexcept { return p_; }

  [[nodiscard]] Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  [[nodiscard]] Scalar sub(Scalar a, Scalar b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  [[nodiscard]] Scalar neg(Scalar a) const noexcept {
    return a == 0 ? 0 : p_ - a;
  }
  [[nodiscard]] Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  [[nodiscard]] Scalar inv(Scalar a) const {
    if (a == 0) {
      throw Error("division by zero in F_" + std::to_string(p_));
    }
    return pow(a, p_ - 2);
  }
  [[nodiscard]] Scalar pow(Scalar a, std::uint64_t e) const noexcept {
    Scalar result = 1 % p_;
    Scalar base = a % p_;
    while (e > 0) {
      if ((e & 1U) != 0) {
        result = mul(result, base);
      }
      base = mul(base, base);
      e >>= 1U;
    }
    return result;
  }

  /// Reduce an arbitrary (possibly negative) integer into [0, p).
  [[nodiscard]] Scalar reduce(std::int64_t v) const noexcept {
    auto r = v % static_cast<std::int64_t>(p_);
    if (r < 0) {
      r += p_;
    }
    return static_cast<Scalar>(r);
  }

  friend bool operator==(const Field&, const Field&) = default;

  static bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace taulab

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "fgl/finite_field.hpp"

namespace fgl {

inline constexpr unsigned kMaxDim = 4;

/// Square matrix of dimension <= 4 over a field held elsewhere.
struct Matrix {
  unsigned dim = 0;
  std::array<Fq, kMaxDim * kMaxDim> entries{};

  Matrix() = default;
  explicit Matrix(unsigned d) : dim(d) {}
  /// Row-major bit patterns.
  Matrix(unsigned d, std::initializer_list<std::uint32_t> row_major);

  Fq& at(unsigned r, unsigned c) noexcept { return entries[r * kMaxDim + c]; }
  Fq at(unsigned r, unsigned c) const noexcept { return entries[r * kMaxDim + c]; }

  static Matrix identity(unsigned d);
  static Matrix scalar(unsigned d, Fq s);
  /// Ones on the antidiagonal.
  static Matrix reversal(unsigned d);

  bool is_scalar() const noexcept;

  friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
    if (a.dim != b.dim) return false;
    for (unsigned r = 0; r < a.dim; ++r)
      for (unsigned c = 0; c < a.dim; ++c)
        if (a.at(r, c) != b.at(r, c)) return false;
    return true;
  }
};

Matrix mat_mul(const FieldCtx& f, const Matrix& a, const Matrix& b);
Matrix mat_scale(const FieldCtx& f, Fq s, const Matrix& a);
Matrix transpose(const Matrix& a);
/// Entrywise a -> a^(2^k).
Matrix mat_frobenius(const FieldCtx& f, const Matrix& a, unsigned k);
Fq determinant(const FieldCtx& f, const Matrix& a);
/// Throws DivisionByZero for singular input.
Matrix inverse(const FieldCtx& f, const Matrix& a);

/// Row-major entries, each as a little-endian integer of ceil(degree/8) bytes.
std::string encode(const FieldCtx& f, const Matrix& a);
std::string to_hex(const std::string& bytes);
Matrix decode(const FieldCtx& f, unsigned dim, const std::string& bytes);

}  // namespace fgl

#include "fgl/matrix.hpp"

#include <utility>

#include "fgl/error.hpp"

namespace fgl {

Matrix::Matrix(unsigned d, std::initializer_list<std::uint32_t> row_major) : dim(d) {
  unsigned i = 0;
  for (auto bits : row_major) {
    at(i / d, i % d) = Fq{bits};
    ++i;
  }
}

Matrix Matrix::identity(unsigned d) { return scalar(d, Fq{1}); }

Matrix Matrix::scalar(unsigned d, Fq s) {
  Matrix m(d);
  for (unsigned i = 0; i < d; ++i) m.at(i, i) = s;
  return m;
}

Matrix Matrix::reversal(unsigned d) {
  Matrix m(d);
  for (unsigned i = 0; i < d; ++i) m.at(i, d - 1 - i) = Fq{1};
  return m;
}

bool Matrix::is_scalar() const noexcept {
  const Fq s = at(0, 0);
  for (unsigned r = 0; r < dim; ++r)
    for (unsigned c = 0; c < dim; ++c)
      if (at(r, c) != (r == c ? s : Fq{0})) return false;
  return true;
}

Matrix mat_mul(const FieldCtx& f, const Matrix& a, const Matrix& b) {
  const unsigned d = a.dim;
  Matrix out(d);
  for (unsigned r = 0; r < d; ++r) {
    for (unsigned c = 0; c < d; ++c) {
      std::uint32_t acc = 0;
      for (unsigned k = 0; k < d; ++k) acc ^= f.mul(a.at(r, k), b.at(k, c)).bits;
      out.at(r, c) = Fq{acc};
    }
  }
  return out;
}

Matrix mat_scale(const FieldCtx& f, Fq s, const Matrix& a) {
  Matrix out(a.dim);
  for (unsigned r = 0; r < a.dim; ++r)
    for (unsigned c = 0; c < a.dim; ++c) out.at(r, c) = f.mul(s, a.at(r, c));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.dim);
  for (unsigned r = 0; r < a.dim; ++r)
    for (unsigned c = 0; c < a.dim; ++c) out.at(c, r) = a.at(r, c);
  return out;
}

Matrix mat_frobenius(const FieldCtx& f, const Matrix& a, unsigned k) {
  Matrix out(a.dim);
  for (unsigned r = 0; r < a.dim; ++r)
    for (unsigned c = 0; c < a.dim; ++c) out.at(r, c) = f.frobenius(a.at(r, c), k);
  return out;
}

Fq determinant(const FieldCtx& f, const Matrix& a) {
  // Gaussian elimination; row swaps do not change the sign in characteristic 2.
  Matrix m = a;
  Fq det = f.one();
  const unsigned d = m.dim;
  for (unsigned col = 0; col < d; ++col) {
    unsigned pivot = col;
    while (pivot < d && m.at(pivot, col).bits == 0) ++pivot;
    if (pivot == d) return f.zero();
    if (pivot != col)
      for (unsigned c = 0; c < d; ++c) std::swap(m.at(pivot, c), m.at(col, c));
    const Fq p = m.at(col, col);
    det = f.mul(det, p);
    const Fq p_inv = f.inv(p);
    for (unsigned r = col + 1; r < d; ++r) {
      const Fq factor = f.mul(m.at(r, col), p_inv);
      if (factor.bits == 0) continue;
      for (unsigned c = col; c < d; ++c) m.at(r, c) = FieldCtx::add(m.at(r, c), f.mul(factor, m.at(col, c)));
    }
  }
  return det;
}

Matrix inverse(const FieldCtx& f, const Matrix& a) {
  const unsigned d = a.dim;
  Matrix m = a;
  Matrix inv = Matrix::identity(d);
  for (unsigned col = 0; col < d; ++col) {
    unsigned pivot = col;
    while (pivot < d && m.at(pivot, col).bits == 0) ++pivot;
    if (pivot == d) throw Error(Errc::DivisionByZero, "singular matrix");
    if (pivot != col) {
      for (unsigned c = 0; c < d; ++c) {
        std::swap(m.at(pivot, c), m.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Fq p_inv = f.inv(m.at(col, col));
    for (unsigned c = 0; c < d; ++c) {
      m.at(col, c) = f.mul(m.at(col, c), p_inv);
      inv.at(col, c) = f.mul(inv.at(col, c), p_inv);
    }
    for (unsigned r = 0; r < d; ++r) {
      if (r == col) continue;
      const Fq factor = m.at(r, col);
      if (factor.bits == 0) continue;
      for (unsigned c = 0; c < d; ++c) {
        m.at(r, c) = FieldCtx::add(m.at(r, c), f.mul(factor, m.at(col, c)));
        inv.at(r, c) = FieldCtx::add(inv.at(r, c), f.mul(factor, inv.at(col, c)));
      }
    }
  }
  return inv;
}

std::string encode(const FieldCtx& f, const Matrix& a) {
  const unsigned width = (f.degree() + 7) / 8;
  std::string out;
  out.reserve(a.dim * a.dim * width);
  for (unsigned r = 0; r < a.dim; ++r) {
    for (unsigned c = 0; c < a.dim; ++c) {
      std::uint32_t bits = a.at(r, c).bits;
      for (unsigned b = 0; b < width; ++b) {
        out.push_back(static_cast<char>(bits & 0xffu));
        bits >>= 8;
      }
    }
  }
  return out;
}

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char ch : bytes) {
    out.push_back(kDigits[ch >> 4]);
    out.push_back(kDigits[ch & 0xf]);
  }
  return out;
}

Matrix decode(const FieldCtx& f, unsigned dim, const std::string& bytes) {
  const unsigned width = (f.degree() + 7) / 8;
  if (bytes.size() != static_cast<std::size_t>(dim) * dim * width) {
    throw Error(Errc::ParseError, "matrix encoding has wrong length");
  }
  Matrix m(dim);
  std::size_t pos = 0;
  for (unsigned r = 0; r < dim; ++r) {
    for (unsigned c = 0; c < dim; ++c) {
      std::uint32_t bits = 0;
      for (unsigned b = 0; b < width; ++b) bits |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[pos++])) << (8 * b);
      m.at(r, c) = f.element(bits);
    }
  }
  return m;
}

}  // namespace fgl

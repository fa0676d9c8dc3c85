#include "fgl/finite_field.hpp"

#include <string>

#include "fgl/error.hpp"

namespace fgl {

int poly_degree(std::uint64_t poly) {
  return poly == 0 ? -1 : 63 - __builtin_clzll(poly);
}

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t acc = 0;
  std::uint64_t shifted = a;
  while (b != 0) {
    if (b & 1u) acc ^= shifted;
    shifted <<= 1;
    b >>= 1;
  }
  return acc;
}

std::uint32_t poly_mod(std::uint64_t value, std::uint32_t modulus) {
  const int mdeg = poly_degree(modulus);
  for (int d = poly_degree(value); d >= mdeg; d = poly_degree(value)) {
    value ^= static_cast<std::uint64_t>(modulus) << (d - mdeg);
  }
  return static_cast<std::uint32_t>(value);
}

bool is_irreducible(std::uint32_t poly) {
  const int deg = poly_degree(poly);
  if (deg < 1) return false;
  for (int d = 1; d <= deg / 2; ++d) {
    for (std::uint32_t divisor = 1u << d; divisor < (2u << d); ++divisor) {
      if (poly_mod(poly, divisor) == 0) return false;
    }
  }
  return true;
}

std::uint32_t default_modulus(unsigned degree) {
  if (degree < 2 || degree > kMaxFieldDegree) {
    throw Error(Errc::UnsupportedDegree, "degree " + std::to_string(degree) + " outside [2, 24]");
  }
  for (std::uint32_t poly = 1u << degree; poly < (2u << degree); ++poly) {
    if (is_irreducible(poly)) return poly;
  }
  throw Error(Errc::NonIrreducibleModulus, "no irreducible polynomial found");  // unreachable
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

}  // namespace

FieldCtx::FieldCtx(unsigned degree) : FieldCtx(degree, default_modulus(degree)) {}

FieldCtx::FieldCtx(unsigned degree, std::uint32_t modulus) : degree_(degree), modulus_(modulus) {
  if (degree < 2 || degree > kMaxFieldDegree) {
    throw Error(Errc::UnsupportedDegree, "degree " + std::to_string(degree) + " outside [2, 24]");
  }
  if (poly_degree(modulus) != static_cast<int>(degree)) {
    throw Error(Errc::DegreeMismatch, "modulus degree " + std::to_string(poly_degree(modulus)) +
                                          " != " + std::to_string(degree));
  }
  if (!is_irreducible(modulus)) {
    throw Error(Errc::NonIrreducibleModulus, "modulus " + std::to_string(modulus) + " is reducible");
  }

  const std::uint64_t group_order = size() - 1;
  const auto primes = prime_factors(group_order);
  for (std::uint32_t g = 2; g < size(); ++g) {
    bool generates = true;
    for (auto p : primes) {
      if (pow(Fq{g}, group_order / p) == one()) {
        generates = false;
        break;
      }
    }
    if (generates) {
      primitive_ = Fq{g};
      break;
    }
  }

  if (degree <= kMaxTableDegree) {
    auto tables = std::make_shared<Tables>();
    tables->log.assign(size(), 0);
    tables->exp.assign(2 * group_order, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < group_order; ++i) {
      tables->exp[i] = x;
      tables->exp[i + group_order] = x;
      tables->log[x] = static_cast<std::uint32_t>(i);
      x = mul_poly(Fq{x}, primitive_).bits;
    }
    tables_ = std::move(tables);
  }
}

Fq FieldCtx::element(std::uint32_t bits) const {
  if (bits >= size()) {
    throw Error(Errc::DegreeMismatch, "bit pattern " + std::to_string(bits) + " exceeds field size");
  }
  return Fq{bits};
}

Fq FieldCtx::inv(Fq a) const {
  if (a.bits == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (tables_ != nullptr) {
    const std::uint32_t group_order = size() - 1;
    return Fq{tables_->exp[(group_order - tables_->log[a.bits]) % group_order]};
  }
  return pow(a, size() - 2);
}

Fq FieldCtx::pow(Fq a, std::uint64_t e) const noexcept {
  Fq result = one();
  Fq base = a;
  while (e != 0) {
    if (e & 1u) result = mul_poly(result, base);
    base = mul_poly(base, base);
    e >>= 1;
  }
  return result;
}

Fq FieldCtx::frobenius(Fq a, unsigned k) const noexcept {
  k %= degree_;
  for (unsigned i = 0; i < k; ++i) a = mul(a, a);
  return a;
}

}  // namespace fgl

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace fgl {

/// Element of GF(2^n), stored as the bit pattern of a polynomial of degree < n.
struct Fq {
  std::uint32_t bits = 0;

  friend constexpr bool operator==(Fq, Fq) = default;
  friend constexpr auto operator<=>(Fq, Fq) = default;
};

inline constexpr unsigned kMaxFieldDegree = 24;
inline constexpr unsigned kMaxTableDegree = 16;

/// True iff `poly` (bit i = coefficient of x^i) is irreducible over GF(2).
/// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

/// Numerically least irreducible polynomial of exact degree `degree`.
std::uint32_t default_modulus(unsigned degree);

/// Degree of a nonzero GF(2) polynomial, -1 for zero.
int poly_degree(std::uint64_t poly);

/// Carry-less product of two GF(2) polynomials.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b);

/// Remainder of `value` modulo `modulus` over GF(2).
std::uint32_t poly_mod(std::uint64_t value, std::uint32_t modulus);

/// Arithmetic context for GF(2^n), 2 <= n <= 24.
///
/// Multiplication reduces a carry-less product modulo the context polynomial.
/// For n <= 16 the context also carries log/antilog tables built from a
/// primitive element; mul() uses them and mul_poly() always takes the
/// polynomial route, so the two can be cross-checked.
///
/// Immutable after construction; copies share the tables.
class FieldCtx {
 public:
  explicit FieldCtx(unsigned degree);
  FieldCtx(unsigned degree, std::uint32_t modulus);

  unsigned degree() const noexcept { return degree_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return std::uint32_t{1} << degree_; }
  bool has_tables() const noexcept { return tables_ != nullptr; }

  Fq zero() const noexcept { return Fq{0}; }
  Fq one() const noexcept { return Fq{1}; }
  /// Checked conversion from a bit pattern.
  Fq element(std::uint32_t bits) const;
  bool contains(Fq a) const noexcept { return a.bits < size(); }
  /// A fixed primitive element (generator of the multiplicative group).
  Fq primitive() const noexcept { return primitive_; }

  static Fq add(Fq a, Fq b) noexcept { return Fq{a.bits ^ b.bits}; }

  Fq mul(Fq a, Fq b) const noexcept {
    if (tables_ == nullptr) return mul_poly(a, b);
    if (a.bits == 0 || b.bits == 0) return Fq{0};
    return Fq{tables_->exp[tables_->log[a.bits] + tables_->log[b.bits]]};
  }

  Fq mul_poly(Fq a, Fq b) const noexcept { return Fq{poly_mod(clmul(a.bits, b.bits), modulus_)}; }

  Fq inv(Fq a) const;
  Fq pow(Fq a, std::uint64_t e) const noexcept;
  /// a^(2^k).
  Fq frobenius(Fq a, unsigned k) const noexcept;

  friend bool operator==(const FieldCtx& x, const FieldCtx& y) noexcept {
    return x.degree_ == y.degree_ && x.modulus_ == y.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;  // log[0] unused
    std::vector<std::uint32_t> exp;  // length 2 * (2^n - 1)
  };

  unsigned degree_;
  std::uint32_t modulus_;
  Fq primitive_{};
  std::shared_ptr<const Tables> tables_;
};

}  // namespace fgl

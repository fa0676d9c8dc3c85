#include <doctest.h>

#include <random>

#include "fgl/error.hpp"
#include "fgl/finite_field.hpp"
#include "oracles.hpp"

using namespace fgl;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an fgl::Error");
  return Errc::IoError;
}

}  // namespace

TEST_CASE("irreducibility agrees with trial division up to degree 12") {
  for (std::uint32_t p = 2; p < (1u << 13); ++p) CHECK_MESSAGE(is_irreducible(p) == oracle::irreducible(p), p);
}

TEST_CASE("default modulus is the least irreducible polynomial of the degree") {
  for (unsigned d = 2; d <= 16; ++d) {
    std::uint32_t least = 1u << d;
    while (!oracle::irreducible(least)) ++least;
    CHECK(default_modulus(d) == least);
    CHECK(FieldCtx(d).modulus() == least);
  }
  CHECK(FieldCtx(2).modulus() == 0b111);
}

TEST_CASE("GF(4) worked values") {
  const FieldCtx f(2);
  const Fq x{0b10};
  CHECK(f.mul(x, x) == Fq{0b11});
  CHECK(f.inv(x) == Fq{0b11});
}

TEST_CASE("explicit moduli are validated") {
  CHECK_NOTHROW(FieldCtx(3, 0b1011));
  CHECK(code_of([] { FieldCtx(4, 0b10100); }) == Errc::NonIrreducibleModulus);
  CHECK(code_of([] { FieldCtx(4, 0b1011); }) == Errc::DegreeMismatch);
  CHECK(code_of([] { FieldCtx(1); }) == Errc::UnsupportedDegree);
  CHECK(code_of([] { FieldCtx(25); }) == Errc::UnsupportedDegree);
  CHECK(code_of([] { FieldCtx(3).element(8); }) == Errc::DegreeMismatch);
  CHECK(code_of([] { FieldCtx(5).inv(Fq{0}); }) == Errc::DivisionByZero);
}

TEST_CASE("field axioms hold exhaustively for n <= 4") {
  for (unsigned n = 2; n <= 4; ++n) {
    const FieldCtx f(n);
    const std::uint32_t q = f.size();
    for (std::uint32_t a = 0; a < q; ++a) {
      const Fq A{a};
      CHECK(f.mul(A, f.one()) == A);
      CHECK(FieldCtx::add(A, f.zero()) == A);
      CHECK(FieldCtx::add(A, A) == f.zero());
      if (a != 0) CHECK(f.mul(A, f.inv(A)) == f.one());
      for (std::uint32_t b = 0; b < q; ++b) {
        const Fq B{b};
        CHECK(f.mul(A, B) == f.mul(B, A));
        CHECK(FieldCtx::add(A, B) == FieldCtx::add(B, A));
        CHECK(f.mul(A, B).bits == oracle::gf_mul(a, b, f.modulus(), n));
        for (std::uint32_t c = 0; c < q; ++c) {
          const Fq C{c};
          CHECK(f.mul(f.mul(A, B), C) == f.mul(A, f.mul(B, C)));
          CHECK(FieldCtx::add(FieldCtx::add(A, B), C) == FieldCtx::add(A, FieldCtx::add(B, C)));
          CHECK(f.mul(A, FieldCtx::add(B, C)) == FieldCtx::add(f.mul(A, B), f.mul(A, C)));
        }
      }
    }
  }
}

TEST_CASE("table multiplication matches the polynomial route") {
  for (unsigned n = 2; n <= 9; ++n) {
    const FieldCtx f(n);
    REQUIRE(f.has_tables());
    bool all = true;
    for (std::uint32_t a = 0; a < f.size(); ++a)
      for (std::uint32_t b = 0; b < f.size(); ++b)
        all = all && f.mul(Fq{a}, Fq{b}) == f.mul_poly(Fq{a}, Fq{b}) &&
              f.mul(Fq{a}, Fq{b}).bits == oracle::gf_mul(a, b, f.modulus(), n);
    CHECK_MESSAGE(all, "n = " << n);
  }
  for (unsigned n : {12u, 16u, 20u}) {
    const FieldCtx f(n);
    CHECK(f.has_tables() == (n <= kMaxTableDegree));
    std::mt19937 rng(n);
    std::uniform_int_distribution<std::uint32_t> pick(0, f.size() - 1);
    bool all = true;
    for (int i = 0; i < 20000; ++i) {
      const std::uint32_t a = pick(rng), b = pick(rng);
      all = all && f.mul(Fq{a}, Fq{b}).bits == oracle::gf_mul(a, b, f.modulus(), n);
    }
    CHECK_MESSAGE(all, "n = " << n);
  }
}

TEST_CASE("Frobenius is a ring homomorphism for n <= 6") {
  for (unsigned n = 2; n <= 6; ++n) {
    const FieldCtx f(n);
    for (unsigned k = 0; k <= n; ++k) {
      bool all = true;
      for (std::uint32_t a = 0; a < f.size(); ++a) {
        const Fq A{a};
        all = all && f.frobenius(A, k) == f.pow(A, std::uint64_t{1} << k);
        for (std::uint32_t b = 0; b < f.size(); ++b) {
          const Fq B{b};
          all = all && f.frobenius(FieldCtx::add(A, B), k) == FieldCtx::add(f.frobenius(A, k), f.frobenius(B, k));
          all = all && f.frobenius(f.mul(A, B), k) == f.mul(f.frobenius(A, k), f.frobenius(B, k));
        }
      }
      CHECK_MESSAGE(all, "n = " << n << ", k = " << k);
    }
    for (std::uint32_t a = 0; a < f.size(); ++a) CHECK(f.frobenius(Fq{a}, n) == Fq{a});
  }
}

TEST_CASE("multiplicative group has order 2^n - 1 and the primitive element generates it") {
  for (unsigned n = 2; n <= 12; ++n) {
    const FieldCtx f(n);
    for (std::uint32_t a = 1; a < f.size(); ++a) CHECK(f.pow(Fq{a}, f.size() - 1) == f.one());
    std::uint32_t order = 1;
    for (Fq p = f.primitive(); p != f.one(); p = f.mul(p, f.primitive())) ++order;
    CHECK(order == f.size() - 1);
  }
}

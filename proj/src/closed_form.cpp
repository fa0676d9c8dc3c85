#include "fgl/closed_form.hpp"

#include <algorithm>
#include <string>

#include "fgl/error.hpp"

namespace fgl {

namespace {

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* what) {
  if (den == 0 || num % den != 0) {
    throw Error(Errc::HypothesisViolated, std::string(what) + ": " + std::to_string(num) + " / " +
                                              std::to_string(den) + " is not an integer");
  }
  return num / den;
}

void require_cover(std::uint64_t k, std::uint64_t r, std::uint64_t mu) {
  if (r <= 2 || mu == 0 || k != r * mu + 1) {
    throw Error(Errc::HypothesisViolated, "need r > 2, mu > 0 and k = r mu + 1; got k=" + std::to_string(k) +
                                              " r=" + std::to_string(r) + " mu=" + std::to_string(mu));
  }
}

}  // namespace

DezaParams DezaParams::normalized() const {
  return DezaParams{v, k, std::max(a, b), std::min(a, b)};
}

unsigned checked_exponent(Family family, std::uint64_t q) {
  if (q < 4 || (q & (q - 1)) != 0) throw Error(Errc::InvalidQ, "q = " + std::to_string(q) + " is not 2^n >= 4");
  const unsigned n = static_cast<unsigned>(__builtin_ctzll(q));
  if (family == Family::Sz && n % 2 == 0) {
    throw Error(Errc::InvalidQ, "Sz(q) needs q = 2^n with odd n; got q = " + std::to_string(q));
  }
  return n;
}

CoverParams cover_params(Family family, std::uint64_t q) {
  checked_exponent(family, q);
  const unsigned l = family == Family::PSL2 ? 1 : family == Family::Sz ? 2 : 3;
  std::uint64_t ql = 1;
  for (unsigned i = 0; i < l; ++i) ql *= q;
  return CoverParams{ql, q - 1, (ql - 1) / (q - 1)};
}

IntersectionArray cover_array(const CoverParams& p) {
  require_cover(p.k, p.r, p.mu);
  return IntersectionArray::from_bc({p.k, (p.r - 1) * p.mu, 1}, {1, p.mu, p.k});
}

PNumbers lemma1_p_numbers(std::uint64_t k, std::uint64_t r, std::uint64_t mu) {
  require_cover(k, r, mu);
  const auto ia = cover_array(CoverParams{k, r, mu});
  const auto b1 = static_cast<std::int64_t>(ia.b[1]);
  const auto c2 = static_cast<std::int64_t>(ia.c[1]);
  const auto c3 = static_cast<std::int64_t>(ia.c[2]);
  const auto a1 = static_cast<std::int64_t>(ia.a[1]);
  const auto a2 = static_cast<std::int64_t>(ia.a[2]);
  const auto a3 = static_cast<std::int64_t>(ia.a[3]);
  const auto kk = static_cast<std::int64_t>(k);
  const auto rr = static_cast<std::int64_t>(r);
  const auto mm = static_cast<std::int64_t>(mu);

  PNumbers p;
  p.p0 = static_cast<std::uint64_t>((rr - 1) * kk);

  const std::int64_t p1 = exact_div(b1 * b1, c2, "p^1_22 = b1^2/c2");
  const std::int64_t p2_raw = b1 + exact_div(a2 * (a2 - a1), c2, "p^2_22 = b1 + a2(a2-a1)/c2");
  const std::int64_t p2_simple = (rr - 1) * (rr - 1) * mm;
  const std::int64_t p3 = exact_div(c3 * (a2 + a3 - a1), c2, "p^3_22 = c3(a2+a3-a1)/c2");
  if (p1 != p2_simple || p2_raw != p2_simple || p3 != kk * (rr - 2)) {
    throw Error(Errc::HypothesisViolated, "closed forms disagree: p1=" + std::to_string(p1) + " p2=" +
                                              std::to_string(p2_raw) + " (r-1)^2 mu=" + std::to_string(p2_simple) +
                                              " p3=" + std::to_string(p3));
  }
  p.p1 = static_cast<std::uint64_t>(p1);
  p.p2 = static_cast<std::uint64_t>(p2_raw);
  p.p3 = static_cast<std::uint64_t>(p3);
  return p;
}

DezaParams lemma1_cover_deza(const CoverParams& p) {
  require_cover(p.k, p.r, p.mu);
  return DezaParams{p.r * (p.k + 1), p.k, p.mu, 0};
}

DezaParams lemma1_distance2_deza(const CoverParams& p) {
  const PNumbers pn = lemma1_p_numbers(p.k, p.r, p.mu);
  return DezaParams{p.r * (p.k + 1), pn.p0, pn.p1, pn.p3}.normalized();
}

IntersectionArray theorem2_array(Family family, std::uint64_t q) {
  checked_exponent(family, q);
  switch (family) {
    case Family::PSL2: return IntersectionArray::from_bc({q, q - 2, 1}, {1, 1, q});
    case Family::Sz: return IntersectionArray::from_bc({q * q, q * q - q - 2, 1}, {1, q + 1, q * q});
    case Family::PSU3: {
      const std::uint64_t q3 = q * q * q;
      return IntersectionArray::from_bc({q3, q3 - q * q - q - 2, 1}, {1, q * q + q + 1, q3});
    }
  }
  throw Error(Errc::InvalidQ, "unknown family");
}

Theorem1Params theorem1_params(Family family, std::uint64_t q) {
  checked_exponent(family, q);
  DezaParams printed;
  switch (family) {
    case Family::PSL2:
      printed = {q * q - 1, q * (q - 2), q * (q - 3), (q - 2) * (q - 2)};
      break;
    case Family::Sz:
      printed = {(q * q + 1) * (q - 1), q * q * (q - 2), (q - 2) * (q - 2) * (q + 1), q * q * (q - 3)};
      break;
    case Family::PSU3:
      printed = {(q * q * q + 1) * (q - 1), q * q * q * (q - 2), (q - 2) * (q - 2) * (q * q + q + 1),
                 q * q * q * (q - 3)};
      break;
  }
  return Theorem1Params{printed, printed.normalized()};
}

bool strictness(std::uint64_t k, std::uint64_t r, std::uint64_t mu) {
  return (r - 1) * (r - 1) * mu != k * (r - 2);
}

Lemma2Structure lemma2_structure(std::uint64_t k, std::uint64_t r, std::uint64_t mu, std::uint64_t c) {
  require_cover(k, r, mu);
  if (r == mu + 2) {
    throw Error(Errc::HypothesisViolated, "r = mu + 2: the two common-neighbour counts coincide");
  }
  if (c == (r - 1) * (r - 1) * mu) return {Lemma2Kind::MultipartiteK, k + 1, r};
  if (c == k * (r - 2)) return {Lemma2Kind::CliqueUnion, k + 1, r};
  return {};
}

ClosedFormParams closed_form_params(Family family, std::uint64_t q) {
  ClosedFormParams out;
  out.cover = cover_params(family, q);
  out.chi_array = cover_array(out.cover);
  out.p_numbers = lemma1_p_numbers(out.cover.k, out.cover.r, out.cover.mu);
  out.distance2_deza = lemma1_distance2_deza(out.cover);
  out.strict = strictness(out.cover.k, out.cover.r, out.cover.mu);
  return out;
}

}  // namespace fgl

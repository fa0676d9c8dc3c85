#pragma once

#include <cstdint>

#include "fgl/graph_analysis.hpp"
#include "fgl/group_model.hpp"

namespace fgl {

/// Parameters of an antipodal distance-regular cover of diameter 3 with
/// intersection array {k, (r-1)mu, 1; 1, mu, k}.
struct CoverParams {
  std::uint64_t k = 0;
  std::uint64_t r = 0;
  std::uint64_t mu = 0;

  friend bool operator==(const CoverParams&, const CoverParams&) = default;
};

/// (v, k, b, a) of a Deza graph. In `printed` form the entries follow the
/// source tables; `normalized()` puts the larger count in b.
struct DezaParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t b = 0;
  std::uint64_t a = 0;

  DezaParams normalized() const;
  friend bool operator==(const DezaParams&, const DezaParams&) = default;
};

struct PNumbers {
  std::uint64_t p0 = 0;  // p^0_22
  std::uint64_t p1 = 0;  // p^1_22
  std::uint64_t p2 = 0;  // p^2_22
  std::uint64_t p3 = 0;  // p^3_22

  friend bool operator==(const PNumbers&, const PNumbers&) = default;
};

/// Checks q = 2^n >= 4 (odd n >= 3 for Sz) and returns n. Throws InvalidQ.
unsigned checked_exponent(Family family, std::uint64_t q);

/// k = q^l, r = q - 1, mu = (q^l - 1)/(q - 1).
CoverParams cover_params(Family family, std::uint64_t q);

/// {k, (r-1)mu, 1; 1, mu, k}. Throws HypothesisViolated unless r > 2 and
/// k = r mu + 1.
IntersectionArray cover_array(const CoverParams& p);

/// p^t_22 of the cover for t = 0..3. p^2_22 is evaluated both as (r-1)^2 mu
/// and as b_1 + a_2(a_2 - a_1)/c_2; every division must be exact and the two
/// routes must agree. Throws HypothesisViolated.
PNumbers lemma1_p_numbers(std::uint64_t k, std::uint64_t r, std::uint64_t mu);

/// The cover itself as a Deza graph: (r(k+1), k, mu, 0).
DezaParams lemma1_cover_deza(const CoverParams& p);
/// Its distance-2 graph: (r(k+1), (r-1)k, b, a) with {a, b} = {(r-1)^2 mu, k(r-2)},
/// normalized so a <= b.
DezaParams lemma1_distance2_deza(const CoverParams& p);

/// The family's array with q substituted. Throws InvalidQ.
IntersectionArray theorem2_array(Family family, std::uint64_t q);

struct Theorem1Params {
  DezaParams printed;     // entries in the order the family formula lists them
  DezaParams normalized;  // a <= b
};
/// Throws InvalidQ.
Theorem1Params theorem1_params(Family family, std::uint64_t q);

/// (r-1)^2 mu != k(r-2); equivalent to r != mu + 2.
bool strictness(std::uint64_t k, std::uint64_t r, std::uint64_t mu);

enum class Lemma2Kind { MultipartiteK, CliqueUnion, NotApplicable };

struct Lemma2Structure {
  Lemma2Kind kind = Lemma2Kind::NotApplicable;
  std::uint64_t parts = 0;  // k + 1
  std::uint64_t size = 0;   // r

  friend bool operator==(const Lemma2Structure&, const Lemma2Structure&) = default;
};

/// Predicted shape of the c-common-neighbour graph of the distance-2 graph:
/// K_{(k+1) x r} for c = (r-1)^2 mu, (k+1) disjoint r-cliques for c = k(r-2).
/// Throws HypothesisViolated when r is 2 or mu + 2, or k != r mu + 1.
Lemma2Structure lemma2_structure(std::uint64_t k, std::uint64_t r, std::uint64_t mu, std::uint64_t c);

/// Everything predicted for one group.
struct ClosedFormParams {
  CoverParams cover;
  IntersectionArray chi_array;
  PNumbers p_numbers;
  DezaParams distance2_deza;
  bool strict = false;
};
ClosedFormParams closed_form_params(Family family, std::uint64_t q);

}  // namespace fgl

#include <doctest.h>

#include <numeric>
#include <set>

#include "fgl/error.hpp"
#include "fgl/group_model.hpp"
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

// Entry-wise product using the shift-and-add oracle.
Matrix naive_mul(const FieldCtx& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.dim);
  for (unsigned i = 0; i < a.dim; ++i)
    for (unsigned j = 0; j < a.dim; ++j) {
      std::uint32_t s = 0;
      for (unsigned k = 0; k < a.dim; ++k) s ^= oracle::gf_mul(a.at(i, k).bits, b.at(k, j).bits, f.modulus(), f.degree());
      out.at(i, j) = Fq{s};
    }
  return out;
}

Matrix naive_transpose(const Matrix& a) {
  Matrix out(a.dim);
  for (unsigned i = 0; i < a.dim; ++i)
    for (unsigned j = 0; j < a.dim; ++j) out.at(i, j) = a.at(j, i);
  return out;
}

// x -> x^(2^k) by repeated squaring with the oracle multiplication.
Matrix naive_frobenius(const FieldCtx& f, const Matrix& a, unsigned k) {
  Matrix out = a;
  for (auto& e : out.entries)
    for (unsigned i = 0; i < k; ++i) e = Fq{oracle::gf_mul(e.bits, e.bits, f.modulus(), f.degree())};
  return out;
}

bool preserves_antidiagonal_form(const GroupSpec& spec, const Matrix& m) {
  const Matrix j = Matrix::reversal(spec.dim);
  const Matrix left = spec.family == Family::PSU3 ? naive_frobenius(spec.field, naive_transpose(m), spec.n)
                                                  : naive_transpose(m);
  return naive_mul(spec.field, naive_mul(spec.field, left, j), m) == j;
}

// Classes of the transitive closure of the commuting relation (union-find).
std::vector<std::uint32_t> commuting_components(const InvolutionClass& cls) {
  std::vector<Vertex> parent(cls.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex x = 0; x < cls.size(); ++x)
    for (Vertex y = x + 1; y < cls.size(); ++y)
      if (product_order(cls, x, y) == 2) parent[root(x)] = root(y);
  std::vector<std::uint32_t> labels(cls.size());
  for (Vertex x = 0; x < cls.size(); ++x) labels[x] = root(x);
  return labels;
}

}  // namespace

TEST_CASE("group specs") {
  const auto psl = make_group(Family::PSL2, 2);
  CHECK(psl.q == 4);
  CHECK(psl.sylow_exponent == 1);
  CHECK(psl.chi == 3);
  CHECK(psl.dim == 2);
  CHECK(psl.label() == "PSL2(4)");

  const auto sz = make_group(Family::Sz, 3);
  CHECK(sz.q == 8);
  CHECK(sz.sylow_exponent == 2);
  CHECK(sz.chi == 5);
  CHECK(sz.dim == 4);

  const auto psu = make_group(Family::PSU3, 3);
  CHECK(psu.field.degree() == 6);
  CHECK(psu.center.size() == 3);

  CHECK(code_of([] { make_group(Family::Sz, 2); }) == Errc::SzEvenExponent);
  CHECK(code_of([] { make_group(Family::PSL2, 1); }) == Errc::InvalidQ);
  CHECK(code_of([] { make_group(Family::PSU3, 13); }) == Errc::UnsupportedDegree);
  CHECK(code_of([] { parse_family("sl2"); }) == Errc::ParseError);
  for (const Family f : {Family::PSL2, Family::Sz, Family::PSU3}) CHECK(parse_family(family_name(f)) == f);
}

TEST_CASE("PSL2(4) generators include the unipotent and the reversal") {
  const auto spec = make_group(Family::PSL2, 2);
  const auto gens = generators(spec);
  const Matrix u(2, {1, 1, 0, 1});
  const Matrix w(2, {0, 1, 1, 0});
  CHECK(std::find(gens.begin(), gens.end(), u) != gens.end());
  CHECK(std::find(gens.begin(), gens.end(), w) != gens.end());
  for (const auto& g : gens) {
    const std::uint32_t det = oracle::gf_mul(g.at(0, 0).bits, g.at(1, 1).bits, spec.field.modulus(), 2) ^
                              oracle::gf_mul(g.at(0, 1).bits, g.at(1, 0).bits, spec.field.modulus(), 2);
    CHECK(det == 1);
  }
}

TEST_CASE("Suzuki unipotents form a group of order q^2 preserving the symplectic form") {
  const auto spec = make_group(Family::Sz, 3);
  std::set<std::string> family;
  std::vector<Matrix> all;
  for (std::uint32_t a = 0; a < spec.q; ++a)
    for (std::uint32_t b = 0; b < spec.q; ++b) {
      const Matrix s = suzuki_unipotent(spec, Fq{a}, Fq{b});
      CHECK(preserves_antidiagonal_form(spec, s));
      all.push_back(s);
      family.insert(encode(spec.field, s));
    }
  CHECK(family.size() == 64);
  bool closed = true;
  for (const auto& x : all)
    for (const auto& y : all) closed = closed && family.contains(encode(spec.field, naive_mul(spec.field, x, y)));
  CHECK(closed);
  // S(0, b) are involutions for b != 0.
  for (std::uint32_t b = 1; b < spec.q; ++b) {
    const Matrix s = suzuki_unipotent(spec, Fq{0}, Fq{b});
    CHECK(naive_mul(spec.field, s, s) == Matrix::identity(4));
  }
  for (std::uint32_t l = 1; l < spec.q; ++l) CHECK(preserves_antidiagonal_form(spec, suzuki_torus(spec, Fq{l})));
  for (const auto& g : generators(spec)) CHECK(preserves_antidiagonal_form(spec, g));
}

TEST_CASE("unitary unipotent radical of PSU3(4)") {
  const auto spec = make_group(Family::PSU3, 2);
  const auto radical = unitary_unipotent_radical(spec);
  CHECK(radical.size() == 64);
  for (const auto& m : radical) {
    CHECK(preserves_antidiagonal_form(spec, m));
    for (unsigned i = 0; i < 3; ++i) CHECK(m.at(i, i) == Fq{1});
  }
  for (const auto& g : generators(spec)) CHECK(preserves_antidiagonal_form(spec, g));
  CHECK(seed_involution(spec) == Matrix::reversal(3));
}

TEST_CASE("canonical forms") {
  SUBCASE("trivial centre leaves matrices unchanged") {
    const auto spec = make_group(Family::PSL2, 3);
    for (const auto& g : generators(spec)) CHECK(canonicalize(spec, g) == g);
  }
  SUBCASE("PSU3(8) projective classes") {
    const auto spec = make_group(Family::PSU3, 3);
    REQUIRE(spec.center.size() == 3);
    for (const Fq z : spec.center) {
      CHECK(spec.field.pow(z, 3) == spec.field.one());
      CHECK(spec.field.pow(z, spec.q + 1) == spec.field.one());
    }
    std::string least;
    for (const Fq z : spec.center) {
      const auto e = encode(spec.field, Matrix::scalar(3, z));
      if (least.empty() || e < least) least = e;
    }
    CHECK(encode(spec.field, canonicalize(spec, Matrix::identity(3))) == least);
    for (const auto& g : generators(spec)) {
      const Matrix c = canonicalize(spec, g);
      CHECK(canonicalize(spec, c) == c);
      for (const Fq z : spec.center) CHECK(canonicalize(spec, mat_scale(spec.field, z, g)) == c);
    }
    CHECK(code_of([&] { canonicalize(spec, Matrix::scalar(3, spec.field.primitive())); }) == Errc::NotInGroupForm);
  }
}

TEST_CASE("element orders") {
  const auto spec = make_group(Family::Sz, 3);
  CHECK(element_order(spec, Matrix::identity(4)) == 1);
  CHECK(element_order(spec, seed_involution(spec)) == 2);
  CHECK(element_order(spec, suzuki_unipotent(spec, Fq{1}, Fq{0})) == 4);
}

TEST_CASE("involution class sizes and closure") {
  struct Case {
    Family family;
    unsigned n;
    std::uint32_t size;
    std::uint32_t classes;
    std::uint32_t class_size;
  };
  for (const Case c : {Case{Family::PSL2, 2, 15, 5, 3}, Case{Family::PSL2, 3, 63, 9, 7}, Case{Family::PSL2, 4, 255, 17, 15},
                       Case{Family::Sz, 3, 455, 65, 7}, Case{Family::PSU3, 2, 195, 65, 3}}) {
    CAPTURE(c.n);
    const auto spec = make_group(c.family, c.n);
    const auto cls = involution_class(spec);
    CHECK(cls.size() == c.size);
    CHECK(cls.size() == spec.expected_class_size());
    CHECK(cls.index.size() == cls.size());
    CHECK(cls.members[0] == canonicalize(spec, seed_involution(spec)));
    for (Vertex x = 0; x < cls.size(); ++x) {
      CHECK(element_order(spec, cls.members[x]) == 2);
      CHECK(satisfies_group_form(spec, cls.members[x]));
    }
    // Conjugates stay in the class and the recorded action is correct.
    for (std::size_t g = 0; g < cls.generators.size(); ++g) {
      const Matrix gi = inverse(spec.field, cls.generators[g]);
      std::set<Vertex> image;
      for (Vertex x = 0; x < cls.size(); ++x) {
        const Matrix conj = mat_mul(spec.field, mat_mul(spec.field, gi, cls.members[x]), cls.generators[g]);
        const auto found = cls.find(conj);
        REQUIRE(found.has_value());
        CHECK(*found == cls.action[g][x]);
        image.insert(*found);
      }
      CHECK(image.size() == cls.size());
    }
    // Commuting classes: the conjugation-carried labels, the exhaustive check
    // and a union-find over every commuting pair agree.
    CHECK(cls.sylow.count == c.classes);
    CHECK(cls.sylow.uniform_size() == c.class_size);
    CHECK(sylow_partition(cls) == cls.sylow);
    const auto labels = commuting_components(cls);
    CHECK(Partition::from_labels(labels) == cls.sylow);
  }
}

TEST_CASE("product orders") {
  const auto cls = involution_class(make_group(Family::Sz, 3));
  CHECK(product_order(cls, 0, 0) == 1);
  bool saw_commuting = false, saw_distinguished = false;
  for (Vertex y = 1; y < cls.size(); ++y) {
    const unsigned o = product_order(cls, 0, y);
    if (commutes(cls, 0, y)) {
      CHECK(o == 2);
      saw_commuting = true;
    }
    saw_distinguished = saw_distinguished || o == cls.spec.chi;
  }
  CHECK(saw_commuting);
  CHECK(saw_distinguished);
}

TEST_CASE("propagating a root row reproduces the all-pairs relation") {
  for (const auto& [family, n] : {std::pair{Family::PSL2, 3u}, std::pair{Family::Sz, 3u}, std::pair{Family::PSU3, 2u}}) {
    const auto cls = involution_class(make_group(family, n));
    const Vertex v = cls.size();
    Graph direct(v);
    for (Vertex x = 0; x < v; ++x)
      for (Vertex y = x + 1; y < v; ++y)
        if (product_order(cls, x, y) == cls.spec.chi) direct.add_edge(x, y);
    CHECK(propagate_invariant_graph(cls, direct.row(0)) == direct);
    CHECK(propagate_invariant_graph(cls, commuting_graph(cls).row(0)) == commuting_graph(cls));
  }
}

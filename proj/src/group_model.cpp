#include "fgl/group_model.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "fgl/error.hpp"
#include "fgl/parallel.hpp"

namespace fgl {

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::PSL2: return "psl2";
    case Family::Sz: return "sz";
    case Family::PSU3: return "psu3";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "psl2") return Family::PSL2;
  if (name == "sz") return Family::Sz;
  if (name == "psu3") return Family::PSU3;
  throw Error(Errc::ParseError, "unknown family '" + std::string(name) + "' (expected psl2, sz or psu3)");
}

std::uint64_t GroupSpec::sylow_order() const {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < sylow_exponent; ++i) out *= q;
  return out;
}

std::uint64_t GroupSpec::expected_class_size() const {
  const std::uint64_t qq = q;
  switch (family) {
    case Family::PSL2: return qq * qq - 1;
    case Family::Sz: return (qq * qq + 1) * (qq - 1);
    case Family::PSU3: return (qq * qq * qq + 1) * (qq - 1);
  }
  return 0;
}

std::string GroupSpec::label() const {
  static constexpr const char* kNames[] = {"PSL2", "Sz", "PSU3"};
  return std::string(kNames[static_cast<int>(family)]) + "(" + std::to_string(q) + ")";
}

GroupSpec make_group(Family family, unsigned n) {
  if (n < 2) throw Error(Errc::InvalidQ, "q = 2^" + std::to_string(n) + " is below 4");
  if (family == Family::Sz && n % 2 == 0) {
    throw Error(Errc::SzEvenExponent, "Sz(2^n) requires odd n >= 3, got n = " + std::to_string(n));
  }
  const unsigned degree = family == Family::PSU3 ? 2 * n : n;
  if (degree > kMaxFieldDegree) {
    throw Error(Errc::UnsupportedDegree, "field degree " + std::to_string(degree) + " exceeds 24");
  }

  GroupSpec spec;
  spec.family = family;
  spec.n = n;
  spec.q = 1u << n;
  spec.field = FieldCtx(degree);
  switch (family) {
    case Family::PSL2:
      spec.sylow_exponent = 1;
      spec.chi = 3;
      spec.dim = 2;
      break;
    case Family::Sz:
      spec.sylow_exponent = 2;
      spec.chi = 5;
      spec.dim = 4;
      break;
    case Family::PSU3:
      spec.sylow_exponent = 3;
      spec.chi = 3;
      spec.dim = 3;
      break;
  }

  spec.center.push_back(spec.field.one());
  if (family == Family::PSU3) {
    // Scalars z with z^3 = 1 (determinant) and z^(q+1) = 1 (unitary).
    const FieldCtx& f = spec.field;
    const Fq omega = f.pow(f.primitive(), (f.size() - 1) / 3);
    for (Fq z : {omega, f.mul(omega, omega)}) {
      if (f.pow(z, spec.q + 1) == f.one()) spec.center.push_back(z);
    }
  }
  return spec;
}

namespace {

bool preserves_form(const FieldCtx& f, const Matrix& left, const Matrix& m, const Matrix& form) {
  return mat_mul(f, mat_mul(f, left, form), m) == form;
}

}  // namespace

bool satisfies_group_form(const GroupSpec& spec, const Matrix& m) {
  const FieldCtx& f = spec.field;
  if (m.dim != spec.dim) return false;
  for (unsigned r = 0; r < m.dim; ++r)
    for (unsigned c = 0; c < m.dim; ++c)
      if (!f.contains(m.at(r, c))) return false;
  if (determinant(f, m) != f.one()) return false;
  const Matrix form = Matrix::reversal(spec.dim);
  switch (spec.family) {
    case Family::PSL2: return true;
    case Family::Sz: return preserves_form(f, transpose(m), m, form);
    case Family::PSU3: return preserves_form(f, transpose(mat_frobenius(f, m, spec.n)), m, form);
  }
  return false;
}

Matrix suzuki_unipotent(const GroupSpec& spec, Fq a, Fq b) {
  const FieldCtx& f = spec.field;
  const unsigned twist = (spec.n + 1) / 2;
  const Fq ta = f.frobenius(a, twist);
  const Fq tb = f.frobenius(b, twist);
  const Fq a2 = f.mul(a, a);
  Matrix m = Matrix::identity(4);
  m.at(1, 0) = a;
  m.at(2, 0) = b;
  m.at(2, 1) = ta;
  m.at(3, 0) = FieldCtx::add(FieldCtx::add(f.mul(a2, ta), f.mul(a, b)), tb);
  m.at(3, 1) = FieldCtx::add(f.mul(a, ta), b);
  m.at(3, 2) = a;
  return m;
}

Matrix suzuki_torus(const GroupSpec& spec, Fq lambda) {
  const FieldCtx& f = spec.field;
  const unsigned m = (spec.n - 1) / 2;
  const Fq small = f.frobenius(lambda, m);  // lambda^(2^m)
  const Fq big = f.mul(lambda, small);      // lambda^(1 + 2^m)
  Matrix out(4);
  out.at(0, 0) = big;
  out.at(1, 1) = small;
  out.at(2, 2) = f.inv(small);
  out.at(3, 3) = f.inv(big);
  return out;
}

std::vector<Matrix> unitary_unipotent_radical(const GroupSpec& spec) {
  const FieldCtx& f = spec.field;
  std::vector<Matrix> out;
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      for (std::uint32_t c = 0; c < f.size(); ++c) {
        Matrix m = Matrix::identity(3);
        m.at(1, 0) = Fq{a};
        m.at(2, 0) = Fq{b};
        m.at(2, 1) = Fq{c};
        if (satisfies_group_form(spec, m)) out.push_back(m);
      }
    }
  }
  return out;
}

namespace {

std::string encode_key(const GroupSpec& spec, const Matrix& m) { return encode(spec.field, m); }

// Right-multiplication closure of {I} under `gens`; gens generate a finite group.
std::unordered_set<std::string> subgroup_closure(const GroupSpec& spec, const std::vector<Matrix>& gens) {
  std::unordered_set<std::string> seen;
  std::vector<Matrix> queue{Matrix::identity(spec.dim)};
  seen.insert(encode_key(spec, queue.front()));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Matrix next = mat_mul(spec.field, queue[i], g);
      if (seen.insert(encode_key(spec, next)).second) queue.push_back(next);
    }
  }
  return seen;
}

std::vector<Matrix> unitary_generators(const GroupSpec& spec) {
  const auto radical = unitary_unipotent_radical(spec);
  const std::uint64_t expected = spec.sylow_order();
  if (radical.size() != expected) {
    throw Error(Errc::GeneratorValidationFailed, "unipotent radical has " + std::to_string(radical.size()) +
                                                     " elements, expected " + std::to_string(expected));
  }
  // Greedy: keep an element only if it is outside the subgroup generated so far.
  std::vector<Matrix> gens;
  std::unordered_set<std::string> generated{encode_key(spec, Matrix::identity(3))};
  for (const auto& u : radical) {
    if (generated.size() == radical.size()) break;
    if (generated.contains(encode_key(spec, u))) continue;
    gens.push_back(u);
    generated = subgroup_closure(spec, gens);
  }
  if (generated.size() != radical.size()) {
    throw Error(Errc::GeneratorValidationFailed, "unipotent radical is not closed under multiplication");
  }
  gens.push_back(Matrix::reversal(3));
  return gens;
}

}  // namespace

std::vector<Matrix> generators(const GroupSpec& spec) {
  const FieldCtx& f = spec.field;
  std::vector<Matrix> gens;
  switch (spec.family) {
    case Family::PSL2:
      for (unsigned i = 0; i < spec.n; ++i) gens.push_back(Matrix(2, {1, 1u << i, 0, 1}));
      gens.push_back(Matrix::reversal(2));
      break;
    case Family::Sz:
      for (unsigned i = 0; i < spec.n; ++i) gens.push_back(suzuki_unipotent(spec, Fq{1u << i}, f.zero()));
      for (unsigned i = 0; i < spec.n; ++i) gens.push_back(suzuki_unipotent(spec, f.zero(), Fq{1u << i}));
      gens.push_back(suzuki_torus(spec, f.primitive()));
      gens.push_back(Matrix::reversal(4));
      break;
    case Family::PSU3:
      gens = unitary_generators(spec);
      break;
  }
  for (const auto& g : gens) {
    if (!satisfies_group_form(spec, g)) {
      throw Error(Errc::GeneratorValidationFailed, "generator outside " + spec.label());
    }
  }
  return gens;
}

Matrix seed_involution(const GroupSpec& spec) { return Matrix::reversal(spec.dim); }

namespace {

Matrix canonical_unchecked(const GroupSpec& spec, const Matrix& m) {
  if (spec.center.size() == 1) return m;
  Matrix best = m;
  std::string best_key = encode_key(spec, m);
  for (std::size_t i = 1; i < spec.center.size(); ++i) {
    Matrix scaled = mat_scale(spec.field, spec.center[i], m);
    std::string key = encode_key(spec, scaled);
    if (key < best_key) {
      best_key = std::move(key);
      best = scaled;
    }
  }
  return best;
}

}  // namespace

Matrix canonicalize(const GroupSpec& spec, const Matrix& m) {
  if (!satisfies_group_form(spec, m)) throw Error(Errc::NotInGroupForm, "matrix is not in " + spec.label());
  return canonical_unchecked(spec, m);
}

bool is_central(const GroupSpec& spec, const Matrix& m) {
  if (!m.is_scalar()) return false;
  return std::find(spec.center.begin(), spec.center.end(), m.at(0, 0)) != spec.center.end();
}

unsigned element_order(const GroupSpec& spec, const Matrix& m) {
  const std::uint64_t cap = spec.order_cap();
  Matrix power = m;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    if (is_central(spec, power)) return static_cast<unsigned>(k);
    power = mat_mul(spec.field, power, m);
  }
  throw Error(Errc::OrderCapExceeded, "element order exceeds " + std::to_string(cap) + " in " + spec.label());
}

std::optional<Vertex> InvolutionClass::find(const Matrix& m) const {
  auto it = index.find(encode_key(spec, canonical_unchecked(spec, m)));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

bool is_projective_involution(const GroupSpec& spec, const Matrix& t) {
  return !is_central(spec, t) && is_central(spec, mat_mul(spec.field, t, t));
}

// Labels the commuting classes by carrying the root's class along the
// breadth-first tree. Every relabelling collision is a transitivity failure.
Partition propagate_sylow_classes(const InvolutionClass& cls) {
  const Vertex v = cls.size();
  std::vector<std::vector<Vertex>> block(v);
  block[0].push_back(0);
  for (Vertex y = 1; y < v; ++y)
    if (commutes(cls, 0, y)) block[0].push_back(y);

  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(v, kUnset);
  std::uint32_t next_label = 0;
  for (Vertex x = 0; x < v; ++x) {
    if (x != 0) {
      const auto& perm = cls.action[cls.parent_generator[x]];
      for (Vertex y : block[cls.parent[x]]) block[x].push_back(perm[y]);
    }
    const std::uint32_t mine = label[x] == kUnset ? next_label++ : label[x];
    for (Vertex y : block[x]) {
      if (label[y] != kUnset && label[y] != mine) {
        throw Error(Errc::NotAnEquivalence, "commuting classes of vertices " + std::to_string(x) + " and " +
                                                std::to_string(y) + " overlap without coinciding");
      }
      label[y] = mine;
    }
  }
  return Partition::from_labels(label);
}

void check_sylow_shape(const InvolutionClass& cls, const Partition& p) {
  const std::uint64_t classes = cls.spec.sylow_order() + 1;
  const std::uint64_t size = cls.spec.q - 1;
  if (p.count != classes || p.uniform_size() != size) {
    throw Error(Errc::ClassSizeMismatch, "commuting classes: " + std::to_string(p.count) + " classes, expected " +
                                             std::to_string(classes) + " of size " + std::to_string(size));
  }
}

}  // namespace

InvolutionClass involution_class(const GroupSpec& spec) {
  InvolutionClass cls;
  cls.spec = spec;
  cls.generators = generators(spec);

  const Matrix seed = seed_involution(spec);
  if (!satisfies_group_form(spec, seed) || !is_projective_involution(spec, seed)) {
    throw Error(Errc::SeedNotInvolution, "seed is not an involution of " + spec.label());
  }

  std::vector<Matrix> inverses;
  for (const auto& g : cls.generators) inverses.push_back(inverse(spec.field, g));

  const std::uint64_t expected = spec.expected_class_size();
  auto insert = [&](const Matrix& m, Vertex from, std::uint32_t gen) -> Vertex {
    Matrix canon = canonical_unchecked(spec, m);
    auto [it, inserted] = cls.index.try_emplace(encode_key(spec, canon), cls.size());
    if (inserted) {
      if (cls.members.size() >= expected) {
        throw Error(Errc::ClassSizeMismatch, "orbit of the seed exceeds " + std::to_string(expected) + " in " +
                                                 spec.label());
      }
      cls.members.push_back(canon);
      cls.parent.push_back(from);
      cls.parent_generator.push_back(gen);
    }
    return it->second;
  };

  insert(seed, 0, 0);
  cls.action.assign(cls.generators.size(), {});
  for (Vertex x = 0; x < cls.size(); ++x) {
    for (std::uint32_t g = 0; g < cls.generators.size(); ++g) {
      const Matrix conj = mat_mul(spec.field, mat_mul(spec.field, inverses[g], cls.members[x]), cls.generators[g]);
      const Vertex y = insert(conj, x, g);
      cls.action[g].push_back(y);
    }
  }
  if (cls.size() != expected) {
    throw Error(Errc::ClassSizeMismatch, "orbit of the seed has " + std::to_string(cls.size()) + " involutions, expected " +
                                             std::to_string(expected) + " in " + spec.label());
  }

  cls.sylow = propagate_sylow_classes(cls);
  check_sylow_shape(cls, cls.sylow);
  return cls;
}

unsigned product_order(const InvolutionClass& cls, Vertex x, Vertex y) {
  return element_order(cls.spec, mat_mul(cls.spec.field, cls.members[x], cls.members[y]));
}

bool commutes(const InvolutionClass& cls, Vertex x, Vertex y) {
  const FieldCtx& f = cls.spec.field;
  const Matrix xy = mat_mul(f, cls.members[x], cls.members[y]);
  const Matrix yx = mat_mul(f, cls.members[y], cls.members[x]);
  if (xy == yx) return true;
  for (std::size_t i = 1; i < cls.spec.center.size(); ++i) {
    if (xy == mat_scale(f, cls.spec.center[i], yx)) return true;
  }
  return false;
}

Graph commuting_graph(const InvolutionClass& cls) {
  const Vertex v = cls.size();
  Graph g(v);
  parallel_for(v, [&](std::size_t x, unsigned) {
    for (Vertex y = static_cast<Vertex>(x) + 1; y < v; ++y)
      if (commutes(cls, static_cast<Vertex>(x), y)) g.add_arc(static_cast<Vertex>(x), y);
  });
  g.symmetrize_from_upper();
  return g;
}

Graph propagate_invariant_graph(const InvolutionClass& cls, std::span<const Word> root_row) {
  const Vertex v = cls.size();
  Graph g(v);
  std::copy(root_row.begin(), root_row.end(), g.row(0).begin());
  for (Vertex x = 1; x < v; ++x) {
    const auto& perm = cls.action[cls.parent_generator[x]];
    auto dst = g.row(x);
    for_each_bit(g.row(cls.parent[x]), [&](Vertex y) { set_bit(dst, perm[y]); });
  }
  return g;
}

Partition sylow_partition(const InvolutionClass& cls, const Graph& commuting) {
  const Vertex v = cls.size();
  if (commuting.order() != v) throw Error(Errc::NotAnEquivalence, "commuting graph has the wrong order");
  // x ~ y and y ~ z must give x ~ z: the closed neighbourhoods of related
  // vertices coincide.
  auto closed_row = [&](Vertex x) {
    std::vector<Word> row(commuting.row(x).begin(), commuting.row(x).end());
    set_bit(row, x);
    return row;
  };
  for (Vertex x = 0; x < v; ++x) {
    const auto mine = closed_row(x);
    for_each_bit(commuting.row(x), [&](Vertex y) {
      const auto theirs = closed_row(y);
      if (theirs == mine) return;
      for (Vertex z = 0; z < v; ++z) {
        if (test_bit(theirs, z) == test_bit(mine, z)) continue;
        const Vertex a = test_bit(theirs, z) ? x : y;
        const Vertex b = a == x ? y : x;
        throw Error(Errc::NotAnEquivalence, "vertices " + std::to_string(a) + " ~ " + std::to_string(b) + " ~ " +
                                                std::to_string(z) + " but " + std::to_string(a) + " !~ " +
                                                std::to_string(z));
      }
    });
  }
  std::vector<std::uint32_t> label(v, ~std::uint32_t{0});
  std::uint32_t next = 0;
  for (Vertex x = 0; x < v; ++x) {
    if (label[x] != ~std::uint32_t{0}) continue;
    label[x] = next;
    for_each_bit(commuting.row(x), [&](Vertex y) { label[y] = next; });
    ++next;
  }
  Partition p = Partition::from_labels(label);
  check_sylow_shape(cls, p);
  return p;
}

Partition sylow_partition(const InvolutionClass& cls) { return sylow_partition(cls, commuting_graph(cls)); }

}  // namespace fgl

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fgl/finite_field.hpp"
#include "fgl/graph.hpp"
#include "fgl/matrix.hpp"

namespace fgl {

enum class Family { PSL2, Sz, PSU3 };

/// "psl2", "sz", "psu3".
std::string_view family_name(Family family) noexcept;
/// Accepts the lower-case names above; throws ParseError otherwise.
Family parse_family(std::string_view name);

/// One of PSL2(q), Sz(q), PSU3(q) with q = 2^n, together with the data the
/// matrix model needs.
struct GroupSpec {
  Family family = Family::PSL2;
  unsigned n = 0;
  std::uint32_t q = 0;
  unsigned sylow_exponent = 0;  // Sylow 2-subgroups have order q^sylow_exponent
  unsigned chi = 0;             // associated prime: 5 for Sz, else 3
  unsigned dim = 0;
  FieldCtx field{2};            // GF(q), or GF(q^2) for PSU3
  std::vector<Fq> center;       // scalars s with sI in the matrix group; center[0] == 1

  std::uint64_t sylow_order() const;
  /// Size of the involution class: q^2-1, (q^2+1)(q-1), (q^3+1)(q-1).
  std::uint64_t expected_class_size() const;
  /// Iteration cap for element_order.
  std::uint64_t order_cap() const { return 4ull * q * q; }
  std::string label() const;
};

/// Throws InvalidQ for n < 2, SzEvenExponent for Sz with even n and
/// UnsupportedDegree when the field would exceed GF(2^24).
GroupSpec make_group(Family family, unsigned n);

/// Determinant 1 plus the family's form: the alternating antidiagonal form for
/// Sz, the Hermitian antidiagonal form for PSU3.
bool satisfies_group_form(const GroupSpec& spec, const Matrix& m);

/// Lower unitriangular S(a, b) of the 4-dimensional Suzuki model, with twist
/// t(x) = x^(2^((n+1)/2)).
Matrix suzuki_unipotent(const GroupSpec& spec, Fq a, Fq b);
/// diag(l^(1+2^m), l^(2^m), l^-(2^m), l^-(1+2^m)), m = (n-1)/2.
Matrix suzuki_torus(const GroupSpec& spec, Fq lambda);
/// Every lower unitriangular 3x3 matrix over GF(q^2) preserving the Hermitian
/// form, found by exhaustive scan. Has q^3 elements.
std::vector<Matrix> unitary_unipotent_radical(const GroupSpec& spec);

/// Generating set of the group; every element passes satisfies_group_form.
std::vector<Matrix> generators(const GroupSpec& spec);
/// The reversal matrix, which is an involution in every family.
Matrix seed_involution(const GroupSpec& spec);

/// Encoding-least representative of {z M : z in center}. Throws
/// NotInGroupForm.
Matrix canonicalize(const GroupSpec& spec, const Matrix& m);
bool is_central(const GroupSpec& spec, const Matrix& m);
/// Least m >= 1 with M^m central. Throws OrderCapExceeded past order_cap().
unsigned element_order(const GroupSpec& spec, const Matrix& m);

/// The conjugacy class of involutions, numbered in breadth-first discovery
/// order from the seed, with the conjugation action of every generator.
struct InvolutionClass {
  GroupSpec spec;
  std::vector<Matrix> members;
  std::unordered_map<std::string, Vertex> index;  // canonical encoding -> vertex
  Partition sylow;                                 // commuting classes

  std::vector<Matrix> generators;
  /// action[g][x] is the vertex of g^-1 x g.
  std::vector<std::vector<Vertex>> action;
  /// Breadth-first tree: members[x] = g^-1 members[parent[x]] g for
  /// g = generators[parent_generator[x]]. Root is vertex 0.
  std::vector<Vertex> parent;
  std::vector<std::uint32_t> parent_generator;

  Vertex size() const noexcept { return static_cast<Vertex>(members.size()); }
  std::optional<Vertex> find(const Matrix& m) const;
};

/// Throws SeedNotInvolution, ClassSizeMismatch or NotAnEquivalence.
InvolutionClass involution_class(const GroupSpec& spec);

unsigned product_order(const InvolutionClass& cls, Vertex x, Vertex y);
/// xy = z yx for some central scalar z.
bool commutes(const InvolutionClass& cls, Vertex x, Vertex y);

/// Commuting relation over all pairs by direct matrix computation.
Graph commuting_graph(const InvolutionClass& cls);

/// Extends the row of vertex 0 of a conjugation-invariant relation to the
/// whole class along the breadth-first tree.
Graph propagate_invariant_graph(const InvolutionClass& cls, std::span<const Word> root_row);

/// Classes of the commuting relation. Checks transitivity on every pair and
/// that there are q^l + 1 classes of size q - 1. Throws NotAnEquivalence or
/// ClassSizeMismatch.
Partition sylow_partition(const InvolutionClass& cls, const Graph& commuting);
Partition sylow_partition(const InvolutionClass& cls);

}  // namespace fgl

#pragma once

// Simplicial homology over Q and F2, order complexes of finite posets, and
// Mayer-Vietoris assembly for a union of two complexes along a common subcomplex.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "phasesphere/complex.hpp"

namespace phasesphere {

enum class Field { Rationals, GF2 };

std::string to_string(Field f);
/// "q" or "f2".
Field parse_field(std::string_view text);

struct BettiReport {
  Field field = Field::Rationals;
  std::vector<std::size_t> betti;  // dimensions 0..dim K
  std::int64_t euler = 0;
};

/// Rank of the boundary map from k-chains to (k-1)-chains (0 for k <= 0).
std::size_t boundary_rank(const SimplicialComplex& k, int dim, Field field);

BettiReport betti(const SimplicialComplex& k, Field field);
std::int64_t euler_characteristic(const SimplicialComplex& k);

/// Chains of the poset on {0, ..., count-1}; only maximal chains are stored. Throws
/// std::invalid_argument when `leq` is not reflexive, antisymmetric and transitive.
SimplicialComplex order_complex_of_poset(std::size_t count,
                                         const std::function<bool(std::size_t, std::size_t)>& leq);

/// Order complex of the poset of nonempty faces of k (its barycentric subdivision).
SimplicialComplex face_poset_order_complex(const SimplicialComplex& k);

struct MayerVietorisResult {
  std::vector<std::size_t> betti;       // of A ∪ B
  std::vector<std::size_t> image_rank;  // rank of H_k(C) -> H_k(A) ⊕ H_k(B)
};

/// Homology of A ∪ B from the long exact sequence, where C sits in A and B through
/// the vertex maps. Throws std::invalid_argument when a map is not an injective
/// simplicial map onto simplices of its target.
MayerVietorisResult mayer_vietoris_assemble(const SimplicialComplex& a, const SimplicialComplex& b,
                                            const SimplicialComplex& c,
                                            const std::vector<std::uint32_t>& c_to_a,
                                            const std::vector<std::uint32_t>& c_to_b, Field field);

}  // namespace phasesphere

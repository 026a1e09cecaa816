#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "topo/complex.hpp"
#include "topo/integer_matrix.hpp"

namespace topo {

/// H_1 over the integers.
struct HomologySummary {
    std::size_t betti1 = 0;
    /// Invariant factors > 1, each dividing the next.
    std::vector<Integer> torsion;

    /// Minimal number of generators of H_1.
    std::size_t min_generators() const { return betti1 + torsion.size(); }
    bool operator==(const HomologySummary&) const = default;
};

/// Simplicial boundary maps in degrees 1 and 2.
///
/// Rows of ∂1 follow complex.vertices(); columns follow face_enumeration(K, 1),
/// which also indexes the rows of ∂2; columns of ∂2 follow
/// face_enumeration(K, 2). Simplices are oriented by ascending vertex id.
struct BoundaryMatrices {
    IntegerMatrix d1;
    IntegerMatrix d2;
};

BoundaryMatrices boundary_matrices(const SimplicialComplex& complex);

/// Throws DisconnectedError unless the complex has exactly one component.
HomologySummary h1(const SimplicialComplex& complex);

/// Betti number and torsion from a relation matrix whose columns are
/// generators of a free abelian group; the cokernel's invariants.
HomologySummary abelian_invariants(const IntegerMatrix& relations, std::size_t generators);

/// 1-chain of an edge path given as a vertex sequence, in the edge order of
/// face_enumeration(K, 1). Degenerate steps contribute nothing.
std::vector<Integer> path_chain(const SimplicialComplex& complex, const std::vector<VertexId>& path);

/**
 * Decides membership in im ∂2 for a fixed complex.
 *
 * Holds the Smith decomposition U ∂2 V = D; z lies in the image iff
 * (Uz)_i is divisible by d_i for i < rank and vanishes beyond.
 */
class BoundaryTester {
public:
    explicit BoundaryTester(const SimplicialComplex& complex);

    bool is_cycle(const std::vector<Integer>& chain) const;
    bool is_boundary(const std::vector<Integer>& chain) const;
    /// Requires both chains to be cycles; throws InvalidArgument otherwise.
    bool same_class(const std::vector<Integer>& z1, const std::vector<Integer>& z2) const;

private:
    IntegerMatrix d1_;
    SmithDecomposition snf_;
};

bool cycle_class_equal(const SimplicialComplex& complex, const std::vector<Integer>& z1,
                       const std::vector<Integer>& z2);

} // namespace topo

#pragma once

#include <string>
#include <vector>

#include "topo/complex.hpp"
#include "topo/poset.hpp"

namespace topo {

/// Boundary of the d-dimensional cross-polytope. Vertices 2i and 2i+1 form
/// the i-th antipodal pair and both get color i+1.
SimplicialComplex cross_polytope(int d);

/// The n-cycle with alternating colors 1, 2. n must be even and at least 4.
SimplicialComplex cycle(int n);

/// Minimal 7-vertex triangulation of the torus (uncolored).
SimplicialComplex torus7();

/// Minimal 6-vertex triangulation of the real projective plane (uncolored).
SimplicialComplex rp2_6();

SimplicialComplex sd_torus();
SimplicialComplex sd_rp2();

/// Two atoms u = 0, v = 1 and two rank-2 elements e = 2, f = 3, each covering
/// both atoms. Colors: u -> 1, v -> 2.
SimplicialPoset double_circle();

/// K # K # ... # K (r copies). Each new copy is glued along its first facet to
/// the last facet of the running sum.
SimplicialComplex iterated_connected_sum(const SimplicialComplex& base, int copies);

struct CorpusEntry {
    std::string name;
    SimplicialComplex complex;
};

/// The complexes every check runs over.
std::vector<CorpusEntry> standard_corpus();

} // namespace topo

#include "topo/corpus.hpp"

#include <algorithm>

#include "topo/error.hpp"

namespace topo {

SimplicialComplex cross_polytope(int d) {
    if (d < 1)
        throw InvalidArgument("cross-polytope dimension must be positive");
    if (d > 16)
        throw InvalidArgument("cross-polytope dimension too large");
    std::vector<Face> facets;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        Face f;
        for (int i = 0; i < d; ++i)
            f.push_back(2 * i + static_cast<int>((mask >> i) & 1u));
        facets.push_back(std::move(f));
    }
    Coloring coloring;
    for (int v = 0; v < 2 * d; ++v)
        coloring[v] = v / 2 + 1;
    return SimplicialComplex::from_faces(std::move(facets), coloring);
}

SimplicialComplex cycle(int n) {
    if (n < 4 || n % 2 != 0)
        throw InvalidArgument("balanced cycle needs an even length of at least 4");
    std::vector<Face> facets;
    Coloring coloring;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        facets.push_back({std::min(i, j), std::max(i, j)});
        coloring[i] = i % 2 + 1;
    }
    return SimplicialComplex::from_faces(std::move(facets), coloring);
}

// Möbius torus: the 14 triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex torus7() {
    std::vector<Face> facets;
    for (int i = 0; i < 7; ++i) {
        for (const Face& t : {Face{i, (i + 1) % 7, (i + 3) % 7}, Face{i, (i + 2) % 7, (i + 3) % 7}}) {
            Face f = t;
            std::sort(f.begin(), f.end());
            facets.push_back(std::move(f));
        }
    }
    return SimplicialComplex::from_faces(std::move(facets));
}

// Hemi-icosahedron: 10 triangles on 6 vertices.
SimplicialComplex rp2_6() {
    return SimplicialComplex({{0, 1, 2}, {0, 1, 5}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5},
                              {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
}

SimplicialComplex sd_torus() { return barycentric_subdivision(torus7()); }

SimplicialComplex sd_rp2() { return barycentric_subdivision(rp2_6()); }

SimplicialPoset double_circle() {
    return SimplicialPoset({{0, 1, "u"}, {1, 1, "v"}, {2, 2, "e"}, {3, 2, "f"}},
                           {{0, 2}, {1, 2}, {0, 3}, {1, 3}}, Coloring{{0, 1}, {1, 2}});
}

SimplicialComplex iterated_connected_sum(const SimplicialComplex& base, int copies) {
    if (copies < 1)
        throw InvalidArgument("connected sum needs at least one copy");
    if (base.facets().empty())
        throw InvalidArgument("connected sum of the void complex");
    SimplicialComplex sum = base;
    for (int i = 1; i < copies; ++i)
        sum = connected_sum(sum, base, sum.facets().back(), base.facets().front());
    return sum;
}

std::vector<CorpusEntry> standard_corpus() {
    const SimplicialComplex octahedron = cross_polytope(3);
    return {
        {"octahedron", octahedron},
        {"cross-polytope-4", cross_polytope(4)},
        {"cross-polytope-5", cross_polytope(5)},
        {"cycle-4", cycle(4)},
        {"cycle-6", cycle(6)},
        {"cycle-8", cycle(8)},
        {"sd-torus", sd_torus()},
        {"sd-rp2", sd_rp2()},
        {"octahedron-sum-2", iterated_connected_sum(octahedron, 2)},
        {"octahedron-sum-3", iterated_connected_sum(octahedron, 3)},
    };
}

} // namespace topo

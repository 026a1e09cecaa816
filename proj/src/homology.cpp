#include "topo/homology.hpp"

#include <algorithm>
#include <map>

#include "topo/error.hpp"

namespace topo {

namespace {

std::map<Face, std::size_t> index_faces(const std::vector<Face>& faces) {
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < faces.size(); ++i)
        index.emplace(faces[i], i);
    return index;
}

} // namespace

BoundaryMatrices boundary_matrices(const SimplicialComplex& complex) {
    const auto& vertices = complex.vertices();
    const std::vector<Face> edges =
        complex.dim() >= 1 ? face_enumeration(complex, 1) : std::vector<Face>{};
    const std::vector<Face> triangles =
        complex.dim() >= 2 ? face_enumeration(complex, 2) : std::vector<Face>{};

    std::map<VertexId, std::size_t> vertex_index;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        vertex_index.emplace(vertices[i], i);
    const auto edge_index = index_faces(edges);

    BoundaryMatrices out{IntegerMatrix(vertices.size(), edges.size()),
                         IntegerMatrix(edges.size(), triangles.size())};
    for (std::size_t j = 0; j < edges.size(); ++j) {
        out.d1(vertex_index.at(edges[j][0]), j) = -1;
        out.d1(vertex_index.at(edges[j][1]), j) = 1;
    }
    for (std::size_t j = 0; j < triangles.size(); ++j) {
        const Face& t = triangles[j];
        out.d2(edge_index.at({t[1], t[2]}), j) = 1;
        out.d2(edge_index.at({t[0], t[2]}), j) = -1;
        out.d2(edge_index.at({t[0], t[1]}), j) = 1;
    }
    return out;
}

HomologySummary abelian_invariants(const IntegerMatrix& relations, std::size_t generators) {
    if (relations.cols() != generators)
        throw InvalidArgument("relation matrix width differs from generator count");
    HomologySummary summary;
    const auto factors = invariant_factors(relations);
    summary.betti1 = generators - factors.size();
    for (const Integer& f : factors)
        if (f > 1)
            summary.torsion.push_back(f);
    return summary;
}

HomologySummary h1(const SimplicialComplex& complex) {
    if (connected_components(complex) != 1)
        throw DisconnectedError("first homology is only computed for connected complexes");
    const auto boundaries = boundary_matrices(complex);
    const std::size_t rank1 = invariant_factors(boundaries.d1).size();
    const auto factors2 = invariant_factors(boundaries.d2);
    HomologySummary summary;
    summary.betti1 = boundaries.d1.cols() - rank1 - factors2.size();
    for (const Integer& f : factors2)
        if (f > 1)
            summary.torsion.push_back(f);
    return summary;
}

std::vector<Integer> path_chain(const SimplicialComplex& complex, const std::vector<VertexId>& path) {
    const std::vector<Face> edges =
        complex.dim() >= 1 ? face_enumeration(complex, 1) : std::vector<Face>{};
    const auto edge_index = index_faces(edges);
    std::vector<Integer> chain(edges.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const VertexId a = path[i], b = path[i + 1];
        if (a == b) {
            if (!complex.has_vertex(a))
                throw FaceNotFoundError("vertex " + std::to_string(a) + " is not in the complex");
            continue;
        }
        auto it = edge_index.find({std::min(a, b), std::max(a, b)});
        if (it == edge_index.end())
            throw FaceNotFoundError("edge " + face_to_string({std::min(a, b), std::max(a, b)}) +
                                    " is not in the complex");
        chain[it->second] += a < b ? 1 : -1;
    }
    return chain;
}

BoundaryTester::BoundaryTester(const SimplicialComplex& complex) {
    auto boundaries = boundary_matrices(complex);
    d1_ = std::move(boundaries.d1);
    snf_ = smith_normal_form(boundaries.d2);
}

bool BoundaryTester::is_cycle(const std::vector<Integer>& chain) const {
    if (chain.size() != d1_.cols())
        return false;
    const auto image = d1_ * chain;
    return std::all_of(image.begin(), image.end(), [](const Integer& x) { return x == 0; });
}

bool BoundaryTester::is_boundary(const std::vector<Integer>& chain) const {
    if (chain.size() != snf_.left.cols())
        throw InvalidArgument("chain length differs from the number of edges");
    const auto transformed = snf_.left * chain;
    for (std::size_t i = 0; i < transformed.size(); ++i) {
        if (i < snf_.rank) {
            if (transformed[i] % snf_.diagonal(i, i) != 0)
                return false;
        } else if (transformed[i] != 0) {
            return false;
        }
    }
    return true;
}

bool BoundaryTester::same_class(const std::vector<Integer>& z1, const std::vector<Integer>& z2) const {
    if (!is_cycle(z1) || !is_cycle(z2))
        throw InvalidArgument("cycle_class_equal needs two 1-cycles");
    std::vector<Integer> diff(z1.size());
    for (std::size_t i = 0; i < z1.size(); ++i)
        diff[i] = z1[i] - z2[i];
    return is_boundary(diff);
}

bool cycle_class_equal(const SimplicialComplex& complex, const std::vector<Integer>& z1,
                       const std::vector<Integer>& z2) {
    return BoundaryTester(complex).same_class(z1, z2);
}

} // namespace topo

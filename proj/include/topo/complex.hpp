#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace topo {

using VertexId = int;
/// A face is a strictly ascending list of vertex ids.
using Face = std::vector<VertexId>;
/// Vertex id -> color. Colors are positive integers.
using Coloring = std::map<VertexId, int>;
using ColorSet = std::set<int>;
using LabelTable = std::map<VertexId, std::string>;

/**
 * Finite abstract simplicial complex stored through its facets.
 *
 * Faces are never materialised; membership and enumeration work by downward
 * closure of the facet list. The empty face is always present, so a complex
 * with no nonempty faces is the void complex {∅} of dimension -1.
 *
 * Construction validates: facets are duplicate free, none contains another,
 * and an optional coloring is total on vertices, positive, and injective on
 * every facet.
 */
class SimplicialComplex {
public:
    /// The void complex {∅}.
    SimplicialComplex();

    explicit SimplicialComplex(std::vector<Face> facets,
                               std::optional<Coloring> coloring = std::nullopt,
                               LabelTable labels = {});

    /// Complex generated by arbitrary faces; non-maximal generators and
    /// repeats are dropped. Coloring and labels are restricted to the vertices
    /// that survive.
    static SimplicialComplex from_faces(std::vector<Face> generators,
                                        const std::optional<Coloring>& coloring = std::nullopt,
                                        const LabelTable& labels = {});

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }
    int dim() const { return dim_; }
    bool is_void() const { return vertices_.empty(); }
    bool is_pure() const;

    const std::optional<Coloring>& coloring() const { return coloring_; }
    bool has_coloring() const { return coloring_.has_value(); }
    /// Color of `v`; throws MissingColoringError without a coloring.
    int color(VertexId v) const;

    const LabelTable& labels() const { return labels_; }
    /// Label of `v`, falling back to its decimal id.
    std::string label(VertexId v) const;

    bool has_vertex(VertexId v) const;
    bool contains(const Face& face) const;
    /// Indices into facets() of the facets containing `face`.
    std::vector<std::size_t> facets_containing(const Face& face) const;
    /// Vertices joined to `v` by an edge, ascending.
    std::vector<VertexId> neighbors(VertexId v) const;

    SimplicialComplex with_coloring(std::optional<Coloring> coloring) const;

    bool operator==(const SimplicialComplex& other) const {
        return facets_ == other.facets_ && coloring_ == other.coloring_;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<Face> facets_;
    int dim_ = -1;
    std::optional<Coloring> coloring_;
    LabelTable labels_;
    std::map<VertexId, std::vector<std::size_t>> incidence_;
};

/// f-vector; entries[k] holds f_{k-1}, so entries[0] = f_{-1} = 1.
struct FVector {
    std::vector<std::int64_t> entries;

    std::int64_t f(int i) const { return entries.at(static_cast<std::size_t>(i + 1)); }
    int d() const { return static_cast<int>(entries.size()) - 1; }
    bool operator==(const FVector&) const = default;
};

/// h-vector h_0..h_d.
struct HVector {
    std::vector<std::int64_t> entries;

    std::int64_t h(int i) const { return entries.at(static_cast<std::size_t>(i)); }
    int d() const { return static_cast<int>(entries.size()) - 1; }
    bool operator==(const HVector&) const = default;
};

struct PropertyReport {
    bool pure = false;
    bool balanced = false;
    bool links_connected = false;

    bool all() const { return pure && balanced && links_connected; }
};

/// All k-dimensional faces, lexicographically ordered. k = -1 yields [∅].
std::vector<Face> face_enumeration(const SimplicialComplex& complex, int k);

/// Every face including ∅, ordered by size then lexicographically.
std::vector<Face> all_faces(const SimplicialComplex& complex);

FVector f_vector(const SimplicialComplex& complex);

/// h_i = sum_{j<=i} (-1)^{i-j} C(d-j, d-i) f_{j-1} with d = f.d().
HVector h_from_f(const FVector& f);

/// h-vector of a pure complex; throws PurityError otherwise.
HVector h_vector(const SimplicialComplex& complex);

SimplicialComplex link(const SimplicialComplex& complex, const Face& face);
SimplicialComplex closed_star(const SimplicialComplex& complex, const Face& face);

/// Δ_S: faces whose vertex colors all lie in `colors`.
SimplicialComplex rank_select(const SimplicialComplex& complex, const ColorSet& colors);

/// Distinct colors used by the coloring; throws without one.
ColorSet color_set(const SimplicialComplex& complex);

/// Proper (dim+1)-coloring of the 1-skeleton with colors 1..dim+1, or nullopt.
/// Requires a pure complex.
std::optional<Coloring> find_balanced_coloring(const SimplicialComplex& complex);

/// True when the stored coloring is injective on facets and uses at most
/// dim+1 colors.
bool coloring_is_balanced(const SimplicialComplex& complex);

/// Connectivity of the geometric realization. Void and single-vertex
/// complexes count as connected.
bool is_connected(const SimplicialComplex& complex);

/// Number of connected components of the 1-skeleton (0 for the void complex).
std::size_t connected_components(const SimplicialComplex& complex);

PropertyReport check_properties(const SimplicialComplex& complex);

bool is_strongly_connected(const SimplicialComplex& complex);

/// Barycentric subdivision. Vertex i is the i-th nonempty face of
/// all_faces(complex) (size, then lex order); colored by face size.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

/// Connected sum along facets `first_facet` ∈ K1 and `second_facet` ∈ K2.
/// `matching` maps each vertex of first_facet to a vertex of second_facet;
/// when omitted, vertices are matched by color (colored inputs) or by
/// position. Colors of K2 are permuted to agree with K1 along the facet.
SimplicialComplex connected_sum(const SimplicialComplex& first, const SimplicialComplex& second,
                                const Face& first_facet, const Face& second_facet,
                                std::optional<std::map<VertexId, VertexId>> matching = std::nullopt);

/// Binomial coefficient C(n, k) for small non-negative arguments; 0 when k
/// is outside [0, n].
std::int64_t binomial(std::int64_t n, std::int64_t k);

std::string face_to_string(const Face& face);

} // namespace topo

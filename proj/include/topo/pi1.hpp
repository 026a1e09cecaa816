#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "topo/complex.hpp"
#include "topo/edge_path.hpp"
#include "topo/poset.hpp"
#include "topo/presentation.hpp"

namespace topo {

using Edge = std::pair<VertexId, VertexId>; // (low id, high id)

inline Edge make_edge(VertexId a, VertexId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/**
 * Spanning tree T of the 1-skeleton containing a spanning tree T̃ of Δ_S.
 * Both are stored through one parent map rooted at `root`; vertices of Δ_S
 * reach the root through T̃ alone.
 */
struct NestedSpanningTree {
    VertexId root = 0;
    std::map<VertexId, VertexId> parent;
    std::set<Edge> inner_edges; // T̃
    std::set<Edge> edges;       // T, contains inner_edges
    std::vector<VertexId> inner_vertices;

    bool contains(VertexId a, VertexId b) const { return edges.count(make_edge(a, b)) > 0; }
    bool inner_contains(VertexId a, VertexId b) const {
        return inner_edges.count(make_edge(a, b)) > 0;
    }
    /// Vertex sequence root -> v along the tree.
    std::vector<VertexId> path_from_root(VertexId v) const;
};

/// BFS tree of Δ_S from `root`, extended by BFS over all of K. Neighbors are
/// visited in ascending id order.
NestedSpanningTree build_nested_tree(const SimplicialComplex& complex, const ColorSet& colors,
                                     VertexId root);

/// Plain BFS spanning tree (T̃ = {root}); no coloring needed.
NestedSpanningTree spanning_tree(const SimplicialComplex& complex, VertexId root);

/// Smallest vertex id of Δ_S.
VertexId default_basepoint(const SimplicialComplex& complex, const ColorSet& colors);

/// Edge-path presentation: one generator per edge (oriented low -> high),
/// a length-1 relator per tree edge and g_ab g_bc g_ac^-1 per triangle a<b<c.
GroupPresentation full_presentation(const SimplicialComplex& complex, const NestedSpanningTree& tree);

/// Word of a closed path at the tree root; tree and degenerate edges vanish.
Word loop_to_word(const GroupPresentation& presentation, const NestedSpanningTree& tree,
                  const EdgePath& loop);

/// Loop at the root: tree path to u, the edge, tree path back, per letter.
EdgePath word_to_loop(const GroupPresentation& presentation, const NestedSpanningTree& tree,
                      const Word& word);

struct RewriteResult {
    EdgePath path;
    EquivalenceCertificate certificate;
};

/**
 * Moves edge paths into Δ_S for a fixed complex and color pair.
 *
 * The first vertex v1 outside Δ_S is removed by: choosing ṽ, the smallest
 * vertex of a facet containing {v1, v2} whose color is in S but differs from
 * v2's; walking a BFS path v0 = u_0, ..., u_k = ṽ in (lk v1)_S; and sliding
 * the path across the triangles {u_j, u_{j+1}, v1}. The construction repeats
 * on the remaining suffix. The constructor requires a pure, balanced complex with connected links.
 */
class PathRewriter {
public:
    PathRewriter(SimplicialComplex complex, ColorSet colors);

    RewriteResult rewrite(const EdgePath& path) const;

    const SimplicialComplex& complex() const { return complex_; }
    const ColorSet& colors() const { return colors_; }
    bool in_subcomplex(VertexId v) const { return colors_.count(complex_.color(v)) > 0; }

private:
    VertexId witness_vertex(VertexId v1, VertexId v2) const;
    std::vector<VertexId> link_path(VertexId center, VertexId from, VertexId to) const;

    SimplicialComplex complex_;
    ColorSet colors_;
};

RewriteResult rewrite_path_to_S(const SimplicialComplex& complex, const ColorSet& colors,
                                const EdgePath& path);

/// Presentation on the non-T̃ edges of Δ_S obtained by rewriting every other
/// generator into Δ_S and substituting through the relators. `presentation`
/// must be full_presentation(complex, tree).
GroupPresentation restrict_generators_to_S(const GroupPresentation& presentation,
                                           const SimplicialComplex& complex,
                                           const ColorSet& colors, const NestedSpanningTree& tree);

/// Same, reusing an existing rewriter for (complex, colors).
GroupPresentation restrict_generators_to_S(const GroupPresentation& presentation,
                                           const PathRewriter& rewriter,
                                           const NestedSpanningTree& tree);

struct PairBound {
    ColorSet colors;
    std::int64_t h2_subcomplex = 0;
    std::size_t restricted_generators = 0;
    std::size_t simplified_generators = 0;
    GroupPresentation simplified;
};

struct UpperBound {
    std::vector<PairBound> per_pair;
    std::size_t best = 0;
};

/// For every pair of colors: h_2(Δ_S) and the generator count after
/// restriction and Tietze simplification. best is the minimum count.
UpperBound m_upper_bound(const SimplicialComplex& complex, int tietze_rounds = 50);

/// Reads a path in Δ(P̄) through ranks 1 and 2 only, atom to atom, as a poset
/// edge path: each (a, e)(e, b) becomes the edge e from a to b. Degenerate
/// steps and spurs (a, e)(e, a) are dropped; an empty result is the
/// degenerate edge at the start.
PosetEdgePath parse_sd_path(const SimplicialPoset& poset, const EdgePath& path);

/// Sd: each poset edge e from v to v' becomes (v, e)(e, v').
EdgePath subdivide_path(const PosetEdgePath& path);

/// Edge-path presentation of a poset based at the atom `basepoint`. Built on
/// the order complex restricted to ranks {1, 2}; each generator is a rank-2
/// element with the orientation of its defining loop.
GroupPresentation poset_edge_path_group(const SimplicialPoset& poset, ElementId basepoint);

/// The loop in P at `basepoint` represented by each generator of
/// poset_edge_path_group, in generator order.
std::vector<PosetEdgePath> poset_generator_loops(const SimplicialPoset& poset, ElementId basepoint);

} // namespace topo

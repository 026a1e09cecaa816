#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "topo/complex.hpp"
#include "topo/poset.hpp"

namespace topo {

/**
 * Edge path in a simplicial complex, stored as its vertex sequence
 * v_0, ..., v_r (r >= 1). Edge i is (v_i, v_{i+1}); equal consecutive
 * vertices form the degenerate edge (v, v).
 */
struct EdgePath {
    std::vector<VertexId> vertices;

    std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
    VertexId start() const { return vertices.front(); }
    VertexId end() const { return vertices.back(); }
    bool closed() const { return !vertices.empty() && start() == end(); }
    bool operator==(const EdgePath&) const = default;
};

/// True when the path has at least one edge and each step is a face of K.
bool is_valid_path(const SimplicialComplex& complex, const EdgePath& path);

EdgePath concatenate(const EdgePath& first, const EdgePath& second);
EdgePath reversed(const EdgePath& path);

enum class MoveKind {
    Expand,   // (v, v'') at edge `position` -> (v, v')(v', v'')
    Contract, // (v, v')(v', v'') at edges position, position+1 -> (v, v'')
};

/// One simple equivalence. `vertex` is v' (inserted or removed) and `witness`
/// the face {v, v', v''} that licenses the move.
struct PathMove {
    MoveKind kind = MoveKind::Expand;
    std::size_t position = 0;
    VertexId vertex = 0;
    Face witness;

    bool operator==(const PathMove&) const = default;
};

struct EquivalenceCertificate {
    std::vector<PathMove> moves;
};

/// Applies one move after checking it; returns false (leaving `path`
/// untouched) if the move does not match or its witness is not a face.
bool apply_move(const SimplicialComplex& complex, EdgePath& path, const PathMove& move);

bool verify_certificate(const SimplicialComplex& complex, const EdgePath& source,
                        const EdgePath& target, const EquivalenceCertificate& certificate);

// ---------------------------------------------------------------------------
// Posets

/// Oriented rank-2 element, or the degenerate edge (v, v) when `element` is
/// empty.
struct PosetEdge {
    std::optional<ElementId> element;
    ElementId init = 0;
    ElementId term = 0;

    PosetEdge inverse() const { return {element, term, init}; }
    bool degenerate() const { return !element.has_value(); }
    bool operator==(const PosetEdge&) const = default;
};

struct PosetEdgePath {
    std::vector<PosetEdge> edges;

    ElementId start() const { return edges.front().init; }
    ElementId end() const { return edges.back().term; }
    bool closed() const { return !edges.empty() && start() == end(); }
    bool operator==(const PosetEdgePath&) const = default;
};

bool is_valid_path(const SimplicialPoset& poset, const PosetEdgePath& path);

enum class PosetMoveKind {
    Expand,           // e'' -> e e'           (witness: rank-3 element)
    Contract,         // e e' -> e''           (witness: rank-3 element)
    InsertBacktrack,  // (v, v) -> e e^-1      (witness: e)
    RemoveBacktrack,  // e e^-1 -> (v, v)      (witness: e)
    InsertDegenerate, // insert (v, v) before edge `position` (or at the end)
    RemoveDegenerate, // drop (v, v) from a path with at least two edges
};

/// `replacement` holds the edges written in place of the matched ones:
/// {e, e'} for Expand, {e''} for Contract, {e, e^-1} for InsertBacktrack,
/// {(v,v)} for RemoveBacktrack and InsertDegenerate, nothing for
/// RemoveDegenerate.
struct PosetMove {
    PosetMoveKind kind = PosetMoveKind::Expand;
    std::size_t position = 0;
    std::optional<ElementId> witness;
    std::vector<PosetEdge> replacement;

    bool operator==(const PosetMove&) const = default;
};

struct PosetCertificate {
    std::vector<PosetMove> moves;
};

bool apply_move(const SimplicialPoset& poset, PosetEdgePath& path, const PosetMove& move);

bool verify_certificate(const SimplicialPoset& poset, const PosetEdgePath& source,
                        const PosetEdgePath& target, const PosetCertificate& certificate);

std::string to_string(MoveKind kind);
std::string to_string(PosetMoveKind kind);

} // namespace topo

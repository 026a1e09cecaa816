#include "topo/edge_path.hpp"

#include <algorithm>
#include <set>

#include "topo/error.hpp"

namespace topo {

namespace {

Face vertex_set(std::initializer_list<VertexId> vs) {
    std::set<VertexId> s(vs);
    return {s.begin(), s.end()};
}

} // namespace

bool is_valid_path(const SimplicialComplex& complex, const EdgePath& path) {
    if (path.vertices.size() < 2)
        return false;
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
        if (!complex.contains(vertex_set({path.vertices[i], path.vertices[i + 1]})))
            return false;
    return true;
}

EdgePath concatenate(const EdgePath& first, const EdgePath& second) {
    if (first.end() != second.start())
        throw InvalidArgument("paths do not chain");
    EdgePath out = first;
    out.vertices.insert(out.vertices.end(), second.vertices.begin() + 1, second.vertices.end());
    return out;
}

EdgePath reversed(const EdgePath& path) {
    return {{path.vertices.rbegin(), path.vertices.rend()}};
}

bool apply_move(const SimplicialComplex& complex, EdgePath& path, const PathMove& move) {
    auto& v = path.vertices;
    const std::size_t p = move.position;
    if (move.kind == MoveKind::Expand) {
        if (p + 1 >= v.size())
            return false;
        const Face expected = vertex_set({v[p], move.vertex, v[p + 1]});
        if (move.witness != expected || !complex.contains(expected))
            return false;
        v.insert(v.begin() + static_cast<std::ptrdiff_t>(p + 1), move.vertex);
        return true;
    }
    if (p + 2 >= v.size() || v[p + 1] != move.vertex)
        return false;
    const Face expected = vertex_set({v[p], v[p + 1], v[p + 2]});
    if (move.witness != expected || !complex.contains(expected))
        return false;
    v.erase(v.begin() + static_cast<std::ptrdiff_t>(p + 1));
    return true;
}

bool verify_certificate(const SimplicialComplex& complex, const EdgePath& source,
                        const EdgePath& target, const EquivalenceCertificate& certificate) {
    if (!is_valid_path(complex, source))
        return false;
    EdgePath current = source;
    for (const PathMove& move : certificate.moves)
        if (!apply_move(complex, current, move))
            return false;
    return current == target;
}

// ---------------------------------------------------------------------------

namespace {

bool is_valid_edge(const SimplicialPoset& poset, const PosetEdge& e) {
    if (e.degenerate())
        return e.init == e.term && poset.has_element(e.init) && poset.rank(e.init) == 1;
    if (!poset.has_element(*e.element) || poset.rank(*e.element) != 2 || e.init == e.term)
        return false;
    const auto atoms = poset.atoms_below(*e.element);
    return atoms == std::vector<ElementId>{std::min(e.init, e.term), std::max(e.init, e.term)};
}

bool covered_by(const SimplicialPoset& poset, const PosetEdge& e, ElementId sigma) {
    const auto& up = poset.upper_covers(*e.element);
    return std::find(up.begin(), up.end(), sigma) != up.end();
}

// e e' ~ e'' witnessed by the rank-3 element sigma.
bool triangle_matches(const SimplicialPoset& poset, const PosetEdge& e, const PosetEdge& e1,
                      const PosetEdge& e2, std::optional<ElementId> sigma) {
    if (!sigma || !poset.has_element(*sigma) || poset.rank(*sigma) != 3)
        return false;
    for (const PosetEdge* x : {&e, &e1, &e2})
        if (x->degenerate() || !is_valid_edge(poset, *x) || !covered_by(poset, *x, *sigma))
            return false;
    if (e.term != e1.init || e.init != e2.init || e1.term != e2.term)
        return false;
    return e.init != e.term && e.term != e1.term && e.init != e1.term;
}

} // namespace

bool is_valid_path(const SimplicialPoset& poset, const PosetEdgePath& path) {
    if (path.edges.empty())
        return false;
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
        if (!is_valid_edge(poset, path.edges[i]))
            return false;
        if (i > 0 && path.edges[i - 1].term != path.edges[i].init)
            return false;
    }
    return true;
}

bool apply_move(const SimplicialPoset& poset, PosetEdgePath& path, const PosetMove& move) {
    auto& edges = path.edges;
    const std::size_t p = move.position;
    const auto& rep = move.replacement;
    auto at = [&](std::size_t i) { return edges.begin() + static_cast<std::ptrdiff_t>(i); };

    switch (move.kind) {
    case PosetMoveKind::Expand:
        if (p >= edges.size() || rep.size() != 2 ||
            !triangle_matches(poset, rep[0], rep[1], edges[p], move.witness))
            return false;
        edges[p] = rep[1];
        edges.insert(at(p), rep[0]);
        return true;
    case PosetMoveKind::Contract:
        if (p + 1 >= edges.size() || rep.size() != 1 ||
            !triangle_matches(poset, edges[p], edges[p + 1], rep[0], move.witness))
            return false;
        edges.erase(at(p + 1));
        edges[p] = rep[0];
        return true;
    case PosetMoveKind::InsertBacktrack:
        if (p >= edges.size() || rep.size() != 2 || !edges[p].degenerate() ||
            rep[0].degenerate() || rep[1] != rep[0].inverse() || rep[0].init != edges[p].init ||
            move.witness != rep[0].element || !is_valid_edge(poset, rep[0]))
            return false;
        edges[p] = rep[1];
        edges.insert(at(p), rep[0]);
        return true;
    case PosetMoveKind::RemoveBacktrack:
        if (p + 1 >= edges.size() || rep.size() != 1 || edges[p].degenerate() ||
            edges[p + 1] != edges[p].inverse() || move.witness != edges[p].element ||
            rep[0] != PosetEdge{std::nullopt, edges[p].init, edges[p].init})
            return false;
        edges.erase(at(p + 1));
        edges[p] = rep[0];
        return true;
    case PosetMoveKind::InsertDegenerate: {
        if (p > edges.size() || rep.size() != 1 || !rep[0].degenerate())
            return false;
        const ElementId v = p < edges.size() ? edges[p].init : edges.back().term;
        if (rep[0].init != v || rep[0].term != v)
            return false;
        edges.insert(at(p), rep[0]);
        return true;
    }
    case PosetMoveKind::RemoveDegenerate:
        if (p >= edges.size() || edges.size() < 2 || !edges[p].degenerate() || !rep.empty())
            return false;
        edges.erase(at(p));
        return true;
    }
    return false;
}

bool verify_certificate(const SimplicialPoset& poset, const PosetEdgePath& source,
                        const PosetEdgePath& target, const PosetCertificate& certificate) {
    if (!is_valid_path(poset, source))
        return false;
    PosetEdgePath current = source;
    for (const PosetMove& move : certificate.moves)
        if (!apply_move(poset, current, move))
            return false;
    return current == target;
}

std::string to_string(MoveKind kind) {
    return kind == MoveKind::Expand ? "expand" : "contract";
}

std::string to_string(PosetMoveKind kind) {
    switch (kind) {
    case PosetMoveKind::Expand:
        return "expand";
    case PosetMoveKind::Contract:
        return "contract";
    case PosetMoveKind::InsertBacktrack:
        return "insert_backtrack";
    case PosetMoveKind::RemoveBacktrack:
        return "remove_backtrack";
    case PosetMoveKind::InsertDegenerate:
        return "insert_degenerate";
    case PosetMoveKind::RemoveDegenerate:
        return "remove_degenerate";
    }
    return "unknown";
}

} // namespace topo

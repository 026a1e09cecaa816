#include "topo/pi1.hpp"

#include <algorithm>
#include <queue>

#include "topo/error.hpp"

namespace topo {

// ---------------------------------------------------------------------------
// Spanning trees

std::vector<VertexId> NestedSpanningTree::path_from_root(VertexId v) const {
    std::vector<VertexId> up{v};
    while (up.back() != root) {
        auto it = parent.find(up.back());
        if (it == parent.end())
            throw InvalidArgument("vertex " + std::to_string(v) + " is not spanned by the tree");
        up.push_back(it->second);
    }
    return {up.rbegin(), up.rend()};
}

namespace {

// BFS from the current frontier over vertices accepted by `allowed`.
template <typename Allowed>
void grow_tree(const SimplicialComplex& complex, NestedSpanningTree& tree,
               std::vector<VertexId>& order, Allowed&& allowed) {
    std::set<VertexId> seen(order.begin(), order.end());
    std::queue<VertexId> queue;
    for (VertexId v : order)
        queue.push(v);
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop();
        for (VertexId w : complex.neighbors(x)) {
            if (!allowed(w) || !seen.insert(w).second)
                continue;
            tree.parent[w] = x;
            tree.edges.insert(make_edge(x, w));
            order.push_back(w);
            queue.push(w);
        }
    }
}

} // namespace

NestedSpanningTree build_nested_tree(const SimplicialComplex& complex, const ColorSet& colors,
                                     VertexId root) {
    if (!complex.has_vertex(root))
        throw InvalidArgument("root " + std::to_string(root) + " is not a vertex");
    auto in_s = [&](VertexId v) { return colors.count(complex.color(v)) > 0; };
    if (!in_s(root))
        throw InvalidArgument("root " + std::to_string(root) + " is not in the rank-selected subcomplex");

    NestedSpanningTree tree;
    tree.root = root;
    std::vector<VertexId> order{root};
    grow_tree(complex, tree, order, in_s);
    const std::size_t inner_count =
        std::count_if(complex.vertices().begin(), complex.vertices().end(), in_s);
    if (order.size() != inner_count)
        throw ContractViolation("rank-selected subcomplex is disconnected");
    tree.inner_edges = tree.edges;
    tree.inner_vertices = order;

    grow_tree(complex, tree, order, [](VertexId) { return true; });
    if (order.size() != complex.vertices().size())
        throw ContractViolation("complex is disconnected");
    return tree;
}

NestedSpanningTree spanning_tree(const SimplicialComplex& complex, VertexId root) {
    if (!complex.has_vertex(root))
        throw InvalidArgument("root " + std::to_string(root) + " is not a vertex");
    NestedSpanningTree tree;
    tree.root = root;
    tree.inner_vertices = {root};
    std::vector<VertexId> order{root};
    grow_tree(complex, tree, order, [](VertexId) { return true; });
    if (order.size() != complex.vertices().size())
        throw DisconnectedError("complex is disconnected");
    return tree;
}

VertexId default_basepoint(const SimplicialComplex& complex, const ColorSet& colors) {
    for (VertexId v : complex.vertices())
        if (colors.count(complex.color(v)))
            return v;
    throw InvalidArgument("rank-selected subcomplex has no vertices");
}

// ---------------------------------------------------------------------------
// Presentations and the Φ / Φ⁻¹ maps

GroupPresentation full_presentation(const SimplicialComplex& complex, const NestedSpanningTree& tree) {
    if (connected_components(complex) != 1)
        throw DisconnectedError("edge-path presentation needs a connected complex");
    GroupPresentation p;
    std::map<Edge, std::size_t> index;
    const std::set<VertexId> inner(tree.inner_vertices.begin(), tree.inner_vertices.end());
    if (complex.dim() >= 1)
        for (const Face& e : face_enumeration(complex, 1)) {
            Generator g;
            g.u = e[0];
            g.v = e[1];
            g.tree = tree.contains(e[0], e[1]);
            g.in_subcomplex = inner.count(e[0]) && inner.count(e[1]);
            index.emplace(Edge{e[0], e[1]}, p.generators.size());
            p.generators.push_back(g);
        }
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        if (p.generators[i].tree)
            p.relators.push_back({letter(i)});
    if (complex.dim() >= 2)
        for (const Face& t : face_enumeration(complex, 2))
            p.relators.push_back({letter(index.at({t[0], t[1]})), letter(index.at({t[1], t[2]})),
                                  letter(index.at({t[0], t[2]}), true)});
    return p;
}

Word loop_to_word(const GroupPresentation& presentation, const NestedSpanningTree& tree,
                  const EdgePath& loop) {
    if (loop.vertices.size() < 2 || loop.start() != tree.root || loop.end() != tree.root)
        throw InvalidArgument("loop is not closed at the tree root");
    std::map<Edge, std::size_t> index;
    for (std::size_t i = 0; i < presentation.generators.size(); ++i) {
        const Generator& g = presentation.generators[i];
        if (!g.element)
            index.emplace(Edge{g.u, g.v}, i);
    }
    Word w;
    for (std::size_t i = 0; i + 1 < loop.vertices.size(); ++i) {
        const VertexId a = loop.vertices[i], b = loop.vertices[i + 1];
        if (a == b || tree.contains(a, b))
            continue;
        auto it = index.find(make_edge(a, b));
        if (it == index.end())
            throw InvalidArgument("edge " + face_to_string({std::min(a, b), std::max(a, b)}) +
                                  " has no generator");
        w.push_back(letter(it->second, a > b));
    }
    return w;
}

EdgePath word_to_loop(const GroupPresentation& presentation, const NestedSpanningTree& tree,
                      const Word& word) {
    std::vector<VertexId> vertices{tree.root};
    for (int l : word) {
        if (l == 0 || letter_generator(l) >= presentation.generators.size())
            throw InvalidArgument("unknown generator in word");
        const Generator& g = presentation.generators[letter_generator(l)];
        const VertexId a = l > 0 ? g.u : g.v;
        const VertexId b = l > 0 ? g.v : g.u;
        const auto to_a = tree.path_from_root(a);
        vertices.insert(vertices.end(), to_a.begin() + 1, to_a.end());
        const auto to_b = tree.path_from_root(b);
        vertices.insert(vertices.end(), to_b.rbegin(), to_b.rend());
    }
    if (vertices.size() == 1)
        vertices.push_back(tree.root);
    return {vertices};
}

// ---------------------------------------------------------------------------
// Rewriting into Δ_S

PathRewriter::PathRewriter(SimplicialComplex complex, ColorSet colors)
    : complex_(std::move(complex)), colors_(std::move(colors)) {
    if (!complex_.has_coloring())
        throw MissingColoringError("rewriting into a rank-selected subcomplex needs a coloring");
    if (colors_.size() != 2)
        throw InvalidArgument("rewriting needs exactly two colors");
    const ColorSet used = color_set(complex_);
    for (int c : colors_)
        if (!used.count(c))
            throw InvalidArgument("color " + std::to_string(c) + " is not used by the coloring");
    const PropertyReport report = check_properties(complex_);
    if (!report.pure || !coloring_is_balanced(complex_) || !report.links_connected)
        throw PropertyViolation("complex is not pure, balanced, and link-connected");
}

VertexId PathRewriter::witness_vertex(VertexId v1, VertexId v2) const {
    const int avoid = complex_.color(v2);
    const Face base = v1 == v2 ? Face{v1} : Face{std::min(v1, v2), std::max(v1, v2)};
    std::optional<VertexId> best;
    for (std::size_t idx : complex_.facets_containing(base))
        for (VertexId w : complex_.facets()[idx]) {
            const int c = complex_.color(w);
            if (colors_.count(c) && c != avoid && (!best || w < *best))
                best = w;
        }
    if (!best)
        throw ContractViolation("no facet through " + face_to_string(base) +
                                " has a vertex with the required color");
    return *best;
}

std::vector<VertexId> PathRewriter::link_path(VertexId center, VertexId from, VertexId to) const {
    if (from == to)
        return {from};
    std::map<VertexId, VertexId> previous{{from, from}};
    std::queue<VertexId> queue;
    queue.push(from);
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop();
        for (VertexId w : complex_.neighbors(x)) {
            if (w == center || previous.count(w) || !colors_.count(complex_.color(w)))
                continue;
            Face tri{center, x, w};
            std::sort(tri.begin(), tri.end());
            if (!complex_.contains(tri))
                continue;
            previous[w] = x;
            if (w == to) {
                std::vector<VertexId> path{to};
                while (path.back() != from)
                    path.push_back(previous.at(path.back()));
                return {path.rbegin(), path.rend()};
            }
            queue.push(w);
        }
    }
    throw ContractViolation("vertices " + std::to_string(from) + " and " + std::to_string(to) +
                            " are not connected in the rank-selected link of " +
                            std::to_string(center));
}

RewriteResult PathRewriter::rewrite(const EdgePath& path) const {
    if (!is_valid_path(complex_, path))
        throw InvalidArgument("not an edge path of the complex");
    if (!in_subcomplex(path.start()) || !in_subcomplex(path.end()))
        throw InvalidArgument("path endpoints must lie in the rank-selected subcomplex");

    RewriteResult result;
    auto& v = result.path.vertices;
    v = path.vertices;
    auto emit = [&](MoveKind kind, std::size_t position, VertexId vertex,
                    std::initializer_list<VertexId> witness) {
        std::set<VertexId> w(witness);
        PathMove move{kind, position, vertex, Face(w.begin(), w.end())};
        if (!apply_move(complex_, result.path, move))
            throw ContractViolation("generated move does not apply");
        result.certificate.moves.push_back(std::move(move));
    };

    std::size_t i = 0;
    while (i + 1 < v.size()) {
        if (in_subcomplex(v[i + 1])) {
            ++i;
            continue;
        }
        // v[i] is in Δ_S, v[i+1] is not, so v[i+2] exists.
        const VertexId v0 = v[i], v1 = v[i + 1], v2 = v[i + 2];
        const VertexId tilde = witness_vertex(v1, v2);
        const std::vector<VertexId> u = link_path(v1, v0, tilde);
        const std::size_t k = u.size() - 1;

        // (v1, v2) ~ (v1, ṽ)(ṽ, v2)
        emit(MoveKind::Expand, i + 1, tilde, {v1, tilde, v2});
        if (k == 0) {
            // v0 v1 v0 v2 -> v0 v0 v2 -> v0 v2
            emit(MoveKind::Contract, i, v1, {v0, v1});
            emit(MoveKind::Contract, i, v0, {v0, v2});
            continue;
        }
        // (u_j, v1) ~ (u_j, u_{j+1})(u_{j+1}, v1)
        for (std::size_t j = 0; j + 1 < k; ++j)
            emit(MoveKind::Expand, i + j, u[j + 1], {u[j], u[j + 1], v1});
        // (u_{k-1}, v1)(v1, ṽ) ~ (u_{k-1}, ṽ)
        emit(MoveKind::Contract, i + k - 1, v1, {u[k - 1], v1, tilde});
        i += k;
    }
    return result;
}

RewriteResult rewrite_path_to_S(const SimplicialComplex& complex, const ColorSet& colors,
                                const EdgePath& path) {
    return PathRewriter(complex, colors).rewrite(path);
}

GroupPresentation restrict_generators_to_S(const GroupPresentation& presentation,
                                           const PathRewriter& rewriter,
                                           const NestedSpanningTree& tree) {
    presentation.validate();
    const auto& gens = presentation.generators;
    GroupPresentation out;
    std::map<std::size_t, std::size_t> kept; // old index -> new index
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].element)
            throw InvalidArgument("restriction expects an edge presentation of a complex");
        const bool in_s = rewriter.in_subcomplex(gens[i].u) && rewriter.in_subcomplex(gens[i].v);
        if (in_s && !tree.inner_contains(gens[i].u, gens[i].v)) {
            kept.emplace(i, out.generators.size());
            Generator g = gens[i];
            g.in_subcomplex = true;
            g.tree = false;
            out.generators.push_back(g);
        }
    }

    std::vector<Word> image(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (tree.contains(gens[i].u, gens[i].v))
            continue;
        if (auto it = kept.find(i); it != kept.end()) {
            image[i] = {letter(it->second)};
            continue;
        }
        const EdgePath loop = word_to_loop(presentation, tree, {letter(i)});
        const EdgePath moved = rewriter.rewrite(loop).path;
        for (int l : loop_to_word(presentation, tree, moved)) {
            auto it = kept.find(letter_generator(l));
            if (it == kept.end())
                throw ContractViolation("rewritten loop leaves the rank-selected subcomplex");
            image[i].push_back(letter(it->second, l < 0));
        }
        image[i] = free_reduce(image[i]);
    }

    for (const Word& r : presentation.relators) {
        Word w;
        for (int l : r) {
            const Word& part = image[letter_generator(l)];
            if (l > 0)
                w.insert(w.end(), part.begin(), part.end());
            else {
                const Word inv = inverse_word(part);
                w.insert(w.end(), inv.begin(), inv.end());
            }
        }
        w = free_reduce(w);
        if (!w.empty())
            out.relators.push_back(std::move(w));
    }
    return out;
}

GroupPresentation restrict_generators_to_S(const GroupPresentation& presentation,
                                           const SimplicialComplex& complex,
                                           const ColorSet& colors, const NestedSpanningTree& tree) {
    return restrict_generators_to_S(presentation, PathRewriter(complex, colors), tree);
}

UpperBound m_upper_bound(const SimplicialComplex& complex, int tietze_rounds) {
    if (!complex.has_coloring())
        throw MissingColoringError("upper bound needs a balanced coloring");
    const PropertyReport report = check_properties(complex);
    if (!report.pure || !coloring_is_balanced(complex) || !report.links_connected)
        throw PropertyViolation("complex is not pure, balanced, and link-connected");

    UpperBound bound;
    const ColorSet used = color_set(complex);
    const std::vector<int> colors(used.begin(), used.end());
    for (std::size_t a = 0; a < colors.size(); ++a)
        for (std::size_t b = a + 1; b < colors.size(); ++b) {
            const ColorSet pair{colors[a], colors[b]};
            PairBound entry;
            entry.colors = pair;
            entry.h2_subcomplex = h_vector(rank_select(complex, pair)).h(2);
            const PathRewriter rewriter(complex, pair);
            const auto tree = build_nested_tree(complex, pair, default_basepoint(complex, pair));
            const auto restricted =
                restrict_generators_to_S(full_presentation(complex, tree), rewriter, tree);
            entry.restricted_generators = restricted.generators.size();
            entry.simplified = tietze_simplify(restricted, tietze_rounds);
            entry.simplified_generators = entry.simplified.generators.size();
            bound.per_pair.push_back(std::move(entry));
        }
    if (!bound.per_pair.empty())
        bound.best = std::min_element(bound.per_pair.begin(), bound.per_pair.end(),
                                      [](const PairBound& x, const PairBound& y) {
                                          return x.simplified_generators < y.simplified_generators;
                                      })
                         ->simplified_generators;
    return bound;
}

// ---------------------------------------------------------------------------
// Posets

PosetEdgePath parse_sd_path(const SimplicialPoset& poset, const EdgePath& path) {
    std::vector<ElementId> steps;
    for (ElementId x : path.vertices)
        if (steps.empty() || steps.back() != x)
            steps.push_back(x);
    auto fail = [](const std::string& why) {
        throw ContractViolation("cannot read subdivided path as a poset path: " + why);
    };
    if (steps.empty() || steps.size() % 2 == 0)
        fail("path must run from an atom to an atom");
    PosetEdgePath out;
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (poset.rank(steps[i]) != (i % 2 == 0 ? 1 : 2))
            fail("ranks do not alternate between 1 and 2");
    std::vector<ElementId> reduced{steps.front()};
    for (std::size_t i = 1; i < steps.size(); i += 2) {
        if (steps[i + 1] == reduced.back())
            continue;
        reduced.push_back(steps[i]);
        reduced.push_back(steps[i + 1]);
    }
    for (std::size_t i = 1; i < reduced.size(); i += 2) {
        const ElementId a = reduced[i - 1], e = reduced[i], b = reduced[i + 1];
        const auto atoms = poset.atoms_below(e);
        if (atoms != std::vector<ElementId>{std::min(a, b), std::max(a, b)})
            fail("consecutive atoms are not the ends of the traversed edge");
        out.edges.push_back({e, a, b});
    }
    if (out.edges.empty())
        out.edges.push_back({std::nullopt, reduced.front(), reduced.front()});
    return out;
}

EdgePath subdivide_path(const PosetEdgePath& path) {
    EdgePath out{{path.start()}};
    for (const PosetEdge& e : path.edges) {
        if (e.degenerate()) {
            out.vertices.push_back(e.init);
            continue;
        }
        out.vertices.push_back(*e.element);
        out.vertices.push_back(e.term);
    }
    return out;
}

namespace {

struct PosetGroupData {
    GroupPresentation presentation;
    std::vector<PosetEdgePath> loops;
};

PosetGroupData build_poset_group(const SimplicialPoset& poset, ElementId basepoint) {
    const PropertyReport report = check_poset_properties(poset);
    if (!report.pure || !report.links_connected)
        throw PropertyViolation("poset is not pure with connected links");
    if (!poset.has_element(basepoint) || poset.rank(basepoint) != 1)
        throw InvalidArgument("basepoint must be an atom");
    if (!poset_is_connected(poset))
        throw PropertyViolation("poset is disconnected");

    PosetGroupData data;
    if (poset.rank_of_poset() < 2)
        return data; // a single point

    const SimplicialComplex sd = order_complex(poset);
    const ColorSet ranks{1, 2};
    const PathRewriter rewriter(sd, ranks);
    const auto tree = build_nested_tree(sd, ranks, basepoint);
    const auto restricted = restrict_generators_to_S(full_presentation(sd, tree), rewriter, tree);

    data.presentation.relators = restricted.relators;
    for (std::size_t i = 0; i < restricted.generators.size(); ++i) {
        const EdgePath loop = word_to_loop(restricted, tree, {letter(i)});
        PosetEdgePath lifted = parse_sd_path(poset, loop);
        const Generator& half = restricted.generators[i];
        const ElementId element = poset.rank(half.u) == 2 ? half.u : half.v;
        auto it = std::find_if(lifted.edges.begin(), lifted.edges.end(),
                               [&](const PosetEdge& e) { return e.element == element; });
        if (it == lifted.edges.end())
            throw ContractViolation("generator loop misses its own edge");
        Generator g;
        g.u = it->init;
        g.v = it->term;
        g.element = element;
        g.in_subcomplex = true;
        data.presentation.generators.push_back(g);
        data.loops.push_back(std::move(lifted));
    }
    return data;
}

} // namespace

GroupPresentation poset_edge_path_group(const SimplicialPoset& poset, ElementId basepoint) {
    return build_poset_group(poset, basepoint).presentation;
}

std::vector<PosetEdgePath> poset_generator_loops(const SimplicialPoset& poset, ElementId basepoint) {
    return build_poset_group(poset, basepoint).loops;
}

} // namespace topo

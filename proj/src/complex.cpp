#include "topo/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "topo/coloring.hpp"
#include "topo/error.hpp"

namespace topo {

namespace {

bool is_subset(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void validate_face(const Face& face) {
    for (std::size_t i = 1; i < face.size(); ++i)
        if (face[i - 1] >= face[i])
            throw InvalidComplexError("face " + face_to_string(face) +
                                      " is not a strictly ascending vertex list");
}

// Calls visit(subset) for every subset of `face` of the given size, in
// lexicographic order.
template <typename Visit>
void for_each_subset(const Face& face, std::size_t size, Visit&& visit) {
    if (size > face.size())
        return;
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    Face subset(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i)
            subset[i] = face[idx[i]];
        visit(subset);
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == face.size() - size + i - 1)
            --i;
        if (i == 0)
            return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

Graph one_skeleton(const SimplicialComplex& complex) {
    Graph graph;
    for (VertexId v : complex.vertices())
        graph[v];
    for (const Face& facet : complex.facets())
        for (std::size_t i = 0; i < facet.size(); ++i)
            for (std::size_t j = i + 1; j < facet.size(); ++j) {
                graph[facet[i]].insert(facet[j]);
                graph[facet[j]].insert(facet[i]);
            }
    return graph;
}

} // namespace

std::string face_to_string(const Face& face) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < face.size(); ++i)
        out << (i ? "," : "") << face[i];
    out << '}';
    return out.str();
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

// ---------------------------------------------------------------------------
// SimplicialComplex

SimplicialComplex::SimplicialComplex() : SimplicialComplex(std::vector<Face>{}) {}

SimplicialComplex::SimplicialComplex(std::vector<Face> facets, std::optional<Coloring> coloring,
                                     LabelTable labels)
    : coloring_(std::move(coloring)), labels_(std::move(labels)) {
    // The void complex may be given either as [] or as [[]].
    facets.erase(std::remove_if(facets.begin(), facets.end(),
                                [](const Face& f) { return f.empty(); }),
                 facets.end());
    for (const Face& f : facets)
        validate_face(f);
    std::sort(facets.begin(), facets.end());
    for (std::size_t i = 1; i < facets.size(); ++i)
        if (facets[i] == facets[i - 1])
            throw InvalidComplexError("duplicate facet " + face_to_string(facets[i]));
    for (std::size_t i = 0; i < facets.size(); ++i)
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (i != j && facets[i].size() < facets[j].size() && is_subset(facets[i], facets[j]))
                throw InvalidComplexError("facet " + face_to_string(facets[i]) +
                                          " is contained in " + face_to_string(facets[j]));
    facets_ = std::move(facets);

    std::set<VertexId> verts;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        dim_ = std::max(dim_, static_cast<int>(facets_[i].size()) - 1);
        for (VertexId v : facets_[i]) {
            verts.insert(v);
            incidence_[v].push_back(i);
        }
    }
    vertices_.assign(verts.begin(), verts.end());

    if (coloring_) {
        Coloring restricted;
        for (VertexId v : vertices_) {
            auto it = coloring_->find(v);
            if (it == coloring_->end())
                throw InvalidComplexError("coloring misses vertex " + std::to_string(v));
            if (it->second < 1)
                throw InvalidComplexError("color of vertex " + std::to_string(v) +
                                          " is not positive");
            restricted.emplace(v, it->second);
        }
        for (const Face& f : facets_) {
            std::set<int> seen;
            for (VertexId v : f)
                if (!seen.insert(restricted.at(v)).second)
                    throw InvalidComplexError("facet " + face_to_string(f) +
                                              " repeats a color");
        }
        coloring_ = std::move(restricted);
    }
    for (auto it = labels_.begin(); it != labels_.end();)
        it = verts.count(it->first) ? std::next(it) : labels_.erase(it);
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> generators,
                                                const std::optional<Coloring>& coloring,
                                                const LabelTable& labels) {
    for (Face& f : generators) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::sort(generators.begin(), generators.end(),
              [](const Face& a, const Face& b) {
                  return a.size() != b.size() ? a.size() > b.size() : a < b;
              });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Face> maximal;
    for (const Face& f : generators) {
        bool covered = std::any_of(maximal.begin(), maximal.end(),
                                   [&](const Face& m) { return is_subset(f, m); });
        if (!covered && !f.empty())
            maximal.push_back(f);
    }
    std::set<VertexId> verts;
    for (const Face& f : maximal)
        verts.insert(f.begin(), f.end());
    std::optional<Coloring> restricted;
    if (coloring) {
        restricted.emplace();
        for (VertexId v : verts)
            if (auto it = coloring->find(v); it != coloring->end())
                restricted->emplace(v, it->second);
    }
    LabelTable kept;
    for (const auto& [v, l] : labels)
        if (verts.count(v))
            kept.emplace(v, l);
    return SimplicialComplex(std::move(maximal), std::move(restricted), std::move(kept));
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Face& f) {
        return static_cast<int>(f.size()) == dim_ + 1;
    });
}

int SimplicialComplex::color(VertexId v) const {
    if (!coloring_)
        throw MissingColoringError("complex has no coloring");
    auto it = coloring_->find(v);
    if (it == coloring_->end())
        throw FaceNotFoundError("vertex " + std::to_string(v) + " is not in the complex");
    return it->second;
}

std::string SimplicialComplex::label(VertexId v) const {
    auto it = labels_.find(v);
    return it != labels_.end() ? it->second : std::to_string(v);
}

bool SimplicialComplex::has_vertex(VertexId v) const {
    return incidence_.count(v) > 0;
}

std::vector<std::size_t> SimplicialComplex::facets_containing(const Face& face) const {
    std::vector<std::size_t> result;
    if (face.empty()) {
        result.resize(facets_.size());
        std::iota(result.begin(), result.end(), 0);
        return result;
    }
    auto it = incidence_.find(face.front());
    if (it == incidence_.end())
        return result;
    for (std::size_t idx : it->second)
        if (is_subset(face, facets_[idx]))
            result.push_back(idx);
    return result;
}

bool SimplicialComplex::contains(const Face& face) const {
    if (face.empty())
        return true;
    auto it = incidence_.find(face.front());
    if (it == incidence_.end())
        return false;
    return std::any_of(it->second.begin(), it->second.end(),
                       [&](std::size_t idx) { return is_subset(face, facets_[idx]); });
}

std::vector<VertexId> SimplicialComplex::neighbors(VertexId v) const {
    std::set<VertexId> result;
    auto it = incidence_.find(v);
    if (it == incidence_.end())
        return {};
    for (std::size_t idx : it->second)
        for (VertexId w : facets_[idx])
            if (w != v)
                result.insert(w);
    return {result.begin(), result.end()};
}

SimplicialComplex SimplicialComplex::with_coloring(std::optional<Coloring> coloring) const {
    return SimplicialComplex(facets_, std::move(coloring), labels_);
}

// ---------------------------------------------------------------------------
// Faces and counting

std::vector<Face> face_enumeration(const SimplicialComplex& complex, int k) {
    if (k < -1 || k > complex.dim())
        throw RangeError("face dimension " + std::to_string(k) + " outside [-1, " +
                         std::to_string(complex.dim()) + "]");
    std::set<Face> faces;
    for (const Face& facet : complex.facets())
        for_each_subset(facet, static_cast<std::size_t>(k + 1),
                        [&](const Face& s) { faces.insert(s); });
    if (k == -1)
        faces.insert(Face{});
    return {faces.begin(), faces.end()};
}

std::vector<Face> all_faces(const SimplicialComplex& complex) {
    std::vector<Face> result;
    for (int k = -1; k <= complex.dim(); ++k) {
        auto layer = face_enumeration(complex, k);
        result.insert(result.end(), layer.begin(), layer.end());
    }
    return result;
}

FVector f_vector(const SimplicialComplex& complex) {
    FVector f;
    for (int k = -1; k <= complex.dim(); ++k)
        f.entries.push_back(static_cast<std::int64_t>(face_enumeration(complex, k).size()));
    return f;
}

HVector h_from_f(const FVector& f) {
    using boost::multiprecision::cpp_int;
    const int d = f.d();
    auto exact_binomial = [](int n, int k) {
        if (k < 0 || n < 0 || k > n)
            return cpp_int(0);
        cpp_int r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    };
    HVector h;
    for (int i = 0; i <= d; ++i) {
        cpp_int sum = 0;
        for (int j = 0; j <= i; ++j) {
            cpp_int term = exact_binomial(d - j, d - i) * f.f(j - 1);
            sum += ((i - j) % 2 == 0) ? term : cpp_int(-term);
        }
        if (sum > std::numeric_limits<std::int64_t>::max() ||
            sum < std::numeric_limits<std::int64_t>::min())
            throw RangeError("h-number overflows 64 bits");
        h.entries.push_back(sum.convert_to<std::int64_t>());
    }
    return h;
}

HVector h_vector(const SimplicialComplex& complex) {
    if (!complex.is_pure())
        throw PurityError("h-vector requires a pure complex");
    return h_from_f(f_vector(complex));
}

// ---------------------------------------------------------------------------
// Subcomplexes

namespace {

Face normalized(Face face) {
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
        throw InvalidArgument("face " + face_to_string(face) + " repeats a vertex");
    return face;
}

} // namespace

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
    Face f = normalized(face);
    if (!complex.contains(f))
        throw FaceNotFoundError("face " + face_to_string(f) + " is not in the complex");
    std::vector<Face> facets;
    for (std::size_t idx : complex.facets_containing(f)) {
        Face rest;
        const Face& g = complex.facets()[idx];
        std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
        facets.push_back(std::move(rest));
    }
    return SimplicialComplex::from_faces(std::move(facets), complex.coloring(), complex.labels());
}

SimplicialComplex closed_star(const SimplicialComplex& complex, const Face& face) {
    Face f = normalized(face);
    if (!complex.contains(f))
        throw FaceNotFoundError("face " + face_to_string(f) + " is not in the complex");
    std::vector<Face> facets;
    for (std::size_t idx : complex.facets_containing(f))
        facets.push_back(complex.facets()[idx]);
    return SimplicialComplex::from_faces(std::move(facets), complex.coloring(), complex.labels());
}

SimplicialComplex rank_select(const SimplicialComplex& complex, const ColorSet& colors) {
    if (!complex.has_coloring())
        throw MissingColoringError("rank selection requires a coloring");
    std::vector<Face> generators;
    for (const Face& facet : complex.facets()) {
        Face kept;
        for (VertexId v : facet)
            if (colors.count(complex.color(v)))
                kept.push_back(v);
        generators.push_back(std::move(kept));
    }
    return SimplicialComplex::from_faces(std::move(generators), complex.coloring(),
                                         complex.labels());
}

ColorSet color_set(const SimplicialComplex& complex) {
    if (!complex.has_coloring())
        throw MissingColoringError("complex has no coloring");
    ColorSet colors;
    for (const auto& entry : *complex.coloring())
        colors.insert(entry.second);
    return colors;
}

// ---------------------------------------------------------------------------
// Colorings and properties

std::optional<Coloring> find_balanced_coloring(const SimplicialComplex& complex) {
    if (!complex.is_pure())
        throw PurityError("balanced coloring search requires a pure complex");
    return color_graph(one_skeleton(complex), complex.dim() + 1);
}

bool coloring_is_balanced(const SimplicialComplex& complex) {
    // Injectivity on facets is a construction invariant.
    return complex.has_coloring() &&
           static_cast<int>(color_set(complex).size()) <= complex.dim() + 1;
}

std::size_t connected_components(const SimplicialComplex& complex) {
    return graph_components(one_skeleton(complex)).size();
}

bool is_connected(const SimplicialComplex& complex) {
    return connected_components(complex) <= 1;
}

PropertyReport check_properties(const SimplicialComplex& complex) {
    PropertyReport report;
    report.pure = complex.is_pure();
    report.balanced = coloring_is_balanced(complex) ||
                      color_graph(one_skeleton(complex), complex.dim() + 1).has_value();
    const int d = complex.dim() + 1;
    report.links_connected = true;
    for (int size = 0; size < d - 1 && report.links_connected; ++size)
        for (const Face& f : face_enumeration(complex, size - 1))
            if (!is_connected(link(complex, f))) {
                report.links_connected = false;
                break;
            }
    return report;
}

bool is_strongly_connected(const SimplicialComplex& complex) {
    if (!complex.is_pure())
        throw PurityError("strong connectivity requires a pure complex");
    const auto& facets = complex.facets();
    if (facets.size() <= 1)
        return true;
    std::map<Face, std::vector<std::size_t>> ridges;
    for (std::size_t i = 0; i < facets.size(); ++i)
        for_each_subset(facets[i], facets[i].size() - 1,
                        [&](const Face& r) { ridges[r].push_back(i); });
    std::vector<std::vector<std::size_t>> adjacency(facets.size());
    for (const auto& entry : ridges)
        for (std::size_t a : entry.second)
            for (std::size_t b : entry.second)
                if (a != b)
                    adjacency[a].push_back(b);
    std::vector<bool> seen(facets.size(), false);
    std::queue<std::size_t> queue;
    queue.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!queue.empty()) {
        std::size_t a = queue.front();
        queue.pop();
        for (std::size_t b : adjacency[a])
            if (!seen[b]) {
                seen[b] = true;
                ++reached;
                queue.push(b);
            }
    }
    return reached == facets.size();
}

// ---------------------------------------------------------------------------
// Constructions

SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex) {
    std::vector<Face> faces = all_faces(complex);
    faces.erase(faces.begin()); // ∅
    std::map<Face, VertexId> index;
    Coloring coloring;
    LabelTable labels;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const VertexId id = static_cast<VertexId>(i);
        index.emplace(faces[i], id);
        coloring.emplace(id, static_cast<int>(faces[i].size()));
        std::string label = "{";
        for (std::size_t j = 0; j < faces[i].size(); ++j)
            label += (j ? "," : "") + complex.label(faces[i][j]);
        labels.emplace(id, label + "}");
    }
    std::vector<Face> chains;
    for (const Face& facet : complex.facets()) {
        Face order = facet;
        do {
            Face chain;
            Face prefix;
            for (VertexId v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                chain.push_back(index.at(prefix));
            }
            std::sort(chain.begin(), chain.end());
            chains.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex(std::move(chains), std::move(coloring), std::move(labels));
}

SimplicialComplex connected_sum(const SimplicialComplex& first, const SimplicialComplex& second,
                                const Face& first_facet, const Face& second_facet,
                                std::optional<std::map<VertexId, VertexId>> matching) {
    if (!first.is_pure() || !second.is_pure())
        throw PurityError("connected sum requires pure complexes");
    if (first.dim() != second.dim())
        throw InvalidArgument("connected sum of complexes of different dimensions");
    const Face f1 = normalized(first_facet);
    const Face f2 = normalized(second_facet);
    auto is_facet = [](const SimplicialComplex& k, const Face& f) {
        return std::binary_search(k.facets().begin(), k.facets().end(), f);
    };
    if (!is_facet(first, f1) || !is_facet(second, f2))
        throw InvalidArgument("connected sum arguments must be facets");
    if (first.has_coloring() != second.has_coloring())
        throw InvalidArgument("color-incompatible connected sum: only one input is colored");

    if (!matching) {
        matching.emplace();
        for (std::size_t i = 0; i < f1.size(); ++i)
            (*matching)[f1[i]] = f2[i];
        if (first.has_coloring()) {
            std::map<int, VertexId> by_color;
            for (VertexId w : f2)
                by_color[second.color(w)] = w;
            bool aligned = true;
            std::map<VertexId, VertexId> colored;
            for (VertexId v : f1) {
                auto it = by_color.find(first.color(v));
                if (it == by_color.end()) {
                    aligned = false;
                    break;
                }
                colored[v] = it->second;
            }
            if (aligned)
                matching = std::move(colored);
        }
    }
    {
        std::set<VertexId> keys, values;
        for (const auto& [a, b] : *matching) {
            keys.insert(a);
            values.insert(b);
        }
        if (matching->size() != f1.size() || keys != std::set<VertexId>(f1.begin(), f1.end()) ||
            values != std::set<VertexId>(f2.begin(), f2.end()))
            throw InvalidArgument("matching is not a bijection between the two facets");
    }

    std::map<int, int> permutation; // color of K2 -> color of K1
    if (first.has_coloring()) {
        for (const auto& [a, b] : *matching)
            permutation[second.color(b)] = first.color(a);
        for (const auto& entry : *second.coloring())
            if (!permutation.count(entry.second))
                throw InvalidArgument("color-incompatible connected sum: color " +
                                      std::to_string(entry.second) +
                                      " of the second complex is not on its glued facet");
    }

    std::map<VertexId, VertexId> relabel;
    for (const auto& [a, b] : *matching)
        relabel[b] = a;
    VertexId next = first.vertices().empty() ? 0 : first.vertices().back() + 1;
    for (VertexId w : second.vertices())
        if (!relabel.count(w))
            relabel[w] = next++;

    std::vector<Face> facets;
    for (const Face& f : first.facets())
        if (f != f1)
            facets.push_back(f);
    for (const Face& f : second.facets()) {
        if (f == f2)
            continue;
        Face mapped;
        for (VertexId w : f)
            mapped.push_back(relabel.at(w));
        std::sort(mapped.begin(), mapped.end());
        facets.push_back(std::move(mapped));
    }

    std::optional<Coloring> coloring;
    if (first.has_coloring()) {
        coloring = *first.coloring();
        for (const auto& [w, c] : *second.coloring())
            (*coloring)[relabel.at(w)] = permutation.at(c);
    }
    LabelTable labels = first.labels();
    for (const auto& [w, l] : second.labels())
        labels.emplace(relabel.at(w), l);
    return SimplicialComplex::from_faces(std::move(facets), coloring, labels);
}

} // namespace topo

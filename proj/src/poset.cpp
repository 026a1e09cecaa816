#include "topo/poset.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "topo/coloring.hpp"
#include "topo/error.hpp"

namespace topo {

namespace {

const std::vector<ElementId> kNoElements;

} // namespace

SimplicialPoset::SimplicialPoset(std::vector<PosetElement> elements,
                                 std::vector<std::pair<ElementId, ElementId>> covers,
                                 std::optional<Coloring> coloring)
    : elements_(std::move(elements)), covers_(std::move(covers)), coloring_(std::move(coloring)) {
    std::sort(elements_.begin(), elements_.end(),
              [](const PosetElement& a, const PosetElement& b) { return a.id < b.id; });
    std::sort(covers_.begin(), covers_.end());
    for (std::size_t i = 0; i < elements_.size(); ++i)
        index_.emplace(elements_[i].id, i);
    for (const auto& [lo, hi] : covers_) {
        if (!index_.count(lo) || !index_.count(hi))
            continue;
        lower_[hi].push_back(lo);
        upper_[lo].push_back(hi);
    }
    for (const PosetElement& e : elements_)
        if (!lower_.count(e.id))
            atoms_.push_back(e.id);
}

const PosetElement& SimplicialPoset::element(ElementId id) const {
    auto it = index_.find(id);
    if (it == index_.end())
        throw FaceNotFoundError("poset element " + std::to_string(id) + " not found");
    return elements_[it->second];
}

int SimplicialPoset::rank_of_poset() const {
    int r = 0;
    for (const PosetElement& e : elements_)
        r = std::max(r, e.rank);
    return r;
}

int SimplicialPoset::color(ElementId atom) const {
    if (!coloring_)
        throw MissingColoringError("poset has no coloring");
    auto it = coloring_->find(atom);
    if (it == coloring_->end())
        throw FaceNotFoundError("atom " + std::to_string(atom) + " has no color");
    return it->second;
}

const std::vector<ElementId>& SimplicialPoset::lower_covers(ElementId id) const {
    auto it = lower_.find(id);
    return it == lower_.end() ? kNoElements : it->second;
}

const std::vector<ElementId>& SimplicialPoset::upper_covers(ElementId id) const {
    if (id == kBottom)
        return atoms_;
    auto it = upper_.find(id);
    return it == upper_.end() ? kNoElements : it->second;
}

std::vector<ElementId> SimplicialPoset::atoms_below(ElementId id) const {
    if (id == kBottom)
        return {};
    std::set<ElementId> seen{id};
    std::vector<ElementId> stack{id};
    std::vector<ElementId> atoms;
    while (!stack.empty()) {
        ElementId x = stack.back();
        stack.pop_back();
        const auto& below = lower_covers(x);
        if (below.empty())
            atoms.push_back(x);
        for (ElementId y : below)
            if (seen.insert(y).second)
                stack.push_back(y);
    }
    std::sort(atoms.begin(), atoms.end());
    return atoms;
}

std::vector<ElementId> SimplicialPoset::atoms() const {
    return atoms_;
}

std::vector<ElementId> SimplicialPoset::facets() const {
    std::vector<ElementId> result;
    for (const PosetElement& e : elements_)
        if (upper_covers(e.id).empty())
            result.push_back(e.id);
    return result;
}

std::vector<ElementId> SimplicialPoset::elements_of_rank(int rank) const {
    std::vector<ElementId> result;
    for (const PosetElement& e : elements_)
        if (e.rank == rank)
            result.push_back(e.id);
    return result;
}

bool SimplicialPoset::less_equal(ElementId a, ElementId b) const {
    if (a == kBottom || a == b)
        return true;
    if (b == kBottom)
        return false;
    std::set<ElementId> seen{b};
    std::vector<ElementId> stack{b};
    while (!stack.empty()) {
        ElementId x = stack.back();
        stack.pop_back();
        for (ElementId y : lower_covers(x)) {
            if (y == a)
                return true;
            if (seen.insert(y).second)
                stack.push_back(y);
        }
    }
    return false;
}

PosetValidation SimplicialPoset::validate() const {
    auto fail = [](std::optional<ElementId> id, std::string message) {
        return PosetValidation{false, id, std::move(message)};
    };

    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const PosetElement& e = elements_[i];
        if (i > 0 && elements_[i - 1].id == e.id)
            return fail(e.id, "duplicate element id");
        if (e.id < 0)
            return fail(e.id, "element ids must be non-negative");
        if (e.rank < 1)
            return fail(e.id, "rank must be at least 1");
    }
    for (std::size_t i = 0; i < covers_.size(); ++i) {
        const auto& [lo, hi] = covers_[i];
        if (!index_.count(lo))
            return fail(lo, "cover references unknown element");
        if (!index_.count(hi))
            return fail(hi, "cover references unknown element");
        if (i > 0 && covers_[i - 1] == covers_[i])
            return fail(hi, "cover pair listed twice");
        if (element(hi).rank != element(lo).rank + 1)
            return fail(hi, "rank does not increase by exactly one along a cover");
    }
    // With ranks increasing by one along covers, declared rank equals chain
    // length from 0̂ as soon as every minimal element has rank 1.
    for (const PosetElement& e : elements_)
        if (lower_covers(e.id).empty() && e.rank != 1)
            return fail(e.id, "declared rank disagrees with chain length from the bottom");

    for (const PosetElement& x : elements_) {
        std::set<ElementId> interval{x.id};
        std::vector<ElementId> stack{x.id};
        while (!stack.empty()) {
            ElementId y = stack.back();
            stack.pop_back();
            for (ElementId z : lower_covers(y))
                if (interval.insert(z).second)
                    stack.push_back(z);
        }
        std::map<int, std::int64_t> per_rank;
        std::set<std::vector<ElementId>> atom_sets;
        for (ElementId y : interval) {
            const int r = element(y).rank;
            ++per_rank[r];
            auto atoms = atoms_below(y);
            if (static_cast<int>(atoms.size()) != r)
                return fail(y, "atom set size differs from rank");
            if (static_cast<int>(lower_covers(y).size()) != (r == 1 ? 0 : r))
                return fail(y, "number of lower covers differs from rank");
            if (!atom_sets.insert(std::move(atoms)).second)
                return fail(x.id, "interval below element has two elements with equal atom sets");
        }
        for (int k = 1; k <= x.rank; ++k)
            if (per_rank[k] != binomial(x.rank, k))
                return fail(x.id, "interval below element is not a Boolean algebra");
    }

    if (coloring_) {
        for (ElementId a : atoms_) {
            auto it = coloring_->find(a);
            if (it == coloring_->end())
                return fail(a, "atom has no color");
            if (it->second < 1)
                return fail(a, "color must be positive");
        }
        for (const auto& [a, c] : *coloring_)
            if (!index_.count(a) || !lower_covers(a).empty())
                return fail(a, "coloring assigns a color to a non-atom");
        for (ElementId f : facets()) {
            std::set<int> colors;
            for (ElementId a : atoms_below(f))
                if (!colors.insert(coloring_->at(a)).second)
                    return fail(f, "two atoms below a facet share a color");
        }
    }
    return {};
}

void SimplicialPoset::require_valid() const {
    auto report = validate();
    if (!report.valid)
        throw InvalidPosetError(report.message +
                                (report.offending
                                     ? " (element " + std::to_string(*report.offending) + ")"
                                     : std::string()));
}

// ---------------------------------------------------------------------------

SimplicialPoset face_poset(const SimplicialComplex& complex) {
    std::vector<Face> faces = all_faces(complex);
    faces.erase(faces.begin());
    std::map<Face, ElementId> index;
    std::vector<PosetElement> elements;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        const ElementId id = static_cast<ElementId>(i);
        index.emplace(faces[i], id);
        std::string label = "{";
        for (std::size_t j = 0; j < faces[i].size(); ++j)
            label += (j ? "," : "") + complex.label(faces[i][j]);
        elements.push_back({id, static_cast<int>(faces[i].size()), label + "}"});
    }
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (const Face& f : faces) {
        if (f.size() < 2)
            continue;
        for (std::size_t skip = 0; skip < f.size(); ++skip) {
            Face sub;
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != skip)
                    sub.push_back(f[j]);
            covers.emplace_back(index.at(sub), index.at(f));
        }
    }
    std::optional<Coloring> coloring;
    if (complex.has_coloring()) {
        coloring.emplace();
        for (VertexId v : complex.vertices())
            coloring->emplace(index.at(Face{v}), complex.color(v));
    }
    return SimplicialPoset(std::move(elements), std::move(covers), std::move(coloring));
}

SimplicialComplex order_complex(const SimplicialPoset& poset) {
    poset.require_valid();
    std::vector<Face> chains;
    Face chain;
    auto extend = [&](auto&& self, ElementId x) -> void {
        chain.push_back(x);
        const auto& up = poset.upper_covers(x);
        if (up.empty()) {
            Face sorted = chain;
            std::sort(sorted.begin(), sorted.end());
            chains.push_back(std::move(sorted));
        }
        for (ElementId y : up)
            self(self, y);
        chain.pop_back();
    };
    for (ElementId a : poset.atoms())
        extend(extend, a);
    Coloring coloring;
    LabelTable labels;
    for (const PosetElement& e : poset.elements()) {
        coloring.emplace(e.id, e.rank);
        if (!e.label.empty())
            labels.emplace(e.id, e.label);
    }
    return SimplicialComplex(std::move(chains), std::move(coloring), std::move(labels));
}

SimplicialPoset poset_link(const SimplicialPoset& poset, ElementId tau) {
    poset.require_valid();
    if (tau == kBottom)
        return poset;
    const int base = poset.element(tau).rank;
    std::set<ElementId> above;
    std::vector<ElementId> stack{tau};
    while (!stack.empty()) {
        ElementId x = stack.back();
        stack.pop_back();
        for (ElementId y : poset.upper_covers(x))
            if (above.insert(y).second)
                stack.push_back(y);
    }
    std::vector<PosetElement> elements;
    for (ElementId x : above) {
        PosetElement e = poset.element(x);
        e.rank -= base;
        elements.push_back(std::move(e));
    }
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (const auto& [lo, hi] : poset.covers())
        if (above.count(lo) && above.count(hi))
            covers.emplace_back(lo, hi);
    std::optional<Coloring> coloring;
    if (poset.has_coloring()) {
        coloring.emplace();
        const auto tau_atoms = poset.atoms_below(tau);
        for (ElementId x : above) {
            if (poset.element(x).rank != base + 1)
                continue;
            std::vector<ElementId> extra;
            const auto atoms = poset.atoms_below(x);
            std::set_difference(atoms.begin(), atoms.end(), tau_atoms.begin(), tau_atoms.end(),
                                std::back_inserter(extra));
            coloring->emplace(x, poset.color(extra.at(0)));
        }
    }
    return SimplicialPoset(std::move(elements), std::move(covers), std::move(coloring));
}

SimplicialPoset poset_rank_select(const SimplicialPoset& poset, const ColorSet& colors) {
    if (!poset.has_coloring())
        throw MissingColoringError("rank selection requires a coloring");
    poset.require_valid();
    std::set<ElementId> kept;
    std::vector<PosetElement> elements;
    for (const PosetElement& e : poset.elements()) {
        const auto atoms = poset.atoms_below(e.id);
        if (std::all_of(atoms.begin(), atoms.end(),
                        [&](ElementId a) { return colors.count(poset.color(a)) > 0; })) {
            kept.insert(e.id);
            elements.push_back(e);
        }
    }
    std::vector<std::pair<ElementId, ElementId>> covers;
    for (const auto& c : poset.covers())
        if (kept.count(c.first) && kept.count(c.second))
            covers.push_back(c);
    Coloring coloring;
    for (const auto& [a, c] : *poset.coloring())
        if (kept.count(a))
            coloring.emplace(a, c);
    return SimplicialPoset(std::move(elements), std::move(covers), std::move(coloring));
}

ColorSet poset_color_set(const SimplicialPoset& poset) {
    if (!poset.has_coloring())
        throw MissingColoringError("poset has no coloring");
    ColorSet colors;
    for (const auto& entry : *poset.coloring())
        colors.insert(entry.second);
    return colors;
}

bool poset_is_connected(const SimplicialPoset& poset) {
    return is_connected(order_complex(poset));
}

PropertyReport check_poset_properties(const SimplicialPoset& poset) {
    poset.require_valid();
    PropertyReport report;
    const int d = poset.rank_of_poset();
    const auto facets = poset.facets();
    report.pure = std::all_of(facets.begin(), facets.end(),
                              [&](ElementId f) { return poset.rank(f) == d; });
    if (poset.has_coloring() && static_cast<int>(poset_color_set(poset).size()) <= d) {
        report.balanced = true;
    } else {
        Graph graph;
        for (ElementId a : poset.atoms())
            graph[a];
        for (ElementId f : facets) {
            const auto atoms = poset.atoms_below(f);
            for (ElementId a : atoms)
                for (ElementId b : atoms)
                    if (a != b)
                        graph[a].insert(b);
        }
        report.balanced = color_graph(graph, d).has_value();
    }
    report.links_connected = poset_is_connected(poset);
    for (const PosetElement& e : poset.elements()) {
        if (!report.links_connected)
            break;
        if (e.rank < d - 1)
            report.links_connected = poset_is_connected(poset_link(poset, e.id));
    }
    if (d - 1 <= 0)
        report.links_connected = true;
    return report;
}

std::pair<FVector, HVector> poset_f_h_vectors(const SimplicialPoset& poset) {
    poset.require_valid();
    const int d = poset.rank_of_poset();
    for (ElementId f : poset.facets())
        if (poset.rank(f) != d)
            throw PurityError("h-vector requires a pure poset");
    FVector f{{1}};
    for (int k = 1; k <= d; ++k)
        f.entries.push_back(static_cast<std::int64_t>(poset.elements_of_rank(k).size()));
    return {f, h_from_f(f)};
}

bool poset_strongly_connected(const SimplicialPoset& poset) {
    poset.require_valid();
    const int d = poset.rank_of_poset();
    const auto facets = poset.facets();
    for (ElementId f : facets)
        if (poset.rank(f) != d)
            throw PurityError("strong connectivity requires a pure poset");
    if (facets.size() <= 1 || d == 1)
        return true;
    std::map<ElementId, std::set<ElementId>> adjacency;
    for (ElementId ridge : poset.elements_of_rank(d - 1)) {
        const auto& up = poset.upper_covers(ridge);
        for (ElementId a : up)
            for (ElementId b : up)
                if (a != b)
                    adjacency[a].insert(b);
    }
    std::set<ElementId> seen{facets.front()};
    std::queue<ElementId> queue;
    queue.push(facets.front());
    while (!queue.empty()) {
        ElementId a = queue.front();
        queue.pop();
        for (ElementId b : adjacency[a])
            if (seen.insert(b).second)
                queue.push(b);
    }
    return seen.size() == facets.size();
}

} // namespace topo

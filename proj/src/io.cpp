#include "topo/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "topo/error.hpp"

namespace topo {

namespace {

long long parse_key(const std::string& key, const char* what) {
    try {
        std::size_t used = 0;
        const long long value = std::stoll(key, &used);
        if (used != key.size())
            throw ParseError("");
        return value;
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid ") + what + " key \"" + key + "\"");
    }
}

const Json& require(const Json& json, const char* field) {
    if (!json.is_object() || !json.contains(field))
        throw ParseError(std::string("missing field \"") + field + "\"");
    return json.at(field);
}

int as_int(const Json& value, const char* what) {
    if (!value.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return value.get<int>();
}

void check_type(const Json& json, const char* expected) {
    const Json& type = require(json, "type");
    if (!type.is_string() || type.get<std::string>() != expected)
        throw ParseError(std::string("expected \"type\": \"") + expected + "\"");
}

} // namespace

VertexId LoadedComplex::vertex(long long original) const {
    auto it = ids.find(original);
    if (it == ids.end())
        throw InvalidArgument("vertex " + std::to_string(original) + " does not occur in the complex");
    return it->second;
}

Json complex_to_json(const SimplicialComplex& complex) {
    Json out;
    out["type"] = "complex";
    out["facets"] = Json::array();
    for (const Face& f : complex.facets())
        out["facets"].push_back(f);
    if (complex.has_coloring()) {
        Json coloring = Json::object();
        for (const auto& [v, c] : *complex.coloring())
            coloring[std::to_string(v)] = c;
        out["coloring"] = coloring;
    }
    if (!complex.labels().empty()) {
        Json labels = Json::object();
        for (const auto& [v, l] : complex.labels())
            labels[std::to_string(v)] = l;
        out["labels"] = labels;
    }
    return out;
}

LoadedComplex complex_from_json(const Json& json) {
    check_type(json, "complex");
    const Json& facets_json = require(json, "facets");
    if (!facets_json.is_array())
        throw ParseError("\"facets\" must be an array");

    std::vector<std::vector<long long>> raw;
    std::set<long long> originals;
    for (const Json& f : facets_json) {
        if (!f.is_array())
            throw ParseError("each facet must be an array");
        std::vector<long long> face;
        for (const Json& v : f) {
            if (!v.is_number_integer())
                throw ParseError("vertex ids must be integers");
            face.push_back(v.get<long long>());
            originals.insert(face.back());
        }
        raw.push_back(std::move(face));
    }

    LoadedComplex out;
    for (long long v : originals)
        out.ids.emplace(v, static_cast<VertexId>(out.ids.size()));
    const bool renumbered = std::any_of(out.ids.begin(), out.ids.end(),
                                        [](const auto& p) { return p.first != p.second; });

    std::vector<Face> facets;
    for (const auto& face : raw) {
        Face f;
        for (long long v : face)
            f.push_back(out.ids.at(v));
        if (!std::is_sorted(f.begin(), f.end()))
            throw InvalidComplexError("facet " + face_to_string(f) + " is not sorted ascending");
        facets.push_back(std::move(f));
    }

    std::optional<Coloring> coloring;
    if (json.contains("coloring")) {
        const Json& c = json.at("coloring");
        if (!c.is_object())
            throw ParseError("\"coloring\" must be an object");
        coloring.emplace();
        for (const auto& [key, value] : c.items()) {
            const long long v = parse_key(key, "coloring");
            auto it = out.ids.find(v);
            if (it == out.ids.end())
                throw InvalidComplexError("coloring mentions unknown vertex " + key);
            (*coloring)[it->second] = as_int(value, "color");
        }
    }

    LabelTable labels;
    if (json.contains("labels")) {
        const Json& l = json.at("labels");
        if (!l.is_object())
            throw ParseError("\"labels\" must be an object");
        for (const auto& [key, value] : l.items()) {
            const long long v = parse_key(key, "labels");
            auto it = out.ids.find(v);
            if (it == out.ids.end())
                throw InvalidComplexError("labels mention unknown vertex " + key);
            if (!value.is_string())
                throw ParseError("labels must be strings");
            labels[it->second] = value.get<std::string>();
        }
    }
    if (renumbered)
        for (const auto& [original, dense] : out.ids)
            labels.emplace(dense, std::to_string(original));

    out.complex = SimplicialComplex(std::move(facets), std::move(coloring), std::move(labels));
    return out;
}

Json poset_to_json(const SimplicialPoset& poset) {
    Json out;
    out["type"] = "poset";
    out["elements"] = Json::array();
    for (const PosetElement& e : poset.elements()) {
        Json el{{"id", e.id}, {"rank", e.rank}};
        if (!e.label.empty())
            el["label"] = e.label;
        out["elements"].push_back(el);
    }
    out["covers"] = Json::array();
    for (const auto& [lo, hi] : poset.covers())
        out["covers"].push_back({lo, hi});
    if (poset.has_coloring()) {
        Json coloring = Json::object();
        for (const auto& [v, c] : *poset.coloring())
            coloring[std::to_string(v)] = c;
        out["coloring"] = coloring;
    }
    return out;
}

SimplicialPoset poset_from_json(const Json& json) {
    check_type(json, "poset");
    const Json& elements_json = require(json, "elements");
    const Json& covers_json = require(json, "covers");
    if (!elements_json.is_array() || !covers_json.is_array())
        throw ParseError("\"elements\" and \"covers\" must be arrays");

    std::vector<PosetElement> elements;
    std::map<ElementId, int> declared;
    for (const Json& e : elements_json) {
        PosetElement el;
        el.id = as_int(require(e, "id"), "element id");
        el.rank = as_int(require(e, "rank"), "element rank");
        if (e.contains("label")) {
            if (!e.at("label").is_string())
                throw ParseError("element labels must be strings");
            el.label = e.at("label").get<std::string>();
        }
        if (el.id < 0)
            throw InvalidPosetError("element ids must be nonnegative");
        if (!declared.emplace(el.id, el.rank).second)
            throw InvalidPosetError("duplicate element id " + std::to_string(el.id));
        elements.push_back(std::move(el));
    }

    std::vector<std::pair<ElementId, ElementId>> covers;
    std::map<ElementId, std::vector<ElementId>> lower;
    for (const Json& c : covers_json) {
        if (!c.is_array() || c.size() != 2)
            throw ParseError("each cover must be a pair [lower, upper]");
        const ElementId lo = as_int(c[0], "cover endpoint"), hi = as_int(c[1], "cover endpoint");
        if (!declared.count(lo) || !declared.count(hi))
            throw InvalidPosetError("cover [" + std::to_string(lo) + "," + std::to_string(hi) +
                                    "] references an unknown element");
        covers.emplace_back(lo, hi);
        lower[hi].push_back(lo);
    }

    // Recompute ranks from the cover relation and compare with the declared ones.
    std::map<ElementId, int> computed;
    std::set<ElementId> active;
    std::function<int(ElementId)> rank_of = [&](ElementId x) -> int {
        if (auto it = computed.find(x); it != computed.end())
            return it->second;
        if (!active.insert(x).second)
            throw InvalidPosetError("cover relation has a cycle through element " + std::to_string(x));
        int r = 1;
        for (ElementId y : lower[x])
            r = std::max(r, rank_of(y) + 1);
        active.erase(x);
        return computed[x] = r;
    };
    for (const auto& [id, rank] : declared)
        if (rank_of(id) != rank)
            throw InvalidPosetError("element " + std::to_string(id) + " declares rank " +
                                    std::to_string(rank) + " but its covers give rank " +
                                    std::to_string(computed.at(id)));

    std::optional<Coloring> coloring;
    if (json.contains("coloring")) {
        const Json& c = json.at("coloring");
        if (!c.is_object())
            throw ParseError("\"coloring\" must be an object");
        coloring.emplace();
        for (const auto& [key, value] : c.items())
            (*coloring)[static_cast<ElementId>(parse_key(key, "coloring"))] = as_int(value, "color");
    }

    SimplicialPoset poset(std::move(elements), std::move(covers), std::move(coloring));
    poset.require_valid();
    return poset;
}

Document parse_document(const std::string& text) {
    Json json;
    try {
        json = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    const Json& type = require(json, "type");
    if (!type.is_string())
        throw ParseError("\"type\" must be a string");
    Document doc;
    try {
        if (type == "complex")
            doc.complex = complex_from_json(json);
        else if (type == "poset")
            doc.poset = poset_from_json(json);
        else
            throw ParseError("unknown document type \"" + type.get<std::string>() + "\"");
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

Json certificate_to_json(const EquivalenceCertificate& certificate) {
    Json out = Json::array();
    for (const PathMove& m : certificate.moves)
        out.push_back({{"position", m.position},
                       {"kind", to_string(m.kind)},
                       {"vertex", m.vertex},
                       {"witness", m.witness}});
    return out;
}

EquivalenceCertificate certificate_from_json(const Json& json) {
    if (!json.is_array())
        throw ParseError("certificate must be an array of moves");
    EquivalenceCertificate out;
    try {
        for (const Json& m : json) {
            PathMove move;
            const std::string kind = require(m, "kind").get<std::string>();
            if (kind == "expand")
                move.kind = MoveKind::Expand;
            else if (kind == "contract")
                move.kind = MoveKind::Contract;
            else
                throw ParseError("unknown move kind \"" + kind + "\"");
            move.position = require(m, "position").get<std::size_t>();
            move.vertex = require(m, "vertex").get<VertexId>();
            move.witness = require(m, "witness").get<Face>();
            out.moves.push_back(std::move(move));
        }
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
    return out;
}

Json poset_certificate_to_json(const PosetCertificate& certificate) {
    auto edge_json = [](const PosetEdge& e) {
        return Json{{"element", e.element ? Json(*e.element) : Json(nullptr)},
                    {"init", e.init},
                    {"term", e.term}};
    };
    Json out = Json::array();
    for (const PosetMove& m : certificate.moves) {
        Json replacement = Json::array();
        for (const PosetEdge& e : m.replacement)
            replacement.push_back(edge_json(e));
        out.push_back({{"position", m.position},
                       {"kind", to_string(m.kind)},
                       {"witness", m.witness ? Json(*m.witness) : Json(nullptr)},
                       {"replacement", replacement}});
    }
    return out;
}

} // namespace topo

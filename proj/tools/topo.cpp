#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/homology.hpp"
#include "topo/io.hpp"
#include "topo/pi1.hpp"
#include "topo/verify.hpp"

using namespace topo;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

// Writes to the -o file when given, stdout otherwise.
void emit(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_file);
    if (!out)
        throw InvalidArgument("cannot write " + out_file);
    out << text;
}

int default_tietze_rounds() {
    if (const char* env = std::getenv("TOPO_TIETZE_ROUNDS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 0)
                return n;
        } catch (const std::exception&) {
        }
        throw InvalidArgument("TOPO_TIETZE_ROUNDS must be a nonnegative integer");
    }
    return 50;
}

ColorSet parse_colors(const std::string& text) {
    ColorSet colors;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        try {
            colors.insert(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidArgument("bad color list \"" + text + "\"");
        }
    if (colors.size() != 2)
        throw InvalidArgument("--colors needs two distinct colors");
    return colors;
}

std::vector<long long> parse_ids(const std::string& text) {
    std::vector<long long> ids;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        try {
            ids.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw InvalidArgument("bad vertex list \"" + text + "\"");
        }
    return ids;
}

int cmd_check(const std::string& file, const std::string& out) {
    const Document doc = load_document(file);
    Json report;
    bool ok = true;
    if (doc.is_poset()) {
        const SimplicialPoset& p = *doc.poset;
        const PropertyReport props = check_poset_properties(p);
        const bool strong = props.pure && poset_strongly_connected(p);
        report = {{"pure", props.pure},
                  {"balanced", props.balanced},
                  {"links_connected", props.links_connected},
                  {"strongly_connected", strong}};
        ok = props.all() && strong;
    } else {
        const SimplicialComplex& k = doc.complex->complex;
        const PropertyReport props = check_properties(k);
        const bool strong = props.pure && is_strongly_connected(k);
        report = {{"pure", props.pure},
                  {"balanced", props.balanced},
                  {"links_connected", props.links_connected},
                  {"strongly_connected", strong}};
        ok = props.all() && strong;
    }
    emit(report.dump(2) + "\n", out);
    return ok ? kOk : kCheckFailed;
}

int cmd_hvec(const std::string& file, const std::string& out) {
    const Document doc = load_document(file);
    FVector f;
    HVector h;
    if (doc.is_poset()) {
        std::tie(f, h) = poset_f_h_vectors(*doc.poset);
    } else {
        f = f_vector(doc.complex->complex);
        h = h_vector(doc.complex->complex);
    }
    emit(Json{{"f", f.entries}, {"h", h.entries}}.dump() + "\n", out);
    return kOk;
}

int cmd_pi1(const std::string& file, const std::string& colors_text, int rounds,
            const std::string& out) {
    const Document doc = load_document(file);
    std::ostringstream text;
    if (doc.is_poset()) {
        const SimplicialPoset& p = *doc.poset;
        const auto presentation = tietze_simplify(poset_edge_path_group(p, p.atoms().front()), rounds);
        text << to_text(presentation);
        text << "m_lower = " << h1(order_complex(p)).min_generators() << "\n";
        text << "m_upper = " << presentation.generators.size() << "\n";
        emit(text.str(), out);
        return kOk;
    }

    const SimplicialComplex k = ensure_coloring(doc.complex->complex);
    const std::size_t lower = h1(k).min_generators();
    GroupPresentation presentation;
    std::size_t upper = 0;
    if (!colors_text.empty()) {
        const ColorSet s = parse_colors(colors_text);
        const PathRewriter rewriter(k, s);
        const auto tree = build_nested_tree(k, s, default_basepoint(k, s));
        presentation = tietze_simplify(
            restrict_generators_to_S(full_presentation(k, tree), rewriter, tree), rounds);
        upper = presentation.generators.size();
    } else {
        const UpperBound bound = m_upper_bound(k, rounds);
        upper = bound.best;
        for (const PairBound& p : bound.per_pair)
            if (p.simplified_generators == bound.best) {
                presentation = p.simplified;
                break;
            }
    }
    text << to_text(presentation);
    text << "m_lower = " << lower << "\n";
    text << "m_upper = " << upper << "\n";
    emit(text.str(), out);
    return kOk;
}

int cmd_verify(const std::string& file, bool ns, bool timing, int rounds, const std::string& out) {
    const Document doc = load_document(file);
    VerifyOptions options;
    options.input_id = file;
    options.ns = ns;
    options.timing = timing;
    options.tietze_rounds = rounds;
    const VerificationReport report = doc.is_poset() ? verify_poset(*doc.poset, options)
                                                     : verify_complex(doc.complex->complex, options);
    emit(report_to_json(report).dump(2) + "\n", out);
    return report.passed() ? kOk : kCheckFailed;
}

int cmd_gen(const std::string& shape, int dim, int n, int copies, const std::string& base,
            const std::string& out) {
    Json json;
    if (shape == "cross-polytope")
        json = complex_to_json(cross_polytope(dim));
    else if (shape == "cycle")
        json = complex_to_json(cycle(n));
    else if (shape == "sd-torus")
        json = complex_to_json(sd_torus());
    else if (shape == "sd-rp2")
        json = complex_to_json(sd_rp2());
    else if (shape == "double-circle")
        json = poset_to_json(double_circle());
    else if (shape == "connected-sum") {
        SimplicialComplex piece;
        if (base == "cross-polytope")
            piece = cross_polytope(dim);
        else if (base == "sd-torus")
            piece = sd_torus();
        else if (base == "sd-rp2")
            piece = sd_rp2();
        else
            throw InvalidArgument("unknown --base \"" + base + "\"");
        json = complex_to_json(iterated_connected_sum(piece, copies));
    } else
        throw InvalidArgument("unknown --shape \"" + shape + "\"");
    emit(json.dump() + "\n", out);
    return kOk;
}

int cmd_rewrite(const std::string& file, const std::string& path_text,
                const std::string& colors_text, const std::string& out) {
    const Document doc = load_document(file);
    if (doc.is_poset())
        throw InvalidArgument("rewrite works on complexes");
    const LoadedComplex& loaded = *doc.complex;
    const SimplicialComplex k = ensure_coloring(loaded.complex);

    EdgePath source;
    for (long long v : parse_ids(path_text))
        source.vertices.push_back(loaded.vertex(v));
    const ColorSet s = parse_colors(colors_text);
    const RewriteResult result = rewrite_path_to_S(k, s, source);
    const bool verified = verify_certificate(k, source, result.path, result.certificate);

    std::map<VertexId, long long> original;
    for (const auto& [o, v] : loaded.ids)
        original[v] = o;
    auto back = [&](const std::vector<VertexId>& vs) {
        std::vector<long long> r;
        for (VertexId v : vs)
            r.push_back(original.at(v));
        return r;
    };
    EquivalenceCertificate external = result.certificate;
    for (PathMove& m : external.moves) {
        m.vertex = static_cast<VertexId>(original.at(m.vertex));
        for (VertexId& w : m.witness)
            w = static_cast<VertexId>(original.at(w));
        std::sort(m.witness.begin(), m.witness.end());
    }

    const Json certificate = certificate_to_json(external);
    Json report{{"source", back(source.vertices)},
                {"path", back(result.path.vertices)},
                {"moves", result.certificate.moves.size()},
                {"verified", verified}};
    if (out.empty())
        report["certificate"] = certificate;
    else
        emit(certificate.dump(2) + "\n", out);
    std::cout << report.dump(2) << "\n";
    return verified ? kOk : kCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Balanced complexes, simplicial posets and edge-path groups"};
    app.require_subcommand(1);

    std::string file, out, colors, path, shape, base = "cross-polytope";
    int rounds = -1, dim = 3, n = 6, copies = 2;
    bool ns = false, timing = false;

    auto* check = app.add_subcommand("check", "Test purity, balance and link connectivity");
    auto* hvec = app.add_subcommand("hvec", "Print f- and h-vectors");
    auto* pi1 = app.add_subcommand("pi1", "Presentation of the fundamental group with bounds");
    auto* verify = app.add_subcommand("verify", "Check the rank-selection identity and the h2 bound");
    auto* gen = app.add_subcommand("gen", "Generate a corpus instance");
    auto* rewrite = app.add_subcommand("rewrite", "Rewrite an edge path into a rank-selected subcomplex");

    for (auto* sub : {check, hvec, pi1, verify, rewrite})
        sub->add_option("file", file, "JSON complex or poset")->required();
    for (auto* sub : {check, hvec, pi1, verify, gen, rewrite})
        sub->add_option("-o,--output", out, "Output file");
    for (auto* sub : {pi1, verify})
        sub->add_option("--tietze-rounds", rounds, "Tietze simplification rounds")
            ->check(CLI::NonNegativeNumber);
    pi1->add_option("--colors", colors, "Color pair a,b");
    verify->add_flag("--ns", ns, "Also report h2 - h1 >= C(d+1,2) b1 (orientable manifolds)");
    verify->add_flag("--timing", timing, "Include wall-clock time in the report");
    gen->add_option("--shape", shape, "cross-polytope|cycle|sd-torus|sd-rp2|double-circle|connected-sum")
        ->required();
    gen->add_option("--dim", dim, "Cross-polytope dimension");
    gen->add_option("--n", n, "Cycle length");
    gen->add_option("--copies", copies, "Number of summands");
    gen->add_option("--base", base, "Summand: cross-polytope|sd-torus|sd-rp2");
    rewrite->add_option("--path", path, "Vertex sequence v0,v1,...")->required();
    rewrite->add_option("--colors", colors, "Color pair a,b")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (rounds < 0 && (pi1->parsed() || verify->parsed()))
            rounds = default_tietze_rounds();
        if (check->parsed())
            return cmd_check(file, out);
        if (hvec->parsed())
            return cmd_hvec(file, out);
        if (pi1->parsed())
            return cmd_pi1(file, colors, rounds, out);
        if (verify->parsed())
            return cmd_verify(file, ns, timing, rounds, out);
        if (gen->parsed())
            return cmd_gen(shape, dim, n, copies, base, out);
        if (rewrite->parsed())
            return cmd_rewrite(file, path, colors, out);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidComplexError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidPosetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const RangeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const FaceNotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const MissingColoringError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kInputError;
}

#include "topo/verify.hpp"

#include <chrono>

#include "topo/error.hpp"
#include "topo/pi1.hpp"
#include "topo/presentation.hpp"

namespace topo {

namespace {

std::vector<ColorSet> subsets_of_size(const ColorSet& colors, std::size_t size) {
    const std::vector<int> all(colors.begin(), colors.end());
    std::vector<ColorSet> out;
    const std::size_t n = all.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != size)
            continue;
        ColorSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1)
                s.insert(all[i]);
        out.push_back(std::move(s));
    }
    return out;
}

// H1 only sees the 2-skeleton: the order complex on elements of rank <= 3.
HomologySummary poset_h1(const SimplicialPoset& poset) {
    const SimplicialComplex full = order_complex(poset);
    std::vector<Face> chains;
    for (Face chain : full.facets()) {
        std::erase_if(chain, [&](ElementId x) { return poset.rank(x) > 3; });
        chains.push_back(std::move(chain));
    }
    return h1(SimplicialComplex::from_faces(std::move(chains)));
}

std::int64_t h_entry(const HVector& h, int i) { return i <= h.d() ? h.h(i) : 0; }

void finish_checks(VerificationReport& r, const std::vector<std::int64_t>& sums, bool ns) {
    r.checks.eq1_holds = static_cast<int>(sums.size()) == r.d + 1;
    for (int i = 0; r.checks.eq1_holds && i <= r.d; ++i)
        r.checks.eq1_holds = r.h.h(i) == sums[static_cast<std::size_t>(i)];
    const std::int64_t h2 = h_entry(r.h, 2);
    const std::int64_t c = binomial(r.d, 2);
    r.checks.bound_holds = c * static_cast<std::int64_t>(r.m_lower) <= h2;
    r.checks.upper_bound_holds = c * static_cast<std::int64_t>(r.m_upper) <= h2;
    if (ns)
        r.checks.ns_holds = h2 - h_entry(r.h, 1) >=
                            binomial(r.d + 1, 2) * static_cast<std::int64_t>(r.homology.betti1);
}

using Clock = std::chrono::steady_clock;

} // namespace

std::vector<std::int64_t> rank_selected_h_sums(const SimplicialComplex& complex) {
    if (!complex.has_coloring())
        throw MissingColoringError("rank selection needs a coloring");
    const ColorSet colors = color_set(complex);
    std::vector<std::int64_t> sums;
    for (std::size_t i = 0; i <= colors.size(); ++i) {
        std::int64_t total = 0;
        for (const ColorSet& s : subsets_of_size(colors, i))
            total += h_entry(h_vector(rank_select(complex, s)), static_cast<int>(i));
        sums.push_back(total);
    }
    return sums;
}

std::vector<std::int64_t> rank_selected_h_sums(const SimplicialPoset& poset) {
    if (!poset.has_coloring())
        throw MissingColoringError("rank selection needs a coloring");
    const ColorSet colors = poset_color_set(poset);
    std::vector<std::int64_t> sums;
    for (std::size_t i = 0; i <= colors.size(); ++i) {
        std::int64_t total = 0;
        for (const ColorSet& s : subsets_of_size(colors, i))
            total += h_entry(poset_f_h_vectors(poset_rank_select(poset, s)).second,
                             static_cast<int>(i));
        sums.push_back(total);
    }
    return sums;
}

SimplicialComplex ensure_coloring(const SimplicialComplex& complex) {
    if (complex.has_coloring())
        return complex;
    auto coloring = find_balanced_coloring(complex);
    if (!coloring)
        throw PropertyViolation("complex has no balanced coloring");
    return complex.with_coloring(std::move(coloring));
}

VerificationReport verify_complex(const SimplicialComplex& input, const VerifyOptions& options) {
    const auto started = Clock::now();
    if (!check_properties(input).all())
        throw PropertyViolation("complex is not pure, balanced, and link-connected");
    const SimplicialComplex complex = ensure_coloring(input);

    VerificationReport r;
    r.input_id = options.input_id;
    r.d = complex.dim() + 1;
    r.f = f_vector(complex);
    r.h = h_vector(complex);
    r.homology = h1(complex);
    r.m_lower = r.homology.min_generators();

    const UpperBound upper = m_upper_bound(complex, options.tietze_rounds);
    for (const PairBound& p : upper.per_pair)
        r.per_pair.push_back({p.colors, p.h2_subcomplex, p.simplified_generators});
    r.m_upper = upper.best;

    finish_checks(r, rank_selected_h_sums(complex), options.ns);
    if (options.timing)
        r.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return r;
}

VerificationReport verify_poset(const SimplicialPoset& poset, const VerifyOptions& options) {
    const auto started = Clock::now();
    poset.require_valid();
    const PropertyReport props = check_poset_properties(poset);
    if (!props.all())
        throw PropertyViolation("poset is not pure, balanced, and link-connected");
    if (!poset.has_coloring())
        throw MissingColoringError("poset verification needs a coloring of the atoms");

    VerificationReport r;
    r.input_id = options.input_id;
    r.poset = true;
    const auto [f, h] = poset_f_h_vectors(poset);
    r.d = h.d();
    r.f = f;
    r.h = h;
    r.homology = poset_h1(poset);
    r.m_lower = r.homology.min_generators();

    const ColorSet colors = poset_color_set(poset);
    for (const ColorSet& s : subsets_of_size(colors, 2))
        r.per_pair.push_back({s, h_entry(poset_f_h_vectors(poset_rank_select(poset, s)).second, 2),
                              std::nullopt});
    const auto atoms = poset.atoms();
    r.m_upper = tietze_simplify(poset_edge_path_group(poset, atoms.front()), options.tietze_rounds)
                    .generators.size();

    finish_checks(r, rank_selected_h_sums(poset), options.ns);
    if (options.timing)
        r.seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return r;
}

Json report_to_json(const VerificationReport& r) {
    Json out;
    out["input"] = r.input_id;
    out["type"] = r.poset ? "poset" : "complex";
    out["d"] = r.d;
    out["f"] = r.f.entries;
    out["h"] = r.h.entries;
    out["per_S"] = Json::array();
    for (const PairRow& row : r.per_pair) {
        Json entry{{"S", std::vector<int>(row.colors.begin(), row.colors.end())}, {"h2", row.h2}};
        entry["generators"] = row.generators ? Json(*row.generators) : Json(nullptr);
        out["per_S"].push_back(entry);
    }
    Json torsion = Json::array();
    for (const Integer& t : r.homology.torsion)
        torsion.push_back(t.convert_to<long long>());
    out["homology"] = {{"betti1", r.homology.betti1}, {"torsion", torsion}};
    out["m_lower"] = r.m_lower;
    out["m_upper"] = r.m_upper;
    Json checks{{"eq1_holds", r.checks.eq1_holds},
                {"bound_holds", r.checks.bound_holds},
                {"upper_bound_holds", r.checks.upper_bound_holds}};
    if (r.checks.ns_holds)
        checks["ns_holds"] = *r.checks.ns_holds;
    out["checks"] = checks;
    if (r.seconds)
        out["timing_seconds"] = *r.seconds;
    return out;
}

} // namespace topo

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "topo/complex.hpp"
#include "topo/homology.hpp"
#include "topo/io.hpp"
#include "topo/poset.hpp"

namespace topo {

struct VerifyOptions {
    std::string input_id;
    int tietze_rounds = 50;
    bool ns = false;
    bool timing = false;
};

struct PairRow {
    ColorSet colors;
    std::int64_t h2 = 0;
    std::optional<std::size_t> generators; // post-Tietze count, complexes only
};

struct VerificationChecks {
    bool eq1_holds = false;
    bool bound_holds = false;       // C(d,2) m_lower <= h2, mandatory
    bool upper_bound_holds = false; // C(d,2) m_upper <= h2, informational
    std::optional<bool> ns_holds;   // h2 - h1 >= C(d+1,2) b1, informational
};

struct VerificationReport {
    std::string input_id;
    bool poset = false;
    int d = 0;
    FVector f;
    HVector h;
    std::vector<PairRow> per_pair;
    HomologySummary homology;
    std::size_t m_lower = 0;
    std::size_t m_upper = 0;
    VerificationChecks checks;
    std::optional<double> seconds;

    bool passed() const { return checks.eq1_holds && checks.bound_holds; }
};

/// Σ_{|S|=i} h_i(Δ_S) for i = 0..d, over the colors used by the coloring.
std::vector<std::int64_t> rank_selected_h_sums(const SimplicialComplex& complex);
std::vector<std::int64_t> rank_selected_h_sums(const SimplicialPoset& poset);

/// Returns the complex itself if colored, otherwise with the coloring found
/// by find_balanced_coloring. Throws PropertyViolation if none exists.
SimplicialComplex ensure_coloring(const SimplicialComplex& complex);

/// Both throw PropertyViolation unless the input is pure, balanced and has connected links.
VerificationReport verify_complex(const SimplicialComplex& complex, const VerifyOptions& options = {});
VerificationReport verify_poset(const SimplicialPoset& poset, const VerifyOptions& options = {});

Json report_to_json(const VerificationReport& report);

} // namespace topo

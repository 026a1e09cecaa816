#include <doctest.h>

#include "topo/corpus.hpp"
#include "topo/error.hpp"
#include "topo/verify.hpp"

using namespace topo;

TEST_CASE("octahedron report") {
    const auto r = verify_complex(cross_polytope(3));
    CHECK(r.d == 3);
    CHECK(r.h.entries == std::vector<std::int64_t>{1, 3, 3, 1});
    CHECK(r.checks.eq1_holds);
    CHECK(r.checks.bound_holds);
    CHECK(r.m_lower == 0);
    CHECK(r.m_upper <= 1);
    CHECK(r.per_pair.size() == 3);
    CHECK(rank_selected_h_sums(cross_polytope(3))[2] == 3);
    CHECK_FALSE(r.seconds);
    CHECK_FALSE(r.checks.ns_holds);
}

TEST_CASE("cycle and torus reports") {
    const auto c6 = verify_complex(cycle(6));
    CHECK(c6.m_lower == 1);
    CHECK(c6.m_upper == 1);
    CHECK(c6.h.h(2) == 1);
    CHECK(c6.passed());

    VerifyOptions opts;
    opts.ns = true;
    opts.timing = true;
    const auto t = verify_complex(sd_torus(), opts);
    CHECK(t.m_lower == 2);
    CHECK(3 * 2 <= t.h.h(2));
    CHECK(t.passed());
    CHECK(t.checks.upper_bound_holds);
    REQUIRE(t.checks.ns_holds);
    CHECK(t.seconds);
}

TEST_CASE("poset report") {
    const auto r = verify_poset(double_circle());
    CHECK(r.poset);
    CHECK(r.m_lower == 1);
    CHECK(r.m_upper == 1);
    CHECK(r.h.h(2) == 1);
    CHECK(r.passed());
}

TEST_CASE("reports are deterministic and serialisable") {
    const auto a = report_to_json(verify_complex(sd_rp2()));
    const auto b = report_to_json(verify_complex(sd_rp2()));
    CHECK(a == b);
    CHECK(a["homology"]["torsion"] == Json::array({2}));
    CHECK(a["checks"]["bound_holds"] == true);
    CHECK_FALSE(a.contains("timing_seconds"));
}

TEST_CASE("uncolored input is colored on demand") {
    const auto k = cross_polytope(3).with_coloring(std::nullopt);
    CHECK(ensure_coloring(k).has_coloring());
    CHECK(verify_complex(k).passed());
    CHECK_THROWS_AS(ensure_coloring(torus7()), PropertyViolation);
    CHECK_THROWS_AS(verify_complex(torus7()), PropertyViolation);
}

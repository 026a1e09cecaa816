#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

const std::string kBin = TOPO_BIN;
const std::string kDir = TOPO_SCRATCH;

int run(const std::string& args, std::string* out = nullptr) {
    const std::string file = kDir + "/stdout.txt";
    const int status = std::system((kBin + " " + args + " > " + file + " 2>/dev/null").c_str());
    if (out) {
        std::ifstream in(file);
        std::stringstream s;
        s << in.rdbuf();
        *out = s.str();
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const std::string& name) { return kDir + "/" + name; }

void write(const std::string& name, const std::string& text) { std::ofstream(path(name)) << text; }

} // namespace

TEST_CASE("gen and check") {
    REQUIRE(run("gen --shape cross-polytope --dim 3 -o " + path("oct.json")) == 0);
    REQUIRE(run("gen --shape cycle --n 6 -o " + path("c6.json")) == 0);
    REQUIRE(run("gen --shape double-circle -o " + path("dc.json")) == 0);
    REQUIRE(run("gen --shape connected-sum --copies 3 -o " + path("sum3.json")) == 0);
    REQUIRE(run("gen --shape sd-torus -o " + path("sdt.json")) == 0);
    REQUIRE(run("gen --shape sd-rp2 -o " + path("sdr.json")) == 0);

    std::string out;
    CHECK(run("check " + path("oct.json"), &out) == 0);
    CHECK(nlohmann::json::parse(out)["strongly_connected"] == true);
    for (const char* f : {"c6.json", "dc.json", "sum3.json", "sdt.json", "sdr.json"})
        CHECK(run(std::string("check ") + path(f)) == 0);

    std::ifstream in(path("sum3.json"));
    const auto sum = nlohmann::json::parse(in);
    CHECK(sum["facets"].size() == 20);

    write("two.json", R"({"type":"complex","facets":[[0,1],[2,3]]})");
    CHECK(run("check " + path("two.json")) == 1);
    write("bad.json", "{bad");
    CHECK(run("check " + path("bad.json")) == 2);
    CHECK(run("check " + path("missing.json")) == 2);
    CHECK(run("gen --shape cycle --n 5") == 2);
    CHECK(run("gen --shape pretzel") == 2);
    CHECK(run("frobnicate") == 2);
}

TEST_CASE("hvec") {
    run("gen --shape cross-polytope --dim 3 -o " + path("oct.json"));
    std::string out;
    REQUIRE(run("hvec " + path("oct.json"), &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j["f"] == nlohmann::json::array({1, 6, 12, 8}));
    CHECK(j["h"] == nlohmann::json::array({1, 3, 3, 1}));
}

TEST_CASE("pi1") {
    run("gen --shape cycle --n 6 -o " + path("c6.json"));
    run("gen --shape double-circle -o " + path("dc.json"));
    run("gen --shape cross-polytope --dim 3 -o " + path("oct.json"));
    std::string out;
    REQUIRE(run("pi1 " + path("c6.json"), &out) == 0);
    CHECK(out.find("g1 := edge(") == 0);
    CHECK(out.find("m_lower = 1\nm_upper = 1\n") != std::string::npos);
    REQUIRE(run("pi1 " + path("dc.json"), &out) == 0);
    CHECK(out.find("m_lower = 1\nm_upper = 1\n") != std::string::npos);
    REQUIRE(run("pi1 " + path("oct.json") + " --colors 1,2 --tietze-rounds 0", &out) == 0);
    CHECK(out.find("m_lower = 0\nm_upper = 1\n") != std::string::npos);
    REQUIRE(run("pi1 " + path("oct.json"), &out) == 0);
    CHECK(out.find("m_upper = 0") != std::string::npos);
    CHECK(run("pi1 " + path("oct.json") + " --colors 1,7") == 2);
    CHECK(std::system(("TOPO_TIETZE_ROUNDS=0 " + kBin + " pi1 " + path("oct.json") + " --colors 1,2 > " +
                       path("env.txt")).c_str()) == 0);
    std::ifstream env(path("env.txt"));
    std::stringstream s;
    s << env.rdbuf();
    CHECK(s.str().find("m_upper = 1") != std::string::npos);
}

TEST_CASE("verify") {
    run("gen --shape cross-polytope --dim 3 -o " + path("oct.json"));
    run("gen --shape sd-torus -o " + path("sdt.json"));
    std::string out;
    REQUIRE(run("verify " + path("oct.json"), &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["checks"]["eq1_holds"] == true);
    CHECK(j["checks"]["bound_holds"] == true);
    CHECK(j["m_lower"] == 0);
    CHECK_FALSE(j.contains("timing_seconds"));

    REQUIRE(run("verify --ns --timing " + path("sdt.json"), &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j["m_lower"] == 2);
    CHECK(j["checks"].contains("ns_holds"));
    CHECK(j.contains("timing_seconds"));

    run("gen --shape double-circle -o " + path("dc.json"));
    REQUIRE(run("verify " + path("dc.json"), &out) == 0);
    j = nlohmann::json::parse(out);
    CHECK(j["type"] == "poset");
    CHECK(j["m_lower"] == 1);
    CHECK(j["m_upper"] == 1);

    std::string again;
    run("verify " + path("oct.json"), &out);
    run("verify " + path("oct.json"), &again);
    CHECK(out == again);

    write("torus7.json", R"({"type":"complex","facets":[[0,1,3],[0,1,5],[0,2,3],[0,2,6],[0,4,5],[0,4,6],
        [1,2,4],[1,2,6],[1,3,6],[1,4,5],[2,3,5],[2,4,5],[3,4,6],[3,5,6]]})");
    CHECK(run("check " + path("torus7.json")) == 1);
    CHECK(run("verify " + path("torus7.json")) == 1);
    CHECK(run("verify -o " + path("report.json") + " " + path("oct.json")) == 0);
    std::ifstream report(path("report.json"));
    CHECK(nlohmann::json::parse(report)["d"] == 3);
}

TEST_CASE("rewrite") {
    run("gen --shape cross-polytope --dim 3 -o " + path("oct.json"));
    std::string out;
    REQUIRE(run("rewrite " + path("oct.json") + " --path 0,4,2 --colors 1,2", &out) == 0);
    auto j = nlohmann::json::parse(out);
    CHECK(j["verified"] == true);
    CHECK(j["path"].front() == 0);
    CHECK(j["path"].back() == 2);

    REQUIRE(run("rewrite " + path("oct.json") + " --path 0,4,2 --colors 1,2 -o " + path("cert.json"), &out) == 0);
    std::ifstream cert(path("cert.json"));
    CHECK(nlohmann::json::parse(cert).size() == nlohmann::json::parse(out)["moves"]);

    CHECK(run("rewrite " + path("oct.json") + " --path 4,0 --colors 1,2") == 2);
    CHECK(run("rewrite " + path("oct.json") + " --path 0,1 --colors 1,2") == 2);
}

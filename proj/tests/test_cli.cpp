#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

const std::string kData = BCHROMA_TEST_DATA;

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the CLI with the given arguments; stderr goes to a temporary file.
Run run(const std::string &args) {
    const std::string err_file = "cli_test_stderr.txt";
    std::string cmd = std::string("\"") + BCHROMA_CLI_PATH + "\" " + args + " 2>" + err_file;
    Run result{};
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.err = slurp(err_file);
    std::remove(err_file.c_str());
    return result;
}

nlohmann::json frac(long long p, long long q) { return {{"num", p}, {"den", q}}; }

}  // namespace

TEST_CASE("gen") {
    auto r = run("gen --family sunlet --n 4 --format dimacs");
    CHECK(r.status == 0);
    CHECK(r.out.rfind("p edge 8 8\n", 0) == 0);

    auto p1 = run("gen --family path --n 1");
    CHECK(p1.status == 0);
    CHECK(p1.out == "1 0\n");
    CHECK(p1.err.find("trivial") != std::string::npos);

    CHECK(run("gen --family petersen --n 5").status == 2);
    CHECK(run("gen --family cycle --n 2").status == 2);
    CHECK(run("gen").status == 2);
    CHECK(run("frobnicate").status == 2);
}

TEST_CASE("stats with a colouring file") {
    auto r = run("stats " + kData + "/p3_crlf.txt --colouring " + kData + "/p3_colouring.txt");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["mean"] == frac(4, 3));
    CHECK(j["variance"] == frac(2, 9));
    CHECK(j["b_colouring"] == true);

    auto bad = run("stats " + kData + "/c4.txt --colouring " + kData + "/c4_bad_colouring.txt");
    REQUIRE(bad.status == 0);
    auto jb = nlohmann::json::parse(bad.out);
    CHECK(jb["proper"] == true);
    CHECK(jb["b_colouring"] == false);
    CHECK(jb["classes_without_b_vertex"] == nlohmann::json::array({1, 3}));
    CHECK(bad.err.find("colour class 1 has no b-vertex") != std::string::npos);

    auto csv = run("stats " + kData + "/p3_crlf.txt --colouring " + kData + "/p3_colouring.txt --format csv");
    CHECK(csv.out.find(",4/3,2/9,yes,yes,\n") != std::string::npos);

    CHECK(run("stats " + kData + "/p3_crlf.txt --colouring " + kData + "/invalid_colouring.txt").status == 2);
}

TEST_CASE("stats full report") {
    auto r = run("stats --family wheel --n 4");
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["phi"] == 3);
    CHECK(j["min"]["mean"] == frac(9, 5));
    CHECK(j["min"]["variance"] == frac(14, 25));
    CHECK(run("stats --family wheel --n 4").out == r.out);

    auto dimacs = run("stats " + kData + "/k3.col");
    REQUIRE(dimacs.status == 0);
    CHECK(nlohmann::json::parse(dimacs.out)["min"]["mean"] == frac(2, 1));
}

TEST_CASE("phi") {
    auto r = run("phi --family path --n 5 --format csv");
    CHECK(r.status == 0);
    CHECK(r.out == "graph,chi,phi,max_degree\npath:5,2,3,2\n");
}

TEST_CASE("error exit codes") {
    CHECK(run("stats " + kData + "/two_edges.txt").status == 2);
    auto lenient = run("stats " + kData + "/two_edges.txt --allow-disconnected");
    CHECK(lenient.status == 0);
    CHECK(run("stats --family path --n 40").status == 3);
    CHECK(run("stats --family path --n 40 --max-n 40").status == 0);
    CHECK(run("stats --family path --n 5 --max-n 65").status == 2);
    CHECK(run("stats " + kData + "/does_not_exist.txt").status == 1);
    CHECK(run("stats --family path --n 5 --format xml").status == 2);
    CHECK(run("stats " + kData + "/c4.txt --family cycle --n 4").status == 2);
}

TEST_CASE("verify and sweep") {
    auto v = run("verify --family cycle --range 3..10");
    CHECK(v.status == 0);
    auto j = nlohmann::json::parse(v.out);
    CHECK(j["summary"]["failing_rows"] == 0);
    CHECK(j["rows"].size() == 8);

    CHECK(run("verify --family cycle --range 10..3").status == 2);
    CHECK(run("verify --family cycle --range 2..5").status == 2);
    CHECK(run("verify --family cycle").status == 2);
    CHECK(run("sweep --family sunlet --range 3..20 --max-n 20 --format csv").status == 3);

    auto reg = run("sweep --registry");
    CHECK(reg.status == 0);
    CHECK(reg.out.rfind("family,n_condition,", 0) == 0);
}

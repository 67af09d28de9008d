#include "ci2/cli/commands.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ci2::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("ci2_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string write(const std::string& name, const std::string& content) const {
        std::ofstream(path_ / name) << content;
        return (path_ / name).string();
    }
    fs::path path() const { return path_; }

private:
    fs::path path_;
};

// Degrees (2, 7) through e_10 over F_32003, nonsingular there.
std::string sample_pair() {
    std::string f1 = "x0*x10", f2 = "x1*x10^6";
    for (int i = 1; i < 10; ++i) f1 += " + " + std::to_string(i) + "*x" + std::to_string(i) + "^2";
    for (int j = 2; j <= 7; ++j)
        for (int i = 0; i < 10; ++i)
            f2 += " + " + std::to_string(1 + (i * 7 + j * 3) % 11) + "*x" + std::to_string(i) + "^" + std::to_string(j) +
                  (j < 7 ? "*x10^" + std::to_string(7 - j) : "");
    return "# field 32003\n" + f1 + "\n" + f2 + "\n";
}

const std::string kPoint = "0,0,0,0,0,0,0,0,0,0,1";

}  // namespace

TEST_CASE("rank command and report shape") {
    TempDir dir;
    const auto m = dir.write("m.txt", "1 2\n2 4\n");
    const auto r = run({"rank", m});
    REQUIRE(r.code == 0);
    const auto d = r.doc();
    CHECK(d["command"] == "rank");
    CHECK(d["result"]["rank"] == 1);
    CHECK(d["invocation"] == json::array({"rank", m}));
    CHECK(d["inputs"]["field"] == "Q");
    CHECK(d["warnings"].is_array());
    CHECK(r.err.find("rank 1") != std::string::npos);
    CHECK(run({"rank", "--matrix", m}).doc()["result"] == d["result"]);
    CHECK(run({"--prime", "7", "rank", dir.write("p.txt", "1 8\n1 1\n")}).doc()["result"]["rank"] == 1);
}

TEST_CASE("input errors exit with 1 and a located message") {
    TempDir dir;
    const auto bad = run({"rank", dir.write("bad.txt", "1 2\n2 x\n")});
    CHECK(bad.code == 1);
    const auto d = bad.doc();
    CHECK(d["error"]["kind"] == "input");
    CHECK(d["error"]["message"].get<std::string>().find("line 2, column 3") != std::string::npos);
    CHECK(run({"--prime", "4", "rank", dir.write("m.txt", "1\n")}).code == 1);
    CHECK(run({"--prime", "2", "rank", dir.write("m.txt", "1\n")}).code == 1);
    CHECK(run({"rank", (dir.path() / "missing.txt").string()}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"codim-bounds", "--M", "40", "--d1", "5", "--d2", "27"}).code == 1);
    CHECK(run({"local-bounds", "--nu", "1", "--mu", "1", "--n", "0"}).code == 1);
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK((r.out + r.err).find("check-regularity") != std::string::npos);
}

TEST_CASE("budget exits with 2") {
    TempDir dir;
    const auto ideal = dir.write("i.txt", "x0^3 + x1^2*x2 + x3^3\nx0*x1*x2 + x2^3 - x3^3\nx1^3 + x0^2*x3\n");
    const auto r = run({"--budget", "1", "dim", ideal});
    CHECK(r.code == 2);
    CHECK(run({"dim", ideal}).code == 0);
    const auto set = dir.write("s.txt", "# field 32003\nx0^2 + x1^2\nx0*x1\nx1^2 + x2^2\nx2*x3\n");
    CHECK(run({"pencil-rank", set}).code == 2);
}

TEST_CASE("sampled checks are reproducible") {
    TempDir dir;
    const auto pair = dir.write("pair.txt", sample_pair());
    const std::vector<std::string> args{"--seed", "5", "check-regularity", "--pair", pair, "--point", kPoint,
                                        "--samples", "3", "--no-advisory"};
    const auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto d = a.doc();
    CHECK(d["seed"] == 5);
    CHECK(d["result"]["report"]["verdict"] == "pass-sampled");
    const auto cls = run({"classify-point", "--pair", pair, "--point", kPoint});
    CHECK(cls.code == 0);
    CHECK(cls.doc()["result"]["kind"] == "nonsingular");
    CHECK(run({"check-regularity", "--pair", pair, "--point", "1,0,0,0,0,0,0,0,0,0,0"}).code == 1);
}

TEST_CASE("closed-form commands") {
    const auto c = run({"codim-bounds", "--M", "52", "--d1", "27", "--d2", "27"});
    REQUIRE(c.code == 0);
    CHECK(c.out.find("1225") != std::string::npos);
    const auto f = run({"fibration-check", "--m", "1", "--d1", "4", "--d2", "27", "--l1", "2", "--l2", "1"});
    REQUIRE(f.code == 0);
    CHECK(f.out.find("-50") != std::string::npos);
    const auto l = run({"local-bounds", "--nu", "3/2", "--mu", "101/100", "--n", "1"});
    REQUIRE(l.code == 0);
    CHECK(l.doc()["result"]["nu_R_lower"] == "251/150");
}

TEST_CASE("graph commands") {
    TempDir dir;
    const auto g = dir.write("g.json", R"({"N":4,"arrows":[[2,1],[3,2],[4,3],[4,2]],"mu":[2,2,1,1],"n":1})");
    const auto r = run({"nf-graph", g});
    REQUIRE(r.code == 0);
    const auto d = r.doc()["result"];
    CHECK(d["p"] == json::array({"2", "2", "1", "1"}));
    CHECK(d["path_inequality"]["equality"] == true);
    CHECK(d["simplex"]["min"] == "1");

    const auto scan = run({"prop52-scan", "--N", "6"});
    REQUIRE(scan.code == 0);
    CHECK(scan.doc()["result"]["violations"] == 0);
    CHECK(scan.doc()["result"]["graphs"] == 89);
    const auto lp = run({"lp-min", "--scan", "5"});
    REQUIRE(lp.code == 0);
    CHECK(lp.doc()["result"]["below_one"] == 0);
    CHECK(run({"nf-graph", dir.write("bad.json", R"({"N":3,"arrows":[[1,3]]})")}).code == 1);
}

TEST_CASE("batch continues past malformed entries") {
    TempDir dir;
    dir.write("pair.txt", sample_pair());
    dir.write("broken.txt", "# field 32003\nx0^2 +\n");
    const auto manifest = dir.write("manifest.json", json::array({
        {{"pair", "pair.txt"}, {"point", kPoint}, {"condition", "auto"}, {"samples", 2}},
        {{"pair", "broken.txt"}, {"point", kPoint}, {"condition", "auto"}, {"samples", 2}},
    }).dump());
    const auto out = (dir.path() / "out").string();
    const auto r = run({"batch", manifest, "--out", out, "--jobs", "2"});
    REQUIRE(r.code == 0);
    const auto d = r.doc()["result"];
    CHECK(d["total"] == 2);
    CHECK(fs::exists(fs::path(out) / "entry_000.json"));
    CHECK(fs::exists(fs::path(out) / "entry_001.json"));
    CHECK(r.out.find("\"error\": 1") != std::string::npos);
    CHECK(r.out.find("\"pass-sampled\": 1") != std::string::npos);
}

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "noether/cli.hpp"

using namespace noether;

namespace {

struct Run {
    int code;
    Json report;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    Json j;
    try {
        j = Json::parse(out.str());
    } catch (const std::exception&) {
    }
    return {code, j, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("noether_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

const char* kXsq = R"({"ring": {"vars": 1, "names": ["x"], "relations": []}, "generators": ["x^2"]})";

}  // namespace

TEST_CASE("depth compute reports a certified depth with the schema tag") {
    const auto r = run({"depth", "compute", "--ideal", write_temp("xsq.json", kXsq)});
    CHECK(r.code == cli::kOk);
    CHECK(r.report["schema"] == 1);
    CHECK(r.report["depth"] == "(x^2)");
    CHECK(r.report["status"] == "Certified");
}

TEST_CASE("measures classify reports orbit sizes 1, 3, 12") {
    const auto r = run({"measures", "classify", "--mod", "4", "--d", "2"});
    CHECK(r.code == cli::kOk);
    std::vector<std::size_t> sizes;
    for (const auto& o : r.report["ergodic_measures"]) sizes.push_back(o["size"].get<std::size_t>());
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<std::size_t>{1, 3, 12});
    CHECK(r.report["bijection"] == true);
}

TEST_CASE("reports are deterministic") {
    const std::vector<std::string> args{"mat", "center-word", "--mod", "7", "--d", "3", "--unit", "2"};
    const auto a = run(args), b = run(args);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    CHECK(a.report["product_is_scalar"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run({"depth", "compute", "--ideal", "/nonexistent/file.json"}).code == cli::kError);
    CHECK(run({"depth", "compute", "--no-such-flag"}).code == cli::kError);
    CHECK(run({}).code == cli::kError);
    const auto bad = run({"mat", "center-word", "--mod", "7", "--d", "3", "--unit", "3"});
    CHECK(bad.code == cli::kError);
    CHECK(bad.report["error"]["kind"] == "input");
    const auto triple = write_temp("triple1.json",
                                   R"({"ring": {"vars": 0}, "d": 3, "level": ["1"], "kernel": ["2"],
                                       "orbit": {"degree": 1}})");
    const auto v = run({"char", "validate", "--triple", triple});
    CHECK(v.code == cli::kValidationFailure);
    CHECK(v.report["valid"] == false);
}

TEST_CASE("caps are enforced from flags") {
    const auto big = write_temp("big.json", R"({"ring": {"vars": 2, "names": ["x", "y"]},
        "generators": ["3*x^3*y+2*x*y^2-5", "4*x^2*y^3-x+y", "5*y^4+x^3-2*x*y"]})");
    const auto r = run({"--max-gb-pairs", "3", "ideal", "gb", "--ideal", big});
    CHECK(r.code == cli::kError);
    CHECK(r.report["error"]["kind"] == "resource");
    // The caps are restored after the run.
    CHECK(limits().max_gb_pairs == Limits{}.max_gb_pairs);
}

TEST_CASE("caps file") {
    cli::RunConfig cfg;
    cli::apply_caps_file(cfg, write_temp("caps.json", R"({"max_gb_pairs": 17, "seed": 3, "format": "text"})"));
    CHECK(cfg.limits.max_gb_pairs == 17);
    CHECK(cfg.seed == 3);
    CHECK(cfg.format == "text");
    CHECK_THROWS_AS(cli::apply_caps_file(cfg, write_temp("caps_bad.json", R"({"max_pairs": 1})")), ParseError);
}

TEST_CASE("text rendering flattens nested objects") {
    const Json j{{"schema", 1}, {"a", {{"b", "c"}}}, {"list", Json::array({1, 2})}};
    CHECK(cli::render(j, "text") == "schema: 1\na.b: c\nlist: [1,2]\n");
}

TEST_CASE("ideal and ring commands") {
    const auto two = write_temp("two.json", R"({"ring": {"vars": 1, "names": ["x"]}, "generators": ["2"]})");
    const auto x = write_temp("x.json", R"({"ring": {"vars": 1, "names": ["x"]}, "generators": ["x"]})");
    const auto r = run({"ideal", "op", "--op", "intersect", "--a", two, "--b", x});
    CHECK(r.code == cli::kOk);
    CHECK(r.report["result_text"] == "(2*x)");
    CHECK(run({"depth", "commensurable", "--a", two, "--b", x}).report["commensurable"] == false);
    CHECK(run({"ring", "op", "--names", "x,y", "x+y", "x-y"}).report["result"] == "x^2 - y^2");
    const auto m = run({"ideal", "contains", "--ideal", write_temp("xsq2.json", kXsq), "x^3", "x"});
    CHECK(m.report["membership"][0]["member"] == true);
    CHECK(m.report["membership"][1]["member"] == false);
}

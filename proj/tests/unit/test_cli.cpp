#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ffq/cli/run.hpp"
#include "ffq/cli/samples.hpp"

using namespace ffq;
using namespace ffq::cli;
using Json = nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ffq");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "ffq_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("norm anchor through the command line") {
    const Outcome o = invoke({"norm", "--f", "[1]", "--alpha", "1", "--sigma", "0.5", "--k", "1"});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j["command"] == "norm");
    CHECK(j["passed"] == true);
    CHECK(std::abs(j["rows"][0]["norm_sq"].get<double>() - (1.0 + std::numbers::pi / 4)) < 1e-9);

    for (const char* m : {"series", "closed-k1"}) {
        const Outcome s = invoke({"norm", "--f", "[1]", "--alpha", "1", "--sigma", "0.5", "--k", "1", "--method", m});
        REQUIRE(s.code == 0);
        CHECK(std::abs(Json::parse(s.out)["rows"][0]["norm_sq"].get<double>() - (1.0 + std::numbers::pi / 4)) < 1e-12);
    }
}

TEST_CASE("parse errors carry a position") {
    const Outcome o = invoke({"norm", "--f", "[1, [2,]"});
    CHECK(o.code == kParse);
    CHECK(o.out.empty());
    const Json e = Json::parse(o.err)["error"];
    CHECK(e["kind"] == "ParseError");
    CHECK(e["exit_code"] == 2);
    CHECK(e["position"].get<int>() == 8);

    CHECK(invoke({"norm", "--alpha", "abc"}).code == kParse);
    CHECK(invoke({"norm", "--k", "-2"}).code == kParse);
    CHECK(invoke({"bogus"}).code == kParse);
    CHECK(invoke({"norm", "--format", "xml"}).code == kParse);
    CHECK_THROWS_AS(parse_job("{\"command\": \"norm\", \"params\": {\"k\": 1.5}}"), ParseError);
}

TEST_CASE("exit codes by outcome class") {
    // domain: alpha outside (0, 1]
    const Outcome d = invoke({"norm", "--f", "[1]", "--alpha", "1.5"});
    CHECK(d.code == kDomain);
    CHECK(Json::parse(d.err)["error"]["kind"] == "DomainError");

    // domain: not an element of the space
    const Outcome n = invoke({"norm", "--f", "[0, 1]", "--alpha", "1", "--k", "2"});
    CHECK(n.code == kDomain);
    CHECK(Json::parse(n.err)["error"]["kind"] == "NotInSpace");

    // tolerance: the quadrature cap is reached
    const std::string nc = scratch("nc.json").string();
    std::ofstream(nc) << R"({"command": "norm", "function": [1, 1, 1], "params": {"alpha": 0.3},
        "quad": {"nr": 4, "ntheta": 4, "max_refine": 1, "rel_tol": 1e-15}})";
    const Outcome t = invoke({"run", nc});
    CHECK(t.code == kTolerance);
    CHECK(Json::parse(t.err)["error"]["kind"] == "NoConvergence");

    // an assertion inside a job never exits 0
    JobSpec job;
    job.command = Command::verify;
    job.suite = "nonexistent";
    CHECK(run(job).exit_code != kSuccess);
}

TEST_CASE("job specs round trip byte for byte") {
    JobSpec job;
    job.command = Command::qnorm;
    job.function = parse_function("[[1, 0, 0.5, -0.25], [0.1, 0.2, 0.3, 0.4]]");
    job.g = parse_function("[[0.5, -1]]");
    job.params = {0.3, 1.0, 0.123456789012345678, Order::infinite()};
    job.frame = FrameSpec{units::e2, units::e3};
    job.quad.rel_tol = 3.3e-10;
    job.method = NormMethod::series;
    job.points = {{0.1, 0.2}, {0.7, 0.0}};
    job.zeta = Complex{-0.2, 0.4};
    job.grid = {{0.3, 1.0}, {0.2}, {Order(1), Order::infinite()}};
    job.seed = 987654321;
    job.format = OutputFormat::csv;

    const std::string text = serialize(job);
    CHECK(serialize(parse_job(text)) == text);
    CHECK(serialize(parse_job(serialize(JobSpec{}))) == serialize(JobSpec{}));
    CHECK(Json::parse(text)["params"]["k"] == "inf");
    CHECK(parse_job(text).params.sigma == job.params.sigma);

    const auto path = scratch("job.json");
    write(path, text);
    const Outcome o = invoke({"run", path.string(), "--print-job"});
    CHECK(o.code == 0);
    CHECK(o.out == text);
}

TEST_CASE("table sweeps") {
    const std::vector<std::string> args{"table",        "--f",          "[0, 1]", "--grid-alpha", "1,0.3,0.7",
                                        "--grid-sigma", "0.2,0.5,0.8", "--grid-k", "inf,1"};
    const Outcome a = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(line_count(a.out) == 19);
    CHECK(a.out.rfind("alpha,sigma,k,method,norm_sq,point_term,field_term,status\n", 0) == 0);
    CHECK(a.out.find(",inf,") != std::string::npos);
    CHECK(a.out.find("0.29999999999999999,0.20000000000000001,1,") != std::string::npos);
    // lexicographic: alpha first, then sigma, then k with inf last
    const auto first_row = a.out.substr(a.out.find('\n') + 1);
    CHECK(first_row.rfind("0.29999999999999999,0.20000000000000001,1,", 0) == 0);

    const Outcome b = invoke(args);
    CHECK(b.out == a.out);

    auto with_file = args;
    const auto path = scratch("table.csv");
    with_file.insert(with_file.end(), {"--out", path.string()});
    CHECK(invoke(with_file).code == 0);
    CHECK(slurp(path) == a.out);

    // alpha = 1, k = 2 cells are reported, not aborted.
    const Outcome c = invoke({"table", "--f", "[0, 1]", "--grid-alpha", "1", "--grid-sigma", "0.5", "--grid-k", "2"});
    CHECK(c.code == 0);
    CHECK(c.out.find("not_in_space") != std::string::npos);
}

TEST_CASE("output formats") {
    Report r;
    r.command = "x";
    r.columns = {"a", "b", "c"};
    r.add_row({0.1, 7LL, std::string("p,q")});
    r.add_row({std::numeric_limits<double>::infinity(), -1LL, std::string("ok")});
    CHECK(to_csv(r) == "a,b,c\n0.10000000000000001,7,\"p,q\"\ninf,-1,ok\n");
    const Json j = Json::parse(to_json(r));
    CHECK(j["rows"][0]["a"].get<double>() == 0.1);
    CHECK(j["rows"][1]["a"] == "inf");
    CHECK(j["columns"].size() == 3);
}

TEST_CASE("defaults from FFQ_CONFIG") {
    const auto cfg = scratch("defaults.json");
    write(cfg, R"({"params": {"alpha": 0.25, "k": "inf"}, "format": "csv"})");
    setenv("FFQ_CONFIG", cfg.string().c_str(), 1);
    const Outcome o = invoke({"norm", "--f", "[1]", "--print-job"});
    const Outcome t = invoke({"norm", "--f", "[1]", "--sigma", "0.5"});
    unsetenv("FFQ_CONFIG");
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j["params"]["alpha"] == 0.25);
    CHECK(j["params"]["k"] == "inf");
    CHECK(j["format"] == "csv");
    CHECK(t.out.rfind("method,norm_sq", 0) == 0);

    setenv("FFQ_CONFIG", scratch("missing.json").string().c_str(), 1);
    CHECK(invoke({"norm", "--f", "[1]"}).code == kParse);
    unsetenv("FFQ_CONFIG");
}

TEST_CASE("function files and frames") {
    const auto f = scratch("f.json");
    write(f, "[[0.2, 0.1, 0, 0], [0, 0, 1, 0]]");
    const Outcome o = invoke({"qnorm", "--f", "@" + f.string(), "--frame", R"({"i": [0, 1, 0], "j": [0, 0, 1]})"});
    REQUIRE(o.code == 0);
    const Json j = Json::parse(o.out);
    CHECK(j["rows"][0]["norm_sq"].get<double>() ==
          doctest::Approx(j["rows"][0]["part1"].get<double>() + j["rows"][0]["part2"].get<double>()));
    CHECK(invoke({"qnorm", "--f", "[1]", "--frame", "[[0,1,0],[0,1,0]]"}).code == kDomain);
    CHECK(invoke({"norm", "--f", "[[1,0,0,1]]"}).code == kDomain);
}

TEST_CASE("derivative and kernel commands") {
    const Outcome d = invoke({"deriv", "--f", "[0, 1]", "--alpha", "1", "--k", "1", "--sigma", "0.4", "--z",
                              "[[0.3, -0.4], 0.5]"});
    REQUIRE(d.code == 0);
    const Json j = Json::parse(d.out);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["value_re"].get<double>() == doctest::Approx(0.6 * 0.3 + 0.4));
    CHECK(j["rows"][0]["value_im"].get<double>() == doctest::Approx(-0.6 * 0.4));

    const Outcome q = invoke({"qderiv", "--f", "[[1,0,0,0],[0,0,1,0],[0,0.5,0,0.5]]", "--alpha", "0.6", "--z",
                              "[0.2, 0.5]"});
    CHECK(q.code == 0);

    const Outcome k = invoke({"kernel", "--alpha", "1", "--sigma", "0.5", "--z", "[0.1, 0.6]", "--zeta", "[0.2, -0.3]"});
    CHECK(k.code == 0);
    CHECK(Json::parse(k.out)["rows"][0]["path_diff"].get<double>() < 1e-9);
    CHECK(invoke({"deriv", "--f", "[1]", "--z", "[-0.5, 0]"}).code == kDomain);
}

TEST_CASE("verification suites") {
    for (const char* s : {"anchors", "limits", "discrepancy", "bergman", "prop1"}) {
        const Outcome o = invoke({"verify", "--suite", s, "--format", "csv"});
        INFO(s);
        CHECK(o.code == 0);
    }
    const Outcome disc = invoke({"verify", "--suite", "discrepancy"});
    const Json j = Json::parse(disc.out);
    for (const auto& row : j["rows"]) CHECK(row["sigma2_ratio"].get<double>() == doctest::Approx(2 * std::numbers::pi));

    for (const char* s : {"split", "series"}) {
        INFO(s);
        CHECK(invoke({"qverify", "--suite", s}).code == 0);
    }
}

TEST_CASE("samplers are deterministic") {
    Sampler a(5), b(5);
    for (int i = 0; i < 10; ++i) {
        CHECK(a.complex_poly(3) == b.complex_poly(3));
        const Complex z = a.slit_point(0.1, 0.9);
        CHECK(z == b.slit_point(0.1, 0.9));
        CHECK(in_slit_disk(z));
        const SliceFrame f = a.frame();
        CHECK(std::abs(dot(f.i(), f.j())) < 1e-14);
        b.frame();
    }
}

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffq/cli/run.hpp"
#include "ffq/errors.hpp"

namespace ffq::cli {

namespace {

using Json = nlohmann::json;

struct Flags {
    std::string f, g, alpha, beta, sigma, k, frame, nr, ntheta, rel_tol, out, format, method, z, zeta, suite,
        grid_alpha, grid_sigma, grid_k, seed;
    bool print_job = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string inline_or_file(const std::string& v) { return !v.empty() && v[0] == '@' ? read_file(v.substr(1)) : v; }

double to_double(const std::string& v, const char* flag) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used == v.size()) return d;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("--") + flag + ": '" + v + "' is not a number");
}

int to_int(const std::string& v, const char* flag) {
    const double d = to_double(v, flag);
    if (d != static_cast<int>(d)) throw ParseError(std::string("--") + flag + " must be an integer");
    return static_cast<int>(d);
}

Order to_order(const std::string& v) {
    try {
        return Order::parse(v);
    } catch (const DomainError& e) {
        throw ParseError(std::string("--k: ") + e.what());
    }
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

Json json_arg(const std::string& text, const char* flag) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("--") + flag + ": " + e.what(), e.byte);
    }
}

Complex point_from(const Json& j, const char* flag) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw ParseError(std::string("--") + flag + ": points are numbers or [re, im]");
}

Quaternion unit_from(const Json& j) {
    if (j.is_array() && j.size() == 3 && j[0].is_number() && j[1].is_number() && j[2].is_number())
        return {0.0, j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
    if (j.is_array() && j.size() == 4)
        return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
    throw ParseError("--frame: units are [x, y, z] or [w, x, y, z]");
}

void apply(const Flags& fl, JobSpec& job, bool format_given) {
    if (!fl.f.empty()) job.function = parse_function(inline_or_file(fl.f));
    if (!fl.g.empty()) job.g = parse_function(inline_or_file(fl.g));
    if (!fl.alpha.empty()) job.params.alpha = to_double(fl.alpha, "alpha");
    if (!fl.beta.empty()) job.params.beta = to_double(fl.beta, "beta");
    if (!fl.sigma.empty()) job.params.sigma = to_double(fl.sigma, "sigma");
    if (!fl.k.empty()) job.params.k = to_order(fl.k);
    if (!fl.frame.empty()) {
        const Json j = json_arg(inline_or_file(fl.frame), "frame");
        if (j.is_object() && j.contains("i") && j.contains("j"))
            job.frame = FrameSpec{unit_from(j.at("i")), unit_from(j.at("j"))};
        else if (j.is_array() && j.size() == 2)
            job.frame = FrameSpec{unit_from(j[0]), unit_from(j[1])};
        else
            throw ParseError("--frame expects {\"i\": [...], \"j\": [...]} or [[...], [...]]");
    }
    if (!fl.nr.empty()) job.quad.nr = to_int(fl.nr, "quad-nr");
    if (!fl.ntheta.empty()) job.quad.ntheta = to_int(fl.ntheta, "quad-ntheta");
    if (!fl.rel_tol.empty()) job.quad.rel_tol = to_double(fl.rel_tol, "rel-tol");
    if (!fl.out.empty()) job.output = fl.out;
    if (!fl.format.empty()) job.format = parse_format(fl.format);
    else if (!format_given && job.command == Command::table) job.format = OutputFormat::csv;
    if (!fl.method.empty()) job.method = parse_method(fl.method);
    if (!fl.z.empty()) {
        const Json j = json_arg(fl.z, "z");
        job.points.clear();
        if (j.is_array() && !j.empty() && j[0].is_array())
            for (const auto& p : j) job.points.push_back(point_from(p, "z"));
        else
            job.points.push_back(point_from(j, "z"));
    }
    if (!fl.zeta.empty()) job.zeta = point_from(json_arg(fl.zeta, "zeta"), "zeta");
    if (!fl.suite.empty()) job.suite = fl.suite;
    if (!fl.grid_alpha.empty()) {
        job.grid.alpha.clear();
        for (const auto& v : split_list(fl.grid_alpha)) job.grid.alpha.push_back(to_double(v, "grid-alpha"));
    }
    if (!fl.grid_sigma.empty()) {
        job.grid.sigma.clear();
        for (const auto& v : split_list(fl.grid_sigma)) job.grid.sigma.push_back(to_double(v, "grid-sigma"));
    }
    if (!fl.grid_k.empty()) {
        job.grid.k.clear();
        for (const auto& v : split_list(fl.grid_k)) job.grid.k.push_back(to_order(v));
    }
    if (!fl.seed.empty()) {
        const double d = to_double(fl.seed, "seed");
        if (d < 0 || d != static_cast<double>(static_cast<std::uint64_t>(d))) throw ParseError("--seed must be a non-negative integer");
        job.seed = static_cast<std::uint64_t>(d);
    }
}

void add_flags(CLI::App* sub, Flags& fl) {
    sub->add_option("--f", fl.f, "coefficients as JSON or @file");
    sub->add_option("--g", fl.g, "second function (inner product)");
    sub->add_option("--alpha", fl.alpha, "fractal order in (0, 1]");
    sub->add_option("--beta", fl.beta, "power of f in [0, 1]");
    sub->add_option("--sigma", fl.sigma, "proportional blend in [0, 1]");
    sub->add_option("--k", fl.k, "truncation order: integer or inf");
    sub->add_option("--frame", fl.frame, "slice frame {\"i\": [x,y,z], \"j\": [x,y,z]}");
    sub->add_option("--quad-nr", fl.nr, "radial Gauss-Legendre nodes per panel");
    sub->add_option("--quad-ntheta", fl.ntheta, "angular Gauss-Legendre nodes per panel");
    sub->add_option("--rel-tol", fl.rel_tol, "quadrature relative tolerance");
    sub->add_option("--out", fl.out, "output path (stdout when omitted)");
    sub->add_option("--format", fl.format, "json or csv");
    sub->add_option("--method", fl.method, "quad, series or closed-k1");
    sub->add_option("--z", fl.z, "point [re, im] or list of points");
    sub->add_option("--zeta", fl.zeta, "kernel second argument [re, im]");
    sub->add_option("--suite", fl.suite, "verification suite");
    sub->add_option("--grid-alpha", fl.grid_alpha, "comma-separated alpha values");
    sub->add_option("--grid-sigma", fl.grid_sigma, "comma-separated sigma values");
    sub->add_option("--grid-k", fl.grid_k, "comma-separated k values (inf allowed)");
    sub->add_option("--seed", fl.seed, "seed for random suites");
    sub->add_flag("--print-job", fl.print_job, "print the canonical job JSON and exit");
}

int finish(const JobSpec& job, bool print_job, std::ostream& out, std::ostream& err) {
    if (print_job) {
        out << serialize(job);
        return kSuccess;
    }
    const RunResult r = run(job);
    if (!r.artifact.empty() && job.output.empty()) out << r.artifact;
    if (!r.error_record.empty()) err << r.error_record;
    return r.exit_code;
}

}  // namespace

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fractal-fractional Dirichlet-type norms on the slit disk and quaternionic slices", "ffq"};
    app.require_subcommand(1);
    Flags fl;
    std::string job_file;
    bool run_print = false;
    const std::vector<Command> commands{Command::deriv,  Command::qderiv,  Command::norm,  Command::qnorm,
                                        Command::kernel, Command::verify,  Command::qverify, Command::table};
    std::vector<std::pair<CLI::App*, Command>> subs;
    const std::map<Command, const char*> about{
        {Command::deriv, "fractal-fractional derivative of a complex polynomial at points"},
        {Command::qderiv, "slice derivative of a quaternionic polynomial, split and direct"},
        {Command::norm, "Dirichlet-type norm (and inner product with --g) of a complex polynomial"},
        {Command::qnorm, "Dirichlet-type norm of a quaternionic polynomial on a slice"},
        {Command::kernel, "kernel K_1/2(z, zeta) along two slit paths"},
        {Command::verify, "complex verification suite (norms|anchors|reproducing|prop1|limits|discrepancy|bergman)"},
        {Command::qverify, "quaternionic verification suite (split|bound|kernel|series)"},
        {Command::table, "norms over an alpha x sigma x k grid"}};
    for (const Command c : commands) {
        CLI::App* sub = app.add_subcommand(to_string(c), about.at(c));
        add_flags(sub, fl);
        subs.emplace_back(sub, c);
    }
    CLI::App* run_sub = app.add_subcommand("run", "run a JSON job file");
    run_sub->add_option("job", job_file, "job JSON path")->required();
    run_sub->add_flag("--print-job", run_print, "print the canonical job JSON and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << error_record("ParseError", e.what(), kParse);
        return kParse;
    }

    try {
        if (run_sub->parsed()) return finish(parse_job(read_file(job_file)), run_print, out, err);
        JobSpec job;
        bool format_given = false;
        if (const char* cfg = std::getenv("FFQ_CONFIG"); cfg && *cfg) {
            const std::string text = read_file(cfg);
            job = merge_job(job, text);
            format_given = Json::parse(text).contains("format");
        }
        for (const auto& [sub, c] : subs)
            if (sub->parsed()) job.command = c;
        apply(fl, job, format_given);
        return finish(job, fl.print_job, out, err);
    } catch (const ParseError& e) {
        err << error_record("ParseError", e.what(), kParse, e.position());
        return kParse;
    } catch (const DomainError& e) {
        err << error_record(e.kind(), e.what(), kDomain);
        return kDomain;
    }
}

}  // namespace ffq::cli

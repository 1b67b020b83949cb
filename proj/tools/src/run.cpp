#include "ffq/cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <json.hpp>

#include "ffq/errors.hpp"
#include "ffq/ff_quaternionic.hpp"
#include "suites.hpp"

namespace ffq::cli {

using Json = nlohmann::ordered_json;

namespace {

std::string csv_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return fmt::format("{:.17g}", *d);
    if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

Json json_cell(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (std::isfinite(*d)) return *d;
        return std::isnan(*d) ? "nan" : (*d > 0 ? "inf" : "-inf");
    }
    if (const auto* i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

CPowerSeries complex_function(const JobSpec& job) {
    if (job.function.quaternionic) throw DomainError("this command needs complex coefficients");
    return job.function.as_complex();
}

SliceFrame frame_of(const JobSpec& job) { return job.frame ? job.frame->make() : SliceFrame::standard(); }

std::vector<Complex> points_or(const JobSpec& job, Complex fallback) {
    return job.points.empty() ? std::vector<Complex>{fallback} : job.points;
}

Report run_deriv(const JobSpec& job) {
    Report r;
    r.columns = {"z_re", "z_im", "value_re", "value_im"};
    const FFEvaluator D(complex_function(job), job.params);
    for (const Complex z : points_or(job, {0.5, 0.0})) {
        const Complex v = D(z);
        r.add_row({z.real(), z.imag(), v.real(), v.imag()});
    }
    return r;
}

Report run_qderiv(const JobSpec& job) {
    Report r;
    r.columns = {"z_re", "z_im", "w", "x", "y", "z", "dual_difference"};
    const QPowerSeries f = job.function.as_quaternion();
    const SliceFrame frame = frame_of(job);
    for (const Complex z : points_or(job, {0.5, 0.0})) {
        const DualEvaluation d = ff_eval_q_dual(f, job.params, frame, z);
        r.add_row({z.real(), z.imag(), d.split.w, d.split.x, d.split.y, d.split.z, d.difference});
        if (!(d.difference <= 1e-11)) r.passed = false;
    }
    return r;
}

DirichletValue complex_norm(const CPowerSeries& f, const JobSpec& job) {
    switch (job.method) {
        case NormMethod::quadrature: return dirichlet_norm_quad(f, job.params, job.quad);
        case NormMethod::series:
            return dirichlet_norm_series(f, job.params, coefficient_integrals(job.params, f.degree(), job.quad));
        case NormMethod::closed_k1: return dirichlet_norm_closed_k1(f, job.params);
    }
    throw DomainError("unknown norm method");
}

Report run_norm(const JobSpec& job) {
    Report r;
    const CPowerSeries f = complex_function(job);
    const DirichletValue v = complex_norm(f, job);
    r.columns = {"method", "norm_sq", "point_term", "field_term", "error"};
    std::vector<Cell> row{to_string(v.method), v.norm_sq, v.point_term, v.field_term, v.error};
    if (job.g) {
        if (job.g->quaternionic) throw DomainError("g must have complex coefficients");
        const Complex ip = inner_product_c(f, job.g->as_complex(), job.params, job.quad);
        r.columns.insert(r.columns.end(), {"inner_re", "inner_im"});
        row.insert(row.end(), {ip.real(), ip.imag()});
    }
    r.add_row(std::move(row));
    return r;
}

Report run_qnorm(const JobSpec& job) {
    Report r;
    const QPowerSeries f = job.function.as_quaternion();
    const SliceFrame frame = frame_of(job);
    QDirichletValue v;
    switch (job.method) {
        case NormMethod::quadrature: v = qdirichlet_norm(f, job.params, frame, job.quad); break;
        case NormMethod::series:
            v = qdirichlet_norm_series(f, job.params, frame, coefficient_integrals(job.params, f.degree(), job.quad));
            break;
        case NormMethod::closed_k1:
            v = qdirichlet_norm_series(f, job.params, frame, coefficient_integrals_k1(job.params, f.degree()));
            v.method = NormMethod::closed_k1;
            break;
    }
    r.columns = {"method", "norm_sq", "part1", "part2", "error"};
    r.add_row({to_string(v.method), v.norm_sq, v.part1, v.part2, v.error});
    if (job.g) {
        const Quaternion ip = qdirichlet_inner_product(f, job.g->as_quaternion(), job.params, frame, job.quad);
        r.summary = {{"inner_w", ip.w}, {"inner_x", ip.x}, {"inner_y", ip.y}, {"inner_z", ip.z}};
    }
    return r;
}

Report run_kernel(const JobSpec& job) {
    Report r;
    r.columns = {"z_re", "z_im", "zeta_re", "zeta_im", "K_re", "K_im", "K_detour_re", "K_detour_im", "path_diff"};
    const Complex zeta = job.zeta.value_or(Complex{});
    const QuadratureSpec inner = job.quad.with_tolerance(std::min(job.quad.rel_tol, 1e-12));
    for (const Complex z : points_or(job, {0.7, 0.0})) {
        const Complex k1 = kernel_K_half(z, zeta, job.params, inner);
        const double via = std::abs(z) > 0.4 ? 0.25 : 0.8;
        const Complex k2 = kernel_K_half(build_detour_path(z, via), zeta, job.params, inner);
        const double diff = std::abs(k1 - k2);
        r.add_row({z.real(), z.imag(), zeta.real(), zeta.imag(), k1.real(), k1.imag(), k2.real(), k2.imag(), diff});
        if (!(diff < 1e-9)) r.passed = false;
    }
    return r;
}

std::vector<double> sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Report run_table(const JobSpec& job) {
    Report r;
    r.columns = {"alpha", "sigma", "k", "method", "norm_sq", "point_term", "field_term", "status"};
    const CPowerSeries f = complex_function(job);
    const std::vector<double> alphas = sorted(job.grid.alpha.empty() ? std::vector<double>{job.params.alpha} : job.grid.alpha);
    const std::vector<double> sigmas = sorted(job.grid.sigma.empty() ? std::vector<double>{job.params.sigma} : job.grid.sigma);
    std::vector<Order> ks = job.grid.k.empty() ? std::vector<Order>{job.params.k} : job.grid.k;
    std::sort(ks.begin(), ks.end());
    for (const double a : alphas) {
        for (const double s : sigmas) {
            for (const Order k : ks) {
                JobSpec cell = job;
                cell.params.alpha = a;
                cell.params.sigma = s;
                cell.params.k = k;
                try {
                    const DirichletValue v = complex_norm(f, cell);
                    r.add_row({a, s, k.to_string(), to_string(v.method), v.norm_sq, v.point_term, v.field_term,
                               std::string("ok")});
                } catch (const NotInSpace&) {
                    const double inf = std::numeric_limits<double>::infinity();
                    r.add_row({a, s, k.to_string(), to_string(job.method), inf, point_term_only(f, cell.params), inf,
                               std::string("not_in_space")});
                }
            }
        }
    }
    return r;
}

}  // namespace

double point_term_only(const CPowerSeries& f, const FFParams& p) { return p.alpha * std::norm(eval(f, {0.5, 0.0})); }

std::string to_csv(const Report& r) {
    std::string out;
    for (std::size_t c = 0; c < r.columns.size(); ++c) out += (c ? "," : "") + r.columns[c];
    out += "\n";
    for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_cell(row[c]);
        out += "\n";
    }
    return out;
}

std::string to_json(const Report& r) {
    Json j;
    j["command"] = r.command;
    j["passed"] = r.passed;
    j["columns"] = r.columns;
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json o = Json::object();
        for (std::size_t c = 0; c < row.size() && c < r.columns.size(); ++c) o[r.columns[c]] = json_cell(row[c]);
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    Json summary = Json::object();
    for (const auto& [k, v] : r.summary) summary[k] = json_cell(v);
    j["summary"] = std::move(summary);
    return j.dump(2) + "\n";
}

std::string error_record(const std::string& kind, const std::string& message, int exit_code,
                         std::optional<std::size_t> position) {
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    e["exit_code"] = exit_code;
    if (position) e["position"] = *position;
    Json j;
    j["error"] = std::move(e);
    return j.dump() + "\n";
}

Report execute(const JobSpec& job) {
    job.params.validate();
    job.quad.validate();
    Report r;
    switch (job.command) {
        case Command::deriv: r = run_deriv(job); break;
        case Command::qderiv: r = run_qderiv(job); break;
        case Command::norm: r = run_norm(job); break;
        case Command::qnorm: r = run_qnorm(job); break;
        case Command::kernel: r = run_kernel(job); break;
        case Command::verify: r = verify_suite(job); break;
        case Command::qverify: r = qverify_suite(job); break;
        case Command::table: r = run_table(job); break;
    }
    r.command = to_string(job.command);
    return r;
}

RunResult run(const JobSpec& job) {
    RunResult out;
    try {
        const Report r = execute(job);
        out.artifact = job.format == OutputFormat::csv ? to_csv(r) : to_json(r);
        out.exit_code = r.passed ? kSuccess : kTolerance;
        if (!r.passed)
            out.error_record = error_record("AssertionFailed", "one or more checks in the job failed", kTolerance);
        if (!job.output.empty()) {
            std::ofstream f(job.output, std::ios::binary);
            if (!f) throw DomainError("cannot open output file '" + job.output + "'");
            f << out.artifact;
        }
    } catch (const ParseError& e) {
        out = {kParse, {}, error_record("ParseError", e.what(), kParse, e.position())};
    } catch (const ToleranceError& e) {
        out = {kTolerance, {}, error_record(e.kind(), e.what(), kTolerance)};
    } catch (const DomainError& e) {
        out = {kDomain, {}, error_record(e.kind(), e.what(), kDomain)};
    } catch (const std::exception& e) {
        out = {kInternal, {}, error_record("InternalError", e.what(), kInternal)};
    }
    return out;
}

}  // namespace ffq::cli

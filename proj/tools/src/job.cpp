#include "ffq/cli/job.hpp"

#include <json.hpp>

#include "ffq/errors.hpp"

namespace ffq::cli {

using Json = nlohmann::ordered_json;

std::string to_string(Command c) {
    switch (c) {
        case Command::deriv: return "deriv";
        case Command::qderiv: return "qderiv";
        case Command::norm: return "norm";
        case Command::qnorm: return "qnorm";
        case Command::kernel: return "kernel";
        case Command::verify: return "verify";
        case Command::qverify: return "qverify";
        case Command::table: return "table";
    }
    return "unknown";
}

std::string to_string(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

Command parse_command(std::string_view s) {
    for (Command c : {Command::deriv, Command::qderiv, Command::norm, Command::qnorm, Command::kernel, Command::verify,
                      Command::qverify, Command::table})
        if (s == to_string(c)) return c;
    throw ParseError("unknown command '" + std::string(s) + "'");
}

OutputFormat parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw ParseError("unknown output format '" + std::string(s) + "' (json|csv)");
}

NormMethod parse_method(std::string_view s) {
    if (s == "quad" || s == "quadrature") return NormMethod::quadrature;
    if (s == "series") return NormMethod::series;
    if (s == "closed-k1") return NormMethod::closed_k1;
    throw ParseError("unknown norm method '" + std::string(s) + "' (quad|series|closed-k1)");
}

CPowerSeries FunctionSpec::as_complex() const {
    if (quaternionic) throw ParseError("expected complex coefficients, got quaternionic ones");
    std::vector<Complex> c;
    c.reserve(coeffs.size());
    for (const auto& q : coeffs) c.emplace_back(q.w, q.x);
    return CPowerSeries(std::move(c));
}

QPowerSeries FunctionSpec::as_quaternion() const { return QPowerSeries(coeffs); }

namespace {

double number(const Json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

Json parse_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

FunctionSpec function_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("function must be a JSON array of coefficients");
    FunctionSpec f;
    for (const auto& c : j) {
        if (c.is_number()) {
            f.coeffs.emplace_back(c.get<double>());
        } else if (c.is_array() && c.size() == 2) {
            f.coeffs.emplace_back(number(c[0], "coefficient"), number(c[1], "coefficient"));
        } else if (c.is_array() && c.size() == 4) {
            f.quaternionic = true;
            f.coeffs.emplace_back(number(c[0], "coefficient"), number(c[1], "coefficient"),
                                  number(c[2], "coefficient"), number(c[3], "coefficient"));
        } else {
            throw ParseError("each coefficient must be a number, [re, im] or [w, x, y, z]");
        }
    }
    return f;
}

Json function_to_json(const FunctionSpec& f) {
    Json out = Json::array();
    for (const auto& q : f.coeffs) {
        if (f.quaternionic)
            out.push_back({q.w, q.x, q.y, q.z});
        else
            out.push_back({q.w, q.x});
    }
    return out;
}

Json quaternion_to_json(const Quaternion& q) { return Json{q.w, q.x, q.y, q.z}; }

Quaternion quaternion_from_json(const Json& j) {
    if (!j.is_array() || (j.size() != 3 && j.size() != 4))
        throw ParseError("frame units must be [x, y, z] or [w, x, y, z]");
    if (j.size() == 3) return {0.0, number(j[0], "frame"), number(j[1], "frame"), number(j[2], "frame")};
    return {number(j[0], "frame"), number(j[1], "frame"), number(j[2], "frame"), number(j[3], "frame")};
}

Json complex_to_json(Complex z) { return Json{z.real(), z.imag()}; }

Complex complex_from_json(const Json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2) return {number(j[0], "point"), number(j[1], "point")};
    throw ParseError("points must be numbers or [re, im]");
}

Json order_to_json(Order k) {
    if (k.is_infinite()) return "inf";
    return k.value();
}

Order order_from_json(const Json& j) {
    try {
        if (j.is_string()) return Order::parse(j.get<std::string>());
        if (j.is_number_unsigned()) return Order(j.get<unsigned>());
        if (j.is_number_integer() && j.get<long long>() >= 0) return Order(static_cast<unsigned>(j.get<long long>()));
    } catch (const DomainError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("k must be a non-negative integer or \"inf\"");
}

Json to_json(const JobSpec& job) {
    Json j;
    j["command"] = to_string(job.command);
    j["function"] = function_to_json(job.function);
    j["g"] = job.g ? function_to_json(*job.g) : Json(nullptr);
    j["params"] = {{"alpha", job.params.alpha},
                   {"beta", job.params.beta},
                   {"sigma", job.params.sigma},
                   {"k", order_to_json(job.params.k)}};
    j["frame"] = job.frame ? Json{{"i", quaternion_to_json(job.frame->i)}, {"j", quaternion_to_json(job.frame->j)}}
                           : Json(nullptr);
    j["quad"] = {{"nr", job.quad.nr},
                 {"ntheta", job.quad.ntheta},
                 {"panels_r", job.quad.panels_r},
                 {"panels_theta", job.quad.panels_theta},
                 {"rel_tol", job.quad.rel_tol},
                 {"max_refine", job.quad.max_refine}};
    j["method"] = to_string(job.method);
    Json pts = Json::array();
    for (const Complex z : job.points) pts.push_back(complex_to_json(z));
    j["points"] = pts;
    j["zeta"] = job.zeta ? complex_to_json(*job.zeta) : Json(nullptr);
    j["suite"] = job.suite;
    Json ks = Json::array();
    for (const Order k : job.grid.k) ks.push_back(order_to_json(k));
    j["grid"] = {{"alpha", job.grid.alpha}, {"sigma", job.grid.sigma}, {"k", ks}};
    j["seed"] = job.seed;
    j["output"] = job.output;
    j["format"] = to_string(job.format);
    return j;
}

std::vector<double> doubles(const Json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<double> out;
    for (const auto& v : j) out.push_back(number(v, what));
    return out;
}

JobSpec from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("job must be a JSON object");
    JobSpec job;
    try {
        if (j.contains("command")) job.command = parse_command(j.at("command").get<std::string>());
        if (j.contains("function")) job.function = function_from_json(j.at("function"));
        if (j.contains("g") && !j.at("g").is_null()) job.g = function_from_json(j.at("g"));
        if (j.contains("params")) {
            const Json& p = j.at("params");
            if (p.contains("alpha")) job.params.alpha = number(p.at("alpha"), "alpha");
            if (p.contains("beta")) job.params.beta = number(p.at("beta"), "beta");
            if (p.contains("sigma")) job.params.sigma = number(p.at("sigma"), "sigma");
            if (p.contains("k")) job.params.k = order_from_json(p.at("k"));
        }
        if (j.contains("frame") && !j.at("frame").is_null())
            job.frame = FrameSpec{quaternion_from_json(j.at("frame").at("i")),
                                  quaternion_from_json(j.at("frame").at("j"))};
        if (j.contains("quad")) {
            const Json& q = j.at("quad");
            if (q.contains("nr")) job.quad.nr = q.at("nr").get<int>();
            if (q.contains("ntheta")) job.quad.ntheta = q.at("ntheta").get<int>();
            if (q.contains("panels_r")) job.quad.panels_r = q.at("panels_r").get<int>();
            if (q.contains("panels_theta")) job.quad.panels_theta = q.at("panels_theta").get<int>();
            if (q.contains("rel_tol")) job.quad.rel_tol = number(q.at("rel_tol"), "rel_tol");
            if (q.contains("max_refine")) job.quad.max_refine = q.at("max_refine").get<int>();
        }
        if (j.contains("method")) job.method = parse_method(j.at("method").get<std::string>());
        if (j.contains("points")) {
            const Json& pts = j.at("points");
            if (!pts.is_array()) throw ParseError("points must be an array");
            for (const auto& z : pts) job.points.push_back(complex_from_json(z));
        }
        if (j.contains("zeta") && !j.at("zeta").is_null()) job.zeta = complex_from_json(j.at("zeta"));
        if (j.contains("suite")) job.suite = j.at("suite").get<std::string>();
        if (j.contains("grid")) {
            const Json& g = j.at("grid");
            if (g.contains("alpha")) job.grid.alpha = doubles(g.at("alpha"), "grid.alpha");
            if (g.contains("sigma")) job.grid.sigma = doubles(g.at("sigma"), "grid.sigma");
            if (g.contains("k"))
                for (const auto& k : g.at("k")) job.grid.k.push_back(order_from_json(k));
        }
        if (j.contains("seed")) job.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("output")) job.output = j.at("output").get<std::string>();
        if (j.contains("format")) job.format = parse_format(j.at("format").get<std::string>());
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
    return job;
}

}  // namespace

FunctionSpec parse_function(std::string_view json_text) {
    const Json j = parse_text(json_text);
    try {
        return function_from_json(j);
    } catch (const Json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string serialize(const JobSpec& job) { return to_json(job).dump(2) + "\n"; }

JobSpec parse_job(std::string_view json_text) { return from_json(parse_text(json_text)); }

JobSpec merge_job(JobSpec base, std::string_view json_text) {
    Json merged = to_json(base);
    const Json overlay = parse_text(json_text);
    if (!overlay.is_object()) throw ParseError("defaults must be a JSON object");
    merged.merge_patch(overlay);
    return from_json(merged);
}

}  // namespace ffq::cli

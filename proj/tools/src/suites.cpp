#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <fmt/format.h>

#include "ffq/cli/samples.hpp"
#include "ffq/errors.hpp"
#include "ffq/ff_quaternionic.hpp"
#include "ffq/ff_real.hpp"

namespace ffq::cli {

namespace {

constexpr double kPi = std::numbers::pi;

struct Labeled {
    std::string label;
    CPowerSeries f;
};

std::vector<Labeled> norm_functions(Sampler& s) {
    std::vector<Labeled> out;
    for (std::size_t n = 0; n <= 6; ++n) {
        std::vector<Complex> c(n + 1);
        c[n] = 1.0;
        out.push_back({fmt::format("z^{}", n), CPowerSeries(std::move(c))});
    }
    for (int i = 1; i <= 3; ++i) out.push_back({fmt::format("rand#{}", i), s.complex_poly(6)});
    return out;
}

const std::vector<double> kAlphas{0.3, 0.7, 1.0};
const std::vector<double> kSigmas{0.2, 0.5, 0.8};
const std::vector<Order> kOrders{Order(1), Order(2), Order::infinite()};

std::string status(bool ok) { return ok ? "ok" : "fail"; }

Report suite_norms(const JobSpec& job) {
    Report r;
    r.columns = {"f", "alpha", "sigma", "k", "series", "quadrature", "rel_diff", "status"};
    Sampler s(job.seed);
    const auto fs = norm_functions(s);
    double worst = 0.0;
    long long skipped = 0;
    for (const double a : kAlphas) {
        for (const Order k : kOrders) {
            FFParams base{a, 1.0, 0.5, k};
            std::optional<CoefficientIntegrals> ci;
            try {
                ci = coefficient_integrals(base, 6, job.quad);
            } catch (const NotInSpace&) {
            }
            for (const double sg : kSigmas) {
                const FFParams p{a, 1.0, sg, k};
                for (const auto& [label, f] : fs) {
                    if (!in_dirichlet_space(f, p)) {
                        const double inf = std::numeric_limits<double>::infinity();
                        r.add_row({label, a, sg, k.to_string(), inf, inf, 0.0, std::string("not_in_space")});
                        ++skipped;
                        continue;
                    }
                    const CoefficientIntegrals c = ci ? *ci : coefficient_integrals(p, f.degree(), job.quad);
                    const double series = dirichlet_norm_series(f, p, c).norm_sq;
                    const double quad = dirichlet_norm_quad(f, p, job.quad).norm_sq;
                    const double rel = std::abs(series - quad) / std::abs(quad);
                    worst = std::max(worst, rel);
                    const bool ok = rel <= 1e-6;
                    if (!ok) r.passed = false;
                    r.add_row({label, a, sg, k.to_string(), series, quad, rel, status(ok)});
                }
            }
        }
    }
    r.summary = {{"max_rel_diff", worst}, {"not_in_space_cells", skipped}};
    return r;
}

Report suite_anchors(const JobSpec& job) {
    Report r;
    r.columns = {"anchor", "expected", "computed", "abs_diff", "status"};
    const auto add = [&](const std::string& name, double expected, double got) {
        const double d = std::abs(expected - got);
        const bool ok = d <= 1e-9;
        if (!ok) r.passed = false;
        r.add_row({name, expected, got, d, status(ok)});
    };
    const FFParams p1{1.0, 1.0, 0.5, Order(1)};
    const FFParams p2{1.0, 1.0, 1.0, Order(1)};
    add("f=1 alpha=1 k=1 sigma=1/2", 1.0 + kPi / 4.0, dirichlet_norm_quad(CPowerSeries{1.0}, p1, job.quad).norm_sq);
    add("f=z alpha=1 k=1 sigma=1", 0.25 + kPi, dirichlet_norm_quad(CPowerSeries{0.0, 1.0}, p2, job.quad).norm_sq);
    add("f=1 closed-k1", 1.0 + kPi / 4.0, dirichlet_norm_closed_k1(CPowerSeries{1.0}, p1).norm_sq);
    add("f=z closed-k1", 0.25 + kPi, dirichlet_norm_closed_k1(CPowerSeries{0.0, 1.0}, p2).norm_sq);
    return r;
}

Report suite_reproducing(const JobSpec& job) {
    Report r;
    r.columns = {"identity", "f", "sigma", "k", "z_re", "z_im", "residual", "tolerance", "status"};
    Sampler s(job.seed);
    NestedSpec nested;
    for (const double sg : {0.3, 0.5, 0.7}) {
        for (const Order k : {Order(1), Order::infinite()}) {
            for (const std::size_t deg : {2u, 4u}) {
                const CPowerSeries f = s.complex_poly(deg);
                const Complex z = s.slit_point(0.1, 0.85);
                const FFParams p{1.0, 1.0, sg, k};
                const std::string label = fmt::format("rand deg {}", deg);
                const double r1 = reproduce_identity_1(f, p, z, job.quad).residual;
                const double r2 = reproduce_identity_2(f, p, z, nested).residual;
                r.add_row({std::string("1"), label, sg, k.to_string(), z.real(), z.imag(), r1, 1e-6, status(r1 < 1e-6)});
                r.add_row({std::string("2"), label, sg, k.to_string(), z.real(), z.imag(), r2, 1e-5, status(r2 < 1e-5)});
                if (!(r1 < 1e-6 && r2 < 1e-5)) r.passed = false;
            }
        }
    }
    r.summary = {{"alpha", 1.0}};
    return r;
}

Report suite_prop1(const JobSpec& job) {
    Report r;
    r.columns = {"f", "alpha", "sigma", "k", "z_re", "z_im", "residual", "printed_sign_residual", "status"};
    Sampler s(job.seed);
    const std::vector<double> alphas{0.3, 0.5, 0.8, 1.0};
    const std::vector<Order> ks{Order(1), Order(2), Order(3), Order::infinite()};
    for (int i = 0; i < 20; ++i) {
        const FFParams p{alphas[static_cast<std::size_t>(i) % 4], 1.0, s.uniform(0.3, 1.0),
                         ks[static_cast<std::size_t>(i / 4) % 4]};
        const CPowerSeries f = s.complex_poly(1 + static_cast<std::size_t>(i) % 4);
        const Complex z = s.slit_point(0.2, 0.9, 2.8);
        const double res = prop1_identity_check(f, p, z);
        const double printed = prop1_identity_check(f, p, z, 1e-5, WeightSign::printed);
        const bool ok = res < 1e-6;
        if (!ok) r.passed = false;
        r.add_row({fmt::format("rand#{}", i + 1), p.alpha, p.sigma, p.k.to_string(), z.real(), z.imag(), res, printed,
                   status(ok)});
    }
    return r;
}

// max over a 10 x 10 polar grid of |g(z)|.
template <class G>
double grid_max(G&& g) {
    double m = 0.0;
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) m = std::max(m, std::abs(g(std::polar(0.1 + 0.08 * a, -2.7 + 0.6 * b))));
    return m;
}

Report suite_limits(const JobSpec& job) {
    Report r;
    r.columns = {"check", "parameter", "value", "target", "status"};
    Sampler s(job.seed);
    const CPowerSeries f = s.complex_poly(3);
    const FFParams base{0.6, 1.0, 0.5, Order::infinite()};
    const std::vector<double> steps{1e-2, 5e-3, 2.5e-3, 1.25e-3};
    const auto ratio_rows = [&](const std::string& name, auto&& error_at) {
        double prev = error_at(steps[0]);
        for (std::size_t i = 1; i < steps.size(); ++i) {
            const double cur = error_at(steps[i]);
            const double ratio = prev / cur;
            const bool ok = std::abs(ratio - 2.0) <= 0.1;
            if (!ok) r.passed = false;
            r.add_row({name, steps[i], ratio, 2.0, status(ok)});
            prev = cur;
        }
    };
    ratio_rows("sigma->0 error ratio", [&](double sg) {
        FFParams p = base;
        p.sigma = sg;
        const FFEvaluator D(f, p);
        return grid_max([&](Complex z) { return D(z) - eval(f, z); });
    });
    ratio_rows("sigma->1 error ratio", [&](double eps) {
        FFParams p = base;
        p.sigma = 1.0 - eps;
        const FFEvaluator D(f, p);
        return grid_max([&](Complex z) { return D(z) - fractal_term_c(f, base, z); });
    });

    const RealFunction g{[](double t) { return 1.0 + t + 0.5 * t * t; }, [](double t) { return 1.0 + t; }};
    for (const double t : {0.2, 0.5, 0.8}) {
        for (const Order k : {Order(1), Order(2), Order::infinite()}) {
            const FFParams p{0.7, 1.0, 0.4, k};
            const double closed = ff_derivative_real(g, p, t);
            const double quotient = ff_derivative_real(g, p, t, kDefaultStep, RealEvaluation::limit_quotient);
            const double rel = std::abs(closed - quotient) / std::abs(closed);
            const bool ok = rel <= 1e-6;
            if (!ok) r.passed = false;
            r.add_row({fmt::format("real closed vs quotient k={}", k.to_string()), t, rel, 1e-6, status(ok)});
        }
    }
    return r;
}

Report suite_discrepancy(const JobSpec& job) {
    Report r;
    r.columns = {"f", "alpha", "sigma", "printed_sigma2", "adjudicated_sigma2", "sigma2_ratio", "printed_cross",
                 "adjudicated_cross", "printed_total", "quadrature_total", "printed_matches", "status"};
    Sampler s(job.seed);
    const std::vector<Labeled> fs{{"z", CPowerSeries{0.0, 1.0}},
                                  {"1+z+z^2", CPowerSeries{1.0, 1.0, 1.0}},
                                  {"rand deg 3", s.complex_poly(3)}};
    for (const double a : {0.5, 0.8, 1.0}) {
        for (const auto& [label, f] : fs) {
            const FFParams p{a, 1.0, 0.5, Order(1)};
            const DiscrepancyReport d = corollary_k1_discrepancy(f, p, job.quad);
            const double adjudicated_total = d.adjudicated.total();
            const bool adjudicated_ok =
                std::abs(adjudicated_total - d.quadrature_norm_sq) <= 1e-6 * d.quadrature_norm_sq;
            const bool caught = std::abs(d.sigma2_ratio - 2.0 * kPi) <= 1e-6 && !d.printed_matches && adjudicated_ok;
            if (!caught) r.passed = false;
            r.add_row({label, a, 0.5, d.printed.sigma2, d.adjudicated.sigma2, d.sigma2_ratio, d.printed.cross,
                       d.adjudicated.cross, d.printed.total(), d.quadrature_norm_sq,
                       std::string(d.printed_matches ? "yes" : "no"), std::string(caught ? "caught" : "missed")});
        }
    }
    r.summary = {{"expected_sigma2_ratio", 2.0 * kPi}};
    return r;
}

Report suite_bergman(const JobSpec& job) {
    Report r;
    r.columns = {"n", "z_re", "z_im", "residual", "status"};
    Sampler s(job.seed);
    for (int n = 0; n <= 4; ++n) {
        for (int i = 0; i < 3; ++i) {
            const Complex z = s.slit_point(0.0, 0.8);
            const DiskIntegral v = integrate_disk(
                [&](Complex zeta) { return bergman_kernel(z, zeta) * std::pow(zeta, n); }, job.quad);
            const double res = std::abs(v.value - std::pow(z, n));
            const bool ok = res < 1e-8;
            if (!ok) r.passed = false;
            r.add_row({static_cast<long long>(n), z.real(), z.imag(), res, status(ok)});
        }
    }
    return r;
}

FFParams random_params(Sampler& s) {
    static const std::vector<double> alphas{0.3, 0.7, 1.0};
    static const std::vector<Order> ks{Order(1), Order::infinite()};
    const auto ai = static_cast<std::size_t>(s.uniform(0.0, 3.0));
    const auto ki = static_cast<std::size_t>(s.uniform(0.0, 2.0));
    return {alphas[std::min<std::size_t>(ai, 2)], 1.0, s.uniform(0.1, 0.9), ks[std::min<std::size_t>(ki, 1)]};
}

Report suite_split(const JobSpec& job) {
    Report r;
    r.columns = {"case", "alpha", "sigma", "k", "direct", "part1", "part2", "residual", "dual_max_diff", "status"};
    Sampler s(job.seed);
    for (int i = 0; i < 20; ++i) {
        const FFParams p = random_params(s);
        const QPowerSeries f = s.quaternion_poly(1 + static_cast<std::size_t>(i) % 4);
        const SliceFrame frame = s.frame();
        const SplittingCheck c = splitting_identity_check(f, p, frame, job.quad);
        double dual = 0.0;
        for (int t = 0; t < 5; ++t) dual = std::max(dual, ff_eval_q_dual(f, p, frame, s.slit_point(0.05, 0.95)).difference);
        const bool ok = c.residual <= 1e-12 && dual <= 1e-11;
        if (!ok) r.passed = false;
        r.add_row({static_cast<long long>(i + 1), p.alpha, p.sigma, p.k.to_string(), c.direct, c.part1, c.part2,
                   c.residual, dual, status(ok)});
    }
    return r;
}

Report suite_bound(const JobSpec& job) {
    Report r;
    r.columns = {"case", "alpha", "sigma", "k", "norm_i", "norm_j", "ratio", "status"};
    Sampler s(job.seed);
    std::map<std::pair<double, bool>, CoefficientIntegrals> cache;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const FFParams p = random_params(s);
        const auto key = std::pair{p.alpha, p.k.is_infinite()};
        if (!cache.count(key)) cache.emplace(key, coefficient_integrals(p, 4, job.quad));
        const QPowerSeries f = s.quaternion_poly(1 + static_cast<std::size_t>(i) % 4);
        const SliceFrame fi = s.frame();
        const SliceFrame fj = s.frame();
        try {
            const SliceComparison c = slice_norm_compare(f, p, fi, fj, job.quad, &cache.at(key));
            worst = std::max(worst, c.ratio);
            r.add_row({static_cast<long long>(i + 1), p.alpha, p.sigma, p.k.to_string(), c.norm_i, c.norm_j, c.ratio,
                       std::string("ok")});
        } catch (const ToleranceError& e) {
            r.passed = false;
            r.add_row({static_cast<long long>(i + 1), p.alpha, p.sigma, p.k.to_string(), 0.0, 0.0, 0.0,
                       std::string("fail")});
        }
    }
    r.summary = {{"max_ratio", worst}, {"bound", 8.0}};
    return r;
}

Report suite_qkernel(const JobSpec& job) {
    Report r;
    r.columns = {"case", "sigma", "k", "q_w", "q_x", "q_y", "q_z", "residual1", "residual2", "status"};
    Sampler s(job.seed);
    const auto add = [&](const std::string& name, const QPowerSeries& f, const FFParams& p, const Quaternion& q) {
        const QReproducingResult res = q_reproduce(f, p, SliceFrame::standard(), q);
        const bool ok = res.residual1 < 1e-6 && res.residual2 < 1e-5;
        if (!ok) r.passed = false;
        r.add_row({name, p.sigma, p.k.to_string(), q.w, q.x, q.y, q.z, res.residual1, res.residual2, status(ok)});
    };
    add("q^2", QPowerSeries{0.0, 0.0, 1.0}, FFParams{1.0, 1.0, 0.5, Order(1)}, Quaternion{0.3, 0.0, 0.2, 0.0});
    add("q^2 at 1/2", QPowerSeries{0.0, 0.0, 1.0}, FFParams{1.0, 1.0, 0.5, Order(1)}, Quaternion{0.5});
    for (int i = 0; i < 3; ++i) {
        const FFParams p{1.0, 1.0, s.uniform(0.2, 0.8), i % 2 ? Order::infinite() : Order(1)};
        add(fmt::format("rand#{}", i + 1), s.quaternion_poly(3), p, s.ball_point(0.1, 0.8));
    }
    return r;
}

Report suite_qseries(const JobSpec& job) {
    Report r;
    r.columns = {"case", "alpha", "sigma", "k", "series", "quadrature", "rel_diff", "status"};
    Sampler s(job.seed);
    for (int i = 0; i < 10; ++i) {
        const FFParams p = random_params(s);
        const QPowerSeries f = s.quaternion_poly(4);
        const SliceFrame frame = s.frame();
        const double series = qdirichlet_norm_series(f, p, frame, coefficient_integrals(p, 4, job.quad)).norm_sq;
        const double quad = qdirichlet_norm(f, p, frame, job.quad).norm_sq;
        const double rel = std::abs(series - quad) / quad;
        const bool ok = rel <= 1e-6;
        if (!ok) r.passed = false;
        r.add_row({static_cast<long long>(i + 1), p.alpha, p.sigma, p.k.to_string(), series, quad, rel, status(ok)});
    }
    return r;
}

}  // namespace

Report verify_suite(const JobSpec& job) {
    const std::string& s = job.suite.empty() ? std::string("norms") : job.suite;
    if (s == "norms") return suite_norms(job);
    if (s == "anchors") return suite_anchors(job);
    if (s == "reproducing" || s == "kernel") return suite_reproducing(job);
    if (s == "prop1") return suite_prop1(job);
    if (s == "limits") return suite_limits(job);
    if (s == "discrepancy") return suite_discrepancy(job);
    if (s == "bergman") return suite_bergman(job);
    throw ParseError("unknown verify suite '" + s +
                     "' (norms|anchors|reproducing|prop1|limits|discrepancy|bergman)");
}

Report qverify_suite(const JobSpec& job) {
    const std::string& s = job.suite.empty() ? std::string("split") : job.suite;
    if (s == "split") return suite_split(job);
    if (s == "bound") return suite_bound(job);
    if (s == "kernel") return suite_qkernel(job);
    if (s == "series") return suite_qseries(job);
    throw ParseError("unknown qverify suite '" + s + "' (split|bound|kernel|series)");
}

}  // namespace ffq::cli

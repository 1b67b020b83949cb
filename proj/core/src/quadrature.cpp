#include "ffq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>

#include "ffq/errors.hpp"
#include "ffq/holo_series.hpp"

namespace ffq {

void QuadratureSpec::validate() const {
    if (nr < 4 || ntheta < 4) throw DomainError("quadrature node counts must be >= 4");
    if (panels_r < 1 || panels_theta < 1) throw DomainError("quadrature panel counts must be >= 1");
    if (!(rel_tol > 0.0)) throw DomainError("quadrature rel_tol must be positive");
    if (max_refine < 0 || max_refine > 12) throw DomainError("quadrature max_refine must lie in [0, 12]");
}

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    // Newton iteration on P_n from the Tricomi initial guess; roots come in +/- pairs.
    auto legendre = [n](double x, double& dp) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        return p1;
    };
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            const double dx = legendre(x, dp) / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        legendre(x, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        const auto lo = static_cast<std::size_t>(i);
        const auto hi = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[lo] = -x;
        rule.nodes[hi] = x;
        rule.weights[lo] = w;
        rule.weights[hi] = w;
    }
    return rule;
}

template <class T>
T pairwise_impl(std::span<const T> terms) noexcept {
    if (terms.size() <= 8) {
        T acc{};
        for (const auto& t : terms) acc += t;
        return acc;
    }
    const std::size_t half = terms.size() / 2;
    return pairwise_impl(terms.first(half)) + pairwise_impl(terms.subspan(half));
}

}  // namespace

Complex pairwise_sum(std::span<const Complex> terms) noexcept { return pairwise_impl(terms); }
double pairwise_sum(std::span<const double> terms) noexcept { return pairwise_impl(terms); }

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussLegendreRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<GaussLegendreRule>(compute_rule(n));
    return *slot;
}

double MultiIntegral::max_error() const noexcept {
    return errors.empty() ? 0.0 : *std::max_element(errors.begin(), errors.end());
}

std::vector<Complex> integrate_polar_level(const PolarIntegrand& h, std::size_t dim, const QuadratureSpec& spec,
                                           int level, std::vector<double>* l1) {
    const GaussLegendreRule& gr = gauss_legendre(spec.nr);
    const GaussLegendreRule& gt = gauss_legendre(spec.ntheta);
    const int pt = spec.panels_theta << level;
    const double ds = 1.0 / (spec.panels_r << level);
    const double dt = 2.0 * std::numbers::pi / pt;

    // Radial nodes in s = sqrt(r): r = s^2, dr = 2 s ds. Smooths r^p endpoint behaviour. The panel at
    // the origin is further graded geometrically so integrable power singularities converge too.
    constexpr double kGrade = 0.05;
    std::vector<std::pair<double, double>> radial;
    double edge = ds;
    for (int g = 0; g < 2 + level; ++g) edge *= kGrade;
    radial.emplace_back(0.0, edge);
    for (; edge < ds * (1.0 - 1e-12); edge /= kGrade) radial.emplace_back(edge, edge / kGrade);
    for (int a = 1; a < (spec.panels_r << level); ++a) radial.emplace_back(a * ds, (a + 1) * ds);
    const int pr = static_cast<int>(radial.size());

    std::vector<double> rs;
    std::vector<double> rw;
    rs.reserve(radial.size() * gr.nodes.size());
    rw.reserve(rs.capacity());
    for (const auto& [s0, s1] : radial) {
        const double half = 0.5 * (s1 - s0);
        for (std::size_t i = 0; i < gr.nodes.size(); ++i) {
            const double s = s0 + half * (gr.nodes[i] + 1.0);
            rs.push_back(s * s);
            rw.push_back(half * gr.weights[i] * 2.0 * s);
        }
    }

    std::vector<std::vector<Complex>> panel_sums(dim);
    std::vector<std::vector<double>> panel_abs(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        panel_sums[c].reserve(static_cast<std::size_t>(pr * pt));
        if (l1) panel_abs[c].reserve(static_cast<std::size_t>(pr * pt));
    }
    std::vector<Complex> out(dim);
    std::vector<Complex> acc(dim);
    std::vector<double> acc_abs(dim);
    const std::size_t nr = gr.nodes.size();
    for (int a = 0; a < pr; ++a) {
        for (int b = 0; b < pt; ++b) {
            std::fill(acc.begin(), acc.end(), Complex{});
            std::fill(acc_abs.begin(), acc_abs.end(), 0.0);
            const double t0 = -std::numbers::pi + b * dt;
            for (std::size_t i = 0; i < nr; ++i) {
                const std::size_t ri = static_cast<std::size_t>(a) * nr + i;
                const double r = rs[ri];
                for (std::size_t j = 0; j < gt.nodes.size(); ++j) {
                    const double theta = t0 + 0.5 * dt * (gt.nodes[j] + 1.0);
                    const double w = rw[ri] * 0.5 * dt * gt.weights[j];
                    h(r, theta, out);
                    for (std::size_t c = 0; c < dim; ++c) {
                        acc[c] += w * out[c];
                        acc_abs[c] += w * std::abs(out[c]);
                    }
                }
            }
            for (std::size_t c = 0; c < dim; ++c) {
                panel_sums[c].push_back(acc[c]);
                if (l1) panel_abs[c].push_back(acc_abs[c]);
            }
        }
    }
    std::vector<Complex> values(dim);
    if (l1) l1->assign(dim, 0.0);
    for (std::size_t c = 0; c < dim; ++c) {
        values[c] = pairwise_sum(panel_sums[c]);
        if (l1) (*l1)[c] = pairwise_sum(panel_abs[c]);
    }
    return values;
}

MultiIntegral integrate_polar(const PolarIntegrand& h, std::size_t dim, const QuadratureSpec& spec) {
    spec.validate();
    std::vector<double> l1;
    std::vector<Complex> prev = integrate_polar_level(h, dim, spec, 0, &l1);
    std::vector<double> errors(dim, 0.0);
    for (int level = 1; level <= std::max(1, spec.max_refine); ++level) {
        std::vector<Complex> cur = integrate_polar_level(h, dim, spec, level, &l1);
        // Components that cancel to rounding noise are judged against the largest one.
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * *std::max_element(l1.begin(), l1.end());
        bool converged = true;
        for (std::size_t c = 0; c < dim; ++c) {
            errors[c] = std::abs(cur[c] - prev[c]);
            if (!std::isfinite(errors[c]) || errors[c] > std::max(spec.rel_tol * l1[c], floor)) converged = false;
        }
        if (converged) return {std::move(cur), std::move(errors), level};
        prev = std::move(cur);
    }
    double worst = 0.0;
    for (std::size_t c = 0; c < dim; ++c)
        worst = std::max(worst, l1[c] > 0.0 ? errors[c] / l1[c] : errors[c]);
    std::ostringstream msg;
    msg << std::setprecision(3) << "disk quadrature did not reach rel_tol " << spec.rel_tol << " after "
        << std::max(1, spec.max_refine) << " refinements (last relative change " << worst << ")";
    throw NoConvergence(msg.str());
}

namespace {

PolarIntegrand area_integrand(const DiskMultiIntegrand& f) {
    return [&f](double r, double theta, std::span<Complex> out) {
        f(std::polar(r, theta), out);
        for (auto& v : out) v *= r;
    };
}

}  // namespace

std::vector<Complex> integrate_disk_level(const DiskMultiIntegrand& f, std::size_t dim, const QuadratureSpec& spec,
                                          int level) {
    spec.validate();
    return integrate_polar_level(area_integrand(f), dim, spec, level);
}

MultiIntegral integrate_disk_multi(const DiskMultiIntegrand& f, std::size_t dim, const QuadratureSpec& spec) {
    return integrate_polar(area_integrand(f), dim, spec);
}

DiskIntegral integrate_disk(const DiskIntegrand& f, const QuadratureSpec& spec) {
    const DiskMultiIntegrand g = [&f](Complex z, std::span<Complex> out) { out[0] = f(z); };
    MultiIntegral m = integrate_disk_multi(g, 1, spec);
    return {m.values[0], m.errors[0], m.level};
}

PathSegment PathSegment::line(Complex a, Complex b) noexcept {
    PathSegment s;
    s.a_ = a;
    s.b_ = b;
    return s;
}

PathSegment PathSegment::arc(double radius, double theta0, double theta1) noexcept {
    PathSegment s;
    s.arc_ = true;
    s.radius_ = radius;
    s.theta0_ = theta0;
    s.theta1_ = theta1;
    return s;
}

Complex PathSegment::point(double t) const noexcept {
    if (!arc_) return a_ + t * (b_ - a_);
    return std::polar(radius_, theta0_ + t * (theta1_ - theta0_));
}

Complex PathSegment::tangent(double t) const noexcept {
    if (!arc_) return b_ - a_;
    const double dtheta = theta1_ - theta0_;
    return Complex{0.0, dtheta} * point(t);
}

double PathSegment::length() const noexcept {
    return arc_ ? radius_ * std::abs(theta1_ - theta0_) : std::abs(b_ - a_);
}

SlitPath build_slit_path(Complex z) {
    if (!in_slit_disk(z)) throw DomainError("path endpoint must lie in the slit disk D \\ (-1, 0]");
    SlitPath path;
    path.end = z;
    const double rho = std::abs(z);
    const double arg = principal_arg(z);
    if (rho != 0.5) path.segments.push_back(PathSegment::line({0.5, 0.0}, {rho, 0.0}));
    if (arg != 0.0) path.segments.push_back(PathSegment::arc(rho, 0.0, arg));
    return path;
}

SlitPath build_detour_path(Complex z, double via_radius) {
    if (!in_slit_disk(z)) throw DomainError("path endpoint must lie in the slit disk D \\ (-1, 0]");
    if (!(via_radius > 0.0 && via_radius < 1.0)) throw DomainError("detour radius must lie in (0, 1)");
    SlitPath path;
    path.end = z;
    const double arg = principal_arg(z);
    if (via_radius != 0.5) path.segments.push_back(PathSegment::line({0.5, 0.0}, {via_radius, 0.0}));
    if (arg != 0.0) path.segments.push_back(PathSegment::arc(via_radius, 0.0, arg));
    const Complex corner = std::polar(via_radius, arg);
    if (corner != z) path.segments.push_back(PathSegment::line(corner, z));
    return path;
}

bool path_in_slit_disk(const SlitPath& path, int samples) {
    for (const auto& seg : path.segments)
        for (int s = 0; s <= samples; ++s)
            if (!in_slit_disk(seg.point(static_cast<double>(s) / samples))) return false;
    return true;
}

std::vector<PathNode> path_rule(const SlitPath& path, int nodes_per_panel, int panels) {
    const GaussLegendreRule& g = gauss_legendre(nodes_per_panel);
    std::vector<PathNode> nodes;
    nodes.reserve(path.segments.size() * static_cast<std::size_t>(panels * nodes_per_panel));
    const double dt = 1.0 / panels;
    for (const auto& seg : path.segments) {
        for (int p = 0; p < panels; ++p) {
            for (std::size_t i = 0; i < g.nodes.size(); ++i) {
                const double t = p * dt + 0.5 * dt * (g.nodes[i] + 1.0);
                nodes.push_back({seg.point(t), 0.5 * dt * g.weights[i] * seg.tangent(t)});
            }
        }
    }
    return nodes;
}

DiskIntegral path_integral(const DiskIntegrand& f, const SlitPath& path, const QuadratureSpec& spec) {
    spec.validate();
    if (path.empty()) return {};
    auto at = [&](int level, double& l1) {
        const std::vector<PathNode> nodes = path_rule(path, spec.nr, spec.panels_r << level);
        std::vector<Complex> terms;
        std::vector<double> mags;
        terms.reserve(nodes.size());
        mags.reserve(nodes.size());
        for (const auto& n : nodes) {
            const Complex v = f(n.w) * n.weight;
            terms.push_back(v);
            mags.push_back(std::abs(v));
        }
        l1 = pairwise_sum(mags);
        return pairwise_sum(terms);
    };
    double l1 = 0.0;
    Complex prev = at(0, l1);
    double err = 0.0;
    for (int level = 1; level <= std::max(1, spec.max_refine); ++level) {
        const Complex cur = at(level, l1);
        err = std::abs(cur - prev);
        if (std::isfinite(err) && err <= spec.rel_tol * l1) return {cur, err, level};
        prev = cur;
    }
    std::ostringstream msg;
    msg << "path integral did not reach rel_tol " << spec.rel_tol;
    throw NoConvergence(msg.str());
}

}  // namespace ffq

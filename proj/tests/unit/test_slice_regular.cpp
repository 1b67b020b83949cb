#include <doctest.h>

#include <numbers>

#include "ffq/errors.hpp"
#include "ffq/slice_regular.hpp"
#include "support.hpp"

using namespace ffq;
using test::qdist;

namespace {

double coeff_dist(const QPowerSeries& a, const QPowerSeries& b) {
    double d = 0.0;
    for (std::size_t n = 0; n < std::max(a.size(), b.size()); ++n) d = std::max(d, qdist(a[n], b[n]));
    return d;
}

// Independent convolution: accumulate every product a_k b_l into slot k + l.
QPowerSeries scatter_product(const QPowerSeries& f, const QPowerSeries& g) {
    std::vector<Quaternion> c(f.size() + g.size() - 1);
    for (std::size_t k = 0; k < f.size(); ++k)
        for (std::size_t l = 0; l < g.size(); ++l) c[k + l] += f[k] * g[l];
    return QPowerSeries(c);
}

QPowerSeries neg(const QPowerSeries& f) {
    std::vector<Quaternion> c(f.coeffs());
    for (auto& a : c) a = -a;
    return QPowerSeries(c);
}

}  // namespace

TEST_SUITE("slice_regular") {

TEST_CASE("right-coefficient evaluation") {
    const Quaternion a0{0.2, -0.1, 0.4, 0.3};
    const Quaternion q{0.1, 0.2, -0.3, 0.4};
    CHECK(eval_q(QPowerSeries{a0}, q) == a0);
    CHECK(qdist(eval_q(QPowerSeries{Quaternion{}, units::e3}, Quaternion{0.5}), units::e3 * 0.5) < 1e-16);

    const Quaternion h = units::e3 * 0.5;
    const Quaternion oracle = units::one + h * units::e1 + h * h * units::e2;
    CHECK(qdist(eval_q(QPowerSeries{units::one, units::e1, units::e2}, h), oracle) < 1e-16);
    CHECK(qdist(oracle, Quaternion{1.0, 0.0, 0.25, 0.0}) < 1e-16);

    CHECK_THROWS_AS(eval_q(QPowerSeries{units::one}, Quaternion{1.0}), DomainError);
}

TEST_CASE("Cullen derivative") {
    CHECK(cullen_derivative(QPowerSeries{units::e2}).empty());
    const QPowerSeries mono{Quaternion{}, Quaternion{}, Quaternion{}, units::e1};
    CHECK(cullen_derivative(mono) == QPowerSeries{Quaternion{}, Quaternion{}, units::e1 * 3.0});

    std::vector<Quaternion> e4;
    double fact = 1.0;
    for (int n = 0; n <= 4; ++n) {
        if (n) fact *= n;
        e4.emplace_back(1.0 / fact);
    }
    const QPowerSeries d = cullen_derivative(QPowerSeries(e4));
    CHECK(coeff_dist(d, QPowerSeries(std::vector<Quaternion>(e4.begin(), e4.end() - 1))) < 1e-16);
}

TEST_CASE("star product") {
    test::Rng rng(31);
    const QPowerSeries f = rng.qpoly(4);
    CHECK(coeff_dist(star_product(f, QPowerSeries{units::one}), f) == 0.0);

    const QPowerSeries fc{units::one, -units::e1};
    CHECK(coeff_dist(star_product(QPowerSeries{units::one, units::e1}, fc),
                     QPowerSeries{units::one, Quaternion{}, units::one}) < 1e-16);

    for (int t = 0; t < 20; ++t) {
        const QPowerSeries a = rng.qpoly(5), b = rng.qpoly(3);
        CHECK(coeff_dist(star_product(a, b), scatter_product(a, b)) < 1e-14);
    }

    // Real coefficients commute with q, so the star product is pointwise.
    std::vector<Quaternion> real_c;
    for (int n = 0; n < 4; ++n) real_c.emplace_back(rng.u());
    const QPowerSeries r(real_c);
    const QPowerSeries g = rng.qpoly(3);
    for (int t = 0; t < 10; ++t) {
        const Quaternion q = rng.ball();
        CHECK(qdist(eval_q(star_product(r, g), q), eval_q(r, q) * eval_q(g, q)) < 1e-12);
    }
}

TEST_CASE("star product twist formula and associativity") {
    test::Rng rng(32);
    for (int t = 0; t < 50; ++t) {
        const QPowerSeries f = rng.qpoly(4), g = rng.qpoly(4), h = rng.qpoly(2);
        const Quaternion q = rng.ball();
        const Quaternion fq = eval_q(f, q);
        const Quaternion twisted = inverse(fq) * q * fq;
        CHECK(qdist(eval_q(star_product(f, g), q), fq * eval_q(g, twisted)) < 1e-11);
        CHECK(coeff_dist(star_product(star_product(f, g), h), star_product(f, star_product(g, h))) < 1e-11);
    }
}

TEST_CASE("regular conjugate and symmetrization") {
    CHECK(regular_conjugate(QPowerSeries{units::one, units::e1}) == QPowerSeries{units::one, -units::e1});
    test::Rng rng(33);
    const QPowerSeries f = rng.qpoly(5);
    CHECK(regular_conjugate(regular_conjugate(f)) == f);
    std::vector<Quaternion> rc{Quaternion{0.3}, Quaternion{-1.0}};
    CHECK(regular_conjugate(QPowerSeries(rc)) == QPowerSeries(rc));

    CHECK(coeff_dist(symmetrization(QPowerSeries{units::one, units::e1}),
                     QPowerSeries{units::one, Quaternion{}, units::one}) < 1e-16);
    const Quaternion c{0.5, -0.2, 0.1, 0.7};
    CHECK(coeff_dist(symmetrization(QPowerSeries{c}), QPowerSeries{Quaternion{c.norm_sq()}}) < 1e-16);

    for (int t = 0; t < 20; ++t) {
        const QPowerSeries g = rng.qpoly(6);
        const QPowerSeries s = symmetrization(g);
        CHECK(coeff_dist(s, star_product(regular_conjugate(g), g)) < 1e-13);
        for (const auto& a : s.coeffs()) CHECK(a.vector_norm() < 1e-13);
    }
}

TEST_CASE("star inverse") {
    const Quaternion c{0.5, 0.5, -0.5, 0.5};
    CHECK(coeff_dist(star_inverse(QPowerSeries{c}, 0), QPowerSeries{inverse(c)}) < 1e-15);

    // Oracle for 1 + q^2: the geometric series sum (-1)^n q^{2n}.
    const QPowerSeries f{units::one, units::e1};
    const QPowerSeries inv = star_inverse(f, 4);
    const QPowerSeries oracle_s{units::one, Quaternion{}, Quaternion{-1.0}, Quaternion{}, units::one};
    CHECK(coeff_dist(inv, truncate(star_product(oracle_s, regular_conjugate(f)), 4)) < 1e-14);
    CHECK(coeff_dist(truncate(star_product(f, inv), 4), QPowerSeries{units::one, {}, {}, {}, {}}) < 1e-12);

    // Real coefficients: the ordinary reciprocal series.
    const std::vector<double> a{2.0, -1.0, 0.5};
    const std::vector<double> ra = real_reciprocal(a, 6);
    std::vector<Quaternion> qa(a.begin(), a.end());
    const QPowerSeries ri = star_inverse(QPowerSeries(qa), 6);
    for (std::size_t n = 0; n <= 6; ++n) CHECK(qdist(ri[n], Quaternion{ra[n]}) < 1e-14);

    test::Rng rng(34);
    for (int t = 0; t < 20; ++t) {
        QPowerSeries g = rng.qpoly(static_cast<std::size_t>(1 + t % 8));
        std::vector<Quaternion> gc = g.coeffs();
        gc[0] += Quaternion{2.0};  // keep f^s away from zero inside the ball
        g = QPowerSeries(gc);
        const QPowerSeries gi = star_inverse(g, 8);
        std::vector<Quaternion> one(9);
        one[0] = units::one;
        CHECK(coeff_dist(truncate(star_product(g, gi), 8), QPowerSeries(one)) < 1e-10);

        // (g^{-*})' = -g^{-*} * g' * g^{-*}
        const QPowerSeries lhs = truncate(cullen_derivative(gi), 7);
        const QPowerSeries rhs = truncate(neg(star_product(star_product(gi, cullen_derivative(g)), gi)), 7);
        CHECK(coeff_dist(lhs, rhs) < 1e-10);
    }
    CHECK_THROWS_AS(star_inverse(QPowerSeries{Quaternion{1e-14}, units::e1}, 3), DomainError);
}

TEST_CASE("splitting lemma") {
    const SliceFrame s = SliceFrame::standard();
    std::vector<Quaternion> rc{Quaternion{1.0}, Quaternion{-0.5}, Quaternion{0.25}};
    const SplitPair r = split(QPowerSeries(rc), s);
    for (const auto& a : r.f2.coeffs()) CHECK(a == Complex{});

    const SplitPair j = split(QPowerSeries{units::e2}, s);
    CHECK(j.f1[0] == Complex{});
    CHECK(j.f2[0] == Complex{1.0});

    // Oracle: e3 = e1 e2 = i j, so f2 carries the unit i.
    const SplitPair k = split(QPowerSeries{Quaternion{}, units::e3}, s);
    CHECK(k.f1[0] == Complex{});
    CHECK(k.f1[1] == Complex{});
    CHECK(k.f2[0] == Complex{});
    CHECK(std::abs(k.f2[1] - Complex(0.0, 1.0)) < 1e-16);

    test::Rng rng(35);
    for (int t = 0; t < 20; ++t) {
        const SliceFrame fr = rng.frame();
        const QPowerSeries f = rng.qpoly(5);
        const SplitPair p = split(f, fr);
        CHECK(coeff_dist(combine(p), f) < 1e-14);
        for (int m = 0; m < 10; ++m) {
            const Complex z = rng.slit(0.0, 0.95);
            CHECK(qdist(p.eval_on_slice(z), eval_q(f, fr.embed(z))) < 1e-12);
        }
    }
}

TEST_CASE("extension operator and representation formula") {
    test::Rng rng(36);
    for (int t = 0; t < 10; ++t) {
        const SliceFrame fr = rng.frame();
        const QPowerSeries f = rng.qpoly(5);
        const SplitPair p = split(f, fr);
        const Complex z = rng.slit(0.0, 0.9);
        CHECK(qdist(extend_Pi(p, fr.embed(z)), p.eval_on_slice(z)) < 1e-15);
        CHECK(qdist(extend_Pi(p, Quaternion{0.4}), eval_q(f, Quaternion{0.4})) < 1e-15);
        for (int m = 0; m < 20; ++m) {
            const Quaternion q = rng.ball();
            CHECK(qdist(extend_Pi(p, q), eval_q(f, q)) < 1e-12);
        }

        const SliceEvaluator known = [&](const Quaternion& w) { return eval_q(f, w); };
        const double x = rng.u(-0.6, 0.6), y = rng.u(0.0, 0.6);
        CHECK(qdist(representation_formula(known, fr, x, y, fr.j()), eval_q(f, Quaternion{x} + fr.j() * y)) < 1e-15);
        CHECK(qdist(representation_formula(known, fr, x, 0.0, rng.unit_imag()), eval_q(f, Quaternion{x})) < 1e-15);
        for (int m = 0; m < 20; ++m) {
            const Quaternion u = rng.unit_imag();
            CHECK(qdist(representation_formula(known, fr, x, y, u), eval_q(f, Quaternion{x} + u * y)) < 1e-12);
        }
    }
}

TEST_CASE("intrinsic exponential") {
    const Quaternion q{0.1, 0.2, 0.3, -0.1};
    CHECK(intrinsic_exp(QPowerSeries{}, q) == units::one);
    CHECK(qdist(intrinsic_exp(QPowerSeries{Quaternion{0.7}}, q), Quaternion{std::exp(0.7)}) < 1e-15);
    // Euler in C(e1): exp(e1 pi) = -1, evaluated outside the ball.
    CHECK(qdist(intrinsic_exp(QPowerSeries{Quaternion{}, units::one}, units::e1 * std::numbers::pi), Quaternion{-1.0}) <
          1e-15);
    CHECK_THROWS_AS(intrinsic_exp(QPowerSeries{units::e2}, q), IntrinsicError);
}

}

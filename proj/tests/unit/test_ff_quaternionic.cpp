#include <doctest.h>

#include <numbers>

#include "ffq/errors.hpp"
#include "ffq/ff_quaternionic.hpp"
#include "support.hpp"

using namespace ffq;
using test::qdist;

namespace {

constexpr double kPi = std::numbers::pi;

QPowerSeries right_mul(const QPowerSeries& f, const Quaternion& a) {
    std::vector<Quaternion> c(f.coeffs());
    for (auto& x : c) x = x * a;
    return QPowerSeries(c);
}

}  // namespace

TEST_SUITE("ff_quaternionic") {

TEST_CASE("slice derivative two ways") {
    const SliceFrame s = SliceFrame::standard();
    const Quaternion c{0.2, -0.5, 0.3, 0.9};
    const FFParams p{0.6, 1.0, 0.3, Order(2)};
    CHECK(qdist(ff_eval_q(QPowerSeries{c}, p, s, {0.2, 0.4}), c * 0.7) < 1e-15);

    // Real coefficients at a real point reduce to the complex derivative.
    const CPowerSeries g{0.5, -1.0, 0.25};
    const Complex dg = ff_eval_c(g, p, 0.6);
    const Quaternion dq = ff_eval_q(QPowerSeries::from_complex(g, units::e1), p, s, 0.6);
    CHECK(qdist(dq, Quaternion{dg.real(), dg.imag()}) < 1e-15);

    test::Rng rng(71);
    for (int t = 0; t < 100; ++t) {
        const QPowerSeries f = rng.qpoly(static_cast<std::size_t>(t % 5));
        const FFParams q{rng.u(0.1, 1.0), 1.0, rng.u(0.0, 1.0), t % 2 ? Order(1 + t % 3) : Order::infinite()};
        const DualEvaluation d = ff_eval_q_dual(f, q, rng.frame(), rng.slit(0.05, 0.95, 3.1));
        CHECK(d.difference < 1e-11);
    }

    CHECK_THROWS_AS(ff_eval_q(QPowerSeries{c}, p, s, {-0.4, 0.0}), BranchError);
    CHECK_THROWS_AS(ff_eval_q_direct(QPowerSeries{c}, p, s, {-0.4, 0.0}), BranchError);
    CHECK_THROWS_AS(ff_eval_q(QPowerSeries{c}, {0.6, 0.5, 0.3, Order(2)}, s, 0.5), DomainError);
    CHECK_THROWS_AS(SliceFrame::make(units::e1, Quaternion{0.0, 0.6, 0.8, 0.0}), FrameError);
}

TEST_CASE("norms through the splitting") {
    const SliceFrame s = SliceFrame::standard();
    const FFParams p{0.7, 1.0, 0.4, Order::infinite()};
    CHECK(qdirichlet_norm(QPowerSeries{}, p, s).norm_sq == 0.0);

    const QDirichletValue one = qdirichlet_norm(QPowerSeries{units::one}, p, s);
    CHECK(one.norm_sq == doctest::Approx(dirichlet_norm_quad(CPowerSeries{1.0}, p).norm_sq).epsilon(1e-14));
    CHECK(one.part2 == 0.0);

    // q e3 = q i j in the standard frame: f1 = 0, f2 = i z, a unimodular multiple of z.
    const QDirichletValue e3 = qdirichlet_norm(QPowerSeries{Quaternion{}, units::e3}, p, s);
    CHECK(e3.part1 == 0.0);
    CHECK(e3.norm_sq == doctest::Approx(dirichlet_norm_quad(CPowerSeries{0.0, 1.0}, p).norm_sq).epsilon(1e-12));

    test::Rng rng(72);
    for (int t = 0; t < 5; ++t) {
        const QPowerSeries f = rng.qpoly(4);
        const SliceFrame fr = rng.frame();
        const QDirichletValue v = qdirichlet_norm(f, p, fr);
        CHECK(v.norm_sq == v.part1 + v.part2);
        const SplittingCheck sc = splitting_identity_check(f, p, fr);
        CHECK(sc.residual < 1e-12 * sc.direct);
        CHECK(test::rel_diff(sc.direct, v.norm_sq) < 1e-9);
    }
}

TEST_CASE("quaternionic series form") {
    test::Rng rng(73);
    for (double a : {0.4, 1.0})
        for (Order k : {Order(1), Order(3), Order::infinite()}) {
            const FFParams p{a, 1.0, 0.6, k};
            const CoefficientIntegrals ci = coefficient_integrals(p, 4);
            const SliceFrame fr = rng.frame();
            const QPowerSeries f = rng.qpoly(4);
            const QDirichletValue series = qdirichlet_norm_series(f, p, fr, ci);
            const QDirichletValue quad = qdirichlet_norm(f, p, fr);
            CHECK(test::rel_diff(series.norm_sq, quad.norm_sq) < 1e-6);
            CHECK(test::rel_diff(series.norm_sq, series.part1 + series.part2) < 1e-12);
            CHECK(test::rel_diff(qdirichlet_norm_split_series(f, p, fr, ci).norm_sq, series.norm_sq) < 1e-12);
        }

    // Real coefficients: the complex series, term by term.
    const FFParams p{0.5, 1.0, 0.5, Order(1)};
    const CoefficientIntegrals ci = coefficient_integrals_k1(p, 3);
    const CPowerSeries g{0.3, -0.2, 0.9, 0.4};
    const QDirichletValue r = qdirichlet_norm_series(QPowerSeries::from_complex(g, units::e1), p, rng.frame(), ci);
    CHECK(r.norm_sq == doctest::Approx(dirichlet_norm_series(g, p, ci).norm_sq).epsilon(1e-13));
    CHECK(std::abs(r.part2) < 1e-14);

    const QDirichletValue e3 = qdirichlet_norm_series(QPowerSeries{Quaternion{}, units::e3}, p, SliceFrame::standard(), ci);
    CHECK(e3.part1 == doctest::Approx(0.0));
    CHECK(e3.norm_sq == doctest::Approx(dirichlet_norm_series(CPowerSeries{0.0, 1.0}, p, ci).norm_sq).epsilon(1e-13));

    CHECK_THROWS_AS(qdirichlet_norm_series(rng.qpoly(5), p, SliceFrame::standard(), ci), DegreeMismatch);
}

TEST_CASE("inner product on the right module") {
    const FFParams p{0.8, 1.0, 0.3, Order(2)};
    test::Rng rng(74);
    const SliceFrame fr = rng.frame();
    const QPowerSeries f = rng.qpoly(3), g = rng.qpoly(3);
    const Quaternion ff = qdirichlet_inner_product(f, f, p, fr);
    CHECK(ff.vector_norm() < 1e-10);
    CHECK(ff.w == doctest::Approx(qdirichlet_norm(f, p, fr).norm_sq).epsilon(1e-10));

    const Quaternion a = rng.quat();
    CHECK(qdist(qdirichlet_inner_product(f, right_mul(g, a), p, fr), qdirichlet_inner_product(f, g, p, fr) * a) < 1e-10);
    CHECK(qdist(qdirichlet_inner_product(f, g, p, fr), qdirichlet_inner_product(g, f, p, fr).conj()) < 1e-10);

    // ||f a|| = ||f|| |a|
    CHECK(std::sqrt(qdirichlet_norm(right_mul(f, a), p, fr).norm_sq) ==
          doctest::Approx(std::sqrt(qdirichlet_norm(f, p, fr).norm_sq) * a.norm()).epsilon(1e-10));
}

TEST_CASE("frame covariance for intrinsic functions") {
    const FFParams p{0.5, 1.0, 0.7, Order::infinite()};
    const QPowerSeries f{Quaternion{0.4}, Quaternion{-1.0}, Quaternion{0.3}};
    const double ref = qdirichlet_norm(f, p, SliceFrame::standard()).norm_sq;
    test::Rng rng(75);
    for (int t = 0; t < 10; ++t) CHECK(std::abs(qdirichlet_norm(f, p, rng.frame()).norm_sq - ref) < 1e-9 * ref);
}

TEST_CASE("slice comparison") {
    const FFParams p{0.6, 1.0, 0.5, Order(1)};
    test::Rng rng(76);
    const SliceFrame a = rng.frame(), b = rng.frame();
    CHECK(slice_norm_compare(QPowerSeries{Quaternion{0.5, 0.1, -0.7, 0.2}}, p, a, b).ratio == doctest::Approx(1.0));
    CHECK(slice_norm_compare(QPowerSeries{Quaternion{0.5}, Quaternion{-0.25}}, p, a, b).ratio == doctest::Approx(1.0));
    CHECK_THROWS_AS(slice_norm_compare(QPowerSeries{}, p, a, b), DivisionByZero);

    // The full symmetric slice integral does not depend on the slice, so even for
    // non-intrinsic f the ratio stays at 1, well inside the bound of 8.
    const CoefficientIntegrals ci = coefficient_integrals_k1(p, 4);
    for (int t = 0; t < 40; ++t) {
        const SliceComparison c = slice_norm_compare(rng.qpoly(4), p, rng.frame(), rng.frame(), {}, &ci);
        CHECK(c.ratio <= 8.0 + 1e-9);
        CHECK(c.ratio == doctest::Approx(1.0).epsilon(1e-12));
    }
    const SliceComparison q = slice_norm_compare(rng.qpoly(3), p, rng.frame(), rng.frame());
    CHECK(q.ratio == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("quaternionic reproducing identities") {
    const FFParams p{1.0, 1.0, 0.5, Order(1)};
    const SliceFrame s = SliceFrame::standard();

    // Real coefficients at a real point: identical to the complex residuals.
    const CPowerSeries g{0.3, 1.0, -0.5};
    const QReproducingResult r = q_reproduce(QPowerSeries::from_complex(g, units::e1), p, s, Quaternion{0.6});
    CHECK(r.residual1 == doctest::Approx(reproduce_identity_1(g, p, 0.6).residual).epsilon(1e-6));
    CHECK(r.residual2 == doctest::Approx(reproduce_identity_2(g, p, 0.6).residual).epsilon(1e-6));
    CHECK(r.residual1 < 1e-7);

    const QReproducingResult q2 = q_reproduce(QPowerSeries{Quaternion{}, Quaternion{}, units::one}, p, s,
                                              Quaternion{0.3, 0.0, 0.2, 0.0});
    CHECK(q2.residual1 < 1e-5);
    CHECK(q2.residual2 < 1e-5);

    test::Rng rng(77);
    const QPowerSeries f = rng.qpoly(3);
    CHECK(q_reproduce(f, p, rng.frame(), Quaternion{0.5}).residual2 < 1e-13);
    const QReproducingResult gen = q_reproduce(f, {1.0, 1.0, 0.3, Order::infinite()}, rng.frame(), rng.ball(0.8));
    CHECK(gen.residual1 < 1e-6);
    CHECK(gen.residual2 < 1e-5);

    CHECK_THROWS_AS(q_reproduce(f, p, s, Quaternion{-0.4}), BranchError);
    CHECK_THROWS_AS(q_reproduce(f, p, s, Quaternion{0.9, 0.6}), DomainError);
}

TEST_CASE("slice differential identity") {
    test::Rng rng(78);
    for (int t = 0; t < 20; ++t) {
        const FFParams p{rng.u(0.2, 1.0), 1.0, rng.u(0.3, 1.0), t % 2 ? Order(1) : Order::infinite()};
        CHECK(q_prop1_identity_check(rng.qpoly(4), p, rng.frame(), rng.slit(0.2, 0.8, 2.8)) < 1e-6);
    }
    const FFParams half{1.0, 1.0, 0.5, Order(1)};
    CHECK(q_prop1_identity_check(QPowerSeries{units::e2}, half, SliceFrame::standard(), 0.3, 1e-5,
                                 WeightSign::printed) > 0.1);
}

}

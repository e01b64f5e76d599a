#include <cmath>
#include <random>

#include "doctest.h"

#include "oracles.hpp"
#include "triwalk/walk.hpp"

using namespace triwalk;

namespace {

const Complex kI(0.0, 1.0);

QubitState balanced() { return oracle::to_state(oracle::balanced()); }

}  // namespace

TEST_CASE("coin matrix entries") {
    const Matrix3 c = coin_matrix();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            CHECK(c(i, j) == Complex(i == j ? -1.0 / 3.0 : 2.0 / 3.0, 0.0));
        }
    }
    CHECK((c * c.adjoint() - Matrix3::Identity()).norm() < 1e-15);
}

TEST_CASE("projector rows partition the coin") {
    const auto p = projector_matrices();
    CHECK((p.left + p.stay + p.right - coin_matrix()).norm() == 0.0);
    const Vector3 e0(1.0, 0.0, 0.0);
    const Vector3 e1(0.0, 1.0, 0.0);
    CHECK((p.left * e0 - Vector3(-1.0 / 3.0, 0.0, 0.0)).norm() < 1e-16);
    CHECK((p.stay * e1 - Vector3(0.0, -1.0 / 3.0, 0.0)).norm() < 1e-16);
    CHECK(p.left.row(1).norm() == 0.0);
    CHECK(p.left.row(2).norm() == 0.0);
    CHECK(p.right.row(0).norm() == 0.0);
}

TEST_CASE("qubit normalization is enforced") {
    CHECK_THROWS_AS(QubitState(0.6, 0.8, 0.1), PhysicalInputError);
    CHECK_NOTHROW(QubitState(1.0, 0.0, 0.0));
    const QubitState q = QubitState::normalized(1.0, 1.0, 1.0);
    CHECK(q.amplitudes().norm_sq() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("initial line state sits at the origin") {
    const LineState s = initial_line_state(balanced());
    CHECK(s.origin() == 0);
    CHECK(s.last_site() == 0);
    CHECK(s.time() == 0);
    CHECK(s.amplitude(0).l == Complex(0.0, 1.0 / std::sqrt(2.0)));
    CHECK(s.amplitude(0).r == Complex(1.0 / std::sqrt(2.0), 0.0));
    CHECK(s.amplitude(1).norm_sq() == 0.0);
}

TEST_CASE("one step by hand") {
    SUBCASE("from L") {
        const LineState s = step_line(initial_line_state(QubitState(1.0, 0.0, 0.0)));
        CHECK(std::abs(s.amplitude(-1).l - Complex(-1.0 / 3.0)) < 1e-16);
        CHECK(std::abs(s.amplitude(0).zero - Complex(2.0 / 3.0)) < 1e-16);
        CHECK(std::abs(s.amplitude(1).r - Complex(2.0 / 3.0)) < 1e-16);
        const Distribution d = distribution(s);
        CHECK(d.at(-1).total == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
        CHECK(d.at(0).total == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
        CHECK(d.at(1).total == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    }
    SUBCASE("from 0") {
        const Distribution d = distribution(step_line(initial_line_state(QubitState(0.0, 1.0, 0.0))));
        CHECK(d.at(-1).total == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
        CHECK(d.at(0).total == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
        CHECK(d.at(1).total == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    }
    SUBCASE("from the symmetric complex state") {
        const Distribution d = distribution(step_line(initial_line_state(balanced())));
        CHECK(d.at(-1).total == doctest::Approx(5.0 / 18.0).epsilon(1e-14));
        CHECK(d.at(0).total == doctest::Approx(4.0 / 9.0).epsilon(1e-14));
        CHECK(d.at(1).total == doctest::Approx(5.0 / 18.0).epsilon(1e-14));
    }
}

TEST_CASE("zero steps is the identity") {
    const QubitState q = QubitState::normalized(Complex(0.3, 0.4), Complex(0.5, -0.2), Complex(0.1, 0.3));
    const LineState s = evolve_line(q, 0);
    CHECK(s.time() == 0);
    CHECK(s.amplitude(0) == q.amplitudes());
    const CycleState c = evolve_cycle(q, 3, 0);
    CHECK(c.amplitude(0) == q.amplitudes());
    CHECK(c.amplitude(1).norm_sq() == 0.0);
}

TEST_CASE("line evolution agrees with dense matrix stepping") {
    std::mt19937_64 rng(20240611);
    for (int trial = 0; trial < 5; ++trial) {
        const Vector3 v = oracle::random_qubit(rng);
        const auto dense = oracle::dense_line(v, 60);
        const LineState s = evolve_line(oracle::to_state(v), 60);
        double worst = 0.0;
        for (Site n = -61; n <= 61; ++n) {
            worst = std::max(worst, (s.amplitude(n).to_eigen() - dense.at(n)).norm());
        }
        CHECK(worst < 1e-13);
    }
}

TEST_CASE("origin probability at t = 500 and t = 1000") {
    // Independent dense evolution gives 0.2146696271231599 at t = 500; the
    // oscillation there is still about 0.013 away from the limit.
    const auto trace = trace_origin(balanced(), 1000);
    CHECK(trace.p0[500] == doctest::Approx(0.2146696271231599).epsilon(1e-12));
    CHECK(std::abs(trace.p0[1000] - (10.0 - 4.0 * std::sqrt(6.0))) < 0.01);
    CHECK(std::abs(trace.p0[500] - (10.0 - 4.0 * std::sqrt(6.0))) < 0.015);

    const auto zero = trace_origin(oracle::to_state(oracle::zero_localization()), 500);
    CHECK(zero.p0[500] < 0.01);
}

TEST_CASE("cycle wraps around") {
    const Distribution d = distribution(evolve_cycle(QubitState(1.0, 0.0, 0.0), 5, 1));
    CHECK(d.at(4).total == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK(d.at(0).total == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    CHECK(d.at(1).total == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)initial_cycle_state(QubitState(1.0, 0.0, 0.0), 4), PhysicalInputError);
}

TEST_CASE("cycle and line agree before wraparound") {
    const QubitState q = balanced();
    const std::size_t n_sites = 41;
    CycleState c = initial_cycle_state(q, n_sites);
    LineState l = initial_line_state(q);
    for (int t = 0; t < 20; ++t) {
        for (Site n = -static_cast<Site>(t); n <= static_cast<Site>(t); ++n) {
            REQUIRE(c.amplitude(n) == l.amplitude(n));
        }
        c = step_cycle(c);
        l = step_line(l);
    }
}

TEST_CASE("cycle conserves probability for 1000 steps") {
    CycleState c = initial_cycle_state(balanced(), 101);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        c = step_cycle(c);
        worst = std::max(worst, std::abs(c.total_probability() - 1.0));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("distribution of the initial state") {
    const Distribution d = distribution(initial_line_state(QubitState(1.0, 0.0, 0.0)));
    REQUIRE(d.entries().size() == 1);
    CHECK(d.entries()[0].n == 0);
    CHECK(d.entries()[0].total == 1.0);
    CHECK(d.entries()[0].l == 1.0);
    CHECK(d.entries()[0].zero == 0.0);
    CHECK(d.entries()[0].r == 0.0);
}

TEST_CASE("evolution is deterministic") {
    const QubitState q = QubitState::normalized(Complex(0.9, 0.05), -0.3, Complex(0.0, 0.4));
    const LineState a = evolve_line(q, 300);
    const LineState b = evolve_line(q, 300);
    REQUIRE(a.amplitudes().size() == b.amplitudes().size());
    for (std::size_t i = 0; i < a.amplitudes().size(); ++i) CHECK(a.amplitudes()[i] == b.amplitudes()[i]);
}

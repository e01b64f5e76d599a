#include <cmath>
#include <random>

#include "doctest.h"

#include "oracles.hpp"
#include "triwalk/spectral.hpp"
#include "triwalk/walk.hpp"

using namespace triwalk;

namespace {

std::vector<QubitState> sample_states(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<QubitState> out;
    for (int i = 0; i < count; ++i) out.push_back(oracle::to_state(oracle::random_qubit(rng)));
    return out;
}

}  // namespace

TEST_CASE("line unitarity up to t = 1000") {
    for (const auto& q : sample_states(1, 4)) {
        LineState s = initial_line_state(q);
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            s = step_line(s);
            worst = std::max(worst, std::abs(s.total_probability() - 1.0));
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("mirror symmetry") {
    for (const auto& q : sample_states(2, 6)) {
        const LineState a = evolve_line(q, 150);
        const LineState b = evolve_line(q.mirrored(), 150);
        double worst = 0.0;
        for (Site n = -150; n <= 150; ++n) {
            const auto pa = site_probability(n, a.amplitude(n));
            const auto pb = site_probability(-n, b.amplitude(-n));
            worst = std::max({worst, std::abs(pa.l - pb.r), std::abs(pa.zero - pb.zero), std::abs(pa.r - pb.l)});
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("support never outruns the light cone") {
    for (const auto& q : sample_states(3, 3)) {
        LineState s = initial_line_state(q);
        for (std::uint64_t t = 1; t <= 200; ++t) {
            s = step_line(s);
            REQUIRE(s.origin() == -static_cast<Site>(t));
            REQUIRE(s.last_site() == static_cast<Site>(t));
            CHECK(s.amplitude(static_cast<Site>(t) + 1).norm_sq() == 0.0);
            CHECK(s.amplitude(-static_cast<Site>(t) - 1).norm_sq() == 0.0);
        }
    }
    // On a 61-cycle sites beyond the light cone stay exactly zero until wraparound.
    const CycleState c = evolve_cycle(sample_states(4, 1)[0], 61, 20);
    for (Site n = 21; n <= 40; ++n) CHECK(c.amplitude(n).norm_sq() == 0.0);
}

TEST_CASE("eigenbasis orthonormal across a 1024-node grid") {
    const QuadratureGrid grid(1024);
    double gram = 0.0;
    double residual = 0.0;
    for (const auto& node : grid.nodes()) {
        const EigenSystem es = eigensystem(node.k);
        const Matrix3 u = fourier_operator(node.k);
        for (std::size_t i = 0; i < 3; ++i) {
            const Vector3 vi = es.vectors[i].to_eigen();
            residual = std::max(residual, (u * vi - std::polar(1.0, es.phases[i]) * vi).norm());
            for (std::size_t j = 0; j < 3; ++j) {
                gram = std::max(gram, std::abs(vi.dot(es.vectors[j].to_eigen()) - (i == j ? 1.0 : 0.0)));
            }
        }
        // Cached projectors resolve the identity.
        CHECK((node.stationary + node.forward + node.backward - Matrix3::Identity()).norm() < 1e-12);
    }
    CHECK(gram < 1e-12);
    CHECK(residual < 1e-12);
}

TEST_CASE("quadrature grid layout") {
    const QuadratureGrid grid(256);
    CHECK(grid.size() == 256);
    CHECK(QuadratureGrid::node_position(0, 256) == doctest::Approx(-oracle::kPi + oracle::kPi / 256.0));
    for (const auto& node : grid.nodes()) {
        CHECK(node.k != 0.0);
        CHECK(std::abs(node.k) < oracle::kPi);
    }
}

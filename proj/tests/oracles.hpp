#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerics: the walk is stepped with dense Eigen
// algebra and spectral data come from a general eigensolver.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "triwalk/types.hpp"

namespace oracle {

using triwalk::Complex;
using triwalk::Matrix3;
using triwalk::Vector3;

inline const double kPi = std::numbers::pi;
inline const double kC = -5.0 + 2.0 * std::sqrt(6.0);

inline Matrix3 grover() {
    Matrix3 c = Matrix3::Constant(Complex(2.0 / 3.0, 0.0));
    c.diagonal().setConstant(Complex(-1.0 / 3.0, 0.0));
    return c;
}

// Dense line evolution: psi[n + offset] with offset = steps + 1.
struct DenseWalk {
    std::int64_t offset;
    std::vector<Vector3> psi;

    Vector3 at(std::int64_t n) const {
        const std::int64_t i = n + offset;
        if (i < 0 || i >= static_cast<std::int64_t>(psi.size())) return Vector3::Zero();
        return psi[static_cast<std::size_t>(i)];
    }
    double prob(std::int64_t n) const { return at(n).squaredNorm(); }
};

inline DenseWalk dense_line(const Vector3& q, std::int64_t steps) {
    const Matrix3 c = grover();
    DenseWalk w{steps + 1, std::vector<Vector3>(static_cast<std::size_t>(2 * steps + 3), Vector3::Zero())};
    w.psi[static_cast<std::size_t>(w.offset)] = q;
    for (std::int64_t t = 0; t < steps; ++t) {
        std::vector<Vector3> next(w.psi.size(), Vector3::Zero());
        for (std::size_t i = 0; i < w.psi.size(); ++i) {
            const Vector3 phi = c * w.psi[i];
            if (i > 0) next[i - 1](0) += phi(0);
            next[i](1) += phi(1);
            if (i + 1 < next.size()) next[i + 1](2) += phi(2);
        }
        w.psi = std::move(next);
    }
    return w;
}

// P(0, t) on the odd N-cycle for t = 0..T-1, averaged.
inline double brute_cesaro(const Vector3& q, std::size_t n_sites, std::size_t horizon) {
    const Matrix3 c = grover();
    std::vector<Vector3> psi(n_sites, Vector3::Zero());
    psi[0] = q;
    double acc = 0.0;
    for (std::size_t t = 0; t < horizon; ++t) {
        acc += psi[0].squaredNorm();
        std::vector<Vector3> next(n_sites, Vector3::Zero());
        for (std::size_t i = 0; i < n_sites; ++i) {
            const Vector3 phi = c * psi[i];
            next[(i + n_sites - 1) % n_sites](0) += phi(0);
            next[i](1) += phi(1);
            next[(i + 1) % n_sites](2) += phi(2);
        }
        psi = std::move(next);
    }
    return acc / static_cast<double>(horizon);
}

inline Matrix3 fourier(double k) {
    Matrix3 d = Matrix3::Zero();
    d(0, 0) = std::polar(1.0, k);
    d(1, 1) = 1.0;
    d(2, 2) = std::polar(1.0, -k);
    return d * grover();
}

// Phase-1 eigenvector of U(k) from a general complex eigensolver.
inline Vector3 unit_eigenvector(double k) {
    Eigen::ComplexEigenSolver<Matrix3> es(fourier(k));
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < 3; ++i) {
        if (std::abs(es.eigenvalues()(i) - 1.0) < std::abs(es.eigenvalues()(best) - 1.0)) best = i;
    }
    return es.eigenvectors().col(best).normalized();
}

// Stationary amplitude (1/2pi) int e^{ikn} P_1(k) q dk by midpoint rule.
inline Vector3 stationary_amplitude(std::int64_t n, const Vector3& q, std::size_t nodes = 4096) {
    Vector3 acc = Vector3::Zero();
    for (std::size_t j = 0; j < nodes; ++j) {
        const double k = -kPi + (static_cast<double>(j) + 0.5) * 2.0 * kPi / static_cast<double>(nodes);
        const Vector3 v = unit_eigenvector(k);
        acc += std::polar(1.0, k * static_cast<double>(n)) * v * v.dot(q);
    }
    return acc / static_cast<double>(nodes);
}

inline Vector3 random_qubit(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Vector3 v;
    for (int i = 0; i < 3; ++i) v(i) = Complex(g(rng), g(rng));
    return v.normalized();
}

inline triwalk::QubitState to_state(const Vector3& v) { return triwalk::QubitState(v(0), v(1), v(2)); }

inline Vector3 balanced() { return Vector3(Complex(0.0, 1.0 / std::sqrt(2.0)), 0.0, 1.0 / std::sqrt(2.0)); }
inline Vector3 zero_localization() { return Vector3(1.0, -2.0, 1.0) / std::sqrt(6.0); }

}  // namespace oracle

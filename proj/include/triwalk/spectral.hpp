// Momentum-space description of the walk.
//
// In Fourier space one step is the 3x3 unitary
//
//   U(k) = diag(e^{ik}, 1, e^{-ik}) * coin,
//
// with eigenphases {0, +theta_k, -theta_k}. The phase-0 branch does not
// depend on k; it carries the localized part of the wavefunction. Real-space
// amplitudes are recovered by inverse Fourier integrals, evaluated here with
// a midpoint rule that never samples k = 0 or k = +-pi.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "triwalk/types.hpp"
#include "triwalk/walk.hpp"

namespace triwalk {

struct DispersionPoint {
    double k = 0.0;
    double cos_theta = 0.0;
    double sin_theta = 0.0;  // >= 0
    double theta = 0.0;      // in (0, pi]
};

// cos theta = -(2 + cos k)/3, sin theta = sqrt((5 + cos k)(1 - cos k))/3.
[[nodiscard]] DispersionPoint dispersion(double k);

// diag(e^{ik}, 1, e^{-ik}) * coin_matrix().
[[nodiscard]] Matrix3 fourier_operator(double k);

// zeta_l(theta) = 1 / (1 + e^{i x_l}) with x = (theta - k, theta, theta + k).
[[nodiscard]] ChiralVector zeta(double theta, double k);

// c_k(theta) = 2 / sum_l 1/(1 + cos x_l); equals 1 / ||zeta||^2.
[[nodiscard]] double eigen_normalization(double theta, double k);

// Eigenphases and orthonormal eigenvectors of U(k), branch j = 0, 1, 2
// carrying phase 0, +theta_k, -theta_k.
struct EigenSystem {
    double k = 0.0;
    std::array<double, 3> phases{};
    std::array<ChiralVector, 3> vectors{};

    // |v_j><v_j|
    [[nodiscard]] Matrix3 projector(std::size_t j) const;
};

// Throws SingularMomentumError at k = 0 (the -1 eigenspace is degenerate
// there) and std::domain_error outside [-pi, pi).
[[nodiscard]] EigenSystem eigensystem(double k);

// Projector onto the phase-0 eigenvector. Unlike eigensystem() this is
// fine at k = 0; it is singular only at k = +-pi.
[[nodiscard]] Matrix3 stationary_projector(double k);

// Uniform midpoint grid on [-pi, pi) with the spectral projectors cached at
// every node.
class QuadratureGrid {
public:
    static constexpr std::size_t kDefaultSize = 16384;
    // Smallest grid accepted by the wavefunction integrals.
    static constexpr std::size_t kMinimumSize = 256;

    explicit QuadratureGrid(std::size_t size = kDefaultSize);

    struct Node {
        double k;
        DispersionPoint dispersion;
        Matrix3 stationary;  // phase 0
        Matrix3 forward;     // phase +theta_k
        Matrix3 backward;    // phase -theta_k
    };

    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    [[nodiscard]] std::span<const Node> nodes() const { return nodes_; }
    // k_j = -pi + (j + 1/2) 2 pi / G
    [[nodiscard]] static double node_position(std::size_t j, std::size_t size);

private:
    std::vector<Node> nodes_;
};

// Full amplitude Psi(n, t) from the inverse Fourier integral over all three
// spectral branches. Throws std::invalid_argument if grid.size() < 256.
[[nodiscard]] ChiralVector wavefunction(Site n, std::uint64_t t, const QubitState& q,
                                        const QuadratureGrid& grid);

// Phase-0 branch only. It has no time argument: e^{i 0 t} = 1.
[[nodiscard]] ChiralVector stationary_part(Site n, const QubitState& q, const QuadratureGrid& grid);
[[nodiscard]] Complex stationary_component_integral(Site n, Chirality l, const QubitState& q,
                                                    const QuadratureGrid& grid);

// The two real oscillatory integrals
//   J_{n,t} = (1/2pi) int cos(kn) / (5 + cos k) cos(theta_k t) dk
//   K_{n,t} = (1/2pi) int cos(kn) / sqrt((5 + cos k)(1 - cos k)) sin(theta_k t) dk
struct OscillatoryKernels {
    double j_value = 0.0;
    double k_value = 0.0;
};

[[nodiscard]] double j_kernel(Site n, std::uint64_t t, const QuadratureGrid& grid);
[[nodiscard]] double k_kernel(Site n, std::uint64_t t, const QuadratureGrid& grid);
[[nodiscard]] OscillatoryKernels oscillatory_kernels(Site n, std::uint64_t t,
                                                     const QuadratureGrid& grid);

// 3x3 real matrix M with sum_{j=2,3} Psi_j(n, t) = M (alpha, beta, gamma)^T,
// built from J and K at n-1, n, n+1.
struct RemainderMatrix {
    Matrix3 m = Matrix3::Zero();
};

[[nodiscard]] RemainderMatrix remainder_matrix(Site n, std::uint64_t t, const QuadratureGrid& grid);

// The oscillating (phase +-theta_k) part of Psi(n, t).
[[nodiscard]] ChiralVector oscillatory_remainder(Site n, std::uint64_t t, const QubitState& q,
                                                 const QuadratureGrid& grid);

}  // namespace triwalk

#include "triwalk/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pairwise_sum.hpp"

namespace triwalk {

namespace {

constexpr double kPi = std::numbers::pi;

// pi - |x| for x = s (pi - phi) + shift, s in {-1, 0, 1}. Exact cancellation
// is avoided by working with phi = pi - theta directly.
double defect(int s, double phi, double shift) {
    if (s == 0) return kPi - std::abs(shift);
    const double x = s * (kPi - phi) + shift;
    const double sg = x < 0.0 ? -1.0 : 1.0;
    return sg * s > 0 ? phi - sg * shift : 2.0 * kPi - phi - sg * shift;
}

// 1 / (1 + e^{ix}) = e^{-ix/2} / (2 cos(x/2)) with cos(x/2) = sin(d/2),
// d = pi - |x|, so the magnitude keeps full relative precision near x = +-pi.
Complex inverse_one_plus_phase(int s, double phi, double shift) {
    const double x = s * (kPi - phi) + shift;
    return std::polar(1.0 / (2.0 * std::sin(0.5 * defect(s, phi, shift))), -0.5 * x);
}

ChiralVector zeta_branch(int s, double phi, double k) {
    return {inverse_one_plus_phase(s, phi, -k), inverse_one_plus_phase(s, phi, 0.0),
            inverse_one_plus_phase(s, phi, k)};
}

// 2 / sum 1 / (1 + cos x), with 1 + cos x = 2 sin^2(d/2).
double normalization_branch(int s, double phi, double k) {
    double acc = 0.0;
    for (const double shift : {-k, 0.0, k}) {
        const double h = std::sin(0.5 * defect(s, phi, shift));
        acc += 1.0 / (2.0 * h * h);
    }
    return 2.0 / acc;
}

int branch_sign(double theta) { return theta > 0.0 ? 1 : (theta < 0.0 ? -1 : 0); }

ChiralVector normalized_branch(int s, double phi, double k) {
    return Complex(std::sqrt(normalization_branch(s, phi, k))) * zeta_branch(s, phi, k);
}

void require_grid(const QuadratureGrid& grid) {
    if (grid.size() < QuadratureGrid::kMinimumSize) {
        throw std::invalid_argument("quadrature grid too small: " + std::to_string(grid.size()) +
                                    " < " + std::to_string(QuadratureGrid::kMinimumSize));
    }
}

Matrix3 outer(const ChiralVector& v) {
    const Vector3 e = v.to_eigen();
    return e * e.adjoint();
}

}  // namespace

DispersionPoint dispersion(double k) {
    DispersionPoint p;
    p.k = k;
    const double cos_k = std::cos(k);
    const double half_sin = std::sin(0.5 * k);
    // 1 - cos k = 2 sin^2(k/2)
    p.cos_theta = -(2.0 + cos_k) / 3.0;
    p.sin_theta = std::sqrt((5.0 + cos_k) * 2.0 * half_sin * half_sin) / 3.0;
    p.theta = std::atan2(p.sin_theta, p.cos_theta);
    return p;
}

Matrix3 fourier_operator(double k) {
    Matrix3 shift = Matrix3::Zero();
    shift(0, 0) = std::polar(1.0, k);
    shift(1, 1) = 1.0;
    shift(2, 2) = std::polar(1.0, -k);
    return shift * coin_matrix();
}

ChiralVector zeta(double theta, double k) {
    return zeta_branch(branch_sign(theta), kPi - std::abs(theta), k);
}

double eigen_normalization(double theta, double k) {
    return normalization_branch(branch_sign(theta), kPi - std::abs(theta), k);
}

Matrix3 EigenSystem::projector(std::size_t j) const { return outer(vectors.at(j)); }

EigenSystem eigensystem(double k) {
    if (!(k >= -kPi && k < kPi)) {
        throw std::domain_error("momentum outside [-pi, pi): " + std::to_string(k));
    }
    if (k == 0.0) {
        throw SingularMomentumError("eigenvectors are not defined at k = 0");
    }
    const DispersionPoint d = dispersion(k);
    EigenSystem es;
    es.k = k;
    es.phases = {0.0, d.theta, -d.theta};
    // pi - theta straight from the dispersion, without subtracting from pi.
    const double phi = std::atan2(d.sin_theta, (2.0 + std::cos(k)) / 3.0);
    es.vectors[0] = normalized_branch(0, kPi, k);
    es.vectors[1] = normalized_branch(1, phi, k);
    es.vectors[2] = normalized_branch(-1, phi, k);
    return es;
}

Matrix3 stationary_projector(double k) { return outer(normalized_branch(0, kPi, k)); }

// ---------------------------------------------------------------------------

double QuadratureGrid::node_position(std::size_t j, std::size_t size) {
    return -kPi + (static_cast<double>(j) + 0.5) * (2.0 * kPi / static_cast<double>(size));
}

QuadratureGrid::QuadratureGrid(std::size_t size) {
    if (size == 0) throw std::invalid_argument("quadrature grid needs at least one node");
    nodes_.reserve(size);
    for (std::size_t j = 0; j < size; ++j) {
        const double k = node_position(j, size);
        const EigenSystem es = eigensystem(k);
        nodes_.push_back(
            Node{k, dispersion(k), es.projector(0), es.projector(1), es.projector(2)});
    }
}

ChiralVector wavefunction(Site n, std::uint64_t t, const QubitState& q,
                          const QuadratureGrid& grid) {
    require_grid(grid);
    const Vector3 psi0 = q.amplitudes().to_eigen();
    const auto nodes = grid.nodes();
    const double tt = static_cast<double>(t);
    const double nn = static_cast<double>(n);
    const ChiralVector sum = detail::pairwise_sum<ChiralVector>(0, nodes.size(), [&](std::size_t j) {
        const auto& node = nodes[j];
        const double phase = node.dispersion.theta * tt;
        const Complex fwd = std::polar(1.0, phase);
        const Matrix3 evolved = node.stationary + fwd * node.forward + std::conj(fwd) * node.backward;
        return std::polar(1.0, node.k * nn) * ChiralVector::from_eigen(evolved * psi0);
    });
    return Complex(1.0 / static_cast<double>(nodes.size())) * sum;
}

ChiralVector stationary_part(Site n, const QubitState& q, const QuadratureGrid& grid) {
    require_grid(grid);
    const Vector3 psi0 = q.amplitudes().to_eigen();
    const auto nodes = grid.nodes();
    const double nn = static_cast<double>(n);
    const ChiralVector sum = detail::pairwise_sum<ChiralVector>(0, nodes.size(), [&](std::size_t j) {
        return std::polar(1.0, nodes[j].k * nn) *
               ChiralVector::from_eigen(nodes[j].stationary * psi0);
    });
    return Complex(1.0 / static_cast<double>(nodes.size())) * sum;
}

Complex stationary_component_integral(Site n, Chirality l, const QubitState& q,
                                      const QuadratureGrid& grid) {
    return stationary_part(n, q, grid)[l];
}

// ---------------------------------------------------------------------------

double j_kernel(Site n, std::uint64_t t, const QuadratureGrid& grid) {
    const auto nodes = grid.nodes();
    const double tt = static_cast<double>(t);
    const double nn = static_cast<double>(n);
    const double sum = detail::pairwise_sum<double>(0, nodes.size(), [&](std::size_t j) {
        const auto& d = nodes[j].dispersion;
        return std::cos(d.k * nn) / (5.0 + std::cos(d.k)) * std::cos(d.theta * tt);
    });
    return sum / static_cast<double>(nodes.size());
}

double k_kernel(Site n, std::uint64_t t, const QuadratureGrid& grid) {
    const auto nodes = grid.nodes();
    const double tt = static_cast<double>(t);
    const double nn = static_cast<double>(n);
    // sqrt((5 + cos k)(1 - cos k)) = 3 sin(theta_k), which is positive at
    // every midpoint node.
    const double sum = detail::pairwise_sum<double>(0, nodes.size(), [&](std::size_t j) {
        const auto& d = nodes[j].dispersion;
        return std::cos(d.k * nn) / (3.0 * d.sin_theta) * std::sin(d.theta * tt);
    });
    return sum / static_cast<double>(nodes.size());
}

OscillatoryKernels oscillatory_kernels(Site n, std::uint64_t t, const QuadratureGrid& grid) {
    return {j_kernel(n, t, grid), k_kernel(n, t, grid)};
}

RemainderMatrix remainder_matrix(Site n, std::uint64_t t, const QuadratureGrid& grid) {
    const double jm = j_kernel(n - 1, t, grid);
    const double j0 = j_kernel(n, t, grid);
    const double jp = j_kernel(n + 1, t, grid);
    const double km = k_kernel(n - 1, t, grid);
    const double k0 = k_kernel(n, t, grid);
    const double kp = k_kernel(n + 1, t, grid);

    RemainderMatrix r;
    auto& m = r.m;
    m(0, 0) = 3.0 * j0 + 0.5 * (jm + jp + (km - kp));
    m(2, 2) = 3.0 * j0 + 0.5 * (jm + jp - (km - kp));
    m(0, 1) = -(j0 + jp + (k0 - kp));
    m(2, 1) = -(j0 + jm + (k0 - km));
    m(0, 2) = -2.0 * jp;
    m(2, 0) = -2.0 * jm;
    m(1, 0) = -(j0 + jm + (km - k0));
    m(1, 2) = -(j0 + jp + (kp - k0));
    m(1, 1) = 4.0 * j0;
    return r;
}

ChiralVector oscillatory_remainder(Site n, std::uint64_t t, const QubitState& q,
                                   const QuadratureGrid& grid) {
    const RemainderMatrix r = remainder_matrix(n, t, grid);
    return ChiralVector::from_eigen(r.m * q.amplitudes().to_eigen());
}

}  // namespace triwalk

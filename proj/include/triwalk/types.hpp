// Shared value types for the three-state walk: chirality triples, qubit
// states and the error types the rest of the library throws.

#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Core>

namespace triwalk {

using Complex = std::complex<double>;
using Matrix3 = Eigen::Matrix3cd;
using Vector3 = Eigen::Vector3cd;

// Chirality index. The integer values double as array offsets; the
// L, 0, R ordering matches the column-vector layout of every operator.
enum class Chirality : std::size_t { L = 0, Zero = 1, R = 2 };

inline constexpr std::array<Chirality, 3> kChiralities = {Chirality::L, Chirality::Zero,
                                                          Chirality::R};

// Thrown for inputs that are syntactically fine but physically invalid:
// unnormalized qubits, even cycle lengths.
class PhysicalInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The closed-form eigenvectors are undefined at k = 0.
class SingularMomentumError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Amplitudes (psi_L, psi_0, psi_R) at one site.
struct ChiralVector {
    Complex l{};
    Complex zero{};
    Complex r{};

    [[nodiscard]] const Complex& operator[](Chirality c) const {
        switch (c) {
            case Chirality::L: return l;
            case Chirality::Zero: return zero;
            case Chirality::R: return r;
        }
        return r;
    }
    [[nodiscard]] Complex& operator[](Chirality c) {
        return const_cast<Complex&>(std::as_const(*this)[c]);
    }

    [[nodiscard]] double norm_sq() const { return std::norm(l) + std::norm(zero) + std::norm(r); }

    [[nodiscard]] Vector3 to_eigen() const { return Vector3(l, zero, r); }
    [[nodiscard]] static ChiralVector from_eigen(const Vector3& v) { return {v(0), v(1), v(2)}; }

    ChiralVector& operator+=(const ChiralVector& o) {
        l += o.l;
        zero += o.zero;
        r += o.r;
        return *this;
    }
    friend ChiralVector operator+(ChiralVector a, const ChiralVector& b) { return a += b; }
    friend ChiralVector operator-(const ChiralVector& a, const ChiralVector& b) {
        return {a.l - b.l, a.zero - b.zero, a.r - b.r};
    }
    friend ChiralVector operator*(Complex s, const ChiralVector& v) {
        return {s * v.l, s * v.zero, s * v.r};
    }
    friend bool operator==(const ChiralVector&, const ChiralVector&) = default;
};

// Largest componentwise modulus of a - b.
[[nodiscard]] inline double max_abs_diff(const ChiralVector& a, const ChiralVector& b) {
    return std::max({std::abs(a.l - b.l), std::abs(a.zero - b.zero), std::abs(a.r - b.r)});
}

// Initial chirality amplitudes (alpha, beta, gamma) of a walker at the origin.
class QubitState {
public:
    // Accepted deviation of the Euclidean norm from one.
    static constexpr double kNormTolerance = 1e-9;

    // Throws PhysicalInputError when | ||q|| - 1 | > kNormTolerance.
    QubitState(Complex alpha, Complex beta, Complex gamma);

    // Scales an arbitrary nonzero triple onto the unit sphere.
    [[nodiscard]] static QubitState normalized(Complex alpha, Complex beta, Complex gamma);

    [[nodiscard]] Complex alpha() const { return amps_.l; }
    [[nodiscard]] Complex beta() const { return amps_.zero; }
    [[nodiscard]] Complex gamma() const { return amps_.r; }
    [[nodiscard]] const ChiralVector& amplitudes() const { return amps_; }

    // (alpha, beta, gamma) -> (gamma, beta, alpha); pairs with site reflection.
    [[nodiscard]] QubitState mirrored() const { return {amps_.r, amps_.zero, amps_.l}; }

    [[nodiscard]] std::string to_string() const;

private:
    ChiralVector amps_;
};

}  // namespace triwalk

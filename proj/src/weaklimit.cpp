#include "triwalk/weaklimit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "triwalk/stationary.hpp"
#include "triwalk/walk.hpp"

namespace triwalk::weaklimit {

namespace {

constexpr double kPi = std::numbers::pi;
const double kEdge3 = 1.0 / std::sqrt(3.0);
const double kEdge2 = 1.0 / std::sqrt(2.0);

void require_unit_interval(double x) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw std::domain_error("x outside [-1, 1]: " + std::to_string(x));
    }
}

// Integrate g(u) over u in (asin(a/edge), asin(b/edge)) with a, b clipped
// to the support (-edge, edge).
template <class F>
double integrate_substituted(double a, double b, double edge, F&& g) {
    const double lo = std::max(a, -edge);
    const double hi = std::min(b, edge);
    if (!(lo < hi)) return 0.0;
    const double ulo = std::asin(std::clamp(lo / edge, -1.0, 1.0));
    const double uhi = std::asin(std::clamp(hi / edge, -1.0, 1.0));
    double error = 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(g, ulo, uhi, 15, 1e-14,
                                                                         &error);
}

}  // namespace

double density(double x) {
    require_unit_interval(x);
    if (!(std::abs(x) < kEdge3)) return 0.0;
    return std::sqrt(8.0) / (3.0 * kPi * (1.0 - x * x) * std::sqrt(1.0 - 3.0 * x * x));
}

double hadamard_density(double x) {
    require_unit_interval(x);
    if (!(std::abs(x) < kEdge2)) return 0.0;
    return 1.0 / (kPi * (1.0 - x * x) * std::sqrt(1.0 - 2.0 * x * x));
}

double continuous_mass(double a, double b) {
    // x = sin(u)/sqrt(3): dx / sqrt(1 - 3x^2) = du / sqrt(3).
    const double scale = std::sqrt(8.0) / (3.0 * kPi * std::sqrt(3.0));
    return integrate_substituted(a, b, kEdge3, [scale](double u) {
        const double s = std::sin(u);
        return scale / (1.0 - s * s / 3.0);
    });
}

double continuous_mass() { return continuous_mass(-1.0, 1.0); }

double hadamard_mass(double a, double b) {
    const double scale = 1.0 / (kPi * std::sqrt(2.0));
    return integrate_substituted(a, b, kEdge2, [scale](double u) {
        const double s = std::sin(u);
        return scale / (1.0 - s * s / 2.0);
    });
}

double localization_mass() {
    const double sum = stationary::total_mass(QubitState(1.0, 0.0, 0.0)) +
                       stationary::total_mass(QubitState(0.0, 1.0, 0.0)) +
                       stationary::total_mass(QubitState(0.0, 0.0, 1.0));
    return sum / 3.0;
}

double limit_cdf(double x) {
    if (x <= -kEdge3) return 0.0;
    if (x >= kEdge3) return 1.0;
    const double continuous =
        1.0 / 3.0 + (2.0 / (3.0 * kPi)) * std::atan(std::sqrt(2.0) * x / std::sqrt(1.0 - 3.0 * x * x));
    return x >= 0.0 ? continuous + kPointMassWeight : continuous;
}

double EmpiricalRescaled::total_mass() const {
    double sum = 0.0;
    for (const auto& a : atoms) sum += a.mass;
    return sum;
}

EmpiricalRescaled empirical_rescaled(std::uint64_t t) {
    if (t < 100) {
        throw std::invalid_argument("empirical_rescaled needs t >= 100, got " + std::to_string(t));
    }
    const Distribution left = distribution(evolve_line(QubitState(1.0, 0.0, 0.0), t));
    const Distribution stay = distribution(evolve_line(QubitState(0.0, 1.0, 0.0), t));
    const Distribution right = distribution(evolve_line(QubitState(0.0, 0.0, 1.0), t));

    EmpiricalRescaled e;
    e.t = t;
    const auto span = static_cast<Site>(t);
    e.atoms.reserve(static_cast<std::size_t>(2 * span + 1));
    for (Site n = -span; n <= span; ++n) {
        const double mass = (left.at(n).total + stay.at(n).total + right.at(n).total) / 3.0;
        e.atoms.push_back({static_cast<double>(n) / static_cast<double>(t), mass});
    }
    return e;
}

std::vector<CdfRow> cdf_table(const EmpiricalRescaled& e) {
    std::vector<CdfRow> rows;
    rows.reserve(e.atoms.size());
    double cumulative = 0.0;
    for (const auto& a : e.atoms) {
        cumulative += a.mass;
        rows.push_back({a.x, cumulative, limit_cdf(a.x)});
    }
    return rows;
}

double cdf_distance(const EmpiricalRescaled& e) {
    double worst = 0.0;
    double below = 0.0;  // F_emp(x-)
    bool saw_zero = false;
    for (const auto& a : e.atoms) {
        const double above = below + a.mass;
        // The limit CDF is continuous except at 0, where F(0-) = 1/3.
        const double limit_left = a.x == 0.0 ? limit_cdf(0.0) - kPointMassWeight : limit_cdf(a.x);
        worst = std::max({worst, std::abs(below - limit_left), std::abs(above - limit_cdf(a.x))});
        saw_zero = saw_zero || a.x == 0.0;
        below = above;
    }
    if (!saw_zero) {
        // Empirical CDF is flat across 0; compare against both sides of the jump.
        double at_zero = 0.0;
        for (const auto& a : e.atoms) {
            if (a.x < 0.0) at_zero += a.mass;
        }
        worst = std::max({worst, std::abs(at_zero - (limit_cdf(0.0) - kPointMassWeight)),
                          std::abs(at_zero - limit_cdf(0.0))});
    }
    return worst;
}

}  // namespace triwalk::weaklimit

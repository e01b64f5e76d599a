#include "triwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "triwalk/spectral.hpp"
#include "triwalk/stationary.hpp"
#include "triwalk/timeavg.hpp"
#include "triwalk/walk.hpp"
#include "triwalk/weaklimit.hpp"

namespace triwalk::verify {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

Check check(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok, std::move(detail)};
}

// |measured - expected| <= tol
Check near(std::string name, double measured, double expected, double tol) {
    const double err = std::abs(measured - expected);
    return check(std::move(name), err <= tol,
                 "got " + num(measured) + ", want " + num(expected) + " (err " + num(err) +
                     ", tol " + num(tol) + ")");
}

Check below(std::string name, double measured, double bound) {
    return check(std::move(name), measured < bound,
                 "got " + num(measured) + ", bound " + num(bound));
}

double origin_probability_after(const QubitState& q, std::uint64_t t) {
    return evolve_line(q, t).amplitude(0).norm_sq();
}

// Explicit time loop: (1/T) sum_{t<T} P(site, t) on the N-cycle.
double brute_force_cycle_average(std::size_t n_sites, const QubitState& q, Site site,
                                 std::uint64_t steps) {
    CycleState s = initial_cycle_state(q, n_sites);
    double sum = 0.0;
    for (std::uint64_t t = 0; t < steps; ++t) {
        sum += s.amplitude(site).norm_sq();
        s = step_cycle(s);
    }
    return sum / static_cast<double>(steps);
}

CriterionResult stationary_origin() {
    CriterionResult r;
    r.checks.push_back(near("P_*(0) for (i/sqrt2, 0, 1/sqrt2)",
                            stationary::limit_probability(0, balanced_state()), 10.0 - 4.0 * kSqrt6,
                            1e-12));
    return r;
}

CriterionResult total_localized_mass() {
    CriterionResult r;
    r.checks.push_back(near("total mass (i/sqrt2, 0, 1/sqrt2)",
                            stationary::total_mass(balanced_state()), 1.0 / kSqrt6, 1e-12));
    const double u = 1.0 / kSqrt3;
    r.checks.push_back(near("total mass (1, 1, 1)/sqrt3",
                            stationary::total_mass(QubitState(u, u, u)), 3.0 - kSqrt6, 1e-12));
    r.checks.push_back(near("total mass (1, -1, 1)/sqrt3",
                            stationary::total_mass(QubitState(u, -u, u)), (3.0 - kSqrt6) / 9.0,
                            1e-12));
    return r;
}

CriterionResult simulation_to_limit() {
    CriterionResult r;
    r.checks.push_back(near("P(0, 1000) vs 10 - 4 sqrt6",
                            origin_probability_after(balanced_state(), 1000), 10.0 - 4.0 * kSqrt6,
                            0.01));
    return r;
}

CriterionResult zero_localization() {
    CriterionResult r;
    const QubitState q = zero_state();
    r.checks.push_back(below("P(0, 1000) for (1, -2, 1)/sqrt6", origin_probability_after(q, 1000),
                             0.01));
    double worst = 0.0;
    for (Site n = -20; n <= 20; ++n) {
        for (const Chirality c : kChiralities) {
            worst = std::max(worst, std::abs(stationary::limit_component(n, c, q)));
        }
    }
    r.checks.push_back(near("max |P_*(n; l)| over |n| <= 20", worst, 0.0, 1e-12));
    r.checks.push_back(near("total mass", stationary::total_mass(q), 0.0, 1e-12));
    r.checks.push_back(near("time-averaged origin probability",
                            timeavg::infinite_time_average_total(q), 0.0, 1e-12));
    return r;
}

std::vector<QubitState> equivalence_states() {
    std::vector<QubitState> out;
    for (const auto& s : reference_states()) out.push_back(s.state);
    return out;
}

CriterionResult spectral_direct(const Options& options) {
    CriterionResult r;
    const QuadratureGrid grid(options.grid_size);
    const auto states = equivalence_states();
    double worst = 0.0;
    std::size_t evaluated = 0;
    for (const auto& q : states) {
        for (const std::uint64_t t : {1u, 5u, 20u, 50u}) {
            const LineState direct = evolve_line(q, t);
            const auto span = static_cast<Site>(t);
            for (Site n = -span; n <= span; ++n) {
                worst = std::max(worst, max_abs_diff(wavefunction(n, t, q, grid),
                                                     direct.amplitude(n)));
                ++evaluated;
            }
        }
    }
    Check c = below("max componentwise |spectral - direct|", worst, 1e-6);
    c.detail += "; " + std::to_string(states.size()) + " states, " + std::to_string(evaluated) +
                " amplitudes, G = " + std::to_string(grid.size());
    r.checks.push_back(std::move(c));
    return r;
}

CriterionResult remainder_decomposition(const Options& options) {
    CriterionResult r;
    const QuadratureGrid grid(options.grid_size);
    const auto states = equivalence_states();
    double worst = 0.0;
    for (const auto& q : states) {
        std::vector<ChiralVector> stay;
        for (Site n = -20; n <= 20; ++n) stay.push_back(stationary_part(n, q, grid));
        for (const std::uint64_t t : {0u, 1u, 2u, 5u, 10u, 20u, 50u}) {
            const LineState direct = evolve_line(q, t);
            for (Site n = -20; n <= 20; ++n) {
                const ChiralVector rebuilt =
                    oscillatory_remainder(n, t, q, grid) + stay[static_cast<std::size_t>(n + 20)];
                worst = std::max(worst, max_abs_diff(rebuilt, direct.amplitude(n)));
            }
        }
    }
    r.checks.push_back(below("max |remainder + stationary - direct|, |n| <= 20, t <= 50", worst,
                             1e-6));

    const double j10 = std::abs(j_kernel(0, 10, grid));
    const double j1000 = std::abs(j_kernel(0, 1000, grid));
    const double k10 = std::abs(k_kernel(0, 10, grid) - k_kernel(1, 10, grid));
    const double k1000 = std::abs(k_kernel(0, 1000, grid) - k_kernel(1, 1000, grid));
    r.checks.push_back(below("|J_{0,1000}| below |J_{0,10}|", j1000, j10));
    r.checks.push_back(below("|J_{0,1000}| below 1e-2", j1000, 1e-2));
    r.checks.push_back(below("|K_{0,1000} - K_{1,1000}| below t = 10 value", k1000, k10));
    r.checks.push_back(below("|K_{0,1000} - K_{1,1000}| below 1e-2", k1000, 1e-2));
    return r;
}

CriterionResult time_average_chain() {
    CriterionResult r;
    const auto states = equivalence_states();

    double worst_brute = 0.0;
    for (const auto& q : states) {
        worst_brute = std::max(worst_brute, std::abs(timeavg::cycle_time_average(7, q, 0) -
                                                     brute_force_cycle_average(7, q, 0, 100000)));
    }
    r.checks.push_back(below("N = 7 projection vs explicit Cesaro average (T = 1e5)", worst_brute,
                             1e-3));

    bool monotone = true;
    double worst_scaled = 0.0;
    std::string gaps;
    for (const auto& q : states) {
        const double limit = timeavg::infinite_time_average_total(q);
        double previous = INFINITY;
        for (const std::size_t n : {51u, 101u, 201u}) {
            const double gap = std::abs(timeavg::cycle_time_average(n, q, 0) - limit);
            monotone = monotone && gap < previous;
            previous = gap;
            worst_scaled = std::max(worst_scaled, gap * static_cast<double>(n));
        }
        gaps += (gaps.empty() ? "" : ", ") + num(previous);
    }
    r.checks.push_back(check("gap to N -> infinity limit shrinks over N = 51, 101, 201", monotone,
                             "gaps at N = 201: " + gaps));
    r.checks.push_back(below("max N * gap (O(1/N) constant)", worst_scaled, 5.0));

    double worst_component = 0.0;
    for (const auto& q : states) {
        for (const Chirality c : kChiralities) {
            worst_component =
                std::max(worst_component, std::abs(timeavg::infinite_time_average_component(c, q) -
                                                   stationary::limit_component(0, c, q)));
        }
    }
    r.checks.push_back(near("time-average components vs stationary components at n = 0",
                            worst_component, 0.0, 1e-12));
    return r;
}

CriterionResult geometric_decay() {
    CriterionResult r;
    const double c = stationary::decay_constant();
    const double c2 = c * c;
    double worst = 0.0;
    std::size_t used = 0;
    for (const auto& s : reference_states()) {
        if (stationary::limit_probability(1, s.state) < 1e-20) continue;
        ++used;
        for (Site n = 1; n <= 20; ++n) {
            const double ratio = stationary::limit_probability(n + 1, s.state) /
                                 stationary::limit_probability(n, s.state);
            worst = std::max(worst, std::abs(ratio - c2));
        }
    }
    Check k = below("max |P_*(n+1)/P_*(n) - c^2|, 1 <= n <= 20", worst, 1e-12);
    k.detail += "; " + std::to_string(used) + " states";
    r.checks.push_back(std::move(k));
    return r;
}

CriterionResult weak_limit() {
    CriterionResult r;
    r.checks.push_back(near("point mass from stationary totals", weaklimit::localization_mass(),
                            1.0 / 3.0, 1e-12));
    r.checks.push_back(near("continuous integral", weaklimit::continuous_mass(), 2.0 / 3.0, 1e-6));
    const double d100 = weaklimit::cdf_distance(weaklimit::empirical_rescaled(100));
    const double d200 = weaklimit::cdf_distance(weaklimit::empirical_rescaled(200));
    const double d500 = weaklimit::cdf_distance(weaklimit::empirical_rescaled(500));
    r.checks.push_back(below("Kolmogorov distance at t = 500", d500, 0.05));
    r.checks.push_back(check("Kolmogorov distance decreasing over t = 100, 200, 500",
                             d100 > d200 && d200 > d500,
                             "got " + num(d100) + ", " + num(d200) + ", " + num(d500)));
    return r;
}

CriterionResult properties() {
    CriterionResult r;
    const auto states = equivalence_states();

    double worst_line = 0.0;
    double worst_cycle = 0.0;
    bool support_ok = true;
    double worst_mirror = 0.0;
    for (const auto& q : states) {
        LineState line = initial_line_state(q);
        const QubitState mirrored_q = q.mirrored();
        LineState mirror = initial_line_state(mirrored_q);
        CycleState cycle = initial_cycle_state(q, 101);
        for (std::uint64_t t = 1; t <= 1000; ++t) {
            line = step_line(line);
            mirror = step_line(mirror);
            cycle = step_cycle(cycle);
            worst_line = std::max(worst_line, std::abs(line.total_probability() - 1.0));
            worst_cycle = std::max(worst_cycle, std::abs(cycle.total_probability() - 1.0));
            const auto span = static_cast<Site>(t);
            support_ok = support_ok && line.origin() == -span && line.last_site() == span;
            if (t % 50 == 0 || t <= 20) {
                for (Site n = -span; n <= span; ++n) {
                    const ChiralVector a = line.amplitude(n);
                    const ChiralVector b = mirror.amplitude(-n);
                    worst_mirror = std::max({worst_mirror, std::abs(std::norm(a.l) - std::norm(b.r)),
                                             std::abs(std::norm(a.zero) - std::norm(b.zero)),
                                             std::abs(std::norm(a.r) - std::norm(b.l))});
                }
            }
        }
    }
    r.checks.push_back(below("line unitarity max |sum P - 1|, t <= 1000", worst_line, 1e-12));
    r.checks.push_back(below("cycle (N = 101) unitarity max |sum P - 1|, t <= 1000", worst_cycle,
                             1e-12));
    r.checks.push_back(below("mirror symmetry max |P(n; L) - P'(-n; R)|", worst_mirror, 1e-12));

    // Support: a cycle larger than the light cone must hold exact zeros
    // beyond distance t from the start.
    for (const auto& q : states) {
        CycleState cycle = initial_cycle_state(q, 61);
        for (std::uint64_t t = 1; t <= 25; ++t) {
            cycle = step_cycle(cycle);
            for (Site n = static_cast<Site>(t) + 1; n < 61 - static_cast<Site>(t); ++n) {
                support_ok = support_ok && cycle.amplitude(n) == ChiralVector{};
            }
        }
    }
    r.checks.push_back(check("support bound |n| <= t", support_ok,
                             support_ok ? "window and zeros exact" : "amplitude outside light cone"));

    double worst_gram = 0.0;
    double worst_residual = 0.0;
    const std::size_t nodes = 1024;
    for (std::size_t j = 0; j < nodes; ++j) {
        const double k = QuadratureGrid::node_position(j, nodes);
        const EigenSystem es = eigensystem(k);
        const Matrix3 u = fourier_operator(k);
        for (std::size_t a = 0; a < 3; ++a) {
            const Vector3 va = es.vectors[a].to_eigen();
            worst_residual = std::max(
                worst_residual, (u * va - std::polar(1.0, es.phases[a]) * va).norm());
            for (std::size_t b = 0; b < 3; ++b) {
                const Complex g = va.dot(es.vectors[b].to_eigen());
                worst_gram = std::max(worst_gram, std::abs(g - (a == b ? 1.0 : 0.0)));
            }
        }
    }
    r.checks.push_back(below("eigenvector Gram deviation, 1024 nodes", worst_gram, 1e-12));
    r.checks.push_back(below("eigen-residual, 1024 nodes", worst_residual, 1e-12));
    return r;
}

}  // namespace

QubitState balanced_state() { return {Complex(0.0, 1.0 / kSqrt2), 0.0, 1.0 / kSqrt2}; }

QubitState zero_state() { return {1.0 / kSqrt6, -2.0 / kSqrt6, 1.0 / kSqrt6}; }

const std::vector<NamedState>& reference_states() {
    static const std::vector<NamedState> states = [] {
        const double u = 1.0 / kSqrt3;
        return std::vector<NamedState>{
            {"balanced", balanced_state()},
            {"basis-L", QubitState(1.0, 0.0, 0.0)},
            {"basis-0", QubitState(0.0, 1.0, 0.0)},
            {"basis-R", QubitState(0.0, 0.0, 1.0)},
            {"uniform", QubitState(u, u, u)},
            {"alternating", QubitState(u, -u, u)},
            {"zero", zero_state()},
            {"complex-a", QubitState::normalized({0.3, 0.4}, {0.5, -0.2}, {0.1, 0.3})},
            {"complex-b", QubitState::normalized({-0.7, 0.1}, {0.2, 0.6}, {0.25, -0.35})},
            {"complex-c", QubitState::normalized({0.9, 0.05}, {-0.3, 0.0}, {0.0, 0.4})},
        };
    }();
    return states;
}

bool CriterionResult::passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::string criterion_title(int id) {
    switch (id) {
        case 1: return "stationary origin value";
        case 2: return "total localized mass";
        case 3: return "simulation approaches the limit";
        case 4: return "zero-localization state";
        case 5: return "spectral-direct equivalence";
        case 6: return "remainder decomposition";
        case 7: return "time-average chain";
        case 8: return "geometric decay";
        case 9: return "weak limit";
        case 10: return "property suites";
        default: throw std::out_of_range("no criterion " + std::to_string(id));
    }
}

CriterionResult run_criterion(int id, const Options& options) {
    CriterionResult r;
    switch (id) {
        case 1: r = stationary_origin(); break;
        case 2: r = total_localized_mass(); break;
        case 3: r = simulation_to_limit(); break;
        case 4: r = zero_localization(); break;
        case 5: r = spectral_direct(options); break;
        case 6: r = remainder_decomposition(options); break;
        case 7: r = time_average_chain(); break;
        case 8: r = geometric_decay(); break;
        case 9: r = weak_limit(); break;
        case 10: r = properties(); break;
        default: throw std::out_of_range("no criterion " + std::to_string(id));
    }
    r.id = id;
    r.title = criterion_title(id);
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "paper-constants", "simulation", "spectral", "time-average", "weak-limit", "properties", "all"};
    return names;
}

std::vector<int> suite_criteria(std::string_view suite) {
    if (suite == "paper-constants") return {1, 2, 8};
    if (suite == "simulation") return {3, 4};
    if (suite == "spectral") return {5, 6};
    if (suite == "time-average") return {7};
    if (suite == "weak-limit") return {9};
    if (suite == "properties") return {10};
    if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::string format(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed() ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.title << '\n';
    for (const auto& c : r.checks) {
        os << "    " << (c.passed ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    return os.str();
}

}  // namespace triwalk::verify

#include "triwalk/walk.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace triwalk {

QubitState::QubitState(Complex alpha, Complex beta, Complex gamma) : amps_{alpha, beta, gamma} {
    const double norm = std::sqrt(amps_.norm_sq());
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg << "qubit state is not normalized: |q| = " << norm;
        throw PhysicalInputError(msg.str());
    }
}

QubitState QubitState::normalized(Complex alpha, Complex beta, Complex gamma) {
    const double norm = std::sqrt(std::norm(alpha) + std::norm(beta) + std::norm(gamma));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw PhysicalInputError("qubit state has zero or non-finite norm");
    }
    return {alpha / norm, beta / norm, gamma / norm};
}

std::string QubitState::to_string() const {
    std::ostringstream os;
    os.precision(17);
    os << '[' << amps_.l << ", " << amps_.zero << ", " << amps_.r << ']';
    return os.str();
}

Matrix3 coin_matrix() {
    Matrix3 c;
    const double d = -1.0 / 3.0;
    const double o = 2.0 / 3.0;
    c << d, o, o,
         o, d, o,
         o, o, d;
    return c;
}

ProjectorTriple projector_matrices() {
    const Matrix3 coin = coin_matrix();
    ProjectorTriple p{Matrix3::Zero(), Matrix3::Zero(), Matrix3::Zero()};
    p.left.row(0) = coin.row(0);
    p.stay.row(1) = coin.row(1);
    p.right.row(2) = coin.row(2);
    return p;
}

ChiralVector apply_coin(const ChiralVector& v) {
    constexpr double d = -1.0 / 3.0;
    constexpr double o = 2.0 / 3.0;
    return {d * v.l + o * v.zero + o * v.r,
            o * v.l + d * v.zero + o * v.r,
            o * v.l + o * v.zero + d * v.r};
}

// ---------------------------------------------------------------------------
// Line

LineState::LineState(Site origin, std::vector<ChiralVector> amplitudes, std::uint64_t time)
    : origin_(origin), amps_(std::move(amplitudes)), time_(time) {
    if (amps_.empty()) {
        throw std::invalid_argument("line state needs at least one site");
    }
}

ChiralVector LineState::amplitude(Site n) const {
    if (n < origin_ || n > last_site()) {
        return {};
    }
    return amps_[static_cast<std::size_t>(n - origin_)];
}

double LineState::total_probability() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += a.norm_sq();
    return sum;
}

LineState initial_line_state(const QubitState& q) {
    return LineState(0, {q.amplitudes()}, 0);
}

LineState step_line(const LineState& s) {
    // The new window gains one site on each side. Index i of the new array is
    // site origin - 1 + i, i.e. old index i - 1.
    const auto old = s.amplitudes();
    const std::size_t width = old.size();
    std::vector<ChiralVector> coined(width);
    for (std::size_t i = 0; i < width; ++i) coined[i] = apply_coin(old[i]);

    std::vector<ChiralVector> next(width + 2);
    for (std::size_t i = 0; i < width; ++i) {
        next[i].l = coined[i].l;          // from site n+1 to n
        next[i + 1].zero = coined[i].zero;
        next[i + 2].r = coined[i].r;      // from site n-1 to n
    }
    return LineState(s.origin() - 1, std::move(next), s.time() + 1);
}

LineState evolve_line(const QubitState& q, std::uint64_t steps) {
    LineState s = initial_line_state(q);
    for (std::uint64_t t = 0; t < steps; ++t) s = step_line(s);
    return s;
}

OriginTrace trace_origin(const QubitState& q, std::uint64_t steps) {
    OriginTrace out{{}, initial_line_state(q)};
    out.p0.reserve(steps + 1);
    out.p0.push_back(out.final_state.amplitude(0).norm_sq());
    for (std::uint64_t t = 0; t < steps; ++t) {
        out.final_state = step_line(out.final_state);
        out.p0.push_back(out.final_state.amplitude(0).norm_sq());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cycle

namespace {

void require_odd_cycle(std::size_t n) {
    if (n < 3 || n % 2 == 0) {
        throw PhysicalInputError("cycle length must be odd and at least 3, got " +
                                 std::to_string(n));
    }
}

std::size_t wrap(Site n, std::size_t size) {
    const auto m = static_cast<Site>(size);
    return static_cast<std::size_t>(((n % m) + m) % m);
}

}  // namespace

CycleState::CycleState(std::vector<ChiralVector> amplitudes, std::uint64_t time)
    : amps_(std::move(amplitudes)), time_(time) {
    require_odd_cycle(amps_.size());
}

const ChiralVector& CycleState::amplitude(Site n) const { return amps_[wrap(n, amps_.size())]; }

double CycleState::total_probability() const {
    double sum = 0.0;
    for (const auto& a : amps_) sum += a.norm_sq();
    return sum;
}

CycleState initial_cycle_state(const QubitState& q, std::size_t n_sites) {
    require_odd_cycle(n_sites);
    std::vector<ChiralVector> amps(n_sites);
    amps[0] = q.amplitudes();
    return CycleState(std::move(amps), 0);
}

CycleState step_cycle(const CycleState& s) {
    const auto old = s.amplitudes();
    const std::size_t size = old.size();
    std::vector<ChiralVector> coined(size);
    for (std::size_t i = 0; i < size; ++i) coined[i] = apply_coin(old[i]);

    std::vector<ChiralVector> next(size);
    for (std::size_t i = 0; i < size; ++i) {
        next[(i + size - 1) % size].l = coined[i].l;
        next[i].zero = coined[i].zero;
        next[(i + 1) % size].r = coined[i].r;
    }
    return CycleState(std::move(next), s.time() + 1);
}

CycleState evolve_cycle(const QubitState& q, std::size_t n_sites, std::uint64_t steps) {
    CycleState s = initial_cycle_state(q, n_sites);
    for (std::uint64_t t = 0; t < steps; ++t) s = step_cycle(s);
    return s;
}

// ---------------------------------------------------------------------------
// Distributions

SiteProbability site_probability(Site n, const ChiralVector& psi) {
    SiteProbability p;
    p.n = n;
    p.l = std::norm(psi.l);
    p.zero = std::norm(psi.zero);
    p.r = std::norm(psi.r);
    p.total = p.l + p.zero + p.r;
    return p;
}

Distribution::Distribution(std::vector<SiteProbability> entries) : entries_(std::move(entries)) {
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i].n <= entries_[i - 1].n) {
            throw std::invalid_argument("distribution entries must be strictly increasing in n");
        }
    }
}

SiteProbability Distribution::at(Site n) const {
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), n,
                                     [](const SiteProbability& p, Site v) { return p.n < v; });
    if (it == entries_.end() || it->n != n) {
        SiteProbability empty;
        empty.n = n;
        return empty;
    }
    return *it;
}

double Distribution::total() const {
    double sum = 0.0;
    for (const auto& e : entries_) sum += e.total;
    return sum;
}

Distribution distribution(const LineState& s) {
    std::vector<SiteProbability> out;
    const auto amps = s.amplitudes();
    out.reserve(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out.push_back(site_probability(s.origin() + static_cast<Site>(i), amps[i]));
    }
    return Distribution(std::move(out));
}

Distribution distribution(const CycleState& s) {
    std::vector<SiteProbability> out;
    const auto amps = s.amplitudes();
    out.reserve(amps.size());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out.push_back(site_probability(static_cast<Site>(i), amps[i]));
    }
    return Distribution(std::move(out));
}

}  // namespace triwalk

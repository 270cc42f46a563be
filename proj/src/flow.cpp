#include "ramanujan/flow.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ramanujan {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
};
constexpr double kB5[7] = {35.0 / 384,      0.0,        500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784,  11.0 / 84,  0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,        7571.0 / 16695, 393.0 / 640,
                           -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

std::vector<Cplx> eval_field(const PolyVectorField& field, const std::vector<std::string>& chart,
                             const std::vector<Cplx>& point) {
    std::map<std::string, Cplx> at;
    for (std::size_t i = 0; i < chart.size(); ++i) at.emplace(chart[i], point[i]);
    std::vector<Cplx> out(field.coeffs.size());
    for (std::size_t c = 0; c < field.coeffs.size(); ++c) out[c] = field.coeffs[c].eval(at);
    return out;
}

void check_delta(const FlowOptions& options, const std::vector<std::string>& chart,
                 const std::vector<Cplx>& point) {
    if (!options.delta) return;
    std::map<std::string, Cplx> at;
    for (std::size_t i = 0; i < chart.size(); ++i) at.emplace(chart[i], point[i]);
    if (std::abs(options.delta->eval(at)) < options.delta_floor)
        throw std::domain_error("integrate: trajectory too close to the singular locus");
}

} // namespace

FlowResult integrate(const PolyVectorField& field, const FlowState& start, Cplx delta_tau,
                     const FlowOptions& options) {
    if (field.chart != start.chart)
        throw std::invalid_argument("integrate: field and state live on different charts");
    if (start.point.size() != start.chart.size())
        throw std::invalid_argument("integrate: state has wrong dimension");
    if (options.tol <= 0.0) throw std::invalid_argument("integrate: tolerance must be positive");

    FlowResult result;
    result.state = start;
    check_delta(options, start.chart, start.point);
    if (options.record_trace) result.trace.push_back({start.tau, start.point});

    const double total = std::abs(delta_tau);
    if (total == 0.0) return result;
    const Cplx dir = delta_tau / total;
    const std::size_t n = start.point.size();

    double s = 0.0;                                  // arc position along [0, total]
    double h = std::min(total, std::max(1e-6, total / 64));
    std::vector<Cplx> y = start.point;
    std::vector<std::vector<Cplx>> k(7, std::vector<Cplx>(n));
    std::size_t used = 0;

    while (s < total) {
        if (++used > options.max_steps)
            throw std::runtime_error("integrate: step budget exhausted");
        h = std::min(h, total - s);
        const Cplx hc = dir * h;

        k[0] = eval_field(field, start.chart, y);
        for (int stage = 1; stage < 7; ++stage) {
            std::vector<Cplx> ys = y;
            for (int prev = 0; prev < stage; ++prev) {
                if (kA[stage][prev] == 0.0) continue;
                for (std::size_t c = 0; c < n; ++c) ys[c] += hc * kA[stage][prev] * k[prev][c];
            }
            k[stage] = eval_field(field, start.chart, ys);
        }

        std::vector<Cplx> y5 = y;
        double err = 0.0;
        for (std::size_t c = 0; c < n; ++c) {
            Cplx e = 0.0;
            for (int stage = 0; stage < 7; ++stage) {
                y5[c] += hc * kB5[stage] * k[stage][c];
                e += hc * (kB5[stage] - kB4[stage]) * k[stage][c];
            }
            err = std::max(err, std::abs(e));
        }

        const double budget = options.tol * h;
        if (err <= budget) {
            s += h;
            y = std::move(y5);
            check_delta(options, start.chart, y);
            ++result.steps_accepted;
            if (options.record_trace) result.trace.push_back({start.tau + dir * s, y});
        } else {
            ++result.steps_rejected;
        }
        const double scale =
            err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(budget / err, 0.2), 0.2, 5.0);
        h = std::max(h * scale, total * 1e-14);
    }

    result.state.point = y;
    result.state.tau = start.tau + delta_tau;
    return result;
}

double residual_along(const PolyVectorField& field, const std::vector<TrajectorySample>& samples) {
    if (samples.size() < 3) throw std::invalid_argument("residual_along: need at least 3 samples");
    double worst = 0.0;
    for (std::size_t s = 1; s + 1 < samples.size(); ++s) {
        const Cplx dt = samples[s + 1].tau - samples[s - 1].tau;
        std::vector<Cplx> value = eval_field(field, field.chart, samples[s].point);
        for (std::size_t c = 0; c < value.size(); ++c) {
            Cplx fd = (samples[s + 1].point[c] - samples[s - 1].point[c]) / dt;
            worst = std::max(worst, std::abs(fd - value[c]));
        }
    }
    return worst;
}

std::string trace_csv(const std::vector<std::string>& chart,
                      const std::vector<TrajectorySample>& samples) {
    std::ostringstream os;
    os.precision(17);
    os << "tau_re,tau_im";
    for (const std::string& c : chart) os << "," << c << "_re," << c << "_im";
    os << "\n";
    for (const TrajectorySample& s : samples) {
        os << s.tau.real() << "," << s.tau.imag();
        for (const Cplx& p : s.point) os << "," << p.real() << "," << p.imag();
        os << "\n";
    }
    return os.str();
}

} // namespace ramanujan

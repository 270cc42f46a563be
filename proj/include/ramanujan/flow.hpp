#pragma once

#include "ramanujan/vector_field.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace ramanujan {

using Cplx = std::complex<double>;

// Point of a trajectory in flow time tau, with the curve parameter
// q = exp(tau), so that the operator q d/dq is d/dtau.
struct FlowState {
    std::vector<std::string> chart; // coordinate names
    std::vector<Cplx> point;        // one value per coordinate
    Cplx tau = 0.0;
};

struct TrajectorySample {
    Cplx tau;
    std::vector<Cplx> point;
};

struct FlowOptions {
    double tol = 1e-10;             // local error per unit flow time
    double delta_floor = 1e-12;     // minimum |delta(P)| along the path
    std::size_t max_steps = 200000; // accepted + rejected
    bool record_trace = false;
    const MultiPoly* delta = nullptr; // optional singularity guard
};

struct FlowResult {
    FlowState state;
    std::size_t steps_accepted = 0;
    std::size_t steps_rejected = 0;
    std::vector<TrajectorySample> trace; // when record_trace, includes endpoints
};

// Adaptive embedded Runge-Kutta 5(4) solution of dP/dtau = field(P) from
// start over the (complex) flow time delta_tau.  Throws std::domain_error
// when the singularity guard trips and std::runtime_error when the step
// budget is exhausted.
FlowResult integrate(const PolyVectorField& field, const FlowState& start, Cplx delta_tau,
                     const FlowOptions& options = {});

// Max over interior samples and components of
// |centered finite difference of the samples - field value|.
// Needs at least 3 samples.
double residual_along(const PolyVectorField& field, const std::vector<TrajectorySample>& samples);

// CSV rendering of a trace: header "tau_re,tau_im,<c>_re,<c>_im,..." plus one
// row per sample.
std::string trace_csv(const std::vector<std::string>& chart,
                      const std::vector<TrajectorySample>& samples);

} // namespace ramanujan

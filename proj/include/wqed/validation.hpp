#pragma once

// Cross-validation drivers: run the time-domain reference at a given
// resolution and measure how far it sits from the closed-form results.

#include "wqed/timedomain.hpp"
#include "wqed/types.hpp"

#include <vector>

namespace wqed::validation {

struct SingleCheck {
    double rel_l2 = 0.0;      // extracted modes vs phase_factor * initial
    double norm_drift = 0.0;
    double coverage = 0.0;
    double atom_residual = 0.0;
};

SingleCheck check_single(const PulseSpec& pulse, const SystemParams& params,
                         const timedomain::ModeGrid& grid, double dt, double t_end,
                         bool parallel = true);

struct PairCheck {
    double rel_l2 = 0.0;      // extracted matrix vs scattered_amplitude
    double norm_drift = 0.0;
    double coverage = 0.0;
    double atom_residual = 0.0;
};

PairCheck check_pair(const TwoPhotonInput& input, const SystemParams& params,
                     const timedomain::ModeGrid& grid, double dt, double t_end,
                     bool parallel = true);

struct LaplacePoint {
    cplx s;
    double delta_k = 0.0;
    cplx closed;
    cplx numeric;
    double rel_error = 0.0;
};

struct LaplaceCheck {
    std::vector<LaplacePoint> points;
    double max_rel_error = 0.0;
};

LaplaceCheck check_laplace(const TwoPhotonInput& input, const SystemParams& params,
                           const timedomain::ModeGrid& grid, double dt, double t_end,
                           const std::vector<cplx>& s_values,
                           const std::vector<double>& mode_detunings, bool parallel = true);

struct NormPartition {
    double total = 0.0;      // 4 * ordered-region integral of the channel sum
    double deviation = 0.0;  // |total - 1|
};

// Integrates the four |channel_amplitude|^2 over the ordered detuning
// region [-half_window, half_window]^2 with nested adaptive quadrature.
NormPartition check_norm_partition(const TwoPhotonInput& input, const SystemParams& params,
                                   double half_window, double rel_tol = 1e-7,
                                   bool parallel = true);

}  // namespace wqed::validation

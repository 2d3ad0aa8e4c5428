#include "wqed/validation.hpp"

#include "wqed/quadrature.hpp"
#include "wqed/scatter.hpp"
#include "wqed/two_photon.hpp"

#include <cmath>

namespace wqed::validation {

using timedomain::EvolveOptions;
using timedomain::ModeGrid;

namespace {

double rel_l2(const std::vector<cplx>& got, const std::vector<cplx>& want) {
    double diff = 0.0, ref = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        diff += std::norm(got[i] - want[i]);
        ref += std::norm(want[i]);
    }
    return std::sqrt(diff / ref);
}

}  // namespace

SingleCheck check_single(const PulseSpec& pulse, const SystemParams& params,
                         const ModeGrid& grid, double dt, double t_end, bool parallel) {
    auto state = timedomain::discretize_single(pulse, grid);
    const double norm0 = state.norm();

    EvolveOptions opts;
    opts.dt = dt;
    opts.parallel = parallel;
    timedomain::evolve_single(state, t_end, opts, params);

    SingleCheck check;
    check.coverage = state.coverage;
    check.norm_drift = std::fabs(state.norm() - norm0);
    check.atom_residual = std::max(std::abs(state.atom1), std::abs(state.atom2));

    const auto extracted = timedomain::extract_single(state);
    std::vector<cplx> target(grid.modes);
    const double scale = std::sqrt(grid.spacing()) * state.renorm;
    for (int k = 0; k < grid.modes; ++k) {
        const double delta = grid.delta(k);
        target[k] = phase_factor(delta, params) * pulse_amplitude(delta, pulse) * scale;
    }
    check.rel_l2 = rel_l2(extracted, target);
    return check;
}

PairCheck check_pair(const TwoPhotonInput& input, const SystemParams& params,
                     const ModeGrid& grid, double dt, double t_end, bool parallel) {
    auto state = timedomain::discretize_pair(input, grid);
    const double norm0 = state.norm();

    EvolveOptions opts;
    opts.dt = dt;
    opts.parallel = parallel;
    timedomain::evolve_pair(state, t_end, opts, params);

    PairCheck check;
    check.coverage = state.coverage;
    check.norm_drift = std::fabs(state.norm() - norm0);
    check.atom_residual = std::abs(state.both_excited);
    for (const cplx& v : state.mixed1) check.atom_residual = std::max(check.atom_residual, std::abs(v));
    for (const cplx& v : state.mixed2) check.atom_residual = std::max(check.atom_residual, std::abs(v));

    const auto extracted = timedomain::extract_pair(state);
    const int m = grid.modes;
    std::vector<cplx> target(extracted.size());
    const double scale = grid.spacing() * state.renorm;
#pragma omp parallel for schedule(static) if (parallel)
    for (int p = 0; p < m; ++p) {
        const double dp = grid.delta(p);
        for (int q = 0; q < m; ++q)
            target[static_cast<std::size_t>(p) * m + q] =
                scattered_amplitude(dp, grid.delta(q), input, params) * scale;
    }
    check.rel_l2 = rel_l2(extracted, target);
    return check;
}

LaplaceCheck check_laplace(const TwoPhotonInput& input, const SystemParams& params,
                           const ModeGrid& grid, double dt, double t_end,
                           const std::vector<cplx>& s_values,
                           const std::vector<double>& mode_detunings, bool parallel) {
    auto state = timedomain::discretize_pair(input, grid);

    EvolveOptions opts;
    opts.dt = dt;
    opts.parallel = parallel;
    opts.sample_stride = std::max(1, static_cast<int>(std::floor(0.01 / dt)));
    for (double delta : mode_detunings) opts.sample_modes.push_back(grid.index_of(delta));

    std::vector<timedomain::ModeTrace> traces;
    timedomain::evolve_pair(state, t_end, opts, params, &traces);

    LaplaceCheck check;
    const double scale = std::sqrt(grid.spacing()) * state.renorm;
    for (const auto& trace : traces) {
        const double delta_k = grid.delta(trace.mode);
        for (const cplx& s : s_values) {
            LaplacePoint point;
            point.s = s;
            point.delta_k = delta_k;
            point.closed = timedomain::laplace_closed(s, delta_k, input, params) * scale;
            point.numeric = timedomain::laplace_from_samples(trace.values, trace.dt, s);
            point.rel_error = std::abs(point.numeric - point.closed) / std::abs(point.closed);
            check.max_rel_error = std::max(check.max_rel_error, point.rel_error);
            check.points.push_back(point);
        }
    }
    return check;
}

NormPartition check_norm_partition(const TwoPhotonInput& input, const SystemParams& params,
                                   double half_window, double rel_tol, bool parallel) {
    const auto channel_sum = [&](double dp, double dq) {
        double sum = 0.0;
        for (Channel c : {Channel::rr, Channel::rl, Channel::lr, Channel::ll})
            sum += std::norm(channel_amplitude(c, dp, dq, input, params));
        return sum;
    };
    const auto inner = [&](double dp) {
        return integrate_or_throw([&](double dq) { return channel_sum(dp, dq); }, -half_window,
                                  dp, 0.1 * rel_tol, 20000);
    };

    // fixed outer panels, each integrated adaptively; panel boundaries pin
    // the detuning peaks so the work splits evenly across threads
    const int panels = 64;
    const double width = 2.0 * half_window / panels;
    std::vector<double> partial(panels, 0.0);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < panels; ++i) {
        const double a = -half_window + i * width;
        partial[i] = integrate_or_throw(inner, a, a + width, rel_tol, 20000);
    }
    double ordered = 0.0;
    for (double v : partial) ordered += v;

    NormPartition result;
    result.total = 4.0 * ordered;
    result.deviation = std::fabs(result.total - 1.0);
    return result;
}

}  // namespace wqed::validation

#pragma once

// Independent time-domain reference: discretize the even-mode continuum,
// integrate the exact equations of motion with a fixed-step RK4 scheme, and
// compare long-time amplitudes against the closed forms. Also hosts the
// Laplace-domain closed form for the atom+photon amplitude and a numerical
// transform to validate it.
//
// The O(M^2) pair kernel has an OpenMP path and a plain serial reference
// path; both produce bitwise-identical results (per-element accumulation
// order is the same) and are compared in the tests and the benchmark.

#include "wqed/types.hpp"

#include <string>
#include <vector>

namespace wqed::timedomain {

struct ModeGrid {
    double half_window;  // detunings span [-half_window, half_window]
    int modes;           // odd so that zero detuning is a grid point

    ModeGrid(double half_window_, int modes_) : half_window(half_window_), modes(modes_) {
        if (modes < 3 || modes % 2 == 0)
            throw std::invalid_argument("ModeGrid: mode count must be odd and >= 3");
        if (!(half_window > 0.0)) throw std::invalid_argument("ModeGrid: window must be > 0");
    }

    double spacing() const { return 2.0 * half_window / (modes - 1); }
    double delta(int k) const { return -half_window + k * spacing(); }
    int index_of(double delta_value) const;  // nearest grid index
    // per-mode coupling g*sqrt(spacing), so the mode sums reproduce the
    // continuum integrals and the discrete decay rate approaches gamma
    double effective_coupling(const SystemParams& params) const {
        return params.coupling() * std::sqrt(spacing());
    }
};

struct SingleState {
    ModeGrid grid;
    cplx atom1{0.0, 0.0}, atom2{0.0, 0.0};
    std::vector<cplx> modes;  // photon amplitude per grid mode
    double time = 0.0;
    double coverage = 0.0;  // window mass before renormalization
    double renorm = 1.0;    // factor applied to reach unit norm

    double norm() const;
};

// Pair-excitation state: doubly-excited amplitude, the two atom+photon
// vectors, and the symmetric two-photon matrix stored in full, row-major.
// The conserved norm weighs the matrix by 1/2, matching the ordered-region
// continuum integral.
struct PairState {
    ModeGrid grid;
    cplx both_excited{0.0, 0.0};
    std::vector<cplx> mixed1;  // atom 1 excited + one photon
    std::vector<cplx> mixed2;  // atom 2 excited + one photon
    std::vector<cplx> pair;    // modes x modes amplitudes
    double time = 0.0;
    double coverage = 0.0;
    double renorm = 1.0;

    double norm() const;
    cplx pair_at(int p, int q) const { return pair[static_cast<std::size_t>(p) * grid.modes + q]; }
};

struct EvolveOptions {
    double dt;
    bool parallel = true;    // use the OpenMP kernels
    int sample_stride = 0;   // record sampled modes every this many steps
    std::vector<int> sample_modes;
};

// Uniformly sampled trajectory of one atom+photon amplitude.
struct ModeTrace {
    int mode = 0;
    double dt = 0.0;
    std::vector<cplx> values;
};

// Lorentzian packet on the grid, renormalized to unit norm. Warns on
// stderr when the window holds < 99.9% of the packet; throws
// std::invalid_argument below 99%.
SingleState discretize_single(const PulseSpec& pulse, const ModeGrid& grid);
PairState discretize_pair(const TwoPhotonInput& input, const ModeGrid& grid);

// Fixed-step RK4 integration to t_end. Requires dt <= 0.05/half_window.
// Throws numerical_error if the norm drifts by more than 1e-6.
void evolve_single(SingleState& state, double t_end, const EvolveOptions& opts,
                   const SystemParams& params);
void evolve_pair(PairState& state, double t_end, const EvolveOptions& opts,
                 const SystemParams& params, std::vector<ModeTrace>* traces = nullptr);

// Long-time amplitudes with the free phases removed; throw numerical_error
// while the atomic amplitudes are still above 1e-3.
std::vector<cplx> extract_single(const SingleState& state);
std::vector<cplx> extract_pair(const PairState& state);

// Closed-form Laplace transform (Re s > 0) of the atom+photon amplitude for
// a mode at detuning delta_k, for the two-photon initial state.
cplx laplace_closed(cplx s, double delta_k, const TwoPhotonInput& input,
                    const SystemParams& params);

// Transform of a sampled trajectory by composite Simpson quadrature.
// Requires |exp(-s t_end)| < 1e-6 and a truncation tail below 1e-4 of the
// integral; throws numerical_error otherwise.
cplx laplace_from_samples(const std::vector<cplx>& samples, double dt, cplx s);

// Columnar text snapshot: "# key=value" header lines, then one row per
// amplitude.
void write_snapshot(const std::string& path, const SingleState& state);
void write_snapshot(const std::string& path, const PairState& state);

struct Snapshot {
    std::string kind;  // "single" or "pair"
    ModeGrid grid{1.0, 3};
    double time = 0.0;
    std::vector<cplx> values;  // modes, or modes*modes row-major
};
Snapshot read_snapshot(const std::string& path);

namespace detail {

struct PairContext {
    int modes;
    const double* deltas;
    double coupling;  // effective per-mode coupling
    double xi;
};

// layout of the flat pair state: [0] A, [1..M] B, [M+1..2M] C, [2M+1..] D
void pair_rhs(const cplx* y, cplx* dy, const PairContext& ctx, bool parallel);
// plain loop-nest reference implementation, kept for testing the kernel
void pair_rhs_reference(const cplx* y, cplx* dy, const PairContext& ctx);

}  // namespace detail

}  // namespace wqed::timedomain

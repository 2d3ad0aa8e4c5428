#pragma once

// Closed-form two-photon scattering results: initial k-space amplitude,
// scattering-induced correlation term, long-time amplitude, the four output
// channel amplitudes, and the position-space wave functions of the
// transmitted/reflected pair.

#include "wqed/types.hpp"

namespace wqed {

// Normalization constant of the two-photon Lorentzian product state.
double pair_norm_constant(const TwoPhotonInput& input);

// Symmetrized initial amplitude for detunings (dp, dq).
cplx initial_amplitude(double dp, double dq, const TwoPhotonInput& input);

// Scattering-induced correlation term. Vanishes identically on the
// two-photon-resonance manifold dp + dq = 2 xi.
cplx correlation_amplitude(double dp, double dq, const TwoPhotonInput& input,
                           const SystemParams& params);

// Long-time amplitude in the even sector with the free phase
// exp(-i (dp+dq) t) stripped.
cplx scattered_amplitude(double dp, double dq, const TwoPhotonInput& input,
                         const SystemParams& params);

// Output amplitude in the requested transmission/reflection channel.
cplx channel_amplitude(Channel c, double dp, double dq, const TwoPhotonInput& input,
                       const SystemParams& params);

// Position-space wave function of the injected pair.
cplx input_wave_pair(double x1, double x2, const TwoPhotonInput& input);

// Relative wave function phi(x) = independent*cos(delta x) +
// correlated*exp(i q |x|) of the pair detected on one side, valid for
// equal pulse offsets. Even in x; |phi(x)|^2 is proportional to the joint
// detection probability at separation x.
struct RelativeWave {
    cplx independent;         // coefficient of cos(delta x)
    cplx correlated;          // coefficient of exp(i q |x|)
    cplx exponent;            // q = E/2 - i width + i gamma (Im q > 0)
    double relative_detuning; // delta

    cplx operator()(double x) const {
        const cplx osc = independent * std::cos(relative_detuning * x);
        return osc + correlated * std::exp(cplx(0.0, 1.0) * exponent * std::abs(x));
    }

    // |phi|^2 for x >> 1/gamma: mean + Re(osc_coef * exp(i osc_freq x))
    double tail_mean() const;
    double tail_osc_coef() const;
    double tail_osc_freq() const { return 2.0 * relative_detuning; }
};

// Channel must be rr or ll; the mixed channels have no single-sided
// relative wave function. Emits a one-time stderr warning when
// gamma < 20 * width (outside the derivation's validity window).
RelativeWave relative_wave(Channel c, const TwoPhotonInput& input, const SystemParams& params);

cplx phi_rr(double x, const TwoPhotonInput& input, const SystemParams& params);
cplx phi_ll(double x, const TwoPhotonInput& input, const SystemParams& params);

// General (offset1 != offset2) relative-coordinate envelope including its
// step-function support, as a function of relative coordinate x,
// center-of-mass coordinate xc, and time t.
cplx relative_wave_general(Channel c, double x, double xc, double t,
                           const TwoPhotonInput& input, const SystemParams& params);

// Long-time position-space wave function of the rr / ll pair in the lab
// frame; t = 0 gives the co-moving-frame amplitude.
cplx output_wave_pair(Channel c, double x1, double x2, double t,
                      const TwoPhotonInput& input, const SystemParams& params);

}  // namespace wqed

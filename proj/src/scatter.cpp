#include "wqed/scatter.hpp"

#include <cmath>

namespace wqed {

namespace {

cplx checked_denominator(cplx delta, double gamma) {
    const cplx den = delta + cplx(0.0, gamma);
    if (std::abs(den) == 0.0)
        throw std::domain_error("scattering amplitude pole: delta = -i*gamma");
    return den;
}

}  // namespace

cplx phase_factor(cplx delta, const SystemParams& params) {
    const cplx den = checked_denominator(delta, params.gamma);
    return (delta - cplx(0.0, params.gamma)) / den;
}

cplx transmission(cplx delta, const SystemParams& params) {
    return delta / checked_denominator(delta, params.gamma);
}

cplx reflection(cplx delta, const SystemParams& params) {
    return cplx(0.0, -params.gamma) / checked_denominator(delta, params.gamma);
}

cplx pulse_amplitude(double delta, const PulseSpec& pulse) {
    const cplx phase = std::exp(cplx(0.0, delta * pulse.offset));
    return pulse.norm_constant() * phase / cplx(delta - pulse.detuning, pulse.width);
}

cplx input_wave(double x, const PulseSpec& pulse) {
    if (step(-x - pulse.offset) == 0.0) return {0.0, 0.0};
    const cplx pole(pulse.detuning, -pulse.width);
    const cplx amp = cplx(0.0, -1.0) * std::sqrt(2.0 * pi) * pulse.norm_constant();
    return amp * std::exp(cplx(0.0, 1.0) * pole * (x + pulse.offset));
}

OutputWave output_wave(double x, double t, const PulseSpec& pulse, const SystemParams& params) {
    const cplx pole(pulse.detuning, -pulse.width);
    const cplx amp = cplx(0.0, -1.0) * std::sqrt(2.0 * pi) * pulse.norm_constant();
    OutputWave out{{0.0, 0.0}, {0.0, 0.0}};
    if (step(-x + t - pulse.offset) != 0.0)
        out.transmitted = amp * transmission(pole, params) *
                          std::exp(cplx(0.0, 1.0) * pole * (x - t + pulse.offset));
    if (step(x + t - pulse.offset) != 0.0)
        out.reflected = amp * reflection(pole, params) *
                        std::exp(cplx(0.0, -1.0) * pole * (x + t - pulse.offset));
    return out;
}

double rydberg_strength(double r, double coefficient, InteractionLaw law) {
    if (!(r > 0.0)) throw std::domain_error("rydberg_strength: distance must be > 0");
    if (!(coefficient > 0.0)) throw std::domain_error("rydberg_strength: coefficient must be > 0");
    const double r3 = r * r * r;
    return law == InteractionLaw::dipole_dipole ? coefficient / r3 : coefficient / (r3 * r3);
}

}  // namespace wqed

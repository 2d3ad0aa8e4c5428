#pragma once

// Single-photon scattering off the coupled atom pair: the even-sector phase
// factor, transmission/reflection amplitudes, and the input/output packet
// wave functions in position space.

#include "wqed/types.hpp"

namespace wqed {

// (delta - i gamma)/(delta + i gamma); unit modulus for real detuning.
// Accepts complex detuning because the output wave functions evaluate it at
// detuning - i*width. Throws std::domain_error on the pole delta = -i gamma.
cplx phase_factor(cplx delta, const SystemParams& params);

// delta/(delta + i gamma)
cplx transmission(cplx delta, const SystemParams& params);

// -i gamma/(delta + i gamma)
cplx reflection(cplx delta, const SystemParams& params);

// k-space amplitude of the Lorentzian packet at detuning delta.
cplx pulse_amplitude(double delta, const PulseSpec& pulse);

// Position-space wave function of the injected packet (front at -offset).
cplx input_wave(double x, const PulseSpec& pulse);

struct OutputWave {
    cplx transmitted;  // right-going component
    cplx reflected;    // left-going component
};

// Long-time output wave function; valid once the packet has cleared the
// atoms (t >> offset + 1/width).
OutputWave output_wave(double x, double t, const PulseSpec& pulse, const SystemParams& params);

enum class InteractionLaw { dipole_dipole, van_der_waals };

// Interaction strength from interatomic distance: C/r^3 or C/r^6.
double rydberg_strength(double r, double coefficient, InteractionLaw law);

}  // namespace wqed

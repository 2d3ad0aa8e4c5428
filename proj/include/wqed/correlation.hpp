#pragma once

// Second-order correlation functions of the transmitted / reflected photon
// pair, both through the reduced weighted-tail-integral form and directly
// from the definition by quadrature on the two-photon wave function.

#include "wqed/two_photon.hpp"
#include "wqed/types.hpp"

#include <functional>
#include <vector>

namespace wqed {

enum class Side { transmission, reflection };

// Leading behaviour of |phi(x)|^2 for x >> 1/gamma:
// mean + osc_coef * cos(osc_freq * x). Used to close the tail of the
// weighted integrals analytically.
struct TailAsymptote {
    double mean = 0.0;
    double osc_coef = 0.0;
    double osc_freq = 0.0;
    double settle = 0.0;  // quadrature/asymptote split point (>= 0)
};

// integral_{lower}^{inf} exp(-2 width x) |phi(x)|^2 dx. The evaluator must
// be even in x (negative lower limits probe the mirrored branch). Throws
// numerical_error with the partial estimate if the quadrature fails.
double tail_integral(const std::function<cplx(double)>& phi, double lower, double width,
                     const TailAsymptote& asym);

// Convenience overload; the asymptote follows from the wave's structure.
double tail_integral(const RelativeWave& phi, double lower, double width,
                     const SystemParams& params);

struct G2Request {
    Side side;
    double x1;                    // detection coordinate, co-moving frame
    std::vector<double> tau;      // delays >= 0, ascending
    TwoPhotonInput input;
    SystemParams params;
};

struct G2Curve {
    std::vector<double> tau;
    std::vector<double> g2;
    Side side;
    double x1;
};

// Detection coordinate deep inside the step support, where g2 is
// insensitive to the exact choice.
double default_x1(Side side, const TwoPhotonInput& input, double tau_max,
                  const SystemParams& params);

// Reduced-form curves g2(tau) = F(x1, tau) |phi(tau)|^2. Throws
// support_error outside the step support and ill_conditioned_error when the
// requested side carries negligible probability (transmission at the
// single-photon resonance with xi = 0).
G2Curve g2_transmission(const G2Request& req);
G2Curve g2_reflection(const G2Request& req);

// g2 straight from its definition: the joint density at (x1, x1+tau) times
// the total pair norm over the product of the one-photon marginals, all by
// quadrature on the position-space wave function. Oracle for the reduced
// forms above.
double g2_direct(Side side, double x1, double tau, const TwoPhotonInput& input,
                 const SystemParams& params);

}  // namespace wqed

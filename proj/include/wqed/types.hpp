#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace wqed {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Heaviside step with theta(0) = 1.
inline double step(double x) { return x >= 0.0 ? 1.0 : 0.0; }

// Thrown when an adaptive scheme exhausts its subdivision budget; carries
// the best estimate reached so far.
class numerical_error : public std::runtime_error {
public:
    numerical_error(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

private:
    double estimate_;
};

// Requested evaluation point lies outside the step-function support.
class support_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// g2 denominator (product of first-order correlations) is numerically zero.
class ill_conditioned_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Atom/field parameters. The waveguide group velocity is 1 and gamma sets
// the inverse-length scale; xi is the interaction shift acquired when both
// atoms are excited.
struct SystemParams {
    double gamma;  // single-atom decay rate into the even sector
    double xi;     // Rydberg interaction strength

    SystemParams(double gamma_, double xi_) : gamma(gamma_), xi(xi_) {
        if (!(gamma > 0.0)) throw std::invalid_argument("SystemParams: gamma must be > 0");
        if (!(xi >= 0.0)) throw std::invalid_argument("SystemParams: xi must be >= 0");
    }

    // atom-to-even-mode coupling, gamma = 2 pi g^2
    double coupling() const { return std::sqrt(gamma / (2.0 * pi)); }
};

// One Lorentzian input photon: center detuning, half-width, and the initial
// distance between the packet front and the atoms.
struct PulseSpec {
    double detuning;  // center detuning relative to the atomic transition
    double width;     // Lorentzian half-width (> 0)
    double offset;    // initial front offset (>= 0)

    PulseSpec(double detuning_, double width_, double offset_)
        : detuning(detuning_), width(width_), offset(offset_) {
        if (!(width > 0.0)) throw std::invalid_argument("PulseSpec: width must be > 0");
        if (!(offset >= 0.0)) throw std::invalid_argument("PulseSpec: offset must be >= 0");
    }

    // k-space normalization sqrt(width / pi)
    double norm_constant() const { return std::sqrt(width / pi); }
};

enum class Channel { rr, rl, lr, ll };

inline const char* to_string(Channel c) {
    switch (c) {
        case Channel::rr: return "rr";
        case Channel::rl: return "rl";
        case Channel::lr: return "lr";
        case Channel::ll: return "ll";
    }
    return "?";
}

// Ordered pair of pulses sharing one width, pulse 1 injected behind pulse 2
// (offset1 >= offset2 >= 0).
struct TwoPhotonInput {
    PulseSpec pulse1;
    PulseSpec pulse2;

    TwoPhotonInput(const PulseSpec& p1, const PulseSpec& p2) : pulse1(p1), pulse2(p2) {
        if (p1.width != p2.width)
            throw std::invalid_argument("TwoPhotonInput: pulses must share one width");
        if (!(p1.offset >= p2.offset))
            throw std::invalid_argument("TwoPhotonInput: offset1 must be >= offset2");
    }

    double total_detuning() const { return pulse1.detuning + pulse2.detuning; }   // E
    double relative_detuning() const { return 0.5 * (pulse1.detuning - pulse2.detuning); }
    double width() const { return pulse1.width; }
    double offset1() const { return pulse1.offset; }
    double offset2() const { return pulse2.offset; }
};

// basis normalization of the two-photon position states, 1/(2 sqrt(2) pi)
inline constexpr double pair_basis_norm = 0.1125395395196383205;

}  // namespace wqed

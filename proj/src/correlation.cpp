#include "wqed/correlation.hpp"

#include "wqed/quadrature.hpp"

#include <cmath>

namespace wqed {

namespace {

constexpr double quad_rel_tol = 1e-8;
constexpr int quad_budget = 10000;

// Degenerate-channel threshold: the relative wave function of a channel that
// carries only the residual O(width/gamma) correlation stays below
// 25 (width/gamma)^2 in squared magnitude; 50 gives headroom.
bool channel_degenerate(const RelativeWave& phi, double width, double gamma) {
    const double scale = 50.0 * (width / gamma) * (width / gamma);
    const double sup = std::norm(phi(0.0));
    return std::max(sup, phi.tail_mean() + std::fabs(phi.tail_osc_coef())) < scale;
}

struct ReducedParts {
    RelativeWave phi;
    double numerator;  // integral_0^inf exp(-2 eps x) |phi|^2
    double base_tail;  // integral from the tau-independent lower limit
    double base_lower;
};

// Shared setup of the tau-independent pieces of F = numerator / M.
ReducedParts reduced_setup(const G2Request& req) {
    const Channel ch = (req.side == Side::transmission) ? Channel::rr : Channel::ll;
    ReducedParts parts{relative_wave(ch, req.input, req.params), 0.0, 0.0, 0.0};
    const double l1 = req.input.offset1();
    parts.base_lower = (req.side == Side::transmission) ? req.x1 + l1 : l1 - req.x1;
    if (req.side == Side::transmission && channel_degenerate(parts.phi, req.input.width(), req.params.gamma))
        throw ill_conditioned_error(
            "g2_transmission: transmitted pair carries negligible probability "
            "(single-photon resonance with xi ~ 0); g2 is not meaningful here");
    parts.numerator = tail_integral(parts.phi, 0.0, req.input.width(), req.params);
    parts.base_tail = tail_integral(parts.phi, parts.base_lower, req.input.width(), req.params);
    return parts;
}

G2Curve reduced_curve(const G2Request& req) {
    const double eps = req.input.width();
    const double l1 = req.input.offset1();
    const ReducedParts parts = reduced_setup(req);

    G2Curve curve{req.tau, {}, req.side, req.x1};
    curve.g2.resize(req.tau.size());

    const bool trans = (req.side == Side::transmission);
    for (std::size_t i = 0; i < req.tau.size(); ++i) {
        const double tau = req.tau[i];
        if (tau < 0.0) throw std::invalid_argument("g2: delays must be >= 0");
        const double gate = trans ? step(-req.x1 - l1 - tau) * step(-req.x1 - l1)
                                  : step(req.x1 - l1 + tau) * step(req.x1 - l1);
        if (gate == 0.0)
            throw support_error("g2: detection points fall outside the packet support");

        const double shifted_lower = trans ? req.x1 + tau + l1 : l1 - (req.x1 + tau);
        const double shifted_tail = tail_integral(parts.phi, shifted_lower, eps, req.params);
        const double envelope = trans ? std::exp(4.0 * eps * (req.x1 + l1 + 0.5 * tau))
                                      : std::exp(-4.0 * eps * (req.x1 - l1 + 0.5 * tau));
        const double m = 4.0 * eps * envelope * parts.base_tail * shifted_tail;
        if (!(m > 0.0) || m < 1e-12 * 4.0 * eps * parts.numerator * parts.numerator)
            throw ill_conditioned_error("g2: vanishing marginal product in the denominator");
        curve.g2[i] = parts.numerator / m * std::norm(parts.phi(tau));
    }
    return curve;
}

}  // namespace

double tail_integral(const std::function<cplx(double)>& phi, double lower, double width,
                     const TailAsymptote& asym) {
    if (!(width > 0.0)) throw std::invalid_argument("tail_integral: width must be > 0");
    const double settle = std::max(asym.settle, lower);

    // analytic tail: integral_settle^inf e^{-2 eps x} (mean + osc) dx
    double tail = asym.mean * std::exp(-2.0 * width * settle) / (2.0 * width);
    if (asym.osc_coef != 0.0) {
        const cplx s(-2.0 * width, asym.osc_freq);
        tail += std::real(asym.osc_coef * std::exp(s * settle) / (-s));
    }

    if (settle <= lower) return tail;

    const auto integrand = [&](double x) { return std::exp(-2.0 * width * x) * std::norm(phi(x)); };
    const QuadResult head = integrate_adaptive(integrand, lower, settle, quad_rel_tol, quad_budget);
    if (!head.converged)
        throw numerical_error("tail_integral: quadrature did not converge", head.value + tail);
    return head.value + tail;
}

double tail_integral(const RelativeWave& phi, double lower, double width,
                     const SystemParams& params) {
    TailAsymptote asym;
    asym.mean = phi.tail_mean();
    asym.osc_coef = phi.tail_osc_coef();
    asym.osc_freq = phi.tail_osc_freq();
    asym.settle = std::max(lower, 0.0) + 30.0 / params.gamma;
    return tail_integral([&phi](double x) { return phi(x); }, lower, width, asym);
}

double default_x1(Side side, const TwoPhotonInput& input, double tau_max,
                  const SystemParams& params) {
    const double depth = input.offset1() + 10.0 / params.gamma + tau_max;
    return side == Side::transmission ? -depth : depth;
}

G2Curve g2_transmission(const G2Request& req) {
    if (req.side != Side::transmission)
        throw std::invalid_argument("g2_transmission: request is for the other side");
    return reduced_curve(req);
}

G2Curve g2_reflection(const G2Request& req) {
    if (req.side != Side::reflection)
        throw std::invalid_argument("g2_reflection: request is for the other side");
    return reduced_curve(req);
}

double g2_direct(Side side, double x1, double tau, const TwoPhotonInput& input,
                 const SystemParams& params) {
    if (tau < 0.0) throw std::invalid_argument("g2_direct: tau must be >= 0");
    const Channel ch = (side == Side::transmission) ? Channel::rr : Channel::ll;
    const double eps = input.width();
    const double gamma = params.gamma;
    // co-moving frame amplitude
    const auto psi2 = [&](double a, double b) {
        return std::norm(output_wave_pair(ch, a, b, 0.0, input, params));
    };

    const double reach = 16.0 / eps + 30.0 / gamma;
    const bool trans = (side == Side::transmission);
    const double edge = trans ? -input.offset2() : input.offset2();

    const auto marginal = [&](double a) {
        const double lo = trans ? a - reach : edge;
        const double hi = trans ? edge : a + reach;
        return integrate_or_throw([&](double b) { return psi2(a, b); }, lo, hi, quad_rel_tol,
                                  quad_budget);
    };

    const double p1 = marginal(x1);
    const double p2 = marginal(x1 + tau);
    if (p1 <= 0.0 || p2 <= 0.0)
        throw support_error("g2_direct: detection point outside the packet support");

    const double far = trans ? x1 - reach : x1 + tau + reach;
    const double lo = trans ? far : edge;
    const double hi = trans ? edge : far;
    const double total =
        integrate_or_throw([&](double a) { return marginal(a); }, lo, hi, 1e-7, quad_budget);

    return psi2(x1, x1 + tau) * total / (2.0 * p1 * p2);
}

}  // namespace wqed

#include "wqed/two_photon.hpp"

#include "wqed/scatter.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>

namespace wqed {

namespace {

constexpr cplx iu(0.0, 1.0);

void warn_outside_validity(const TwoPhotonInput& input, const SystemParams& params) {
    static std::atomic<bool> warned{false};
    if (params.gamma >= 20.0 * input.width()) return;
    if (!warned.exchange(true))
        std::fprintf(stderr,
                     "wqed: note: relative wave functions assume gamma >> width "
                     "(gamma/width = %.3g here); expect O(width/gamma) deviations\n",
                     params.gamma / input.width());
}

// shared factor (E - 2 xi - 2 i eps)/(E - xi - 2 i eps + i gamma)
cplx correlation_factor(const TwoPhotonInput& input, const SystemParams& params) {
    const cplx w(input.total_detuning(), -2.0 * input.width());
    return (w - 2.0 * params.xi) / (w - params.xi + iu * params.gamma);
}

}  // namespace

double pair_norm_constant(const TwoPhotonInput& input) {
    const double eps = input.width();
    const double dd = input.pulse1.detuning - input.pulse2.detuning;
    const double sep = input.offset1() - input.offset2();
    const double bracket = 1.0 + 4.0 * eps * eps * std::exp(-2.0 * eps * sep) / (dd * dd + 4.0 * eps * eps);
    return (eps / pi) / std::sqrt(bracket);
}

cplx initial_amplitude(double dp, double dq, const TwoPhotonInput& input) {
    const double eps = input.width();
    const double d1 = input.pulse1.detuning, d2 = input.pulse2.detuning;
    const double l1 = input.offset1(), l2 = input.offset2();
    const auto lorentz = [&](double dk, double center, double l) {
        return std::exp(iu * dk * l) / cplx(dk - center, eps);
    };
    return pair_norm_constant(input) *
           (lorentz(dp, d1, l1) * lorentz(dq, d2, l2) + lorentz(dq, d1, l1) * lorentz(dp, d2, l2));
}

cplx correlation_amplitude(double dp, double dq, const TwoPhotonInput& input,
                           const SystemParams& params) {
    const double eps = input.width();
    const double gamma = params.gamma;
    const double d1 = input.pulse1.detuning, d2 = input.pulse2.detuning;
    const double l1 = input.offset1(), l2 = input.offset2();
    const double sum = dp + dq;
    const double sep = l1 - l2;

    const cplx pole_p(dp, gamma), pole_q(dq, gamma);
    const cplx front = 4.0 * pair_norm_constant(input) * gamma * gamma *
                       std::exp(iu * sum * l1) / (pole_p * pole_q);
    const cplx resonance = cplx(sum - 2.0 * params.xi, 0.0) / cplx(sum - params.xi, gamma);
    const cplx envelope = 1.0 / cplx(sum - d1 - d2, 2.0 * eps);

    const cplx retard2 = std::exp(-(iu * d2 + eps) * sep);
    const cplx decay = std::exp(-gamma * sep);
    const cplx shared = 1.0 / cplx(d2, gamma - eps);  // 1/(i gamma + d2 - i eps)
    const cplx bracket = retard2 * (shared + 1.0 / cplx(sum - d2, eps + gamma)) -
                         decay * (shared - 1.0 / cplx(sum - d1, eps + gamma));

    return front * resonance * envelope * bracket;
}

cplx scattered_amplitude(double dp, double dq, const TwoPhotonInput& input,
                         const SystemParams& params) {
    return phase_factor(dp, params) * phase_factor(dq, params) * initial_amplitude(dp, dq, input) +
           correlation_amplitude(dp, dq, input, params);
}

cplx channel_amplitude(Channel c, double dp, double dq, const TwoPhotonInput& input,
                       const SystemParams& params) {
    const cplx sp = (c == Channel::rr || c == Channel::rl) ? transmission(dp, params)
                                                           : reflection(dp, params);
    const cplx sq = (c == Channel::rr || c == Channel::lr) ? transmission(dq, params)
                                                           : reflection(dq, params);
    return 0.5 * (sp * sq * initial_amplitude(dp, dq, input) +
                  0.25 * correlation_amplitude(dp, dq, input, params));
}

cplx input_wave_pair(double x1, double x2, const TwoPhotonInput& input) {
    const double eps = input.width();
    const double d1 = input.pulse1.detuning, d2 = input.pulse2.detuning;
    const double l1 = input.offset1(), l2 = input.offset2();
    const auto packet = [&](double xa, double xb) -> cplx {
        if (step(-xa - l1) == 0.0 || step(-xb - l2) == 0.0) return {0.0, 0.0};
        return std::exp((iu * d1 + eps) * (xa + l1)) * std::exp((iu * d2 + eps) * (xb + l2));
    };
    const double amp = -4.0 * pi * pi * pair_basis_norm * pair_norm_constant(input);
    return amp * (packet(x1, x2) + packet(x2, x1));
}

double RelativeWave::tail_mean() const {
    const double a2 = std::norm(independent);
    return relative_detuning == 0.0 ? a2 : 0.5 * a2;
}

double RelativeWave::tail_osc_coef() const {
    return relative_detuning == 0.0 ? 0.0 : 0.5 * std::norm(independent);
}

RelativeWave relative_wave(Channel c, const TwoPhotonInput& input, const SystemParams& params) {
    if (c != Channel::rr && c != Channel::ll)
        throw std::invalid_argument("relative_wave: only rr and ll channels have one");
    warn_outside_validity(input, params);

    const double eps = input.width();
    const cplx z1(input.pulse1.detuning, -eps), z2(input.pulse2.detuning, -eps);
    const cplx r1 = reflection(z1, params), r2 = reflection(z2, params);

    RelativeWave wave;
    wave.exponent = cplx(0.5 * input.total_detuning(), params.gamma - eps);
    wave.relative_detuning = input.relative_detuning();
    const cplx corr = -0.5 * r1 * r2 * correlation_factor(input, params);
    if (c == Channel::rr) {
        wave.independent = transmission(z1, params) * transmission(z2, params);
        wave.correlated = corr;
    } else {
        wave.independent = r1 * r2;
        wave.correlated = corr;
    }
    return wave;
}

cplx phi_rr(double x, const TwoPhotonInput& input, const SystemParams& params) {
    return relative_wave(Channel::rr, input, params)(x);
}

cplx phi_ll(double x, const TwoPhotonInput& input, const SystemParams& params) {
    return relative_wave(Channel::ll, input, params)(x);
}

cplx relative_wave_general(Channel c, double x, double xc, double t,
                           const TwoPhotonInput& input, const SystemParams& params) {
    if (c != Channel::rr && c != Channel::ll)
        throw std::invalid_argument("relative_wave_general: only rr and ll channels");
    warn_outside_validity(input, params);

    const double eps = input.width();
    const double l1 = input.offset1(), l2 = input.offset2();
    const double delta = input.relative_detuning();
    const cplx z1(input.pulse1.detuning, -eps), z2(input.pulse2.detuning, -eps);
    const cplx r1 = reflection(z1, params), r2 = reflection(z2, params);
    const cplx q(0.5 * input.total_detuning(), params.gamma - eps);

    const cplx indep_coef = (c == Channel::rr)
                                ? transmission(z1, params) * transmission(z2, params)
                                : r1 * r2;
    // two orderings of which photon rides in front
    double gate1, gate2, gate_sw1, gate_sw2, gate_corr;
    if (c == Channel::rr) {
        gate1 = step(-xc - x / 2 + t - l1);
        gate2 = step(-xc + x / 2 + t - l2);
        gate_sw1 = step(-xc + x / 2 + t - l1);
        gate_sw2 = step(-xc - x / 2 + t - l2);
        gate_corr = step(-xc + t - std::abs(x) / 2 - l1);
    } else {
        gate1 = step(xc + x / 2 + t - l1);
        gate2 = step(xc - x / 2 + t - l2);
        gate_sw1 = step(xc - x / 2 + t - l1);
        gate_sw2 = step(xc + x / 2 + t - l2);
        gate_corr = step(xc + t - std::abs(x) / 2 - l1);
    }
    const double osc_sign = (c == Channel::rr) ? 1.0 : -1.0;
    const cplx indep = indep_coef * (std::exp(iu * osc_sign * delta * x) * gate1 * gate2 +
                                     std::exp(-iu * osc_sign * delta * x) * gate_sw1 * gate_sw2);
    const cplx corr = r1 * r2 * correlation_factor(input, params) *
                      std::exp(iu * q * std::abs(x)) * gate_corr;
    return indep - corr;
}

cplx output_wave_pair(Channel c, double x1, double x2, double t,
                      const TwoPhotonInput& input, const SystemParams& params) {
    if (c != Channel::rr && c != Channel::ll)
        throw std::invalid_argument("output_wave_pair: only rr and ll channels");
    const double eps = input.width();
    const double l1 = input.offset1(), l2 = input.offset2();
    const double xc = 0.5 * (x1 + x2);
    const double x = x1 - x2;
    const cplx etot(input.total_detuning(), -2.0 * eps);  // E - 2 i eps
    const double amp = -4.0 * pi * pi * pair_basis_norm * pair_norm_constant(input);

    const double com = (c == Channel::rr) ? (xc - t) : (-xc - t);
    const cplx launch = std::exp(iu * cplx(0.5 * input.total_detuning(), -eps) * (l1 + l2)) *
                        std::exp(iu * input.relative_detuning() * (l1 - l2));
    return amp * std::exp(iu * etot * com) * launch *
           relative_wave_general(c, x, xc, t, input, params);
}

}  // namespace wqed

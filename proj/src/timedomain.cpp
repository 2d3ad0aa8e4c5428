#include "wqed/timedomain.hpp"

#include "wqed/scatter.hpp"
#include "wqed/two_photon.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace wqed::timedomain {

namespace {

constexpr double coverage_warn = 0.999;
constexpr double coverage_fail = 0.99;
constexpr double atom_residual_limit = 1e-3;
constexpr double norm_drift_limit = 1e-6;

void check_coverage(double coverage, const char* what) {
    if (coverage < coverage_fail) {
        char msg[128];
        std::snprintf(msg, sizeof msg, "%s: window holds only %.4f of the packet", what, coverage);
        throw std::invalid_argument(msg);
    }
    if (coverage < coverage_warn)
        std::fprintf(stderr, "wqed: note: %s window covers %.5f of the packet\n", what, coverage);
}

void check_dt(double dt, const ModeGrid& grid) {
    if (!(dt > 0.0) || dt > 0.05 / grid.half_window + 1e-15)
        throw std::invalid_argument("evolve: dt must satisfy dt <= 0.05/half_window");
}

double flat_norm_single(const cplx* y, int m) {
    double n = std::norm(y[0]) + std::norm(y[1]);
    for (int k = 0; k < m; ++k) n += std::norm(y[2 + k]);
    return n;
}

double flat_norm_pair(const cplx* y, int m) {
    double n = std::norm(y[0]);
    for (int k = 0; k < 2 * m; ++k) n += std::norm(y[1 + k]);
    double d2 = 0.0;
    const cplx* d = y + 1 + 2 * m;
    const std::size_t mm = static_cast<std::size_t>(m) * m;
    for (std::size_t i = 0; i < mm; ++i) d2 += std::norm(d[i]);
    return n + 0.5 * d2;
}

// single-photon right-hand side: two atoms driven by the mode sum
void single_rhs(const cplx* y, cplx* dy, int m, const double* deltas, double coupling) {
    const cplx mig(0.0, -coupling);
    cplx mode_sum(0.0, 0.0);
    for (int k = 0; k < m; ++k) mode_sum += y[2 + k];
    dy[0] = mig * mode_sum;
    dy[1] = mig * mode_sum;
    const cplx atoms = y[0] + y[1];
    for (int k = 0; k < m; ++k)
        dy[2 + k] = cplx(0.0, -deltas[k]) * y[2 + k] + mig * atoms;
}

template <class Rhs>
void rk4_run(std::vector<cplx>& y, int steps, double dt, const Rhs& rhs, bool parallel,
             const std::function<void(int, const cplx*)>& on_step = nullptr) {
    const std::size_t n = y.size();
    std::vector<cplx> k1(n), k2(n), k3(n), k4(n), tmp(n);
    const auto blend = [&](const std::vector<cplx>& base, const std::vector<cplx>& slope,
                           double factor, std::vector<cplx>& out) {
#pragma omp parallel for schedule(static) if (parallel)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            out[i] = base[i] + factor * slope[i];
    };
    if (on_step) on_step(0, y.data());
    for (int s = 0; s < steps; ++s) {
        rhs(y.data(), k1.data());
        blend(y, k1, 0.5 * dt, tmp);
        rhs(tmp.data(), k2.data());
        blend(y, k2, 0.5 * dt, tmp);
        rhs(tmp.data(), k3.data());
        blend(y, k3, dt, tmp);
        rhs(tmp.data(), k4.data());
        const double w = dt / 6.0;
#pragma omp parallel for schedule(static) if (parallel)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            y[i] += w * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        if (on_step) on_step(s + 1, y.data());
    }
}

}  // namespace

int ModeGrid::index_of(double delta_value) const {
    const int k = static_cast<int>(std::lround((delta_value + half_window) / spacing()));
    if (k < 0 || k >= modes) throw std::invalid_argument("ModeGrid::index_of: outside window");
    return k;
}

double SingleState::norm() const {
    double n = std::norm(atom1) + std::norm(atom2);
    for (const cplx& v : modes) n += std::norm(v);
    return n;
}

double PairState::norm() const {
    double n = std::norm(both_excited);
    for (const cplx& v : mixed1) n += std::norm(v);
    for (const cplx& v : mixed2) n += std::norm(v);
    double d2 = 0.0;
    for (const cplx& v : pair) d2 += std::norm(v);
    return n + 0.5 * d2;
}

SingleState discretize_single(const PulseSpec& pulse, const ModeGrid& grid) {
    SingleState state{grid};
    state.modes.resize(grid.modes);
    const double root_spacing = std::sqrt(grid.spacing());
    double mass = 0.0;
    for (int k = 0; k < grid.modes; ++k) {
        state.modes[k] = pulse_amplitude(grid.delta(k), pulse) * root_spacing;
        mass += std::norm(state.modes[k]);
    }
    state.coverage = mass;
    check_coverage(mass, "discretize_single");
    state.renorm = 1.0 / std::sqrt(mass);
    for (cplx& v : state.modes) v *= state.renorm;
    return state;
}

PairState discretize_pair(const TwoPhotonInput& input, const ModeGrid& grid) {
    PairState state{grid};
    const int m = grid.modes;
    state.mixed1.assign(m, cplx(0.0, 0.0));
    state.mixed2.assign(m, cplx(0.0, 0.0));
    state.pair.resize(static_cast<std::size_t>(m) * m);
    const double spacing = grid.spacing();
    double mass = 0.0;
    for (int p = 0; p < m; ++p) {
        const double dp = grid.delta(p);
        for (int q = 0; q < m; ++q) {
            const cplx v = initial_amplitude(dp, grid.delta(q), input) * spacing;
            state.pair[static_cast<std::size_t>(p) * m + q] = v;
            mass += 0.5 * std::norm(v);
        }
    }
    state.coverage = mass;
    check_coverage(mass, "discretize_pair");
    state.renorm = 1.0 / std::sqrt(mass);
    for (cplx& v : state.pair) v *= state.renorm;
    return state;
}

namespace detail {

void pair_rhs(const cplx* y, cplx* dy, const PairContext& ctx, bool parallel) {
    const int m = ctx.modes;
    const cplx a = y[0];
    const cplx* b = y + 1;
    const cplx* c = b + m;
    const cplx* d = c + m;
    cplx* db = dy + 1;
    cplx* dc = db + m;
    cplx* dd = dc + m;
    const cplx mig(0.0, -ctx.coupling);

    cplx sum_bc(0.0, 0.0);
    for (int k = 0; k < m; ++k) sum_bc += b[k] + c[k];
    dy[0] = cplx(0.0, -ctx.xi) * a + mig * sum_bc;

    // S_k = sum_p D_{p,k}; the matrix is symmetric, so the contiguous row
    // sum is the same value
#pragma omp parallel for schedule(static) if (parallel)
    for (int k = 0; k < m; ++k) {
        const cplx* row = d + static_cast<std::size_t>(k) * m;
        cplx s(0.0, 0.0);
        for (int p = 0; p < m; ++p) s += row[p];
        const cplx drive = mig * (a + s);
        db[k] = cplx(0.0, -ctx.deltas[k]) * b[k] + drive;
        dc[k] = cplx(0.0, -ctx.deltas[k]) * c[k] + drive;
    }

#pragma omp parallel for schedule(static) if (parallel)
    for (int p = 0; p < m; ++p) {
        const double dp = ctx.deltas[p];
        const cplx bc_p = b[p] + c[p];
        const cplx* row = d + static_cast<std::size_t>(p) * m;
        cplx* drow = dd + static_cast<std::size_t>(p) * m;
        for (int q = 0; q < m; ++q)
            drow[q] = cplx(0.0, -(dp + ctx.deltas[q])) * row[q] + mig * (bc_p + b[q] + c[q]);
    }
}

void pair_rhs_reference(const cplx* y, cplx* dy, const PairContext& ctx) {
    const int m = ctx.modes;
    const cplx a = y[0];
    const cplx* b = y + 1;
    const cplx* c = b + m;
    const cplx* d = c + m;
    const cplx ig(0.0, ctx.coupling);

    cplx sum_b(0.0, 0.0), sum_c(0.0, 0.0);
    for (int k = 0; k < m; ++k) {
        sum_b += b[k];
        sum_c += c[k];
    }
    dy[0] = cplx(0.0, -ctx.xi) * a - ig * (sum_b + sum_c);

    for (int k = 0; k < m; ++k) {
        cplx s(0.0, 0.0);
        for (int p = 0; p < m; ++p) s += d[static_cast<std::size_t>(p) * m + k];
        dy[1 + k] = cplx(0.0, -ctx.deltas[k]) * b[k] - ig * a - ig * s;
        dy[1 + m + k] = cplx(0.0, -ctx.deltas[k]) * c[k] - ig * a - ig * s;
    }

    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const std::size_t i = static_cast<std::size_t>(p) * m + q;
            dy[1 + 2 * m + i] = cplx(0.0, -(ctx.deltas[p] + ctx.deltas[q])) * d[i] -
                                ig * (b[p] + b[q]) - ig * (c[p] + c[q]);
        }
}

}  // namespace detail

void evolve_single(SingleState& state, double t_end, const EvolveOptions& opts,
                   const SystemParams& params) {
    check_dt(opts.dt, state.grid);
    const int m = state.grid.modes;
    const int steps = static_cast<int>(std::llround((t_end - state.time) / opts.dt));
    if (steps < 0) throw std::invalid_argument("evolve_single: t_end precedes state time");

    std::vector<double> deltas(m);
    for (int k = 0; k < m; ++k) deltas[k] = state.grid.delta(k);
    const double coupling = state.grid.effective_coupling(params);

    std::vector<cplx> y(2 + m);
    y[0] = state.atom1;
    y[1] = state.atom2;
    std::copy(state.modes.begin(), state.modes.end(), y.begin() + 2);
    const double norm0 = flat_norm_single(y.data(), m);

    // too small a system to benefit from threads; always serial
    rk4_run(
        y, steps, opts.dt,
        [&](const cplx* yy, cplx* dy) { single_rhs(yy, dy, m, deltas.data(), coupling); }, false);

    const double drift = std::fabs(flat_norm_single(y.data(), m) - norm0);
    if (drift > norm_drift_limit)
        throw numerical_error("evolve_single: norm drift exceeds 1e-6", drift);

    state.atom1 = y[0];
    state.atom2 = y[1];
    std::copy(y.begin() + 2, y.end(), state.modes.begin());
    state.time += steps * opts.dt;
}

void evolve_pair(PairState& state, double t_end, const EvolveOptions& opts,
                 const SystemParams& params, std::vector<ModeTrace>* traces) {
    check_dt(opts.dt, state.grid);
    const int m = state.grid.modes;
    const int steps = static_cast<int>(std::llround((t_end - state.time) / opts.dt));
    if (steps < 0) throw std::invalid_argument("evolve_pair: t_end precedes state time");

    std::vector<double> deltas(m);
    for (int k = 0; k < m; ++k) deltas[k] = state.grid.delta(k);
    detail::PairContext ctx{m, deltas.data(), state.grid.effective_coupling(params), params.xi};

    std::vector<cplx> y(1 + 2 * static_cast<std::size_t>(m) + static_cast<std::size_t>(m) * m);
    y[0] = state.both_excited;
    std::copy(state.mixed1.begin(), state.mixed1.end(), y.begin() + 1);
    std::copy(state.mixed2.begin(), state.mixed2.end(), y.begin() + 1 + m);
    std::copy(state.pair.begin(), state.pair.end(), y.begin() + 1 + 2 * m);
    const double norm0 = flat_norm_pair(y.data(), m);

    if (traces) {
        traces->clear();
        for (int mode : opts.sample_modes) {
            if (mode < 0 || mode >= m) throw std::invalid_argument("evolve_pair: bad sample mode");
            traces->push_back(ModeTrace{mode, opts.dt * std::max(opts.sample_stride, 1), {}});
        }
    }
    std::function<void(int, const cplx*)> on_step;
    if (traces && !traces->empty()) {
        const int stride = std::max(opts.sample_stride, 1);
        on_step = [traces, stride](int s, const cplx* yy) {
            if (s % stride != 0) return;
            for (ModeTrace& tr : *traces) tr.values.push_back(yy[1 + tr.mode]);
        };
    }

    rk4_run(
        y, steps, opts.dt,
        [&](const cplx* yy, cplx* dy) { detail::pair_rhs(yy, dy, ctx, opts.parallel); },
        opts.parallel, on_step);

    const double drift = std::fabs(flat_norm_pair(y.data(), m) - norm0);
    if (drift > norm_drift_limit)
        throw numerical_error("evolve_pair: norm drift exceeds 1e-6", drift);

    state.both_excited = y[0];
    std::copy(y.begin() + 1, y.begin() + 1 + m, state.mixed1.begin());
    std::copy(y.begin() + 1 + m, y.begin() + 1 + 2 * m, state.mixed2.begin());
    std::copy(y.begin() + 1 + 2 * m, y.end(), state.pair.begin());
    state.time += steps * opts.dt;
}

std::vector<cplx> extract_single(const SingleState& state) {
    const double residual = std::max(std::abs(state.atom1), std::abs(state.atom2));
    if (residual >= atom_residual_limit)
        throw numerical_error("extract_single: atoms not yet de-excited", residual);
    std::vector<cplx> out(state.modes.size());
    for (int k = 0; k < state.grid.modes; ++k)
        out[k] = state.modes[k] * std::exp(cplx(0.0, state.grid.delta(k) * state.time));
    return out;
}

std::vector<cplx> extract_pair(const PairState& state) {
    double residual = std::abs(state.both_excited);
    for (const cplx& v : state.mixed1) residual = std::max(residual, std::abs(v));
    for (const cplx& v : state.mixed2) residual = std::max(residual, std::abs(v));
    if (residual >= atom_residual_limit)
        throw numerical_error("extract_pair: atomic amplitudes not yet de-excited", residual);
    const int m = state.grid.modes;
    std::vector<cplx> out(state.pair.size());
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const std::size_t i = static_cast<std::size_t>(p) * m + q;
            out[i] = state.pair[i] *
                     std::exp(cplx(0.0, (state.grid.delta(p) + state.grid.delta(q)) * state.time));
        }
    return out;
}

cplx laplace_closed(cplx s, double delta_k, const TwoPhotonInput& input,
                    const SystemParams& params) {
    if (!(s.real() > 0.0)) throw std::domain_error("laplace_closed: requires Re(s) > 0");
    const double eps = input.width();
    const double gamma = params.gamma;
    const double xi = params.xi;
    const double d1 = input.pulse1.detuning, d2 = input.pulse2.detuning;
    const double l1 = input.offset1(), l2 = input.offset2();
    const double sep = l1 - l2;
    const cplx iu(0.0, 1.0);

    const auto guarded_inverse = [](cplx den) {
        if (std::abs(den) == 0.0) throw std::domain_error("laplace_closed: pole encountered");
        return 1.0 / den;
    };

    const cplx f1 =
        std::exp(-s * l1) * std::exp(-iu * sep * delta_k) *
            guarded_inverse(cplx(delta_k - d2, eps) * (delta_k + d1 - iu * (s + eps))) +
        std::exp(-s * l2) * std::exp(iu * sep * delta_k) *
            guarded_inverse(cplx(delta_k - d1, eps) * (delta_k + d2 - iu * (s + eps)));

    const cplx f2 =
        std::exp(-iu * sep * delta_k) *
            guarded_inverse(cplx(delta_k, gamma) * cplx(delta_k - d2, eps) *
                            (s + eps + iu * (delta_k + d1))) +
        std::exp(-sep * gamma) * guarded_inverse(cplx(gamma - eps, -d2) * (s + gamma + eps + iu * d1)) *
            (guarded_inverse(cplx(-gamma, delta_k)) + guarded_inverse(s + gamma + iu * xi));

    const cplx f3 =
        std::exp(-sep * cplx(eps, d2)) * guarded_inverse(s + iu * (d1 + d2) + 2.0 * eps) *
        (guarded_inverse(cplx(d2, gamma - eps) * cplx(d2 - delta_k, -eps)) -
         guarded_inverse((s + gamma + iu * d2 + eps) * (s + iu * (d2 + delta_k) + eps)) -
         guarded_inverse(cplx(gamma - eps, -d2) * (s + gamma + iu * xi)) -
         guarded_inverse((s + gamma + iu * d2 + eps) * (s + gamma + iu * xi)));

    const double gates = step(l1) * step(l2) * step(sep);
    const cplx front = 2.0 * pi * params.coupling() * pair_norm_constant(input) *
                       guarded_inverse(delta_k - iu * (s + gamma));
    return front * (f1 + 2.0 * std::exp(-s * l1) * gamma * (f2 + f3)) * gates;
}

cplx laplace_from_samples(const std::vector<cplx>& samples, double dt, cplx s) {
    if (!(s.real() > 0.0)) throw std::domain_error("laplace_from_samples: requires Re(s) > 0");
    if (samples.size() < 3 || !(dt > 0.0))
        throw std::invalid_argument("laplace_from_samples: need >= 3 uniform samples");
    const double t_end = dt * static_cast<double>(samples.size() - 1);
    if (std::exp(-s.real() * t_end) >= 1e-6)
        throw numerical_error("laplace_from_samples: horizon too short for Re(s)", 0.0);

    const auto f = [&](std::size_t j) { return samples[j] * std::exp(-s * (dt * static_cast<double>(j))); };

    // composite Simpson; trapezoid patch on the final interval if the count is odd
    cplx sum(0.0, 0.0);
    std::size_t n = samples.size() - 1;
    const std::size_t n_even = (n % 2 == 0) ? n : n - 1;
    for (std::size_t j = 0; j + 2 <= n_even; j += 2)
        sum += (dt / 3.0) * (f(j) + 4.0 * f(j + 1) + f(j + 2));
    if (n % 2 != 0) sum += 0.5 * dt * (f(n - 1) + f(n));

    const double tail = std::abs(samples.back()) * std::exp(-s.real() * t_end) / s.real();
    if (tail > 1e-4 * std::abs(sum))
        throw numerical_error("laplace_from_samples: truncation tail above 1e-4", std::abs(sum));
    return sum;
}

namespace {

void write_header(std::FILE* fp, const char* kind, const ModeGrid& grid, double time,
                  const char* columns) {
    std::fprintf(fp, "# format=wqed-snapshot-1\n");
    std::fprintf(fp, "# kind=%s\n", kind);
    std::fprintf(fp, "# modes=%d\n", grid.modes);
    std::fprintf(fp, "# half_window=%.17g\n", grid.half_window);
    std::fprintf(fp, "# time=%.17g\n", time);
    std::fprintf(fp, "# columns=%s\n", columns);
}

std::FILE* open_or_throw(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw io_error("cannot open for writing: " + path);
    return fp;
}

}  // namespace

void write_snapshot(const std::string& path, const SingleState& state) {
    std::FILE* fp = open_or_throw(path);
    write_header(fp, "single", state.grid, state.time, "delta,re,im");
    for (int k = 0; k < state.grid.modes; ++k)
        std::fprintf(fp, "%.17g %.17g %.17g\n", state.grid.delta(k), state.modes[k].real(),
                     state.modes[k].imag());
    std::fclose(fp);
}

void write_snapshot(const std::string& path, const PairState& state) {
    std::FILE* fp = open_or_throw(path);
    write_header(fp, "pair", state.grid, state.time, "p,q,re,im");
    const int m = state.grid.modes;
    for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) {
            const cplx v = state.pair_at(p, q);
            std::fprintf(fp, "%d %d %.17g %.17g\n", p, q, v.real(), v.imag());
        }
    std::fclose(fp);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open snapshot: " + path);
    Snapshot snap;
    int modes = 0;
    double half_window = 0.0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            const std::string value = line.substr(eq + 1);
            if (key == "kind") snap.kind = value;
            else if (key == "modes") modes = std::stoi(value);
            else if (key == "half_window") half_window = std::stod(value);
            else if (key == "time") snap.time = std::stod(value);
            continue;
        }
        std::istringstream row(line);
        if (snap.kind == "single") {
            double delta, re, im;
            if (row >> delta >> re >> im) snap.values.emplace_back(re, im);
        } else {
            int p, q;
            double re, im;
            if (row >> p >> q >> re >> im) snap.values.emplace_back(re, im);
        }
    }
    if (modes == 0 || half_window <= 0.0 || snap.kind.empty())
        throw io_error("snapshot header incomplete: " + path);
    snap.grid = ModeGrid(half_window, modes);
    const std::size_t expect = snap.kind == "single"
                                   ? static_cast<std::size_t>(modes)
                                   : static_cast<std::size_t>(modes) * modes;
    if (snap.values.size() != expect) throw io_error("snapshot row count mismatch: " + path);
    return snap;
}

}  // namespace wqed::timedomain

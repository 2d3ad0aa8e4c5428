#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature on a finite interval with a
// worst-first interval queue. Real-valued integrands.

#include "wqed/types.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wqed {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;         // estimated absolute error
    int subdivisions = 0;
    bool converged = false;
};

namespace detail {

// abscissa, Gauss-7 weight, Kronrod-15 weight
inline constexpr double gk_nodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = gk_nodes[0][1] * f0;
    double k15 = gk_nodes[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk_nodes[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += gk_nodes[i][1] * fi;
        k15 += gk_nodes[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    value = k15;
    const double diff = 200.0 * std::fabs(g7 - k15);
    error = diff * std::sqrt(diff);
}

struct Interval {
    double a, b, value, error;
    bool operator<(const Interval& other) const { return error < other.error; }
};

}  // namespace detail

// Integrate f over [a, b] to relative tolerance rel_tol (with abs_tol floor),
// splitting the worst interval first. Never throws; inspect .converged.
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, double rel_tol = 1e-8,
                              int max_subdivisions = 10000, double abs_tol = 1e-300) {
    std::vector<detail::Interval> heap;
    detail::Interval whole{a, b, 0.0, 0.0};
    detail::gk15(f, a, b, whole.value, whole.error);
    heap.push_back(whole);

    QuadResult result;
    result.value = whole.value;
    result.error = whole.error;
    result.subdivisions = 1;

    while (result.error > std::max(rel_tol * std::fabs(result.value), abs_tol)) {
        if (result.subdivisions >= max_subdivisions) return result;
        std::pop_heap(heap.begin(), heap.end());
        const detail::Interval worst = heap.back();
        heap.pop_back();

        const double mid = 0.5 * (worst.a + worst.b);
        detail::Interval left{worst.a, mid, 0.0, 0.0}, right{mid, worst.b, 0.0, 0.0};
        detail::gk15(f, left.a, left.b, left.value, left.error);
        detail::gk15(f, right.a, right.b, right.value, right.error);

        result.value += left.value + right.value - worst.value;
        result.error += left.error + right.error - worst.error;
        ++result.subdivisions;

        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
    }
    result.converged = true;
    return result;
}

// Throwing wrapper used where a failed integral cannot be recovered.
template <class F>
double integrate_or_throw(const F& f, double a, double b, double rel_tol = 1e-8,
                          int max_subdivisions = 10000) {
    const QuadResult r = integrate_adaptive(f, a, b, rel_tol, max_subdivisions);
    if (!r.converged)
        throw numerical_error("adaptive quadrature exhausted its subdivision budget", r.value);
    return r.value;
}

}  // namespace wqed

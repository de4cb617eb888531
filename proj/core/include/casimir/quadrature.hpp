#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>
#include <vector>

namespace casimir::quad {

// Compensated (Kahan) accumulator.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) noexcept {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    [[nodiscard]] double value() const noexcept { return sum; }
};

struct Result {
    double value = 0.0;
    double error = 0.0; // estimated absolute error
    int evaluations = 0;
    bool converged = false;
};

struct Options {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    int max_panels = 4000;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights (QUADPACK values).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

} // namespace detail

// Single G7K15 panel on [a, b]; error = |K15 - G7|.
template <class F>
Result gauss_kronrod_15(F&& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);

    const double fc = f(mid);
    double k15 = detail::wgk[7] * fc;
    double g7 = detail::wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * detail::xgk[i];
        const double pair = f(mid - dx) + f(mid + dx);
        k15 += detail::wgk[i] * pair;
        if (i % 2 == 1) g7 += detail::wg[i / 2] * pair;
    }
    k15 *= h;
    g7 *= h;
    return {k15, std::abs(k15 - g7), 15, true};
}

// Adaptive bisection, worst panel first. The final value is re-summed over
// panels sorted by left endpoint with compensated summation, so the result
// does not depend on the subdivision schedule.
template <class F>
Result integrate(F&& f, double a, double b, Options opt = {}) {
    if (a == b) return {0.0, 0.0, 0, true};
    if (b < a) {
        Result r = integrate(std::forward<F>(f), b, a, opt);
        r.value = -r.value;
        return r;
    }

    struct Panel {
        double a, b, value, error;
    };
    auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(by_error)> active(by_error);
    std::vector<Panel> finished; // panels too narrow to split further

    Result seed = gauss_kronrod_15(f, a, b);
    int evaluations = seed.evaluations;
    active.push({a, b, seed.value, seed.error});
    double total_value = seed.value;
    double total_error = seed.error;
    int panels = 1;

    auto target = [&] { return std::max(opt.abs_tol, opt.rel_tol * std::abs(total_value)); };

    while (total_error > target() && panels < opt.max_panels && !active.empty()) {
        Panel worst = active.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Width at rounding limit; park the panel and move on.
            active.pop();
            finished.push_back(worst);
            continue;
        }
        active.pop();
        Result left = gauss_kronrod_15(f, worst.a, mid);
        Result right = gauss_kronrod_15(f, mid, worst.b);
        evaluations += 30;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push({worst.a, mid, left.value, left.error});
        active.push({mid, worst.b, right.value, right.error});
        ++panels;
    }

    while (!active.empty()) {
        finished.push_back(active.top());
        active.pop();
    }
    std::sort(finished.begin(), finished.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });

    KahanSum value, error;
    for (const Panel& p : finished) {
        value.add(p.value);
        error.add(p.error);
    }

    Result out;
    out.value = value.value();
    out.error = error.value();
    out.evaluations = evaluations;
    out.converged = out.error <= std::max(opt.abs_tol, opt.rel_tol * std::abs(out.value));
    return out;
}

} // namespace casimir::quad

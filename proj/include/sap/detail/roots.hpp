#pragma once

#include <cmath>
#include <vector>

namespace sap::detail {

// Sign changes of f over a uniform n-step scan of [lo, hi], each refined by
// bisection. Exact zeros at scan nodes are reported once.
template <class F>
std::vector<double> scan_roots(F&& f, double lo, double hi, int n) {
    std::vector<double> out;
    if (!(hi >= lo)) return out;
    if (hi == lo) {
        if (f(lo) == 0.0) out.push_back(lo);
        return out;
    }
    double x0 = lo, f0 = f(lo);
    if (f0 == 0.0) out.push_back(lo);
    for (int i = 1; i <= n; ++i) {
        const double x1 = i == n ? hi : lo + (hi - lo) * i / n;
        const double f1 = f(x1);
        if (f1 == 0.0) {
            out.push_back(x1);
        } else if (f0 != 0.0 && (f0 > 0) != (f1 > 0)) {
            double a = x0, b = x1, fa = f0;
            for (int it = 0; it < 200; ++it) {
                const double m = 0.5 * (a + b);
                if (m <= a || m >= b) break;
                const double fm = f(m);
                if (fm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((fm > 0) == (fa > 0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        x0 = x1;
        f0 = f1;
    }
    return out;
}

}  // namespace sap::detail

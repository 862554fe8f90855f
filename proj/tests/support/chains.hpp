#pragma once

#include <random>
#include <vector>

#include "sap/involute.hpp"

namespace support {

struct ChainStep {
    sap::InvolutePiece parent;
    sap::Point anchor;
    int branch;
    double theta_true;
};

// Random unwinding chain up to the given order. Anchors are placed on a
// tangent line of the parent so a solution is known to exist.
inline std::vector<ChainStep> random_chain(std::mt19937& rng, int order) {
    std::uniform_real_distribution<double> U(0.0, 1.0);
    sap::InvolutePiece cur;
    cur.order = 0;
    cur.r0 = 0.5 + 1.5 * U(rng);
    cur.center = {4 * U(rng) - 2, 4 * U(rng) - 2};
    cur.phase = 6 * U(rng);
    cur.reflect = U(rng) < 0.5 ? 1 : -1;
    cur.theta_a = -1.0;
    cur.theta_b = 1.0;
    std::vector<ChainStep> out;
    for (int k = 1; k <= order; ++k) {
        const double t = cur.theta_a + (cur.theta_b - cur.theta_a) * (0.2 + 0.6 * U(rng));
        const int s = U(rng) < 0.5 ? 1 : -1;
        const double len = 0.3 + 2.0 * U(rng);
        const sap::Vec2 T = sap::tangent_increasing(cur, t);
        const sap::Point anchor = sap::eval(cur, t) + T * (s * len);
        const int branch = -s;
        out.push_back({cur, anchor, branch, t});
        const auto sol = sap::solve_anchor(cur, anchor, branch);
        const double span = 0.4 + 0.8 * U(rng);
        cur = sap::make_child(cur, sol.c, branch > 0 ? sol.theta : sol.theta - span,
                              branch > 0 ? sol.theta + span : sol.theta);
    }
    return out;
}

}  // namespace support

#pragma once

#include "g2inv/exactalg.hpp"

namespace g2inv {

// Gram matrices of the standard even lattices used by the twisted
// connected sum computation.

// E8 Cartan matrix (positive definite, determinant 1). Node order: the
// A7 chain 1-2-3-4-5-6-7 with node 8 attached to node 5.
inline IntMatrix e8_cartan() {
    IntMatrix m(8, 8);
    for (int i = 0; i < 8; ++i) m(i, i) = 2;
    auto link = [&](int i, int j) { m(i, j) = -1, m(j, i) = -1; };
    link(0, 1), link(1, 2), link(2, 3), link(3, 4), link(4, 5), link(5, 6);
    link(4, 7);
    return m;
}

// Hyperbolic plane U.
inline IntMatrix hyperbolic_u() {
    IntMatrix m(2, 2);
    m(0, 1) = 1, m(1, 0) = 1;
    return m;
}

// H^2 of a K3 surface: E8(-1)^2 + U^3, 22 x 22, signature (3, 19).
inline RatMatrix k3_gram() {
    RatMatrix m(22, 22);
    IntMatrix e8 = e8_cartan();
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) m(8 * b + i, 8 * b + j) = -e8(i, j);
    for (int b = 0; b < 3; ++b) {
        int o = 16 + 2 * b;
        m(o, o + 1) = 1, m(o + 1, o) = 1;
    }
    return m;
}

}  // namespace g2inv

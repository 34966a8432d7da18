#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "g2inv/error.hpp"
#include "g2inv/numeric.hpp"

namespace g2inv {

// Residue class mod 48. Stored in [0, 48); reported canonically in
// {1, ..., 48} (so the zero class prints as 48).
struct Residue48 {
    int v = 0;

    static Residue48 of(const Int& x) {
        return Residue48{static_cast<int>(mod_nonneg(x, 48).get_si())};
    }
    int display() const { return v == 0 ? 48 : v; }
    int parity() const { return v & 1; }
    bool operator==(const Residue48& o) const = default;
};

// Characteristic numbers of a closed spin 8-manifold, fully solved:
// 45*sigma = 7*p2 - p1_sq and 5760*ahat = 7*p1_sq - 4*p2 both hold.
struct ClosedSpin8Data {
    Int p1_sq;  // <p_1^2, [X]>
    Int p2;     // <p_2, [X]>
    Int euler;  // chi(X)
    Int sigma;
    Int ahat;
};

// Any consistent subset of the characteristic numbers; the genera relations
// determine the rest. euler is always required.
struct ClosedSpin8Input {
    std::optional<Int> p1_sq, p2, sigma, ahat;
    Int euler;

    // Errors: Underdetermined, Inconsistent, NotIntegral, ParityViolation.
    ClosedSpin8Data resolve() const;
};

// Euler numbers of the half-spinor bundles, e+- = (p1^2 - 4 p2 +- 8 e)/16,
// cross-checked against 24*ahat + (+-chi - 3*sigma)/2.
std::pair<Int, Int> e_plus_minus(const ClosedSpin8Data& x);

// The closed Spin(7) obstruction identity 48*ahat + chi - 3*sigma = 0
// (equivalently e+ = 0).
bool check_spin7_closed(const ClosedSpin8Data& x);

// (chi, sigma, n+) of an 8-dimensional coboundary. A Spin(7) structure
// forces n+ = 0.
struct CoboundaryData {
    Int chi;
    Int sigma;
    Int n_plus;
    bool is_spin7 = false;
};
CoboundaryData make_coboundary(Int chi, Int sigma, Int n_plus, bool is_spin7);

// Data for the orientation-reversed coboundary: (chi, -sigma, chi - n+).
CoboundaryData reverse_coboundary(const CoboundaryData& w);

Int nubar(const CoboundaryData& w);          // -2 n+ + chi - 3 sigma
Residue48 nu(const CoboundaryData& w);       // nubar mod 48

// Semi-characteristic inputs: rational Betti numbers b0..b3 of a closed
// 7-manifold, and optionally the mod-2 Betti numbers b0, b1 of a closed
// 3-manifold.
struct SemiCharData {
    std::array<Int, 4> betti_q{};
    std::optional<std::array<Int, 2>> betti_2;

    int chi_q() const;  // b0 + b1 + b2 + b3 mod 2
    int chi_2() const;  // dim H^0 + dim H^1 over Z/2, mod 2
};

bool parity_check(const Residue48& nu_val, const SemiCharData& m);

// sigma(W) + chi(W) = chi_Q(boundary) mod 2.
bool sign_chi_semichar(const CoboundaryData& w, const SemiCharData& boundary);

// Affine difference through a bordism: D = n+ - e+(closed-up bordism).
Int d_from_bordism(const Int& n_plus, const Int& e_plus_closed);

// nu(phi') = nu(phi) + 2 D(phi, phi').
Residue48 nu_shift(const Residue48& nu_val, const Int& d);

// D(phi, f* phi) = 3 p^2(f) / 28 from the mapping torus; requires
// 224 | p2f (NotRealizable otherwise) and is always a multiple of 24.
Int d_from_mapping_torus(const Int& p2f);

// e+(X # X') = e+(X) + e+(X') - 1.
Int connected_sum_e_plus(const Int& e1, const Int& e2);

// Closed spin 4-manifolds: e+- = (3/4) sigma +- (1/2) chi, with Rokhlin's
// 16 | sigma enforced.
std::pair<Rat, Rat> dim4_e_pm(const Int& chi, const Int& sigma);

}  // namespace g2inv

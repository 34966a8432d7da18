#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2inv/abgroup.hpp"
#include "g2inv/charnum.hpp"

namespace g2inv {

// The algebraic-topological record of a closed spin 7-manifold.
// r is the 2-torsion parameter; leave it unset ("auto") only when H^4 has
// no 2-torsion, in which case r = 1.
struct SpinManifold7Data {
    FgAbelianGroup h4;
    GroupElement p_m;
    LinkingForm b_m;
    SemiCharData semichar;
    std::optional<int> r;
    bool two_connected = false;
};

// Validates p_m in 2 H^4 and the r/2-torsion constraint.
SpinManifold7Data make_spin7_data(FgAbelianGroup h4, GroupElement p_m, LinkingForm b_m,
                                  SemiCharData semichar, std::optional<int> r,
                                  bool two_connected);

int resolve_r(const SpinManifold7Data& m);
Int manifold_d_pi(const SpinManifold7Data& m);
Int manifold_d_o(const SpinManifold7Data& m);

// lcm(4, d_pi) with lcm(4, 0) = 0.
Int tilde_dpi(const Int& d_pi);
// tdf = lcm(4, d_pi)/4; 0 means values are exact rationals.
Int tdf_of(const Int& d_pi);

// Canonical element of S_{d_pi}: free part p/d_pi, zero torsion part.
GroupElement s_dpi_base_point(const SpinManifold7Data& m);

// The translation obstruction of an automorphism preserving (b, p):
// P(F) = d_pi^2 b(t,t) - 2 d_pi b(p - d_pi k, t) mod 2 d_pi for t = F(k) - k.
// modulus 0 (p torsion) means no constraint and value 0. The value is
// checked independent of the choice of k and of the rational lifts.
struct PValue {
    Rat value;    // reduced to [0, modulus) when modulus > 0
    Int modulus;  // 2 d_pi
};
PValue p_of_f(const SpinManifold7Data& m, const GroupAutomorphism& f);

// Deformation-class count: Infinite when p_M is torsion, else
// 24 * Num(2^r d_o / 224); exact for 2-connected manifolds, otherwise a
// lower bound.
struct ClassCount {
    bool infinite = false;
    Int count;
    bool exact = false;
};
ClassCount class_count(const SpinManifold7Data& m);

// lcm(224, 2^r d_o) | p2f (with d_o = 0 meaning just 224 | p2f).
bool p2_constraint(const SpinManifold7Data& m, const Int& p2f);

// Coboundary input for the Gauss refinement and xi: chi, sigma, a base
// point k0 of S_{d_pi}, and psq0 = (p_W - d_pi n0)^2 for a lift n0 of k0.
struct XiCoboundaryData {
    Int chi;
    Int sigma;
    GroupElement k0;
    Rat psq0;
};

// Gauss refinement g : S_{d_pi} -> Q / tdf Z, pinned by a base value and
// extended by the difference law
//   g(k + t) - g(k) = (d_pi^2 b(t,t) - 2 d_pi b(p - d_pi k, t)) / 8.
struct GaussRefinement {
    FgAbelianGroup h4;
    GroupElement p_m;
    LinkingForm b_m;
    Int d_pi;
    Int tdf;  // 0 = exact rational values
    GroupElement base_point;
    Rat base_value;

    Rat eval(const GroupElement& k) const;  // NotInSdpi if k is not in S_{d_pi}
};

GaussRefinement gauss_from_coboundary(const SpinManifold7Data& m, const XiCoboundaryData& w);

// g(f* phi) differs from g by p^2(f)/8.
GaussRefinement gauss_action(const GaussRefinement& g, const Int& p2f);

// The generalized Eells-Kuiper invariant: the mod gcd(28, tdf) reduction
// of a Gauss refinement (gcd(28, 0) = 28).
struct MuInvariant {
    Rat value;
    Int modulus;
};
MuInvariant mu_from_gauss(const GaussRefinement& g);

// xi = 7(chi - 3 sigma) + 12 g_W as a function on S_{d_pi}, valued in
// Q / 3 lcm(4, d_pi) Z; carries nu alongside.
struct XiInvariant {
    Residue48 nu;
    Int modulus;  // 3 * tilde_dpi; 0 = exact rational
    GaussRefinement gauss;
    Rat base_value;

    const GroupElement& base_point() const { return gauss.base_point; }
    Rat eval(const GroupElement& k) const;
};

XiInvariant xi_from_coboundary(const SpinManifold7Data& m, const XiCoboundaryData& w);

// xi(phi') - xi(phi) = 14 D(phi, phi') mod 3 tilde_dpi.
bool xi_diff_check(const XiInvariant& x1, const XiInvariant& x2, const Int& d);

// xi(f* phi) = xi(phi) + (3/2) p^2(f).
XiInvariant xi_action(const XiInvariant& xi, const Int& p2f);

// How many deformation classes (nu, xi) tells apart:
// lcm(24, Num(2^{r-1} 3 d_o / 14)) = 24 Num(2^r d_o / 224).
ClassCount distinguishable_classes(const SpinManifold7Data& m);

// Inputs to the classification predicate for one side.
struct ClassifyInvariants {
    Residue48 nu;
    XiInvariant xi;
    std::vector<std::string> q_token;  // opaque, one entry per torsion generator
};

struct ClassifyResult {
    bool equal = false;
    bool warning_not_two_connected = false;
    std::string reason;  // first failed comparison, empty when equal
};

// Deformation-equivalence predicate for (M0, phi0) vs (M1, phi1) along an
// isomorphism F : H^4(M1) -> H^4(M0): nu agrees, F(p1) = p0, the q-tokens
// match after relabeling by F, and xi0 composed with F equals xi1.
ClassifyResult classify_pair(const SpinManifold7Data& m0, const ClassifyInvariants& i0,
                             const SpinManifold7Data& m1, const ClassifyInvariants& i1,
                             const GroupAutomorphism& f);

}  // namespace g2inv

#pragma once

#include "g2inv/charnum.hpp"
#include "g2inv/exactalg.hpp"

namespace g2inv {

// A nondegenerate skew form on V with three Lagrangian subspaces.
struct WallTriple {
    RatMatrix form;
    Subspace a, b, c;
};

// Validates skewness, nondegeneracy and that a, b, c are Lagrangian
// (NotLagrangian otherwise).
WallTriple make_wall_triple(RatMatrix form, Subspace a, Subspace b, Subspace c);

// Signature correction for gluing along parts of boundaries: the symmetric
// form q([a], [a']) = -(a, b') on K = (A n (B+C)) / ((A n B) + (A n C)),
// where a' = b' + c' with b' in B, c' in C. q is checked symmetric and
// independent of the decomposition before anything is returned;
// DegenerateForm if q is singular on K.
struct WallResult {
    Signature signature;
    int dim_k = 0;
    RatMatrix q;  // Gram matrix on the chosen representatives of K
};
WallResult wall_correction_full(const WallTriple& t);
int wall_correction(const WallTriple& t);

// Lattice data for the twisted connected sum boundary computation:
// L plays H^2 of the cross-section surface, N+- the images of H^2 of the
// two pieces, and T+- their orthogonal complements.
struct TcsLatticeData {
    RatMatrix l_form;
    Subspace n_plus, n_minus;
};
TcsLatticeData make_tcs_data(RatMatrix l_form, Subspace n_plus, Subspace n_minus);

// V = L^8 with the signed block pairing over the boundary components
// (block order 1+, 1-, 3/4+, 3/4-, 1/4+, 1/4-, 0+, 0-; sign pattern
// +,-,-,+,+,-,-,+), and the three Lagrangians cut out by the component
// matching conditions.
WallTriple tcs_wall_triple(const TcsLatticeData& d);

// The full form matrix of the pairing above (exposed for regression tests).
RatMatrix tcs_intersection_form(const RatMatrix& l_form);

// Signature of the glued coboundary: wall_correction of tcs_wall_triple.
// Recomputed from scratch for every input; comes out as signature(l_form)
// for every choice of N+-.
int tcs_sigma(const TcsLatticeData& d);

// nu of a product structure on a circle times a 6-manifold: always 0.
Residue48 nu_su3_product();

// nu of a product structure on a 3-manifold times a 4-manifold:
// 24 * chi2(Y) * sigma(X)/16 mod 48, with Rokhlin's 16 | sigma(X).
struct ProductNuInput {
    int chi2_y = 0;  // residue mod 2
    Int sigma_x;
};
Residue48 nu_su2_product(const ProductNuInput& p);

// nu of the twisted connected sum structure, assembled from
// chi(W) = 0, sigma(W) = tcs_sigma, and the two product boundary pieces.
// Both boundary-orientation bookkeepings are computed and compared.
Residue48 tcs_nu(const TcsLatticeData& d);

// Intermediate numbers for reporting.
struct TcsReport {
    int dim_v = 0, dim_a = 0, dim_b = 0, dim_c = 0, dim_k = 0;
    int sigma_w = 0;
    int sigma_l = 0;
    Residue48 nu_value;
};
TcsReport tcs_report(const TcsLatticeData& d);

}  // namespace g2inv

#pragma once

#include <optional>
#include <vector>

#include "g2inv/exactalg.hpp"

namespace g2inv {

// Finitely generated abelian group in invariant-factor normal form:
// Z^free_rank + Z/n1 + ... + Z/nt with 2 <= n1 | n2 | ... | nt.
struct FgAbelianGroup {
    int free_rank = 0;
    std::vector<Int> torsion_orders;

    int torsion_count() const { return static_cast<int>(torsion_orders.size()); }
    Int torsion_size() const;      // product of the orders (1 if none)
    Int torsion_exponent() const;  // last invariant factor (1 if none)
    bool has_2_torsion() const;
    bool operator==(const FgAbelianGroup& o) const = default;
};

// Element coordinates against the normalized generator set. Torsion
// components are kept reduced to [0, n_i).
struct GroupElement {
    std::vector<Int> free_part;
    std::vector<Int> torsion_part;

    bool operator==(const GroupElement& o) const = default;
};

GroupElement make_element(const FgAbelianGroup& h, std::vector<Int> free_part,
                          std::vector<Int> torsion_part);
GroupElement zero_element(const FgAbelianGroup& h);
GroupElement add(const FgAbelianGroup& h, const GroupElement& x, const GroupElement& y);
GroupElement sub(const FgAbelianGroup& h, const GroupElement& x, const GroupElement& y);
GroupElement scale(const FgAbelianGroup& h, const Int& m, const GroupElement& x);
bool is_torsion(const GroupElement& x);

// Cokernel of a relations matrix (rows = generators), in invariant-factor
// form, together with the change of basis for converting user coordinates.
struct NormalizedPresentation {
    FgAbelianGroup group;
    IntMatrix u;                  // from smith_normal_form of the relations
    std::vector<int> free_rows;   // rows of u*x giving free coordinates
    std::vector<int> torsion_rows;

    GroupElement convert(const std::vector<Int>& user_coords) const;
};
NormalizedPresentation normalize(const IntMatrix& relations);

// Greatest integer dividing p modulo torsion; 0 when p is torsion.
Int d_pi(const FgAbelianGroup& h, const GroupElement& p);

// Max{ s : m*p lies in (m^2 s)*H for some m >= 1 }, with the torsion
// convention d_o = 0 when p is torsion. The witness satisfies
// m*p = (m^2 * s) * y exactly.
struct DOWitness {
    Int s;  // = d_o
    Int m;
    GroupElement y;
};
DOWitness d_o_with_witness(const FgAbelianGroup& h, const GroupElement& p);
Int d_o(const FgAbelianGroup& h, const GroupElement& p);

// Membership in S_{d_pi} = { k : p - d_pi * k is torsion }.
bool s_dpi_contains(const FgAbelianGroup& h, const GroupElement& p, const GroupElement& k);

// Q/Z-valued torsion linking form, stored by a symmetric rational Gram
// matrix on the torsion generators with entries canonical in [0, 1).
struct LinkingForm {
    RatMatrix gram;
    bool nondegenerate = false;  // optional flag, not enforced
};

// Validates symmetry and n_i * b(e_i, e_j) = 0 mod 1, and reduces entries.
LinkingForm make_linking_form(const FgAbelianGroup& h, RatMatrix gram, bool nondegenerate = false);

// b(x, y) through the torsion parts, reduced to [0, 1).
Rat linking_eval(const LinkingForm& b, const GroupElement& x, const GroupElement& y);

// Rational lift of b(x, y): plain bilinear expansion of the stored Gram
// entries, no mod-1 reduction. Used where formulas need explicit lifts.
Rat linking_lift(const LinkingForm& b, const GroupElement& x, const GroupElement& y);

// Endomorphism of H in block form: free part maps by free_block, torsion
// part by mixing (free generators into torsion) and torsion_block.
struct GroupAutomorphism {
    IntMatrix free_block;     // b x b
    IntMatrix mixing;         // t x b
    IntMatrix torsion_block;  // t x t
};

GroupElement apply(const FgAbelianGroup& h, const GroupAutomorphism& f, const GroupElement& x);

// Well-defined on the torsion orders and bijective (checked via the Smith
// normal form of the stacked relation matrix).
bool is_automorphism(const FgAbelianGroup& h, const GroupAutomorphism& f);

// True iff f preserves both p and the linking form. Throws NotAutomorphism
// if f is not a valid automorphism of h.
bool pullback_check(const FgAbelianGroup& h, const GroupAutomorphism& f, const LinkingForm& b,
                    const GroupElement& p);

}  // namespace g2inv

#include "g2inv/charnum.hpp"

#include "g2inv/exactalg.hpp"

namespace g2inv {

ClosedSpin8Data ClosedSpin8Input::resolve() const {
    // Unknown order: p1_sq, p2, sigma, ahat. The genera relations are
    //   -p1_sq + 7 p2 - 45 sigma            = 0
    //   7 p1_sq - 4 p2          - 5760 ahat = 0
    const std::array<std::optional<Int>, 4> known = {p1_sq, p2, sigma, ahat};
    const Rat coeff[2][4] = {{-1, 7, -45, 0}, {7, -4, 0, -5760}};

    std::vector<int> unknown;
    for (int i = 0; i < 4; ++i)
        if (!known[i]) unknown.push_back(i);
    if (unknown.size() > 2)
        fail("Underdetermined", "need at least two of p1_sq, p2, sigma, ahat");

    RatMatrix a(2, static_cast<int>(unknown.size()));
    std::vector<Rat> rhs(2);
    for (int e = 0; e < 2; ++e) {
        for (size_t j = 0; j < unknown.size(); ++j) a(e, static_cast<int>(j)) = coeff[e][unknown[j]];
        for (int i = 0; i < 4; ++i)
            if (known[i]) rhs[e] -= coeff[e][i] * Rat(*known[i]);
    }
    RatMatrix rhs_m(2, 1);
    rhs_m(0, 0) = rhs[0], rhs_m(1, 0) = rhs[1];

    RowReduced rr;
    {
        RatMatrix aug(2, a.cols + 1);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
            aug(i, a.cols) = rhs_m(i, 0);
        }
        rr = row_reduce(std::move(aug));
    }
    for (int pc : rr.pivot_cols)
        if (pc == a.cols) fail("Inconsistent", "characteristic numbers violate the genera relations");
    if (rr.rank < a.cols)
        fail("Underdetermined", "characteristic numbers do not pin the remaining values");

    std::array<Rat, 4> vals;
    for (int i = 0; i < 4; ++i)
        if (known[i]) vals[i] = Rat(*known[i]);
    for (int i = 0; i < rr.rank; ++i) vals[unknown[rr.pivot_cols[i]]] = rr.m(i, a.cols);

    for (const Rat& v : vals)
        if (!is_integer(v))
            fail("NotIntegral", "resolved characteristic numbers are not integers");

    ClosedSpin8Data out{vals[0].get_num(), vals[1].get_num(), euler, vals[2].get_num(),
                        vals[3].get_num()};
    if (mod_nonneg(out.sigma - out.euler, 2) != 0)
        fail("ParityViolation", "sigma and chi must agree mod 2");
    return out;
}

std::pair<Int, Int> e_plus_minus(const ClosedSpin8Data& x) {
    Int base = x.p1_sq - 4 * x.p2;
    Int plus_num = base + 8 * x.euler;
    Int minus_num = base - 8 * x.euler;
    if (plus_num % 16 != 0 || minus_num % 16 != 0)
        fail("NotIntegral", "16 must divide p1_sq - 4 p2 +- 8 e");
    Int ep = plus_num / 16, em = minus_num / 16;

    // Same numbers through the ahat route; a mismatch means inconsistent input.
    Int ep2_twice = 48 * x.ahat + (x.euler - 3 * x.sigma);
    Int em2_twice = 48 * x.ahat + (-x.euler - 3 * x.sigma);
    if (2 * ep != ep2_twice || 2 * em != em2_twice)
        fail("Inconsistent", "the two routes to e+- disagree");
    return {ep, em};
}

bool check_spin7_closed(const ClosedSpin8Data& x) {
    return 48 * x.ahat + x.euler - 3 * x.sigma == 0;
}

CoboundaryData make_coboundary(Int chi, Int sigma, Int n_plus, bool is_spin7) {
    if (is_spin7 && n_plus != 0)
        fail("NotSpin7Coboundary", "a Spin(7) structure forces n+ = 0");
    return CoboundaryData{std::move(chi), std::move(sigma), std::move(n_plus), is_spin7};
}

CoboundaryData reverse_coboundary(const CoboundaryData& w) {
    // n-(W) = n+(W) - chi(W), and reversal swaps the spinor bundles.
    return CoboundaryData{w.chi, -w.sigma, w.chi - w.n_plus, w.is_spin7 && w.chi == 0};
}

Int nubar(const CoboundaryData& w) { return -2 * w.n_plus + w.chi - 3 * w.sigma; }

Residue48 nu(const CoboundaryData& w) { return Residue48::of(nubar(w)); }

int SemiCharData::chi_q() const {
    Int s = betti_q[0] + betti_q[1] + betti_q[2] + betti_q[3];
    return static_cast<int>(mod_nonneg(s, 2).get_si());
}

int SemiCharData::chi_2() const {
    if (!betti_2) fail("MissingData", "mod-2 Betti numbers were not supplied");
    Int s = (*betti_2)[0] + (*betti_2)[1];
    return static_cast<int>(mod_nonneg(s, 2).get_si());
}

bool parity_check(const Residue48& nu_val, const SemiCharData& m) {
    return nu_val.parity() == m.chi_q();
}

bool sign_chi_semichar(const CoboundaryData& w, const SemiCharData& boundary) {
    return mod_nonneg(w.sigma + w.chi, 2).get_si() == boundary.chi_q();
}

Int d_from_bordism(const Int& n_plus, const Int& e_plus_closed) { return n_plus - e_plus_closed; }

Residue48 nu_shift(const Residue48& nu_val, const Int& d) {
    return Residue48::of(nu_val.v + 2 * d);
}

Int d_from_mapping_torus(const Int& p2f) {
    if (p2f % 224 != 0)
        fail("NotRealizable", "p^2 of a mapping torus lies in 8*28*Z");
    return 3 * p2f / 28;
}

Int connected_sum_e_plus(const Int& e1, const Int& e2) { return e1 + e2 - 1; }

std::pair<Rat, Rat> dim4_e_pm(const Int& chi, const Int& sigma) {
    if (sigma % 16 != 0)
        fail("RokhlinViolation", "a closed spin 4-manifold has 16 | sigma");
    Rat half_chi = make_rat(chi, 2);
    Rat s34 = make_rat(3 * sigma, 4);
    return {s34 + half_chi, s34 - half_chi};
}

}  // namespace g2inv

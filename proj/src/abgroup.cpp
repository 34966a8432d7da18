#include "g2inv/abgroup.hpp"

#include <algorithm>

namespace g2inv {

Int FgAbelianGroup::torsion_size() const {
    Int s = 1;
    for (const Int& n : torsion_orders) s *= n;
    return s;
}

Int FgAbelianGroup::torsion_exponent() const {
    return torsion_orders.empty() ? Int(1) : torsion_orders.back();
}

bool FgAbelianGroup::has_2_torsion() const {
    for (const Int& n : torsion_orders)
        if (n % 2 == 0) return true;
    return false;
}

GroupElement make_element(const FgAbelianGroup& h, std::vector<Int> free_part,
                          std::vector<Int> torsion_part) {
    if (static_cast<int>(free_part.size()) != h.free_rank ||
        static_cast<int>(torsion_part.size()) != h.torsion_count())
        fail("DimensionMismatch", "element coordinates do not match the group");
    for (int i = 0; i < h.torsion_count(); ++i)
        torsion_part[i] = mod_nonneg(torsion_part[i], h.torsion_orders[i]);
    return GroupElement{std::move(free_part), std::move(torsion_part)};
}

GroupElement zero_element(const FgAbelianGroup& h) {
    return GroupElement{std::vector<Int>(h.free_rank), std::vector<Int>(h.torsion_count())};
}

GroupElement add(const FgAbelianGroup& h, const GroupElement& x, const GroupElement& y) {
    GroupElement r = x;
    for (int i = 0; i < h.free_rank; ++i) r.free_part[i] += y.free_part[i];
    for (int i = 0; i < h.torsion_count(); ++i)
        r.torsion_part[i] = mod_nonneg(r.torsion_part[i] + y.torsion_part[i], h.torsion_orders[i]);
    return r;
}

GroupElement sub(const FgAbelianGroup& h, const GroupElement& x, const GroupElement& y) {
    GroupElement r = x;
    for (int i = 0; i < h.free_rank; ++i) r.free_part[i] -= y.free_part[i];
    for (int i = 0; i < h.torsion_count(); ++i)
        r.torsion_part[i] = mod_nonneg(r.torsion_part[i] - y.torsion_part[i], h.torsion_orders[i]);
    return r;
}

GroupElement scale(const FgAbelianGroup& h, const Int& m, const GroupElement& x) {
    GroupElement r = x;
    for (int i = 0; i < h.free_rank; ++i) r.free_part[i] *= m;
    for (int i = 0; i < h.torsion_count(); ++i)
        r.torsion_part[i] = mod_nonneg(r.torsion_part[i] * m, h.torsion_orders[i]);
    return r;
}

bool is_torsion(const GroupElement& x) {
    for (const Int& v : x.free_part)
        if (v != 0) return false;
    return true;
}

GroupElement NormalizedPresentation::convert(const std::vector<Int>& user_coords) const {
    if (static_cast<int>(user_coords.size()) != u.cols)
        fail("DimensionMismatch", "user coordinates do not match the presentation");
    std::vector<Int> joint(u.rows);
    for (int i = 0; i < u.rows; ++i)
        for (int j = 0; j < u.cols; ++j)
            if (u(i, j) != 0) joint[i] += u(i, j) * user_coords[j];
    std::vector<Int> fp, tp;
    for (int r : free_rows) fp.push_back(joint[r]);
    for (int r : torsion_rows) tp.push_back(joint[r]);
    return make_element(group, std::move(fp), std::move(tp));
}

NormalizedPresentation normalize(const IntMatrix& relations) {
    SmithResult snf = smith_normal_form(relations);
    const int g = relations.rows;
    const int n = std::min(relations.rows, relations.cols);

    NormalizedPresentation out;
    out.u = snf.u;
    for (int i = 0; i < g; ++i) {
        Int order = (i < n) ? snf.d(i, i) : Int(0);
        if (order == 0) {
            out.free_rows.push_back(i);
        } else if (order >= 2) {
            out.torsion_rows.push_back(i);
            out.group.torsion_orders.push_back(order);
        }
        // order 1 rows present trivial summands and are dropped
    }
    out.group.free_rank = static_cast<int>(out.free_rows.size());
    return out;
}

Int d_pi(const FgAbelianGroup& h, const GroupElement& p) {
    Int g = 0;
    for (int i = 0; i < h.free_rank; ++i) g = gcd(g, p.free_part[i]);
    return g;
}

namespace {

std::vector<Int> divisors_ascending(const Int& n) {
    std::vector<Int> lo, hi;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            lo.push_back(i);
            if (i * i != n) hi.push_back(n / i);
        }
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

// Solve a*y = r (mod n); requires gcd(a, n) | r.
Int solve_cyclic(const Int& a, const Int& r, const Int& n) {
    Int g = gcd(mod_nonneg(a, n), n);
    if (g == 0) return 0;  // a = 0 mod n, then r must be 0 as well
    Int n2 = n / g;
    if (n2 == 1) return 0;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), Int(mod_nonneg(a / g, n2)).get_mpz_t(), n2.get_mpz_t()) == 0)
        fail("Internal", "modular inverse missing in solve_cyclic");
    return mod_nonneg((r / g) * inv, n2);
}

}  // namespace

DOWitness d_o_with_witness(const FgAbelianGroup& h, const GroupElement& p) {
    if (is_torsion(p)) {
        // The paper's case split: d_pi = d_o = 0. A witness still exists
        // because (exponent of Tor) * p = 0.
        return DOWitness{0, h.torsion_exponent(), zero_element(h)};
    }
    const Int dpi = d_pi(h, p);
    std::vector<Int> s_divs = divisors_ascending(dpi);

    // s over divisors of d_pi descending; the free-part constraint m*s | d_pi
    // bounds m to divisors of d_pi/s. First hit is the maximum.
    for (auto it = s_divs.rbegin(); it != s_divs.rend(); ++it) {
        const Int& s = *it;
        for (const Int& m : divisors_ascending(dpi / s)) {
            Int ms2 = m * m * s;
            bool ok = true;
            for (int i = 0; i < h.torsion_count() && ok; ++i) {
                const Int& n = h.torsion_orders[i];
                Int rhs = mod_nonneg(m * p.torsion_part[i], n);
                if (rhs % gcd(ms2, n) != 0) ok = false;
            }
            if (!ok) continue;

            std::vector<Int> yf(h.free_rank), yt(h.torsion_count());
            for (int i = 0; i < h.free_rank; ++i) yf[i] = p.free_part[i] / (m * s);
            for (int i = 0; i < h.torsion_count(); ++i) {
                const Int& n = h.torsion_orders[i];
                yt[i] = solve_cyclic(ms2, mod_nonneg(m * p.torsion_part[i], n), n);
            }
            return DOWitness{s, m, make_element(h, std::move(yf), std::move(yt))};
        }
    }
    fail("Internal", "d_o search found no witness (s = 1, m = 1 always works)");
}

Int d_o(const FgAbelianGroup& h, const GroupElement& p) { return d_o_with_witness(h, p).s; }

bool s_dpi_contains(const FgAbelianGroup& h, const GroupElement& p, const GroupElement& k) {
    const Int dpi = d_pi(h, p);
    for (int i = 0; i < h.free_rank; ++i)
        if (p.free_part[i] != dpi * k.free_part[i]) return false;
    return true;
}

LinkingForm make_linking_form(const FgAbelianGroup& h, RatMatrix gram, bool nondegenerate) {
    const int t = h.torsion_count();
    if (gram.rows != t || gram.cols != t)
        fail("DimensionMismatch", "linking form Gram matrix must match the torsion generators");
    if (!is_symmetric(gram)) fail("NonSymmetric", "linking form must be symmetric");
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            gram(i, j) = rat_mod(gram(i, j), Rat(1));
            if (!is_integer(Rat(h.torsion_orders[i]) * gram(i, j)))
                fail("IllDefinedLinkingForm",
                     "n_i * b(e_i, e_j) must vanish mod 1 for a form on Z/n_i");
        }
    return LinkingForm{std::move(gram), nondegenerate};
}

Rat linking_lift(const LinkingForm& b, const GroupElement& x, const GroupElement& y) {
    const int t = b.gram.rows;
    if (static_cast<int>(x.torsion_part.size()) != t || static_cast<int>(y.torsion_part.size()) != t)
        fail("DimensionMismatch", "linking form arguments");
    Rat v = 0;
    for (int i = 0; i < t; ++i) {
        if (x.torsion_part[i] == 0) continue;
        for (int j = 0; j < t; ++j)
            if (y.torsion_part[j] != 0 && b.gram(i, j) != 0)
                v += Rat(x.torsion_part[i] * y.torsion_part[j]) * b.gram(i, j);
    }
    return v;
}

Rat linking_eval(const LinkingForm& b, const GroupElement& x, const GroupElement& y) {
    return rat_mod(linking_lift(b, x, y), Rat(1));
}

GroupElement apply(const FgAbelianGroup& h, const GroupAutomorphism& f, const GroupElement& x) {
    const int bn = h.free_rank, tn = h.torsion_count();
    std::vector<Int> fp(bn), tp(tn);
    for (int i = 0; i < bn; ++i)
        for (int j = 0; j < bn; ++j)
            if (f.free_block(i, j) != 0) fp[i] += f.free_block(i, j) * x.free_part[j];
    for (int i = 0; i < tn; ++i) {
        Int v = 0;
        for (int j = 0; j < bn; ++j)
            if (f.mixing(i, j) != 0) v += f.mixing(i, j) * x.free_part[j];
        for (int j = 0; j < tn; ++j)
            if (f.torsion_block(i, j) != 0) v += f.torsion_block(i, j) * x.torsion_part[j];
        tp[i] = mod_nonneg(v, h.torsion_orders[i]);
    }
    return GroupElement{std::move(fp), std::move(tp)};
}

bool is_automorphism(const FgAbelianGroup& h, const GroupAutomorphism& f) {
    const int bn = h.free_rank, tn = h.torsion_count();
    if (f.free_block.rows != bn || f.free_block.cols != bn) return false;
    if (f.mixing.rows != tn || f.mixing.cols != bn) return false;
    if (f.torsion_block.rows != tn || f.torsion_block.cols != tn) return false;

    // Well-defined on the torsion orders: n_i | n_j * T(i, j).
    for (int i = 0; i < tn; ++i)
        for (int j = 0; j < tn; ++j)
            if ((h.torsion_orders[j] * f.torsion_block(i, j)) % h.torsion_orders[i] != 0)
                return false;

    // Surjective (hence bijective on a finitely generated group): the stacked
    // matrix [ F | relations ] must have trivial cokernel.
    const int n = bn + tn;
    IntMatrix stacked(n, 2 * n);
    for (int i = 0; i < bn; ++i)
        for (int j = 0; j < bn; ++j) stacked(i, j) = f.free_block(i, j);
    for (int i = 0; i < tn; ++i) {
        for (int j = 0; j < bn; ++j) stacked(bn + i, j) = f.mixing(i, j);
        for (int j = 0; j < tn; ++j) stacked(bn + i, bn + j) = f.torsion_block(i, j);
        stacked(bn + i, n + bn + i) = h.torsion_orders[i];
    }
    SmithResult snf = smith_normal_form(stacked);
    for (int i = 0; i < n; ++i)
        if (snf.d(i, i) != 1) return false;
    return true;
}

bool pullback_check(const FgAbelianGroup& h, const GroupAutomorphism& f, const LinkingForm& b,
                    const GroupElement& p) {
    if (!is_automorphism(h, f)) fail("NotAutomorphism", "pullback_check needs a valid automorphism");
    if (!(apply(h, f, p) == p)) return false;

    const int tn = h.torsion_count();
    for (int i = 0; i < tn; ++i) {
        GroupElement ei = zero_element(h);
        ei.torsion_part[i] = 1;
        GroupElement fei = apply(h, f, ei);
        for (int j = i; j < tn; ++j) {
            GroupElement ej = zero_element(h);
            ej.torsion_part[j] = 1;
            if (linking_eval(b, fei, apply(h, f, ej)) != rat_mod(b.gram(i, j), Rat(1)))
                return false;
        }
    }
    return true;
}

}  // namespace g2inv

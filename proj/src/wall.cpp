#include "g2inv/wall.hpp"

namespace g2inv {

namespace {

bool is_skew(const RatMatrix& f) {
    if (f.rows != f.cols) return false;
    for (int i = 0; i < f.rows; ++i)
        for (int j = i; j < f.cols; ++j)
            if (f(i, j) != -f(j, i)) return false;
    return true;
}

bool is_zero(const RatMatrix& m) {
    for (const Rat& v : m.a)
        if (v != 0) return false;
    return true;
}

}  // namespace

WallTriple make_wall_triple(RatMatrix form, Subspace a, Subspace b, Subspace c) {
    if (!is_skew(form)) fail("NotSkew", "the ambient pairing must be skew-symmetric");
    const int n = form.rows;
    if (n % 2 != 0 || rat_rank(form) != n)
        fail("DegenerateForm", "the ambient pairing must be nondegenerate (even rank)");
    for (const Subspace* s : {&a, &b, &c}) {
        if (s->ambient_dim() != n) fail("DimensionMismatch", "subspace not in the form's space");
        if (s->dim() * 2 != n || !is_zero(restrict_form(form, *s)))
            fail("NotLagrangian", "each of A, B, C must be Lagrangian");
    }
    return WallTriple{std::move(form), std::move(a), std::move(b), std::move(c)};
}

WallResult wall_correction_full(const WallTriple& t) {
    const int n = t.form.rows;

    Subspace bc = span_sum(t.b, t.c);
    Subspace top = span_intersect(t.a, bc);
    Subspace bottom = span_sum(span_intersect(t.a, t.b), span_intersect(t.a, t.c));
    RatMatrix reps = quotient_basis(top, bottom);  // n x k
    const int k = reps.cols;

    // Decompose every representative as b' + c' in one elimination pass.
    RatMatrix bc_cols(n, t.b.dim() + t.c.dim());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < t.b.dim(); ++j) bc_cols(i, j) = t.b.basis()(i, j);
        for (int j = 0; j < t.c.dim(); ++j) bc_cols(i, t.b.dim() + j) = t.c.basis()(i, j);
    }
    auto sol = rat_solve_many(bc_cols, reps);
    if (!sol) fail("Internal", "representatives of K must decompose over B + C");
    RatMatrix bpart(t.b.dim(), k);
    for (int i = 0; i < t.b.dim(); ++i)
        for (int j = 0; j < k; ++j) bpart(i, j) = (*sol)(i, j);
    RatMatrix bprime = rat_mul(t.b.basis(), bpart);  // n x k

    WallResult res;
    res.dim_k = k;
    RatMatrix f_bprime = rat_mul(t.form, bprime);
    RatMatrix q = rat_mul(rat_transpose(reps), f_bprime);
    for (Rat& v : q.a) v = -v;
    res.q = q;

    // Wall's theorem makes q symmetric and independent of the chosen
    // decompositions; verify both before returning. Alternative
    // decompositions differ by B n C, so it suffices that the
    // representatives pair to zero with B applied to ker[B | C].
    if (!is_symmetric(res.q)) fail("Internal", "Wall form failed the symmetry check");
    RatMatrix ker = rat_kernel(bc_cols);
    if (ker.cols > 0) {
        RatMatrix ker_b(t.b.dim(), ker.cols);
        for (int i = 0; i < t.b.dim(); ++i)
            for (int j = 0; j < ker.cols; ++j) ker_b(i, j) = ker(i, j);
        RatMatrix shifts = rat_mul(t.form, rat_mul(t.b.basis(), ker_b));
        if (!is_zero(rat_mul(rat_transpose(reps), shifts)))
            fail("Internal", "Wall form depends on the decomposition");
    }

    res.signature = symmetric_signature(res.q);
    if (res.signature.n_zero != 0)
        fail("DegenerateForm", "the Wall form is singular on K");
    return res;
}

int wall_correction(const WallTriple& t) { return wall_correction_full(t).signature.value(); }

// ---------------------------------------------------------------------------
// The twisted connected sum instance
// ---------------------------------------------------------------------------

TcsLatticeData make_tcs_data(RatMatrix l_form, Subspace n_plus, Subspace n_minus) {
    if (!is_symmetric(l_form)) fail("NonSymmetric", "the lattice form must be symmetric");
    const int m = l_form.rows;
    if (rat_rank(l_form) != m) fail("DegenerateForm", "the lattice form must be nondegenerate");
    if (n_plus.ambient_dim() != m || n_minus.ambient_dim() != m)
        fail("DimensionMismatch", "N+- must be subspaces of the lattice");
    return TcsLatticeData{std::move(l_form), std::move(n_plus), std::move(n_minus)};
}

namespace {

// Orthogonal complement with respect to a nondegenerate symmetric form.
Subspace ortho_complement(const RatMatrix& form, const Subspace& s) {
    const int m = form.rows;
    if (s.dim() == 0) return Subspace::full(m);
    return Subspace(m, rat_kernel(rat_mul(rat_transpose(s.basis()), form)));
}

// Block order of the boundary components.
enum Block { B1P = 0, B1M, B34P, B34M, B14P, B14M, B0P, B0M };

}  // namespace

RatMatrix tcs_intersection_form(const RatMatrix& l_form) {
    const int m = l_form.rows;
    RatMatrix f(8 * m, 8 * m);
    // (block pair, sign) entries of the pairing; skewness fills the mirror.
    const int plus_pairs[4][2] = {{B1P, B1M}, {B34M, B34P}, {B14P, B14M}, {B0M, B0P}};
    for (auto [r, c] : plus_pairs)
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                f(r * m + i, c * m + j) = l_form(i, j);
                f(c * m + i, r * m + j) = -l_form(i, j);
            }
    return f;
}

WallTriple tcs_wall_triple(const TcsLatticeData& d) {
    const int m = d.l_form.rows;
    const int n = 8 * m;
    Subspace t_plus = ortho_complement(d.l_form, d.n_plus);
    Subspace t_minus = ortho_complement(d.l_form, d.n_minus);

    auto column = [&](std::initializer_list<std::pair<int, int>> placements,
                      const RatMatrix& src, int src_col, RatMatrix& dst, int dst_col) {
        for (auto [block, sign] : placements)
            for (int i = 0; i < m; ++i)
                if (src(i, src_col) != 0) dst(block * m + i, dst_col) = Rat(sign) * src(i, src_col);
    };
    RatMatrix id = RatMatrix::identity(m);

    // A: h_{0+-} = h_{1/4 +-} and h_{3/4 +-} = h_{1 +-}.
    RatMatrix a_cols(n, 4 * m);
    for (int i = 0; i < m; ++i) {
        column({{B1P, 1}, {B34P, 1}}, id, i, a_cols, i);
        column({{B1M, 1}, {B34M, 1}}, id, i, a_cols, m + i);
        column({{B14P, 1}, {B0P, 1}}, id, i, a_cols, 2 * m + i);
        column({{B14M, 1}, {B0M, 1}}, id, i, a_cols, 3 * m + i);
    }

    // B: h_{0+}, h_{1+} in N+; h_{0-}, h_{1-} in T+; h_{1/4 +-} = h_{3/4 +-}.
    const int np = d.n_plus.dim(), tp = t_plus.dim();
    RatMatrix b_cols(n, 2 * (np + tp) + 2 * m);
    {
        int col = 0;
        for (int j = 0; j < np; ++j) column({{B1P, 1}}, d.n_plus.basis(), j, b_cols, col++);
        for (int j = 0; j < tp; ++j) column({{B1M, 1}}, t_plus.basis(), j, b_cols, col++);
        for (int j = 0; j < np; ++j) column({{B0P, 1}}, d.n_plus.basis(), j, b_cols, col++);
        for (int j = 0; j < tp; ++j) column({{B0M, 1}}, t_plus.basis(), j, b_cols, col++);
        for (int i = 0; i < m; ++i) column({{B34P, 1}, {B14P, 1}}, id, i, b_cols, col++);
        for (int i = 0; i < m; ++i) column({{B34M, 1}, {B14M, 1}}, id, i, b_cols, col++);
    }

    // C: h_{0+}, h_{1-} in N-; h_{0-}, h_{1+} in T-; the twisted matching
    // h_{1/4 +} = h_{3/4 -} and h_{1/4 -} = -h_{3/4 +}.
    const int nm = d.n_minus.dim(), tm = t_minus.dim();
    RatMatrix c_cols(n, 2 * (nm + tm) + 2 * m);
    {
        int col = 0;
        for (int j = 0; j < tm; ++j) column({{B1P, 1}}, t_minus.basis(), j, c_cols, col++);
        for (int j = 0; j < nm; ++j) column({{B1M, 1}}, d.n_minus.basis(), j, c_cols, col++);
        for (int j = 0; j < nm; ++j) column({{B0P, 1}}, d.n_minus.basis(), j, c_cols, col++);
        for (int j = 0; j < tm; ++j) column({{B0M, 1}}, t_minus.basis(), j, c_cols, col++);
        for (int i = 0; i < m; ++i) column({{B34P, 1}, {B14M, -1}}, id, i, c_cols, col++);
        for (int i = 0; i < m; ++i) column({{B34M, 1}, {B14P, 1}}, id, i, c_cols, col++);
    }

    return make_wall_triple(tcs_intersection_form(d.l_form), Subspace(n, a_cols),
                            Subspace(n, b_cols), Subspace(n, c_cols));
}

int tcs_sigma(const TcsLatticeData& d) { return wall_correction(tcs_wall_triple(d)); }

Residue48 nu_su3_product() { return Residue48{0}; }

Residue48 nu_su2_product(const ProductNuInput& p) {
    if (p.sigma_x % 16 != 0)
        fail("RokhlinViolation", "a closed spin 4-manifold has 16 | sigma");
    return Residue48::of(Int(24 * (p.chi2_y & 1)) * (p.sigma_x / 16));
}

namespace {

Residue48 tcs_nu_from(int sigma_w, int sigma_l) {
    // chi(W) = 0 by the inclusion-exclusion over the circle factors.
    const Int main_term = Int(0) - 3 * Int(sigma_w);
    Residue48 keyhole = nu_su2_product(ProductNuInput{1, Int(sigma_l)});
    Residue48 untwisted = nu_su3_product();

    // Boundary bookkeeping both ways round: the product components enter
    // with either orientation; the two assemblies must agree mod 48.
    Residue48 path1 = Residue48::of(main_term + untwisted.v + keyhole.v);
    Residue48 path2 = Residue48::of(main_term + untwisted.v - keyhole.v);
    if (!(path1 == path2)) fail("Internal", "orientation bookkeepings disagree");
    return path1;
}

}  // namespace

Residue48 tcs_nu(const TcsLatticeData& d) {
    return tcs_nu_from(tcs_sigma(d), symmetric_signature(d.l_form).value());
}

TcsReport tcs_report(const TcsLatticeData& d) {
    TcsReport r;
    WallTriple t = tcs_wall_triple(d);
    r.dim_v = t.form.rows;
    r.dim_a = t.a.dim();
    r.dim_b = t.b.dim();
    r.dim_c = t.c.dim();
    WallResult w = wall_correction_full(t);
    r.dim_k = w.dim_k;
    r.sigma_w = w.signature.value();
    r.sigma_l = symmetric_signature(d.l_form).value();
    r.nu_value = tcs_nu_from(r.sigma_w, r.sigma_l);
    return r;
}

}  // namespace g2inv

#include "g2inv/exactalg.hpp"

#include <algorithm>

namespace g2inv {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) fail("DimensionMismatch", "int_mul shape");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Int& xik = x(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y(k, j) != 0) r(i, j) += xik * y(k, j);
        }
    return r;
}

IntMatrix int_transpose(const IntMatrix& x) {
    IntMatrix r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols != y.rows) fail("DimensionMismatch", "rat_mul shape");
    RatMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rat& xik = x(i, k);
            if (xik == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y(k, j) != 0) r(i, j) += xik * y(k, j);
        }
    return r;
}

RatMatrix rat_transpose(const RatMatrix& x) {
    RatMatrix r(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
    return r;
}

RatMatrix to_rat(const IntMatrix& x) {
    RatMatrix r(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = Rat(x.a[i]);
    return r;
}

bool is_symmetric(const RatMatrix& x) {
    if (x.rows != x.cols) return false;
    for (int i = 0; i < x.rows; ++i)
        for (int j = i + 1; j < x.cols; ++j)
            if (x(i, j) != x(j, i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------------

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m(r, i), m(r, j));
}

void add_row(IntMatrix& m, int dst, int src, const Int& f) {
    for (int c = 0; c < m.cols; ++c)
        if (m(src, c) != 0) m(dst, c) += f * m(src, c);
}

void add_col(IntMatrix& m, int dst, int src, const Int& f) {
    for (int r = 0; r < m.rows; ++r)
        if (m(r, src) != 0) m(r, dst) += f * m(r, src);
}

void negate_row(IntMatrix& m, int i) {
    for (int c = 0; c < m.cols; ++c) m(i, c) = -m(i, c);
}

// Position of the entry of least nonzero absolute value in the submatrix
// starting at (t, t); false if that submatrix is zero.
bool min_entry(const IntMatrix& d, int t, int& bi, int& bj) {
    bool found = false;
    Int best;
    for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
            if (d(i, j) == 0) continue;
            Int v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                bi = i;
                bj = j;
            }
        }
    return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const int n = std::min(m.rows, m.cols);
    SmithResult res{IntMatrix::identity(m.rows), m, IntMatrix::identity(m.cols)};
    IntMatrix& u = res.u;
    IntMatrix& d = res.d;
    IntMatrix& v = res.v;

    for (int t = 0; t < n; ++t) {
        int pi, pj;
        if (!min_entry(d, t, pi, pj)) break;  // remaining block is zero

        for (;;) {
            swap_rows(d, t, pi), swap_rows(u, t, pi);
            swap_cols(d, t, pj), swap_cols(v, t, pj);

            // Clear column t below and row t to the right of the pivot.
            bool dirty = false;
            for (int r = t + 1; r < d.rows; ++r)
                if (d(r, t) != 0) {
                    Int q = d(r, t) / d(t, t);
                    if (q != 0) add_row(d, r, t, -q), add_row(u, r, t, -q);
                    if (d(r, t) != 0) dirty = true;
                }
            for (int c = t + 1; c < d.cols; ++c)
                if (d(t, c) != 0) {
                    Int q = d(t, c) / d(t, t);
                    if (q != 0) add_col(d, c, t, -q), add_col(v, c, t, -q);
                    if (d(t, c) != 0) dirty = true;
                }
            if (dirty) {
                min_entry(d, t, pi, pj);
                continue;
            }

            // Pivot is lone; force it to divide the remaining block so the
            // invariant factors form a chain.
            bool divides = true;
            for (int r = t + 1; r < d.rows && divides; ++r)
                for (int c = t + 1; c < d.cols; ++c)
                    if (d(r, c) % d(t, t) != 0) {
                        add_row(d, t, r, 1), add_row(u, t, r, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
            min_entry(d, t, pi, pj);
        }

        if (d(t, t) < 0) negate_row(d, t), negate_row(u, t);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Symmetric diagonalization
// ---------------------------------------------------------------------------

namespace {

// Pivot preference: largest |numerator * denominator|.
Int pivot_weight(const Rat& q) { return abs(q.get_num() * q.get_den()); }

void sym_add(RatMatrix& s, int dst, int src, const Rat& f) {
    for (int c = 0; c < s.cols; ++c)
        if (s(src, c) != 0) s(dst, c) += f * s(src, c);
    for (int r = 0; r < s.rows; ++r)
        if (s(r, src) != 0) s(r, dst) += f * s(r, src);
}

void sym_swap(RatMatrix& s, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < s.cols; ++c) std::swap(s(i, c), s(j, c));
    for (int r = 0; r < s.rows; ++r) std::swap(s(r, i), s(r, j));
}

}  // namespace

Signature symmetric_signature(const RatMatrix& s) {
    if (!is_symmetric(s)) fail("NonSymmetric", "symmetric_signature needs s == s^T");
    RatMatrix w = s;
    const int n = w.rows;
    Signature sig;

    for (int k = 0; k < n; ++k) {
        int piv = -1;
        Int best;
        for (int i = k; i < n; ++i)
            if (w(i, i) != 0) {
                Int wt = pivot_weight(w(i, i));
                if (piv < 0 || wt > best) piv = i, best = wt;
            }
        if (piv < 0) {
            // Zero diagonal: a single x -> x + y congruence move creates a
            // nonzero diagonal entry unless the block is entirely zero.
            int bi = -1, bj = -1;
            for (int i = k; i < n && bi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (w(i, j) != 0) {
                        bi = i, bj = j;
                        break;
                    }
            if (bi < 0) break;  // the rest of the form vanishes
            sym_add(w, bi, bj, Rat(1));
            piv = bi;
        }
        sym_swap(w, k, piv);

        const Rat p = w(k, k);
        if (p > 0)
            ++sig.n_plus;
        else
            ++sig.n_minus;
        for (int r = k + 1; r < n; ++r)
            if (w(r, k) != 0) sym_add(w, r, k, -w(r, k) / p);
    }
    sig.n_zero = n - sig.n_plus - sig.n_minus;
    return sig;
}

// ---------------------------------------------------------------------------
// Echelon forms, kernels, solving
// ---------------------------------------------------------------------------

namespace {

size_t rat_size(const Rat& q) {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace

RowReduced row_reduce(RatMatrix m) {
    RowReduced rr;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        // Smallest entry as pivot to limit coefficient growth.
        int piv = -1;
        size_t best = 0;
        for (int r = row; r < m.rows; ++r)
            if (m(r, col) != 0) {
                size_t sz = rat_size(m(r, col));
                if (piv < 0 || sz < best) piv = r, best = sz;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int c = 0; c < m.cols; ++c) std::swap(m(piv, c), m(row, c));

        const Rat p = m(row, col);
        if (p != 1)
            for (int c = col; c < m.cols; ++c)
                if (m(row, c) != 0) m(row, c) /= p;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || m(r, col) == 0) continue;
            const Rat f = m(r, col);
            m(r, col) = 0;
            for (int c = col + 1; c < m.cols; ++c)
                if (m(row, c) != 0) m(r, c) -= f * m(row, c);
        }
        rr.pivot_cols.push_back(col);
        ++row;
    }
    rr.rank = row;
    rr.m = std::move(m);
    return rr;
}

int rat_rank(const RatMatrix& m) { return row_reduce(m).rank; }

RatMatrix rat_kernel(const RatMatrix& m) {
    RowReduced rr = row_reduce(m);
    std::vector<int> free_cols;
    {
        size_t pi = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (pi < rr.pivot_cols.size() && rr.pivot_cols[pi] == c)
                ++pi;
            else
                free_cols.push_back(c);
        }
    }
    RatMatrix k(m.cols, static_cast<int>(free_cols.size()));
    for (size_t j = 0; j < free_cols.size(); ++j) {
        k(free_cols[j], static_cast<int>(j)) = 1;
        for (int i = 0; i < rr.rank; ++i)
            k(rr.pivot_cols[i], static_cast<int>(j)) = -rr.m(i, free_cols[j]);
    }
    return k;
}

std::optional<RatMatrix> rat_solve_many(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows != b.rows) fail("DimensionMismatch", "rat_solve_many shape");
    RatMatrix aug(a.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < b.cols; ++j) aug(i, a.cols + j) = b(i, j);
    }
    RowReduced rr = row_reduce(std::move(aug));
    for (int pc : rr.pivot_cols)
        if (pc >= a.cols) return std::nullopt;  // inconsistent system
    RatMatrix x(a.cols, b.cols);
    for (int i = 0; i < rr.rank; ++i)
        for (int j = 0; j < b.cols; ++j) x(rr.pivot_cols[i], j) = rr.m(i, a.cols + j);
    return x;
}

std::optional<std::vector<Rat>> rat_solve(const RatMatrix& a, const std::vector<Rat>& b) {
    RatMatrix bm(a.rows, 1);
    for (int i = 0; i < a.rows; ++i) bm(i, 0) = b[i];
    auto x = rat_solve_many(a, bm);
    if (!x) return std::nullopt;
    std::vector<Rat> out(a.cols);
    for (int i = 0; i < a.cols; ++i) out[i] = (*x)(i, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Subspaces
// ---------------------------------------------------------------------------

Subspace::Subspace(int ambient_dim, const RatMatrix& span) : ambient_dim_(ambient_dim) {
    if (span.cols > 0 && span.rows != ambient_dim)
        fail("DimensionMismatch", "subspace span has wrong ambient dimension");

    // Canonical form: reduced column echelon (unique for the span), then each
    // column scaled to coprime integers with positive leading entry.
    RowReduced rr = row_reduce(rat_transpose(span));
    basis_ = RatMatrix(ambient_dim, rr.rank);
    for (int i = 0; i < rr.rank; ++i)
        for (int c = 0; c < ambient_dim; ++c) basis_(c, i) = rr.m(i, c);

    for (int j = 0; j < basis_.cols; ++j) {
        Int den_lcm = 1, num_gcd = 0;
        for (int i = 0; i < ambient_dim; ++i)
            if (basis_(i, j) != 0) {
                den_lcm = lcm(den_lcm, basis_(i, j).get_den());
                num_gcd = gcd(num_gcd, basis_(i, j).get_num());
            }
        if (num_gcd == 0) continue;
        Rat scale = make_rat(den_lcm, num_gcd);  // positive: leading entry is 1
        for (int i = 0; i < ambient_dim; ++i) basis_(i, j) *= scale;
    }
}

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, RatMatrix(ambient_dim, 0)); }

Subspace Subspace::full(int ambient_dim) {
    return Subspace(ambient_dim, RatMatrix::identity(ambient_dim));
}

bool Subspace::contains(const std::vector<Rat>& v) const {
    if (static_cast<int>(v.size()) != ambient_dim_)
        fail("DimensionMismatch", "vector has wrong ambient dimension");
    RatMatrix aug(ambient_dim_, basis_.cols + 1);
    for (int i = 0; i < ambient_dim_; ++i) {
        for (int j = 0; j < basis_.cols; ++j) aug(i, j) = basis_(i, j);
        aug(i, basis_.cols) = v[i];
    }
    return rat_rank(aug) == basis_.cols;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_)
        fail("DimensionMismatch", "subspaces in different ambient spaces");
    if (other.dim() == 0) return true;
    RatMatrix aug(ambient_dim_, basis_.cols + other.basis_.cols);
    for (int i = 0; i < ambient_dim_; ++i) {
        for (int j = 0; j < basis_.cols; ++j) aug(i, j) = basis_(i, j);
        for (int j = 0; j < other.basis_.cols; ++j) aug(i, basis_.cols + j) = other.basis_(i, j);
    }
    return rat_rank(aug) == basis_.cols;
}

Subspace span_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        fail("DimensionMismatch", "span_sum in different ambient spaces");
    RatMatrix joined(a.ambient_dim(), a.dim() + b.dim());
    for (int i = 0; i < a.ambient_dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) joined(i, j) = a.basis()(i, j);
        for (int j = 0; j < b.dim(); ++j) joined(i, a.dim() + j) = b.basis()(i, j);
    }
    return Subspace(a.ambient_dim(), joined);
}

Subspace span_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        fail("DimensionMismatch", "span_intersect in different ambient spaces");
    const int n = a.ambient_dim();
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(n);

    // x with A xa = B xb, i.e. kernel of [A | -B]; the intersection is A
    // applied to the xa block.
    RatMatrix joined(n, a.dim() + b.dim());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < a.dim(); ++j) joined(i, j) = a.basis()(i, j);
        for (int j = 0; j < b.dim(); ++j) joined(i, a.dim() + j) = -b.basis()(i, j);
    }
    RatMatrix k = rat_kernel(joined);
    RatMatrix xa(a.dim(), k.cols);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < k.cols; ++j) xa(i, j) = k(i, j);
    return Subspace(n, rat_mul(a.basis(), xa));
}

RatMatrix quotient_basis(const Subspace& big, const Subspace& small) {
    if (big.ambient_dim() != small.ambient_dim())
        fail("DimensionMismatch", "quotient_basis in different ambient spaces");
    if (!big.contains(small)) fail("NotContained", "quotient_basis needs small <= big");

    // One elimination pass over [small | big]: pivot columns landing in the
    // big block extend a basis of small to one of big.
    const int n = big.ambient_dim();
    RatMatrix aug(n, small.dim() + big.dim());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < small.dim(); ++j) aug(i, j) = small.basis()(i, j);
        for (int j = 0; j < big.dim(); ++j) aug(i, small.dim() + j) = big.basis()(i, j);
    }
    RowReduced rr = row_reduce(std::move(aug));
    RatMatrix reps(n, big.dim() - small.dim());
    int out = 0;
    for (int pc : rr.pivot_cols)
        if (pc >= small.dim()) {
            for (int i = 0; i < n; ++i) reps(i, out) = big.basis()(i, pc - small.dim());
            ++out;
        }
    return reps;
}

RatMatrix restrict_form(const RatMatrix& form, const Subspace& s) {
    if (form.rows != form.cols || form.rows != s.ambient_dim())
        fail("DimensionMismatch", "restrict_form shape");
    return rat_mul(rat_transpose(s.basis()), rat_mul(form, s.basis()));
}

}  // namespace g2inv

#pragma once

#include <optional>
#include <vector>

#include "g2inv/error.hpp"
#include "g2inv/numeric.hpp"

namespace g2inv {

// Dense matrix over arbitrary-precision integers. No rounding happens
// anywhere in this module.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Int& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static IntMatrix identity(int n);
    bool operator==(const IntMatrix& o) const = default;
};

// Dense matrix over exact rationals (always in lowest terms).
struct RatMatrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    Rat& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rat& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static RatMatrix identity(int n);
    bool operator==(const RatMatrix& o) const = default;
};

IntMatrix int_mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix int_transpose(const IntMatrix& x);
RatMatrix rat_mul(const RatMatrix& x, const RatMatrix& y);
RatMatrix rat_transpose(const RatMatrix& x);
RatMatrix to_rat(const IntMatrix& x);
bool is_symmetric(const RatMatrix& x);

// u * m * v = d with u, v unimodular and d diagonal, d1 | d2 | ... >= 0.
struct SmithResult {
    IntMatrix u, d, v;
};
SmithResult smith_normal_form(const IntMatrix& m);

// Inertia of a symmetric bilinear form.
struct Signature {
    int n_plus = 0, n_minus = 0, n_zero = 0;

    int value() const { return n_plus - n_minus; }
    int dim() const { return n_plus + n_minus + n_zero; }
    bool operator==(const Signature& o) const = default;
};

// Signature of a symmetric rational matrix by exact congruence
// diagonalization (no eigenvalues). Throws NonSymmetric.
Signature symmetric_signature(const RatMatrix& s);

// Row echelon machinery shared by the lattice operations below.
struct RowReduced {
    RatMatrix m;                  // reduced row echelon form
    std::vector<int> pivot_cols;  // one entry per pivot row
    int rank = 0;
};
RowReduced row_reduce(RatMatrix m);
int rat_rank(const RatMatrix& m);

// Columns of the result span ker(m).
RatMatrix rat_kernel(const RatMatrix& m);

// One solution x of a*x = b, or nullopt if inconsistent.
std::optional<std::vector<Rat>> rat_solve(const RatMatrix& a, const std::vector<Rat>& b);

// Solve a*X = B for all columns of B at once (single elimination pass).
std::optional<RatMatrix> rat_solve_many(const RatMatrix& a, const RatMatrix& b);

// Linear subspace of Q^n, stored as a canonical basis: reduced column
// echelon scaled to coprime integer columns. Two subspaces compare equal
// exactly when their column spans coincide.
class Subspace {
public:
    // Columns of `span` generate the subspace; dependent columns are folded
    // into the canonical basis.
    Subspace(int ambient_dim, const RatMatrix& span);

    static Subspace zero(int ambient_dim);
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return basis_.cols; }
    const RatMatrix& basis() const { return basis_; }

    bool contains(const std::vector<Rat>& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const {
        return ambient_dim_ == o.ambient_dim_ && basis_ == o.basis_;
    }

private:
    int ambient_dim_;
    RatMatrix basis_;
};

Subspace span_sum(const Subspace& a, const Subspace& b);
Subspace span_intersect(const Subspace& a, const Subspace& b);

// Representatives extending a basis of `small` to one of `big`; requires
// small <= big (NotContained otherwise). Columns are the representatives.
RatMatrix quotient_basis(const Subspace& big, const Subspace& small);

// Gram matrix of `form` restricted to the basis of `s`.
RatMatrix restrict_form(const RatMatrix& form, const Subspace& s);

}  // namespace g2inv

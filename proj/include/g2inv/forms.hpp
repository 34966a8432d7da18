#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "g2inv/exactalg.hpp"

namespace g2inv {

// Exterior form on R^dim (dim <= 8) with exact rational coefficients.
// Terms are keyed by index bitmasks; only nonzero coefficients are stored.
struct ExteriorForm {
    int dim = 0;
    int degree = 0;
    std::map<unsigned, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    int term_count() const { return static_cast<int>(terms.size()); }
    bool operator==(const ExteriorForm& o) const = default;
};

ExteriorForm zero_form(int dim, int degree);

// dx^{i1...ik} with 1-based strictly increasing indices.
ExteriorForm monomial(int dim, std::initializer_list<int> indices, const Rat& coeff = 1);
ExteriorForm monomial(int dim, const std::vector<int>& indices, const Rat& coeff = 1);

ExteriorForm volume_form(int dim);

ExteriorForm form_add(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm form_scale(const Rat& c, const ExteriorForm& a);
Rat coefficient(const ExteriorForm& a, const std::vector<int>& indices);

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

// Hodge star for the standard Euclidean metric and orientation dx^{1...n}.
ExteriorForm hodge_star(const ExteriorForm& a);

// Contraction with the i-th coordinate vector (1-based).
ExteriorForm interior(int i, const ExteriorForm& a);

std::string form_to_string(const ExteriorForm& a);

// The model forms: the G2 3-form phi0 and Spin(7) 4-form psi0, the SU(3)
// pair (omega0, Omega0) on R^6, and the SU(2) triple on R^4.
struct ModelForms {
    ExteriorForm phi0;       // R^7, degree 3, 7 terms
    ExteriorForm psi0;       // R^8, degree 4, 14 terms
    ExteriorForm omega0;     // R^6, degree 2
    ExteriorForm Omega0_re;  // R^6, degree 3
    ExteriorForm Omega0_im;  // R^6, degree 3
    ExteriorForm suII;       // R^4: dx^12 + dx^34
    ExteriorForm suJJ;       // R^4: dx^13 - dx^24
    ExteriorForm suKK;       // R^4: dx^14 + dx^23
};
const ModelForms& model_forms();

// Positivity test for 3-forms on R^7 via the bilinear form
// B(u, v) * vol = (i_u phi) ^ (i_v phi) ^ phi. A form is positive exactly
// when B is definite; for phi0 the Gram matrix is 6 * I (positive sign).
struct PositivityCertificate {
    bool is_positive = false;
    RatMatrix gram;
    Signature signature;
    int orientation = 0;  // +1 if B positive definite, -1 if negative, else 0
};
PositivityCertificate is_positive_3form(const ExteriorForm& phi);

// dt ^ phi + *phi on R + R^7 (t becomes the first coordinate). Requires a
// positive phi (NotPositive otherwise).
ExteriorForm product_spin7(const ExteriorForm& phi);

// Octonions over Q with the multiplication table tied to phi0:
// e_i e_j = eps e_k exactly when phi0 carries the term eps * dx^{ijk}.
struct Octonion {
    std::array<Rat, 8> c{};  // 1, e1, ..., e7

    bool operator==(const Octonion& o) const = default;
};

Octonion octonion(std::initializer_list<Rat> coords);
Octonion octonion_mul(const Octonion& x, const Octonion& y);
Octonion octonion_conj(const Octonion& x);
Octonion octonion_add(const Octonion& x, const Octonion& y);
Rat octonion_norm(const Octonion& x);  // N(x) = sum of squares

}  // namespace g2inv

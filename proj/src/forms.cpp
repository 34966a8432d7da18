#include "g2inv/forms.hpp"

#include <bit>

namespace g2inv {

namespace {

int popcount(unsigned m) { return std::popcount(m); }

// Sign of sorting the concatenation (sorted A, sorted B) for disjoint masks:
// (-1)^{#{(a, b) in A x B : a > b}}.
int merge_sign(unsigned a, unsigned b) {
    int inv = 0;
    for (int i = 0; i < 8; ++i)
        if (b & (1u << i)) inv += popcount(a >> (i + 1));
    return (inv & 1) ? -1 : 1;
}

unsigned mask_of(const std::vector<int>& indices, int dim) {
    unsigned m = 0;
    int prev = 0;
    for (int i : indices) {
        if (i <= prev || i > dim) fail("BadIndexTuple", "indices must be strictly increasing in 1..dim");
        m |= 1u << (i - 1);
        prev = i;
    }
    return m;
}

void put_term(ExteriorForm& f, unsigned mask, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = f.terms.emplace(mask, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) f.terms.erase(it);
    }
}

}  // namespace

ExteriorForm zero_form(int dim, int degree) {
    if (dim < 1 || dim > 8 || degree < 0 || degree > dim)
        fail("WrongDimension", "forms live on R^n with 1 <= n <= 8 and 0 <= degree <= n");
    return ExteriorForm{dim, degree, {}};
}

ExteriorForm monomial(int dim, const std::vector<int>& indices, const Rat& coeff) {
    ExteriorForm f = zero_form(dim, static_cast<int>(indices.size()));
    put_term(f, mask_of(indices, dim), coeff);
    return f;
}

ExteriorForm monomial(int dim, std::initializer_list<int> indices, const Rat& coeff) {
    return monomial(dim, std::vector<int>(indices), coeff);
}

ExteriorForm volume_form(int dim) {
    ExteriorForm f = zero_form(dim, dim);
    put_term(f, (1u << dim) - 1, 1);
    return f;
}

ExteriorForm form_add(const ExteriorForm& a, const ExteriorForm& b) {
    if (a.dim != b.dim || a.degree != b.degree)
        fail("DimensionMismatch", "form_add needs matching dimension and degree");
    ExteriorForm r = a;
    for (const auto& [m, c] : b.terms) put_term(r, m, c);
    return r;
}

ExteriorForm form_scale(const Rat& c, const ExteriorForm& a) {
    ExteriorForm r = zero_form(a.dim, a.degree);
    if (c == 0) return r;
    for (const auto& [m, v] : a.terms) r.terms.emplace(m, c * v);
    return r;
}

Rat coefficient(const ExteriorForm& a, const std::vector<int>& indices) {
    auto it = a.terms.find(mask_of(indices, a.dim));
    return it == a.terms.end() ? Rat(0) : it->second;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
    if (a.dim != b.dim) fail("DimensionMismatch", "wedge needs forms on the same space");
    if (a.degree + b.degree > a.dim)
        fail("DegreeOverflow", "wedge degree exceeds the dimension");
    ExteriorForm r = zero_form(a.dim, a.degree + b.degree);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            if (ma & mb) continue;
            put_term(r, ma | mb, Rat(merge_sign(ma, mb)) * ca * cb);
        }
    return r;
}

ExteriorForm hodge_star(const ExteriorForm& a) {
    const unsigned full = (1u << a.dim) - 1;
    ExteriorForm r = zero_form(a.dim, a.dim - a.degree);
    for (const auto& [m, c] : a.terms)
        put_term(r, full & ~m, Rat(merge_sign(m, full & ~m)) * c);
    return r;
}

ExteriorForm interior(int i, const ExteriorForm& a) {
    if (i < 1 || i > a.dim) fail("WrongDimension", "interior index out of range");
    if (a.degree == 0) return zero_form(a.dim, 0);
    const unsigned bit = 1u << (i - 1);
    ExteriorForm r = zero_form(a.dim, a.degree - 1);
    for (const auto& [m, c] : a.terms) {
        if (!(m & bit)) continue;
        int pos = popcount(m & (bit - 1));
        put_term(r, m & ~bit, (pos & 1) ? -c : c);
    }
    return r;
}

std::string form_to_string(const ExteriorForm& a) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : a.terms) {
        if (!s.empty()) s += " + ";
        s += c.get_str();
        s += "*dx^{";
        for (int i = 0; i < a.dim; ++i)
            if (m & (1u << i)) s += std::to_string(i + 1);
        s += "}";
    }
    return s;
}

namespace {

ModelForms build_model_forms() {
    ModelForms f;
    f.phi0 = zero_form(7, 3);
    for (auto [i, j, k, sign] : std::vector<std::array<int, 4>>{{1, 2, 3, 1},
                                                                {1, 4, 5, 1},
                                                                {1, 6, 7, 1},
                                                                {2, 4, 6, 1},
                                                                {2, 5, 7, -1},
                                                                {3, 4, 7, -1},
                                                                {3, 5, 6, -1}})
        f.phi0 = form_add(f.phi0, monomial(7, {i, j, k}, sign));

    f.psi0 = zero_form(8, 4);
    for (auto [i, j, k, l, sign] : std::vector<std::array<int, 5>>{{1, 2, 3, 4, 1},
                                                                   {1, 2, 5, 6, 1},
                                                                   {1, 2, 7, 8, 1},
                                                                   {1, 3, 5, 7, 1},
                                                                   {1, 3, 6, 8, -1},
                                                                   {1, 4, 5, 8, -1},
                                                                   {1, 4, 6, 7, -1},
                                                                   {2, 3, 5, 8, -1},
                                                                   {2, 3, 6, 7, -1},
                                                                   {2, 4, 5, 7, -1},
                                                                   {2, 4, 6, 8, 1},
                                                                   {3, 4, 5, 6, 1},
                                                                   {3, 4, 7, 8, 1},
                                                                   {5, 6, 7, 8, 1}})
        f.psi0 = form_add(f.psi0, monomial(8, {i, j, k, l}, sign));

    // omega0 = (i/2) sum dz^k ^ dzbar^k for z^k = x^{2k-1} + i x^{2k}.
    f.omega0 = form_add(form_add(monomial(6, {1, 2}), monomial(6, {3, 4})), monomial(6, {5, 6}));

    // Omega0 = dz^1 ^ dz^2 ^ dz^3 expanded into real and imaginary parts.
    f.Omega0_re = form_add(
        form_add(monomial(6, {1, 3, 5}), monomial(6, {1, 4, 6}, -1)),
        form_add(monomial(6, {2, 3, 6}, -1), monomial(6, {2, 4, 5}, -1)));
    f.Omega0_im = form_add(
        form_add(monomial(6, {1, 3, 6}), monomial(6, {1, 4, 5})),
        form_add(monomial(6, {2, 3, 5}), monomial(6, {2, 4, 6}, -1)));

    f.suII = form_add(monomial(4, {1, 2}), monomial(4, {3, 4}));
    f.suJJ = form_add(monomial(4, {1, 3}), monomial(4, {2, 4}, -1));
    f.suKK = form_add(monomial(4, {1, 4}), monomial(4, {2, 3}));
    return f;
}

}  // namespace

const ModelForms& model_forms() {
    static const ModelForms f = build_model_forms();
    return f;
}

PositivityCertificate is_positive_3form(const ExteriorForm& phi) {
    if (phi.dim != 7) fail("WrongDimension", "positivity test lives on R^7");
    if (phi.degree != 3) fail("WrongDegree", "positivity test needs a 3-form");

    PositivityCertificate cert;
    cert.gram = RatMatrix(7, 7);
    std::array<ExteriorForm, 7> contractions;
    for (int u = 0; u < 7; ++u) contractions[u] = interior(u + 1, phi);
    for (int u = 0; u < 7; ++u)
        for (int v = u; v < 7; ++v) {
            ExteriorForm w = wedge(wedge(contractions[u], contractions[v]), phi);
            Rat b = coefficient(w, {1, 2, 3, 4, 5, 6, 7});
            cert.gram(u, v) = b;
            cert.gram(v, u) = b;
        }
    cert.signature = symmetric_signature(cert.gram);
    cert.is_positive = (cert.signature.n_zero == 0) &&
                       (cert.signature.n_plus == 7 || cert.signature.n_minus == 7);
    if (cert.is_positive) cert.orientation = cert.signature.n_plus == 7 ? 1 : -1;
    return cert;
}

ExteriorForm product_spin7(const ExteriorForm& phi) {
    if (!is_positive_3form(phi).is_positive)
        fail("NotPositive", "product_spin7 needs a positive 3-form");

    auto shift = [](const ExteriorForm& a) {
        ExteriorForm r = zero_form(8, a.degree);
        for (const auto& [m, c] : a.terms) r.terms.emplace(m << 1, c);
        return r;
    };
    ExteriorForm dt_phi = zero_form(8, 4);
    for (const auto& [m, c] : shift(phi).terms) dt_phi.terms.emplace(m | 1u, c);
    return form_add(dt_phi, shift(hodge_star(phi)));
}

// ---------------------------------------------------------------------------
// Octonions
// ---------------------------------------------------------------------------

namespace {

struct CayleyTable {
    int sign[8][8];
    int index[8][8];

    CayleyTable() {
        for (int j = 0; j < 8; ++j) sign[0][j] = 1, index[0][j] = j;
        for (int i = 1; i < 8; ++i) {
            sign[i][0] = 1, index[i][0] = i;
            sign[i][i] = -1, index[i][i] = 0;
        }
        // Triples (i, j, k, eps) with e_i e_j = eps e_k, matching phi0.
        for (auto [i, j, k, eps] : std::vector<std::array<int, 4>>{{1, 2, 3, 1},
                                                                   {1, 4, 5, 1},
                                                                   {1, 6, 7, 1},
                                                                   {2, 4, 6, 1},
                                                                   {2, 5, 7, -1},
                                                                   {3, 4, 7, -1},
                                                                   {3, 5, 6, -1}}) {
            auto set = [&](int a, int b, int c, int e) {
                sign[a][b] = e, index[a][b] = c;
                sign[b][a] = -e, index[b][a] = c;
            };
            set(i, j, k, eps);
            set(j, k, i, eps);
            set(k, i, j, eps);
        }
    }
};

const CayleyTable& cayley() {
    static const CayleyTable t;
    return t;
}

}  // namespace

Octonion octonion(std::initializer_list<Rat> coords) {
    if (coords.size() != 8) fail("DimensionMismatch", "an octonion has 8 coordinates");
    Octonion x;
    int i = 0;
    for (const Rat& c : coords) x.c[i++] = c;
    return x;
}

Octonion octonion_mul(const Octonion& x, const Octonion& y) {
    const CayleyTable& t = cayley();
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < 8; ++j) {
            if (y.c[j] == 0) continue;
            r.c[t.index[i][j]] += Rat(t.sign[i][j]) * x.c[i] * y.c[j];
        }
    }
    return r;
}

Octonion octonion_conj(const Octonion& x) {
    Octonion r = x;
    for (int i = 1; i < 8; ++i) r.c[i] = -r.c[i];
    return r;
}

Octonion octonion_add(const Octonion& x, const Octonion& y) {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}

Rat octonion_norm(const Octonion& x) {
    Rat n = 0;
    for (int i = 0; i < 8; ++i) n += x.c[i] * x.c[i];
    return n;
}

}  // namespace g2inv

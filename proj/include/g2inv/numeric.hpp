#pragma once

#include <gmpxx.h>
#include <string>

namespace g2inv {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an exact rational kept in lowest terms by GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_num(const Rat& q) { return q.get_num(); }
inline Int rat_den(const Rat& q) { return q.get_den(); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Least nonnegative residue of a mod m (m > 0).
inline Int mod_nonneg(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Reduce a rational into [0, m) for a positive rational modulus m.
inline Rat rat_mod(const Rat& a, const Rat& m) {
    Rat q = a / m;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return a - Rat(fl) * m;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace g2inv

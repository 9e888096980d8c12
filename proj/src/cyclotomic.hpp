#pragma once
#include "dbounds/matrix.hpp"

namespace dbounds {

// Element of Q[x]/Phi_n(x), x = exp(2 pi i / n), n <= 24.
struct Cyclo {
    long n = 1;
    std::vector<Rat> c;  // size deg(Phi_n)
};

Cyclo cy_zero(long n);
Cyclo cy_const(long n, const Rat& r);
Cyclo cy_root_pow(long n, long k);
Cyclo cy_add(const Cyclo& a, const Cyclo& b);
Cyclo cy_sub(const Cyclo& a, const Cyclo& b);
Cyclo cy_mul(const Cyclo& a, const Cyclo& b);
Cyclo cy_div(const Cyclo& a, const Cyclo& b);
Cyclo cy_conj(const Cyclo& a);
bool cy_is_zero(const Cyclo& a);
// Sign of a real (conjugation-fixed) element under x = exp(2 pi i / n).
int cy_sign(const Cyclo& a);

// Signature of a Hermitian matrix over Q(zeta_n); B is h*h row-major.
long hermitian_signature(std::vector<Cyclo> B, int h);

} // namespace dbounds

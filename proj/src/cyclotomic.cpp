#include "cyclotomic.hpp"
#include <cassert>
#include <map>
#include <mutex>
#include <mpfr.h>

namespace dbounds {
namespace {

// Polynomials over Q, coefficient vector, lowest degree first.
using Poly = std::vector<Rat>;

void ptrim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// p mod q (q monic up to leading unit), in place quotientless remainder.
Poly pmod(Poly p, const Poly& q) {
    ptrim(p);
    int dq = (int)q.size() - 1;
    assert(dq >= 0 && q.back() != 0);
    while ((int)p.size() - 1 >= dq) {
        Rat f = p.back() / q.back();
        int shift = (int)p.size() - 1 - dq;
        for (int i = 0; i <= dq; i++) p[shift + i] -= f * q[i];
        p.pop_back();
        ptrim(p);
    }
    return p;
}

Poly pdiv_exact(Poly p, const Poly& q) {
    ptrim(p);
    int dq = (int)q.size() - 1;
    Poly quo((int)p.size() - dq, Rat(0));
    while ((int)p.size() - 1 >= dq) {
        Rat f = p.back() / q.back();
        int shift = (int)p.size() - 1 - dq;
        quo[shift] = f;
        for (int i = 0; i <= dq; i++) p[shift + i] -= f * q[i];
        p.pop_back();
        ptrim(p);
    }
    assert(p.empty());
    return quo;
}

// Phi_n via x^n - 1 = prod_{d|n} Phi_d.
static Poly cyclotomic_poly_raw(long n);

const Poly& cyclotomic_poly(long n) {
    static std::map<long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    return cache.emplace(n, cyclotomic_poly_raw(n)).first->second;
}

static Poly cyclotomic_poly_raw(long n) {
    Poly p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; d++)
        if (n % d == 0) p = pdiv_exact(p, cyclotomic_poly_raw(d));
    return p;
}

int phi_deg(long n) { return (int)cyclotomic_poly(n).size() - 1; }

Cyclo from_poly(long n, Poly p) {
    p = pmod(std::move(p), cyclotomic_poly(n));
    p.resize(phi_deg(n), Rat(0));
    return {n, std::move(p)};
}

// Extended Euclid in Q[x]: g = a*u + b*v, returns {g, u}.
std::pair<Poly, Poly> half_gcd(Poly a, Poly b) {
    Poly u0 = {Rat(1)}, u1 = {};
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a = q*b + r
        Poly r = a, q((int)std::max<size_t>(a.size(), b.size()), Rat(0));
        int db = (int)b.size() - 1;
        while ((int)r.size() - 1 >= db) {
            Rat f = r.back() / b.back();
            int shift = (int)r.size() - 1 - db;
            q[shift] += f;
            for (int i = 0; i <= db; i++) r[shift + i] -= f * b[i];
            r.pop_back();
            ptrim(r);
        }
        ptrim(q);
        // u2 = u0 - q*u1
        Poly u2 = u0;
        u2.resize(std::max(u0.size(), q.size() + u1.size()) + 1, Rat(0));
        for (size_t i = 0; i < q.size(); i++)
            for (size_t j = 0; j < u1.size(); j++) u2[i + j] -= q[i] * u1[j];
        ptrim(u2);
        a = std::move(b);
        b = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return {a, u0};
}

} // namespace

Cyclo cy_zero(long n) { return {n, Poly(phi_deg(n), Rat(0))}; }

Cyclo cy_const(long n, const Rat& r) {
    Cyclo z = cy_zero(n);
    z.c[0] = r;
    return z;
}

Cyclo cy_root_pow(long n, long k) {
    k = ((k % n) + n) % n;
    Poly p(k + 1, Rat(0));
    p[k] = 1;
    return from_poly(n, std::move(p));
}

Cyclo cy_add(const Cyclo& a, const Cyclo& b) {
    assert(a.n == b.n);
    Cyclo r = a;
    for (size_t i = 0; i < r.c.size(); i++) r.c[i] += b.c[i];
    return r;
}

Cyclo cy_sub(const Cyclo& a, const Cyclo& b) {
    assert(a.n == b.n);
    Cyclo r = a;
    for (size_t i = 0; i < r.c.size(); i++) r.c[i] -= b.c[i];
    return r;
}

Cyclo cy_mul(const Cyclo& a, const Cyclo& b) {
    assert(a.n == b.n);
    Poly p(a.c.size() + b.c.size(), Rat(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); j++) p[i + j] += a.c[i] * b.c[j];
    }
    return from_poly(a.n, std::move(p));
}

bool cy_is_zero(const Cyclo& a) {
    for (auto& x : a.c)
        if (x != 0) return false;
    return true;
}

Cyclo cy_div(const Cyclo& a, const Cyclo& b) {
    assert(!cy_is_zero(b));
    Poly bp = b.c;
    ptrim(bp);
    auto [g, u] = half_gcd(bp, cyclotomic_poly(b.n));
    assert(g.size() == 1 && g[0] != 0);  // Phi_n irreducible
    for (auto& x : u) x /= g[0];
    Cyclo binv = from_poly(b.n, std::move(u));
    return cy_mul(a, binv);
}

Cyclo cy_conj(const Cyclo& a) {
    Poly p(a.n, Rat(0));
    for (size_t i = 0; i < a.c.size(); i++) {
        if (a.c[i] == 0) continue;
        p[(a.n - (long)i) % a.n] += a.c[i];
    }
    return from_poly(a.n, std::move(p));
}

int cy_sign(const Cyclo& a) {
    assert(cy_is_zero(cy_sub(a, cy_conj(a))));
    if (cy_is_zero(a)) return 0;
    for (mpfr_prec_t prec = 256; prec <= 16384; prec *= 4) {
        mpfr_t re, im, t, ang, c;
        mpfr_inits2(prec, re, im, t, ang, c, (mpfr_ptr) nullptr);
        mpfr_set_zero(re, 1);
        mpfr_set_zero(im, 1);
        mpfr_const_pi(ang, MPFR_RNDN);
        for (size_t j = 0; j < a.c.size(); j++) {
            if (a.c[j] == 0) continue;
            mpfr_set_q(t, a.c[j].get_mpq_t(), MPFR_RNDN);
            mpfr_mul_si(c, ang, 2 * (long)j, MPFR_RNDN);
            mpfr_div_si(c, c, a.n, MPFR_RNDN);
            mpfr_t cs;
            mpfr_init2(cs, prec);
            mpfr_cos(cs, c, MPFR_RNDN);
            mpfr_mul(cs, cs, t, MPFR_RNDN);
            mpfr_add(re, re, cs, MPFR_RNDN);
            mpfr_sin(cs, c, MPFR_RNDN);
            mpfr_mul(cs, cs, t, MPFR_RNDN);
            mpfr_add(im, im, cs, MPFR_RNDN);
            mpfr_clear(cs);
        }
        // margin 2^(-prec/2): a nonzero algebraic number of bounded height
        // cannot be arbitrarily small, so escalation terminates
        mpfr_set_ui(t, 1, MPFR_RNDN);
        mpfr_div_2ui(t, t, prec / 2, MPFR_RNDN);
        int ok = mpfr_cmpabs(re, t) > 0;
        assert(mpfr_cmpabs(im, t) < 0);
        int s = mpfr_sgn(re);
        mpfr_clears(re, im, t, ang, c, (mpfr_ptr) nullptr);
        if (ok) return s;
    }
    assert(false && "cy_sign: precision exhausted");
    return 0;
}

long hermitian_signature(std::vector<Cyclo> B, int h) {
    long n = h ? B[0].n : 1;
    auto at = [&](int i, int j) -> Cyclo& { return B[(size_t)i * h + j]; };
    std::vector<int> live;
    for (int i = 0; i < h; i++) live.push_back(i);
    long sig = 0;
    while (!live.empty()) {
        int pi = -1;
        for (int i : live)
            if (!cy_is_zero(at(i, i))) { pi = i; break; }
        if (pi >= 0) {
            sig += cy_sign(at(pi, pi));
            Cyclo d = at(pi, pi);
            std::vector<int> rest;
            for (int i : live)
                if (i != pi) rest.push_back(i);
            // B'_kl = B_kl - B_kp B_pl / d; row/column pi stays untouched
            for (int k : rest) {
                Cyclo f = cy_div(at(k, pi), d);
                for (int l : rest) at(k, l) = cy_sub(at(k, l), cy_mul(f, at(pi, l)));
            }
            live = rest;
            continue;
        }
        // all diagonals zero: find a hyperbolic pair, else the block is zero
        int hi = -1, hj = -1;
        for (size_t a = 0; a < live.size() && hi < 0; a++)
            for (size_t b = a + 1; b < live.size() && hi < 0; b++)
                if (!cy_is_zero(at(live[a], live[b]))) { hi = live[a]; hj = live[b]; }
        if (hi < 0) break;  // zero block contributes nothing
        std::vector<int> rest;
        for (int i : live)
            if (i != hi && i != hj) rest.push_back(i);
        // split off the hyperbolic plane <e_i, e_j>; signature contribution 0
        // B'_kl = B_kl - conj(a_l) B_ki - conj(b_l) B_kj with a_l = B_lj/B_ij,
        // b_l = B_li/B_ji; columns hi, hj are never written inside the loop
        for (int k : rest)
            for (int l : rest) {
                Cyclo corr = cy_add(cy_mul(cy_conj(cy_div(at(l, hj), at(hi, hj))), at(k, hi)),
                                    cy_mul(cy_conj(cy_div(at(l, hi), at(hj, hi))), at(k, hj)));
                at(k, l) = cy_sub(at(k, l), corr);
            }
        live = rest;
    }
    (void)n;
    return sig;
}

} // namespace dbounds

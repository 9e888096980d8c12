#include "dbounds/links.hpp"
#include "conventions.hpp"
#include "cyclotomic.hpp"
#include <cassert>

namespace dbounds {

long goeritz_signature_of(const Diagram& dg, bool type_sigma, int gl_sign);

SeifertMatrix seifert_matrix(const LinkDescriptor& d) {
    if (d.twobridge && d.p == 1) return {IntMat(0, 0)};
    return seifert_matrix_of(build_diagram(d));
}

static SymMat symmetrize(const IntMat& M) {
    SymMat S(M.rows);
    for (int i = 0; i < M.rows; i++)
        for (int j = 0; j < M.rows; j++) S.at(i, j) = M.at(i, j) + M.at(j, i);
    return S;
}

long signature(const LinkDescriptor& d) {
    return sym_signature(symmetrize(seifert_matrix(d).M));
}

long signature_goeritz(const LinkDescriptor& d) {
    if (d.twobridge && d.p == 1) return 0;
    return goeritz_signature_of(build_diagram(d), conv::kGLTypeSigma, conv::kGLSign);
}

long tristram_levine(const SeifertMatrix& m, long k, long n) {
    assert(n >= 2 && n <= 24 && k % n != 0);
    int a = m.M.rows;
    Cyclo om = cy_root_pow(n, k);
    Cyclo omc = cy_conj(om);
    Cyclo u = cy_sub(cy_const(n, Rat(1)), om);   // 1 - w
    Cyclo uc = cy_sub(cy_const(n, Rat(1)), omc); // 1 - conj(w)
    std::vector<Cyclo> B((size_t)a * a, cy_zero(n));
    for (int i = 0; i < a; i++)
        for (int j = 0; j < a; j++) {
            Cyclo t = cy_mul(u, cy_const(n, Rat(m.M.at(i, j))));
            t = cy_add(t, cy_mul(uc, cy_const(n, Rat(m.M.at(j, i)))));
            B[(size_t)i * a + j] = t;
        }
    return hermitian_signature(std::move(B), a);
}

long tristram_levine(const LinkDescriptor& d, long k, long n) {
    return tristram_levine(seifert_matrix(d), k, n);
}

LinkInvariants link_invariants(const LinkDescriptor& d, long taylor_bound) {
    LinkInvariants inv;
    if (d.twobridge && d.p == 1) {
        inv.mu = 1;
        inv.sigma = 0;
        inv.h = 1;
        inv.taylor = TaylorBracket{Rat(0), Rat(0)};
        return inv;
    }
    Diagram dg = build_diagram(d);
    inv.mu = component_count(dg);
    SeifertMatrix sm = seifert_matrix_of(dg);
    SymMat S = symmetrize(sm.M);
    inv.sigma = sym_signature(S);
    inv.h = abs(det(S));
    if (inv.mu == 1) {
        if (d.twobridge) {
            // S(p,q) = S(p,q^-1 mod p): search whichever presentation has the
            // smaller pairing first and intersect the brackets
            long qi = 1;
            while ((qi * d.q) % d.p != 1) qi++;
            bool dual = qi != d.q;
            SeifertMatrix alt = dual ? seifert_matrix(make_twobridge(d.p, qi)) : sm;
            if (alt.M.rows < sm.M.rows) std::swap(sm, alt);
            TaylorBracket t = taylor_bracket(sm, taylor_bound);
            if (t.lo != t.hi && dual) {
                TaylorBracket t2 = taylor_bracket(alt, taylor_bound);
                t.lo = std::max(t.lo, t2.lo);
                t.hi = std::min(t.hi, t2.hi);
                assert(t.lo <= t.hi);
            }
            inv.taylor = t;
        } else {
            inv.taylor = taylor_bracket(sm, taylor_bound);
        }
    }
    return inv;
}

} // namespace dbounds

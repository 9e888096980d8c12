#include "dbounds/qforms.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace dbounds {

long SqTable::label_of(const std::vector<Int>& c) const {
    int n = form.Q.n;
    std::vector<Int> x(n);
    for (int i = 0; i < n; i++) x[i] = (c[i] - form.Q.at(i, i)) / 2;
    auto raw = group.reduce(coker.project(x));
    return group.index_of(group.sub(raw, shift));
}

long SqTable::conj_index(long idx) const {
    return group.index_of(group.neg(group.elt_at(idx)));
}

namespace {

bool is_tridiagonal(const SymMat& Q) {
    for (int i = 0; i < Q.n; i++)
        for (int j = i + 2; j < Q.n; j++)
            if (Q.at(i, j) != 0) return false;
    return true;
}

// Solve Q y = c exactly for tridiagonal nonsingular Q.
std::vector<Rat> tridiag_solve(const SymMat& Q, const std::vector<Rat>& c) {
    int n = Q.n;
    std::vector<Rat> diag(n), rhs(c), sub(n);
    for (int i = 0; i < n; i++) diag[i] = Rat(Q.at(i, i));
    for (int i = 0; i + 1 < n; i++) sub[i] = Rat(Q.at(i, i + 1));
    // forward elimination
    for (int i = 1; i < n; i++) {
        if (diag[i - 1] == 0) throw std::runtime_error("tridiag_solve: pivot");
        Rat f = sub[i - 1] / diag[i - 1];
        diag[i] -= f * sub[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    std::vector<Rat> y(n);
    for (int i = n - 1; i >= 0; i--) {
        Rat t = rhs[i];
        if (i + 1 < n) t -= sub[i] * y[i + 1];
        y[i] = t / diag[i];
    }
    return y;
}

Rat form_value(const SymMat& Q, const std::vector<Rat>& c) {
    // c^T Q^{-1} c via a solve
    auto y = tridiag_solve(Q, c);
    Rat s = 0;
    for (size_t i = 0; i < c.size(); i++) s += c[i] * y[i];
    return s;
}

// For a tridiagonal chain with P = -Q (positive definite M-matrix, weakly
// diagonally dominant), maximize c'^T Q^{-1} c' over covectors c' = c + 2Qm.
// Equivalent to minimizing g(m) = m^T P m - c^T m; such g admits descent by
// +/- indicator vectors of intervals, and interval-local minima are global.
struct ChainMax {
    const SymMat& Q;
    int n;
    std::vector<Int> P;  // dense -Q copy for speed (long would do, keep exact)

    explicit ChainMax(const SymMat& Qi) : Q(Qi), n(Qi.n) {
        P.resize((size_t)n * n);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) P[(size_t)i * n + j] = -Q.at(i, j);
    }

    // returns maximizing covector for the class of c
    std::vector<Int> maximize(const std::vector<Int>& c) {
        // start at rounded continuous minimizer m* = P^{-1} c / 2
        std::vector<Rat> crat(c.begin(), c.end());
        auto y = tridiag_solve(Q, crat);  // y = Q^{-1} c = -P^{-1} c
        std::vector<Int> m(n);
        for (int i = 0; i < n; i++) {
            Rat half = -y[i] / 2;
            Int fl;
            mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(),
                       half.get_den().get_mpz_t());
            // round to nearest
            if (half - Rat(fl) > Rat(1, 2)) fl += 1;
            m[i] = fl;
        }
        // residual r = 2 P m - c, maintained incrementally
        std::vector<Int> r(n);
        for (int i = 0; i < n; i++) {
            Int s = 0;
            for (int j = 0; j < n; j++) s += P[(size_t)i * n + j] * m[j];
            r[i] = 2 * s - c[i];
        }
        auto apply = [&](int lo, int hi, int sgn) {
            for (int i = lo; i <= hi; i++) m[i] += sgn;
            for (int i = 0; i < n; i++) {
                Int s = 0;
                for (int j = lo; j <= hi; j++) s += P[(size_t)i * n + j];
                r[i] += 2 * sgn * s;
            }
        };
        for (;;) {
            // best interval step: delta = sum_{i,j in S} P_ij + sgn * sum r_i
            Int best = 0;
            int blo = -1, bhi = -1, bsgn = 0;
            for (int lo = 0; lo < n; lo++) {
                Int quad = 0, lin = 0;
                for (int hi = lo; hi < n; hi++) {
                    // extend interval by hi
                    quad += P[(size_t)hi * n + hi];
                    if (hi > lo) quad += 2 * P[(size_t)(hi - 1) * n + hi];
                    lin += r[hi];
                    for (int sgn : {+1, -1}) {
                        Int delta = quad + sgn * lin;
                        if (delta < best) {
                            best = delta;
                            blo = lo; bhi = hi; bsgn = sgn;
                        }
                    }
                }
            }
            if (blo < 0) break;
            apply(blo, bhi, bsgn);
        }
        std::vector<Int> cp(n);
        for (int i = 0; i < n; i++) {
            Int s = 0;
            for (int j = 0; j < n; j++) s += Q.at(i, j) * m[j];
            cp[i] = c[i] + 2 * s;
        }
        return cp;
    }
};

} // namespace

SqTable sq_table(const QuadraticForm& f) {
    const SymMat& Q = f.Q;
    int n = Q.n;
    SqTable t;
    t.form = f;
    if (n == 0) {
        t.group = FinAbGroup{};
        t.shift = {};
        t.sq = {Rat(0)};
        t.jfixed = {1};
        t.class_reps = {{}};
        return t;
    }
    if (!is_negative_definite(Q)) throw std::runtime_error("sq_table: not definite");
    t.coker = cokernel(Q.as_mat());
    t.group.factors = t.coker.factors;
    long N = t.group.order();
    t.sq.assign(N, Rat(0));
    t.jfixed.assign(N, 0);
    t.class_reps.assign(N, {});
    std::vector<char> seen(N, 0);

    std::vector<Int> c0(n);
    double logvol = 0;
    for (int i = 0; i < n; i++) {
        c0[i] = Q.at(i, i);
        logvol += std::log2(std::max(1.0, -Q.at(i, i).get_d()));
    }

    Int dq = det(Q);
    bool chain = is_tridiagonal(Q);
    if (logvol <= (chain ? 10.0 : 22.0)) {
        IntMat adj = adjugate(Q);
        // enumerate c with Q_ii <= c_i < -Q_ii, c_i = Q_ii (mod 2)
        std::vector<Int> c(n);
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                std::vector<Int> x(n);
                for (int k = 0; k < n; k++) x[k] = (c[k] - c0[k]) / 2;
                long idx = t.group.index_of(t.group.reduce(t.coker.project(x)));
                // square via integer adjugate
                Int num = 0;
                for (int a = 0; a < n; a++) {
                    if (c[a] == 0) continue;
                    Int row = 0;
                    for (int b = 0; b < n; b++) row += adj.at(a, b) * c[b];
                    num += c[a] * row;
                }
                Rat s(num, dq);
                s.canonicalize();
                if (!seen[idx] || s > t.sq[idx]) {
                    t.sq[idx] = s;
                    t.class_reps[idx] = c;
                    seen[idx] = 1;
                }
                return;
            }
            for (Int v = Q.at(i, i); v < -Q.at(i, i); v += 2) {
                c[i] = v;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        for (long i = 0; i < N; i++)
            if (!seen[i]) throw std::runtime_error("sq_table: class missed");
    } else {
        if (!chain)
            throw std::runtime_error("sq_table: form too large for enumeration");
        ChainMax cm(Q);
        // per class, build a representative covector c0 + 2x and optimize
        for (long idx = 0; idx < N; idx++) {
            auto e = t.group.elt_at(idx);
            // lift class to x in Z^n: x = Uinv * y, y has coords at snf pos
            std::vector<Int> y(n), x(n);
            for (size_t k = 0; k < t.coker.pos.size(); k++)
                y[t.coker.pos[k]] = e[k];
            for (int i = 0; i < n; i++) {
                Int s = 0;
                for (int j = 0; j < n; j++) s += t.coker.snf.Uinv.at(i, j) * y[j];
                x[i] = s;
            }
            std::vector<Int> c(n);
            for (int i = 0; i < n; i++) c[i] = c0[i] + 2 * x[i];
            auto copt = cm.maximize(c);
            std::vector<Rat> crat(copt.begin(), copt.end());
            t.sq[idx] = form_value(Q, crat);
            t.class_reps[idx] = copt;
            seen[idx] = 1;
        }
    }
    // Re-anchor labels at a j-fixed class: find z with 2z = -proj(c0), so
    // that after subtracting z the involution is negation.  Such z exists
    // because Y carries a spin structure; prefer z = 0 (diagonal already
    // j-fixed) for stability.
    auto pc0 = t.group.reduce(t.coker.project(c0));
    long zidx = -1;
    for (long i = 0; i < N; i++) {
        auto z = t.group.elt_at(i);
        if (t.group.add(z, z) == t.group.neg(pc0)) { zidx = i; break; }
    }
    if (zidx < 0) throw std::runtime_error("sq_table: no j-fixed class");
    t.shift = t.group.elt_at(zidx);
    std::vector<Rat> sq2(N);
    std::vector<std::vector<Int>> reps2(N);
    for (long i = 0; i < N; i++) {
        auto a = t.group.elt_at(i);
        long old = t.group.index_of(t.group.add(a, t.shift));
        sq2[i] = t.sq[old];
        reps2[i] = t.class_reps[old];
    }
    t.sq = std::move(sq2);
    t.class_reps = std::move(reps2);
    for (long i = 0; i < N; i++) t.jfixed[i] = (t.conj_index(i) == i);
    return t;
}

OmegaData omega_points_rank2(long a, long b, long c) {
    if (!(0 >= 2 * b && 2 * b >= a && a >= c) || a * c - b * b < 1)
        throw std::runtime_error("omega_points_rank2: form not reduced");
    SymMat Q(2);
    Q.set(0, 0, a);
    Q.set(1, 1, c);
    Q.set(0, 1, b);
    auto ck = cokernel(Q.as_mat());
    FinAbGroup G;
    G.factors = ck.factors;
    OmegaData od;
    od.group = G;
    od.jfixed.assign(G.order(), 0);
    long e = a - 2 * b + c;
    Int dq = det(Q);
    for (long x = a; x < -a; x += 2)
        for (long y = c; y < -c; y += 2) {
            if (!(e <= x - y && x - y < -e)) continue;
            std::vector<Int> h{Int((x - a) / 2), Int((y - c) / 2)};
            long idx = G.index_of(G.reduce(ck.project(h)));
            // square = (x,y) Q^{-1} (x,y)^T = (c x^2 - 2 b x y + a y^2)/det
            Rat s(Int(c * x * x - 2 * b * x * y + a * y * y), dq);
            s.canonicalize();
            od.points.push_back({x, y, idx, s});
        }
    // j-fixed classes from the characteristic vectors among the four listed
    long cand[4][2] = {{0, 0}, {a, b}, {b, c}, {a - b, b - c}};
    for (auto& v : cand) {
        if (((v[0] - a) % 2) != 0 || ((v[1] - c) % 2) != 0) continue;
        std::vector<Int> h{Int((v[0] - a) / 2), Int((v[1] - c) / 2)};
        od.jfixed[G.index_of(G.reduce(ck.project(h)))] = 1;
    }
    return od;
}

} // namespace dbounds

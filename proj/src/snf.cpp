#include "dbounds/snf.hpp"
#include <cassert>
#include <stdexcept>

namespace dbounds {

namespace {

struct Worker {
    IntMat D, U, Ui, V, Vi;

    // row_i -= q * row_t  on D, tracked on U (and inverse op on Ui)
    void row_sub(int i, int t, const Int& q) {
        if (q == 0) return;
        for (int j = 0; j < D.cols; j++) D.at(i, j) -= q * D.at(t, j);
        for (int j = 0; j < U.cols; j++) U.at(i, j) -= q * U.at(t, j);
        for (int r = 0; r < Ui.rows; r++) Ui.at(r, t) += q * Ui.at(r, i);
    }
    void col_sub(int j, int t, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < D.rows; i++) D.at(i, j) -= q * D.at(i, t);
        for (int i = 0; i < V.rows; i++) V.at(i, j) -= q * V.at(i, t);
        for (int c = 0; c < Vi.cols; c++) Vi.at(t, c) += q * Vi.at(j, c);
    }
    void row_swap(int i, int t) {
        if (i == t) return;
        for (int j = 0; j < D.cols; j++) std::swap(D.at(i, j), D.at(t, j));
        for (int j = 0; j < U.cols; j++) std::swap(U.at(i, j), U.at(t, j));
        for (int r = 0; r < Ui.rows; r++) std::swap(Ui.at(r, i), Ui.at(r, t));
    }
    void col_swap(int j, int t) {
        if (j == t) return;
        for (int i = 0; i < D.rows; i++) std::swap(D.at(i, j), D.at(i, t));
        for (int i = 0; i < V.rows; i++) std::swap(V.at(i, j), V.at(i, t));
        for (int c = 0; c < Vi.cols; c++) std::swap(Vi.at(j, c), Vi.at(t, c));
    }
    void row_negate(int i) {
        for (int j = 0; j < D.cols; j++) D.at(i, j) = -D.at(i, j);
        for (int j = 0; j < U.cols; j++) U.at(i, j) = -U.at(i, j);
        for (int r = 0; r < Ui.rows; r++) Ui.at(r, i) = -Ui.at(r, i);
    }
};

} // namespace

SmithForm smith_normal_form(const IntMat& M) {
    Worker w;
    w.D = M;
    w.U = IntMat::identity(M.rows);
    w.Ui = IntMat::identity(M.rows);
    w.V = IntMat::identity(M.cols);
    w.Vi = IntMat::identity(M.cols);
    int n = std::min(M.rows, M.cols);

    for (int t = 0; t < n; t++) {
        // find pivot of minimal absolute value in D[t.., t..]
        int pi = -1, pj = -1;
        for (int i = t; i < M.rows; i++)
            for (int j = t; j < M.cols; j++) {
                if (w.D.at(i, j) == 0) continue;
                if (pi < 0 || mpz_cmpabs(w.D.at(i, j).get_mpz_t(),
                                         w.D.at(pi, pj).get_mpz_t()) < 0) {
                    pi = i; pj = j;
                }
            }
        if (pi < 0) break;  // remaining block is zero
        w.row_swap(pi, t);
        w.col_swap(pj, t);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < M.rows; i++) {
                if (w.D.at(i, t) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.D.at(i, t).get_mpz_t(),
                           w.D.at(t, t).get_mpz_t());
                w.row_sub(i, t, q);
                if (w.D.at(i, t) != 0) { w.row_swap(i, t); clean = false; }
            }
            for (int j = t + 1; j < M.cols; j++) {
                if (w.D.at(t, j) == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), w.D.at(t, j).get_mpz_t(),
                           w.D.at(t, t).get_mpz_t());
                w.col_sub(j, t, q);
                if (w.D.at(t, j) != 0) { w.col_swap(j, t); clean = false; }
            }
            if (!clean) continue;
            // pivot must divide the rest of the block
            bool divides = true;
            for (int i = t + 1; i < M.rows && divides; i++)
                for (int j = t + 1; j < M.cols; j++)
                    if (w.D.at(i, j) % w.D.at(t, t) != 0) {
                        w.row_sub(t, i, Int(-1));  // row_t += row_i
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (w.D.at(t, t) < 0) w.row_negate(t);
    }

    SmithForm sf{w.D, w.U, w.Ui, w.V, w.Vi};
    return sf;
}

Cokernel cokernel(const IntMat& Q) {
    assert(Q.rows == Q.cols);
    Cokernel ck;
    ck.snf = smith_normal_form(Q);
    for (int i = 0; i < Q.rows; i++) {
        Int d = ck.snf.D.at(i, i);
        if (d == 0) throw std::runtime_error("cokernel: singular matrix");
        if (d >= 2) {
            ck.factors.push_back(d.get_si());
            ck.pos.push_back(i);
        }
    }
    return ck;
}

std::vector<long> Cokernel::project(const std::vector<Int>& x) const {
    std::vector<long> out(factors.size());
    for (size_t k = 0; k < factors.size(); k++) {
        int i = pos[k];
        Int s = 0;
        for (int j = 0; j < snf.U.cols; j++) s += snf.U.at(i, j) * x[j];
        Int m;
        mpz_fdiv_r(m.get_mpz_t(), s.get_mpz_t(), Int(factors[k]).get_mpz_t());
        out[k] = m.get_si();
    }
    return out;
}

std::vector<long> Cokernel::project_l(const std::vector<long>& x) const {
    std::vector<Int> xi(x.begin(), x.end());
    return project(xi);
}

} // namespace dbounds

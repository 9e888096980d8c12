#include "dbounds/matrix.hpp"
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace dbounds {

IntMat IntMat::identity(int n) {
    IntMat I(n, n);
    for (int i = 0; i < n; i++) I.at(i, i) = 1;
    return I;
}

IntMat mat_mul(const IntMat& A, const IntMat& B) {
    assert(A.cols == B.rows);
    IntMat C(A.rows, B.cols);
    Int t;
    for (int i = 0; i < A.rows; i++)
        for (int k = 0; k < A.cols; k++) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < B.cols; j++) {
                t = aik * B.at(k, j);
                C.at(i, j) += t;
            }
        }
    return C;
}

IntMat mat_transpose(const IntMat& A) {
    IntMat T(A.cols, A.rows);
    for (int i = 0; i < A.rows; i++)
        for (int j = 0; j < A.cols; j++) T.at(j, i) = A.at(i, j);
    return T;
}

IntMat SymMat::as_mat() const {
    IntMat M(n, n);
    M.a = a;
    return M;
}

SymMat sym_from_mat(const IntMat& A) {
    assert(A.rows == A.cols);
    SymMat Q(A.rows);
    for (int i = 0; i < A.rows; i++)
        for (int j = 0; j < A.cols; j++) {
            assert(A.at(i, j) == A.at(j, i));
            Q.at(i, j) = A.at(i, j);
        }
    return Q;
}

SymMat sym_negate(const SymMat& Q) {
    SymMat R(Q.n);
    for (size_t i = 0; i < Q.a.size(); i++) R.a[i] = -Q.a[i];
    return R;
}

// Bareiss fraction-free elimination with row pivoting; returns determinant.
static Int bareiss_det(IntMat M) {
    int n = M.rows;
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (M.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (M.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = k; j < n; j++) std::swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++) {
                Int t = M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : Int(-M.at(n - 1, n - 1));
}

Int det(const IntMat& A) {
    assert(A.rows == A.cols);
    return bareiss_det(A);
}

Int det(const SymMat& Q) { return bareiss_det(Q.as_mat()); }

IntMat adjugate(const SymMat& Q) {
    // Faddeev-LeVerrier: integer-only for integer input.
    int n = Q.n;
    IntMat A = Q.as_mat();
    IntMat M = IntMat::identity(n);
    Int c = 1;
    for (int k = 1; k < n; k++) {
        IntMat AM = mat_mul(A, M);
        Int tr = 0;
        for (int i = 0; i < n; i++) tr += AM.at(i, i);
        assert(tr % k == 0);
        c = -tr / k;
        M = AM;
        for (int i = 0; i < n; i++) M.at(i, i) += c;
    }
    if (n == 0) return IntMat(0, 0);
    // adj(A) = (-1)^(n-1) * M_n where M_n = A*M_{n-1} + c_{n-1} I ... here M
    // already holds M_n after loop exits with k = n-1 processed; the final
    // scalar is not needed.  Sign bookkeeping:
    if ((n - 1) % 2 == 1)
        for (auto& x : M.a) x = -x;
    return M;
}

bool is_negative_definite(const SymMat& Q) {
    int n = Q.n;
    if (n == 0) return true;
    // leading principal minors of -Q must all be positive
    IntMat M(n, n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) M.at(i, j) = -Q.at(i, j);
    Int prev = 1;
    for (int k = 0; k < n; k++) {
        if (k > 0) {
            for (int i = k; i < n; i++)
                for (int j = k; j < n; j++) {
                    Int t = M.at(i, j) * M.at(k - 1, k - 1) - M.at(i, k - 1) * M.at(k - 1, j);
                    mpz_divexact(M.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                }
            prev = M.at(k - 1, k - 1);
        }
        if (M.at(k, k) <= 0) return false;  // k-th leading minor of -Q
    }
    return true;
}

// Exact signature via congruence diagonalization over Q.
int sym_signature(const SymMat& Qi) {
    int n = Qi.n;
    std::vector<Rat> M((size_t)n * n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) M[(size_t)i * n + j] = Rat(Qi.at(i, j));
    auto at = [&](int i, int j) -> Rat& { return M[(size_t)i * n + j]; };
    int sig = 0, done = 0;
    std::vector<int> alive(n);
    for (int i = 0; i < n; i++) alive[i] = i;
    while (!alive.empty()) {
        // pick a nonzero diagonal pivot if possible
        int pi = -1;
        for (int idx : alive)
            if (at(idx, idx) != 0) { pi = idx; break; }
        if (pi < 0) {
            // look for off-diagonal nonzero; if none, the rest is zero
            int ai = -1, aj = -1;
            for (size_t u = 0; u < alive.size() && ai < 0; u++)
                for (size_t v = u + 1; v < alive.size(); v++)
                    if (at(alive[u], alive[v]) != 0) { ai = alive[u]; aj = alive[v]; break; }
            if (ai < 0) break;
            // row/col add to make diagonal nonzero: e_ai += e_aj
            for (int idx : alive) at(ai, idx) += at(aj, idx);
            for (int idx : alive) at(idx, ai) += at(idx, aj);
            continue;
        }
        Rat p = at(pi, pi);
        sig += sgn(p);
        done++;
        std::vector<int> rest;
        for (int idx : alive)
            if (idx != pi) rest.push_back(idx);
        for (int i : rest) {
            if (at(i, pi) == 0) continue;
            Rat f = at(i, pi) / p;
            for (int j : rest) at(i, j) -= f * at(pi, j);
            at(i, pi) = 0;
        }
        alive = std::move(rest);
    }
    (void)done;
    return sig;
}

int sym_rank(const SymMat& Q) {
    // rank = (#positive) + (#negative) eigen-directions; reuse diagonalization
    // by computing rank of the matrix via fraction-free elimination.
    IntMat M = Q.as_mat();
    int n = M.rows, rank = 0;
    std::vector<Rat> W((size_t)n * n);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) W[(size_t)i * n + j] = Rat(M.at(i, j));
    auto at = [&](int i, int j) -> Rat& { return W[(size_t)i * n + j]; };
    int r = 0;
    for (int c = 0; c < n && r < n; c++) {
        int p = -1;
        for (int i = r; i < n; i++)
            if (at(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < n; j++) std::swap(at(r, j), at(p, j));
        for (int i = r + 1; i < n; i++) {
            if (at(i, c) == 0) continue;
            Rat f = at(i, c) / at(r, c);
            for (int j = c; j < n; j++) at(i, j) -= f * at(r, j);
        }
        r++;
        rank++;
    }
    return rank;
}

Int eval_form(const SymMat& Q, const std::vector<Int>& v) {
    Int s = 0;
    for (int i = 0; i < Q.n; i++) {
        if (v[i] == 0) continue;
        for (int j = 0; j < Q.n; j++) s += v[i] * Q.at(i, j) * v[j];
    }
    return s;
}

long eval_form_l(const std::vector<long>& Q, int n, const std::vector<long>& v) {
    long s = 0;
    for (int i = 0; i < n; i++) {
        if (!v[i]) continue;
        long row = 0;
        for (int j = 0; j < n; j++) row += Q[(size_t)i * n + j] * v[j];
        s += v[i] * row;
    }
    return s;
}

std::string mat_to_string(const IntMat& A) {
    std::ostringstream os;
    for (int i = 0; i < A.rows; i++) {
        os << (i ? "; " : "[");
        for (int j = 0; j < A.cols; j++) os << (j ? "," : "") << A.at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

} // namespace dbounds

#include "dbounds/links.hpp"
#include <algorithm>
#include <cassert>
#include <numeric>

namespace dbounds {
namespace {

using Vec = std::vector<Int>;

Int bilin(const IntMat& M, const Vec& x, const Vec& y) {
    Int s = 0;
    for (int i = 0; i < M.rows; i++) {
        if (x[i] == 0) continue;
        Int t = 0;
        for (int j = 0; j < M.rows; j++) t += M.at(i, j) * y[j];
        s += x[i] * t;
    }
    return s;
}

// Primitive integer basis of the rational kernel of C (rows are constraints).
std::vector<Vec> kernel_basis(std::vector<std::vector<Rat>> C, int n) {
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && rank < (int)C.size(); col++) {
        int piv = -1;
        for (int r = rank; r < (int)C.size(); r++)
            if (C[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(C[rank], C[piv]);
        Rat d = C[rank][col];
        for (int j = 0; j < n; j++) C[rank][j] /= d;
        for (int r = 0; r < (int)C.size(); r++) {
            if (r == rank || C[r][col] == 0) continue;
            Rat f = C[r][col];
            for (int j = 0; j < n; j++) C[r][j] -= f * C[rank][j];
        }
        pivot_col.push_back(col);
        rank++;
    }
    std::vector<char> is_piv(n, 0);
    for (int c : pivot_col) is_piv[c] = 1;
    std::vector<Vec> K;
    for (int col = 0; col < n; col++) {
        if (is_piv[col]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[col] = 1;
        for (int r = 0; r < rank; r++) v[pivot_col[r]] = -C[r][col];
        Int l = 1;
        for (auto& x : v) {
            x.canonicalize();
            l = lcm(l, Int(x.get_den()));
        }
        Vec w(n);
        Int g = 0;
        for (int j = 0; j < n; j++) {
            Rat t = v[j] * Rat(l);
            t.canonicalize();
            w[j] = t.get_num();
            g = gcd(g, w[j]);
        }
        if (g > 1)
            for (auto& x : w) x /= g;
        K.push_back(std::move(w));
    }
    return K;
}

struct GaussQ {
    // incremental rational row reduction for independence tests
    std::vector<std::vector<Rat>> rows;
    std::vector<int> pivot;

    bool add(const Vec& v) {
        std::vector<Rat> r(v.size());
        for (size_t i = 0; i < v.size(); i++) r[i] = Rat(v[i]);
        for (size_t k = 0; k < rows.size(); k++) {
            if (r[pivot[k]] == 0) continue;
            Rat f = r[pivot[k]] / rows[k][pivot[k]];
            for (size_t j = 0; j < r.size(); j++) r[j] -= f * rows[k][j];
        }
        for (size_t j = 0; j < r.size(); j++)
            if (r[j] != 0) {
                rows.push_back(r);
                pivot.push_back((int)j);
                return true;
            }
        return false;
    }
    void pop() {
        rows.pop_back();
        pivot.pop_back();
    }
};

struct Search {
    const IntMat* M;
    SymMat S;
    int a;
    long B;
    long best = 0, zmax = 0;
    long leaves = 0;
    static constexpr long kLeafBudget = 60000000;
    static constexpr size_t kCandCap = 4096;

    // vectors y = c.K, c in [-B,B]^d, first nonzero positive, y S y^T = 0;
    // incremental evaluation on the Gram matrix of the kernel basis
    std::vector<Vec> isotropic_in(const std::vector<Vec>& K) {
        int d = (int)K.size();
        std::vector<Vec> out;
        if (d == 0) return out;
        IntMat G(d, d);
        for (int i = 0; i < d; i++)
            for (int j = 0; j < d; j++) {
                Int s = 0;
                for (int u = 0; u < a; u++) {
                    if (K[i][u] == 0) continue;
                    for (int v = 0; v < a; v++) s += K[i][u] * S.at(u, v) * K[j][v];
                }
                G.at(i, j) = s;
            }
        std::vector<long> c(d, 0);
        std::vector<Int> dot(d, 0);
        Int q = 0;
        auto rec = [&](auto&& self, int depth, bool lead) -> void {
            if (out.size() >= kCandCap || leaves > kLeafBudget) return;
            if (depth == d) {
                leaves++;
                if (!lead && q == 0) {
                    Vec y(a, 0);
                    for (int i = 0; i < d; i++)
                        for (int u = 0; u < a; u++) y[u] += c[i] * K[i][u];
                    out.push_back(std::move(y));
                }
                return;
            }
            for (long v = lead ? 0 : -B; v <= B; v++) {
                c[depth] = v;
                Int dq = v * (2 * dot[depth] + v * G.at(depth, depth));
                q += dq;
                for (int j = depth + 1; j < d; j++) dot[j] += v * G.at(depth, j);
                self(self, depth + 1, lead && v == 0);
                q -= dq;
                for (int j = depth + 1; j < d; j++) dot[j] -= v * G.at(depth, j);
            }
            c[depth] = 0;
        };
        rec(rec, 0, true);
        // small sets first so genuine sublattices are extended early
        std::stable_sort(out.begin(), out.end(), [](const Vec& x, const Vec& y) {
            Int nx = 0, ny = 0;
            for (auto& v : x) nx += v * v;
            for (auto& v : y) ny += v * v;
            return nx < ny;
        });
        return out;
    }

    void extend(std::vector<Vec>& chosen, GaussQ& g) {
        best = std::max(best, (long)chosen.size());
        if (best >= zmax || leaves > kLeafBudget) return;
        std::vector<std::vector<Rat>> C;
        for (auto& b : chosen)
            for (int side = 0; side < 2; side++) {
                std::vector<Rat> row(a);
                for (int j = 0; j < a; j++) {
                    Int s = 0;
                    for (int i = 0; i < a; i++)
                        s += side ? b[i] * M->at(i, j) : M->at(j, i) * b[i];
                    row[j] = Rat(s);
                }
                C.push_back(std::move(row));
            }
        std::vector<Vec> K = chosen.empty()
                                 ? [&] {
                                       std::vector<Vec> id(a, Vec(a, 0));
                                       for (int i = 0; i < a; i++) id[i][i] = 1;
                                       return id;
                                   }()
                                 : kernel_basis(std::move(C), a);
        if ((long)K.size() <= best) return;  // any null sublattice lies in the kernel
        for (auto& y : isotropic_in(K)) {
            bool ok = true;
            for (auto& b : chosen)
                if (bilin(*M, b, y) != 0 || bilin(*M, y, b) != 0) { ok = false; break; }
            if (!ok || !g.add(y)) continue;
            chosen.push_back(y);
            extend(chosen, g);
            chosen.pop_back();
            g.pop();
            if (best >= zmax || leaves > kLeafBudget) return;
        }
    }
};

// Greedy unimodular size reduction of the symmetrized form; null vectors of
// the pairing tend to have much smaller coordinates in the reduced basis.
IntMat reduce_basis(const IntMat& M) {
    int a = M.rows;
    IntMat R = M;
    auto S = [&](int i, int j) { return R.at(i, j) + R.at(j, i); };
    auto row_op = [&](int i, int j, const Int& t) {
        // e_i <- e_i - t e_j
        for (int k = 0; k < a; k++) R.at(i, k) -= t * R.at(j, k);
        for (int k = 0; k < a; k++) R.at(k, i) -= t * R.at(k, j);
    };
    for (int pass = 0; pass < 64; pass++) {
        bool changed = false;
        for (int i = 0; i < a; i++)
            for (int j = 0; j < a; j++) {
                if (i == j || S(j, j) == 0) continue;
                // t = round(S_ij / S_jj)
                Int num = S(i, j), den = S(j, j);
                Int t = (2 * num + (num * den >= 0 ? den : -den)) / (2 * den);
                if (t == 0) continue;
                Int before = abs(S(i, i)) + abs(S(i, j));
                row_op(i, j, t);
                Int after = abs(S(i, i)) + abs(S(i, j));
                if (after < before) {
                    changed = true;
                } else {
                    row_op(i, j, -t);
                }
            }
        if (!changed) break;
    }
    return R;
}

} // namespace

TaylorBracket taylor_bracket(const SeifertMatrix& sm, long bound) {
    int a = sm.M.rows;
    if (a == 0) return {Rat(0), Rat(0)};

    Rat lo(0);
    for (long n : {2, 3, 4, 5, 6, 8, 10, 12})
        for (long k = 1; 2 * k <= n; k++) {
            if (std::gcd(k, n) != 1) continue;
            long s = tristram_levine(sm, k, n);
            Rat c(std::abs(s), 2);
            c.canonicalize();
            lo = std::max(lo, c);
        }

    IntMat R = reduce_basis(sm.M);
    Search sr;
    sr.M = &R;
    sr.S = SymMat(a);
    for (int i = 0; i < a; i++)
        for (int j = 0; j < a; j++) sr.S.at(i, j) = R.at(i, j) + R.at(j, i);
    assert(det(sr.S) != 0);
    sr.a = a;
    sr.B = bound;
    sr.zmax = a / 2;  // isotropic rank bound for a nondegenerate form

    std::vector<Vec> chosen;
    GaussQ g;
    sr.extend(chosen, g);

    Rat hi = Rat(a, 2) - sr.best;
    hi.canonicalize();
    assert(lo <= hi);
    return {lo, hi};
}

} // namespace dbounds

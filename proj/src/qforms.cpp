#include "dbounds/qforms.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>

namespace dbounds {

QuadraticForm make_form(const SymMat& Q) {
    if (!is_negative_definite(Q))
        throw std::runtime_error("make_form: not negative definite");
    Int d = det(Q);
    return {Q, abs(d)};
}

std::vector<QuadraticForm> enumerate_rank2_reduced(long r) {
    if (r < 1) throw std::runtime_error("enumerate_rank2_reduced: r < 1");
    std::vector<QuadraticForm> out;
    // 0 >= 2b >= a >= c, ac - b^2 = r  =>  a^2 >= ac - b^2 >= 3b^2 bounds a
    for (long a = -1; 3 * a * a <= 4 * r; a--)
        for (long b = 0; 2 * b >= a; b--) {
            long num = b * b + r;
            if (num % a != 0) continue;
            long c = num / a;
            if (c > a) continue;
            SymMat Q(2);
            Q.set(0, 0, a);
            Q.set(1, 1, c);
            Q.set(0, 1, b);
            out.push_back({Q, Int(r)});
        }
    std::sort(out.begin(), out.end(),
              [](const QuadraticForm& x, const QuadraticForm& y) { return x.Q < y.Q; });
    return out;
}

// ---- equivalence testing -------------------------------------------------

// All v with v^T P v = m for positive definite P (small rank), |m| modest.
static void short_vectors(const SymMat& P, const Int& m,
                          std::vector<std::vector<Int>>& out) {
    int n = P.n;
    // coordinate bounds from the adjugate: v_i^2 <= m * (P^{-1})_{ii} = m*adj_ii/det
    IntMat adj = adjugate(P);
    Int dp = det(P);
    std::vector<long> bound(n);
    for (int i = 0; i < n; i++) {
        Rat bi = Rat(m * adj.at(i, i), dp);
        double bd = bi.get_d();
        bound[i] = (long)std::floor(std::sqrt(std::max(0.0, bd)) + 1e-9) + 1;
    }
    std::vector<Int> v(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            if (eval_form(P, v) == m) out.push_back(v);
            return;
        }
        for (long x = -bound[i]; x <= bound[i]; x++) {
            v[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
}

bool forms_equivalent(const QuadraticForm& A, const QuadraticForm& B) {
    if (A.Q.n != B.Q.n || A.det_abs != B.det_abs) return false;
    int n = A.Q.n;
    if (n == 0) return true;
    SymMat P = sym_negate(A.Q), R = sym_negate(B.Q);
    // candidate images of each basis vector of R among vectors of P of the
    // same norm
    std::vector<std::vector<std::vector<Int>>> cands(n);
    for (int j = 0; j < n; j++) {
        short_vectors(P, R.at(j, j), cands[j]);
        if (cands[j].empty()) return false;
    }
    std::vector<const std::vector<Int>*> pick(n, nullptr);
    auto inner = [&](const std::vector<Int>& u, const std::vector<Int>& v) {
        Int s = 0;
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) s += u[i] * P.at(i, j) * v[j];
        return s;
    };
    auto rec = [&](auto&& self, int j) -> bool {
        if (j == n) return true;  // Gram match + equal det => basis
        for (const auto& v : cands[j]) {
            bool ok = true;
            for (int i = 0; i < j && ok; i++)
                if (inner(*pick[i], v) != R.at(i, j)) ok = false;
            if (!ok) continue;
            pick[j] = &v;
            if (self(self, j + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

// ---- Hermite-style enumeration ------------------------------------------

static std::vector<QuadraticForm> enumerate_raw(int rank, long det_abs) {
    std::vector<QuadraticForm> reps;
    if (rank == 0) {
        if (det_abs == 1) {
            SymMat Q(0);
            reps.push_back({Q, Int(1)});
        }
        return reps;
    }
    int n = rank;
    // Minkowski-reduced positive definite P has p11 <= ... <= pnn,
    // 2|pij| <= pii, and prod pii <= (4/3)^(n(n-1)/2) * det.
    double cap = std::pow(4.0 / 3.0, n * (n - 1) / 2.0) * (double)det_abs;
    std::vector<long> diag(n);
    std::vector<long> off(n * (n - 1) / 2);
    std::vector<QuadraticForm> found;

    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) pos.push_back({i, j});

    // one representative per basis-sign-flip orbit (p_ij -> e_i e_j p_ij):
    // keep only the lexicographically largest off-vector
    auto sign_canonical = [&]() {
        for (int mask = 1; mask < (1 << (n - 1)); mask++) {
            for (int t = 0; t < (int)off.size(); t++) {
                auto [i, j] = pos[t];
                int ei = i && (mask >> (i - 1) & 1) ? -1 : 1;
                int ej = j && (mask >> (j - 1) & 1) ? -1 : 1;
                long y = ei * ej * off[t];
                if (y > off[t]) return false;
                if (y < off[t]) break;
            }
        }
        return true;
    };
    // leading k-minor of the partial matrix, k = j+1
    auto leading_minor = [&](int j) {
        SymMat B(j + 1);
        for (int a = 0; a <= j; a++) B.at(a, a) = diag[a];
        for (int t = 0; t < (int)off.size(); t++)
            if (pos[t].second <= j) B.set(pos[t].first, pos[t].second, off[t]);
        return det(B);
    };
    auto finish = [&]() {
        if (!sign_canonical()) return;
        SymMat P(n);
        for (int i = 0; i < n; i++) P.at(i, i) = diag[i];
        for (int t = 0; t < (int)off.size(); t++)
            P.set(pos[t].first, pos[t].second, off[t]);
        found.push_back({sym_negate(P), Int(det_abs)});
    };
    auto offrec = [&](auto&& self, int t) -> void {
        if (t == (int)off.size()) {
            finish();
            return;
        }
        auto [i, j] = pos[t];
        long lim = diag[i] / 2;
        for (long x = -lim; x <= lim; x++) {
            off[t] = x;
            if (i == j - 1) {
                // leading block j+1 is now complete: Sylvester + Fischer prune
                Int mk = leading_minor(j);
                if (mk <= 0) continue;
                if (j == n - 1) {
                    if (mk != det_abs) continue;
                } else {
                    Int hi = mk;
                    for (int a = j + 1; a < n; a++) hi *= diag[a];
                    if (hi < det_abs) continue;
                }
            }
            self(self, t + 1);
        }
    };
    auto diagrec = [&](auto&& self, int i, double prod) -> void {
        if (i == n) {
            offrec(offrec, 0);
            return;
        }
        long lo = i ? diag[i - 1] : 1;
        for (long d = lo; prod * (double)d <= cap + 1e-9; d++) {
            diag[i] = d;
            double p2 = prod * (double)d;
            // remaining diagonals are >= d
            double rest = p2;
            for (int j = i + 1; j < n; j++) rest *= (double)d;
            if (rest > cap + 1e-9) break;
            self(self, i + 1, p2);
        }
    };
    diagrec(diagrec, 0, 1.0);

    // dedupe up to equivalence; bucket by cheap invariants (cokernel factors
    // and small representation numbers) so forms_equivalent runs rarely
    using Key = std::pair<std::vector<long>, std::vector<long>>;
    auto invariants = [&](const QuadraticForm& f) {
        Key k;
        k.first = cokernel(f.Q.as_mat()).factors;
        SymMat P = sym_negate(f.Q);
        for (long m = 1; m <= 6; m++) {
            std::vector<std::vector<Int>> vs;
            short_vectors(P, Int(m), vs);
            k.second.push_back((long)vs.size());
        }
        return k;
    };
    std::map<Key, std::vector<size_t>> buckets;
    for (const auto& f : found) {
        auto& idx = buckets[invariants(f)];
        bool dup = false;
        for (size_t i : idx)
            if (forms_equivalent(f, reps[i])) { dup = true; break; }
        if (dup) continue;
        idx.push_back(reps.size());
        reps.push_back(f);
    }
    return reps;
}

std::vector<QuadraticForm> enumerate_definite_forms(
    int rank, long det_abs, const std::optional<FinAbGroup>& present) {
    if (rank < 0 || rank > 4) throw std::runtime_error("rank unsupported");
    if (det_abs < 1) throw std::runtime_error("det must be positive");

    // per-key futures: the first caller computes outside the lock, concurrent
    // callers for other keys proceed, callers for the same key wait on it
    static std::map<std::pair<int, long>, std::shared_future<std::vector<QuadraticForm>>> cache;
    static std::mutex mu;
    std::shared_future<std::vector<QuadraticForm>> fut;
    std::packaged_task<std::vector<QuadraticForm>()> task;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find({rank, det_abs});
        if (it != cache.end()) {
            fut = it->second;
        } else {
            task = std::packaged_task<std::vector<QuadraticForm>()>(
                [rank, det_abs] { return enumerate_raw(rank, det_abs); });
            fut = task.get_future().share();
            cache[{rank, det_abs}] = fut;
        }
    }
    if (task.valid()) task();
    const std::vector<QuadraticForm>& all = fut.get();
    if (!present) return all;
    std::vector<QuadraticForm> out;
    for (const auto& f : all) {
        FinAbGroup G;
        if (f.Q.n > 0) {
            auto ck = cokernel(f.Q.as_mat());
            G.factors = ck.factors;
        }
        if (G == *present) out.push_back(f);
    }
    return out;
}

} // namespace dbounds

#include "dbounds/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <sstream>
#include <thread>

namespace dbounds {

std::vector<Factorization> factorizations(long h) {
    std::vector<Factorization> out;
    for (long t = 1; t * t <= h; t++)
        if (h % (t * t) == 0) out.push_back({h, h / (t * t), t});
    return out;
}

std::string Combination::describe(const FinAbGroup& H) const {
    std::ostringstream os;
    os << "s=" << fact.s << " t=" << fact.t;
    os << " T={";
    for (size_t i = 0; i < T.elems.size(); i++) {
        os << (i ? "," : "") << H.index_of(T.elems[i]);
    }
    os << "} Q=" << mat_to_string(Q.Q.as_mat());
    os << " rho=[";
    for (size_t i = 0; i < rho_images.size(); i++)
        os << (i ? "," : "") << quot.index_of(rho_images[i]);
    os << "] origin=" << H.index_of(origin);
    return os.str();
}

Rat d_rho_min(const CorrectionTable& table, const Subgroup& T,
              const FinAbGroup::Elt& origin, const Quotient& q,
              const FinAbGroup::Elt& coset) {
    const FinAbGroup& H = table.group;
    auto lift = H.elt_at(q.lift[q.Q.index_of(coset)]);
    bool first = true;
    Rat best;
    for (const auto& tau : T.elems) {
        auto x = H.add(origin, H.add(lift, tau));
        const Rat& v = table.d[H.index_of(x)];
        if (first || v < best) {
            best = v;
            first = false;
        }
    }
    return best;
}

std::pair<bool, std::optional<long>> check_single(
    const CorrectionTable& table, int b, const Combination& c,
    bool orbit_reduction) {
    auto st = sq_table(c.Q);
    const FinAbGroup& S = st.group;
    // rebuild quotient tables (cheap) so lifts are available
    Quotient q = quotient(table.group, c.T);
    long N = S.order();
    GroupHom rho{&S, &q.Q, c.rho_images};
    for (long i = 0; i < N; i++) {
        auto a = S.elt_at(i);
        if (orbit_reduction) {
            long ni = S.index_of(S.neg(a));
            if (ni < i) continue;  // handled by its partner
        }
        auto img = rho.apply(a);
        Rat lhs = st.sq[i] + b;
        Rat rhs = 4 * d_rho_min(table, c.T, c.origin, q, img);
        if (lhs > rhs) return {false, i};
    }
    return {true, std::nullopt};
}

ObstructionReport check_rational_ball(const CorrectionTable& table) {
    const FinAbGroup& H = table.group;
    long h = H.order();
    ObstructionReport rep;
    rep.b = 0;
    long t = 0;
    while (t * t < h) t++;
    if (t * t != h) {
        rep.obstructed = true;
        rep.note = "order not a perfect square";
        return rep;
    }
    auto subs = subgroups_of_order(H, t);
    for (long oi = 0; oi < h; oi++) {
        if (!table.spin[oi]) continue;
        auto origin = H.elt_at(oi);
        for (const auto& T : subs) {
            rep.combos_tried++;
            bool ok = true;
            for (const auto& beta : T.elems)
                if (table.d[H.index_of(H.add(origin, beta))] != 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                rep.obstructed = false;
                Combination w;
                w.fact = {h, 1, t};
                w.T = T;
                w.Q = QuadraticForm{SymMat(0), Int(1)};
                w.origin = origin;
                rep.witness = w;
                return rep;
            }
        }
    }
    rep.obstructed = true;
    return rep;
}

ObstructionReport check_bound(const CorrectionTable& table, int b,
                              const ObstructOptions& opt) {
    if (b == 0) return check_rational_ball(table);
    const FinAbGroup& H = table.group;
    long h = H.order();
    ObstructionReport rep;
    rep.b = b;

    struct Task {
        Factorization f;
        Subgroup T;
        QuadraticForm Q;
    };
    std::vector<Task> tasks;
    auto origins = H.two_torsion();
    // spin-marked origins only (= two-torsion by construction; assert)
    for (auto& o : origins) assert(table.spin[H.index_of(o)]);

    for (const auto& f : factorizations(h)) {
        auto subs = subgroups_of_order(H, f.t);
        for (const auto& T : subs) {
            auto q = quotient(H, T);
            auto forms = enumerate_definite_forms(b, f.s);
            for (const auto& Q : forms) {
                // pre-filter: invariant factors of coker(Q) must divide into
                // the tail of those of H/T
                FinAbGroup S;
                if (Q.Q.n > 0) S.factors = cokernel(Q.Q.as_mat()).factors;
                size_t k = S.factors.size(), m = q.Q.factors.size();
                if (k > m) continue;
                bool ok = true;
                for (size_t i = 0; i < k; i++)
                    if (q.Q.factors[m - k + i] % S.factors[i] != 0) ok = false;
                if (!ok) continue;
                tasks.push_back({f, T, Q});
            }
        }
    }

    std::atomic<long> next{0};
    std::atomic<long> tried{0};
    std::atomic<bool> found{false};
    std::mutex wmu;
    std::optional<Combination> witness;

    auto worker = [&]() {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= (long)tasks.size() || found.load()) return;
            const Task& tk = tasks[i];
            auto q = quotient(H, tk.T);
            FinAbGroup S;
            if (tk.Q.Q.n > 0) S.factors = cokernel(tk.Q.Q.as_mat()).factors;
            auto monos = homomorphisms(S, q.Q, true);
            for (const auto& rho : monos) {
                for (const auto& o : origins) {
                    if (found.load()) return;
                    tried.fetch_add(1);
                    Combination c{tk.f, tk.T, tk.Q, q.Q, rho.gen_images, o};
                    auto [pass, bad] = check_single(table, b, c, opt.orbit_reduction);
                    if (pass) {
                        std::lock_guard<std::mutex> lk(wmu);
                        if (!found.exchange(true)) witness = c;
                        return;
                    }
                }
            }
        }
    };

    int jobs = std::max(1, opt.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> th;
        for (int i = 0; i < jobs; i++) th.emplace_back(worker);
        for (auto& t : th) t.join();
    }
    rep.combos_tried = tried.load();
    if (witness) {
        rep.obstructed = false;
        rep.witness = witness;
    } else {
        rep.obstructed = true;
    }
    return rep;
}

} // namespace dbounds

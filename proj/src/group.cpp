#include "dbounds/group.hpp"
#include "dbounds/snf.hpp"
#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dbounds {

long FinAbGroup::order() const {
    long o = 1;
    for (long d : factors) o *= d;
    return o;
}

FinAbGroup::Elt FinAbGroup::add(const Elt& a, const Elt& b) const {
    Elt c(factors.size());
    for (size_t i = 0; i < factors.size(); i++) c[i] = (a[i] + b[i]) % factors[i];
    return c;
}

FinAbGroup::Elt FinAbGroup::neg(const Elt& a) const {
    Elt c(factors.size());
    for (size_t i = 0; i < factors.size(); i++) c[i] = a[i] ? factors[i] - a[i] : 0;
    return c;
}

FinAbGroup::Elt FinAbGroup::sub(const Elt& a, const Elt& b) const {
    return add(a, neg(b));
}

FinAbGroup::Elt FinAbGroup::mul(const Elt& a, long k) const {
    Elt c(factors.size());
    for (size_t i = 0; i < factors.size(); i++) {
        long v = (a[i] * (k % factors[i])) % factors[i];
        if (v < 0) v += factors[i];
        c[i] = v;
    }
    return c;
}

FinAbGroup::Elt FinAbGroup::reduce(const std::vector<long>& raw) const {
    assert(raw.size() == factors.size());
    Elt c(factors.size());
    for (size_t i = 0; i < factors.size(); i++) {
        long v = raw[i] % factors[i];
        if (v < 0) v += factors[i];
        c[i] = v;
    }
    return c;
}

bool FinAbGroup::is_zero(const Elt& a) const {
    return std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
}

long FinAbGroup::elt_order(const Elt& a) const {
    long o = 1;
    for (size_t i = 0; i < factors.size(); i++) {
        long g = std::gcd(a[i], factors[i]);
        o = std::lcm(o, factors[i] / g);
    }
    return o;
}

long FinAbGroup::index_of(const Elt& a) const {
    long idx = 0;
    for (size_t i = 0; i < factors.size(); i++) idx = idx * factors[i] + a[i];
    return idx;
}

FinAbGroup::Elt FinAbGroup::elt_at(long idx) const {
    Elt a(factors.size());
    for (size_t i = factors.size(); i-- > 0;) {
        a[i] = idx % factors[i];
        idx /= factors[i];
    }
    return a;
}

std::vector<FinAbGroup::Elt> FinAbGroup::elements() const {
    long n = order();
    std::vector<Elt> out;
    out.reserve(n);
    for (long i = 0; i < n; i++) out.push_back(elt_at(i));
    return out;
}

std::vector<FinAbGroup::Elt> FinAbGroup::two_torsion() const {
    std::vector<Elt> out;
    for (const auto& a : elements())
        if (is_zero(add(a, a))) out.push_back(a);
    return out;
}

std::string FinAbGroup::to_string() const {
    if (factors.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); i++)
        os << (i ? " + " : "") << "Z/" << factors[i];
    return os.str();
}

bool Subgroup::contains(const FinAbGroup&, const FinAbGroup::Elt& a) const {
    return std::binary_search(elems.begin(), elems.end(), a);
}

static Subgroup closure(const FinAbGroup& G,
                        const std::vector<FinAbGroup::Elt>& gens, long cap) {
    std::set<FinAbGroup::Elt> s;
    s.insert(G.zero());
    std::vector<FinAbGroup::Elt> frontier{G.zero()};
    while (!frontier.empty()) {
        std::vector<FinAbGroup::Elt> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                auto y = G.add(x, g);
                if (s.insert(y).second) {
                    next.push_back(y);
                    if (cap > 0 && (long)s.size() > cap) return {};
                }
            }
        frontier = std::move(next);
    }
    Subgroup sub;
    sub.elems.assign(s.begin(), s.end());
    return sub;
}

std::vector<Subgroup> subgroups_of_order(const FinAbGroup& G, long k) {
    std::vector<Subgroup> out;
    if (k <= 0 || G.order() % k != 0) return out;
    if (k == 1) {
        Subgroup s;
        s.elems.push_back(G.zero());
        out.push_back(s);
        return out;
    }
    // candidate generators: elements whose order divides k
    std::vector<FinAbGroup::Elt> cand;
    for (const auto& a : G.elements())
        if (!G.is_zero(a) && k % G.elt_order(a) == 0) cand.push_back(a);

    std::set<std::vector<FinAbGroup::Elt>> seen;
    int maxgens = G.rank();
    std::vector<FinAbGroup::Elt> gens;
    auto rec = [&](auto&& self, size_t start) -> void {
        if (!gens.empty()) {
            Subgroup s = closure(G, gens, k);
            if (!s.elems.empty() && (long)s.elems.size() == k)
                if (seen.insert(s.elems).second) out.push_back(s);
        }
        if ((int)gens.size() >= maxgens) return;
        for (size_t i = start; i < cand.size(); i++) {
            gens.push_back(cand[i]);
            self(self, i + 1);
            gens.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.elems < b.elems; });
    return out;
}

FinAbGroup::Elt GroupHom::apply(const FinAbGroup::Elt& a) const {
    auto y = dst->zero();
    for (size_t i = 0; i < a.size(); i++)
        y = dst->add(y, dst->mul(gen_images[i], a[i]));
    return y;
}

std::vector<GroupHom> homomorphisms(const FinAbGroup& S, const FinAbGroup& H,
                                    bool injective_only) {
    std::vector<GroupHom> out;
    int r = S.rank();
    // candidate image for generator i: any element killed by d_i
    std::vector<std::vector<FinAbGroup::Elt>> cands(r);
    auto helts = H.elements();
    for (int i = 0; i < r; i++)
        for (const auto& h : helts)
            if (H.is_zero(H.mul(h, S.factors[i]))) cands[i].push_back(h);

    std::vector<FinAbGroup::Elt> imgs(r);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == r) {
            GroupHom f{&S, &H, imgs};
            if (injective_only) {
                for (const auto& a : S.elements())
                    if (!S.is_zero(a) && H.is_zero(f.apply(a))) return;
            }
            out.push_back(f);
            return;
        }
        for (const auto& h : cands[i]) {
            imgs[i] = h;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return out;
}

Quotient quotient(const FinAbGroup& H, const Subgroup& sub) {
    // Present H/T as the cokernel of [diag(factors) | generators of T].
    int k = H.rank();
    int m = (int)sub.elems.size();
    IntMat R(k, k + m);
    for (int i = 0; i < k; i++) R.at(i, i) = H.factors[i];
    for (int j = 0; j < m; j++)
        for (int i = 0; i < k; i++) R.at(i, k + j) = sub.elems[j][i];
    auto sf = smith_normal_form(R);

    std::vector<long> ds;
    std::vector<int> pos;
    for (int i = 0; i < k; i++) {
        Int d = sf.D.at(i, i);
        assert(d > 0);
        if (d >= 2) {
            ds.push_back(d.get_si());
            pos.push_back(i);
        }
    }
    FinAbGroup Q;
    Q.factors = ds;  // SNF already yields the divisibility chain

    Quotient out;
    out.Q = Q;
    long n = H.order();
    out.proj.assign(n, -1);
    out.lift.assign(Q.order(), -1);
    for (long i = 0; i < n; i++) {
        auto a = H.elt_at(i);
        FinAbGroup::Elt c(ds.size());
        for (size_t t = 0; t < ds.size(); t++) {
            long s = 0;
            for (int j = 0; j < k; j++)
                s += Int(sf.U.at(pos[t], j) % ds[t]).get_si() * a[j];
            s %= ds[t];
            if (s < 0) s += ds[t];
            c[t] = s;
        }
        long qi = Q.index_of(c);
        out.proj[i] = qi;
        if (out.lift[qi] < 0) out.lift[qi] = i;
    }
    assert(std::count(out.lift.begin(), out.lift.end(), -1) == 0);
    return out;
}

FinAbGroup group_from_factors(const std::vector<long>& ds_in) {
    // Normalize arbitrary cyclic factors to the invariant factor chain.
    std::vector<long> ds;
    for (long d : ds_in)
        if (d >= 2) ds.push_back(d);
    // repeated pairwise (a,b) -> (gcd, lcm) until chain condition holds
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < ds.size(); i++)
            for (size_t j = i + 1; j < ds.size(); j++) {
                long g = std::gcd(ds[i], ds[j]);
                long l = ds[i] / g * ds[j];
                if (g != std::min(ds[i], ds[j]) || l != std::max(ds[i], ds[j])) {
                    ds[i] = g;
                    ds[j] = l;
                    changed = true;
                }
            }
        std::erase_if(ds, [](long d) { return d == 1; });
    }
    std::sort(ds.begin(), ds.end());
    FinAbGroup G;
    G.factors = ds;
    return G;
}

} // namespace dbounds

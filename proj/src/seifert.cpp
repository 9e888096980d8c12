#include "dbounds/dinv.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dbounds {

std::string SeifertData::to_string() const {
    std::ostringstream os;
    os << "Y(" << e;
    for (auto& [a, b] : pairs) os << ";(" << a << "," << b << ")";
    os << ")";
    return os.str();
}

Rat seifert_invariant(const SeifertData& y) {
    Rat s(y.e);
    for (auto& [a, b] : y.pairs) {
        Rat f(b, a);
        f.canonicalize();
        s += f;
    }
    return s;
}

SeifertData normalize_seifert(const SeifertData& y) {
    if (seifert_invariant(y) == 0)
        throw std::runtime_error("not a rational homology sphere");
    SeifertData out;
    out.e = y.e;
    for (auto& [a, b] : y.pairs) {
        if (a <= 1 || std::gcd(a, b) != 1)
            throw std::runtime_error("bad Seifert pair");
        long bb = b % a;
        if (bb < 0) bb += a;
        // (a, b) -> (a, b - k a) with e -> e + k
        out.e += (b - bb) / a;
        out.pairs.push_back({a, bb});
    }
    return out;
}

SeifertData reverse_orientation(const SeifertData& y) {
    SeifertData r;
    r.e = -y.e;
    for (auto& [a, b] : y.pairs) r.pairs.push_back({a, -b});
    return normalize_seifert(r);
}

std::vector<long> cf_allgeq2(long p, long q) {
    // p/q = a1 - 1/(a2 - 1/(...)), all ai >= 2; requires 0 < q < p
    if (!(0 < q && q < p)) throw std::runtime_error("cf_allgeq2: need 0 < q < p");
    std::vector<long> cf;
    while (q > 0) {
        long a = (p + q - 1) / q;  // ceil(p/q)
        cf.push_back(a);
        long p2 = q, q2 = a * q - p;
        p = p2;
        q = q2;
    }
    return cf;
}

PlumbingGraph plumbing_from_seifert(const SeifertData& y) {
    for (auto& [a, b] : y.pairs)
        if (!(0 < b && b < a)) throw std::runtime_error("plumbing: not normalized");
    long r = (long)y.pairs.size();
    PlumbingGraph g;
    g.weights.push_back(-y.e - r);
    for (auto& [a, b] : y.pairs) {
        auto cf = cf_allgeq2(a, a - b);
        int prev = 0;
        for (long w : cf) {
            g.weights.push_back(-w);
            int v = (int)g.weights.size() - 1;
            g.edges.push_back({prev, v});
            prev = v;
        }
    }
    int n = (int)g.weights.size();
    g.QG = SymMat(n);
    for (int i = 0; i < n; i++) g.QG.at(i, i) = g.weights[i];
    for (auto& [u, v] : g.edges) g.QG.set(u, v, Int(1));
    return g;
}

} // namespace dbounds

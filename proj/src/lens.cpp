#include "dbounds/dinv.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dbounds {

static Rat lens_d_one(long p, long q, long i) {
    // label window: 0 <= i < p + q
    if (p == 1) return Rat(0);
    long r = p % q;
    long j = i % q;
    Rat top(Int(p) * q - Int(2 * i + 1 - p - q) * Int(2 * i + 1 - p - q),
            Int(4) * p * q);
    top.canonicalize();
    Rat rest = (q == 1) ? Rat(0) : lens_d_one(q, r, j);
    return top - rest;
}

std::vector<Rat> lens_d(long p, long q) {
    if (p < 1) throw std::runtime_error("lens_d: p < 1");
    q %= p;
    if (q < 0) q += p;
    if (p == 1) return {Rat(0)};
    if (std::gcd(p, q) != 1) throw std::runtime_error("lens_d: gcd(p,q) != 1");
    std::vector<Rat> out(p);
    for (long i = 0; i < p; i++) out[i] = lens_d_one(p, q, i);
    return out;
}

long lens_conjugate(long p, long q, long i) {
    long j = (q - i - 1) % p;
    if (j < 0) j += p;
    return j;
}

CorrectionTable lens_correction_table(long p, long q) {
    q %= p;
    if (q < 0) q += p;
    auto d = lens_d(p, q);
    // spin origin: an integer fixed point of j(i) = q - i - 1 (mod p)
    long i0 = -1;
    std::vector<long> fps;
    if ((q - 1) % 2 == 0) fps.push_back(((q - 1) / 2) % p);
    if ((p + q - 1) % 2 == 0) fps.push_back(((p + q - 1) / 2) % p);
    if (fps.empty()) throw std::runtime_error("lens table: no spin label");
    i0 = *std::min_element(fps.begin(), fps.end());
    if (lens_conjugate(p, q, i0) != i0)
        throw std::runtime_error("lens table: spin label not j-fixed");

    CorrectionTable t;
    if (p > 1) t.group.factors = {p};
    t.d.resize(p);
    t.spin.resize(p);
    t.display_labels = std::vector<long>(p);
    for (long a = 0; a < p; a++) {
        long lab = (i0 + a) % p;
        t.d[a] = d[lab];
        (*t.display_labels)[a] = lab;
        t.spin[a] = (2 * a) % p == 0;
    }
    t.reversed = false;
    return t;
}

} // namespace dbounds

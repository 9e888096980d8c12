#include "dbounds/links.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

namespace dbounds {

Rat cf_value(const std::vector<long>& a) {
    // projective evaluation from the back: v = a_i - 1/v
    Int num = 1, den = 0;  // empty tail = infinity, so a_m - 1/inf = a_m
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        Int n2 = *it * num - den;
        den = num;
        num = n2;
    }
    assert(den != 0);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool digit_ok(long a, int idx, bool odd_pos_even, bool even_pos_even) {
    // idx is 0-based; 1-based position idx+1 is odd when idx is even
    bool must_even = (idx % 2 == 0) ? odd_pos_even : even_pos_even;
    return !must_even || a % 2 == 0;
}

bool dfs(long p, long q, int idx, int len_mod2, bool ope, bool epe,
         std::vector<long>& out, int depth_limit) {
    if (idx >= depth_limit) return false;
    if (q == 1) {
        if (digit_ok(p, idx, ope, epe) && !(idx == 0 && p == 0) &&
            (len_mod2 < 0 || (idx + 1) % 2 == len_mod2)) {
            out.push_back(p);
            return true;
        }
    }
    long f = p >= 0 ? p / q : -((-p + q - 1) / q);  // floor(p/q)
    long cand[6];
    int nc = 0;
    for (long a : {f, f + 1, f - 1, f + 2, f - 2, f + 3}) {
        if (!digit_ok(a, idx, ope, epe)) continue;
        if (idx == 0 && a == 0) continue;
        bool dup = false;
        for (int i = 0; i < nc; i++) dup |= (cand[i] == a);
        if (!dup && nc < 6) cand[nc++] = a;
    }
    for (int i = 0; i < nc; i++) {
        long a = cand[i];
        long p2 = q, q2 = a * q - p;
        if (q2 == 0) continue;
        if (q2 < 0) { p2 = -p2; q2 = -q2; }
        if (q2 >= q && q > 1) continue;  // only descend
        out.push_back(a);
        if (dfs(p2, q2, idx + 1, len_mod2, ope, epe, out, depth_limit))
            return true;
        out.pop_back();
    }
    return false;
}

} // namespace

std::vector<long> cf_parity(long p, long q, int len_mod2, bool odd_pos_even,
                            bool even_pos_even) {
    assert(q > 0 && std::gcd(std::abs(p), q) == 1);
    std::vector<long> out;
    for (int lim = 24; lim <= 96; lim *= 2) {
        if (dfs(p, q, 0, len_mod2, odd_pos_even, even_pos_even, out, lim)) {
            assert(cf_value(out) == Rat(p, q));
            return out;
        }
        out.clear();
    }
    assert(!"no parity-constrained expansion found");
    return out;
}

} // namespace dbounds

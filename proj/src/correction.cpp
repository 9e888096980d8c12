#include "dbounds/dinv.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace dbounds {

static CorrectionTable table_from_form(const SymMat& Q) {
    auto t = sq_table(make_form(Q));
    CorrectionTable ct;
    ct.group = t.group;
    long N = t.group.order();
    ct.d.resize(N);
    ct.spin.resize(N);
    Rat n4(Q.n, 4);
    n4.canonicalize();
    for (long i = 0; i < N; i++) {
        ct.d[i] = t.sq[i] / 4 + n4;
        ct.spin[i] = t.jfixed[i];
    }
    ct.reversed = false;
    return ct;
}

CorrectionTable negate_table(const CorrectionTable& t) {
    CorrectionTable r = t;
    for (auto& v : r.d) v = -v;
    r.reversed = !t.reversed;
    return r;
}

static CorrectionTable correction_table_raw(const SeifertData& yin) {
    SeifertData y = normalize_seifert(yin);
    auto g = plumbing_from_seifert(y);
    if (is_negative_definite(g.QG)) return table_from_form(g.QG);
    SeifertData rev = reverse_orientation(y);
    auto g2 = plumbing_from_seifert(rev);
    if (!is_negative_definite(g2.QG))
        throw std::runtime_error("no definite plumbing");
    return negate_table(table_from_form(g2.QG));
}

CorrectionTable correction_table(const SeifertData& yin) {
    SeifertData key = normalize_seifert(yin);
    static std::map<SeifertData, CorrectionTable> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto t = correction_table_raw(key);
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(key, t);
    return t;
}

CorrectionTable chain_correction_table(long p, long q) {
    q %= p;
    if (q < 0) q += p;
    if (p <= 1) {
        CorrectionTable t;
        t.d = {Rat(0)};
        t.spin = {1};
        return t;
    }
    auto cf = cf_allgeq2(p, q);
    int n = (int)cf.size();
    SymMat Q(n);
    for (int i = 0; i < n; i++) Q.at(i, i) = -cf[i];
    for (int i = 0; i + 1 < n; i++) Q.set(i, i + 1, Int(1));
    return table_from_form(Q);
}

} // namespace dbounds

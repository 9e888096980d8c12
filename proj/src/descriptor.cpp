#include "dbounds/links.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dbounds {

std::string LinkDescriptor::to_string() const {
    std::ostringstream os;
    if (twobridge) {
        os << "S(" << p << "," << q << ")";
    } else {
        os << "M(" << e << ";";
        for (size_t i = 0; i < pairs.size(); i++) {
            if (i) os << ",";
            os << pairs[i].first << "/" << pairs[i].second;
        }
        os << ")";
    }
    return os.str();
}

LinkDescriptor make_twobridge(long p, long q) {
    assert(p >= 1 && q >= 1 && std::gcd(p, q) == 1);
    LinkDescriptor d;
    d.twobridge = true;
    d.p = p;
    d.q = q % p;
    if (d.q == 0) d.q = 1;  // S(1,1) unknot
    return d;
}

LinkDescriptor make_montesinos(long e, std::vector<std::pair<long, long>> pairs) {
    for (auto& [a, b] : pairs) {
        assert(a > 1);
        assert(std::gcd(a, ((b % a) + a) % a) == 1);
    }
    LinkDescriptor d;
    d.e = e;
    d.pairs = std::move(pairs);
    return d;
}

LinkDescriptor parse_link(const std::string& s) {
    auto fail = [&]() -> LinkDescriptor {
        throw std::runtime_error(
            "bad link descriptor '" + s + "': expected S(p,q) or M(e;a1/b1,...)");
    };
    std::string t;
    for (char c : s)
        if (!isspace((unsigned char)c)) t += c;
    if (t.size() < 4 || t[1] != '(' || t.back() != ')') return fail();
    std::string body = t.substr(2, t.size() - 3);
    auto parse_long = [&](const std::string& x) {
        size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(x, &pos);
        } catch (...) {
            fail();
        }
        if (pos != x.size()) fail();
        return v;
    };
    if (t[0] == 'S') {
        auto comma = body.find(',');
        if (comma == std::string::npos) fail();
        long p = parse_long(body.substr(0, comma));
        long q = parse_long(body.substr(comma + 1));
        if (p < 1 || q < 1 || q > p || std::gcd(p, q) != 1) fail();
        return make_twobridge(p, q);
    }
    if (t[0] != 'M') return fail();
    auto semi = body.find(';');
    if (semi == std::string::npos) fail();
    LinkDescriptor d;
    d.e = parse_long(body.substr(0, semi));
    std::string rest = body.substr(semi + 1);
    std::istringstream is(rest);
    std::string item;
    while (std::getline(is, item, ',')) {
        auto slash = item.find('/');
        if (slash == std::string::npos) fail();
        long a = parse_long(item.substr(0, slash));
        long b = parse_long(item.substr(slash + 1));
        if (a < 2 || std::gcd(a, ((b % a) + a) % a) != 1) fail();
        d.pairs.emplace_back(a, b);
    }
    if (!rest.empty() && d.pairs.empty()) fail();
    return d;
}

SurfaceMode surface_mode(const LinkDescriptor& d) {
    for (auto& [a, b] : d.pairs)
        if (a % 2 == 0) return SurfaceMode::case2;
    return SurfaceMode::case1;
}

LinkDescriptor as_montesinos(const LinkDescriptor& d) {
    if (!d.twobridge) return d;
    LinkDescriptor m;
    if (d.q == 1) {
        m.e = d.p;  // band-only diagram, r = 0
        return m;
    }
    // S(p,q) = M(e;(q, eq+p)); take e = 0
    m.e = 0;
    m.pairs.emplace_back(d.q, d.p);
    return m;
}

LinkDescriptor canonical_montesinos(const LinkDescriptor& d) {
    LinkDescriptor m = as_montesinos(d);
    for (auto& [a, b] : m.pairs) {
        long r = ((b % a) + a) % a;
        m.e += (r - b) / a;  // (e, b) ~ (e+1, b+a)
        b = r;
        assert(b > 0);  // gcd(a,b)=1, a>1
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

LinkDescriptor normalize_montesinos(const LinkDescriptor& din, SurfaceMode mode) {
    LinkDescriptor m = as_montesinos(din);
    long r = (long)m.pairs.size();
    if (mode == SurfaceMode::case1) {
        for (auto& [a, b] : m.pairs) {
            assert(a % 2 == 1);
            long bb = ((b % a) + a) % a;
            m.e += (bb - b) / a;
            b = bb;
        }
        return m;
    }
    // case 2: smallest positive odd residue
    for (auto& [a, b] : m.pairs) {
        long bb = ((b % a) + a) % a;
        if (bb % 2 == 0) bb += a;  // a odd here, else gcd(a,b)=1 forces b odd
        assert(bb % 2 == 1);
        m.e += (bb - b) / a;
        b = bb;
    }
    if (((m.e - r) % 2 + 2) % 2 != 0) {
        // bump e and the minimal b_j/a_j among even a_j
        int best = -1;
        Rat best_ratio;
        for (int i = 0; i < (int)m.pairs.size(); i++) {
            if (m.pairs[i].first % 2 != 0) continue;
            Rat ratio(m.pairs[i].second, m.pairs[i].first);
            ratio.canonicalize();
            if (best < 0 || ratio < best_ratio) {
                best = i;
                best_ratio = ratio;
            }
        }
        assert(best >= 0);  // case 2 means some alpha is even
        m.e += 1;
        m.pairs[best].second += m.pairs[best].first;
    }
    return m;
}

LinkDescriptor reflect(const LinkDescriptor& d) {
    LinkDescriptor m = as_montesinos(d);
    long r = (long)m.pairs.size();
    LinkDescriptor out;
    out.e = r - m.e;
    for (auto& [a, b] : m.pairs) out.pairs.emplace_back(a, a - b);
    return out;
}

SeifertData double_cover(const LinkDescriptor& d) {
    if (d.twobridge) {
        if (d.q == 1) return SeifertData{d.p, {}};  // L(p,1), center weight -p
        return normalize_seifert(SeifertData{0, {{d.q, d.p}}});
    }
    SeifertData y{-d.e, d.pairs};
    if (!y.pairs.empty() && seifert_invariant(y) == 0)
        throw std::runtime_error("not a rational homology sphere");
    return normalize_seifert(y);
}

Int link_determinant(const LinkDescriptor& d) {
    if (d.twobridge) return d.p;
    SeifertData y{-d.e, d.pairs};
    Rat inv = seifert_invariant(y);
    Int prod = 1;
    for (auto& [a, b] : y.pairs) prod *= a;
    Rat det = Rat(prod) * inv;
    det.canonicalize();
    assert(det.get_den() == 1);
    Int h = det.get_num();
    return h >= 0 ? h : Int(-h);
}

CorrectionTable cover_table(const LinkDescriptor& d) {
    if (d.twobridge) return lens_correction_table(d.p, d.q);
    return correction_table(double_cover(d));
}

} // namespace dbounds

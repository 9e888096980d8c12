#include "dbounds/links.hpp"

#include "conventions.hpp"

#include <cassert>
#include <stdexcept>

namespace dbounds {

namespace {

// Wiring helper: ends are darts (>= 0) or pass-through terminals (< 0).
struct Builder {
    Diagram dg;
    std::vector<std::pair<int, int>> joins;
    int nterm = 0;

    int crossing(bool o13) {
        dg.over13.push_back((char)(o13 != conv::kMirror));
        return dg.n++;
    }
    int dart(int c, int s) { return 4 * c + s; }
    int term() { return -(++nterm); }
    void join(int a, int b) { joins.emplace_back(a, b); }

    Diagram finish() {
        dg.mate.assign(4 * dg.n, -1);
        std::vector<std::vector<int>> adj(4 * dg.n + nterm + 1);
        auto node = [&](int x) { return x >= 0 ? x : 4 * dg.n - x - 1; };
        for (auto& [a, b] : joins) {
            adj[node(a)].push_back(node(b));
            adj[node(b)].push_back(node(a));
        }
        for (int d = 0; d < 4 * dg.n; d++) {
            assert(adj[d].size() == 1);
            if (dg.mate[d] >= 0) continue;
            int prev = d, cur = adj[d][0];
            while (cur >= 4 * dg.n) {  // pass through terminals
                assert(adj[cur].size() == 2);
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
            }
            assert(cur != d);
            dg.mate[d] = cur;
            dg.mate[cur] = d;
        }
        return dg;
    }
};

// Closed tangle box; returns outside ends {TL, TR, BL, BR} (TL/BL are the
// inner, west-nested verticals).  Rows 0..3 top to bottom; odd letters act
// on rows 1,2 and even letters on rows 0,1; the west bends send rows 0,1
// up and rows 2,3 down.
struct BoxEnds {
    int tl, tr, bl, br;
    int first_crossing;
};

BoxEnds build_box(Builder& B, const std::vector<long>& word) {
    int cur[4];
    int w[4];
    for (int i = 0; i < 4; i++) cur[i] = w[i] = B.term();
    int first = -1;
    for (size_t t = 0; t < word.size(); t++) {
        int up = (t % 2 == 0) ? 1 : 0;  // upper row of the twisted pair
        long a = word[t];
        bool o13 = (a > 0) ? conv::kBraid13 : !conv::kBraid13;
        for (long i = 0; i < std::abs(a); i++) {
            int c = B.crossing(o13);
            if (first < 0) first = c;
            B.join(cur[up], B.dart(c, 3));
            B.join(cur[up + 1], B.dart(c, 0));
            cur[up] = B.dart(c, 2);
            cur[up + 1] = B.dart(c, 1);
        }
    }
    if (word.size() % 2 == 1) {  // Figure 1(b): stacked caps
        B.join(cur[0], cur[1]);
        B.join(cur[2], cur[3]);
    } else {  // Figure 1(c): nested caps
        B.join(cur[1], cur[2]);
        B.join(cur[0], cur[3]);
    }
    assert(first >= 0);
    return {w[1], w[0], w[2], w[3], first};
}

} // namespace

Diagram build_montesinos_diagram(long e,
                                 const std::vector<std::vector<long>>& words,
                                 bool sigma_black) {
    Builder B;
    B.dg.sigma_black = sigma_black;
    // vertical band on the left: e half-twists between strands W and E
    int wtop = B.term(), etop = B.term();
    int curw = wtop, cure = etop;
    int band_first = -1;
    bool bo13 = (e > 0) ? conv::kBand13 : !conv::kBand13;
    for (long i = 0; i < std::abs(e); i++) {
        int c = B.crossing(bo13);
        if (band_first < 0) band_first = c;
        B.join(curw, B.dart(c, 3));
        B.join(cure, B.dart(c, 2));
        curw = B.dart(c, 0);
        cure = B.dart(c, 1);
    }
    if (words.empty()) {
        if (e == 0) throw std::runtime_error("empty diagram");
        // close each strand around its own side; capping top to bottom
        // instead would untwist the band
        B.join(wtop, curw);
        B.join(etop, cure);
        Diagram dg = B.finish();
        dg.anchor = 4 * band_first + 2;
        return dg;
    }
    std::vector<BoxEnds> boxes;
    for (auto& w : words) boxes.push_back(build_box(B, w));
    for (size_t i = 0; i + 1 < boxes.size(); i++) {
        B.join(boxes[i].bl, boxes[i + 1].tl);
        B.join(boxes[i].br, boxes[i + 1].tr);
    }
    B.join(etop, boxes.front().tl);        // inner top cap
    B.join(wtop, boxes.front().tr);        // outer top cap
    B.join(cure, boxes.back().bl);         // inner bottom cap
    B.join(curw, boxes.back().br);         // outer bottom cap
    Diagram dg = B.finish();
    dg.anchor = 4 * boxes.front().first_crossing + 2;
    return dg;
}

Diagram build_diagram(const LinkDescriptor& d) {
    if (d.twobridge && d.p == 1) throw std::runtime_error("empty diagram");
    LinkDescriptor m = as_montesinos(d);
    SurfaceMode mode;
    if (m.pairs.empty())
        mode = (m.e % 2 == 0) ? SurfaceMode::case2 : SurfaceMode::case1;
    else
        mode = surface_mode(m);
    m = normalize_montesinos(m, mode);
    std::vector<std::vector<long>> words;
    for (auto& [a, b] : m.pairs) {
        std::vector<long> cf =
            (mode == SurfaceMode::case1)
                ? cf_parity(a, b, 0, /*odd_pos_even=*/true, false)
                : cf_parity(a, b, 1, false, /*even_pos_even=*/true);
        assert(cf[0] != 0);
        words.push_back(cf);
    }
    return build_montesinos_diagram(m.e, words,
                                    mode == SurfaceMode::case2);
}

} // namespace dbounds

#include "dbounds/links.hpp"

#include <cassert>
#include <stdexcept>

namespace dbounds {

Faces diagram_faces(const Diagram& dg) {
    int m = 4 * dg.n;
    assert(m > 0);
    Faces fc;
    fc.face.assign(m, -1);
    // face orbit: corner (c,k) -> corner at mate of dart (c,k+1)
    for (int start = 0; start < m; start++) {
        if (fc.face[start] >= 0) continue;
        int id = fc.nfaces++;
        int cur = start;
        do {
            fc.face[cur] = id;
            int c = cur / 4, k = cur % 4;
            cur = dg.mate[4 * c + (k + 1) % 4];
        } while (cur != start);
    }
    assert(fc.nfaces == dg.n + 2);  // connected planar diagram
    // 2-colour faces: opposite sides of every arc differ
    fc.black.assign(fc.nfaces, 0);
    std::vector<int> state(fc.nfaces, -1);
    std::vector<int> stack;
    state[fc.face[dg.anchor]] = 1;
    stack.push_back(fc.face[dg.anchor]);
    std::vector<std::vector<int>> adj(fc.nfaces);
    for (int d = 0; d < m; d++) {
        int c = d / 4, j = d % 4;
        int f1 = fc.face[4 * c + j];
        int f2 = fc.face[4 * c + (j + 3) % 4];
        assert(f1 != f2);
        adj[f1].push_back(f2);
        adj[f2].push_back(f1);
    }
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[f]) {
            if (state[g] < 0) {
                state[g] = 1 - state[f];
                stack.push_back(g);
            } else {
                assert(state[g] != state[f]);
            }
        }
    }
    for (int f = 0; f < fc.nfaces; f++) {
        assert(state[f] >= 0);
        fc.black[f] = (char)state[f];
    }
    return fc;
}

int component_count(const Diagram& dg) {
    int m = 4 * dg.n;
    std::vector<char> seen(m, 0);
    int orbits = 0;
    for (int start = 0; start < m; start++) {
        if (seen[start]) continue;
        orbits++;
        int cur = start;
        do {
            seen[cur] = 1;
            int d = dg.mate[cur];
            cur = 4 * (d / 4) + (d % 4 + 2) % 4;
        } while (cur != start);
    }
    assert(orbits % 2 == 0);
    return orbits / 2;
}

namespace {

struct Surface {
    Faces fc;
    int sigma_col;              // colour value of the spanning surface
    std::vector<int> eps;       // per face, +-1 on surface faces else 0
    std::vector<int> sig_slot;  // per crossing, slot parity of surface corners
    std::vector<int> dir;       // per dart: +1 leaving its crossing, -1 entering
};

int eta_sign(int loop_parity, bool over13) {
    return (loop_parity == (over13 ? 1 : 0)) ? 1 : -1;
}

Surface analyze(const Diagram& dg) {
    Surface s;
    s.fc = diagram_faces(dg);
    s.sigma_col = dg.sigma_black ? 1 : 0;
    auto& fc = s.fc;
    s.sig_slot.assign(dg.n, 0);
    for (int c = 0; c < dg.n; c++) {
        int js = (fc.black[fc.face[4 * c]] == s.sigma_col) ? 0 : 1;
        assert(fc.black[fc.face[4 * c + js]] == s.sigma_col);
        assert(fc.black[fc.face[4 * c + js + 2]] == s.sigma_col);
        s.sig_slot[c] = js;
    }
    // orientation classes of the surface discs: adjacent through a band
    // means opposite rotation sense; non-bipartite = non-orientable
    s.eps.assign(fc.nfaces, 0);
    for (int f = 0; f < fc.nfaces; f++) {
        if (fc.black[f] != s.sigma_col || s.eps[f] != 0) continue;
        std::vector<int> stack{f};
        s.eps[f] = 1;
        while (!stack.empty()) {
            int g = stack.back();
            stack.pop_back();
            for (int c = 0; c < dg.n; c++) {
                int a = fc.face[4 * c + s.sig_slot[c]];
                int b = fc.face[4 * c + s.sig_slot[c] + 2];
                if (a != g && b != g) continue;
                if (a == b)
                    throw std::runtime_error("spanning surface is not orientable");
                int h = (a == g) ? b : a;
                if (s.eps[h] == 0) {
                    s.eps[h] = -s.eps[g];
                    stack.push_back(h);
                } else if (s.eps[h] != -s.eps[g]) {
                    throw std::runtime_error("spanning surface is not orientable");
                }
            }
        }
    }
    // induced boundary orientation: the face orbit of a surface face with
    // eps=+1 traverses dart k+1 of corner (c,k) outward
    s.dir.assign(4 * dg.n, 0);
    for (int cor = 0; cor < 4 * dg.n; cor++) {
        int f = fc.face[cor];
        if (fc.black[f] != s.sigma_col) continue;
        int c = cor / 4, k = cor % 4;
        int d = 4 * c + (k + 1) % 4;
        assert(s.dir[d] == 0 && s.dir[dg.mate[d]] == 0);
        s.dir[d] = s.eps[f];
        s.dir[dg.mate[d]] = -s.eps[f];
    }
    for (int d = 0; d < 4 * dg.n; d++) {
        assert(s.dir[d] != 0);
        // strand runs through the crossing: one end in, one end out
        int c = d / 4;
        assert(s.dir[d] == -s.dir[4 * c + (d % 4 + 2) % 4]);
    }
    return s;
}

} // namespace

SeifertMatrix seifert_matrix_of(const Diagram& dg) {
    Surface s = analyze(dg);
    auto& fc = s.fc;
    // loop basis: one cycle per non-surface region, least-corner region dropped
    std::vector<int> idx(fc.nfaces, -1);
    int nl = 0, drop = -1;
    for (int cor = 0; cor < 4 * dg.n && drop < 0; cor++)
        if (fc.black[fc.face[cor]] != s.sigma_col) drop = fc.face[cor];
    for (int f = 0; f < fc.nfaces; f++)
        if (fc.black[f] != s.sigma_col && f != drop) idx[f] = nl++;
    IntMat G(nl, nl), A(nl, nl);
    auto gadd = [&](int f, int g, int v) {
        // Goeritz with zero row sums before deletion
        if (idx[f] >= 0 && idx[g] >= 0) G.at(idx[f], idx[g]) -= v;
        if (idx[f] >= 0) G.at(idx[f], idx[f]) += v;
    };
    for (int c = 0; c < dg.n; c++) {
        int jn = 1 - s.sig_slot[c];
        int f = fc.face[4 * c + jn];
        int g = fc.face[4 * c + jn + 2];
        if (f == g)
            throw std::runtime_error("degenerate crossing in checkerboard graph");
        int eta = eta_sign(jn, dg.over13[c]);
        gadd(f, g, eta);
        gadd(g, f, eta);
        // loops around f and g meet once in the band; the sign follows the
        // surface orientation of the disc at the wedge between them
        int b = fc.face[4 * c + (jn + 1) % 4];
        if (idx[f] >= 0 && idx[g] >= 0) {
            A.at(idx[f], idx[g]) -= s.eps[b];
            A.at(idx[g], idx[f]) += s.eps[b];
        }
    }
    SeifertMatrix out;
    out.M = IntMat(nl, nl);
    for (int i = 0; i < nl; i++)
        for (int j = 0; j < nl; j++) {
            Int v = G.at(i, j) + A.at(i, j);
            assert(v % 2 == 0);
            out.M.at(i, j) = v / 2;
        }
    return out;
}

long goeritz_signature_of(const Diagram& dg, bool type_sigma, int gl_sign) {
    // Gordon-Litherland on the other (generally non-orientable) surface:
    // form on loops around the surface-coloured regions, corrected by the
    // signed count of crossings whose in-flowing wedge has the chosen colour.
    Surface s = analyze(dg);
    auto& fc = s.fc;
    std::vector<int> idx(fc.nfaces, -1);
    int nl = 0, drop = -1;
    for (int cor = 0; cor < 4 * dg.n && drop < 0; cor++)
        if (fc.black[fc.face[cor]] == s.sigma_col) drop = fc.face[cor];
    for (int f = 0; f < fc.nfaces; f++)
        if (fc.black[f] == s.sigma_col && f != drop) idx[f] = nl++;
    SymMat G(nl);
    long corr = 0;
    for (int c = 0; c < dg.n; c++) {
        int js = s.sig_slot[c];
        int f = fc.face[4 * c + js];
        int g = fc.face[4 * c + js + 2];
        int eta = eta_sign(js, dg.over13[c]);
        if (f != g) {
            if (idx[f] >= 0) G.at(idx[f], idx[f]) += eta;
            if (idx[g] >= 0) G.at(idx[g], idx[g]) += eta;
            if (idx[f] >= 0 && idx[g] >= 0)
                G.set(idx[f], idx[g], G.at(idx[f], idx[g]) - eta);
        }
        int in_slot = -1;
        for (int k = 0; k < 4; k++)
            if (s.dir[4 * c + k] < 0 && s.dir[4 * c + (k + 1) % 4] < 0) in_slot = k;
        assert(in_slot >= 0);
        bool wedge_sigma = fc.black[fc.face[4 * c + in_slot]] == s.sigma_col;
        if (wedge_sigma == type_sigma) corr += eta;
    }
    return gl_sign * (sym_signature(G) - corr);
}

} // namespace dbounds


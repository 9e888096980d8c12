#include "dbounds/links.hpp"
#include <cassert>
#include <stdexcept>

namespace dbounds {

GenusReport genus_obstruction(const LinkDescriptor& d, const ObstructOptions& opt) {
    GenusReport r;
    if (d.twobridge && d.p == 1) {
        r.murasugi_bound = 0;
        r.conclusion = "inconclusive";
        return r;
    }
    Diagram dg = build_diagram(d);
    r.mu = component_count(dg);
    r.sigma = sym_signature([&] {
        SeifertMatrix sm = seifert_matrix_of(dg);
        SymMat S(sm.M.rows);
        for (int i = 0; i < S.n; i++)
            for (int j = 0; j < S.n; j++) S.at(i, j) = sm.M.at(i, j) + sm.M.at(j, i);
        return S;
    }());
    r.b = (int)std::abs(r.sigma);
    assert((r.b - r.mu + 1) % 2 == 0);
    r.murasugi_bound = Rat(r.b - r.mu + 1, 2);
    r.murasugi_bound.canonicalize();
    if (r.sigma == 0) {
        r.conclusion = "inconclusive";
        return r;
    }
    CorrectionTable t = cover_table(d);
    if (r.sigma > 0) {
        t = negate_table(t);
        r.reversed = true;
    }
    r.detail = check_bound(t, r.b, opt);
    r.obstructed = r.detail.obstructed;
    r.conclusion = r.obstructed
                       ? "g* > " + r.murasugi_bound.get_str()
                       : "inconclusive";
    return r;
}

SliceReport slice_check(const LinkDescriptor& d, const ObstructOptions& opt) {
    (void)opt;
    SliceReport r;
    if (d.twobridge && d.p == 1) {
        r.note = "unknot";
        return r;
    }
    int mu = d.twobridge ? (d.p % 2 ? 1 : 2) : component_count(build_diagram(d));
    if (mu != 1) throw std::runtime_error("slice check requires a knot");
    r.detail = check_rational_ball(cover_table(d));
    r.obstructed = r.detail.obstructed;
    r.note = r.obstructed ? "not slice" : "no obstruction found";
    return r;
}

} // namespace dbounds

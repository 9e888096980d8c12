#pragma once
#include "dbounds/obstruction.hpp"

namespace dbounds {

// S(p,q) or M(e; (a1,b1), ..., (ar,br)).
struct LinkDescriptor {
    bool twobridge = false;
    long p = 0, q = 0;                            // two-bridge
    long e = 0;                                   // Montesinos
    std::vector<std::pair<long, long>> pairs;

    bool operator==(const LinkDescriptor&) const = default;
    std::string to_string() const;
};

LinkDescriptor make_twobridge(long p, long q);
LinkDescriptor make_montesinos(long e, std::vector<std::pair<long, long>> pairs);
LinkDescriptor parse_link(const std::string& s);  // "S(p,q)" / "M(e;a/b,...)"

enum class SurfaceMode { case1, case2 };
SurfaceMode surface_mode(const LinkDescriptor& d);  // case1 iff all alpha odd

// Rewrite into the surface normal form: case1: 0 < b_i < a_i; case2: b_i the
// smallest positive odd residue, then the parity fix making e = r (mod 2).
LinkDescriptor normalize_montesinos(const LinkDescriptor& d, SurfaceMode mode);
LinkDescriptor as_montesinos(const LinkDescriptor& d);  // two-bridge -> M form
// b_i reduced into (0,a_i) with e absorbing the shifts; pairs sorted.
LinkDescriptor canonical_montesinos(const LinkDescriptor& d);
LinkDescriptor reflect(const LinkDescriptor& d);

SeifertData double_cover(const LinkDescriptor& d);
Int link_determinant(const LinkDescriptor& d);

// Continued fraction p/q = [a1,...,am] (minus convention) with digit parity
// constraints: constraint[i] set means a_{i+1} must be even; length parity
// fixed by len_mod2 (-1 = free).
std::vector<long> cf_parity(long p, long q, int len_mod2, bool odd_pos_even,
                            bool even_pos_even);
Rat cf_value(const std::vector<long>& a);

// Planar diagram as a combinatorial map. Darts 4c+s with s the counter-
// clockwise slot at crossing c: 0=SW, 1=SE, 2=NE, 3=NW. Corner s of a
// crossing is the region wedge between darts s and s+1 (mod 4).
struct Diagram {
    int n = 0;
    std::vector<int> mate;     // size 4n, arc pairing involution
    std::vector<char> over13;  // strand through slots 1,3 is the over strand
    int anchor = -1;           // corner id (4c+s) in a known black region
    bool sigma_black = false;  // spanning surface uses the black regions
};

struct Faces {
    int nfaces = 0;
    std::vector<int> face;   // per corner id
    std::vector<char> black; // per face
};

Diagram build_diagram(const LinkDescriptor& d);
// Explicit Figure-1 assembly: band of e half-twists plus one closed
// four-string braid word per tangle.
Diagram build_montesinos_diagram(long e,
                                 const std::vector<std::vector<long>>& words,
                                 bool sigma_black);
Faces diagram_faces(const Diagram& dg);
int component_count(const Diagram& dg);

struct SeifertMatrix {
    IntMat M;  // a x a; M + M^T is the symmetrized (Goeritz) form
};

SeifertMatrix seifert_matrix_of(const Diagram& dg);
SeifertMatrix seifert_matrix(const LinkDescriptor& d);

long signature(const LinkDescriptor& d);
long signature_goeritz(const LinkDescriptor& d);  // Gordon-Litherland backend
// Tristram-Levine signature at omega = exp(2 pi i k / n), n <= 24, omega != 1.
long tristram_levine(const LinkDescriptor& d, long k, long n);
long tristram_levine(const SeifertMatrix& m, long k, long n);

struct TaylorBracket {
    Rat lo, hi;
};
TaylorBracket taylor_bracket(const SeifertMatrix& m, long bound = 2);

struct LinkInvariants {
    int mu = 1;
    long sigma = 0;
    Int h;  // determinant |det(M + M^T)|
    std::optional<TaylorBracket> taylor;  // knots only
};
LinkInvariants link_invariants(const LinkDescriptor& d, long taylor_bound = 2);

struct GenusReport {
    int mu = 1;
    long sigma = 0;
    int b = 0;  // |sigma|
    Rat murasugi_bound;   // (|sigma| - mu + 1) / 2
    bool reversed = false;  // ran on the table of -Y
    bool obstructed = false;
    std::string conclusion;  // "g* > k" or "inconclusive"
    ObstructionReport detail;
};
GenusReport genus_obstruction(const LinkDescriptor& d,
                              const ObstructOptions& opt = {});

struct SliceReport {
    bool obstructed = false;
    std::string note;
    ObstructionReport detail;
};
SliceReport slice_check(const LinkDescriptor& d, const ObstructOptions& opt = {});

// Correction table of the branched double cover (lens recursion for
// two-bridge, plumbing otherwise).
CorrectionTable cover_table(const LinkDescriptor& d);

} // namespace dbounds

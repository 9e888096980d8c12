#pragma once
#include "dbounds/group.hpp"
#include "dbounds/matrix.hpp"
#include "dbounds/snf.hpp"

#include <optional>

namespace dbounds {

// Negative definite integral quadratic form.
struct QuadraticForm {
    SymMat Q;
    Int det_abs;
};

QuadraticForm make_form(const SymMat& Q);

// All reduced forms [[a,b],[b,c]], 0 >= 2b >= a >= c, ac - b^2 = r.
std::vector<QuadraticForm> enumerate_rank2_reduced(long r);

// Complete set of negative definite forms of the given rank (<= 4) and
// |det|, one per integral equivalence class.  With `present`, only forms
// whose discriminant group is isomorphic to it.  Results are cached.
std::vector<QuadraticForm> enumerate_definite_forms(
    int rank, long det_abs, const std::optional<FinAbGroup>& present = {});

bool forms_equivalent(const QuadraticForm& A, const QuadraticForm& B);

// Maximal-square data on the discriminant group of Q.
struct SqTable {
    QuadraticForm form;
    FinAbGroup group;
    Cokernel coker;
    // Labels are proj((c - c0)/2) shifted so that a j-fixed class sits at 0;
    // then the class involution c -> -c is plain negation and sq(a) = sq(-a).
    FinAbGroup::Elt shift;               // subtracted from raw labels
    std::vector<Rat> sq;                 // by group element index
    std::vector<char> jfixed;            // by group element index
    std::vector<std::vector<Int>> class_reps;  // maximizing covector per class

    long label_of(const std::vector<Int>& covector) const;
    long conj_index(long idx) const;     // class of -c for the class of c
};

SqTable sq_table(const QuadraticForm& Q);

// Characteristic lattice points of the Theorem-4.3-style region for a
// reduced rank-2 form, with class labels and squares.
struct OmegaPoint {
    long x, y;
    long class_index;
    Rat square;
};
struct OmegaData {
    std::vector<OmegaPoint> points;
    FinAbGroup group;
    std::vector<char> jfixed;
};
OmegaData omega_points_rank2(long a, long b, long c);

} // namespace dbounds

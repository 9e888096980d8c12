#pragma once
#include "dbounds/matrix.hpp"

namespace dbounds {

// Smith normal form: U * M * V = D with U, V unimodular and D diagonal,
// d_1 | d_2 | ... | d_k, all d_i >= 0.  Uinv, Vinv are maintained alongside
// so cokernel coordinates can be lifted back without a separate inversion.
struct SmithForm {
    IntMat D;
    IntMat U, Uinv;
    IntMat V, Vinv;
};

SmithForm smith_normal_form(const IntMat& M);

// Cokernel of a square nonsingular Q: Z^n / Q Z^n presented via SNF.
// factors lists the invariant factors >= 2; positions are the rows of U
// they come from, so proj(x)_i = (U x)_{pos_i} mod factors_i.
struct Cokernel {
    std::vector<long> factors;
    std::vector<int> pos;
    SmithForm snf;

    std::vector<long> project(const std::vector<Int>& x) const;
    std::vector<long> project_l(const std::vector<long>& x) const;
};

Cokernel cokernel(const IntMat& Q);

} // namespace dbounds

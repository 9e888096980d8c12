#pragma once
#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace dbounds {

using Int = mpz_class;
using Rat = mpq_class;

// Dense integer matrix, row-major.
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<Int> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
    Int& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const Int& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static IntMat identity(int n);
    bool operator==(const IntMat&) const = default;
};

IntMat mat_mul(const IntMat& A, const IntMat& B);
IntMat mat_transpose(const IntMat& A);

// Symmetric integer matrix (full storage; symmetry is an invariant).
struct SymMat {
    int n = 0;
    std::vector<Int> a;

    SymMat() = default;
    explicit SymMat(int n_) : n(n_), a((size_t)n_ * n_) {}
    Int& at(int i, int j) { return a[(size_t)i * n + j]; }
    const Int& at(int i, int j) const { return a[(size_t)i * n + j]; }
    void set(int i, int j, const Int& v) { at(i, j) = v; at(j, i) = v; }
    IntMat as_mat() const;

    bool operator==(const SymMat&) const = default;
    auto operator<=>(const SymMat&) const = default;
};

SymMat sym_from_mat(const IntMat& A);   // asserts symmetry
SymMat sym_negate(const SymMat& Q);

// Determinant by fraction-free (Bareiss) elimination with pivoting.
Int det(const IntMat& A);
Int det(const SymMat& Q);

// Adjugate matrix: A * adj(A) = det(A) * I.  O(n^4) via minors-free method.
IntMat adjugate(const SymMat& Q);

// Strict negative definiteness test via leading principal minors.
// Rank 0 counts as negative definite.
bool is_negative_definite(const SymMat& Q);

// Signature of a symmetric matrix (exact, handles degenerate forms).
int sym_signature(const SymMat& Q);
int sym_rank(const SymMat& Q);

// v^T Q v
Int eval_form(const SymMat& Q, const std::vector<Int>& v);
long eval_form_l(const std::vector<long>& Q, int n, const std::vector<long>& v);

std::string mat_to_string(const IntMat& A);

} // namespace dbounds

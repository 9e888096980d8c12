#pragma once
#include "dbounds/qforms.hpp"

#include <optional>
#include <utility>

namespace dbounds {

// Seifert fibered Y(e; (a1,b1), ..., (ar,br)).
struct SeifertData {
    long e = 0;
    std::vector<std::pair<long, long>> pairs;

    bool operator==(const SeifertData&) const = default;
    auto operator<=>(const SeifertData&) const = default;
    std::string to_string() const;
};

Rat seifert_invariant(const SeifertData& y);          // e + sum b_i/a_i
SeifertData normalize_seifert(const SeifertData& y);  // 0 < b_i < a_i
SeifertData reverse_orientation(const SeifertData& y);

struct PlumbingGraph {
    std::vector<long> weights;                  // vertex 0 = center
    std::vector<std::pair<int, int>> edges;
    SymMat QG;
};

PlumbingGraph plumbing_from_seifert(const SeifertData& y);

// negative continued fraction p/q = [a1,...,am] = a1 - 1/(a2 - ...), all >= 2
std::vector<long> cf_allgeq2(long p, long q);

std::vector<Rat> lens_d(long p, long q);        // indexed by i = 0..p-1
long lens_conjugate(long p, long q, long i);

struct CorrectionTable {
    FinAbGroup group;
    std::vector<Rat> d;             // by group element index; d(-x) = d(x)
    std::vector<char> spin;         // two-torsion subset (spin structures)
    bool reversed = false;          // values negated from the definite side
    // For lens tables: the original recursion label carried by each element.
    std::optional<std::vector<long>> display_labels;
};

CorrectionTable correction_table(const SeifertData& y);   // memoized
CorrectionTable lens_correction_table(long p, long q);    // via recursion
// Table of the chain plumbing of p/q (cross-oracle for the lens recursion).
CorrectionTable chain_correction_table(long p, long q);
CorrectionTable negate_table(const CorrectionTable& t);

} // namespace dbounds

#pragma once
#include "dbounds/dinv.hpp"

#include <optional>
#include <string>

namespace dbounds {

struct Factorization {
    long h, s, t;  // h = s * t^2
};

std::vector<Factorization> factorizations(long h);

// A full set of choices for the bounding test.
struct Combination {
    Factorization fact;
    Subgroup T;                              // subgroup of H of order t
    QuadraticForm Q;                         // rank b, |det| = s
    FinAbGroup quot;                         // H/T
    std::vector<FinAbGroup::Elt> rho_images; // images of coker(Q) generators
    FinAbGroup::Elt origin;                  // two-torsion element of H

    std::string describe(const FinAbGroup& H) const;
};

struct ObstructionReport {
    bool obstructed = true;
    int b = 0;
    std::optional<Combination> witness;
    long combos_tried = 0;
    std::string note;
};

struct ObstructOptions {
    bool orbit_reduction = true;
    int jobs = 1;
};

// min over tau in T of d(origin + lift + tau); lift = any preimage of the
// H/T element with the given quotient presentation.
Rat d_rho_min(const CorrectionTable& table, const Subgroup& T,
              const FinAbGroup::Elt& origin, const Quotient& q,
              const FinAbGroup::Elt& coset);

// Theorem-2.2 style test of one combination; returns (pass, failing class).
std::pair<bool, std::optional<long>> check_single(
    const CorrectionTable& table, int b, const Combination& c,
    bool orbit_reduction = true);

ObstructionReport check_bound(const CorrectionTable& table, int b,
                              const ObstructOptions& opt = {});

ObstructionReport check_rational_ball(const CorrectionTable& table);

} // namespace dbounds

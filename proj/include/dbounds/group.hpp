#pragma once
#include <string>
#include <vector>

namespace dbounds {

// Finite abelian group in invariant factor form: Z/d1 x ... x Z/dk,
// d1 | d2 | ... | dk, every d_i >= 2.  Elements are coordinate vectors.
struct FinAbGroup {
    std::vector<long> factors;

    long order() const;
    int rank() const { return (int)factors.size(); }
    bool trivial() const { return factors.empty(); }

    using Elt = std::vector<long>;

    Elt zero() const { return Elt(factors.size(), 0); }
    Elt add(const Elt& a, const Elt& b) const;
    Elt neg(const Elt& a) const;
    Elt sub(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, long k) const;
    Elt reduce(const std::vector<long>& raw) const;
    bool is_zero(const Elt& a) const;
    long elt_order(const Elt& a) const;

    // dense index <-> element (mixed radix), for table lookups
    long index_of(const Elt& a) const;
    Elt elt_at(long idx) const;

    std::vector<Elt> elements() const;
    std::vector<Elt> two_torsion() const;   // all a with 2a = 0 (incl. 0)

    std::string to_string() const;          // e.g. "Z/2 + Z/10"
    bool operator==(const FinAbGroup&) const = default;
};

// Subgroup given by its elements (closed under the ambient operations).
struct Subgroup {
    std::vector<FinAbGroup::Elt> elems;     // sorted lexicographically
    bool contains(const FinAbGroup& G, const FinAbGroup::Elt& a) const;
};

std::vector<Subgroup> subgroups_of_order(const FinAbGroup& G, long k);

// Homomorphism S -> H, by images of the standard generators of S.
struct GroupHom {
    const FinAbGroup* src;
    const FinAbGroup* dst;
    std::vector<FinAbGroup::Elt> gen_images;

    FinAbGroup::Elt apply(const FinAbGroup::Elt& a) const;
};

std::vector<GroupHom> homomorphisms(const FinAbGroup& S, const FinAbGroup& H,
                                    bool injective_only);

// Quotient H / <sub>: the group, plus projection and a section table.
struct Quotient {
    FinAbGroup Q;
    // projection table: index in H -> index in Q
    std::vector<long> proj;
    // section: index in Q -> index in H (first preimage)
    std::vector<long> lift;
};

Quotient quotient(const FinAbGroup& H, const Subgroup& sub);

// Abstract isomorphism type from a list of invariant-factor candidates
// (e.g. SNF diagonal entries); drops 1s, checks divisibility.
FinAbGroup group_from_factors(const std::vector<long>& ds);

} // namespace dbounds

#pragma once
#include "dbounds/links.hpp"

#include <iosfwd>

namespace dbounds {

// One output row of a scan, mirroring the table columns.
struct ScanRow {
    std::string link;
    int mu = 1;
    long sigma = 0;
    std::vector<long> h1;         // invariant factors of H1 of the cover
    std::optional<Rat> m;         // Taylor invariant, only when certified
    std::optional<Rat> genus_gt;  // verdict "g* > k"

    bool operator==(const ScanRow&) const = default;
};

enum class Format { text, csv, json };

struct ScanOptions {
    long taylor_bound = 2;
    int jobs = 1;
    bool orbit_reduction = true;
};

// Obstructed two-bridge links S(p,q), p <= pmax, 1 <= |sigma| <= sigma_max,
// one representative per class {q, q^-1 mod p} (mirrors are distinct).
std::vector<ScanRow> scan_twobridge(long pmax, long sigma_max,
                                    const ScanOptions& opt = {});
// Obstructed Montesinos links with three tangles, emin <= e <= emax,
// alpha_i <= alpha_max, 0 < det < det_max, 1 <= |sigma| <= sigma_max; one
// representative per permutation / (e,b) ~ (e+1,b+a) class.
std::vector<ScanRow> scan_montesinos(long emin, long emax, long alpha_max,
                                     long det_max, long sigma_max,
                                     const ScanOptions& opt = {});

// wide = include the mu and H1 columns (Montesinos-style tables).
std::string render(const std::vector<ScanRow>& rows, Format f, bool wide);

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace dbounds

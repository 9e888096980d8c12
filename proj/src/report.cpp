#include "dbounds/report.hpp"
#include "dbounds/dinv.hpp"
#include "dbounds/qforms.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

namespace dbounds {

namespace {

std::string rat_str(Rat r) {
    r.canonicalize();
    return r.get_str();
}

std::string h1_str(const std::vector<long>& f) {
    if (f.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < f.size(); i++)
        s += (i ? "+Z/" : "Z/") + std::to_string(f[i]);
    return s;
}

std::optional<ScanRow> scan_row(const LinkDescriptor& d, long sigma_max,
                                const ScanOptions& opt) {
    long sig = signature(d);
    if (sig == 0 || std::abs(sig) > sigma_max) return std::nullopt;
    ObstructOptions oo{opt.orbit_reduction, 1};
    GenusReport g = genus_obstruction(d, oo);
    if (!g.obstructed) return std::nullopt;
    ScanRow r;
    r.link = d.to_string();
    r.mu = g.mu;
    r.sigma = g.sigma;
    r.h1 = cover_table(d).group.factors;
    if (g.mu == 1) {
        auto inv = link_invariants(d, opt.taylor_bound);
        if (inv.taylor && inv.taylor->lo == inv.taylor->hi)
            r.m = inv.taylor->lo;
    }
    r.genus_gt = g.murasugi_bound;
    return r;
}

std::vector<ScanRow> run_scan(const std::vector<LinkDescriptor>& cands,
                              long sigma_max, const ScanOptions& opt) {
    std::vector<std::optional<ScanRow>> slots(cands.size());
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < cands.size(); i++)
            slots[i] = scan_row(cands[i], sigma_max, opt);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; t++)
            pool.emplace_back([&] {
                for (size_t i = next++; i < cands.size(); i = next++)
                    slots[i] = scan_row(cands[i], sigma_max, opt);
            });
        for (auto& th : pool) th.join();
    }
    std::vector<ScanRow> rows;
    for (auto& s : slots)
        if (s) rows.push_back(std::move(*s));
    return rows;
}

} // namespace

std::vector<ScanRow> scan_twobridge(long pmax, long sigma_max,
                                    const ScanOptions& opt) {
    std::vector<LinkDescriptor> cands;
    for (long p = 2; p <= pmax; p++)
        for (long q = 1; q < p; q++) {
            if (std::gcd(p, q) != 1) continue;
            long qi = 1;
            while (qi * q % p != 1) qi++;
            if (q > qi) continue;  // one representative per {q, q^-1}
            cands.push_back(make_twobridge(p, q));
        }
    return run_scan(cands, sigma_max, opt);
}

std::vector<ScanRow> scan_montesinos(long emin, long emax, long alpha_max,
                                     long det_max, long sigma_max,
                                     const ScanOptions& opt) {
    std::vector<std::pair<long, long>> tangles;
    for (long a = 2; a <= alpha_max; a++)
        for (long b = 1; b < a; b++)
            if (std::gcd(a, b) == 1) tangles.push_back({a, b});
    // sorted triples with 0 < b < a are canonical for permutation and
    // (e,b) ~ (e+1,b+a) equivalence
    std::vector<LinkDescriptor> cands;
    for (long e = emin; e <= emax; e++)
        for (size_t i = 0; i < tangles.size(); i++)
            for (size_t j = i; j < tangles.size(); j++)
                for (size_t k = j; k < tangles.size(); k++) {
                    auto d = make_montesinos(
                        e, {tangles[i], tangles[j], tangles[k]});
                    Int det = link_determinant(d);
                    if (det == 0 || det >= det_max) continue;
                    cands.push_back(d);
                }
    return run_scan(cands, sigma_max, opt);
}

std::string render(const std::vector<ScanRow>& rows, Format f, bool wide) {
    if (f == Format::json) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& r : rows) {
            nlohmann::json o;
            o["link"] = r.link;
            o["mu"] = r.mu;
            o["sigma"] = r.sigma;
            o["h1"] = h1_str(r.h1);
            o["m"] = r.m ? nlohmann::json(rat_str(*r.m)) : nlohmann::json();
            o["genus_gt"] =
                r.genus_gt ? nlohmann::json(rat_str(*r.genus_gt)) : nlohmann::json();
            arr.push_back(o);
        }
        return arr.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells;
    if (wide)
        cells.push_back({"link", "mu", "sigma", "h1", "m", "genus_gt"});
    else
        cells.push_back({"link", "sigma", "m", "genus_gt"});
    for (auto& r : rows) {
        std::string m = r.m ? rat_str(*r.m) : "";
        std::string g = r.genus_gt ? rat_str(*r.genus_gt) : "";
        if (wide)
            cells.push_back({r.link, std::to_string(r.mu),
                             std::to_string(r.sigma), h1_str(r.h1), m, g});
        else
            cells.push_back({r.link, std::to_string(r.sigma), m, g});
    }
    std::string out;
    if (f == Format::csv) {
        for (auto& row : cells) {
            for (size_t i = 0; i < row.size(); i++)
                out += (i ? "," : "") + row[i];
            out += "\n";
        }
        return out;
    }
    std::vector<size_t> w(cells[0].size(), 0);
    for (auto& row : cells)
        for (size_t i = 0; i < row.size(); i++) w[i] = std::max(w[i], row[i].size());
    for (auto& row : cells) {
        for (size_t i = 0; i < row.size(); i++) {
            if (i) out += "  ";
            out += row[i];
            if (i + 1 < row.size()) out += std::string(w[i] - row[i].size(), ' ');
        }
        out += "\n";
    }
    return out;
}

namespace {

const char* kUsage =
    "usage: dbnd <command> [flags]\n"
    "  dinv lens <p> <q>\n"
    "  dinv seifert <e> \"<a1/b1,a2/b2,...>\"\n"
    "  obstruct lens <p> <q> --b <n> [--reverse]\n"
    "  obstruct seifert <e> \"<a1/b1,...>\" --b <n> [--reverse]\n"
    "  link {info|genus|slice} \"<descriptor>\"\n"
    "  scan twobridge --pmax <n> [--sigma-max <n>]\n"
    "  scan montesinos [--emin <n>] [--emax <n>] [--alpha-max <n>]\n"
    "                  [--det-max <n>] [--sigma-max <n>]\n"
    "  reproduce {table1|table2|sec5-1|sec5-2}\n"
    "flags: --format text|csv|json  --jobs <n>  --taylor-bound <n>\n"
    "       --no-orbit-reduction\n"
    "descriptor grammar: S(p,q) with 0 < q < p coprime, or\n"
    "M(e;a1/b1,...,ar/br) with a_i > 1, gcd(a_i,b_i) = 1\n"
    "(sign convention: S(p,q) mirrored so the published scan signatures\n"
    "reproduce verbatim)\n";

struct Args {
    std::vector<std::string> pos;
    Format format = Format::text;
    int jobs = 1;
    long taylor_bound = 2;
    bool orbit_reduction = true;
    int b = -1;
    bool reverse = false;
    long pmax = 120, sigma_max = 4;
    long emin = -2, emax = 1, alpha_max = 5, det_max = 150;
};

long num(const std::string& s) {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::runtime_error("bad number '" + s + "'");
    return v;
}

Args parse_args(const std::vector<std::string>& argv) {
    Args a;
    if (const char* env = std::getenv("DEFINITE_BOUNDS_JOBS"))
        a.jobs = (int)num(env);
    for (size_t i = 0; i < argv.size(); i++) {
        const std::string& s = argv[i];
        auto val = [&]() -> const std::string& {
            if (++i >= argv.size())
                throw std::runtime_error("missing value for " + s);
            return argv[i];
        };
        if (s == "--format") {
            const std::string& v = val();
            if (v == "text") a.format = Format::text;
            else if (v == "csv") a.format = Format::csv;
            else if (v == "json") a.format = Format::json;
            else throw std::runtime_error("bad format '" + v + "'");
        } else if (s == "--jobs") a.jobs = (int)num(val());
        else if (s == "--taylor-bound") a.taylor_bound = num(val());
        else if (s == "--no-orbit-reduction") a.orbit_reduction = false;
        else if (s == "--b") a.b = (int)num(val());
        else if (s == "--reverse") a.reverse = true;
        else if (s == "--pmax") a.pmax = num(val());
        else if (s == "--sigma-max") a.sigma_max = num(val());
        else if (s == "--emin") a.emin = num(val());
        else if (s == "--emax") a.emax = num(val());
        else if (s == "--alpha-max") a.alpha_max = num(val());
        else if (s == "--det-max") a.det_max = num(val());
        else if (s.size() > 2 && s[0] == '-' && s[1] == '-')
            throw std::runtime_error("unknown flag " + s);
        else a.pos.push_back(s);
    }
    return a;
}

SeifertData parse_seifert(const std::string& es, const std::string& pairs) {
    // reuse the descriptor grammar for the tangle list
    LinkDescriptor d = parse_link("M(" + es + ";" + pairs + ")");
    return SeifertData{d.e, d.pairs};
}

std::string dlist(const CorrectionTable& t) {
    std::string s = "[";
    for (size_t i = 0; i < t.d.size(); i++)
        s += (i ? ", " : "") + rat_str(t.d[i]);
    return s + "]";
}

std::string info_line(const LinkDescriptor& d, const ScanOptions& opt) {
    auto inv = link_invariants(d, opt.taylor_bound);
    std::string s = d.to_string() + ": mu=" + std::to_string(inv.mu) +
                    " sigma=" + std::to_string(inv.sigma) + " H1=";
    s += d.twobridge && d.p == 1 ? "1" : h1_str(cover_table(d).group.factors);
    if (inv.taylor) {
        s += " taylor=[" + rat_str(inv.taylor->lo) + "," +
             rat_str(inv.taylor->hi) + "]";
        if (inv.taylor->lo == inv.taylor->hi) s += " m=" + rat_str(inv.taylor->lo);
    }
    return s;
}

std::string genus_line(const LinkDescriptor& d, const ObstructOptions& oo) {
    GenusReport g = genus_obstruction(d, oo);
    return d.to_string() + ": mu=" + std::to_string(g.mu) +
           " sigma=" + std::to_string(g.sigma) +
           " murasugi=" + rat_str(g.murasugi_bound) + " " + g.conclusion;
}

int run(const Args& a, std::ostream& out) {
    ScanOptions so{a.taylor_bound, a.jobs, a.orbit_reduction};
    ObstructOptions oo{a.orbit_reduction, 1};
    auto& pos = a.pos;
    auto need = [&](size_t n) {
        if (pos.size() != n) throw std::runtime_error("wrong argument count");
    };

    if (pos.empty()) throw std::runtime_error("no command");
    std::string sub = pos.size() > 1 ? pos[1] : "";
    if (pos[0] == "dinv" || pos[0] == "obstruct") {
        need(4);
        if (sub != "lens" && sub != "seifert")
            throw std::runtime_error("expected lens or seifert");
        CorrectionTable t = sub == "lens"
                                ? lens_correction_table(num(pos[2]), num(pos[3]))
                                : correction_table(parse_seifert(pos[2], pos[3]));
        if (pos[0] == "dinv") {
            out << dlist(t) << "\n";
            return 0;
        }
        if (a.b < 0) throw std::runtime_error("obstruct requires --b <n>");
        if (a.reverse) t = negate_table(t);
        auto rep = check_bound(t, a.b, oo);
        out << (rep.obstructed ? "obstructed" : "not obstructed") << "\n";
        return 0;
    }
    if (pos[0] == "link") {
        need(3);
        LinkDescriptor d = parse_link(pos[2]);
        if (sub == "info") out << info_line(d, so) << "\n";
        else if (sub == "genus") out << genus_line(d, oo) << "\n";
        else if (sub == "slice") {
            auto r = slice_check(d, oo);
            out << d.to_string() << ": " << (r.note.empty() ? "ok" : r.note)
                << "\n";
        } else throw std::runtime_error("unknown link subcommand");
        return 0;
    }
    if (pos[0] == "scan") {
        need(2);
        if (pos[1] == "twobridge")
            out << render(scan_twobridge(a.pmax, a.sigma_max, so), a.format,
                          false);
        else if (pos[1] == "montesinos")
            out << render(scan_montesinos(a.emin, a.emax, a.alpha_max,
                                          a.det_max, a.sigma_max, so),
                          a.format, true);
        else throw std::runtime_error("unknown scan subcommand");
        return 0;
    }
    if (pos[0] == "reproduce") {
        need(2);
        if (pos[1] == "table1") {
            out << render(scan_twobridge(120, 4, so), a.format, false);
        } else if (pos[1] == "table2") {
            out << render(scan_montesinos(-2, 1, 5, 150, 4, so), a.format, true);
        } else if (pos[1] == "sec5-1") {
            auto d = parse_link("M(1;3/1,3/1,5/2)");
            auto t = negate_table(cover_table(d));
            out << "d(-Y): " << dlist(t) << "\n";
            out << "b=2: "
                << (check_bound(t, 2, oo).obstructed ? "obstructed"
                                                     : "not obstructed")
                << "\n";
            out << genus_line(d, oo) << "\n";
        } else if (pos[1] == "sec5-2") {
            auto d = parse_link("M(1;5/2,5/2,5/2)");
            auto t = negate_table(cover_table(d));
            out << "d(-Y): " << dlist(t) << "\n";
            int nonneg = 0;
            for (auto& v : t.d) nonneg += v >= 0;
            out << "nonnegative terms: " << nonneg << "\n";
            for (size_t i = 0; i < t.d.size(); i++)
                if (t.spin[i]) out << "j-fixed d: " << rat_str(t.d[i]) << "\n";
            auto forms = enumerate_definite_forms(4, 25, t.group);
            out << "rank-4 det-25 forms presenting " << h1_str(t.group.factors)
                << ": " << forms.size() << "\n";
            out << genus_line(d, oo) << "\n";
            auto s = slice_check(d, oo);
            out << "slice: " << s.note << "\n";
        } else throw std::runtime_error("unknown reproduce target");
        return 0;
    }
    throw std::runtime_error("unknown command '" + pos[0] + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    try {
        return run(parse_args(args), out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n" << kUsage;
        return 2;
    }
}

} // namespace dbounds

// Command-line front end for the branched-cover counting library.
//
// Results go to stdout as canonical JSON (or CSV where offered); notes and
// errors go to stderr. Exit codes: 0 success, 2 bad usage or bad input,
// 3 internal cross-check failure (engine disagreement, fit mismatch).

#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hurwitz/chambers.hpp"
#include "hurwitz/class_algebra.hpp"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/intersection.hpp"
#include "hurwitz/json_io.hpp"
#include "hurwitz/numbers.hpp"
#include "hurwitz/patterns.hpp"

using namespace hurwitz;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitCrossCheck = 3;

void note(const std::string& message) {
    if (!message.empty()) std::fprintf(stderr, "note: %s\n", message.c_str());
}

// "3,1/2,2" -> (x, y) part lists.
std::pair<std::vector<long>, std::vector<long>> parse_point(const std::string& text) {
    const std::size_t semi = text.find('/');
    if (semi == std::string::npos)
        throw precondition_error("point: expected 'x1,..,xm/y1,..,yn'");
    const Partition x = parse_partition(text.substr(0, semi));
    const Partition y = parse_partition(text.substr(semi + 1));
    return {x.parts(), y.parts()};
}

// The character-sum engine, evaluated through a persistent table so that
// cached and freshly built tables are exercised by the same code path.
Rat h_from_table(const CharacterTable& table, const Partition& mu, const Partition& nu, long r,
                 long s) {
    Rat total(0);
    for (const auto& lam : table.parts) {
        const Rat ev = completed_cycle_eigenvalue(r + 1, lam);
        total += Rat(table.at(lam, mu)) * rat_pow(ev, s) * Rat(table.at(lam, nu));
    }
    Rat denom(1);
    for (long p : mu.parts()) denom *= Rat(p);
    for (long p : nu.parts()) denom *= Rat(p);
    return total / denom;
}

struct HurwitzArgs {
    long r = 1, s = 0;
    std::string mu_text, nu_text;
    std::string engine = "all";
    bool connected = false;
    std::string format = "json";
    std::string cache_dir = default_cache_dir();
};

int cmd_hurwitz(const HurwitzArgs& a) {
    const Partition mu = parse_partition(a.mu_text);
    const Partition nu = parse_partition(a.nu_text);
    if (mu.empty() || nu.empty()) throw precondition_error("profiles must be nonempty");
    if (mu.size() != nu.size())
        throw precondition_error("profile sizes differ: " + std::to_string(mu.size()) + " vs " +
                                 std::to_string(nu.size()));

    std::vector<std::string> engines;
    if (a.engine == "all")
        engines = a.connected ? std::vector<std::string>{"char", "patterns"}
                              : std::vector<std::string>{"char", "fock", "patterns"};
    else
        engines = {a.engine};
    if (a.connected)
        for (const auto& e : engines)
            if (e == "fock")
                throw precondition_error(
                    "engine 'fock' computes disconnected counts; use char, patterns, or all");

    std::map<std::string, Rat> values;
    for (const auto& engine : engines) {
        if (engine == "char") {
            if (a.connected) {
                values[engine] = h_connected(mu, nu, a.r, a.s);
            } else {
                std::string log;
                const CharacterTable table = load_or_build_table(mu.size(), a.cache_dir, &log);
                note(log);
                values[engine] = h_from_table(table, mu, nu, a.r, a.s);
            }
        } else if (engine == "fock") {
            values[engine] = h_via_operators(mu, nu, a.r, a.s);
        } else if (engine == "patterns") {
            values[engine] = a.connected ? connected_patterns(mu, nu, a.r, a.s)
                                         : hurwitz_patterns(mu, nu, a.r, a.s);
        } else {
            throw precondition_error("unknown engine '" + engine + "'");
        }
    }

    bool agreement = true;
    for (const auto& [name, v] : values) agreement = agreement && v == values.begin()->second;

    Json out;
    out["r"] = a.r;
    out["s"] = a.s;
    out["mu"] = partition_json(mu);
    out["nu"] = partition_json(nu);
    out["connected"] = a.connected;
    const std::optional<long> g = genus_of(mu, nu, a.r, a.s);
    if (g)
        out["genus"] = *g;
    else
        out["genus"] = nullptr;
    out["engines_used"] = engines;
    out["agreement"] = agreement;
    out["value"] = values.begin()->second.str();
    if (!agreement) {
        Json per;
        for (const auto& [name, v] : values) per[name] = v.str();
        out["values_by_engine"] = per;
    }

    if (a.format == "csv") {
        std::printf("r,s,mu,nu,connected,genus,value\n");
        std::printf("%ld,%ld,\"%s\",\"%s\",%s,%s,%s\n", a.r, a.s, mu.str().c_str(),
                    nu.str().c_str(), a.connected ? "true" : "false",
                    g ? std::to_string(*g).c_str() : "", values.begin()->second.str().c_str());
    } else {
        std::printf("%s\n", out.dump().c_str());
    }
    if (!agreement) {
        note("engines disagree");
        return kExitCrossCheck;
    }
    return kExitOk;
}

int cmd_completed_cycle(long r, const std::string& format) {
    const long m = r + 1;
    const std::map<Partition, Rat> coeffs = completed_cycle(m);
    if (format == "csv") {
        std::printf("partition,coefficient\n");
        for (const auto& [part, c] : coeffs)
            std::printf("\"%s\",%s\n", part.str().c_str(), c.str().c_str());
    } else {
        Json out;
        out["m"] = m;
        out["coefficients"] = class_element_json(coeffs);
        std::printf("%s\n", out.dump().c_str());
    }
    return kExitOk;
}

int cmd_cutjoin(long r, long weight, const std::string& format) {
    const long level = r + 1;
    const std::vector<QRule> rules = build_Q(level, weight);
    if (format == "text") {
        for (const auto& rule : rules) {
            std::string line = rule.coeff.str();
            for (long p : rule.multiply.parts()) line += " * p_" + std::to_string(p);
            for (long p : rule.derive.parts()) line += " * d/dp_" + std::to_string(p);
            std::printf("%s\n", line.c_str());
        }
    } else {
        Json out;
        out["level"] = level;
        out["weight_cap"] = weight;
        Json arr = Json::array();
        for (const auto& rule : rules) arr.push_back(qrule_json(rule));
        out["rules"] = std::move(arr);
        std::printf("%s\n", out.dump().c_str());
    }
    return kExitOk;
}

int cmd_chamber(long r, long s, const std::string& point_text) {
    const auto [x, y] = parse_point(point_text);
    const ChamberFit fit = fit_polynomial(r, s, x, y);
    const StructureReport report = structure_check(fit, fit.samples);

    Json out;
    out["r"] = r;
    out["s"] = s;
    out["m"] = fit.chamber.m;
    out["n"] = fit.chamber.n;
    Json wall_arr = Json::array();
    for (const auto& w : walls(fit.chamber.m, fit.chamber.n)) wall_arr.push_back(w.str());
    out["walls"] = std::move(wall_arr);
    out["signs"] = fit.chamber.signs;
    out["degree_bound"] = fit.degree_bound;
    out["parity_allowed"] = fit.parity_allowed;
    if (fit.parity_allowed)
        out["genus"] = fit.genus;
    else
        out["genus"] = nullptr;
    out["polynomial"] = poly_json(fit.poly);
    Json comps = Json::object();
    for (const auto& [deg, piece] : fit.components) comps[std::to_string(deg)] = poly_json(piece);
    out["components"] = std::move(comps);
    Json structure;
    structure["degrees_ok"] = report.degrees_ok;
    structure["parity_ok"] = report.parity_ok;
    structure["signs_ok"] = report.signs_ok;
    structure["observed_degrees"] = report.observed_degrees;
    structure["detail"] = report.detail;
    structure["ok"] = report.ok();
    out["structure"] = std::move(structure);
    std::printf("%s\n", out.dump().c_str());
    if (!report.ok()) {
        note("structure check failed: " + report.detail);
        return kExitCrossCheck;
    }
    return kExitOk;
}

int cmd_wallcross(long r, long s, int m, int n, const std::string& wall_text,
                  const std::string& point_text, long num_points) {
    const std::size_t semi = wall_text.find('/');
    if (semi == std::string::npos) throw precondition_error("wall: expected 'I/J' index lists");
    Wall wall{parse_index_list(wall_text.substr(0, semi)),
              parse_index_list(wall_text.substr(semi + 1))};
    const std::vector<Wall> all = walls(m, n);
    std::size_t wall_index = all.size();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == wall) wall_index = i;
    if (wall_index == all.size())
        throw precondition_error("wall " + wall.str() + " is not canonical for m=" +
                                 std::to_string(m) + ", n=" + std::to_string(n));

    const auto [x, y] = parse_point(point_text);
    if (static_cast<int>(x.size()) != m || static_cast<int>(y.size()) != n)
        throw precondition_error("witness point does not have m x-parts and n y-parts");
    const std::optional<Chamber> c1 = chamber_of(x, y);
    if (!c1) throw precondition_error("witness point lies on a wall");
    if (c1->signs[wall_index] < 0)
        throw precondition_error("witness point must lie on the positive side of the wall");
    Chamber c2 = *c1;
    c2.signs[wall_index] = -1;

    const WallCrossReport report =
        check_wall_crossing(r, s, wall, *c1, c2, static_cast<std::size_t>(num_points));

    Json out;
    out["r"] = r;
    out["s"] = s;
    out["m"] = m;
    out["n"] = n;
    out["wall"] = wall.str();
    out["difference"] = poly_json(report.difference);
    out["points_checked"] = report.points_checked;
    out["matched"] = report.matched;
    out["detail"] = report.detail;
    std::printf("%s\n", out.dump().c_str());
    if (!report.matched) {
        note("wall crossing mismatch: " + report.detail);
        return kExitCrossCheck;
    }
    return kExitOk;
}

int cmd_brackets(long r, long g, long n, const std::string& format) {
    const BracketTable table = extract_brackets(r, g, n);
    if (format == "csv") {
        std::printf("%s", bracket_rows_csv(r, table).c_str());
    } else {
        for (const Json& row : bracket_rows_json(r, table))
            std::printf("%s\n", row.dump().c_str());
    }
    return kExitOk;
}

int cmd_series(const std::string& which, long r, long weight, long udeg, long border) {
    Json out;
    out["which"] = which;
    out["r"] = r;
    out["weight_cap"] = weight;
    if (which == "F") {
        out["terms"] = ppoly_json(F_series(r, weight));
    } else if (which == "G") {
        out["u_cap"] = udeg;
        out["terms"] = ppoly_json(G_series(r, weight, udeg));
    } else if (which == "H") {
        out["beta_order"] = border;
        const auto rules = build_Q(r + 1, weight);
        PPoly<Rat> seed;
        for (long i = 1; i <= weight; ++i) seed += PPoly<Rat>::p(i);
        const auto slices = evolve_Q(rules, seed, border);
        Json orders = Json::array();
        for (const auto& slice : slices) orders.push_back(ppoly_json(slice));
        out["orders"] = std::move(orders);
    } else {
        throw precondition_error("series: --which must be F, G, or H");
    }
    std::printf("%s\n", out.dump().c_str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations for branched-cover counts"};
    app.require_subcommand(1);

    HurwitzArgs ha;
    CLI::App* hurwitz_cmd =
        app.add_subcommand("hurwitz", "Count covers with the selected engines and cross-check");
    hurwitz_cmd->add_option("--r", ha.r, "Cycle width parameter (>= 1)")->required();
    hurwitz_cmd->add_option("--s", ha.s, "Number of extra insertions (>= 0)")->required();
    hurwitz_cmd->add_option("--mu", ha.mu_text, "Profile over 0, e.g. 2,1")->required();
    hurwitz_cmd->add_option("--nu", ha.nu_text, "Profile over infinity")->required();
    hurwitz_cmd->add_option("--engine", ha.engine, "char | fock | patterns | all")
        ->check(CLI::IsMember({"char", "fock", "patterns", "all"}))
        ->capture_default_str();
    hurwitz_cmd->add_flag("--connected", ha.connected, "Count connected covers only");
    hurwitz_cmd->add_option("--format", ha.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    hurwitz_cmd->add_option("--cache-dir", ha.cache_dir, "Character table cache directory")
        ->capture_default_str();

    long cc_r = 1;
    std::string cc_format = "json";
    CLI::App* cc_cmd = app.add_subcommand("completed-cycle",
                                          "Expand the completed (r+1)-cycle class");
    cc_cmd->add_option("--r", cc_r, "Cycle width parameter (>= 1)")->required();
    cc_cmd->add_option("--format", cc_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    long cj_r = 1, cj_weight = 6;
    std::string cj_format = "json";
    CLI::App* cj_cmd =
        app.add_subcommand("cutjoin", "Emit the level-(r+1) cut-and-join operator rules");
    cj_cmd->add_option("--r", cj_r, "Cycle width parameter (>= 1)")->required();
    cj_cmd->add_option("--weight", cj_weight, "Weight cap for the rules")->required();
    cj_cmd->add_option("--format", cj_format, "json | text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    long ch_r = 1, ch_s = 0;
    std::string ch_point;
    CLI::App* ch_cmd =
        app.add_subcommand("chamber", "Fit and shape-check the chamber of a witness point");
    ch_cmd->add_option("--r", ch_r, "Cycle width parameter (>= 1)")->required();
    ch_cmd->add_option("--s", ch_s, "Number of extra insertions (>= 0)")->required();
    ch_cmd->add_option("--point", ch_point, "Witness point 'x1,..,xm/y1,..,yn'")->required();

    long wc_r = 1, wc_s = 0, wc_points = 6;
    int wc_m = 2, wc_n = 2;
    std::string wc_wall, wc_point;
    CLI::App* wc_cmd =
        app.add_subcommand("wallcross", "Compare a crossing difference with its closed form");
    wc_cmd->add_option("--r", wc_r, "Cycle width parameter (>= 1)")->required();
    wc_cmd->add_option("--s", wc_s, "Number of extra insertions (>= 0)")->required();
    wc_cmd->add_option("--m", wc_m, "Number of x-parts")->required();
    wc_cmd->add_option("--n", wc_n, "Number of y-parts")->required();
    wc_cmd->add_option("--wall", wc_wall, "Wall as 'I/J', e.g. 1/1")->required();
    wc_cmd->add_option("--point", wc_point, "Witness point 'x.../y...' with x_I > y_J, off every wall")
        ->required();
    wc_cmd->add_option("--points", wc_points, "Lattice points to check")->capture_default_str();

    long br_r = 1, br_g = 0, br_n = 1;
    std::string br_format = "json";
    CLI::App* br_cmd =
        app.add_subcommand("brackets", "Extract the bracket table for fixed genus and markings");
    br_cmd->add_option("--r", br_r, "Cycle width parameter (>= 1)")->required();
    br_cmd->add_option("--g", br_g, "Genus (>= 0)")->required();
    br_cmd->add_option("--n", br_n, "Number of markings (>= 1)")->required();
    br_cmd->add_option("--format", br_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    std::string se_which = "F";
    long se_r = 1, se_weight = 5, se_udeg = 3, se_border = 2;
    CLI::App* se_cmd = app.add_subcommand("series", "Emit a generating series under exact caps");
    se_cmd->add_option("--which", se_which, "F | G | H")->required();
    se_cmd->add_option("--r", se_r, "Cycle width parameter (>= 1)")->required();
    se_cmd->add_option("--weight", se_weight, "Weight cap")->required();
    se_cmd->add_option("--udeg", se_udeg, "Deformation degree cap (G only)")
        ->capture_default_str();
    se_cmd->add_option("--border", se_border, "Evolution order cap (H only)")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (hurwitz_cmd->parsed()) return cmd_hurwitz(ha);
        if (cc_cmd->parsed()) return cmd_completed_cycle(cc_r, cc_format);
        if (cj_cmd->parsed()) return cmd_cutjoin(cj_r, cj_weight, cj_format);
        if (ch_cmd->parsed()) return cmd_chamber(ch_r, ch_s, ch_point);
        if (wc_cmd->parsed())
            return cmd_wallcross(wc_r, wc_s, wc_m, wc_n, wc_wall, wc_point, wc_points);
        if (br_cmd->parsed()) return cmd_brackets(br_r, br_g, br_n, br_format);
        if (se_cmd->parsed()) return cmd_series(se_which, se_r, se_weight, se_udeg, se_border);
    } catch (const precondition_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const consistency_error& e) {
        std::fprintf(stderr, "cross-check failure: %s\n", e.what());
        return kExitCrossCheck;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "internal error: %s\n", e.what());
        return kExitCrossCheck;
    }
    return kExitUsage;
}

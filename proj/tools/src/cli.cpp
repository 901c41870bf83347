#include "narayana/cli.hpp"

#include "narayana/posets.hpp"
#include "narayana/shelling.hpp"
#include "narayana/tableaux.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

namespace narayana::cli {

namespace {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Report report;
    int code = kExitPass;
};

void require_range(const char* name, long value, long lo, long hi) {
    if (value < lo || value > hi) {
        throw UsageError(std::string(name) + " must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

DyckPath parse_reference(const std::string& text, unsigned n) {
    DyckPath w;
    try {
        w = DyckPath::parse(text);
    } catch (const std::exception& e) {
        throw UsageError("--ref-path: " + std::string(e.what()));
    }
    if (w.semilength() != n) throw UsageError("--ref-path must have semilength " + std::to_string(n));
    return w;
}

// --------------------------------------------------------------- narayana

Outcome cmd_narayana(unsigned n) {
    require_range("--n", n, 1, 60);
    Outcome o;
    o.report.command = "narayana";
    o.report.parameters["n"] = n;
    o.report.verdict = "value";
    Json row = Json::array();
    for (unsigned k = 0; k < n; ++k) row.push_back(integer_to_json(narayana(n, k)));
    o.report.payload["row"] = row;
    o.report.payload["sum"] = integer_to_json(catalan(n));
    return o;
}

void text_narayana(const Report& r, std::ostream& out) {
    std::vector<std::string> cells;
    for (const auto& x : r.payload["row"]) cells.push_back(integer_from_json(x).get_str());
    out << join(cells, ", ") << " (sum " << integer_from_json(r.payload["sum"]).get_str() << ")\n";
}

void csv_narayana(const Report& r, std::ostream& out) {
    out << "k,value\n";
    unsigned k = 0;
    for (const auto& x : r.payload["row"]) out << k++ << ',' << integer_from_json(x).get_str() << '\n';
    out << "sum," << integer_from_json(r.payload["sum"]).get_str() << '\n';
}

// -------------------------------------------------------------- qnarayana

inline constexpr unsigned kEnumerateMaxN = 12;

QPoly route_value(const std::string& route, unsigned n, unsigned k) {
    if (route == "closed") return q_narayana_closed(n, k);
    if (route == "schur-ssyt") return q_narayana_schur(n, k, SchurRoute::ssyt);
    if (route == "schur-hook") return q_narayana_schur(n, k, SchurRoute::hook);
    const auto joint = joint_q(n, Statistic::parse("des"));
    const auto it = joint.find(k);
    return it == joint.end() ? QPoly{} : it->second;
}

Outcome cmd_qnarayana(unsigned n, unsigned k, const std::string& route) {
    require_range("--n", n, 1, 60);
    if ((route == "enumerate" || route == "schur-ssyt") && n > kEnumerateMaxN) {
        throw UsageError("route " + route + " is limited to n <= " + std::to_string(kEnumerateMaxN));
    }
    Outcome o;
    o.report.command = "qnarayana";
    o.report.parameters["n"] = n;
    o.report.parameters["k"] = k;
    o.report.parameters["route"] = route;
    if (route != "all") {
        o.report.verdict = "value";
        o.report.payload["polynomial"] = qpoly_to_json(route_value(route, n, k));
        return o;
    }
    std::vector<std::string> routes = {"closed", "schur-hook"};
    if (n <= kEnumerateMaxN) routes = {"closed", "schur-ssyt", "schur-hook", "enumerate"};
    Json values = Json::object();
    const QPoly reference = route_value("closed", n, k);
    bool agree = true;
    for (const auto& name : routes) {
        const QPoly p = name == "closed" ? reference : route_value(name, n, k);
        values[name] = qpoly_to_json(p);
        if (p != reference) {
            agree = false;
            o.report.witnesses.push_back(name + " gives " + to_string(p) + ", closed gives " + to_string(reference));
        }
    }
    o.report.payload["routes"] = values;
    o.report.verdict = agree ? "pass" : "fail";
    o.code = agree ? kExitPass : kExitFail;
    return o;
}

void text_qnarayana(const Report& r, std::ostream& out) {
    if (r.payload.contains("polynomial")) {
        out << to_string(qpoly_from_json(r.payload["polynomial"])) << '\n';
        return;
    }
    for (const auto& [name, p] : r.payload["routes"].items()) out << name << ": " << to_string(qpoly_from_json(p)) << '\n';
    for (const auto& w : r.witnesses) out << "witness: " << w << '\n';
    out << r.verdict << '\n';
}

void csv_qnarayana(const Report& r, std::ostream& out) {
    out << "route,polynomial\n";
    if (r.payload.contains("polynomial")) {
        out << csv_field(r.parameters["route"].get<std::string>()) << ','
            << csv_field(to_string(qpoly_from_json(r.payload["polynomial"]))) << '\n';
        return;
    }
    for (const auto& [name, p] : r.payload["routes"].items()) {
        out << csv_field(name) << ',' << csv_field(to_string(qpoly_from_json(p))) << '\n';
    }
    out << "verdict," << r.verdict << '\n';
}

// ------------------------------------------------------------------- dist

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return std::filesystem::path(flag);
    if (const char* env = std::getenv("NARAYANA_CACHE_DIR"); env != nullptr && *env != '\0') {
        return std::filesystem::path(env);
    }
    return std::nullopt;
}

Json dist_payload(unsigned n, const Statistic& stat, bool q) {
    Json payload;
    payload["statistic"] = stat.name();
    Json rows = Json::array();
    if (!q) {
        for (const auto& [value, count] : distribution(n, stat)) {
            rows.push_back(Json{{"value", value}, {"count", count}});
        }
        payload["counts"] = rows;
        return payload;
    }
    const auto co = stat.paired();
    if (!co) throw UsageError("statistic " + stat.name() + " has no paired co-statistic");
    payload["co_statistic"] = std::string(to_string(*co));
    for (const auto& [value, poly] : joint_q(n, stat)) {
        rows.push_back(Json{{"value", value}, {"polynomial", qpoly_to_json(poly)}});
    }
    payload["polynomials"] = rows;
    return payload;
}

Outcome cmd_dist(unsigned n, const std::string& stat_name, bool q, const std::string& ref_path, std::uint64_t seed,
                 const std::string& cache_flag) {
    require_range("--n", n, 1, 12);
    Outcome o;
    o.report.command = "dist";
    o.report.parameters["n"] = n;
    o.report.parameters["stat"] = stat_name;
    o.report.parameters["q"] = q;
    o.report.verdict = "value";

    Statistic stat = Statistic::parse(stat_name);
    if (!ref_path.empty()) {
        if (stat.kind != StatisticKind::des) throw UsageError("--ref-path only applies to --stat des");
        const DyckPath w = ref_path == "random" ? random_path(n, seed) : parse_reference(ref_path, n);
        stat = Statistic::wrt(w);
        o.report.parameters["ref_path"] = w.to_string();
        if (ref_path == "random") o.report.parameters["seed"] = seed;
    }
    if (q && !stat.paired()) throw UsageError("statistic " + stat_name + " has no paired co-statistic; drop --q");

    const auto dir = resolve_cache_dir(cache_flag);
    std::filesystem::path file;
    if (dir) {
        std::string key = "dist_n" + std::to_string(n) + "_" + stat.name();
        if (stat.reference) key += "_" + stat.reference->to_string();
        if (q) key += "_q";
        file = *dir / (key + "_v" + kCodeVersion + ".json");
        if (std::ifstream in(file); in) {
            try {
                o.report.payload = Json::parse(in);
                return o;
            } catch (const Json::parse_error&) {
                // unreadable entry: recompute and overwrite
            }
        }
    }
    o.report.payload = dist_payload(n, stat, q);
    if (dir) {
        std::filesystem::create_directories(*dir);
        std::ofstream(file) << o.report.payload.dump() << '\n';
    }
    return o;
}

void text_dist(const Report& r, std::ostream& out) {
    std::vector<std::string> cells;
    if (r.payload.contains("counts")) {
        for (const auto& row : r.payload["counts"]) {
            cells.push_back(std::to_string(row["value"].get<unsigned>()) + ":" +
                            std::to_string(row["count"].get<std::uint64_t>()));
        }
    } else {
        for (const auto& row : r.payload["polynomials"]) {
            cells.push_back(std::to_string(row["value"].get<unsigned>()) + ":" +
                            to_string(qpoly_from_json(row["polynomial"])));
        }
    }
    out << '{' << join(cells, ", ") << "}\n";
}

void csv_dist(const Report& r, std::ostream& out) {
    if (r.payload.contains("counts")) {
        out << "value,count\n";
        for (const auto& row : r.payload["counts"]) out << row["value"] << ',' << row["count"] << '\n';
        return;
    }
    out << "value,polynomial\n";
    for (const auto& row : r.payload["polynomials"]) {
        out << row["value"] << ',' << csv_field(to_string(qpoly_from_json(row["polynomial"]))) << '\n';
    }
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::string check;
    unsigned n = 0;
    std::string ref_path;
    std::uint64_t seed = 1;
    unsigned samples = 25;
};

void verify_main_theorem(const VerifyArgs& a, Report& r) {
    require_range("--n", a.n, 1, kMainTheoremMaxN);
    std::vector<DyckPath> refs;
    if (a.ref_path.empty() && a.n <= 4) {
        refs = enumerate(a.n);
    } else if (a.ref_path.empty() || a.ref_path == "random") {
        std::mt19937_64 rng(a.seed);
        for (unsigned i = 0; i < a.samples; ++i) refs.push_back(random_path(a.n, rng));
    } else {
        refs.push_back(parse_reference(a.ref_path, a.n));
    }
    const auto beta = flag_h_vector(ideal_lattice(chain_product_2xn(a.n)).lattice());
    Json names = Json::array();
    std::size_t subsets = 0;
    for (const auto& w : refs) {
        names.push_back(w.to_string());
        const auto rep = verify_theorem_main(beta, w);
        subsets += rep.rows.size();
        for (const auto& row : rep.rows) {
            if (row.beta != row.paths) {
                r.witnesses.push_back("W=" + w.to_string() + " S=" + to_string(row.subset) +
                                      ": beta=" + std::to_string(row.beta) + " paths=" + std::to_string(row.paths));
            }
        }
    }
    r.payload["references"] = names;
    r.payload["subsets_checked"] = subsets;
}

void verify_ssyt(const VerifyArgs& a, Report& r) {
    require_range("--n", a.n, 1, 8);
    const unsigned n = a.n;
    const auto beta = flag_h_vector(ideal_lattice(chain_product_2xn(n)).lattice());
    FlagVector counts(2 * n);
    std::size_t tableaux = 0;
    for (unsigned k = 0; k < n; ++k) {
        for (const auto& t : enumerate_ssyt(Partition::two_column(k), n - 1)) {
            ++tableaux;
            ++counts[row_sum_set(t)];
            const DyckPath w = ssyt_to_dyck(t, n);
            if (!(dyck_to_ssyt(w) == t)) r.witnesses.push_back("round trip fails on " + to_string(t));
            if (descent_set(w) != row_sum_set(t)) r.witnesses.push_back("descent set differs on " + to_string(t));
        }
    }
    for (std::size_t i = 0; i < beta.subset_count(); ++i) {
        const RankSubset s = beta.subset(i);
        if (beta[s] != counts[s]) {
            r.witnesses.push_back("S=" + to_string(s) + ": beta=" + std::to_string(beta[s]) +
                                  " tableaux=" + std::to_string(counts[s]));
        }
    }
    r.payload["tableaux"] = tableaux;
    r.payload["subsets_checked"] = beta.subset_count();
}

void add_condition(Report& r, const char* name, const ConditionVerdict& v, const DyckComplex& dc) {
    r.payload["conditions"][name] = v.holds;
    if (v.holds) return;
    std::vector<std::string> facets;
    for (std::size_t f : v.facets) facets.push_back(dc.paths()[f].to_string());
    std::string w = std::string(name) + " fails";
    if (!facets.empty()) w += " at " + join(facets, " ");
    if (v.face) w += " face ranks " + to_string(vertex_ranks(dc.order_complex(), *v.face));
    r.witnesses.push_back(w);
}

void verify_preshelling(const VerifyArgs& a, Report& r) {
    require_range("--n", a.n, 1, 5);
    const DyckComplex dc(a.n);
    const auto report = check_preshelling(dc.complex(), omega_n(a.n));
    r.payload["facets"] = dc.complex().facet_count();
    r.payload["conditions"] = Json::object();
    add_condition(r, "mutual_containment", report.mutual_containment, dc);
    add_condition(r, "interval_partition", report.interval_partition, dc);
    add_condition(r, "restriction_implies", report.restriction_implies, dc);
    add_condition(r, "shelling_step", report.shelling_step, dc);
}

void verify_q_identity(const VerifyArgs& a, Report& r) {
    require_range("--n", a.n, 1, 8);
    const unsigned n = a.n;
    const auto by_des = joint_q(n, Statistic::parse("des"));
    const auto by_lnfs = joint_q(n, Statistic::parse("lnfs"));
    Json polys = Json::array();
    for (unsigned k = 0; k < n; ++k) {
        const QPoly closed = q_narayana_closed(n, k);
        const std::vector<std::pair<std::string, QPoly>> others = {
            {"des/maj", by_des.count(k) ? by_des.at(k) : QPoly{}},
            {"lnfs/maj-l", by_lnfs.count(k) ? by_lnfs.at(k) : QPoly{}},
            {"schur-ssyt", q_narayana_schur(n, k, SchurRoute::ssyt)},
            {"schur-hook", q_narayana_schur(n, k, SchurRoute::hook)},
        };
        for (const auto& [name, p] : others) {
            if (p != closed) {
                r.witnesses.push_back("k=" + std::to_string(k) + ": " + name + " gives " + to_string(p) +
                                      ", closed gives " + to_string(closed));
            }
        }
        polys.push_back(Json{{"k", k}, {"polynomial", qpoly_to_json(closed)}});
    }
    r.payload["polynomials"] = polys;
}

inline constexpr unsigned kParthListedMaxN = 6;

void verify_parth(const VerifyArgs& a, Report& r) {
    require_range("--n", a.n, 1, 8);
    const unsigned n = a.n;
    const DyckComplex dc(n);
    const auto p = partition_intervals(dc.complex(), omega_n(n));
    // Listing faces is cheap up to n = 6; beyond that count them as chains.
    const bool listed = n <= kParthListedMaxN;
    const auto check = listed ? verify_partitioning(dc.complex(), p)
                              : verify_partitioning_counted(dc.complex(), p,
                                                            flag_f_vector(dc.lattice().lattice()).total());
    if (!check.ok && check.witness) {
        r.witnesses.push_back("face with ranks " + to_string(vertex_ranks(dc.order_complex(), *check.witness)) +
                              " lies in " + std::to_string(check.witness_cover_count) + " intervals");
    } else if (!check.ok) {
        r.witnesses.push_back("intervals do not cover all " + std::to_string(check.face_count) + " faces");
    }
    const auto from_partition = flag_h_from_partition(dc.order_complex(), 2 * n, p);
    const auto beta = flag_h_vector(dc.lattice().lattice());
    FlagVector ls(2 * n);
    for (const auto& w : dc.paths()) ++ls[ls_set(w)];
    for (std::size_t i = 0; i < beta.subset_count(); ++i) {
        const RankSubset s = beta.subset(i);
        if (from_partition[s] != beta[s] || ls[s] != beta[s]) {
            r.witnesses.push_back("S=" + to_string(s) + ": partition=" + std::to_string(from_partition[s]) +
                                  " beta=" + std::to_string(beta[s]) + " ls=" + std::to_string(ls[s]));
        }
    }
    r.payload["facets"] = dc.complex().facet_count();
    r.payload["faces"] = check.face_count;
    r.payload["face_method"] = listed ? "listed" : "counted";
    r.payload["subsets_checked"] = beta.subset_count();
}

Outcome cmd_verify(const VerifyArgs& a) {
    Outcome o;
    o.report.command = "verify";
    o.report.parameters["check"] = a.check;
    o.report.parameters["n"] = a.n;
    if (!a.ref_path.empty()) o.report.parameters["ref_path"] = a.ref_path;
    if (a.check == "main-theorem") {
        o.report.parameters["seed"] = a.seed;
        o.report.parameters["samples"] = a.samples;
    }

    static const std::map<std::string, std::function<void(const VerifyArgs&, Report&)>> checks = {
        {"main-theorem", verify_main_theorem}, {"ssyt", verify_ssyt},   {"preshelling", verify_preshelling},
        {"q-identity", verify_q_identity},     {"parth", verify_parth},
    };
    if (!a.ref_path.empty() && a.check != "main-theorem") throw UsageError("--ref-path only applies to main-theorem");
    checks.at(a.check)(a, o.report);
    const bool pass = o.report.witnesses.empty();
    o.report.verdict = pass ? "pass" : "fail";
    o.code = pass ? kExitPass : kExitFail;
    return o;
}

void text_verify(const Report& r, std::ostream& out) {
    for (const auto& [key, value] : r.parameters.items()) out << key << ": " << scalar_text(value) << '\n';
    for (const auto& [key, value] : r.payload.items()) {
        if (value.is_object()) {
            for (const auto& [sub, v] : value.items()) out << sub << ": " << scalar_text(v) << '\n';
        } else if (key == "polynomials") {
            for (const auto& row : value) {
                out << "k=" << row["k"] << ": " << to_string(qpoly_from_json(row["polynomial"])) << '\n';
            }
        } else if (value.is_array()) {
            std::vector<std::string> cells;
            for (const auto& v : value) cells.push_back(scalar_text(v));
            out << key << ": " << join(cells, " ") << '\n';
        } else {
            out << key << ": " << scalar_text(value) << '\n';
        }
    }
    for (const auto& w : r.witnesses) out << "witness: " << w << '\n';
    out << "verdict: " << r.verdict << '\n';
}

void csv_verify(const Report& r, std::ostream& out) {
    out << "field,value\n";
    for (const auto& [key, value] : r.parameters.items()) out << csv_field(key) << ',' << csv_field(scalar_text(value)) << '\n';
    for (const auto& [key, value] : r.payload.items()) {
        if (value.is_object()) {
            for (const auto& [sub, v] : value.items()) out << csv_field(sub) << ',' << csv_field(scalar_text(v)) << '\n';
        } else if (!value.is_array()) {
            out << csv_field(key) << ',' << csv_field(scalar_text(value)) << '\n';
        }
    }
    for (const auto& w : r.witnesses) out << "witness," << csv_field(w) << '\n';
    out << "verdict," << r.verdict << '\n';
}

// ------------------------------------------------------------------ omega

Outcome cmd_omega(unsigned n) {
    require_range("--n", n, 1, 8);
    Outcome o;
    o.report.command = "omega";
    o.report.parameters["n"] = n;
    o.report.verdict = "value";
    const auto paths = enumerate(n);
    Json nodes = Json::array();
    for (const auto& w : paths) nodes.push_back(Json{{"path", w.to_string()}, {"ls", subset_to_json(ls_set(w))}});
    Json edges = Json::array();
    for (const auto& [lo, hi] : omega_n(n).hasse_covers()) {
        edges.push_back(Json{{"from", paths[lo].to_string()}, {"to", paths[hi].to_string()}});
    }
    o.report.payload["nodes"] = nodes;
    o.report.payload["edges"] = edges;
    return o;
}

void dot_omega(const Report& r, std::ostream& out) {
    out << "digraph omega_" << r.parameters["n"].get<unsigned>() << " {\n";
    for (const auto& node : r.payload["nodes"]) {
        const std::string path = node["path"].get<std::string>();
        out << "  \"" << path << "\" [label=\"" << path << "\\nLS=" << to_string(subset_from_json(node["ls"]))
            << "\"];\n";
    }
    for (const auto& e : r.payload["edges"]) {
        out << "  \"" << e["from"].get<std::string>() << "\" -> \"" << e["to"].get<std::string>() << "\";\n";
    }
    out << "}\n";
}

// ---------------------------------------------------------------- driver

using Renderer = void (*)(const Report&, std::ostream&);

void emit(const Outcome& o, const std::string& format, Renderer text, Renderer csv, std::ostream& out) {
    if (format == "json") {
        out << report_to_json(o.report).dump(2) << '\n';
    } else if (format == "csv") {
        csv(o.report, out);
    } else {
        text(o.report, out);
    }
    if (format != "json" && o.report.timing_ms) out << "time: " << *o.report.timing_ms << " ms\n";
}

template <class F>
Outcome timed(bool timing, F&& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = body();
    if (timing) {
        o.report.timing_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Narayana numbers, Dyck path statistics and shellings of J(2 x n)", "narayana"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    unsigned n = 0;
    unsigned k = 0;
    std::string format = "text";
    std::string route = "closed";
    std::string stat = "des";
    std::string ref_path;
    std::string cache_dir;
    bool q = false;
    bool timing = false;
    VerifyArgs va;
    const std::vector<std::string> tabular = {"text", "json", "csv"};

    auto* narayana_cmd = app.add_subcommand("narayana", "Row of Narayana numbers N(n,k) and its Catalan sum");
    narayana_cmd->add_option("--n", n, "Semilength, 1..60")->required();

    auto* q_cmd = app.add_subcommand("qnarayana", "q-Narayana polynomial by one route or all of them");
    q_cmd->add_option("--n", n, "Semilength, 1..60")->required();
    q_cmd->add_option("--k", k, "Number of valleys")->required();
    q_cmd->add_option("--route", route, "closed, schur-ssyt, schur-hook, enumerate or all")
        ->check(CLI::IsMember({"closed", "schur-ssyt", "schur-hook", "enumerate", "all"}));

    auto* dist_cmd = app.add_subcommand("dist", "Distribution of a statistic over D_n");
    dist_cmd->add_option("--n", n, "Semilength, 1..12")->required();
    dist_cmd->add_option("--stat", stat, "des, hp, ea, lnfs or da")
        ->check(CLI::IsMember({"des", "hp", "ea", "lnfs", "da"}));
    dist_cmd->add_flag("--q", q, "Per-value polynomials in the paired co-statistic");
    dist_cmd->add_option("--ref-path", ref_path, "Reference path for des (vh-string or 'random')");
    dist_cmd->add_option("--seed", va.seed, "Seed for --ref-path random");
    dist_cmd->add_option("--cache-dir", cache_dir, "Directory for cached tables (else NARAYANA_CACHE_DIR)");

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive or sampled check of an identity");
    verify_cmd->add_option("--check", va.check, "main-theorem, ssyt, preshelling, q-identity or parth")
        ->required()
        ->check(CLI::IsMember({"main-theorem", "ssyt", "preshelling", "q-identity", "parth"}));
    verify_cmd->add_option("--n", va.n, "Semilength")->required();
    verify_cmd->add_option("--ref-path", va.ref_path, "Reference path W (vh-string or 'random')");
    verify_cmd->add_option("--seed", va.seed, "Sampling seed");
    verify_cmd->add_option("--samples", va.samples, "Number of random reference paths");

    auto* omega_cmd = app.add_subcommand("omega", "Hasse diagram of Omega_n");
    omega_cmd->add_option("--n", n, "Semilength, 1..8")->required();

    for (auto* sub : {narayana_cmd, q_cmd, dist_cmd, verify_cmd}) {
        sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember(tabular));
        sub->add_flag("--timing", timing, "Append wall-clock time");
    }
    std::string graph_format = "dot";
    omega_cmd->add_option("--format", graph_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
    omega_cmd->add_flag("--timing", timing, "Append wall-clock time");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*narayana_cmd) {
            emit(timed(timing, [&] { return cmd_narayana(n); }), format, text_narayana, csv_narayana, out);
            return kExitPass;
        }
        if (*q_cmd) {
            const auto o = timed(timing, [&] { return cmd_qnarayana(n, k, route); });
            emit(o, format, text_qnarayana, csv_qnarayana, out);
            return o.code;
        }
        if (*dist_cmd) {
            const auto o = timed(timing, [&] { return cmd_dist(n, stat, q, ref_path, va.seed, cache_dir); });
            emit(o, format, text_dist, csv_dist, out);
            return o.code;
        }
        if (*verify_cmd) {
            const auto o = timed(timing, [&] { return cmd_verify(va); });
            emit(o, format, text_verify, csv_verify, out);
            return o.code;
        }
        const auto o = timed(timing, [&] { return cmd_omega(n); });
        if (graph_format == "json") {
            out << report_to_json(o.report).dump(2) << '\n';
        } else {
            dot_omega(o.report, out);
            if (o.report.timing_ms) out << "// time: " << *o.report.timing_ms << " ms\n";
        }
        return o.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace narayana::cli

// sumgraph: construct graph families, compute powers, verify the growth
// inequalities, dump diagnostics, and scan for extremal candidates.
//
// Exit codes: 0 = success and every requested check holds; 1 = at least
// one check failed (counterexample, dumped in full); 2 = usage or input
// error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumgraph/checks.hpp"
#include "sumgraph/constructions.hpp"
#include "sumgraph/diagnostics.hpp"
#include "sumgraph/power.hpp"
#include "sumgraph/search.hpp"
#include "sumgraph/sumset.hpp"

using json = nlohmann::json;
using namespace sumgraph;

namespace {

json verdict_json(const Verdict& v) {
    return {{"name", v.name},   {"lhs", v.lhs},     {"rhs", v.rhs},
            {"branch", v.branch}, {"holds", v.holds}, {"details", v.details}};
}

json record_json(const SearchRecord& r) {
    return {{"canon", r.canon},
            {"n", r.n},
            {"d", r.d},
            {"edges", r.edges},
            {"excess2", r.excess2},
            {"total3", r.total3},
            {"diameter", r.diameter},
            {"objective", {{"num", r.objective.num}, {"den", r.objective.den}}}};
}

std::vector<int> parse_residues(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(std::stoi(item));
    return out;
}

Graph read_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GraphError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GraphError("cannot open " + path + " for writing");
    out << text;
}

struct ConstructArgs {
    std::string family;
    std::string out;
    int d = 0, m = 0, k = 0, n = 0;
    std::string gens;
};

int run_construct(const ConstructArgs& a) {
    std::optional<Graph> g;
    if (a.family == "gdm") {
        g = gdm(a.d, a.m);
    } else if (a.family == "diam-extremal") {
        g = diameter_extremal(a.d, a.k);
    } else if (a.family == "circulant") {
        g = circulant(a.n, parse_residues(a.gens));
    } else if (a.family == "clique-path") {
        g = clique_path(a.n);
    } else if (a.family == "cycle") {
        g = cycle(a.n);
    } else if (a.family == "complete") {
        g = complete(a.n);
    } else if (a.family == "path") {
        g = path(a.n);
    } else {
        throw CLI::ValidationError("unknown family " + a.family);
    }
    std::string text = serialize_edge_list(*g);
    if (a.out.empty())
        std::cout << text;
    else
        write_file(a.out, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-power laboratory"};
    app.require_subcommand(1);

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "emit a graph family member");
    construct->add_option("--family", ca.family)->required();
    construct->add_option("--d", ca.d);
    construct->add_option("--m", ca.m);
    construct->add_option("--k", ca.k);
    construct->add_option("--n", ca.n);
    construct->add_option("--gens", ca.gens, "comma-separated generators");
    construct->add_option("--out", ca.out);

    std::string in_path, out_path;
    int power_h = 0, profile_hmax = 0;
    auto* power_cmd = app.add_subcommand("power", "h-fold power and growth profile");
    power_cmd->set_help_flag("--help", "print help");  // frees -h for --h below
    power_cmd->add_option("--in", in_path)->required();
    power_cmd->add_option("--h", power_h);
    power_cmd->add_option("--out", out_path);
    power_cmd->add_option("--profile", profile_hmax);

    bool do_thm15 = false, do_prop16 = false, do_conj18 = false;
    auto* check_cmd = app.add_subcommand("check", "verdicts for one graph");
    check_cmd->add_option("--in", in_path)->required();
    check_cmd->add_flag("--thm15", do_thm15);
    check_cmd->add_flag("--prop16", do_prop16);
    check_cmd->add_flag("--conj18", do_conj18);

    long prime_p = 0;
    std::string set_csv;
    int hmax = 1;
    auto* cd_cmd = app.add_subcommand("check-cd", "Cauchy-Davenport verdicts");
    cd_cmd->add_option("--p", prime_p)->required();
    cd_cmd->add_option("--set", set_csv)->required();
    cd_cmd->add_option("--hmax", hmax);

    auto* thm14_cmd = app.add_subcommand("check-thm14", "Cayley-graph growth verdicts");
    thm14_cmd->add_option("--p", prime_p)->required();
    thm14_cmd->add_option("--set", set_csv)->required();
    thm14_cmd->add_option("--hmax", hmax);

    int diag_vertex = -1;
    bool diag_cut = false;
    double eps1_override = -1;
    auto* diag_cmd = app.add_subcommand("diagnose", "shell decomposition / geodesic cut");
    diag_cmd->add_option("--in", in_path)->required();
    diag_cmd->add_option("--vertex", diag_vertex);
    diag_cmd->add_flag("--cut", diag_cut);
    diag_cmd->add_option("--eps1", eps1_override);

    int sn = 0, sd = 0, random_count = 0, jobs = 1, top_k = 100;
    bool exhaustive = false, dedup = false, csv_out = false;
    uint64_t seed = 0;
    std::string objective_name;
    auto* search_cmd = app.add_subcommand("search", "extremal scan over regular graphs");
    search_cmd->add_option("--n", sn)->required();
    search_cmd->add_option("--d", sd)->required();
    search_cmd->add_flag("--exhaustive", exhaustive);
    search_cmd->add_flag("--dedup", dedup);
    search_cmd->add_option("--random", random_count);
    search_cmd->add_option("--seed", seed);
    search_cmd->add_option("--objective", objective_name)->required();
    search_cmd->add_option("--jobs", jobs);
    search_cmd->add_option("--top", top_k);
    search_cmd->add_flag("--csv", csv_out);

    double eps_tol = 1e-12;
    auto* eps_cmd = app.add_subcommand("epsilon", "bracket the growth constant");
    eps_cmd->add_option("--tol", eps_tol);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return run_construct(ca);

        if (power_cmd->parsed()) {
            Graph g = read_graph(in_path);
            if (power_h < 1 && profile_hmax < 1)
                throw GraphError("power: need --h or --profile");
            if (power_h >= 1) {
                std::string text = serialize_edge_list(power_graph(g, power_h));
                if (out_path.empty())
                    std::cout << text;
                else
                    write_file(out_path, text);
            }
            if (profile_hmax >= 1) {
                auto profile = edge_growth(g, profile_hmax);
                json rows = json::array();
                for (const auto& r : profile.rows)
                    rows.push_back({{"h", r.h}, {"total", r.total}, {"excess", r.excess}});
                std::cout << json{{"n", profile.n},
                                  {"base_edges", profile.base_edges},
                                  {"rows", rows}}
                                 .dump()
                          << '\n';
            }
            return 0;
        }

        if (check_cmd->parsed()) {
            Graph g = read_graph(in_path);
            json out = json::array();
            bool all_hold = true;
            bool regular = regular_degree(g).has_value();
            auto push = [&](const Verdict& v) {
                out.push_back(verdict_json(v));
                all_hold = all_hold && v.holds;
            };
            auto not_applicable = [&](const std::string& name) {
                out.push_back({{"name", name},
                               {"lhs", nullptr},
                               {"rhs", nullptr},
                               {"branch", "NOT-APPLICABLE"},
                               {"holds", true},
                               {"details", "graph is not regular"}});
            };
            if (do_thm15) {
                if (regular)
                    push(check_thm15(g));
                else
                    not_applicable("thm15");
            }
            if (do_prop16) push(check_prop16(g));
            if (do_conj18) {
                if (regular) {
                    auto stat = conj18_stat(g);
                    out.push_back({{"name", "conj18-stat"},
                                   {"applicable", stat.applicable},
                                   {"excess2", stat.excess2},
                                   {"per_n", stat.per_n},
                                   {"trivial_bound_ok", stat.trivial_bound_ok}});
                    all_hold = all_hold && stat.trivial_bound_ok;
                } else {
                    not_applicable("conj18-stat");
                }
            }
            std::cout << out.dump(2) << '\n';
            return all_hold ? 0 : 1;
        }

        if (cd_cmd->parsed() || thm14_cmd->parsed()) {
            ResidueSet a(int(prime_p), parse_residues(set_csv));
            auto verdicts = cd_cmd->parsed()
                                ? check_cauchy_davenport(prime_p, a, hmax)
                                : check_thm14(prime_p, a, hmax);
            json out = json::array();
            bool all_hold = true;
            for (const auto& v : verdicts) {
                out.push_back(verdict_json(v));
                all_hold = all_hold && v.holds;
            }
            std::cout << out.dump(2) << '\n';
            return all_hold ? 0 : 1;
        }

        if (diag_cmd->parsed()) {
            Graph g = read_graph(in_path);
            double eps1 = eps1_override > 0 ? eps1_override
                                            : epsilon_star(1e-12).eps1();
            json out;
            if (diag_vertex >= 0) {
                auto dec = vertex_decomposition(g, diag_vertex, eps1);
                const char* tag = dec.case_tag == CaseTag::kCase1   ? "CASE1"
                                  : dec.case_tag == CaseTag::kCase2 ? "CASE2"
                                                                    : "SATURATED";
                out["decomposition"] = {
                    {"v", dec.v},
                    {"A", dec.A},
                    {"C", dec.C},
                    {"D", dec.D},
                    {"scriptC", dec.scriptC},
                    {"alpha", dec.alpha ? json(*dec.alpha) : json(nullptr)},
                    {"case", tag},
                    {"extended_semantics", dec.extended_semantics}};
            }
            if (diag_cut) {
                auto cut = geodesic_cut(g);
                out["geodesic_cut"] = {{"u", cut.u},       {"w", cut.w},
                                       {"path", cut.path}, {"B", cut.B},
                                       {"eAB", cut.eAB},   {"lower", cut.lower},
                                       {"upper", cut.upper}};
            }
            std::cout << out.dump(2) << '\n';
            return 0;
        }

        if (search_cmd->parsed()) {
            if (exhaustive == (random_count > 0))
                throw GraphError("search: exactly one of --exhaustive / --random");
            ScanSource src;
            src.kind = exhaustive ? ScanSource::Kind::kExhaustive
                                  : ScanSource::Kind::kRandom;
            src.n = sn;
            src.d = sd;
            src.dedup = dedup;
            src.count = random_count;
            src.seed = seed;
            src.jobs = jobs;
            Objective obj;
            if (objective_name == "min-3ratio")
                obj = Objective::kMin3Ratio;
            else if (objective_name == "min-2excess")
                obj = Objective::kMin2Excess;
            else
                throw GraphError("unknown objective " + objective_name);
            auto records = extremal_scan(src, obj, top_k);
            if (csv_out) {
                std::cout << "n,d,edges,excess2,total3,diameter,objective\n";
                for (const auto& r : records)
                    std::cout << r.n << ',' << r.d << ',' << r.edges << ','
                              << r.excess2 << ',' << r.total3 << ','
                              << r.diameter << ',' << r.objective.approx()
                              << '\n';
            } else {
                for (const auto& r : records)
                    std::cout << record_json(r).dump() << '\n';
            }
            return 0;
        }

        if (eps_cmd->parsed()) {
            auto eps = epsilon_star(eps_tol);
            std::cout << json{{"lo", eps.lo},
                              {"hi", eps.hi},
                              {"midpoint", eps.midpoint()},
                              {"eps1", eps.eps1()}}
                             .dump()
                      << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

#include "toric/examples.hpp"
#include "toric/json_io.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

using namespace toric;

namespace {

struct Job {
    std::string command;
    std::string id;
    std::optional<std::string> config_path, example, k, k_list, grouping, out, vertices;
    std::optional<unsigned> precision;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> max_starts;
    bool dual = false;
    bool orbifold = false;
    int digits = 30;
    Json config = Json::object();
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw Error("BadJson", path + ": " + e.what());
    }
}

Json parse_json_text(const std::string& s, const std::string& what) {
    try {
        return Json::parse(s);
    } catch (const std::exception& e) {
        throw Error("BadJson", what + ": " + e.what());
    }
}

ToricTestConfiguration load_tc(const Job& job) {
    if (job.example) return named_example(*job.example);
    if (job.config.contains("example")) return named_example(job.config.at("example").get<std::string>());
    if (job.config.contains("tc")) return tc_from_json(job.config.at("tc"));
    throw Error("MissingInput", "give --example or a config with \"tc\" or \"example\"");
}

Rat job_k(const Job& job, const Rat& fallback) {
    if (job.k) return parse_rat(Json(*job.k));
    if (job.config.contains("k")) return parse_rat(job.config.at("k"));
    return fallback;
}

std::vector<Rat> job_k_list(const Job& job) {
    std::vector<Rat> ks;
    if (job.k_list) {
        std::stringstream ss(*job.k_list);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) ks.push_back(parse_rat(Json(item)));
    } else if (job.config.contains("k_list")) {
        for (const auto& x : job.config.at("k_list")) ks.push_back(parse_rat(x));
    } else {
        ks = {4, 8, 12, 16};
    }
    for (const auto& k : ks)
        if (k <= 0) throw Error("InvalidParameter", "k must be positive");
    return ks;
}

unsigned job_precision(const Job& job) {
    unsigned p = job.precision ? *job.precision : job.config.value("precision", 256u);
    if (p < 64 || p > 4096) throw Error("InvalidParameter", "precision must be between 64 and 4096 bits");
    return p;
}

SolverOptions solver_options(const Job& job) {
    SolverOptions o;
    o.precision_bits = job_precision(job);
    o.seed = job.seed ? *job.seed : job.config.value("seed", std::uint64_t(0));
    o.max_starts = job.max_starts ? *job.max_starts : job.config.value("max_starts", o.max_starts);
    return o;
}

std::optional<Json> job_grouping(const Job& job) {
    if (job.grouping) {
        if (*job.grouping == "auto") return std::nullopt;
        return parse_json_text(*job.grouping, "--grouping");
    }
    if (job.config.contains("grouping") && !job.config.at("grouping").is_string()) return job.config.at("grouping");
    return std::nullopt;
}

Grouping auto_cone_grouping(const ToricTestConfiguration& tc, const Compactification& comp) {
    auto mu = fibration_functional(comp.ambient_fan, tc.basis.row(0));
    return cone_grouping(comp.ambient_fan, mu);
}

Json cmd_df(const Job& job) {
    auto tc = load_tc(job);
    return Json{{"command", "df"}, {"report", df_report_to_json(df_report(tc))}};
}

Json cmd_mirror(const Job& job) {
    auto tc = load_tc(job);
    auto W = build_potential(tc, job_k(job, 1));
    return Json{{"command", "mirror"}, {"potential", potential_to_json(W)}};
}

Json cmd_critical(const Job& job) {
    auto tc = load_tc(job);
    auto W = build_potential(tc, job_k(job, 8));
    auto opts = solver_options(job);
    unsigned old = set_working_precision(opts.precision_bits);
    auto s = find_critical_points_strict(W, opts);
    auto sp = check_stationary_phase(numeric_potential(W), s.points);
    set_working_precision(old);
    return Json{{"command", "critical"}, {"k", rat_str(W.k)}, {"report", critical_to_json(s, sp, job.digits)}};
}

Json cmd_residue(const Job& job) {
    auto tc = load_tc(job);
    Rat k = job_k(job, 16);
    auto comp = build_compactification(build_potential(tc, k));
    auto g = job_grouping(job);
    Grouping points = g ? grouping_from_json(*g) : point_grouping(comp.ambient_fan, auto_cone_grouping(tc, comp));
    auto rep = residue_decomposition(tc, k, comp, points);
    return Json{{"command", "residue"},
                {"k", rat_str(k)},
                {"ambient_fan", fan_to_json(comp.ambient_fan)},
                {"report", residue_report_to_json(rep)}};
}

Json cmd_theorem1(const Job& job) {
    auto tc = load_tc(job);
    Rat k = job_k(job, 16);
    auto comp = build_compactification(build_potential(tc, k));
    auto g = job_grouping(job);
    Grouping cones = g ? grouping_from_json(*g) : auto_cone_grouping(tc, comp);
    HamiltonianOptions opts;
    opts.precision_bits = job_precision(job);
    auto rep = assemble_theorem1(tc, k, comp, cones, opts);
    auto duals = build_duals(comp, cones);
    return Json{{"command", "theorem1"},
                {"ambient_fan", fan_to_json(comp.ambient_fan)},
                {"cone_grouping", cones},
                {"report", theorem1_to_json(rep, duals, job.digits)}};
}

Json cmd_vanishing(const Job& job) {
    auto tc = load_tc(job);
    return Json{{"command", "vanishing"}, {"report", vanishing_to_json(vanishing_check(tc, job_k_list(job)))}};
}

Json cmd_polytope(const Job& job) {
    Json out{{"command", "polytope"}};
    if (job.orbifold) {
        out["orbifold_duals"] = orbifold_to_json(orbifold_duals());
        return out;
    }
    LatticePolytope P;
    if (job.vertices)
        P = polytope_from_json(Json{{"vertices", parse_json_text(*job.vertices, "--vertices")}});
    else if (job.config.contains("polytope"))
        P = polytope_from_json(job.config.at("polytope"));
    else
        throw Error("MissingInput", "give --vertices or a config with \"polytope\"");
    out["polytope"] = polytope_to_json(P);
    out["full_dimensional"] = P.full_dimensional();
    if (P.full_dimensional()) {
        out["normalized_volume"] = normalized_volume(P).str();
        out["reflexive"] = is_reflexive(P);
    }
    if (job.dual) out["dual"] = polytope_to_json(polar_dual(P));
    return out;
}

struct Golden {
    std::string example;
    Rat df;
    std::size_t critical;
    long euler;
    std::set<std::string> base_points;
    std::map<std::string, Rat> psi;
    Rat total;
};

const std::map<std::string, Golden>& goldens() {
    static const std::map<std::string, Golden> g{
        {"normal-cone-p1",
         {"normal-cone",
          Rat(1, 4),
          5,
          5,
          {"p4"},
          {{"p1", 1}, {"p2", 0}, {"p3", 1}, {"p4'", 1}, {"p4''", 0}, {"p5", 0}, {"p6", 1}},
          Rat(1, 4)}},
        {"hirzebruch-product",
         {"hirzebruch",
          Rat(0),
          4,
          4,
          {"p3", "p5"},
          {{"p1", 0}, {"p2", 1}, {"p3'", 1}, {"p3''", 0}, {"p4", 0}, {"p5'", 0}, {"p5''", 1}, {"p6", 1}},
          Rat(0)}},
    };
    return g;
}

Json cmd_reproduce(const Job& job, bool& failed) {
    auto it = goldens().find(job.id);
    if (it == goldens().end()) throw Error("UnknownExample", "no reproducible example named '" + job.id + "'");
    const Golden& gold = it->second;
    auto tc = named_example(gold.example);
    Json checks = Json::array();
    Json diff = Json::array();
    auto check = [&](const std::string& name, const Json& expected, const Json& actual) {
        bool ok = expected == actual;
        checks.push_back(Json{{"name", name}, {"expected", expected}, {"actual", actual}, {"ok", ok}});
        if (!ok) diff.push_back(name);
    };

    auto df = df_report(tc);
    check("df_intersection", rat_str(gold.df), rat_str(df.value_intersection));
    check("df_localised", rat_str(gold.df), rat_str(df.value_localised));
    check("df_polytope", rat_str(gold.df), df.polytope_defined ? Json(rat_str(df.value_polytope)) : Json(nullptr));

    Rat k = job_k(job, 8);
    auto opts = solver_options(job);
    unsigned old = set_working_precision(opts.precision_bits);
    auto W = build_potential(tc, k);
    auto s = find_critical_points(W, opts);
    auto sp = check_stationary_phase(numeric_potential(W), s.points);
    set_working_precision(old);
    std::size_t nondeg = 0;
    for (const auto& p : s.points)
        if (!p.degenerate) ++nondeg;
    check("critical_points", gold.critical, s.points.size());
    check("nondegenerate_critical_points", gold.critical, nondeg);
    check("euler_characteristic", gold.euler, sp.euler_characteristic);

    auto comp = build_compactification(W);
    auto D0 = divisor_of_polytope(comp.container_fan, comp.container);
    std::set<std::string> base;
    for (const auto& p : comp.base_points) {
        base.insert(hexagon_label(comp.container_fan, cone_vertex(comp.container_fan, D0, p.cone), p.cone));
    }
    check("base_points", Json(gold.base_points), Json(base));

    auto rep = residue_decomposition(tc, k, comp);
    Json psi_gold = Json::object(), psi_actual = Json::object();
    std::map<std::string, Rat> actual;
    for (const auto& row : rep.points) actual[hexagon_label(comp.ambient_fan, row.vertex, row.cone)] = row.psi;
    for (const auto& [l, v] : gold.psi) psi_gold[l] = rat_str(v);
    for (const auto& [l, v] : actual) psi_actual[l] = rat_str(v);
    check("psi_table", psi_gold, psi_actual);
    check("residue_total", rat_str(gold.total), rat_str(rep.total));

    failed = !diff.empty();
    return Json{{"command", "reproduce"}, {"id", job.id}, {"k", rat_str(k)}, {"checks", checks}, {"diff", diff}};
}

std::string summary(const Json& report) {
    std::string cmd = report.value("command", std::string("?"));
    if (cmd == "reproduce") return "reproduce " + report.at("id").get<std::string>() + ": " +
                                   std::to_string(report.at("diff").size()) + " differences";
    if (cmd == "df") return "df: " + report.at("report").at("intersection").get<std::string>();
    if (cmd == "residue") return "residue total: " + report.at("report").at("total").get<std::string>();
    if (cmd == "theorem1") return "theorem1 defect: " + report.at("report").at("defect").at("re").get<std::string>();
    if (cmd == "critical") return "critical points: " + std::to_string(report.at("report").at("count").get<std::size_t>());
    if (cmd == "vanishing") return std::string("vanishing holds: ") + (report.at("report").at("holds").get<bool>() ? "yes" : "no");
    return cmd + ": done";
}

void emit(const Job& job, const Json& j) {
    std::string text = j.dump(2) + "\n";
    std::cout << text;
    if (job.out) {
        std::ofstream f(*job.out);
        if (!f) throw Error("FileNotWritable", "cannot write " + *job.out);
        f << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric test configurations, mirror potentials and Donaldson-Futaki invariants"};
    Job job;
    app.add_option("command", job.command,
                   "df | mirror | critical | residue | theorem1 | vanishing | polytope | reproduce")
        ->required();
    app.add_option("id", job.id, "example id for reproduce: normal-cone-p1 | hirzebruch-product");
    app.add_option("--config", job.config_path, "JSON job file");
    app.add_option("--example", job.example, "normal-cone | hirzebruch | trivial");
    app.add_option("--k", job.k, "scale k as p/q");
    app.add_option("--k-list", job.k_list, "comma separated scales");
    app.add_option("--precision", job.precision, "working precision in bits");
    app.add_option("--grouping", job.grouping, "JSON list of index lists, or auto");
    app.add_option("--seed", job.seed, "solver seed");
    app.add_option("--out", job.out, "also write the report here");
    app.add_option("--max-starts", job.max_starts, "critical point solver start budget");
    app.add_option("--vertices", job.vertices, "polytope vertices as a JSON list");
    app.add_option("--digits", job.digits, "decimal digits for numeric output");
    app.add_flag("--dual", job.dual, "polytope: emit the polar dual");
    app.add_flag("--orbifold-duals", job.orbifold, "polytope: emit the orbifold dual report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cout << error_to_json(Error("BadArguments", e.what())).dump(2) << "\n";
        return 2;
    }

    try {
        if (job.config_path) job.config = read_json_file(*job.config_path);
        if (!job.out && job.config.contains("out")) job.out = job.config.at("out").get<std::string>();
        Json report;
        bool failed = false;
        if (job.command == "df")
            report = cmd_df(job);
        else if (job.command == "mirror")
            report = cmd_mirror(job);
        else if (job.command == "critical")
            report = cmd_critical(job);
        else if (job.command == "residue")
            report = cmd_residue(job);
        else if (job.command == "theorem1")
            report = cmd_theorem1(job);
        else if (job.command == "vanishing")
            report = cmd_vanishing(job);
        else if (job.command == "polytope")
            report = cmd_polytope(job);
        else if (job.command == "reproduce")
            report = cmd_reproduce(job, failed);
        else
            throw Error("UnknownCommand", "unknown command '" + job.command + "'");
        emit(job, report);
        std::cerr << summary(report) << "\n";
        return failed ? 4 : 0;
    } catch (const Error& e) {
        std::cout << error_to_json(e).dump(2) << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cout << error_to_json(Error("InternalError", e.what())).dump(2) << "\n";
        return 2;
    }
}

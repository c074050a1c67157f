#include "ricci/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "ricci/curvature.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph_spec.hpp"
#include "ricci/report.hpp"
#include "ricci/theorems.hpp"

namespace ricci::cli {

namespace {

constexpr int kExitVerifyFailed = 4;

// Splits "a,b" at the single top-level comma; composite labels like
// "(g0,y1)" keep their inner commas.
std::pair<std::string, std::string> split_edge_selector(const std::string& sel) {
    int depth = 0;
    for (std::size_t i = 0; i < sel.size(); ++i) {
        char c = sel[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) return {sel.substr(0, i), sel.substr(i + 1)};
    }
    throw ParseError("edge selector '" + sel + "': expected 'labelA,labelB'");
}

int default_jobs() {
    if (const char* env = std::getenv("RICCI_JOBS")) {
        int jobs = std::atoi(env);
        if (jobs >= 1) return jobs;
    }
    return 1;
}

void fill_edge_node(ReportNode& node, const Graph& g, const EdgeCurvatureReport& r, bool approx) {
    node.put("x", g.label(r.x));
    node.put("y", g.label(r.y));
    node.put("degree", static_cast<long long>(r.degree));
    node.put("triangle", static_cast<long long>(r.triangle_size));
    node.put("opt", static_cast<long long>(r.opt));
    node.put("max", r.max ? std::to_string(*r.max) : "absent");
    node.put("kappa_lly", r.kappa_lly);
    node.put("kappa_zero", r.kappa_zero);
    if (approx) {
        node.put("kappa_lly_approx", rational_approx(r.kappa_lly));
        node.put("kappa_zero_approx", rational_approx(r.kappa_zero));
    }
    node.put("route", r.route);
    node.put("cross_check", r.cross_check ? "true" : "false");
}

int cmd_curvature(const std::string& spec, const std::string& edge_sel, bool all,
                  const std::string& alpha_text, bool approx, bool dump_edges,
                  std::ostream& out) {
    BuiltGraph built = build_graph(spec);
    const Graph& g = built.graph;
    if (dump_edges) {
        out << dump_edge_list(g);
        return kExitOk;
    }
    std::vector<std::pair<int, int>> targets;
    if (all) {
        targets = g.edges();
    } else {
        auto [a, b] = split_edge_selector(edge_sel);
        targets.emplace_back(g.require_label(a), g.require_label(b));
    }
    std::optional<Rational> alpha;
    if (!alpha_text.empty()) {
        alpha = parse_rational(alpha_text);
        if (*alpha < 0 || *alpha > 1)
            throw PreconditionError("alpha must lie in [0, 1]");
    }
    ReportDocument doc;
    doc.spec_echo = "curvature " + spec;
    auto& edges = doc.body.child("edges");
    bool cross_check_ok = true;
    for (auto [x, y] : targets) {
        auto r = edge_report(g, x, y);
        cross_check_ok = cross_check_ok && r.cross_check;
        auto& node = edges.child("edge");
        fill_edge_node(node, g, r, approx);
        if (alpha) {
            Rational ka = kappa_alpha(g, x, y, *alpha);
            node.put("alpha", *alpha);
            node.put("kappa_alpha", ka);
            if (approx) node.put("kappa_alpha_approx", rational_approx(ka));
        }
    }
    out << doc.serialize();
    return cross_check_ok ? kExitOk : kExitCrossCheck;
}

int cmd_verify(const std::string& kind_name, const std::vector<std::string>& factors,
               const std::string& theorems_csv, bool require_attained, int jobs,
               std::ostream& out) {
    ProductKind kind = kind_name == "strong" ? ProductKind::Strong : ProductKind::Cartesian;
    Graph g = build_graph(factors.at(0)).graph;
    Graph h = build_graph(factors.at(1)).graph;
    SweepOptions opts;
    opts.jobs = jobs;
    if (!theorems_csv.empty()) {
        std::stringstream ss(theorems_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) opts.theorems.push_back(item);
    }
    SweepResult result = sweep(g, h, kind, opts);

    std::vector<const TheoremCheckReport*> attained;
    for (const auto& r : result.reports)
        if (r.relation == Relation::GreaterEqual && r.theorem_id == "T3" && r.slack == 0)
            attained.push_back(&r);
    bool attainment_ok = !require_attained || !attained.empty();

    ReportDocument doc;
    doc.spec_echo = "verify " + kind_name + "(" + factors[0] + "," + factors[1] + ")" +
                    (theorems_csv.empty() ? "" : " theorems=" + theorems_csv);
    auto& summary = doc.body.child("summary");
    summary.put("checks", static_cast<long long>(result.reports.size()));
    summary.put("passed", static_cast<long long>(result.pass_count));
    summary.put("failed", static_cast<long long>(result.fail_count));
    summary.put("skipped_edges", static_cast<long long>(result.skipped_edges));
    if (result.has_inequality) summary.put("worst_slack", result.worst_slack);
    if (require_attained) {
        summary.put("attained", attained.empty() ? "none" : attained.front()->instance);
    }
    auto& reports = doc.body.child("reports");
    for (const auto& r : result.reports) {
        auto& node = reports.child("report");
        node.put("id", r.theorem_id);
        node.put("instance", r.instance);
        node.put("relation", r.relation == Relation::Equal ? "equal" : "greater_equal");
        node.put("lhs", r.lhs);
        node.put("rhs", r.rhs);
        node.put("slack", r.slack);
        node.put("holds", r.holds ? "true" : "false");
    }
    out << doc.serialize();
    return (result.fail_count == 0 && attainment_ok) ? kExitOk : kExitVerifyFailed;
}

int cmd_idleness(const std::string& spec, const std::string& edge_sel, int samples,
                 std::ostream& out) {
    if (samples < 1) throw ParseError("--samples must be positive");
    BuiltGraph built = build_graph(spec);
    const Graph& g = built.graph;
    auto [a, b] = split_edge_selector(edge_sel);
    int x = g.require_label(a), y = g.require_label(b);
    IdlenessFunction f = idleness_function(g, x, y);
    std::vector<Rational> grid;
    for (int k = 0; k <= samples; ++k) grid.push_back(make_rational(k, samples));
    grid.push_back(f.breakpoint);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    out << "alpha,kappa_alpha,formula_kappa_alpha\n";
    bool consistent = true;
    for (const auto& alpha : grid) {
        Rational transport = kappa_alpha(g, x, y, alpha);
        Rational formula = f.evaluate(alpha);
        consistent = consistent && (transport == formula);
        out << rational_str(alpha) << ',' << rational_str(transport) << ','
            << rational_str(formula) << '\n';
    }
    return consistent ? kExitOk : kExitCrossCheck;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact curvature of graph edges and product-curvature verification"};
    app.require_subcommand(1);

    std::string spec, edge_sel, alpha_text, theorems_csv;
    bool all = false, approx = false, dump_edges = false, require_attained = false;
    int samples = 8;
    int jobs = default_jobs();
    std::vector<std::string> strong_factors, cartesian_factors;

    auto* curvature = app.add_subcommand("curvature", "per-edge curvature report");
    curvature->add_option("--graph", spec, "graph spec")->required();
    auto* edge_opt = curvature->add_option("--edge", edge_sel, "edge selector 'labelA,labelB'");
    auto* all_flag = curvature->add_flag("--all", all, "report every edge");
    edge_opt->excludes(all_flag);
    curvature->add_option("--alpha", alpha_text, "idleness, a rational in [0, 1]");
    curvature->add_flag("--approx", approx, "add decimal renderings");
    curvature->add_flag("--dump-edges", dump_edges, "print the edge list and exit");

    auto* verify = app.add_subcommand("verify", "theorem sweep over a product");
    auto* strong_opt =
        verify->add_option("--strong", strong_factors, "strong product factors")->expected(2);
    auto* cartesian_opt = verify->add_option("--cartesian", cartesian_factors,
                                             "Cartesian product factors")
                              ->expected(2);
    strong_opt->excludes(cartesian_opt);
    verify->add_option("--theorems", theorems_csv, "comma-separated theorem ids (default all)");
    verify->add_flag("--require-attained", require_attained,
                     "fail unless some T3 slack is exactly 0");
    verify->add_option("--jobs", jobs, "worker threads (default RICCI_JOBS or 1)");

    auto* idleness = app.add_subcommand("idleness", "sample the idleness function as CSV");
    idleness->add_option("--graph", spec, "graph spec")->required();
    idleness->add_option("--edge", edge_sel, "edge selector 'labelA,labelB'")->required();
    idleness->add_option("--samples", samples, "number of grid intervals")->required();

    std::vector<const char*> argv;
    argv.push_back("ricci");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::stringstream buffer;
        int code = app.exit(e, buffer, buffer);
        err << buffer.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (curvature->parsed()) {
            if (!all && edge_sel.empty() && !dump_edges)
                throw ParseError("curvature: pass --edge or --all");
            return cmd_curvature(spec, edge_sel, all, alpha_text, approx, dump_edges, out);
        }
        if (verify->parsed()) {
            if (strong_factors.empty() && cartesian_factors.empty())
                throw ParseError("verify: pass --strong or --cartesian with two factors");
            bool strong = !strong_factors.empty();
            return cmd_verify(strong ? "strong" : "cartesian",
                              strong ? strong_factors : cartesian_factors, theorems_csv,
                              require_attained, jobs, out);
        }
        return cmd_idleness(spec, edge_sel, samples, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const CrossCheckError& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitCrossCheck;
    }
}

}  // namespace ricci::cli

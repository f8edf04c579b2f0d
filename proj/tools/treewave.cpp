#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "treewave/io.hpp"

using namespace treewave;

namespace {

enum Exit { ok = 0, bad_params = 2, failed_verification = 3, inconclusive = 4 };

// Carries a message and an exit code out of a subcommand.
struct Stop {
    int code;
    std::string message;
};

struct RunConfig {
    std::string family = "mary";
    int m = 2;
    int h = 2;
    int k = 3;
    int t = 1;
    std::string shape = "path";
    std::string method = "construct";
    std::string format;
    std::string out;
    std::string in = "-";
    std::string kind = "total";
    int n = 5;
    std::int64_t budget_ms = 60'000;
    std::size_t cap = 50'000;
    std::size_t exact_cap = 100;
    std::string m_range = "1..4";
    std::string h_range = "1..3";
    bool verify = false;
    bool conflict = false;
};

void emit(const RunConfig& cfg, const std::string& text)
{
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw Stop{bad_params, "cannot write " + cfg.out};
    f << text;
}

std::string with_newline(std::string s)
{
    if (s.empty() || s.back() != '\n') s += '\n';
    return s;
}

std::string format_or(const RunConfig& cfg, const char* fallback, std::initializer_list<const char*> allowed)
{
    const std::string f = cfg.format.empty() ? fallback : cfg.format;
    for (const char* a : allowed)
        if (f == a) return f;
    throw Stop{bad_params, "format " + f + " is not available for this subcommand"};
}

Tree build_tree(const RunConfig& cfg)
{
    if (cfg.family == "mary") return build_complete_mary_tree(cfg.m, cfg.h);
    if (cfg.family == "spider") return build_spider(cfg.k, cfg.t, parse_spider_shape(cfg.shape));
    if (cfg.family == "double") return build_double_tree(cfg.m, cfg.h);
    throw std::invalid_argument("unknown family " + cfg.family);
}

std::size_t path_count(std::int64_t n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

void require_cap(const RunConfig& cfg, const Tree& tree)
{
    const auto paths = path_count(tree.size());
    if (paths > cfg.cap)
        throw Stop{bad_params, std::to_string(paths) + " paths exceed the cap of " + std::to_string(cfg.cap)};
}

std::pair<int, int> parse_range(const std::string& s)
{
    try {
        const auto dots = s.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return {v, v};
        }
        const std::string a = s.substr(0, dots), b = s.substr(dots + 2);
        const int lo = std::stoi(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        const int hi = std::stoi(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw Stop{bad_params, "bad range " + s + " (expected a..b)"};
    }
}

std::string ratio_string(Rational r)
{
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string set_string(const std::vector<Vertex>& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

int cmd_build(const RunConfig& cfg)
{
    const Tree tree = build_tree(cfg);
    if (cfg.conflict) {
        format_or(cfg, "json", {"json"});
        require_cap(cfg, tree);
        emit(cfg, with_newline(to_json(conflict_graph(all_pairs_routing(tree, true))).dump()));
        return ok;
    }
    if (format_or(cfg, "json", {"json", "dot"}) == "dot")
        emit(cfg, to_dot(tree));
    else
        emit(cfg, with_newline(to_json(tree).dump()));
    return ok;
}

WavelengthAssignment construct(const RunConfig& cfg, const Tree& tree, const Routing& routing)
{
    if (cfg.method == "greedy") return greedy_coloring(routing);
    if (cfg.family == "mary") return color_mary(cfg.m, cfg.h);
    if (cfg.family == "double") return color_double_tree(cfg.m, cfg.h);
    if (cfg.k >= 3 && cfg.k % 2 == 1) return color_odd_spider(tree, routing);
    throw Stop{bad_params, "no construction for spiders with even k; use --method greedy"};
}

int cmd_color(const RunConfig& cfg)
{
    const std::string format = format_or(cfg, "text", {"text", "json", "csv"});
    const Tree tree = build_tree(cfg);
    require_cap(cfg, tree);
    const Routing routing = all_pairs_routing(tree);

    WavelengthAssignment wa;
    try {
        wa = construct(cfg, tree, routing);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::logic_error& e) {
        throw Stop{failed_verification, e.what()};
    }

    std::optional<VerifyReport> report;
    if (cfg.verify) report = verify_assignment(routing, wa);
    const bool proper = !report || (report->proper && report->num_colors == wa.num_colors);

    if (format == "json")
        emit(cfg, with_newline(to_json(wa, routing, tree.family(), proper).dump()));
    else if (format == "csv")
        emit(cfg, to_csv(wa, routing));
    else {
        std::string line = std::to_string(wa.num_colors) + " colors";
        if (report) line += proper ? ", proper" : ", improper (" + std::to_string(report->violations.size()) + " conflicts)";
        emit(cfg, line + "\n");
    }
    return proper ? ok : failed_verification;
}

int cmd_bounds(const RunConfig& cfg)
{
    const std::string format = format_or(cfg, "text", {"text", "json"});
    const Tree tree = build_tree(cfg);
    if (tree.size() < 2) throw Stop{bad_params, "bounds need at least two vertices"};

    const CutCertificate edge = edge_cut_bound_tree(tree);
    std::optional<CutCertificate> vertex;
    if (tree.size() >= 3) vertex = best_vertex_cut_bound(tree);
    const std::int64_t pi = forwarding_index_tree(tree);

    if (format == "json") {
        json j;
        j["family"] = family_to_json(tree.family());
        j["edge_cut"] = to_json(edge);
        j["vertex_cut"] = vertex ? to_json(*vertex) : json(nullptr);
        j["pi"] = pi;
        emit(cfg, with_newline(j.dump()));
        return ok;
    }
    std::ostringstream os;
    os << "edge_cut " << edge.bound << " (edge " << *edge.witness_edge << ")\n";
    if (vertex)
        os << "vertex_cut " << vertex->bound << " (S = " << set_string(vertex->witness_set) << ")\n";
    else
        os << "vertex_cut none\n";
    os << "pi " << pi << "\n";
    emit(cfg, os.str());
    return ok;
}

int cmd_designs(const RunConfig& cfg)
{
    const std::string format = format_or(cfg, "text", {"text", "json"});
    std::ostringstream os;
    bool valid = false;
    if (cfg.kind == "total") {
        const TotalColoring tc = total_coloring_odd(cfg.n);
        valid = validate_total_coloring(tc);
        if (format == "json") {
            os << to_json(tc).dump() << "\n";
        } else {
            os << "total coloring of K_" << tc.n << ", " << tc.num_colors() << " colors\n";
            for (int i = 0; i < tc.n; ++i) {
                for (int j = 0; j < tc.n; ++j) os << (j ? " " : "") << (i == j ? tc.vertex_color[i] : tc.edge(i, j));
                os << "\n";
            }
        }
    } else {
        const EdgeColoring ec = one_factorization(cfg.n);
        valid = validate_edge_coloring(ec);
        if (format == "json") {
            os << to_json(ec).dump() << "\n";
        } else {
            os << "1-factorization of K_" << ec.m << ", " << ec.num_colors() << " matchings\n";
            for (int c = 0; c < ec.num_colors(); ++c) {
                os << c << ":";
                for (int i = 0; i < ec.m; ++i)
                    for (int j = i + 1; j < ec.m; ++j)
                        if (ec.edge(i, j) == c) os << " " << i << "-" << j;
                os << "\n";
            }
        }
    }
    emit(cfg, os.str());
    return valid ? ok : failed_verification;
}

int cmd_certify(const RunConfig& cfg)
{
    const std::string format = format_or(cfg, "text", {"text", "json"});
    const OptimalityCertificate c = certify(cfg.m, cfg.h, CertifyOptions{cfg.budget_ms, cfg.exact_cap});
    if (format == "json") {
        emit(cfg, with_newline(to_json(c).dump()));
    } else {
        std::ostringstream os;
        os << (c.optimal ? "optimal" : "not proven optimal") << " via " << to_string(c.lower_bound_source) << ", lower "
           << c.lower << (c.optimal ? " = " : " < ") << "constructive " << c.constructive;
        if (c.exact) os << ", exact " << *c.exact;
        if (c.budget_exhausted) os << ", budget exhausted";
        emit(cfg, os.str() + "\n");
    }
    return c.optimal ? ok : inconclusive;
}

int cmd_table(const RunConfig& cfg)
{
    const std::string format = format_or(cfg, "csv", {"csv", "json"});
    const auto [m_lo, m_hi] = parse_range(cfg.m_range);
    const auto [h_lo, h_hi] = parse_range(cfg.h_range);
    if (m_lo > m_hi || h_lo > h_hi) throw Stop{bad_params, "empty range"};
    if (m_lo < 1 || h_lo < 1) throw Stop{bad_params, "ranges start at 1"};

    json rows = json::array();
    for (int m = m_lo; m <= m_hi; ++m)
        for (int h = h_lo; h <= h_hi; ++h) {
            const Tree tree = build_complete_mary_tree(m, h);
            const std::int64_t w = closed_form_w(m, h);
            const std::int64_t pi = forwarding_index_tree(tree);
            json row;
            row["m"] = m;
            row["h"] = h;
            row["paths"] = path_count(tree.size());
            row["w"] = w;
            if (path_count(tree.size()) <= cfg.cap) {
                const Routing routing = all_pairs_routing(tree);
                const WavelengthAssignment wa = color_mary(m, h);
                const VerifyReport report = verify_assignment(routing, wa);
                row["constructive"] = wa.num_colors;
                row["proper"] = report.proper;
            } else {
                row["constructive"] = "skipped";
                row["proper"] = "skipped";
            }
            row["edge_cut"] = edge_cut_bound_tree(tree).bound;
            row["vertex_cut"] = tree.size() >= 3 ? json(best_vertex_cut_bound(tree).bound) : json(nullptr);
            row["pi"] = pi;
            row["ratio"] = ratio_string(Rational(w, pi));
            rows.push_back(std::move(row));
        }

    if (format == "json") {
        emit(cfg, with_newline(json{{"rows", rows}}.dump()));
        return ok;
    }
    std::ostringstream os;
    os << "m,h,paths,w,constructive,proper,edge_cut,vertex_cut,pi,ratio\n";
    for (const auto& row : rows) {
        bool first = true;
        for (const auto& [key, value] : row.items()) {
            os << (first ? "" : ",");
            first = false;
            if (value.is_string())
                os << value.get<std::string>();
            else if (!value.is_null())
                os << value.dump();
        }
        os << "\n";
    }
    emit(cfg, os.str());
    return ok;
}

int cmd_oracle(const RunConfig& cfg)
{
    format_or(cfg, "json", {"json"});
    std::string text;
    if (cfg.in == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(cfg.in, std::ios::binary);
        if (!f) throw Stop{bad_params, "cannot read " + cfg.in};
        text.assign(std::istreambuf_iterator<char>(f), {});
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Stop{bad_params, e.what()};
    }
    // A tree document is turned into its conflict graph first.
    const ConflictGraph cg = doc.contains("parents") ? conflict_graph(all_pairs_routing(tree_from_json(doc), true))
                                                     : conflict_graph_from_json(doc);
    const ChromaticResult r = exact_chromatic(cg, 0, 0, cfg.budget_ms);
    emit(cfg, with_newline(to_json(r).dump()));
    return r.exact ? ok : inconclusive;
}

std::int64_t default_budget()
{
    if (const char* env = std::getenv("TREEWAVE_BUDGET_MS")) {
        try {
            return std::stoll(env);
        } catch (const std::logic_error&) {
        }
    }
    return 60'000;
}

void add_family(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--family", cfg.family, "Tree family")->check(CLI::IsMember({"mary", "spider", "double"}))->capture_default_str();
    sub->add_option("-m", cfg.m, "Branching factor m")->capture_default_str();
    sub->add_option("-H,--height", cfg.h, "Height h (capital H; -h is help)")->capture_default_str();
    sub->add_option("-k", cfg.k, "Spider: number of components")->capture_default_str();
    sub->add_option("-t", cfg.t, "Spider: vertices per component")->capture_default_str();
    sub->add_option("--shape", cfg.shape, "Spider component shape")
        ->check(CLI::IsMember({"path", "star", "full_mary", "full_mary_if_applicable"}))
        ->capture_default_str();
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv)
{
    RunConfig cfg;
    cfg.budget_ms = default_budget();

    CLI::App app{"Optical index of trees: routing, wavelength colorings, bounds and certificates"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "Build a tree and write it as JSON or DOT");
    add_family(build, cfg);
    add_common(build, cfg);
    build->add_flag("--conflict-graph", cfg.conflict, "Write the conflict graph of the all-to-all routing instead");
    build->add_option("--cap", cfg.cap, "Largest routing (in paths) to expand")->capture_default_str();

    auto* color = app.add_subcommand("color", "Color the all-to-all routing of a tree");
    add_family(color, cfg);
    add_common(color, cfg);
    color->add_option("--method", cfg.method, "Coloring method")->check(CLI::IsMember({"construct", "greedy"}))->capture_default_str();
    color->add_flag("--verify", cfg.verify, "Check the assignment before exiting");
    color->add_option("--cap", cfg.cap, "Largest routing (in paths) to color")->capture_default_str();

    auto* bounds = app.add_subcommand("bounds", "Edge-cut and vertex-cut lower bounds and the forwarding index");
    add_family(bounds, cfg);
    add_common(bounds, cfg);

    auto* designs = app.add_subcommand("designs", "Total colorings of K_n (odd n) and 1-factorizations of K_n (even n)");
    designs->add_option("--kind", cfg.kind, "Design")->check(CLI::IsMember({"total", "factorization"}))->capture_default_str();
    designs->add_option("-n", cfg.n, "Order of the complete graph")->capture_default_str();
    add_common(designs, cfg);

    auto* cert = app.add_subcommand("certify", "Prove optimality of the construction for T_{m,h}");
    cert->add_option("-m", cfg.m, "Branching factor m")->capture_default_str();
    cert->add_option("-H,--height", cfg.h, "Height h")->capture_default_str();
    cert->add_option("--budget-ms", cfg.budget_ms, "Exact search budget (default TREEWAVE_BUDGET_MS or 60000)");
    cert->add_option("--exact-cap", cfg.exact_cap, "Largest conflict graph handed to the exact search")->capture_default_str();
    add_common(cert, cfg);

    auto* table = app.add_subcommand("table", "One row per (m,h): closed form, construction, bounds, ratio");
    table->add_option("--m-range", cfg.m_range, "Range a..b of m")->capture_default_str();
    table->add_option("--h-range", cfg.h_range, "Range a..b of h")->capture_default_str();
    table->add_option("--cap", cfg.cap, "Largest routing (in paths) to color")->capture_default_str();
    add_common(table, cfg);

    auto* oracle = app.add_subcommand("oracle", "Exact chromatic number of a serialized conflict graph or tree");
    oracle->add_option("--in", cfg.in, "Input JSON file (- for stdin)")->capture_default_str();
    oracle->add_option("--budget-ms", cfg.budget_ms, "Search budget (default TREEWAVE_BUDGET_MS or 60000)");
    add_common(oracle, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : bad_params;
    }

    try {
        if (*build) return cmd_build(cfg);
        if (*color) return cmd_color(cfg);
        if (*bounds) return cmd_bounds(cfg);
        if (*designs) return cmd_designs(cfg);
        if (*cert) return cmd_certify(cfg);
        if (*table) return cmd_table(cfg);
        if (*oracle) return cmd_oracle(cfg);
    } catch (const Stop& s) {
        std::cerr << "treewave: " << s.message << "\n";
        return s.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "treewave: " << e.what() << "\n";
        return bad_params;
    } catch (const std::out_of_range& e) {
        std::cerr << "treewave: " << e.what() << "\n";
        return bad_params;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "treewave: " << e.what() << "\n";
        return bad_params;
    } catch (const std::logic_error& e) {
        std::cerr << "treewave: " << e.what() << "\n";
        return failed_verification;
    }
    return bad_params;
}

#include "treewave/io.hpp"

#include <sstream>
#include <stdexcept>

namespace treewave {

json family_to_json(const Family& f)
{
    json j;
    switch (f.kind) {
    case Family::Kind::mary:
        j["kind"] = "mary";
        j["m"] = f.m;
        j["h"] = f.h;
        break;
    case Family::Kind::spider:
        j["kind"] = "spider";
        j["k"] = f.k;
        j["t"] = f.t;
        j["shape"] = to_string(f.shape);
        break;
    case Family::Kind::double_tree:
        j["kind"] = "double";
        j["m"] = f.m;
        j["h"] = f.h;
        break;
    case Family::Kind::explicit_tree: j["kind"] = "explicit"; break;
    }
    return j;
}

namespace {

Family family_from_json(const json& j)
{
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "mary") return Family::mary(j.at("m"), j.at("h"));
    if (kind == "spider") return Family::spider(j.at("k"), j.at("t"), parse_spider_shape(j.at("shape")));
    if (kind == "double") return Family::double_tree(j.at("m"), j.at("h"));
    if (kind == "explicit") return Family::explicit_tree();
    throw std::invalid_argument("unknown tree family: " + kind);
}

}  // namespace

json to_json(const Tree& tree)
{
    json j;
    j["family"] = family_to_json(tree.family());
    j["n"] = tree.size();
    j["parents"] = std::vector<int>(tree.parents().begin(), tree.parents().end());
    j["labels"] = tree.labels();
    return j;
}

Tree tree_from_json(const json& j)
{
    auto parents = j.at("parents").get<std::vector<int>>();
    std::vector<VertexAddress> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<VertexAddress>>();
    const Family family = j.contains("family") ? family_from_json(j.at("family")) : Family::explicit_tree();
    if (j.contains("n") && j.at("n").get<std::size_t>() != parents.size())
        throw std::invalid_argument("tree JSON: n does not match parents");
    return Tree(std::move(parents), std::move(labels), family);
}

std::string to_dot(const Tree& tree)
{
    std::ostringstream os;
    os << "graph \"" << to_string(tree.family()) << "\" {\n";
    for (Vertex v = 0; v < tree.size(); ++v) {
        os << "  " << v;
        if (tree.has_labels()) {
            os << " [label=\"r";
            const auto& a = tree.label(v);
            for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "_") << a[i];
            os << "\"]";
        }
        os << ";\n";
    }
    for (Vertex v = 1; v < tree.size(); ++v) os << "  " << tree.parent(v) << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

json to_json(const CutCertificate& c)
{
    json j;
    j["kind"] = to_string(c.kind);
    if (c.witness_edge)
        j["witness"] = {{"edge", *c.witness_edge}, {"set", c.witness_set}};
    else
        j["witness"] = {{"set", c.witness_set}};
    j["crossing"] = c.crossing;
    j["bound"] = c.bound;
    j["components"] = c.component_sizes;
    return j;
}

json to_json(const TotalColoring& tc)
{
    json j;
    j["type"] = "total_coloring";
    j["n"] = tc.n;
    j["color_base"] = 0;
    j["num_colors"] = tc.num_colors();
    j["vertex_colors"] = tc.vertex_color;
    json edges = json::array();
    for (int i = 0; i < tc.n; ++i)
        for (int k = i + 1; k < tc.n; ++k) edges.push_back({i, k, tc.edge(i, k)});
    j["edges"] = edges;
    j["valid"] = validate_total_coloring(tc);
    return j;
}

json to_json(const EdgeColoring& ec)
{
    json j;
    j["type"] = "one_factorization";
    j["m"] = ec.m;
    j["color_base"] = 0;
    j["num_colors"] = ec.num_colors();
    json edges = json::array();
    for (int i = 0; i < ec.m; ++i)
        for (int k = i + 1; k < ec.m; ++k) edges.push_back({i, k, ec.edge(i, k)});
    j["edges"] = edges;
    j["valid"] = validate_edge_coloring(ec);
    return j;
}

json to_json(const WavelengthAssignment& wa, const Routing& routing, const Family& family, bool proper)
{
    json j;
    j["family"] = family_to_json(family);
    j["m"] = family.m;
    j["h"] = family.h;
    j["num_colors"] = wa.num_colors;
    json paths = json::array();
    for (std::size_t i = 0; i < routing.size(); ++i)
        paths.push_back({{"u", routing[i].u}, {"v", routing[i].v}, {"color", wa.colors[i]}});
    j["paths"] = std::move(paths);
    j["proper"] = proper;
    j["method"] = to_string(wa.method);
    return j;
}

std::string to_csv(const WavelengthAssignment& wa, const Routing& routing)
{
    std::ostringstream os;
    os << "u,v,color\n";
    for (std::size_t i = 0; i < routing.size(); ++i) os << routing[i].u << ',' << routing[i].v << ',' << wa.colors[i] << '\n';
    return os.str();
}

json to_json(const OptimalityCertificate& c)
{
    json j;
    j["m"] = c.instance.m;
    j["h"] = c.instance.h;
    j["lower"] = c.lower;
    j["source"] = to_string(c.lower_bound_source);
    j["constructive"] = c.constructive;
    j["optimal"] = c.optimal;
    j["exact"] = c.exact ? json(*c.exact) : json(nullptr);
    return j;
}

json to_json(const ChromaticResult& r)
{
    json j;
    j["lower"] = r.lower;
    j["upper"] = r.upper;
    j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
    j["budget_exhausted"] = r.budget_exhausted;
    if (r.witness) j["witness"] = r.witness->colors;
    return j;
}

json to_json(const ConflictGraph& cg)
{
    json edges = json::array();
    for (int i = 0; i < cg.order(); ++i)
        for (int k = i + 1; k < cg.order(); ++k)
            if (cg.adjacent(i, k)) edges.push_back({i, k});
    json j;
    j["order"] = cg.order();
    j["edges"] = std::move(edges);
    if (cg.tree_max_load) j["tree_max_load"] = *cg.tree_max_load;
    if (cg.tree_clique_number) j["tree_clique_number"] = *cg.tree_clique_number;
    return j;
}

ConflictGraph conflict_graph_from_json(const json& j)
{
    const int order = j.at("order").get<int>();
    if (order < 0) throw std::invalid_argument("conflict graph JSON: negative order");
    ConflictGraph cg(order);
    for (const auto& e : j.at("edges")) {
        const int a = e.at(0).get<int>(), b = e.at(1).get<int>();
        if (a < 0 || b < 0 || a >= order || b >= order || a == b)
            throw std::invalid_argument("conflict graph JSON: bad edge");
        cg.add_edge(a, b);
    }
    if (j.contains("tree_max_load")) cg.tree_max_load = j.at("tree_max_load").get<std::int64_t>();
    if (j.contains("tree_clique_number")) cg.tree_clique_number = j.at("tree_clique_number").get<std::int64_t>();
    return cg;
}

}  // namespace treewave

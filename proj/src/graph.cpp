#include "ricci/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <fstream>

namespace ricci {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels) {
    if (n < 0) throw ParseError("graph: negative vertex count");
    if (static_cast<int>(labels.size()) != n) throw ParseError("graph: label count mismatch");
    {
        std::set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw ParseError("graph: duplicate label '" + l + "'");
    }
    labels_ = std::move(labels);
    std::vector<std::set<int>> nb(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("graph: edge endpoint out of range");
        if (u == v) throw ParseError("graph: self-loop at vertex " + labels_[u]);
        nb[u].insert(v);
        nb[v].insert(u);
    }
    adj_.resize(n);
    for (int v = 0; v < n; ++v) adj_[v].assign(nb[v].begin(), nb[v].end());
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& nb : adj_) total += static_cast<int>(nb.size());
    return total / 2;
}

bool Graph::is_regular() const {
    for (int v = 1; v < vertex_count(); ++v)
        if (degree(v) != degree(0)) return false;
    return true;
}

std::optional<int> Graph::find_label(const std::string& label) const {
    for (int v = 0; v < vertex_count(); ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

int Graph::require_label(const std::string& label) const {
    if (auto v = find_label(label)) return *v;
    throw PreconditionError("graph: no vertex labeled '" + label + "'");
}

Graph parse_edge_list(std::istream& in) {
    std::map<std::string, int> index_of;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](const std::string& label) {
        auto [it, inserted] = index_of.try_emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream tokens(line);
        std::string u, v, extra;
        if (!(tokens >> u)) continue;  // blank or comment-only line
        if (!(tokens >> v) || (tokens >> extra))
            throw ParseError("edge list line " + std::to_string(line_no) +
                             ": expected exactly two tokens");
        if (u == v)
            throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop '" + u +
                             "'");
        int ui = intern(u);
        int vi = intern(v);
        edges.emplace_back(ui, vi);
    }
    int n = static_cast<int>(labels.size());
    return Graph(n, std::move(edges), std::move(labels));
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string dump_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += g.label(u);
        out += ' ';
        out += g.label(v);
        out += '\n';
    }
    return out;
}

namespace {

Graph build_labeled(std::vector<std::string> labels,
                    const std::vector<std::pair<std::string, std::string>>& edges) {
    std::map<std::string, int> idx;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) idx[labels[i]] = i;
    std::vector<std::pair<int, int>> e;
    e.reserve(edges.size());
    for (const auto& [a, b] : edges) e.emplace_back(idx.at(a), idx.at(b));
    int n = static_cast<int>(labels.size());
    return Graph(n, std::move(e), std::move(labels));
}

std::vector<std::string> generator_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    return labels;
}

Graph make_cycle(int n) {
    if (n < 3) throw ParseError("cycle:n requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges), generator_labels(n));
}

Graph make_complete(int n) {
    if (n < 2) throw ParseError("complete:n requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, std::move(edges), generator_labels(n));
}

Graph make_path(int n) {
    if (n < 2) throw ParseError("path:n requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges), generator_labels(n));
}

Graph make_hypercube(int k) {
    if (k < 1 || k > 20) throw ParseError("hypercube:k requires 1 <= k <= 20");
    int n = 1 << k;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < k; ++b)
            if (!(v & (1 << b))) edges.emplace_back(v, v | (1 << b));
    return Graph(n, std::move(edges), generator_labels(n));
}

Graph make_petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);      // outer pentagon
        edges.emplace_back(i, i + 5);            // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, std::move(edges), generator_labels(10));
}

// 3-regular graph on 8 vertices: outer 5-cycle o1..o5 (o4, o5 relabeled
// y1, y2), inner path i1 i2 i3 bridging o5..o4, spokes i_k o_k.
Graph make_h1() {
    return build_labeled(
        {"o1", "o2", "o3", "y1", "y2", "i1", "i2", "i3"},
        {{"o1", "o2"}, {"o2", "o3"}, {"o3", "y1"}, {"y1", "y2"}, {"y2", "o1"},
         {"y2", "i1"}, {"i1", "i2"}, {"i2", "i3"}, {"i3", "y1"},
         {"i1", "o1"}, {"i2", "o2"}, {"i3", "o3"}});
}

// 3-regular graph on 10 vertices: outer 6-cycle o1..o6 (o5, o6 relabeled
// y1, y2), inner path i1..i4 bridging o2..o3, one spoke per outer vertex.
Graph make_h2() {
    return build_labeled(
        {"o1", "o2", "o3", "o4", "y1", "y2", "i1", "i2", "i3", "i4"},
        {{"o1", "o2"}, {"o2", "o3"}, {"o3", "o4"}, {"o4", "y1"}, {"y1", "y2"}, {"y2", "o1"},
         {"o2", "i1"}, {"i1", "i2"}, {"i2", "i3"}, {"i3", "i4"}, {"i4", "o3"},
         {"o1", "i1"}, {"y2", "i2"}, {"y1", "i3"}, {"o4", "i4"}});
}

}  // namespace

Graph generate(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    auto arg = [&]() -> int {
        if (colon == std::string::npos)
            throw ParseError("generator '" + name + "' needs a ':n' argument");
        std::string num = spec.substr(colon + 1);
        if (num.empty() || !std::all_of(num.begin(), num.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
            throw ParseError("generator argument '" + num + "' is not a number");
        long value = std::stol(num);
        if (value > 1'000'000) throw ParseError("generator argument out of range");
        return static_cast<int>(value);
    };
    auto no_arg = [&]() {
        if (colon != std::string::npos)
            throw ParseError("generator '" + name + "' takes no argument");
    };
    if (name == "cycle") return make_cycle(arg());
    if (name == "complete") return make_complete(arg());
    if (name == "path") return make_path(arg());
    if (name == "hypercube") return make_hypercube(arg());
    if (name == "petersen") { no_arg(); return make_petersen(); }
    if (name == "h1") { no_arg(); return make_h1(); }
    if (name == "h2") { no_arg(); return make_h2(); }
    throw ParseError("unknown generator '" + name + "'");
}

std::vector<std::optional<int>> bfs_distance(const Graph& g, int s) {
    if (s < 0 || s >= g.vertex_count()) throw PreconditionError("bfs: source out of range");
    std::vector<std::optional<int>> dist(g.vertex_count());
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u))
            if (!dist[v]) {
                dist[v] = *dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

int graph_distance(const Graph& g, int u, int v) {
    auto dist = bfs_distance(g, u);
    if (!dist.at(v))
        throw PreconditionError("distance: '" + g.label(u) + "' and '" + g.label(v) +
                                "' are in different components");
    return *dist[v];
}

EdgeNeighborhood edge_neighborhood(const Graph& g, int x, int y) {
    if (!g.has_edge(x, y))
        throw PreconditionError("edge_neighborhood: '" + g.label(x) + "' and '" + g.label(y) +
                                "' are not adjacent");
    EdgeNeighborhood nb;
    nb.x = x;
    nb.y = y;
    const auto& nx = g.neighbors(x);
    const auto& ny = g.neighbors(y);
    std::set_intersection(nx.begin(), nx.end(), ny.begin(), ny.end(),
                          std::back_inserter(nb.triangle));
    for (int z : nx)
        if (z != y && !std::binary_search(nb.triangle.begin(), nb.triangle.end(), z))
            nb.r_x.push_back(z);
    for (int z : ny)
        if (z != x && !std::binary_search(nb.triangle.begin(), nb.triangle.end(), z))
            nb.r_y.push_back(z);
    return nb;
}

std::string edge_kind_str(EdgeKind k) {
    switch (k) {
        case EdgeKind::Horizontal: return "horizontal";
        case EdgeKind::Vertical: return "vertical";
        case EdgeKind::Diagonal: return "diagonal";
    }
    return "?";
}

int ProductGraph::vertex_of(int g_index, int h_index) const {
    int nh = right_factor.vertex_count();
    return g_index * nh + h_index;
}

namespace {

ProductGraph make_product(const Graph& g, const Graph& h, bool strong) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw PreconditionError("product: factors must be nonempty");
    int ng = g.vertex_count(), nh = h.vertex_count();
    ProductGraph p;
    p.left_factor = g;
    p.right_factor = h;
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(ng) * nh);
    p.coords.reserve(static_cast<std::size_t>(ng) * nh);
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) {
            labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
            p.coords.emplace_back(a, b);
        }
    auto id = [nh](int a, int b) { return a * nh + b; };
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < ng; ++a)
        for (int b = 0; b < nh; ++b) {
            for (int b2 : h.neighbors(b))
                if (b < b2) edges.emplace_back(id(a, b), id(a, b2));  // horizontal
            for (int a2 : g.neighbors(a)) {
                if (a < a2) edges.emplace_back(id(a, b), id(a2, b));  // vertical
                if (strong)
                    for (int b2 : h.neighbors(b))
                        if (a < a2) edges.emplace_back(id(a, b), id(a2, b2));  // diagonal
            }
        }
    p.graph = Graph(ng * nh, std::move(edges), std::move(labels));
    return p;
}

}  // namespace

ProductGraph strong_product(const Graph& g, const Graph& h) { return make_product(g, h, true); }

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
    return make_product(g, h, false);
}

EdgeKind classify_edge(const ProductGraph& p, int u, int v) {
    if (!p.graph.has_edge(u, v))
        throw PreconditionError("classify_edge: '" + p.graph.label(u) + "' and '" +
                                p.graph.label(v) + "' are not adjacent");
    auto [gu, hu] = p.coords.at(u);
    auto [gv, hv] = p.coords.at(v);
    if (gu == gv) return EdgeKind::Horizontal;
    if (hu == hv) return EdgeKind::Vertical;
    return EdgeKind::Diagonal;
}

bool closed_neighborhood_equal(const Graph& g, int x1, int x2) {
    if (x1 == x2) return true;
    std::vector<int> n1 = g.neighbors(x1), n2 = g.neighbors(x2);
    n1.push_back(x1);
    n2.push_back(x2);
    std::sort(n1.begin(), n1.end());
    std::sort(n2.begin(), n2.end());
    return n1 == n2;
}

}  // namespace ricci

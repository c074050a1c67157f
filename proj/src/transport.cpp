#include "ricci/transport.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace ricci {

namespace {

struct Arc {
    int to;
    std::int64_t cost;
    Integer capacity;  // residual
    int reverse;       // index of the paired arc in graph[to]
};

// Residual network for successive shortest augmenting paths. Node layout:
// 0 = source, 1..S supply sites, S+1..S+D demand sites, S+D+1 = sink.
class ResidualNetwork {
  public:
    explicit ResidualNetwork(int nodes) : graph_(nodes) {}

    void add_arc(int from, int to, std::int64_t cost, Integer capacity) {
        graph_[from].push_back({to, cost, std::move(capacity),
                                static_cast<int>(graph_[to].size())});
        graph_[to].push_back({from, -cost, Integer(0),
                              static_cast<int>(graph_[from].size()) - 1});
    }

    // Sends `total` units from source to sink along successive shortest
    // paths, Dijkstra on reduced costs. Returns false if the network
    // cannot carry the full amount.
    bool send(int source, int sink, const Integer& total) {
        int n = static_cast<int>(graph_.size());
        std::vector<std::int64_t> potential(n, 0);
        potential_.assign(n, 0);
        Integer sent = 0;
        while (sent < total) {
            constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
            std::vector<std::int64_t> dist(n, kInf);
            std::vector<std::pair<int, int>> parent(n, {-1, -1});  // (node, arc index)
            using Entry = std::pair<std::int64_t, int>;
            std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
            dist[source] = 0;
            heap.push({0, source});
            while (!heap.empty()) {
                auto [d, u] = heap.top();
                heap.pop();
                if (d > dist[u]) continue;
                for (int i = 0; i < static_cast<int>(graph_[u].size()); ++i) {
                    const Arc& arc = graph_[u][i];
                    if (arc.capacity == 0) continue;
                    std::int64_t reduced = arc.cost + potential[u] - potential[arc.to];
                    if (dist[arc.to] > d + reduced) {
                        dist[arc.to] = d + reduced;
                        parent[arc.to] = {u, i};
                        heap.push({dist[arc.to], arc.to});
                    }
                }
            }
            if (dist[sink] == kInf) return false;
            for (int v = 0; v < n; ++v)
                potential[v] += std::min(dist[v], dist[sink]);
            Integer bottleneck = total - sent;
            for (int v = sink; v != source; v = parent[v].first) {
                auto [u, i] = parent[v];
                bottleneck = std::min(bottleneck, graph_[u][i].capacity);
            }
            for (int v = sink; v != source; v = parent[v].first) {
                auto [u, i] = parent[v];
                Arc& fwd = graph_[u][i];
                fwd.capacity -= bottleneck;
                graph_[fwd.to][fwd.reverse].capacity += bottleneck;
            }
            sent += bottleneck;
        }
        potential_ = std::move(potential);
        return true;
    }

    const std::vector<std::int64_t>& potential() const { return potential_; }
    const std::vector<std::vector<Arc>>& arcs() const { return graph_; }

  private:
    std::vector<std::vector<Arc>> graph_;
    std::vector<std::int64_t> potential_;
};

void validate_problem(const TransportProblem& p) {
    Rational total_supply = 0, total_demand = 0;
    for (const auto& m : p.supply) {
        if (m < 0) throw PreconditionError("transport: negative supply mass");
        total_supply += m;
    }
    for (const auto& m : p.demand) {
        if (m < 0) throw PreconditionError("transport: negative demand mass");
        total_demand += m;
    }
    if (total_supply != total_demand)
        throw PreconditionError("transport: unbalanced problem");
    if (p.cost.size() != p.supply.size())
        throw PreconditionError("transport: cost matrix row count mismatch");
    for (const auto& row : p.cost) {
        if (row.size() != p.demand.size())
            throw PreconditionError("transport: cost matrix column count mismatch");
        for (int c : row)
            if (c < 0) throw PreconditionError("transport: negative or infinite cost entry");
    }
}

}  // namespace

TransportPlan solve_transport(const TransportProblem& p) {
    validate_problem(p);
    int ns = static_cast<int>(p.supply.size());
    int nd = static_cast<int>(p.demand.size());

    // Scale all masses by the LCM of their denominators; the flow network
    // is then purely integral.
    Integer scale = 1;
    for (const auto& m : p.supply)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.get_den_mpz_t());
    for (const auto& m : p.demand)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.get_den_mpz_t());

    int source = 0, sink = ns + nd + 1;
    ResidualNetwork net(ns + nd + 2);
    Integer total = 0;
    auto scaled_mass = [&scale](const Rational& m) {
        Rational s = m * scale;
        s.canonicalize();
        return s.get_num();
    };
    for (int i = 0; i < ns; ++i) {
        Integer a = scaled_mass(p.supply[i]);
        total += a;
        net.add_arc(source, 1 + i, 0, std::move(a));
    }
    for (int j = 0; j < nd; ++j)
        net.add_arc(1 + ns + j, sink, 0, scaled_mass(p.demand[j]));
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nd; ++j)
            net.add_arc(1 + i, 1 + ns + j, p.cost[i][j], total);

    if (!net.send(source, sink, total))
        throw PreconditionError("transport: network cannot carry the full mass");

    TransportPlan plan;
    plan.total_cost = 0;
    // Flow on a supply->demand arc is the capacity accumulated on its
    // reverse arc.
    for (int i = 0; i < ns; ++i) {
        for (const Arc& arc : net.arcs()[1 + i]) {
            if (arc.to <= ns || arc.to == sink || arc.cost < 0) continue;
            const Arc& rev = net.arcs()[arc.to][arc.reverse];
            if (rev.capacity == 0) continue;
            Rational mass(rev.capacity, scale);
            mass.canonicalize();
            plan.total_cost += mass * arc.cost;
            plan.flows.push_back({i, arc.to - 1 - ns, std::move(mass)});
        }
    }
    const auto& pot = net.potential();
    plan.u.resize(ns);
    plan.v.resize(nd);
    for (int i = 0; i < ns; ++i) plan.u[i] = -pot[1 + i];
    for (int j = 0; j < nd; ++j) plan.v[j] = pot[1 + ns + j];
    return plan;
}

bool validate_transport_plan(const TransportProblem& p, const TransportPlan& plan) {
    int ns = static_cast<int>(p.supply.size());
    int nd = static_cast<int>(p.demand.size());
    std::vector<Rational> row(ns, Rational(0)), col(nd, Rational(0));
    Rational cost = 0;
    for (const auto& f : plan.flows) {
        if (f.supply_site < 0 || f.supply_site >= ns || f.demand_site < 0 || f.demand_site >= nd)
            return false;
        if (f.mass < 0) return false;
        row[f.supply_site] += f.mass;
        col[f.demand_site] += f.mass;
        cost += f.mass * p.cost[f.supply_site][f.demand_site];
        // complementary slackness
        if (f.mass > 0 &&
            plan.u[f.supply_site] + plan.v[f.demand_site] != p.cost[f.supply_site][f.demand_site])
            return false;
    }
    for (int i = 0; i < ns; ++i)
        if (row[i] != p.supply[i]) return false;
    for (int j = 0; j < nd; ++j)
        if (col[j] != p.demand[j]) return false;
    if (cost != plan.total_cost) return false;
    // dual feasibility
    for (int i = 0; i < ns; ++i)
        for (int j = 0; j < nd; ++j)
            if (plan.u[i] + plan.v[j] > p.cost[i][j]) return false;
    return true;
}

}  // namespace ricci

#include "iscover/netapp.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

#include "iscover/errors.hpp"
#include "iscover/rng.hpp"

#include "json.hpp"

namespace iscover {

namespace {

using NodeSet = boost::dynamic_bitset<>;

// Closed-neighborhood lookup plus a single-entry covered-set cache, shared
// by every group objective of one instance. The composite objective
// evaluates all groups against the same pair set back to back, so the cache
// turns |H| coverage rebuilds per candidate into one.
class DominationContext {
public:
    DominationContext(const Graph& g, std::vector<int> query_node)
        : node_count_(g.node_count), query_node_(std::move(query_node)) {
        for (int q : query_node_)
            if (q < 0 || q >= node_count_)
                throw parameter_error("dominating objective: query maps outside the graph");
        closed_.assign(node_count_, NodeSet(node_count_));
        for (int v = 0; v < node_count_; ++v) {
            closed_[v].set(v);
            for (int u : g.neighbors(v)) closed_[v].set(u);
        }
    }

    int node_count() const { return node_count_; }

    NodeSet covered(const PairSet& s) const {
        std::scoped_lock lock(mutex_);
        if (cache_valid_ && cache_key_ == s.key() && cache_pairs_ == s.pairs())
            return cache_covered_;
        NodeSet out(node_count_);
        QueryId last = -1;
        for (const auto& [q, r] : s) {
            if (q == last) continue;  // responses do not matter here
            last = q;
            if (q < 0 || q >= static_cast<int>(query_node_.size()))
                throw malformed_pair_error("dominating objective: unmapped query id " +
                                           std::to_string(q));
            out |= closed_[query_node_[q]];
        }
        cache_valid_ = true;
        cache_key_ = s.key();
        cache_pairs_ = s.pairs();
        cache_covered_ = out;
        return out;
    }

private:
    int node_count_;
    std::vector<int> query_node_;
    std::vector<NodeSet> closed_;

    mutable std::mutex mutex_;
    mutable bool cache_valid_ = false;
    mutable std::uint64_t cache_key_ = 0;
    mutable std::vector<QRPair> cache_pairs_;
    mutable NodeSet cache_covered_;
};

class DominatingObjective final : public Objective {
public:
    DominatingObjective(std::shared_ptr<const DominationContext> ctx, const std::vector<int>& group)
        : ctx_(std::move(ctx)), mask_(ctx_->node_count()) {
        if (group.empty()) throw parameter_error("dominating objective: empty group");
        for (int v : group) {
            if (v < 0 || v >= ctx_->node_count())
                throw parameter_error("dominating objective: group node out of range");
            mask_.set(v);
        }
        shift_ = ctx_->node_count() - static_cast<long long>(mask_.count());
    }

    long long value(const PairSet& s) const override {
        return static_cast<long long>((ctx_->covered(s) & mask_).count()) + shift_;
    }

    bool response_independent() const override { return true; }

private:
    std::shared_ptr<const DominationContext> ctx_;
    NodeSet mask_;
    long long shift_;  // |V \ group|, the paper-form constant
};

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.node_count, false);
    for (int start = 0; start < g.node_count; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::deque<int> queue{start};
        seen[start] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u]) {
                    seen[u] = true;
                    queue.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<int> ball_around(const Graph& g, int center, int radius) {
    std::vector<int> dist(g.node_count, -1);
    std::deque<int> queue{center};
    dist[center] = 0;
    std::vector<int> ball{center};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (dist[v] == radius) continue;
        for (int u : g.neighbors(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                ball.push_back(u);
                queue.push_back(u);
            }
    }
    std::sort(ball.begin(), ball.end());
    return ball;
}

}  // namespace

ObjectivePtr dominating_set_objective(const Graph& g, std::vector<int> group,
                                      std::vector<int> query_node) {
    auto ctx = std::make_shared<DominationContext>(g, std::move(query_node));
    return std::make_shared<DominatingObjective>(std::move(ctx), group);
}

HypothesisClass partition_clusters(const Graph& g, int k, std::uint64_t seed) {
    if (k < 1 || k > g.node_count)
        throw parameter_error("partition_clusters: k must be between 1 and the node count");

    Rng rng(seed);
    auto comps = connected_components(g);
    std::vector<int> region(g.node_count, -1);
    std::deque<int> frontier;

    // One seed per component while seeds last; any extra seeds land on
    // still-unassigned nodes.
    int next_region = 0;
    for (const auto& comp : comps) {
        if (next_region == k) break;
        int node = comp[rng.below(comp.size())];
        region[node] = next_region++;
        frontier.push_back(node);
    }
    if (next_region < k) {
        std::vector<int> free_nodes;
        for (int v = 0; v < g.node_count; ++v)
            if (region[v] < 0) free_nodes.push_back(v);
        while (next_region < k) {
            std::size_t i = rng.below(free_nodes.size());
            int node = free_nodes[i];
            free_nodes.erase(free_nodes.begin() + static_cast<std::ptrdiff_t>(i));
            region[node] = next_region++;
            frontier.push_back(node);
        }
    }

    while (!frontier.empty()) {
        int v = frontier.front();
        frontier.pop_front();
        for (int u : g.neighbors(v))
            if (region[u] < 0) {
                region[u] = region[v];
                frontier.push_back(u);
            }
    }

    // Components that received no seed (only possible when k is below the
    // component count) are folded into existing regions round-robin.
    int fold = 0;
    for (const auto& comp : comps)
        if (region[comp.front()] < 0) {
            for (int v : comp) region[v] = fold;
            fold = (fold + 1) % k;
        }

    HypothesisClass hc;
    hc.groups.assign(k, {});
    for (int v = 0; v < g.node_count; ++v) hc.groups[region[v]].push_back(v);
    return hc;
}

HypothesisClass gen_clusters_class(const Graph& g, const std::vector<int>& sizes,
                                   std::uint64_t seed) {
    HypothesisClass hc;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        HypothesisClass part = partition_clusters(g, sizes[i], mix_seed(seed, i));
        for (auto& group : part.groups) hc.groups.push_back(std::move(group));
    }
    return hc;
}

HypothesisClass gen_noisy_variants(const HypothesisClass& base, HypothesisId target, int m,
                                   std::uint64_t seed) {
    if (target < 0 || target >= base.size())
        throw parameter_error("gen_noisy_variants: target out of range");
    const auto& group = base.groups[target];
    if (group.size() < 2)
        throw parameter_error("gen_noisy_variants: target group needs at least two members");

    HypothesisClass hc = base;
    Rng rng(seed);
    for (int i = 0; i < m; ++i) {
        std::vector<int> variant = group;
        variant.erase(variant.begin() + static_cast<std::ptrdiff_t>(rng.below(variant.size())));
        hc.groups.push_back(std::move(variant));
    }
    return hc;
}

HypothesisClass gen_balls(const Graph& g, int count, int radius, std::uint64_t seed) {
    if (g.node_count < 1) throw parameter_error("gen_balls: empty graph");
    if (radius < 0) throw parameter_error("gen_balls: negative radius");
    Rng rng(seed);
    HypothesisClass hc;
    for (int i = 0; i < count; ++i)
        hc.groups.push_back(ball_around(g, static_cast<int>(rng.below(g.node_count)), radius));
    return hc;
}

HypothesisClass gen_expanded_clusters(const Graph& g, int k, std::uint64_t seed) {
    HypothesisClass hc = partition_clusters(g, k, seed);
    for (auto& group : hc.groups) {
        NodeSet members(g.node_count);
        for (int v : group) members.set(v);
        for (int v : group)
            for (int u : g.neighbors(v)) members.set(u);
        group.clear();
        for (auto v = members.find_first(); v != NodeSet::npos; v = members.find_next(v))
            group.push_back(static_cast<int>(v));
    }
    return hc;
}

Instance build_dominating_instance(const Graph& g, const HypothesisClass& hc,
                                   std::optional<std::vector<Rational>> costs) {
    if (hc.groups.empty()) throw parameter_error("build_dominating_instance: empty class");
    const int n = g.node_count;
    const int h_count = hc.size();

    std::vector<int> query_node(n);
    for (int v = 0; v < n; ++v) query_node[v] = v;

    // Membership responses: asking node v answers 1 under h iff v is in the
    // group of h.
    std::vector<std::vector<std::vector<ResponseId>>> valid(
        n, std::vector<std::vector<ResponseId>>(h_count));
    for (int h = 0; h < h_count; ++h) {
        NodeSet members(n);
        for (int v : hc.groups[h]) {
            if (v < 0 || v >= n)
                throw parameter_error("build_dominating_instance: group node out of range");
            members.set(v);
        }
        for (int v = 0; v < n; ++v) valid[v][h] = {members.test(v) ? 1 : 0};
    }

    Instance inst;
    inst.space = std::make_shared<QuerySpace>(h_count, n, 2, std::move(valid));
    inst.alpha = n;
    if (costs) {
        if (static_cast<int>(costs->size()) != n)
            throw parameter_error("build_dominating_instance: cost map must cover every node");
        inst.cost = std::move(*costs);
    } else {
        inst.cost.assign(n, Rational(1));
    }

    auto ctx = std::make_shared<DominationContext>(g, query_node);
    for (int h = 0; h < h_count; ++h)
        inst.objectives.push_back(std::make_shared<DominatingObjective>(ctx, hc.groups[h]));

    nlohmann::json edges = nlohmann::json::array();
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v))
            if (v < u) edges.push_back({v, u});
    nlohmann::json spec = {
        {"type", "dominating_set"},
        {"graph", {{"nodes", n}, {"edges", edges}}},
        {"groups", hc.groups},
    };
    inst.objective_spec = std::make_shared<const nlohmann::json>(std::move(spec));
    return inst;
}

}  // namespace iscover

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hfgt/incidence.hpp"
#include "hfgt/types.hpp"

namespace hfgt {

// Binary |E_S| x |E_S| matrix of feasible capability sequences, with the
// pre-booleanization sums kept alongside. a_rho(psi1, psi2) = 1 means psi1
// injects some operand at some buffer where psi2 pulls that same operand,
// i.e. psi1 can be followed by psi2.
struct HfgAdjacency {
    struct Entry {
        CapabilityId from = 0;
        CapabilityId to = 0;
        std::uint32_t count = 0;

        auto operator<=>(const Entry&) const = default;
    };

    std::size_t capability_count = 0;
    std::vector<Entry> entries;  // sorted (from, to), count >= 1

    bool has_edge(CapabilityId from, CapabilityId to) const {
        return std::binary_search(entries.begin(), entries.end(), Entry{from, to, 1},
                                  [](const Entry& a, const Entry& b) {
                                      return std::pair(a.from, a.to) < std::pair(b.from, b.to);
                                  });
    }

    std::vector<std::pair<CapabilityId, CapabilityId>> boolean_entries() const {
        std::vector<std::pair<CapabilityId, CapabilityId>> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.emplace_back(e.from, e.to);
        return out;
    }

    bool operator==(const HfgAdjacency&) const = default;
};

// Classical node/edge graph over the buffers, recovered by collapsing the
// capability dimension.
struct FormalGraphAdjacency {
    std::size_t buffer_count = 0;
    std::vector<std::pair<BufferId, BufferId>> entries;  // sorted (y1, y2)

    bool has_edge(BufferId y1, BufferId y2) const {
        return std::binary_search(entries.begin(), entries.end(), std::pair(y1, y2));
    }

    bool operator==(const FormalGraphAdjacency&) const = default;
};

struct MultilayerEntry {
    BufferId y1 = 0;
    BufferId y2 = 0;
    OperandId i1 = 0;
    OperandId i2 = 0;

    auto operator<=>(const MultilayerEntry&) const = default;
};

// Fourth-order adjacency over (y1, y2, i1, i2). The collapse formula only
// involves i1, so entries repeat across every i2 layer; slice() carves out
// one (i1, i2) layer as a buffer-by-buffer edge set.
struct MultilayerAdjacency {
    std::size_t buffer_count = 0;
    std::size_t operand_count = 0;
    std::vector<MultilayerEntry> entries;  // sorted

    std::vector<std::pair<BufferId, BufferId>> slice(OperandId i1, OperandId i2) const {
        std::vector<std::pair<BufferId, BufferId>> out;
        for (const auto& e : entries)
            if (e.i1 == i1 && e.i2 == i2) out.emplace_back(e.y1, e.y2);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool operator==(const MultilayerAdjacency&) const = default;
};

struct StructureStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::vector<std::size_t> in_degree;
    std::vector<std::size_t> out_degree;
    std::size_t weak_components = 0;
    std::size_t strong_components = 0;

    bool operator==(const StructureStats&) const = default;
};

namespace detail {

inline void require_same_dims(const IncidenceTensor& pos, const IncidenceTensor& neg) {
    if (pos.operand_count != neg.operand_count || pos.buffer_count != neg.buffer_count ||
        pos.capability_count != neg.capability_count)
        throw Error(errc::dimension, "positive and negative tensors have different dimensions");
}

}  // namespace detail

// A_rho(psi1, psi2) = sum_i sum_y M+(i, y, psi1) * M-(i, y, psi2),
// computed over the sparse third-order tensors grouped by (i, y).
inline HfgAdjacency hfg_adjacency_tensor_path(const IncidenceTensor& pos,
                                              const IncidenceTensor& neg) {
    detail::require_same_dims(pos, neg);

    std::map<std::pair<OperandId, BufferId>, std::vector<CapabilityId>> injectors;
    for (const auto& e : pos.entries) injectors[{e.operand, e.buffer}].push_back(e.capability);
    std::map<std::pair<OperandId, BufferId>, std::vector<CapabilityId>> pullers;
    for (const auto& e : neg.entries) pullers[{e.operand, e.buffer}].push_back(e.capability);

    std::map<std::pair<CapabilityId, CapabilityId>, std::uint32_t> counts;
    for (const auto& [key, from_list] : injectors) {
        auto it = pullers.find(key);
        if (it == pullers.end()) continue;
        for (auto from : from_list)
            for (auto to : it->second) ++counts[{from, to}];
    }

    HfgAdjacency adj;
    adj.capability_count = pos.capability_count;
    for (const auto& [edge, count] : counts) adj.entries.push_back({edge.first, edge.second, count});
    return adj;
}

// A_rho = (M+)^T (M-), computed over the matricized second-order forms.
inline HfgAdjacency hfg_adjacency_matrix_path(const IncidenceMatrix& pos,
                                              const IncidenceMatrix& neg) {
    if (pos.rows != neg.rows || pos.cols != neg.cols || pos.operand_count != neg.operand_count)
        throw Error(errc::dimension, "positive and negative matrices have different shapes");

    std::map<std::uint32_t, std::vector<CapabilityId>> pos_by_row;
    for (const auto& [row, psi] : pos.entries) pos_by_row[row].push_back(psi);
    std::map<std::uint32_t, std::vector<CapabilityId>> neg_by_row;
    for (const auto& [row, psi] : neg.entries) neg_by_row[row].push_back(psi);

    std::map<std::pair<CapabilityId, CapabilityId>, std::uint32_t> counts;
    for (const auto& [row, from_list] : pos_by_row) {
        auto it = neg_by_row.find(row);
        if (it == neg_by_row.end()) continue;
        for (auto from : from_list)
            for (auto to : it->second) ++counts[{from, to}];
    }

    HfgAdjacency adj;
    adj.capability_count = pos.cols;
    for (const auto& [edge, count] : counts) adj.entries.push_back({edge.first, edge.second, count});
    return adj;
}

// A_BS(y1, y2) = OR_psi OR_i M-(i, y1, psi) * M+(i, y2, psi). Note the sign
// order flips relative to A_rho: a capability pulls at the source buffer and
// injects at the destination.
inline FormalGraphAdjacency formal_graph_projection(const IncidenceTensor& pos,
                                                    const IncidenceTensor& neg) {
    detail::require_same_dims(pos, neg);

    std::map<std::pair<CapabilityId, OperandId>, std::vector<BufferId>> pulls;
    for (const auto& e : neg.entries) pulls[{e.capability, e.operand}].push_back(e.buffer);

    std::set<std::pair<BufferId, BufferId>> edges;
    for (const auto& e : pos.entries) {
        auto it = pulls.find({e.capability, e.operand});
        if (it == pulls.end()) continue;
        for (auto y1 : it->second) edges.emplace(y1, e.buffer);
    }

    FormalGraphAdjacency a_bs;
    a_bs.buffer_count = pos.buffer_count;
    a_bs.entries.assign(edges.begin(), edges.end());
    return a_bs;
}

// A_BS(y1, y2, i1, i2) = OR_psi M-(i1, y1, psi) * M+(i1, y2, psi), taken
// literally: the right-hand side never mentions i2, so each (y1, y2, i1)
// hit is replicated across all i2 layers.
inline MultilayerAdjacency multilayer_projection(const IncidenceTensor& pos,
                                                 const IncidenceTensor& neg) {
    detail::require_same_dims(pos, neg);

    std::map<std::pair<CapabilityId, OperandId>, std::vector<BufferId>> pulls;
    for (const auto& e : neg.entries) pulls[{e.capability, e.operand}].push_back(e.buffer);

    std::set<std::tuple<BufferId, BufferId, OperandId>> hits;
    for (const auto& e : pos.entries) {
        auto it = pulls.find({e.capability, e.operand});
        if (it == pulls.end()) continue;
        for (auto y1 : it->second) hits.emplace(y1, e.buffer, e.operand);
    }

    MultilayerAdjacency adj;
    adj.buffer_count = pos.buffer_count;
    adj.operand_count = pos.operand_count;
    for (const auto& [y1, y2, i1] : hits)
        for (OperandId i2 = 0; i2 < pos.operand_count; ++i2)
            adj.entries.push_back({y1, y2, i1, i2});
    std::sort(adj.entries.begin(), adj.entries.end());
    return adj;
}

namespace detail {

inline StructureStats digraph_stats(std::size_t n,
                                    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    StructureStats stats;
    stats.node_count = n;
    stats.edge_count = edges.size();
    stats.in_degree.assign(n, 0);
    stats.out_degree.assign(n, 0);
    for (const auto& [u, v] : edges) {
        ++stats.out_degree[u];
        ++stats.in_degree[v];
    }

    // Weak components via union-find.
    std::vector<std::uint32_t> parent(n);
    for (std::uint32_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : edges) parent[find(u)] = find(v);
    std::set<std::uint32_t> roots;
    for (std::uint32_t i = 0; i < n; ++i) roots.insert(find(i));
    stats.weak_components = roots.size();

    // Strong components: iterative Tarjan.
    std::vector<std::vector<std::uint32_t>> succ(n);
    for (const auto& [u, v] : edges) succ[u].push_back(v);

    constexpr std::uint32_t unvisited = 0xffffffffu;
    std::vector<std::uint32_t> index(n, unvisited), lowlink(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> stack;
    std::uint32_t next_index = 0;
    std::size_t scc_count = 0;

    struct Frame {
        std::uint32_t node;
        std::size_t child;
    };
    for (std::uint32_t start = 0; start < n; ++start) {
        if (index[start] != unvisited) continue;
        std::vector<Frame> frames{{start, 0}};
        index[start] = lowlink[start] = next_index++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            auto& [node, child] = frames.back();
            if (child < succ[node].size()) {
                std::uint32_t next = succ[node][child++];
                if (index[next] == unvisited) {
                    index[next] = lowlink[next] = next_index++;
                    stack.push_back(next);
                    on_stack[next] = true;
                    frames.push_back({next, 0});
                } else if (on_stack[next]) {
                    lowlink[node] = std::min(lowlink[node], index[next]);
                }
            } else {
                if (lowlink[node] == index[node]) {
                    ++scc_count;
                    std::uint32_t popped;
                    do {
                        popped = stack.back();
                        stack.pop_back();
                        on_stack[popped] = false;
                    } while (popped != node);
                }
                std::uint32_t done = node;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().node] = std::min(lowlink[frames.back().node], lowlink[done]);
            }
        }
    }
    stats.strong_components = scc_count;
    return stats;
}

}  // namespace detail

inline StructureStats structure_stats(const HfgAdjacency& adj) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(adj.entries.size());
    for (const auto& e : adj.entries) edges.emplace_back(e.from, e.to);
    return detail::digraph_stats(adj.capability_count, edges);
}

inline StructureStats structure_stats(const FormalGraphAdjacency& adj) {
    return detail::digraph_stats(adj.buffer_count, adj.entries);
}

// All directed walks from a capability, up to max_len edges, in
// lexicographic order (a walk precedes its extensions). The trivial walk
// [from] is included.
inline std::vector<std::vector<CapabilityId>> story_paths(const HfgAdjacency& a_rho,
                                                          CapabilityId from, std::size_t max_len) {
    if (from >= a_rho.capability_count)
        throw Error(errc::range, "capability " + std::to_string(from) + " out of range");

    std::vector<std::vector<CapabilityId>> succ(a_rho.capability_count);
    for (const auto& e : a_rho.entries) succ[e.from].push_back(e.to);

    std::vector<std::vector<CapabilityId>> walks;
    std::vector<CapabilityId> walk{from};
    auto extend = [&](auto&& self, CapabilityId node, std::size_t remaining) -> void {
        walks.push_back(walk);
        if (remaining == 0) return;
        for (auto next : succ[node]) {
            walk.push_back(next);
            self(self, next, remaining - 1);
            walk.pop_back();
        }
    };
    extend(extend, from, max_len);
    return walks;
}

}  // namespace hfgt

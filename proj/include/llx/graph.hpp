#pragma once

// Undirected dependency graphs with opaque string labels, plus the
// independent-subset enumeration everything else is built on.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace llx {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

// A precondition on the input data was violated (unknown label, activity out
// of range, malformed file, ...).  Maps to exit code 2 in the CLI.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed a configured budget.  Deliberately fatal: we
// never return a silently truncated enumeration.
class resource_limit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline VertexSet make_vertex_set(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const VertexSet& s, Vertex x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

class DependencyGraph {
public:
    DependencyGraph() = default;

    // Registers a new vertex and returns its dense index.
    Vertex add_vertex(std::string label) {
        if (index_.count(label) != 0)
            throw invalid_input("duplicate vertex label '" + label + "'");
        Vertex v = static_cast<Vertex>(labels_.size());
        index_.emplace(label, v);
        labels_.push_back(std::move(label));
        adj_.emplace_back();
        return v;
    }

    // Returns the index for `label`, registering the vertex on first sight.
    Vertex ensure_vertex(const std::string& label) {
        auto it = index_.find(label);
        if (it != index_.end()) return it->second;
        return add_vertex(label);
    }

    void add_edge(Vertex a, Vertex b) {
        check_vertex(a);
        check_vertex(b);
        if (a == b)
            throw invalid_input("self-loop at vertex '" + labels_[a] + "'");
        if (has_edge(a, b))
            throw invalid_input("duplicate edge '" + labels_[a] + "' -- '" + labels_[b] + "'");
        insert_sorted(adj_[a], b);
        insert_sorted(adj_[b], a);
        ++edge_count_;
    }

    void add_edge(const std::string& a, const std::string& b) {
        add_edge(require(a), require(b));
    }

    std::size_t size() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::string& label(Vertex x) const {
        check_vertex(x);
        return labels_[x];
    }

    std::optional<Vertex> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Vertex require(std::string_view label) const {
        auto v = find(label);
        if (!v) throw invalid_input("unknown vertex label '" + std::string(label) + "'");
        return *v;
    }

    bool has_edge(Vertex a, Vertex b) const {
        check_vertex(a);
        check_vertex(b);
        return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
    }

    // Open neighborhood: all vertices sharing an edge with x.
    const VertexSet& neighborhood(Vertex x) const {
        check_vertex(x);
        return adj_[x];
    }

    // Closed neighborhood: the open neighborhood together with x itself.
    VertexSet closed_neighborhood(Vertex x) const {
        check_vertex(x);
        VertexSet out = adj_[x];
        insert_sorted(out, x);
        return out;
    }

    // Neighbors of the set s that lie outside s.
    VertexSet set_neighborhood(const VertexSet& s) const {
        check_set(s);
        VertexSet out;
        for (Vertex v : s)
            for (Vertex u : adj_[v])
                if (!set_contains(s, u)) out.push_back(u);
        return make_vertex_set(std::move(out));
    }

    std::size_t degree(Vertex x) const {
        check_vertex(x);
        return adj_[x].size();
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& a : adj_) d = std::max(d, a.size());
        return d;
    }

    VertexSet vertices() const {
        VertexSet out(size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Vertex>(i);
        return out;
    }

    // Induced subgraph on the complement of `removed`.  Surviving vertices keep
    // their labels and their relative order.
    DependencyGraph restricted(const VertexSet& removed) const {
        check_set(removed);
        DependencyGraph out;
        std::vector<Vertex> remap(size(), 0);
        for (Vertex v = 0; v < size(); ++v) {
            if (set_contains(removed, v)) continue;
            remap[v] = out.add_vertex(labels_[v]);
        }
        for (Vertex v = 0; v < size(); ++v) {
            if (set_contains(removed, v)) continue;
            for (Vertex u : adj_[v])
                if (u > v && !set_contains(removed, u))
                    out.add_edge(remap[v], remap[u]);
        }
        return out;
    }

    void check_vertex(Vertex x) const {
        if (x >= labels_.size()) {
            std::ostringstream os;
            os << "vertex index " << x << " out of range (graph has " << labels_.size()
               << " vertices)";
            throw invalid_input(os.str());
        }
    }

    // Sets handed to the graph must be sorted, duplicate free and in range.
    void check_set(const VertexSet& s) const {
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw invalid_input("vertex set must be sorted and duplicate free");
        if (!s.empty()) check_vertex(s.back());
    }

private:
    static void insert_sorted(VertexSet& s, Vertex v) {
        s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    }

    std::vector<std::string> labels_;
    std::vector<VertexSet> adj_;
    std::unordered_map<std::string, Vertex> index_;
    std::size_t edge_count_ = 0;
};

// Budgets for the exponential enumerations.  Both are hard errors when hit;
// callers that know their neighborhoods are benign may raise them.
struct EnumLimits {
    std::size_t max_scope = 25;
    std::uint64_t max_visits = std::uint64_t{1} << 25;
};

inline bool is_independent(const DependencyGraph& g, const VertexSet& r) {
    g.check_set(r);
    for (Vertex v : r)
        for (Vertex u : g.neighborhood(v))
            if (u > v && set_contains(r, u)) return false;
    return true;
}

// Visits every independent subset of `scope` exactly once, the empty set
// included, in lexicographic order of the sorted index sequence.  Returns the
// number of subsets visited.
template <typename Visitor>
std::uint64_t for_each_independent_subset(const DependencyGraph& g, const VertexSet& scope,
                                          Visitor&& visit, const EnumLimits& limits = {}) {
    g.check_set(scope);
    if (scope.size() > limits.max_scope) {
        std::ostringstream os;
        os << "enumeration scope of " << scope.size() << " vertices exceeds the cap of "
           << limits.max_scope;
        throw resource_limit(os.str());
    }
    std::vector<std::uint32_t> blocked(g.size(), 0);
    VertexSet current;
    std::uint64_t visited = 0;
    auto step = [&](auto&& self, std::size_t from) -> void {
        if (++visited > limits.max_visits)
            throw resource_limit("independent-subset enumeration exceeded the visit budget");
        visit(static_cast<const VertexSet&>(current));
        for (std::size_t i = from; i < scope.size(); ++i) {
            Vertex v = scope[i];
            if (blocked[v] != 0) continue;
            current.push_back(v);
            for (Vertex u : g.neighborhood(v)) ++blocked[u];
            self(self, i + 1);
            for (Vertex u : g.neighborhood(v)) --blocked[u];
            current.pop_back();
        }
    };
    step(step, 0);
    return visited;
}

inline std::uint64_t count_independent_subsets(const DependencyGraph& g, const VertexSet& scope,
                                               const EnumLimits& limits = {}) {
    return for_each_independent_subset(g, scope, [](const VertexSet&) {}, limits);
}

}  // namespace llx

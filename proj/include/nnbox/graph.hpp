#pragma once

// Bitset graphs on at most 64 vertices: exact maximum clique and maximum
// weight independent set by branch and bound.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nnbox {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

class SmallGraph {
public:
    explicit SmallGraph(int n) : adj_(static_cast<std::size_t>(n), 0)
    {
        if (n < 0 || n > 64)
            throw std::invalid_argument("SmallGraph holds at most 64 vertices");
    }

    template <class V, class Adj>
    static SmallGraph from_vertices(const std::vector<V> &vs, Adj adj)
    {
        SmallGraph g(static_cast<int>(vs.size()));
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (adj(vs[i], vs[j]))
                    g.add_edge(static_cast<int>(i), static_cast<int>(j));
        return g;
    }

    int size() const { return static_cast<int>(adj_.size()); }
    Mask all() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
    Mask neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }

    void add_edge(int u, int v)
    {
        if (u == v)
            throw std::invalid_argument("loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
        adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
    }

    long edge_count() const
    {
        long e = 0;
        for (Mask m : adj_)
            e += popcount(m);
        return e / 2;
    }

private:
    std::vector<Mask> adj_;
};

namespace detail {

    // Greedy colouring bound (Tomita style): colour classes are built from
    // the candidate set and the number of classes bounds the clique size.
    inline void max_clique_expand(const SmallGraph &g, Mask current, int current_size, Mask candidates,
        int &best_size, Mask &best)
    {
        if (candidates == 0) {
            if (current_size > best_size) {
                best_size = current_size;
                best = current;
            }
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        Mask uncoloured = candidates;
        int colour = 0;
        while (uncoloured) {
            ++colour;
            Mask q = uncoloured;
            while (q) {
                int v = lowest(q);
                q &= ~(Mask{1} << v);
                q &= ~g.neighbours(v);
                uncoloured &= ~(Mask{1} << v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (std::size_t k = order.size(); k-- > 0;) {
            if (current_size + bound[k] <= best_size)
                return;
            int v = order[k];
            max_clique_expand(g, current | (Mask{1} << v), current_size + 1, candidates & g.neighbours(v),
                best_size, best);
            candidates &= ~(Mask{1} << v);
        }
    }

    inline void mwis_expand(const SmallGraph &g, const std::vector<long> &w, Mask candidates, long current,
        long &best)
    {
        if (candidates == 0) {
            best = std::max(best, current);
            return;
        }
        long bound = current;
        for (Mask q = candidates; q; q &= q - 1)
            bound += w[static_cast<std::size_t>(lowest(q))];
        if (bound <= best)
            return;
        // branch on a vertex of maximum degree inside the candidate set
        int pick = -1;
        int pick_deg = -1;
        for (Mask q = candidates; q; q &= q - 1) {
            int v = lowest(q);
            int d = popcount(g.neighbours(v) & candidates);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick_deg == 0) {
            best = std::max(best, bound);
            return;
        }
        Mask bit = Mask{1} << pick;
        mwis_expand(g, w, candidates & ~bit & ~g.neighbours(pick), current + w[static_cast<std::size_t>(pick)], best);
        mwis_expand(g, w, candidates & ~bit, current, best);
    }

} // namespace detail

/// Vertex set of a maximum clique.
inline std::vector<int> max_clique(const SmallGraph &g)
{
    int best_size = 0;
    Mask best = 0;
    detail::max_clique_expand(g, 0, 0, g.all(), best_size, best);
    std::vector<int> out;
    for (Mask q = best; q; q &= q - 1)
        out.push_back(lowest(q));
    return out;
}

inline int clique_number(const SmallGraph &g) { return static_cast<int>(max_clique(g).size()); }

inline long max_weight_independent_set(const SmallGraph &g, const std::vector<long> &weights)
{
    if (static_cast<int>(weights.size()) != g.size())
        throw std::invalid_argument("weight vector size mismatch");
    long best = 0;
    detail::mwis_expand(g, weights, g.all(), 0, best);
    return best;
}

} // namespace nnbox

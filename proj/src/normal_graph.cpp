#include "trapscan/normal_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trapscan {

int NormalGraph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

int NormalGraph::min_degree() const {
    int d = n == 0 ? 0 : 64;
    for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

int NormalGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

bool NormalGraph::connected() const {
    if (n == 0) return false;
    uint16_t seen = 1, frontier = 1;
    while (frontier) {
        uint16_t next = 0;
        uint16_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= uint16_t(f - 1);
            next |= adj[v];
        }
        frontier = uint16_t(next & ~seen);
        seen |= next;
    }
    return seen == uint16_t((1u << n) - 1);
}

bool NormalGraph::has_triangle() const {
    for (int u = 0; u < n; ++u) {
        uint16_t rest = uint16_t(adj[u] & ~((1u << (u + 1)) - 1));
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= uint16_t(rest - 1);
            if (adj[u] & adj[v]) return true;
        }
    }
    return false;
}

bool NormalGraph::is_simple_cycle() const {
    if (n < 3 || !connected()) return false;
    for (int v = 0; v < n; ++v)
        if (degree(v) != 2) return false;
    return true;
}

namespace {

bool hamiltonian_extend(const NormalGraph& g, std::array<uint8_t, kMaxStructNodes>& path, int len,
                        uint16_t used) {
    if (len == g.n) return g.has_edge(path[len - 1], 0);
    uint16_t cand = uint16_t(g.adj[path[len - 1]] & ~used);
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= uint16_t(cand - 1);
        path[len] = uint8_t(v);
        if (hamiltonian_extend(g, path, len + 1, uint16_t(used | (1u << v)))) return true;
    }
    return false;
}

}  // namespace

bool NormalGraph::has_hamiltonian_cycle() const {
    if (n < 3 || !connected() || min_degree() < 2) return false;
    std::array<uint8_t, kMaxStructNodes> path{};
    path[0] = 0;
    return hamiltonian_extend(*this, path, 1, 1);
}

std::vector<std::pair<int, int>> NormalGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(size_t(edge_count()));
    for (int u = 0; u < n; ++u) {
        uint16_t rest = uint16_t(adj[u] & ~((1u << (u + 1)) - 1));
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= uint16_t(rest - 1);
            out.emplace_back(u, v);
        }
    }
    return out;
}

NormalGraph cycle_graph(int k) {
    if (k < 3 || k > kMaxStructNodes) throw std::invalid_argument("cycle_graph: bad size");
    NormalGraph g;
    g.n = uint8_t(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

std::string to_graph6(const NormalGraph& g) {
    std::string out;
    out.push_back(char(g.n + 63));
    int bitpos = 0;
    uint8_t cur = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            cur = uint8_t((cur << 1) | (g.has_edge(i, j) ? 1 : 0));
            if (++bitpos == 6) {
                out.push_back(char(cur + 63));
                bitpos = 0;
                cur = 0;
            }
        }
    }
    if (bitpos > 0) out.push_back(char(uint8_t(cur << (6 - bitpos)) + 63));
    return out;
}

NormalGraph from_graph6(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty string");
    int n = text[0] - 63;
    if (n < 0 || n > kMaxStructNodes) throw std::invalid_argument("graph6: unsupported node count");
    NormalGraph g;
    g.n = uint8_t(n);
    size_t need = size_t(n) * size_t(n - 1) / 2;
    size_t bytes = (need + 5) / 6;
    if (text.size() != 1 + bytes) throw std::invalid_argument("graph6: bad length");
    size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("graph6: bad byte");
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

ClassId class_of(const NormalGraph& s, int d_v) {
    if (s.max_degree() > d_v) throw std::invalid_argument("class_of: node degree exceeds d_v");
    return ClassId{s.n, s.n * d_v - 2 * s.edge_count()};
}

std::string CanonicalCode::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(34);
    out.push_back(digits[n >> 4]);
    out.push_back(digits[n & 15]);
    for (uint64_t w : bits)
        for (int i = 60; i >= 0; i -= 4) out.push_back(digits[(w >> i) & 15]);
    return out;
}

namespace {

CanonicalCode code_for_order(const NormalGraph& g, const Permutation& order) {
    CanonicalCode code;
    code.n = g.n;
    size_t bit = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(order[i], order[j])) code.bits[bit >> 6] |= (1ull << (bit & 63));
        }
    }
    return code;
}

// Equitable refinement of an ordered partition (cells as bitmasks). Splits
// are keyed by neighbor counts against every cell, so they are invariant
// under relabeling.
std::vector<uint16_t> refine_partition(const NormalGraph& g, std::vector<uint16_t> cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t ci = 0; ci < cells.size() && !changed; ++ci) {
            uint16_t cell = cells[ci];
            if (std::popcount(cell) <= 1) continue;
            std::vector<std::pair<std::vector<int>, uint16_t>> groups;
            uint16_t rest = cell;
            while (rest) {
                int v = std::countr_zero(rest);
                rest &= uint16_t(rest - 1);
                std::vector<int> sig;
                sig.reserve(cells.size());
                for (uint16_t c2 : cells) sig.push_back(std::popcount(uint16_t(g.adj[v] & c2)));
                bool placed = false;
                for (auto& grp : groups) {
                    if (grp.first == sig) {
                        grp.second |= uint16_t(1u << v);
                        placed = true;
                        break;
                    }
                }
                if (!placed) groups.emplace_back(std::move(sig), uint16_t(1u << v));
            }
            if (groups.size() > 1) {
                std::sort(groups.begin(), groups.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                std::vector<uint16_t> next;
                next.reserve(cells.size() + groups.size());
                for (size_t j = 0; j < cells.size(); ++j) {
                    if (j == ci) {
                        for (auto& grp : groups) next.push_back(grp.second);
                    } else {
                        next.push_back(cells[j]);
                    }
                }
                cells = std::move(next);
                changed = true;
            }
        }
    }
    return cells;
}

// Individualization-refinement over one connected component. Enumerates all
// leaves of the (invariant) search tree and keeps the minimum code; leaves
// tying with the minimum yield the automorphism group.
struct ComponentCanon {
    const NormalGraph& g;  // component graph with dense labels 0..n-1
    bool want_auts;
    bool have_best = false;
    CanonicalCode best;
    Permutation best_order{};
    std::vector<Permutation> min_orders;

    void descend(std::vector<uint16_t> cells) {
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i) {
            if (std::popcount(cells[i]) > 1) {
                target = i;
                break;
            }
        }
        if (target == cells.size()) {
            Permutation order{};
            for (size_t i = 0; i < cells.size(); ++i) order[i] = uint8_t(std::countr_zero(cells[i]));
            CanonicalCode code = code_for_order(g, order);
            if (!have_best || code < best) {
                have_best = true;
                best = code;
                best_order = order;
                min_orders.clear();
                min_orders.push_back(order);
            } else if (want_auts && code == best) {
                min_orders.push_back(order);
            }
            return;
        }
        uint16_t cell = cells[target];
        uint16_t rest = cell;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= uint16_t(rest - 1);
            std::vector<uint16_t> next;
            next.reserve(cells.size() + 1);
            for (size_t j = 0; j < cells.size(); ++j) {
                if (j == target) {
                    next.push_back(uint16_t(1u << v));
                    next.push_back(uint16_t(cell & ~(1u << v)));
                } else {
                    next.push_back(cells[j]);
                }
            }
            descend(refine_partition(g, std::move(next)));
        }
    }
};

struct ComponentInfo {
    std::vector<uint8_t> nodes;  // original labels, ascending
    CanonicalCode code;
    Permutation order{};                     // dense-label order
    std::vector<Permutation> automorphisms;  // dense-label maps
};

std::vector<uint16_t> component_masks(const NormalGraph& g) {
    std::vector<uint16_t> comps;
    uint16_t unseen = uint16_t((1u << g.n) - 1);
    while (unseen) {
        uint16_t frontier = uint16_t(1u << std::countr_zero(unseen));
        uint16_t seen = frontier;
        while (frontier) {
            uint16_t next = 0;
            uint16_t f = frontier;
            while (f) {
                int v = std::countr_zero(f);
                f &= uint16_t(f - 1);
                next |= g.adj[v];
            }
            frontier = uint16_t(next & ~seen);
            seen |= next;
        }
        comps.push_back(seen);
        unseen &= uint16_t(~seen);
    }
    return comps;
}

}  // namespace

// The canonical form of a disconnected graph is assembled from the canonical
// forms of its components, sorted by (size desc, code asc). This keeps the
// search tree small even when many interchangeable pieces are present.
CanonicalResult canonical_labeling(const NormalGraph& s, bool want_automorphisms) {
    CanonicalResult result;
    result.code.n = s.n;
    if (s.n == 0) return result;

    std::vector<ComponentInfo> comps;
    for (uint16_t mask : component_masks(s)) {
        ComponentInfo info;
        uint16_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= uint16_t(m - 1);
            info.nodes.push_back(uint8_t(v));
        }
        NormalGraph sub;
        sub.n = uint8_t(info.nodes.size());
        for (int i = 0; i < sub.n; ++i)
            for (int j = i + 1; j < sub.n; ++j)
                if (s.has_edge(info.nodes[i], info.nodes[j])) sub.add_edge(i, j);
        ComponentCanon canon{sub, want_automorphisms};
        canon.descend(refine_partition(sub, {uint16_t((1u << sub.n) - 1)}));
        info.code = canon.best;
        info.order = canon.best_order;
        if (want_automorphisms) {
            for (const Permutation& q : canon.min_orders) {
                Permutation aut{};
                for (int i = 0; i < sub.n; ++i) aut[canon.best_order[i]] = q[i];
                info.automorphisms.push_back(aut);
            }
        }
        comps.push_back(std::move(info));
    }

    std::sort(comps.begin(), comps.end(), [](const ComponentInfo& x, const ComponentInfo& y) {
        if (x.nodes.size() != y.nodes.size()) return x.nodes.size() > y.nodes.size();
        if (x.code != y.code) return x.code < y.code;
        return x.nodes < y.nodes;
    });

    int slot = 0;
    for (const ComponentInfo& c : comps)
        for (size_t i = 0; i < c.nodes.size(); ++i) result.order[slot++] = c.nodes[c.order[i]];
    result.code = code_for_order(s, result.order);

    if (want_automorphisms) {
        // Generators: within-component automorphisms lifted by identity, plus
        // transpositions of adjacent identical components.
        Permutation identity{};
        for (int v = 0; v < s.n; ++v) identity[v] = uint8_t(v);
        for (const ComponentInfo& c : comps) {
            for (const Permutation& aut : c.automorphisms) {
                Permutation lifted = identity;
                for (size_t i = 0; i < c.nodes.size(); ++i) lifted[c.nodes[i]] = c.nodes[aut[i]];
                result.automorphisms.push_back(lifted);
            }
        }
        for (size_t ci = 0; ci + 1 < comps.size(); ++ci) {
            const ComponentInfo& x = comps[ci];
            const ComponentInfo& y = comps[ci + 1];
            if (x.nodes.size() != y.nodes.size() || x.code != y.code) continue;
            Permutation swap = identity;
            for (size_t i = 0; i < x.nodes.size(); ++i) {
                swap[x.nodes[x.order[i]]] = y.nodes[y.order[i]];
                swap[y.nodes[y.order[i]]] = x.nodes[x.order[i]];
            }
            result.automorphisms.push_back(swap);
        }
        if (result.automorphisms.empty()) result.automorphisms.push_back(identity);
    }
    return result;
}

CanonicalCode canonical_form(const NormalGraph& s) {
    return canonical_labeling(s, false).code;
}

NormalGraph relabel(const NormalGraph& s, const Permutation& order) {
    std::array<uint8_t, kMaxStructNodes> slot{};
    for (int i = 0; i < s.n; ++i) slot[order[i]] = uint8_t(i);
    NormalGraph out;
    out.n = s.n;
    for (auto [u, v] : s.edges()) out.add_edge(slot[u], slot[v]);
    return out;
}

NormalGraph canonicalize(const NormalGraph& s) {
    return relabel(s, canonical_labeling(s, false).order);
}

bool is_valid_structure(const NormalGraph& s, int d_v, int girth) {
    if (s.n < 2) return false;
    if (!s.connected()) return false;
    if (s.min_degree() < 2) return false;
    if (s.max_degree() > d_v) return false;
    if (girth >= 8 && s.has_triangle()) return false;
    return true;
}

}  // namespace trapscan

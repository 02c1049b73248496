#include "trapscan/tanner.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

namespace trapscan {

TannerGraph::TannerGraph(int n, int m_checks, std::vector<std::vector<int>> var_adj)
    : n_(n), m_checks_(m_checks), var_adj_(std::move(var_adj)) {
    if (n_ <= 0 || m_checks_ <= 0 || int(var_adj_.size()) != n_)
        throw std::invalid_argument("TannerGraph: inconsistent dimensions");
    d_v_ = int(var_adj_[0].size());
    chk_adj_.assign(size_t(m_checks_), {});
    for (int v = 0; v < n_; ++v) {
        auto& checks = var_adj_[size_t(v)];
        if (int(checks.size()) != d_v_)
            throw std::invalid_argument("TannerGraph: not variable-regular");
        std::sort(checks.begin(), checks.end());
        for (size_t i = 0; i < checks.size(); ++i) {
            int c = checks[i];
            if (c < 0 || c >= m_checks_) throw std::invalid_argument("TannerGraph: check index out of range");
            if (i > 0 && checks[i] == checks[i - 1])
                throw std::invalid_argument("TannerGraph: duplicate edge");
            chk_adj_[size_t(c)].push_back(v);
        }
    }
}

int TannerGraph::max_check_degree() const {
    size_t d = 0;
    for (const auto& vars : chk_adj_) d = std::max(d, vars.size());
    return int(d);
}

// BFS from every check node; a non-tree edge between levels l and l+1 closes
// a cycle of length 2l+2 through the root. Bipartiteness rules out same-level
// edges, so this finds the exact girth.
int TannerGraph::girth() const {
    if (girth_cache_ >= 0) return girth_cache_;
    int best = kGirthInfinite;
    int total = n_ + m_checks_;
    std::vector<int> dist(static_cast<size_t>(total));
    std::vector<int> parent(static_cast<size_t>(total));
    auto neighbors = [&](int node, auto&& visit) {
        if (node < n_) {
            for (int c : var_adj_[size_t(node)]) visit(n_ + c);
        } else {
            for (int v : chk_adj_[size_t(node - n_)]) visit(v);
        }
    };
    for (int root = n_; root < total; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[size_t(root)] = 0;
        parent[size_t(root)] = -1;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (2 * dist[size_t(u)] >= best) break;
            neighbors(u, [&](int w) {
                if (w == parent[size_t(u)]) return;
                if (dist[size_t(w)] < 0) {
                    dist[size_t(w)] = dist[size_t(u)] + 1;
                    parent[size_t(w)] = u;
                    queue.push_back(w);
                } else {
                    best = std::min(best, dist[size_t(u)] + dist[size_t(w)] + 1);
                }
            });
        }
    }
    girth_cache_ = best;
    return best;
}

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;
    bool next(std::vector<long>& values) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            values.clear();
            std::istringstream ss(line);
            long v;
            while (ss >> v) values.push_back(v);
            if (!ss.eof()) throw AlistError(line_no, "non-numeric token");
            if (!values.empty()) return true;
        }
        return false;
    }
};

}  // namespace

TannerGraph parse_alist(std::istream& in) {
    LineReader reader{in};
    std::vector<long> row;
    if (!reader.next(row) || row.size() != 2) throw AlistError(reader.line_no, "expected 'n m'");
    long n = row[0], m = row[1];
    if (n <= 0 || m <= 0) throw AlistError(reader.line_no, "non-positive dimensions");
    if (!reader.next(row) || row.size() != 2)
        throw AlistError(reader.line_no, "expected 'max_col_deg max_row_deg'");
    long max_col = row[0];
    if (!reader.next(row) || long(row.size()) != n)
        throw AlistError(reader.line_no, "expected " + std::to_string(n) + " column degrees");
    std::vector<long> col_deg = row;
    for (long d : col_deg) {
        if (d != col_deg[0])
            throw AlistError(reader.line_no, "not variable-regular: column degrees differ");
        if (d > max_col) throw AlistError(reader.line_no, "column degree exceeds declared maximum");
    }
    if (col_deg[0] < 3)
        throw AlistError(reader.line_no, "not variable-regular with column degree >= 3");
    if (!reader.next(row) || long(row.size()) != m)
        throw AlistError(reader.line_no, "expected " + std::to_string(m) + " row degrees");
    std::vector<long> row_deg = row;

    std::vector<std::vector<int>> var_adj(static_cast<size_t>(n));
    for (long v = 0; v < n; ++v) {
        if (!reader.next(row)) throw AlistError(reader.line_no, "missing column adjacency list");
        std::vector<int> checks;
        for (long c : row) {
            if (c == 0) continue;  // zero padding
            if (c < 1 || c > m) throw AlistError(reader.line_no, "check index out of range");
            checks.push_back(int(c - 1));
        }
        if (long(checks.size()) != col_deg[size_t(v)])
            throw AlistError(reader.line_no, "column list does not match declared degree");
        std::sort(checks.begin(), checks.end());
        for (size_t i = 1; i < checks.size(); ++i)
            if (checks[i] == checks[i - 1]) throw AlistError(reader.line_no, "duplicate edge in column");
        var_adj[size_t(v)] = std::move(checks);
    }
    // check-side lists: validate mutual consistency
    std::vector<std::vector<int>> chk_seen(static_cast<size_t>(m));
    for (long c = 0; c < m; ++c) {
        if (!reader.next(row)) throw AlistError(reader.line_no, "missing row adjacency list");
        for (long v : row) {
            if (v == 0) continue;
            if (v < 1 || v > n) throw AlistError(reader.line_no, "variable index out of range");
            chk_seen[size_t(c)].push_back(int(v - 1));
        }
        if (long(chk_seen[size_t(c)].size()) != row_deg[size_t(c)])
            throw AlistError(reader.line_no, "row list does not match declared degree");
    }
    for (long c = 0; c < m; ++c) {
        auto& vars = chk_seen[size_t(c)];
        std::sort(vars.begin(), vars.end());
        std::vector<int> expect;
        for (long v = 0; v < n; ++v)
            if (std::binary_search(var_adj[size_t(v)].begin(), var_adj[size_t(v)].end(), int(c)))
                expect.push_back(int(v));
        if (vars != expect)
            throw AlistError(reader.line_no, "row lists inconsistent with column lists");
    }
    return TannerGraph(int(n), int(m), std::move(var_adj));
}

TannerGraph parse_alist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open alist file: " + path);
    return parse_alist(in);
}

void write_alist(const TannerGraph& g, std::ostream& out) {
    out << g.n() << " " << g.m_checks() << "\n";
    out << g.d_v() << " " << g.max_check_degree() << "\n";
    for (int v = 0; v < g.n(); ++v) out << g.d_v() << (v + 1 < g.n() ? " " : "\n");
    for (int c = 0; c < g.m_checks(); ++c)
        out << g.check_vars(c).size() << (c + 1 < g.m_checks() ? " " : "\n");
    for (int v = 0; v < g.n(); ++v) {
        const auto& checks = g.var_checks(v);
        for (size_t i = 0; i < checks.size(); ++i)
            out << checks[i] + 1 << (i + 1 < checks.size() ? " " : "\n");
    }
    for (int c = 0; c < g.m_checks(); ++c) {
        const auto& vars = g.check_vars(c);
        for (size_t i = 0; i < vars.size(); ++i)
            out << vars[i] + 1 << (i + 1 < vars.size() ? " " : "\n");
        if (vars.empty()) out << "\n";
    }
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

TannerGraph build_array_code(int p, int gamma) {
    if (!is_prime(p)) throw std::invalid_argument("build_array_code: p must be prime");
    if (gamma < 3 || gamma > 5) throw std::invalid_argument("build_array_code: gamma must be in [3,5]");
    if (gamma > p) throw std::invalid_argument("build_array_code: gamma exceeds p");
    std::vector<std::vector<int>> exponents(static_cast<size_t>(gamma), std::vector<int>(static_cast<size_t>(p)));
    for (int i = 0; i < gamma; ++i)
        for (int j = 0; j < p; ++j) exponents[size_t(i)][size_t(j)] = (i * j) % p;
    return build_qc_code(p, exponents);
}

TannerGraph build_qc_code(int block, const std::vector<std::vector<int>>& exponents) {
    if (block <= 0 || exponents.empty() || exponents[0].empty())
        throw std::invalid_argument("build_qc_code: empty exponent matrix");
    size_t rows = exponents.size();
    size_t cols = exponents[0].size();
    for (const auto& r : exponents) {
        if (r.size() != cols) throw std::invalid_argument("build_qc_code: ragged exponent matrix");
        for (int s : r)
            if (s >= block) throw std::invalid_argument("build_qc_code: shift out of range");
    }
    int n = int(cols) * block;
    int m = int(rows) * block;
    std::vector<std::vector<int>> var_adj(static_cast<size_t>(n));
    for (size_t j = 0; j < cols; ++j) {
        for (int s = 0; s < block; ++s) {
            int v = int(j) * block + s;
            for (size_t i = 0; i < rows; ++i) {
                int shift = exponents[i][j];
                if (shift < 0) continue;  // zero block
                // circulant: check r of block-row i hits variable column (r + shift) mod block
                int r = (s - shift % block + block) % block;
                var_adj[size_t(v)].push_back(int(i) * block + r);
            }
        }
    }
    return TannerGraph(n, m, std::move(var_adj));
}

TannerGraph build_tanner_155() {
    // 3 x 5 exponent matrix over Z_31 built from elements of order 3 and 5:
    // entry(i, j) = 5^i * 2^j mod 31.
    std::vector<std::vector<int>> exponents(3, std::vector<int>(5));
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 5; ++j) {
            long long e = 1;
            for (int t = 0; t < i; ++t) e = (e * 5) % 31;
            for (int t = 0; t < j; ++t) e = (e * 2) % 31;
            exponents[size_t(i)][size_t(j)] = int(e);
        }
    }
    return build_qc_code(31, exponents);
}

InducedProfile induced_profile(const TannerGraph& g, const std::vector<int>& vars) {
    if (vars.empty()) throw std::invalid_argument("induced_profile: empty variable set");
    InducedProfile profile;
    profile.a = int(vars.size());
    std::map<int, int> check_deg;
    for (int v : vars) {
        if (v < 0 || v >= g.n()) throw std::out_of_range("induced_profile: variable index out of range");
        for (int c : g.var_checks(v)) ++check_deg[c];
    }
    int degree_sum = 0;
    profile.is_elementary = true;
    for (auto [c, deg] : check_deg) {
        degree_sum += deg;
        if (deg % 2) profile.gamma_o.push_back(c);
        else profile.gamma_e.push_back(c);
        if (deg > 2) profile.is_elementary = false;
    }
    profile.b = int(profile.gamma_o.size());
    if (degree_sum != profile.a * g.d_v())
        throw std::logic_error("induced_profile: degree census does not balance");

    // connectivity of the induced subgraph via shared checks
    std::vector<int> order(vars);
    std::sort(order.begin(), order.end());
    std::vector<char> seen(order.size(), 0);
    std::deque<size_t> queue{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
        size_t i = queue.front();
        queue.pop_front();
        for (size_t j = 0; j < order.size(); ++j) {
            if (seen[j]) continue;
            bool share = false;
            for (int c : g.var_checks(order[i])) {
                const auto& cj = g.var_checks(order[j]);
                if (std::binary_search(cj.begin(), cj.end(), c)) {
                    share = true;
                    break;
                }
            }
            if (share) {
                seen[j] = 1;
                ++reached;
                queue.push_back(j);
            }
        }
    }
    profile.is_connected = reached == order.size();

    profile.is_leafless = true;
    for (int v : order) {
        int deg2 = 0;
        for (int c : g.var_checks(v))
            if (check_deg[c] == 2) ++deg2;
        if (deg2 < 2) profile.is_leafless = false;
    }
    return profile;
}

NormalGraph normal_from_induced(const TannerGraph& g, const std::vector<int>& vars) {
    InducedProfile profile = induced_profile(g, vars);
    if (!profile.is_elementary)
        throw std::invalid_argument("normal_from_induced: induced subgraph is not elementary");
    if (int(vars.size()) > kMaxStructNodes)
        throw std::invalid_argument("normal_from_induced: set too large for structure space");
    std::vector<int> order(vars);
    std::sort(order.begin(), order.end());
    NormalGraph s;
    s.n = uint8_t(order.size());
    for (int c : profile.gamma_e) {
        int ends[2];
        int found = 0;
        for (size_t i = 0; i < order.size() && found < 2; ++i) {
            const auto& checks = g.var_checks(order[i]);
            if (std::binary_search(checks.begin(), checks.end(), c)) ends[found++] = int(i);
        }
        if (s.has_edge(ends[0], ends[1]))
            throw std::invalid_argument("normal_from_induced: parallel edge (girth <= 4)");
        s.add_edge(ends[0], ends[1]);
    }
    return s;
}

}  // namespace trapscan

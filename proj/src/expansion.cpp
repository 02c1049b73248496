#include "trapscan/expansion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace trapscan {

std::string to_string(const ExpansionSpec& spec) {
    switch (spec.kind) {
        case ExpansionSpec::Kind::Dot:
            return "dot";
        case ExpansionSpec::Kind::Path:
            return "pa" + std::to_string(spec.m);
        case ExpansionSpec::Kind::Lollipop:
            return "lo" + std::to_string(spec.c) + "_" + std::to_string(spec.m);
    }
    return "";
}

ExpansionSpec parse_expansion(const std::string& text) {
    if (text == "dot") return ExpansionSpec{ExpansionSpec::Kind::Dot, 0, 0};
    auto parse_int = [&](size_t from, size_t to) {
        if (from >= to) throw std::invalid_argument("expansion spec: missing number in '" + text + "'");
        int value = 0;
        for (size_t i = from; i < to; ++i) {
            if (!isdigit(static_cast<unsigned char>(text[i])))
                throw std::invalid_argument("expansion spec: bad number in '" + text + "'");
            value = value * 10 + (text[i] - '0');
        }
        return value;
    };
    if (text.rfind("pa", 0) == 0) {
        int m = parse_int(2, text.size());
        if (m < 2) throw std::invalid_argument("expansion spec: path needs m >= 2");
        return ExpansionSpec{ExpansionSpec::Kind::Path, m, 0};
    }
    if (text.rfind("lo", 0) == 0) {
        size_t us = text.find('_');
        if (us == std::string::npos) throw std::invalid_argument("expansion spec: '" + text + "'");
        int c = parse_int(2, us);
        int m = parse_int(us + 1, text.size());
        if (c < 3 || m < 3 || c > m)
            throw std::invalid_argument("expansion spec: lollipop needs 3 <= c <= m");
        return ExpansionSpec{ExpansionSpec::Kind::Lollipop, m, c};
    }
    throw std::invalid_argument("expansion spec: '" + text + "'");
}

namespace {

void require_valid(const NormalGraph& s, int d_v, int girth, const char* op) {
    if (!is_valid_structure(s, d_v, girth))
        throw std::invalid_argument(std::string(op) + ": input is not a valid structure");
}

void check_class(const NormalGraph& out, int d_v, int expect_a, int expect_b, const char* op) {
    ClassId got = class_of(out, d_v);
    if (got.a != expect_a || got.b != expect_b)
        throw std::logic_error(std::string(op) + ": expansion class arithmetic violated");
}

std::vector<NormalGraph> finish(std::vector<NormalGraph>&& raw) {
    std::vector<std::pair<CanonicalCode, NormalGraph>> keyed;
    keyed.reserve(raw.size());
    for (const NormalGraph& g : raw) keyed.emplace_back(canonical_form(g), canonicalize(g));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<NormalGraph> out;
    out.reserve(keyed.size());
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) out.push_back(keyed[i].second);
    }
    return out;
}

}  // namespace

std::vector<NormalGraph> dot_expand(const NormalGraph& s, int d_v, int girth) {
    require_valid(s, d_v, girth, "dot_expand");
    int b = class_of(s, d_v).b;
    if (s.n + 1 > kMaxStructNodes) return {};
    std::vector<int> sockets;
    for (int v = 0; v < s.n; ++v)
        if (s.degree(v) < d_v) sockets.push_back(v);

    std::vector<NormalGraph> raw;
    int m_hi = std::min(d_v, b);
    for (int m = 2; m <= m_hi; ++m) {
        if (m > int(sockets.size())) break;
        
        // all m-subsets of the socket list
        std::vector<int> idx(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) idx[size_t(i)] = i;
        while (true) {
            NormalGraph out = s;
            out.n = uint8_t(s.n + 1);
            for (int i = 0; i < m; ++i) out.add_edge(sockets[size_t(idx[size_t(i)])], s.n);
            if (is_valid_structure(out, d_v, girth)) {
                check_class(out, d_v, s.n + 1, b + d_v - 2 * m, "dot_expand");
                raw.push_back(out);
            }
            int i = m - 1;
            while (i >= 0 && idx[size_t(i)] == int(sockets.size()) - m + i) --i;
            if (i < 0) break;
            ++idx[size_t(i)];
            for (int j = i + 1; j < m; ++j) idx[size_t(j)] = idx[size_t(j - 1)] + 1;
        }
    }
    return finish(std::move(raw));
}

std::vector<NormalGraph> path_expand(const NormalGraph& s, int m, int d_v, int girth) {
    require_valid(s, d_v, girth, "path_expand");
    if (m < 2) throw std::invalid_argument("path_expand: m >= 2 (pa_1 is dot_2)");
    if (s.n + m > kMaxStructNodes) return {};
    int b = class_of(s, d_v).b;
    std::vector<NormalGraph> raw;

    // open paths: endpoints at two distinct nodes with degree < d_v
    for (int u = 0; u < s.n; ++u) {
        if (s.degree(u) >= d_v) continue;
        for (int w = u + 1; w < s.n; ++w) {
            if (s.degree(w) >= d_v) continue;
            NormalGraph out = s;
            out.n = uint8_t(s.n + m);
            out.add_edge(u, s.n);
            for (int i = 1; i < m; ++i) out.add_edge(s.n + i - 1, s.n + i);
            out.add_edge(s.n + m - 1, w);
            if (is_valid_structure(out, d_v, girth)) {
                check_class(out, d_v, s.n + m, b - 2 + m * (d_v - 2), "path_expand");
                raw.push_back(out);
            }
        }
    }
    // closed paths: one node with two free sockets
    for (int u = 0; u < s.n; ++u) {
        if (s.degree(u) >= d_v - 1) continue;
        NormalGraph out = s;
        out.n = uint8_t(s.n + m);
        out.add_edge(u, s.n);
        for (int i = 1; i < m; ++i) out.add_edge(s.n + i - 1, s.n + i);
        out.add_edge(s.n + m - 1, u);
        if (is_valid_structure(out, d_v, girth)) {
            check_class(out, d_v, s.n + m, b - 2 + m * (d_v - 2), "path_expand");
            raw.push_back(out);
        }
    }
    return finish(std::move(raw));
}

std::vector<NormalGraph> lollipop_expand(const NormalGraph& s, int m, int c, int d_v, int girth) {
    require_valid(s, d_v, girth, "lollipop_expand");
    if (m < 3 || c < 3 || c > m) throw std::invalid_argument("lollipop_expand: need m >= 3, 3 <= c <= m");
    if (s.n + m > kMaxStructNodes) return {};
    int b = class_of(s, d_v).b;
    int d = m + 1 - c;  // stem length
    std::vector<NormalGraph> raw;
    for (int u = 0; u < s.n; ++u) {
        if (s.degree(u) >= d_v) continue;
        NormalGraph out = s;
        out.n = uint8_t(s.n + m);
        // stem u - x1 - ... - x_{d-1} - y, then cycle of length c through y
        int prev = u;
        for (int i = 0; i < d; ++i) {
            out.add_edge(prev, s.n + i);
            prev = s.n + i;
        }
        int y = prev;  // first cycle node
        for (int i = 0; i < c - 1; ++i) {
            out.add_edge(prev, s.n + d + i);
            prev = s.n + d + i;
        }
        out.add_edge(prev, y);
        if (is_valid_structure(out, d_v, girth)) {
            check_class(out, d_v, s.n + m, b - 2 + m * (d_v - 2), "lollipop_expand");
            raw.push_back(out);
        }
    }
    return finish(std::move(raw));
}

std::vector<NormalGraph> apply_expansion(const NormalGraph& s, const ExpansionSpec& spec, int d_v,
                                         int girth) {
    switch (spec.kind) {
        case ExpansionSpec::Kind::Dot:
            return dot_expand(s, d_v, girth);
        case ExpansionSpec::Kind::Path:
            return path_expand(s, spec.m, d_v, girth);
        case ExpansionSpec::Kind::Lollipop:
            return lollipop_expand(s, spec.m, spec.c, d_v, girth);
    }
    return {};
}

std::map<int, std::vector<NormalGraph>> dot_closure(const std::vector<NormalGraph>& seeds,
                                                    const CodeSet& excluded, int a_max, int d_v,
                                                    int girth, int b_cap) {
    std::map<int, std::vector<NormalGraph>> levels;
    CodeSet in_result;
    for (const NormalGraph& s : seeds) {
        CanonicalCode code = canonical_form(s);
        if (in_result.insert(code).second) levels[s.n].push_back(canonicalize(s));
    }
    for (int a = levels.empty() ? 0 : levels.begin()->first; a < a_max; ++a) {
        auto it = levels.find(a);
        if (it == levels.end()) continue;
        std::vector<NormalGraph> next;
        for (const NormalGraph& s : it->second) {
            for (const NormalGraph& child : dot_expand(s, d_v, girth)) {
                if (b_cap >= 0 && class_of(child, d_v).b > b_cap) continue;
                CanonicalCode code = canonical_form(child);
                if (excluded.count(code) || !in_result.insert(code).second) continue;
                next.push_back(child);
            }
        }
        if (!next.empty()) {
            auto& bucket = levels[a + 1];
            bucket.insert(bucket.end(), next.begin(), next.end());
        }
    }
    return levels;
}

}  // namespace trapscan

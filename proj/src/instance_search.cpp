#include "trapscan/instance_search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace trapscan {

InstKey pack_vars(const uint16_t* vars, int count) {
    InstKey key;
    key.w.fill(~0ull);
    for (int i = 0; i < count; ++i) {
        int word = i >> 2, lane = (i & 3) * 16;
        key.w[size_t(word)] &= ~(0xffffull << lane);
        key.w[size_t(word)] |= uint64_t(vars[i]) << lane;
    }
    return key;
}

std::vector<uint16_t> unpack_vars(const InstKey& key) {
    std::vector<uint16_t> vars;
    for (int i = 0; i < kMaxStructNodes; ++i) {
        uint16_t lane = uint16_t(key.w[size_t(i >> 2)] >> ((i & 3) * 16));
        if (lane == 0xffff) break;
        vars.push_back(lane);
    }
    return vars;
}

namespace {

// Stamped per-worker scratch; one fresh stamp per loaded instance.
struct Scratch {
    std::vector<uint32_t> chk_stamp, var_stamp, hit_stamp;
    std::vector<uint8_t> chk_deg;
    std::vector<uint8_t> hit_count;
    uint32_t stamp = 0;

    void init(int n, int m_checks) {
        chk_stamp.assign(size_t(m_checks), 0);
        chk_deg.assign(size_t(m_checks), 0);
        var_stamp.assign(size_t(n), 0);
        hit_stamp.assign(size_t(n), 0);
        hit_count.assign(size_t(n), 0);
    }
};

// Induced-subgraph view of one instance under the current stamp.
struct Ctx {
    const TannerGraph& g;
    Scratch& sc;
    const uint16_t* vars = nullptr;
    int a = 0;
    int b = 0;
    std::vector<uint16_t> gamma_o;

    Ctx(const TannerGraph& graph, Scratch& scratch) : g(graph), sc(scratch) {}

    void load(const uint16_t* v, int count) {
        vars = v;
        a = count;
        ++sc.stamp;
        gamma_o.clear();
        for (int i = 0; i < a; ++i) sc.var_stamp[vars[i]] = sc.stamp;
        for (int i = 0; i < a; ++i) {
            for (int c : g.var_checks(vars[i])) {
                if (sc.chk_stamp[size_t(c)] != sc.stamp) {
                    sc.chk_stamp[size_t(c)] = sc.stamp;
                    sc.chk_deg[size_t(c)] = 1;
                } else {
                    ++sc.chk_deg[size_t(c)];
                }
            }
        }
        for (int i = 0; i < a; ++i)
            for (int c : g.var_checks(vars[i]))
                if (sc.chk_deg[size_t(c)] == 1 && sc.chk_stamp[size_t(c)] == sc.stamp) {
                    // collect each unsatisfied check once, at its first variable
                    bool first = true;
                    for (int j = 0; j < i && first; ++j) {
                        const auto& cj = g.var_checks(vars[j]);
                        if (std::binary_search(cj.begin(), cj.end(), c)) first = false;
                    }
                    if (first) gamma_o.push_back(uint16_t(c));
                }
        b = int(gamma_o.size());
    }

    bool var_in_set(int v) const { return sc.var_stamp[size_t(v)] == sc.stamp; }
    int check_deg(int c) const {
        return sc.chk_stamp[size_t(c)] == sc.stamp ? sc.chk_deg[size_t(c)] : 0;
    }
};

struct Candidate {
    InstKey key;
    ClassId cls;
};

// Census validation of a merged candidate set: elementary, leafless, and in
// exactly the expected (a, b) class. Uses its own stamp.
bool validate_lets(const TannerGraph& g, Scratch& sc, const uint16_t* vars, int a, ClassId expect) {
    ++sc.stamp;
    for (int i = 0; i < a; ++i) {
        for (int c : g.var_checks(vars[i])) {
            if (sc.chk_stamp[size_t(c)] != sc.stamp) {
                sc.chk_stamp[size_t(c)] = sc.stamp;
                sc.chk_deg[size_t(c)] = 1;
            } else if (++sc.chk_deg[size_t(c)] > 2) {
                return false;
            }
        }
    }
    int b = 0;
    for (int i = 0; i < a; ++i) {
        int sat = 0, unsat = 0;
        for (int c : g.var_checks(vars[i])) {
            if (sc.chk_deg[size_t(c)] == 2) ++sat;
            else ++unsat;
        }
        if (sat < 2) return false;  // leaf
        b += unsat;
    }
    return a == expect.a && b == expect.b;
}

// Alternating check/variable walk of fixed edge length rooted at a check.
struct Walk {
    int end = -1;  // node id; variables are [0, n), checks are n + c
    uint8_t nvars = 0, nchecks = 0;
    std::array<uint16_t, 7> vars{};
    std::array<uint16_t, 7> checks{};  // excludes the root check
};

struct WalkEnum {
    const TannerGraph& g;
    const Ctx& ctx;
    int length = 0;
    int min_var = -1;  // cycle enumeration: only variables above the root
    std::vector<Walk>* out = nullptr;
    Walk cur;

    void run(int root_check, int len) {
        length = len;
        cur = Walk{};
        if (len == 0) {
            cur.end = g.n() + root_check;
            out->push_back(cur);
            return;
        }
        from_check(root_check, 0);
    }

    void from_check(int c, int depth) {
        if (depth == length) {
            cur.end = g.n() + c;
            out->push_back(cur);
            return;
        }
        for (int w : g.check_vars(c)) {
            if (ctx.vars != nullptr && ctx.var_in_set(w)) continue;
            if (w <= min_var) continue;
            bool repeat = false;
            for (int i = 0; i < cur.nvars; ++i)
                if (cur.vars[size_t(i)] == w) {
                    repeat = true;
                    break;
                }
            if (repeat) continue;
            cur.vars[size_t(cur.nvars++)] = uint16_t(w);
            from_var(w, depth + 1);
            --cur.nvars;
        }
    }

    void from_var(int v, int depth) {
        if (depth == length) {
            cur.end = v;
            out->push_back(cur);
            return;
        }
        for (int c : g.var_checks(v)) {
            if (ctx.vars != nullptr && ctx.check_deg(c) > 0) continue;  // inside G(S)
            bool repeat = false;
            for (int i = 0; i < cur.nchecks; ++i)
                if (cur.checks[size_t(i)] == c) {
                    repeat = true;
                    break;
                }
            if (repeat) continue;
            cur.checks[size_t(cur.nchecks++)] = uint16_t(c);
            from_check(c, depth + 1);
            --cur.nchecks;
        }
    }
};

bool walks_disjoint(const Walk& x, const Walk& y, bool skip_end_var, bool skip_end_check, int n) {
    for (int i = 0; i < x.nvars; ++i) {
        uint16_t v = x.vars[size_t(i)];
        if (skip_end_var && int(v) == x.end) continue;
        for (int j = 0; j < y.nvars; ++j) {
            uint16_t w = y.vars[size_t(j)];
            if (skip_end_var && int(w) == y.end) continue;
            if (v == w) return false;
        }
    }
    for (int i = 0; i < x.nchecks; ++i) {
        uint16_t c = x.checks[size_t(i)];
        if (skip_end_check && int(c) + n == x.end) continue;
        for (int j = 0; j < y.nchecks; ++j) {
            uint16_t d = y.checks[size_t(j)];
            if (skip_end_check && int(d) + n == y.end) continue;
            if (c == d) return false;
        }
    }
    return true;
}

// merge instance vars with extra vars (both sorted not required for extras);
// returns false if anything collides or the count mismatches
bool merge_vars(const uint16_t* base, int a, const uint16_t* extra, int extra_count,
                std::array<uint16_t, kMaxStructNodes>& out, int& out_count) {
    std::array<uint16_t, kMaxStructNodes> tmp{};
    for (int i = 0; i < extra_count; ++i) tmp[size_t(i)] = extra[i];
    std::sort(tmp.begin(), tmp.begin() + extra_count);
    for (int i = 1; i < extra_count; ++i)
        if (tmp[size_t(i)] == tmp[size_t(i - 1)]) return false;
    int i = 0, j = 0;
    out_count = 0;
    while (i < a || j < extra_count) {
        uint16_t next;
        if (j == extra_count || (i < a && base[i] < tmp[size_t(j)])) next = base[i++];
        else if (i < a && base[i] == tmp[size_t(j)]) return false;
        else next = tmp[size_t(j++)];
        if (out_count >= kMaxStructNodes) return false;
        out[size_t(out_count++)] = next;
    }
    return true;
}

struct CycleSet {
    std::vector<std::vector<uint16_t>> vars;
    std::vector<std::vector<uint16_t>> gamma_o;
    std::unordered_map<uint16_t, std::vector<uint32_t>> by_unsat_check;
};

CycleSet index_cycles(const TannerGraph& g, const std::vector<LetsInstance>& cycles) {
    CycleSet set;
    Scratch sc;
    sc.init(g.n(), g.m_checks());
    Ctx ctx(g, sc);
    for (const LetsInstance& inst : cycles) {
        ctx.load(inst.vars.data(), int(inst.vars.size()));
        uint32_t id = uint32_t(set.vars.size());
        set.vars.push_back(inst.vars);
        set.gamma_o.push_back(ctx.gamma_o);
        for (uint16_t c : ctx.gamma_o) set.by_unsat_check[c].push_back(id);
    }
    return set;
}

// ---- expansion kernels ------------------------------------------------

void expand_dot(const TannerGraph& g, Scratch& sc, Ctx& ctx, int b_cap,
                std::vector<Candidate>& out, size_t& sample_tick) {
    int d_v = g.d_v();
    ++sc.stamp;  // hit-counting stamp (separate arrays, same counter)
    std::vector<uint16_t> cands;
    for (uint16_t c : ctx.gamma_o) {
        for (int w : g.check_vars(c)) {
            if (ctx.var_in_set(w)) continue;
            if (sc.hit_stamp[size_t(w)] != sc.stamp) {
                sc.hit_stamp[size_t(w)] = sc.stamp;
                sc.hit_count[size_t(w)] = 1;
                cands.push_back(uint16_t(w));
            } else {
                ++sc.hit_count[size_t(w)];
            }
        }
    }
    for (uint16_t w : cands) {
        int m = sc.hit_count[size_t(w)];
        if (m < 2) continue;
        bool touches_satisfied = false;
        for (int c : g.var_checks(w)) {
            if (ctx.check_deg(c) == 2) {
                touches_satisfied = true;
                break;
            }
        }
        if (touches_satisfied) continue;
        ClassId cls{ctx.a + 1, ctx.b + d_v - 2 * m};
        if (b_cap >= 0 && cls.b > b_cap) continue;
        std::array<uint16_t, kMaxStructNodes> merged{};
        int count = 0;
        if (!merge_vars(ctx.vars, ctx.a, &w, 1, merged, count)) continue;
#ifdef NDEBUG
        bool check_now = (sample_tick++ % 64) == 0;
#else
        bool check_now = true;
        ++sample_tick;
#endif
        if (check_now && !validate_lets(g, sc, merged.data(), count, cls))
            throw std::logic_error("dot_search_step: unsound candidate");
        out.push_back({pack_vars(merged.data(), count), cls});
    }
}

void expand_path(const TannerGraph& g, Scratch& sc, Ctx& ctx, int m, int b_cap,
                 std::vector<Candidate>& out) {
    int d_v = g.d_v();
    ClassId cls{ctx.a + m, ctx.b - 2 + m * (d_v - 2)};
    if (b_cap >= 0 && cls.b > b_cap) return;
    if (cls.b < 0) return;
    std::vector<std::vector<Walk>> walks(ctx.gamma_o.size());
    WalkEnum we{g, ctx};
    for (size_t i = 0; i < ctx.gamma_o.size(); ++i) {
        we.out = &walks[i];
        we.run(ctx.gamma_o[i], m);
        std::sort(walks[i].begin(), walks[i].end(),
                  [](const Walk& x, const Walk& y) { return x.end < y.end; });
    }
    bool end_is_var = (m % 2) == 1;
    for (size_t i = 0; i < walks.size(); ++i) {
        for (size_t j = i + 1; j < walks.size(); ++j) {
            // sorted two-pointer sweep over common endpoints
            size_t xi = 0, yj = 0;
            while (xi < walks[i].size() && yj < walks[j].size()) {
                if (walks[i][xi].end < walks[j][yj].end) {
                    ++xi;
                    continue;
                }
                if (walks[i][xi].end > walks[j][yj].end) {
                    ++yj;
                    continue;
                }
                int end = walks[i][xi].end;
                size_t xe = xi, ye = yj;
                while (xe < walks[i].size() && walks[i][xe].end == end) ++xe;
                while (ye < walks[j].size() && walks[j][ye].end == end) ++ye;
                for (size_t x = xi; x < xe; ++x) {
                    for (size_t y = yj; y < ye; ++y) {
                        const Walk& wa = walks[i][x];
                        const Walk& wb = walks[j][y];
                        if (!walks_disjoint(wa, wb, end_is_var, !end_is_var, g.n())) continue;
                        std::array<uint16_t, 7> extra{};
                        int extra_count = 0;
                        for (int t = 0; t < wa.nvars; ++t) extra[size_t(extra_count++)] = wa.vars[size_t(t)];
                        for (int t = 0; t < wb.nvars; ++t) {
                            uint16_t v = wb.vars[size_t(t)];
                            if (end_is_var && int(v) == end && extra_count > 0) {
                                bool dup = false;
                                for (int q = 0; q < extra_count; ++q)
                                    if (extra[size_t(q)] == v) dup = true;
                                if (dup) continue;
                            }
                            extra[size_t(extra_count++)] = v;
                        }
                        if (extra_count != m) continue;
                        std::array<uint16_t, kMaxStructNodes> merged{};
                        int count = 0;
                        if (!merge_vars(ctx.vars, ctx.a, extra.data(), extra_count, merged, count))
                            continue;
                        if (!validate_lets(g, sc, merged.data(), count, cls)) continue;
                        out.push_back({pack_vars(merged.data(), count), cls});
                    }
                }
                xi = xe;
                yj = ye;
            }
        }
    }
}

void expand_lollipop(const TannerGraph& g, Scratch& sc, Ctx& ctx, int m, int c,
                     const CycleSet& cycles, int b_cap, std::vector<Candidate>& out) {
    int d_v = g.d_v();
    ClassId cls{ctx.a + m, ctx.b - 2 + m * (d_v - 2)};
    if (b_cap >= 0 && cls.b > b_cap) return;
    if (cls.b < 0) return;
    int d = m + 1 - c;  // stem length >= 1; walk below has 2(d-1) edges
    std::vector<Walk> walks;
    WalkEnum we{g, ctx};
    we.out = &walks;
    for (uint16_t start : ctx.gamma_o) we.run(start, 2 * (d - 1));
    for (const Walk& walk : walks) {
        int end_check = walk.end - g.n();
        auto hit = cycles.by_unsat_check.find(uint16_t(end_check));
        if (hit == cycles.by_unsat_check.end()) continue;
        for (uint32_t id : hit->second) {
            const std::vector<uint16_t>& cyc_vars = cycles.vars[id];
            bool overlap = false;
            for (uint16_t v : cyc_vars) {
                if (ctx.var_in_set(v)) {
                    overlap = true;
                    break;
                }
                for (int t = 0; t < walk.nvars && !overlap; ++t)
                    if (walk.vars[size_t(t)] == v) overlap = true;
                if (overlap) break;
            }
            if (overlap) continue;
            std::array<uint16_t, kMaxStructNodes> extra{};
            int extra_count = 0;
            for (int t = 0; t < walk.nvars; ++t) extra[size_t(extra_count++)] = walk.vars[size_t(t)];
            for (uint16_t v : cyc_vars) extra[size_t(extra_count++)] = v;
            if (extra_count != m) continue;
            std::array<uint16_t, kMaxStructNodes> merged{};
            int count = 0;
            if (!merge_vars(ctx.vars, ctx.a, extra.data(), extra_count, merged, count)) continue;
            if (!validate_lets(g, sc, merged.data(), count, cls)) continue;
            out.push_back({pack_vars(merged.data(), count), cls});
        }
    }
}

std::vector<Candidate> cycle_candidates(const TannerGraph& g, int k) {
    std::vector<Candidate> out;
    Scratch sc;
    sc.init(g.n(), g.m_checks());
    Ctx empty(g, sc);
    empty.vars = nullptr;
    std::vector<Walk> wa, wb;
    WalkEnum we{g, empty};
    ClassId cls{k, k * (g.d_v() - 2)};
    for (int v = 0; v < g.n(); ++v) {
        const auto& checks = g.var_checks(v);
        for (size_t i = 0; i < checks.size(); ++i) {
            for (size_t j = i + 1; j < checks.size(); ++j) {
                wa.clear();
                wb.clear();
                we.min_var = v;
                we.out = &wa;
                we.run(checks[i], k - 1);
                we.out = &wb;
                we.run(checks[j], k - 1);
                bool end_is_var = (k % 2) == 0;  // k-1 odd -> walk ends at a variable
                std::sort(wa.begin(), wa.end(), [](const Walk& x, const Walk& y) { return x.end < y.end; });
                std::sort(wb.begin(), wb.end(), [](const Walk& x, const Walk& y) { return x.end < y.end; });
                size_t xi = 0, yj = 0;
                while (xi < wa.size() && yj < wb.size()) {
                    if (wa[xi].end < wb[yj].end) {
                        ++xi;
                        continue;
                    }
                    if (wa[xi].end > wb[yj].end) {
                        ++yj;
                        continue;
                    }
                    int end = wa[xi].end;
                    size_t xe = xi, ye = yj;
                    while (xe < wa.size() && wa[xe].end == end) ++xe;
                    while (ye < wb.size() && wb[ye].end == end) ++ye;
                    for (size_t x = xi; x < xe; ++x) {
                        for (size_t y = yj; y < ye; ++y) {
                            if (!walks_disjoint(wa[x], wb[y], end_is_var, !end_is_var, g.n())) continue;
                            std::array<uint16_t, kMaxStructNodes> set{};
                            int count = 0;
                            set[size_t(count++)] = uint16_t(v);
                            bool bad = false;
                            auto add_var = [&](uint16_t var) {
                                for (int q = 0; q < count; ++q)
                                    if (set[size_t(q)] == var) return;
                                if (count >= kMaxStructNodes) {
                                    bad = true;
                                    return;
                                }
                                set[size_t(count++)] = var;
                            };
                            for (int t = 0; t < wa[x].nvars; ++t) add_var(wa[x].vars[size_t(t)]);
                            for (int t = 0; t < wb[y].nvars; ++t) add_var(wb[y].vars[size_t(t)]);
                            if (bad || count != k) continue;
                            std::sort(set.begin(), set.begin() + count);
                            if (!validate_lets(g, sc, set.data(), count, cls)) continue;
                            out.push_back({pack_vars(set.data(), count), cls});
                        }
                    }
                    xi = xe;
                    yj = ye;
                }
            }
        }
    }
    return out;
}

std::vector<LetsInstance> dedup_to_instances(std::vector<Candidate>&& cands, const FoundSet& found,
                                             int origin) {
    FoundSet local;
    std::vector<LetsInstance> out;
    for (const Candidate& cand : cands) {
        if (found.count(cand.key) || !local.insert(cand.key).second) continue;
        out.push_back({unpack_vars(cand.key), cand.cls, origin});
    }
    return out;
}

}  // namespace

std::vector<LetsInstance> enumerate_simple_cycles(const TannerGraph& g, int k) {
    if (2 * k < g.girth()) return {};
    FoundSet none;
    return dedup_to_instances(cycle_candidates(g, k), none, k);
}

std::vector<LetsInstance> dot_search_step(const TannerGraph& g,
                                          const std::vector<LetsInstance>& instances,
                                          const FoundSet& found) {
    Scratch sc;
    sc.init(g.n(), g.m_checks());
    Ctx ctx(g, sc);
    std::vector<Candidate> cands;
    size_t tick = 0;
    for (const LetsInstance& inst : instances) {
        ctx.load(inst.vars.data(), int(inst.vars.size()));
        expand_dot(g, sc, ctx, -1, cands, tick);
    }
    return dedup_to_instances(std::move(cands), found, 0);
}

std::vector<LetsInstance> path_search_step(const TannerGraph& g,
                                           const std::vector<LetsInstance>& instances,
                                           const FoundSet& found, int m) {
    if (m < 2) throw std::invalid_argument("path_search_step: m >= 2");
    Scratch sc;
    sc.init(g.n(), g.m_checks());
    Ctx ctx(g, sc);
    std::vector<Candidate> cands;
    for (const LetsInstance& inst : instances) {
        ctx.load(inst.vars.data(), int(inst.vars.size()));
        expand_path(g, sc, ctx, m, -1, cands);
    }
    return dedup_to_instances(std::move(cands), found, 0);
}

std::vector<LetsInstance> lollipop_search_step(const TannerGraph& g,
                                               const std::vector<LetsInstance>& instances,
                                               const std::vector<LetsInstance>& cycle_instances,
                                               const FoundSet& found, int m, int c) {
    if (m < 3 || c < 3 || c > m)
        throw std::invalid_argument("lollipop_search_step: need m >= 3, 3 <= c <= m");
    CycleSet cycles = index_cycles(g, cycle_instances);
    Scratch sc;
    sc.init(g.n(), g.m_checks());
    Ctx ctx(g, sc);
    std::vector<Candidate> cands;
    for (const LetsInstance& inst : instances) {
        ctx.load(inst.vars.data(), int(inst.vars.size()));
        expand_lollipop(g, sc, ctx, m, c, cycles, -1, cands);
    }
    return dedup_to_instances(std::move(cands), found, 0);
}

namespace {

struct StoredLevel {
    std::vector<InstKey> keys;
    std::vector<ClassId> cls;
};

struct Engine {
    const TannerGraph& g;
    const CharacterizationTable* table;  // null in dot mode
    SearchOptions opts;
    int b_cap;  // bprime_max in dpl mode, -1 (none) in dot mode

    FoundSet found;
    std::unordered_map<int, CycleSet> cycle_sets;
    std::vector<LetsInstance> result;

    Engine(const TannerGraph& graph, const CharacterizationTable* tbl, SearchOptions options)
        : g(graph), table(tbl), opts(options), b_cap(tbl ? tbl->bprime_max : -1) {}

    const CycleSet& cycles_of(int c) {
        auto it = cycle_sets.find(c);
        if (it != cycle_sets.end()) return it->second;
        CycleSet set = index_cycles(g, enumerate_simple_cycles(g, c));
        return cycle_sets.emplace(c, std::move(set)).first->second;
    }

    // expansions for one level of one cycle-seeded search
    void process_level(const StoredLevel& level, std::vector<StoredLevel>& storage) {
        if (level.keys.empty()) return;
        // resolve path/lollipop specs once per class present in the level
        std::map<ClassId, std::vector<ExpansionSpec>> class_specs;
        if (table) {
            for (const ClassId& cls : level.cls) {
                if (class_specs.count(cls)) continue;
                std::vector<ExpansionSpec> specs;
                for (const ExpansionSpec& spec : table->palo_expansions(cls))
                    if (cls.a + spec.m <= opts.a_max) specs.push_back(spec);
                class_specs.emplace(cls, std::move(specs));
            }
            for (const auto& [cls, specs] : class_specs)
                for (const ExpansionSpec& spec : specs)
                    if (spec.kind == ExpansionSpec::Kind::Lollipop) cycles_of(spec.c);
        }

        int threads = std::max(1, opts.threads);
        size_t count = level.keys.size();
        size_t chunk = (count + size_t(threads) - 1) / size_t(threads);
        std::vector<std::vector<Candidate>> chunk_out(static_cast<size_t>(threads));

        auto work = [&](size_t t) {
            Scratch sc;
            sc.init(g.n(), g.m_checks());
            Ctx ctx(g, sc);
            size_t tick = 0;
            size_t lo = t * chunk, hi = std::min(count, lo + chunk);
            for (size_t i = lo; i < hi; ++i) {
                std::vector<uint16_t> vars = unpack_vars(level.keys[i]);
                ctx.load(vars.data(), int(vars.size()));
                expand_dot(g, sc, ctx, b_cap, chunk_out[t], tick);
                if (!table) continue;
                for (const ExpansionSpec& spec : class_specs.at(level.cls[i])) {
                    if (spec.kind == ExpansionSpec::Kind::Path) {
                        expand_path(g, sc, ctx, spec.m, b_cap, chunk_out[t]);
                    } else if (spec.kind == ExpansionSpec::Kind::Lollipop) {
                        expand_lollipop(g, sc, ctx, spec.m, spec.c, cycle_sets.at(spec.c), b_cap,
                                        chunk_out[t]);
                    }
                }
            }
        };
        if (threads == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (size_t t = 0; t < size_t(threads); ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        // deterministic commit in chunk order
        for (const auto& cands : chunk_out) {
            for (const Candidate& cand : cands) {
                if (!found.insert(cand.key).second) continue;
                StoredLevel& target = storage[size_t(cand.cls.a)];
                target.keys.push_back(cand.key);
                target.cls.push_back(cand.cls);
            }
        }
    }

    void run_from_cycle(int k) {
        std::vector<StoredLevel> storage(size_t(opts.a_max) + 1);
        const CycleSet& seeds = cycles_of(k);
        for (size_t i = 0; i < seeds.vars.size(); ++i) {
            InstKey key = pack_vars(seeds.vars[i].data(), int(seeds.vars[i].size()));
            if (!found.insert(key).second) continue;
            storage[size_t(k)].keys.push_back(key);
            storage[size_t(k)].cls.push_back(ClassId{k, k * (g.d_v() - 2)});
        }
        for (int a = k; a < opts.a_max; ++a) {
            // a level can keep growing while processed (path/lollipop jumps
            // land above it), so never mutate the vector being iterated
            size_t cursor = 0;
            while (cursor < storage[size_t(a)].keys.size()) {
                StoredLevel slice;
                slice.keys.assign(storage[size_t(a)].keys.begin() + long(cursor),
                                  storage[size_t(a)].keys.end());
                slice.cls.assign(storage[size_t(a)].cls.begin() + long(cursor),
                                 storage[size_t(a)].cls.end());
                cursor = storage[size_t(a)].keys.size();
                process_level(slice, storage);
            }
        }
        for (int a = 0; a <= opts.a_max; ++a) {
            const StoredLevel& level = storage[size_t(a)];
            for (size_t i = 0; i < level.keys.size(); ++i) {
                // overflow classes are search intermediates; only surface them on request
                if (!opts.keep_overflow && table && level.cls[i].b > opts.b_max) continue;
                result.push_back({unpack_vars(level.keys[i]), level.cls[i], k});
            }
        }
    }
};

}  // namespace

SearchResult dpl_search(const TannerGraph& g, const CharacterizationTable& table,
                        const SearchOptions& opts) {
    if (table.d_v != g.d_v())
        throw std::invalid_argument("dpl_search: table d_v does not match the graph");
    if (g.girth() < 6) throw std::invalid_argument("dpl_search: graph has 4-cycles");
    if (table.girth > g.girth())
        throw std::invalid_argument("dpl_search: table girth exceeds graph girth");
    if (opts.a_max > table.a_max || opts.b_max > table.b_max)
        throw std::invalid_argument("dpl_search: requested range exceeds the table");
    auto start = std::chrono::steady_clock::now();
    SearchResult out;
    Engine engine(g, &table, opts);
    for (int k : table.cycle_primes)
        if (k <= opts.a_max) engine.run_from_cycle(k);
    out.instances = std::move(engine.result);
    out.stats.instances_stored = engine.found.size();
    out.stats.approx_bytes = engine.found.size() * (sizeof(InstKey) + 16);
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

SearchResult dot_search(const TannerGraph& g, const std::vector<int>& seed_cycles,
                        const SearchOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    SearchResult out;
    Engine engine(g, nullptr, opts);
    std::vector<int> seeds(seed_cycles);
    std::sort(seeds.begin(), seeds.end());
    for (int k : seeds)
        if (k <= opts.a_max) engine.run_from_cycle(k);
    out.instances = std::move(engine.result);
    out.stats.instances_stored = engine.found.size();
    out.stats.approx_bytes = engine.found.size() * (sizeof(InstKey) + 16);
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace trapscan

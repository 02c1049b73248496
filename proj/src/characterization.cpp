#include "trapscan/characterization.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "trapscan/structure_gen.hpp"

namespace trapscan {

namespace detail {
// Pruning scan order for redundant recorded expansions (see prune()).
// 0: largest m first; 1: smallest source class first; 2: largest target first.
int prune_order_mode = 0;
}  // namespace detail


PrimeStructure::Kind prime_kind(const NormalGraph& s) {
    if (s.is_simple_cycle()) return PrimeStructure::Kind::SimpleCycle;
    if (s.has_hamiltonian_cycle()) return PrimeStructure::Kind::ChordedCycle;
    return PrimeStructure::Kind::NonCycle;
}

const ClassEntry* CharacterizationTable::find_class(ClassId id) const {
    auto it = classes.find(id);
    return it == classes.end() ? nullptr : &it->second;
}

std::vector<ExpansionSpec> CharacterizationTable::palo_expansions(ClassId id) const {
    std::vector<ExpansionSpec> out;
    if (const ClassEntry* entry = find_class(id)) {
        for (const ExpansionSpec& spec : entry->expansions)
            if (spec.kind != ExpansionSpec::Kind::Dot) out.push_back(spec);
    }
    return out;
}

size_t CharacterizationTable::class_total(ClassId id) const {
    const ClassEntry* entry = find_class(id);
    return entry ? entry->structures.size() : 0;
}

namespace {

struct SpecKey {
    CanonicalCode code;
    ExpansionSpec spec;
    bool operator==(const SpecKey&) const = default;
};

struct SpecKeyHash {
    size_t operator()(const SpecKey& k) const {
        size_t h = CanonicalCodeHash{}(k.code);
        h ^= size_t(k.spec.kind) * 0x9e3779b97f4a7c15ull + size_t(k.spec.m) * 1099511628211ull +
             size_t(k.spec.c);
        return h;
    }
};

// Expansion results are pure functions of (structure, spec); the replay and
// the pruning pass hit the same pairs over and over.
class ExpansionCache {
  public:
    ExpansionCache(int d_v, int girth) : d_v_(d_v), girth_(girth) {}

    const std::vector<NormalGraph>& get(const NormalGraph& s, const CanonicalCode& code,
                                        const ExpansionSpec& spec) {
        SpecKey key{code, spec};
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        std::vector<NormalGraph> out = apply_expansion(s, spec, d_v_, girth_);
        return cache_.emplace(std::move(key), std::move(out)).first->second;
    }

  private:
    int d_v_;
    int girth_;
    std::unordered_map<SpecKey, std::vector<NormalGraph>, SpecKeyHash> cache_;
};

struct Claimed {
    NormalGraph s;
    CanonicalCode code;
    ClassId cls;
};

// Replay of a finished table: cycles ascending, sizes ascending, dot applied
// everywhere plus the recorded path/lollipop specs per class, first cycle to
// reach a structure keeps it. This mirrors the instance-search sequencing
// exactly, so the per-prime structure counts equal what the search attributes
// per prime cycle on any graph.
struct Replay {
    int d_v, girth, a_max, b_cap;
    const std::vector<int>& cycles;
    const std::map<ClassId, std::set<ExpansionSpec>>& ex;
    ExpansionCache& cache;

    // results
    std::map<CanonicalCode, int> claim;                       // code -> cycle
    std::map<int, std::vector<Claimed>> by_cycle;             // cycle -> structures
    std::set<ClassId> dot_productive;                         // classes whose dot step claimed something

    void run() {
        for (int k : cycles) {
            NormalGraph seed = cycle_graph(k);
            CanonicalCode seed_code = canonical_form(seed);
            if (claim.count(seed_code)) continue;
            claim.emplace(seed_code, k);
            auto& mine = by_cycle[k];
            mine.push_back({canonicalize(seed), seed_code, class_of(seed, d_v)});
            // levels: mine[] grows only at strictly larger sizes, so a simple
            // index walk in size order is enough
            for (int a = k; a < a_max; ++a) {
                for (size_t i = 0; i < mine.size(); ++i) {
                    if (mine[i].cls.a != a) continue;
                    expand_one(k, mine[i]);
                }
            }
        }
    }

    void expand_one(int k, Claimed item) {
        auto take = [&](const std::vector<NormalGraph>& kids, bool via_dot) {
            for (const NormalGraph& kid : kids) {
                ClassId cls = class_of(kid, d_v);
                if (cls.b > b_cap) continue;
                CanonicalCode code = canonical_form(kid);
                if (!claim.emplace(code, k).second) continue;
                by_cycle[k].push_back({canonicalize(kid), code, cls});
                if (via_dot) dot_productive.insert(item.cls);
            }
        };
        take(cache.get(item.s, item.code, ExpansionSpec{ExpansionSpec::Kind::Dot, 0, 0}), true);
        auto it = ex.find(item.cls);
        if (it == ex.end()) return;
        for (const ExpansionSpec& spec : it->second) {
            if (spec.kind == ExpansionSpec::Kind::Dot) continue;
            if (item.cls.a + spec.m > a_max) continue;
            take(cache.get(item.s, item.code, spec), false);
        }
    }
};

struct DplRun {
    int d_v, girth, a_max, b_max;
    int bprime;
    std::vector<int> cycles;  // every seeded cycle, ascending
    std::vector<int> primes;  // cycles owning at least one in-range structure
    ExpansionCache cache;

    // run state: everything found, with the cycle it was first attributed to
    CodeSet found_set;
    std::map<int, std::map<ClassId, std::vector<NormalGraph>>> lk;  // cycle -> class -> structs
    std::map<ClassId, size_t> found_per_class;
    std::map<ClassId, std::set<ExpansionSpec>> ex_rec;

    // Bookkeeping behind the pruning rules: an expansion recorded while
    // extending the b ceiling survives only if its batch (with dot closure)
    // contributed something new inside the range; expansions recorded while
    // completing in-range classes are later re-tested for redundancy.
    struct EntryKey {
        ClassId cls;
        ExpansionSpec spec;
        auto operator<=>(const EntryKey&) const = default;
    };
    struct EntryFlags {
        bool from_sweep = false;
        bool from_extension = false;
        bool productive_in_range = false;
    };
    std::map<EntryKey, EntryFlags> entries;
    bool in_extension_round = false;

    DplRun(int dv, int g, int amax, int bmax)
        : d_v(dv), girth(g), a_max(amax), b_max(bmax), bprime(bmax), cache(dv, g) {}

    bool in_range(ClassId cls) const { return cls.a <= a_max && cls.b <= b_max; }

    bool complete(ClassId cls) const {
        auto it = found_per_class.find(cls);
        size_t have = it == found_per_class.end() ? 0 : it->second;
        return have >= class_count(cls.a, cls.b, d_v, girth);
    }

    // absorb seeds plus their capped dot closure; true if anything landed in range
    bool absorb(int k, const std::vector<NormalGraph>& seeds, int cap = -1) {
        if (seeds.empty()) return false;
        bool in_range_news = false;
        auto levels = dot_closure(seeds, found_set, a_max, d_v, girth, cap < 0 ? bprime : cap);
        for (auto& [size, graphs] : levels) {
            for (const NormalGraph& s : graphs) {
                CanonicalCode code = canonical_form(s);
                if (!found_set.insert(code).second) continue;
                ClassId cls = class_of(s, d_v);
                lk[k][cls].push_back(canonicalize(s));
                ++found_per_class[cls];
                if (in_range(cls)) in_range_news = true;
            }
        }
        return in_range_news;
    }

    // Re-expand everything under the current ceiling, sizes ascending and
    // cycles in seeding order. Catches children that were over the ceiling
    // when their parent was closed (d_v >= 5 dot steps raise b) and the
    // overflow children of ceiling-extension cycles.
    void refresh_dot() {
        for (int a = girth / 2; a < a_max; ++a) {
            // snapshot of (structure, cycle) pairs of this size
            std::vector<std::pair<int, NormalGraph>> level;
            for (const auto& [k, classes] : lk)
                for (const auto& [cls, graphs] : classes)
                    if (cls.a == a)
                        for (const NormalGraph& s : graphs) level.emplace_back(k, s);
            for (const auto& [k, s] : level) {
                for (const NormalGraph& kid :
                     cache.get(s, canonical_form(s), ExpansionSpec{ExpansionSpec::Kind::Dot, 0, 0})) {
                    ClassId cls = class_of(kid, d_v);
                    if (cls.b > bprime) continue;
                    CanonicalCode code = canonical_form(kid);
                    if (!found_set.insert(code).second) continue;
                    lk[k][cls].push_back(canonicalize(kid));
                    ++found_per_class[cls];
                }
            }
        }
    }

    void palo_fill(int a, int b) {
        for (int k : cycles) {
            PaloResult result = palo_expand_class(a, b, lk[k], found_set, d_v, girth);
            // absorb each spec's batch separately so productivity is
            // attributable to the entry that earned it
            for (const PaloContribution& part : result.contributions) {
                bool productive = absorb(k, part.structures);
                ex_rec[part.source].insert(part.spec);
                EntryFlags& flags = entries[EntryKey{part.source, part.spec}];
                if (in_extension_round) flags.from_extension = true;
                else flags.from_sweep = true;
                flags.productive_in_range |= productive;
            }
        }
    }

    // One pass over incomplete in-range classes, ascending; true if anything
    // new was found.
    bool sweep_in_range() {
        size_t before = found_set.size();
        for (int a = girth / 2; a <= a_max; ++a) {
            for (int b = 1; b <= b_max; ++b) {
                if (!class_possible(a, b, d_v, girth)) continue;
                if (complete(ClassId{a, b})) continue;
                palo_fill(a, b);
            }
        }
        return found_set.size() > before;
    }

    void run() {
        int k0 = std::max(girth / 2, 2);
        int K_init = b_max / (d_v - 2);
        for (int k = k0; k <= K_init; ++k) {
            cycles.push_back(k);
            absorb(k, {cycle_graph(k)});
        }
        // Alternate in-range completion sweeps with one-step extensions of
        // the b ceiling; a raised ceiling brings new parents (and possibly a
        // new prime cycle), after which the in-range sweep gets another go.
        while (true) {
            in_extension_round = false;
            while (sweep_in_range()) {
            }
            if (all_in_range_complete()) break;
            if (bprime >= a_max * (d_v - 2))
                throw std::logic_error("dpl_characterize: range extension did not converge");
            if (const char* dbg = getenv("TRAPSCAN_DEBUG_CHAR")) {
                (void)dbg;
                fprintf(stderr, "round b'=%d done; incomplete:", bprime);
                for (int a = girth / 2; a <= a_max; ++a)
                    for (int b = 0; b <= b_max; ++b)
                        if (class_possible(a, b, d_v, girth) && !complete(ClassId{a, b})) {
                            auto it = found_per_class.find(ClassId{a, b});
                            size_t have = it == found_per_class.end() ? 0 : it->second;
                            fprintf(stderr, " (%d,%d):%zu/%zu", a, b, have,
                                    class_count(a, b, d_v, girth));
                        }
                fprintf(stderr, "\n");
            }
            ++bprime;
            in_extension_round = true;
            if (d_v >= 5) refresh_dot();
            bool round_cycle = false;
            for (int a = girth / 2; a < a_max; ++a) {
                if (bprime == a * (d_v - 2) && a >= girth / 2 &&
                    std::find(cycles.begin(), cycles.end(), a) == cycles.end()) {
                    // the new cycle's own class sits above b_max; its closure
                    // is admitted only where it reaches back into the range,
                    // and the overflow rows are left to the expansion sweep
                    cycles.push_back(a);
                    absorb(a, {cycle_graph(a)}, b_max);
                    round_cycle = true;
                } else {
                    if (!class_possible(a, bprime, d_v, girth)) continue;
                    palo_fill(a, bprime);
                }
            }
            // overflow descendants the capped cycle add left out; whatever
            // the expansion rows did not re-derive is claimed here
            if (round_cycle || d_v >= 5) refresh_dot();
        }
    }

    bool all_in_range_complete() const {
        for (int a = girth / 2; a <= a_max; ++a)
            for (int b = 0; b <= b_max; ++b)
                if (class_possible(a, b, d_v, girth) && !complete(ClassId{a, b})) return false;
        return true;
    }

    bool replay_covers(const std::map<ClassId, std::set<ExpansionSpec>>& ex) {
        Replay replay{d_v, girth, a_max, bprime, primes, ex, cache};
        replay.run();
        std::map<ClassId, size_t> totals;
        for (const auto& [k, items] : replay.by_cycle)
            for (const Claimed& item : items) ++totals[item.cls];
        for (int a = girth / 2; a <= a_max; ++a) {
            for (int b = 0; b <= b_max; ++b) {
                size_t want = class_count(a, b, d_v, girth);
                if (want == 0) continue;
                auto it = totals.find(ClassId{a, b});
                if (it == totals.end() || it->second < want) return false;
            }
        }
        return true;
    }

    // Two-stage pruning. First, expansions recorded only while raising the b
    // ceiling are dropped when nothing in range ever came out of them (their
    // overflow products were dead ends). Second, expansions recorded while
    // completing in-range classes are dropped when the table stays
    // exhaustive without them (a later prime re-derives their products).
    void prune() {
        struct Candidate {
            ClassId cls;
            ExpansionSpec spec;
        };
        for (const auto& [key, flags] : entries) {
            if (flags.productive_in_range) continue;
            auto it = ex_rec.find(key.cls);
            if (it == ex_rec.end()) continue;
            it->second.erase(key.spec);
            if (it->second.empty()) ex_rec.erase(it);
            // a dead-end entry can still feed later chains; keep it then
            if (!replay_covers(ex_rec)) ex_rec[key.cls].insert(key.spec);
        }
        std::vector<Candidate> cands;
        for (const auto& [cls, specs] : ex_rec) {
            for (const ExpansionSpec& spec : specs) {
                auto flag_it = entries.find(EntryKey{cls, spec});
                if (flag_it != entries.end() && flag_it->second.from_extension) continue;
                cands.push_back({cls, spec});
            }
        }
        int mode = detail::prune_order_mode;
        std::sort(cands.begin(), cands.end(), [mode](const Candidate& x, const Candidate& y) {
            bool xl = x.spec.kind == ExpansionSpec::Kind::Lollipop;
            bool yl = y.spec.kind == ExpansionSpec::Kind::Lollipop;
            if (mode == 0) {  // largest m first, lollipops before paths
                if (x.spec.m != y.spec.m) return x.spec.m > y.spec.m;
                if (xl != yl) return xl;
                if (x.spec.c != y.spec.c) return x.spec.c > y.spec.c;
                if (x.cls.a != y.cls.a) return x.cls.a > y.cls.a;
                return x.cls.b > y.cls.b;
            }
            if (mode == 1) {  // smallest source class first, then smallest m
                if (x.cls.a != y.cls.a) return x.cls.a < y.cls.a;
                if (x.cls.b != y.cls.b) return x.cls.b < y.cls.b;
                if (x.spec.m != y.spec.m) return x.spec.m < y.spec.m;
                if (xl != yl) return yl;
                return x.spec.c < y.spec.c;
            }
            // mode 2: largest target class (a + m) first
            int xt = x.cls.a + x.spec.m, yt = y.cls.a + y.spec.m;
            if (xt != yt) return xt > yt;
            if (x.spec.m != y.spec.m) return x.spec.m > y.spec.m;
            if (xl != yl) return xl;
            if (x.spec.c != y.spec.c) return x.spec.c > y.spec.c;
            return x.cls.b > y.cls.b;
        });
        for (const Candidate& cand : cands) {
            auto it = ex_rec.find(cand.cls);
            if (it == ex_rec.end()) continue;
            it->second.erase(cand.spec);
            if (it->second.empty()) ex_rec.erase(it);
            if (!replay_covers(ex_rec)) ex_rec[cand.cls].insert(cand.spec);  // load-bearing
        }
    }

    CharacterizationTable finish() {
        // A seeded cycle is a prime of the table when the run attributed at
        // least one in-range structure to it; a ceiling-extension cycle whose
        // contributions all stayed above b_max is left out.
        for (int k : cycles) {
            bool claims_in_range = false;
            auto it = lk.find(k);
            if (it != lk.end()) {
                for (const auto& [cls, graphs] : it->second)
                    if (!graphs.empty() && in_range(cls)) {
                        claims_in_range = true;
                        break;
                    }
            }
            if (claims_in_range) primes.push_back(k);
        }
        prune();

        Replay final_replay{d_v, girth, a_max, bprime, primes, ex_rec, cache};
        final_replay.run();

        CharacterizationTable table;
        table.d_v = d_v;
        table.girth = girth;
        table.a_max = a_max;
        table.b_max = b_max;
        table.bprime_max = bprime;
        table.cycle_primes = primes;
        table.K = primes.empty() ? 0 : primes.back();

        for (int a = girth / 2; a <= a_max; ++a) {
            for (int b = 0; b <= bprime; ++b) {
                ClassId id{a, b};
                ClassEntry entry;
                entry.id = id;
                entry.impossible = !class_possible(a, b, d_v, girth) ||
                                   (b <= b_max && class_count(a, b, d_v, girth) == 0);
                table.classes[id] = std::move(entry);
            }
        }
        for (const auto& [k, items] : final_replay.by_cycle) {
            for (const Claimed& item : items) {
                ClassEntry& entry = table.classes[item.cls];
                entry.id = item.cls;
                entry.structures.push_back(item.s);
                ++entry.prime_counts[k];
            }
        }
        for (auto& [id, entry] : table.classes) {
            std::sort(entry.structures.begin(), entry.structures.end(),
                      [](const NormalGraph& x, const NormalGraph& y) {
                          return canonical_form(x) < canonical_form(y);
                      });
            if (id.a < a_max && final_replay.dot_productive.count(id))
                entry.expansions.push_back(ExpansionSpec{ExpansionSpec::Kind::Dot, 0, 0});
            auto it = ex_rec.find(id);
            if (it != ex_rec.end())
                entry.expansions.insert(entry.expansions.end(), it->second.begin(), it->second.end());
        }

        // exit check: the replayed table must cover the requested range
        for (int a = girth / 2; a <= a_max; ++a) {
            for (int b = 0; b <= b_max; ++b) {
                size_t want = class_count(a, b, d_v, girth);
                if (table.class_total(ClassId{a, b}) != want)
                    throw std::logic_error("dpl_characterize: final table is not exhaustive");
            }
        }
        return table;
    }
};

}  // namespace

PaloResult palo_expand_class(int a, int b,
                             const std::map<ClassId, std::vector<NormalGraph>>& lk_by_class,
                             const CodeSet& found, int d_v, int girth) {
    PaloResult result;
    CodeSet collected;
    for (int a_src = a - 2; a_src >= girth / 2; --a_src) {
        int m = a - a_src;
        int b_src = b + 2 - m * (d_v - 2);
        if (b_src < 0) continue;
        auto it = lk_by_class.find(ClassId{a_src, b_src});
        if (it == lk_by_class.end() || it->second.empty()) continue;
        const std::vector<NormalGraph>& parents = it->second;

        auto consider = [&](const std::vector<std::pair<CanonicalCode, NormalGraph>>& batch,
                            const ExpansionSpec& spec) {
            PaloContribution contribution{ClassId{a_src, b_src}, spec, {}};
            for (const auto& [code, s] : batch) {
                if (found.count(code)) continue;
                if (collected.insert(code).second) {
                    result.structures.push_back(s);
                    contribution.structures.push_back(s);
                }
            }
            if (!contribution.structures.empty()) {
                result.recorded_ex[contribution.source].insert(spec);
                result.contributions.push_back(std::move(contribution));
            }
        };

        std::vector<std::pair<CanonicalCode, NormalGraph>> batch;
        for (const NormalGraph& parent : parents)
            for (const NormalGraph& out : path_expand(parent, m, d_v, girth))
                batch.emplace_back(canonical_form(out), out);
        consider(batch, ExpansionSpec{ExpansionSpec::Kind::Path, m, 0});

        for (int c = (girth >= 8 ? 4 : 3); c <= m; ++c) {
            batch.clear();
            for (const NormalGraph& parent : parents)
                for (const NormalGraph& out : lollipop_expand(parent, m, c, d_v, girth))
                    batch.emplace_back(canonical_form(out), out);
            consider(batch, ExpansionSpec{ExpansionSpec::Kind::Lollipop, m, c});
        }
    }
    return result;
}

CharacterizationTable dpl_characterize(int d_v, int girth, int a_max, int b_max) {
    if (d_v < 3) throw std::invalid_argument("dpl_characterize: d_v >= 3 required");
    if (girth != 6 && girth != 8)
        throw std::invalid_argument("dpl_characterize: girth must be 6 or 8");
    if (a_max < girth / 2) throw std::invalid_argument("dpl_characterize: a_max < girth/2");
    if (a_max > kMaxStructNodes) throw std::invalid_argument("dpl_characterize: a_max too large");
    if (b_max < 1) throw std::invalid_argument("dpl_characterize: b_max >= 1 required");
    DplRun run(d_v, girth, a_max, b_max);
    run.run();
    return run.finish();
}

DotResult dot_characterize(int d_v, int girth, int a_max, int in_range_b) {
    if (d_v < 3) throw std::invalid_argument("dot_characterize: d_v >= 3 required");
    if (a_max < girth / 2 || a_max > kMaxStructNodes)
        throw std::invalid_argument("dot_characterize: bad a_max");
    DotResult result;
    result.d_v = d_v;
    result.girth = girth;
    result.a_max = a_max;

    // Classes whose dot descendants can never get back below the range
    // ceiling are skipped; each dot step lowers b by at most d_v.
    auto skipped = [&](int a, int b) {
        if (in_range_b < 0) return false;
        return b - d_v * (a_max - a) > in_range_b;
    };

    CodeSet found;
    for (int k = girth / 2; k <= a_max; ++k) {
        std::vector<PrimeStructure> new_primes;
        for (int b = k * (d_v - 2) % 2 == 0 ? 0 : 1; b <= k * (d_v - 2); b += 2) {
            if (!class_possible(k, b, d_v, girth) || skipped(k, b)) continue;
            for (const NormalGraph& s : generate_class(k, b, d_v, girth).structures) {
                if (found.count(canonical_form(s))) continue;
                PrimeStructure p;
                p.structure = s;
                p.kind = prime_kind(s);
                p.size = k;
                p.cls = ClassId{k, b};
                new_primes.push_back(std::move(p));
            }
        }
        std::sort(new_primes.begin(), new_primes.end(),
                  [](const PrimeStructure& x, const PrimeStructure& y) {
                      if (x.kind != y.kind) return x.kind < y.kind;
                      if (x.cls != y.cls) return x.cls < y.cls;
                      return canonical_form(x.structure) < canonical_form(y.structure);
                  });
        for (PrimeStructure& prime : new_primes) {
            DotPrime entry;
            entry.prime = prime;
            // dot closure with the range prune applied at every level
            std::vector<NormalGraph> frontier{prime.structure};
            found.insert(canonical_form(prime.structure));
            entry.reached.push_back(canonicalize(prime.structure));
            ++result.class_totals[prime.cls];
            while (!frontier.empty()) {
                std::vector<NormalGraph> next;
                for (const NormalGraph& s : frontier) {
                    if (s.n >= a_max) continue;
                    for (const NormalGraph& kid : dot_expand(s, d_v, girth)) {
                        ClassId cls = class_of(kid, d_v);
                        if (skipped(cls.a, cls.b)) continue;
                        if (!found.insert(canonical_form(kid)).second) continue;
                        entry.reached.push_back(canonicalize(kid));
                        ++result.class_totals[cls];
                        next.push_back(kid);
                    }
                }
                frontier = std::move(next);
            }
            result.primes.push_back(std::move(entry));
        }
    }
    // mark primes that reach the requested range
    int range_b = in_range_b;
    for (DotPrime& prime : result.primes) {
        for (const NormalGraph& s : prime.reached) {
            ClassId cls = class_of(s, d_v);
            if (range_b < 0 || cls.b <= range_b) {
                prime.needed = true;
                break;
            }
        }
    }
    return result;
}

int dot_bprime_max(const DotResult& dot, int b_max) {
    int best = 0;
    for (const DotPrime& prime : dot.primes) {
        bool needed = false;
        for (const NormalGraph& s : prime.reached)
            if (class_of(s, dot.d_v).b <= b_max) {
                needed = true;
                break;
            }
        if (needed) best = std::max(best, prime.prime.cls.b);
    }
    return best;
}

std::vector<int> dot_needed_cycles(const DotResult& dot, int b_max) {
    std::vector<int> out;
    for (const DotPrime& prime : dot.primes) {
        if (prime.prime.kind != PrimeStructure::Kind::SimpleCycle) continue;
        bool needed = false;
        for (const NormalGraph& s : prime.reached)
            if (class_of(s, dot.d_v).b <= b_max) {
                needed = true;
                break;
            }
        if (needed) out.push_back(prime.prime.size);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string save_table(const CharacterizationTable& table) {
    nlohmann::json j;
    j["dv"] = table.d_v;
    j["girth"] = table.girth;
    j["a_max"] = table.a_max;
    j["b_max"] = table.b_max;
    j["bprime_max"] = table.bprime_max;
    j["K"] = table.K;
    j["cycle_primes"] = table.cycle_primes;
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& [id, entry] : table.classes) {
        nlohmann::json c;
        c["a"] = id.a;
        c["b"] = id.b;
        c["impossible"] = entry.impossible;
        nlohmann::json ex = nlohmann::json::array();
        for (const ExpansionSpec& spec : entry.expansions) ex.push_back(to_string(spec));
        c["expansions"] = ex;
        nlohmann::json primes = nlohmann::json::object();
        for (const auto& [k, count] : entry.prime_counts) primes[std::to_string(k)] = count;
        c["primes"] = primes;
        nlohmann::json structures = nlohmann::json::array();
        for (const NormalGraph& s : entry.structures) structures.push_back(to_graph6(s));
        c["structures"] = structures;
        classes.push_back(c);
    }
    j["classes"] = classes;
    return j.dump(1);
}

CharacterizationTable load_table(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    CharacterizationTable table;
    table.d_v = j.at("dv").get<int>();
    table.girth = j.at("girth").get<int>();
    table.a_max = j.at("a_max").get<int>();
    table.b_max = j.at("b_max").get<int>();
    table.bprime_max = j.at("bprime_max").get<int>();
    table.K = j.at("K").get<int>();
    table.cycle_primes = j.at("cycle_primes").get<std::vector<int>>();
    for (const auto& c : j.at("classes")) {
        ClassEntry entry;
        entry.id = ClassId{c.at("a").get<int>(), c.at("b").get<int>()};
        entry.impossible = c.at("impossible").get<bool>();
        for (const auto& text : c.at("expansions"))
            entry.expansions.push_back(parse_expansion(text.get<std::string>()));
        for (auto it = c.at("primes").begin(); it != c.at("primes").end(); ++it)
            entry.prime_counts[std::stoi(it.key())] = it.value().get<size_t>();
        for (const auto& text : c.at("structures"))
            entry.structures.push_back(from_graph6(text.get<std::string>()));
        table.classes[entry.id] = std::move(entry);
    }
    return table;
}

CharacterizationTable load_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_table(buffer.str());
}

void save_table_file(const CharacterizationTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write table file: " + path);
    out << save_table(table) << "\n";
}

}  // namespace trapscan

// Characterization of LETS structure space: the dot-based sweep with prime
// detection, and the dot/path/lollipop table builder whose output drives the
// instance search.
#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "trapscan/expansion.hpp"
#include "trapscan/normal_graph.hpp"

namespace trapscan {

namespace detail {
extern int prune_order_mode;  // expansion-prune scan order; default 0
}


struct PrimeStructure {
    enum class Kind { SimpleCycle, ChordedCycle, NonCycle };
    NormalGraph structure;
    Kind kind = Kind::SimpleCycle;
    int size = 0;
    ClassId cls;
};

PrimeStructure::Kind prime_kind(const NormalGraph& s);

struct ClassEntry {
    ClassId id;
    bool impossible = false;
    std::vector<ExpansionSpec> expansions;  // includes "dot" when productive
    std::map<int, size_t> prime_counts;     // cycle length -> structures first reached from it
    std::vector<NormalGraph> structures;    // canonical representatives, sorted by code
};

struct CharacterizationTable {
    int d_v = 0;
    int girth = 0;
    int a_max = 0;
    int b_max = 0;
    int bprime_max = 0;
    int K = 0;                      // largest prime simple-cycle length
    std::vector<int> cycle_primes;  // ascending
    std::map<ClassId, ClassEntry> classes;

    const ClassEntry* find_class(ClassId id) const;
    // path/lollipop specs attached to a class (search applies dot everywhere)
    std::vector<ExpansionSpec> palo_expansions(ClassId id) const;
    size_t class_total(ClassId id) const;
};

// Algorithm: seed the simple cycles of the range, close them under dot,
// complete classes with path/lollipop expansions, raising the working b
// ceiling one step at a time until every class with a <= a_max, b <= b_max
// is exhausted; then prune redundant expansions and recompute the per-prime
// attribution by replaying the finished table.
CharacterizationTable dpl_characterize(int d_v, int girth, int a_max, int b_max);

// Routine-6 building block, exposed for direct use: try to generate new
// structures of the (a, b) class by path/lollipop expansion of structures
// already attributed to one prime cycle.
struct PaloContribution {
    ClassId source;
    ExpansionSpec spec;
    std::vector<NormalGraph> structures;  // what this spec newly contributed
};

struct PaloResult {
    std::vector<NormalGraph> structures;                     // new w.r.t. `found`
    std::map<ClassId, std::set<ExpansionSpec>> recorded_ex;  // keyed by parent class
    std::vector<PaloContribution> contributions;             // recording order
};
PaloResult palo_expand_class(int a, int b,
                             const std::map<ClassId, std::vector<NormalGraph>>& lk_by_class,
                             const CodeSet& found, int d_v, int girth);

// Dot-based characterization (prime detection against generate_class plus
// recursive dot closure). When in_range_b >= 0, classes that provably cannot
// reach any (a <= a_max, b <= in_range_b) class through dot steps are skipped;
// this only removes primes that could never matter for that range.
struct DotPrime {
    PrimeStructure prime;
    std::vector<NormalGraph> reached;  // closure attributed to this prime (itself included)
    bool needed = false;               // reaches the requested range
};

struct DotResult {
    int d_v = 0;
    int girth = 0;
    int a_max = 0;
    std::vector<DotPrime> primes;             // seeding order
    std::map<ClassId, size_t> class_totals;   // structures found per class
};
DotResult dot_characterize(int d_v, int girth, int a_max, int in_range_b = -1);

// Largest unsatisfied-check count among primes needed to cover
// (a <= a_max, b <= b_max) with dot expansion alone.
int dot_bprime_max(const DotResult& dot, int b_max);
// Cycle lengths among the needed primes (ascending, deduplicated).
std::vector<int> dot_needed_cycles(const DotResult& dot, int b_max);

// JSON (de)serialization; schema documented in README.
std::string save_table(const CharacterizationTable& table);
CharacterizationTable load_table(const std::string& json_text);
CharacterizationTable load_table_file(const std::string& path);
void save_table_file(const CharacterizationTable& table, const std::string& path);

}  // namespace trapscan

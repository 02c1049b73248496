// EAS/FEAS classification of found LETS instances and per-class, per-prime
// report aggregation.
#pragma once

#include <map>
#include <string>

#include "trapscan/instance_search.hpp"

namespace trapscan {

struct ClassificationRecord {
    bool is_eas = false;
    bool is_feas = false;
};

// EAS: every variable of the set sees strictly more satisfied than
// unsatisfied checks. FEAS: additionally every outside variable sees strictly
// more checks outside the unsatisfied set than inside it.
ClassificationRecord classify(const TannerGraph& g, const LetsInstance& instance);

struct ReportRow {
    ClassId cls;
    size_t lets = 0, eas = 0, feas = 0;
    // per prime-cycle length: lets/eas/feas found from that cycle
    std::map<int, std::array<size_t, 3>> per_prime;
};

struct SearchReport {
    std::string code_name;
    int n = 0, m_checks = 0, d_v = 0, girth = 0;
    int a_max = 0, b_max = 0;
    std::vector<int> cycle_primes;
    std::vector<ReportRow> rows;  // sorted by (a, b)
    SearchStats stats;
    int threads = 1;
};

SearchReport aggregate(const TannerGraph& g, const std::vector<LetsInstance>& instances,
                       const std::string& code_name, int a_max, int b_max,
                       const std::vector<int>& cycle_primes, int threads);

// header a,b,prime_cycle,lets,eas,feas; prime_cycle 0 aggregates a class;
// one trailing TOTAL row. Byte-stable across reruns and worker counts.
std::string report_to_csv(const SearchReport& report);
std::string report_to_json(const SearchReport& report);  // includes timing stats

}  // namespace trapscan

#include "trapscan/classification.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace trapscan {

ClassificationRecord classify(const TannerGraph& g, const LetsInstance& instance) {
    ClassificationRecord record;
    InducedProfile profile = induced_profile(
        g, std::vector<int>(instance.vars.begin(), instance.vars.end()));

    record.is_eas = true;
    for (uint16_t v : instance.vars) {
        int sat = 0, unsat = 0;
        for (int c : g.var_checks(v)) {
            if (std::binary_search(profile.gamma_o.begin(), profile.gamma_o.end(), c)) ++unsat;
            else ++sat;
        }
        if (sat <= unsat) {
            record.is_eas = false;
            break;
        }
    }
    if (!record.is_eas) return record;

    // outside scan: a variable adjacent to more unsatisfied checks than
    // other checks breaks the fully-absorbing property; only variables
    // touching gamma_o can do so
    record.is_feas = true;
    int threshold = g.d_v();  // need strictly more outside: t < d_v - t
    for (int c : profile.gamma_o) {
        for (int v : g.check_vars(c)) {
            if (std::binary_search(instance.vars.begin(), instance.vars.end(), uint16_t(v))) continue;
            int t = 0;
            for (int cv : g.var_checks(v))
                if (std::binary_search(profile.gamma_o.begin(), profile.gamma_o.end(), cv)) ++t;
            if (2 * t >= threshold) {
                record.is_feas = false;
                return record;
            }
        }
    }
    return record;
}

SearchReport aggregate(const TannerGraph& g, const std::vector<LetsInstance>& instances,
                       const std::string& code_name, int a_max, int b_max,
                       const std::vector<int>& cycle_primes, int threads) {
    SearchReport report;
    report.code_name = code_name;
    report.n = g.n();
    report.m_checks = g.m_checks();
    report.d_v = g.d_v();
    report.girth = g.girth();
    report.a_max = a_max;
    report.b_max = b_max;
    report.cycle_primes = cycle_primes;
    report.threads = threads;

    std::vector<ClassificationRecord> records(instances.size());
    int workers = std::max(1, threads);
    if (workers == 1 || instances.size() < 1024) {
        for (size_t i = 0; i < instances.size(); ++i) records[i] = classify(g, instances[i]);
    } else {
        size_t chunk = (instances.size() + size_t(workers) - 1) / size_t(workers);
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) {
            pool.emplace_back([&, t] {
                size_t lo = size_t(t) * chunk, hi = std::min(instances.size(), lo + chunk);
                for (size_t i = lo; i < hi; ++i) records[i] = classify(g, instances[i]);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::map<ClassId, ReportRow> rows;
    for (size_t i = 0; i < instances.size(); ++i) {
        const LetsInstance& inst = instances[i];
        ReportRow& row = rows[inst.cls];
        row.cls = inst.cls;
        auto& per = row.per_prime[inst.origin];
        ++row.lets;
        ++per[0];
        if (records[i].is_eas) {
            ++row.eas;
            ++per[1];
        }
        if (records[i].is_feas) {
            ++row.feas;
            ++per[2];
        }
    }
    report.rows.reserve(rows.size());
    for (auto& [cls, row] : rows) report.rows.push_back(std::move(row));
    return report;
}

std::string report_to_csv(const SearchReport& report) {
    std::ostringstream out;
    out << "a,b,prime_cycle,lets,eas,feas\n";
    size_t lets = 0, eas = 0, feas = 0;
    for (const ReportRow& row : report.rows) {
        out << row.cls.a << "," << row.cls.b << ",0," << row.lets << "," << row.eas << ","
            << row.feas << "\n";
        for (const auto& [k, counts] : row.per_prime)
            out << row.cls.a << "," << row.cls.b << "," << k << "," << counts[0] << "," << counts[1]
                << "," << counts[2] << "\n";
        lets += row.lets;
        eas += row.eas;
        feas += row.feas;
    }
    out << "TOTAL,0,0," << lets << "," << eas << "," << feas << "\n";
    return out.str();
}

std::string report_to_json(const SearchReport& report) {
    nlohmann::json j;
    j["code"] = report.code_name;
    j["n"] = report.n;
    j["m_checks"] = report.m_checks;
    j["dv"] = report.d_v;
    j["girth"] = report.girth == kGirthInfinite ? -1 : report.girth;
    j["a_max"] = report.a_max;
    j["b_max"] = report.b_max;
    j["cycle_primes"] = report.cycle_primes;
    j["threads"] = report.threads;
    j["seconds"] = report.stats.seconds;
    j["instances_stored"] = report.stats.instances_stored;
    j["approx_bytes"] = report.stats.approx_bytes;
    nlohmann::json rows = nlohmann::json::array();
    for (const ReportRow& row : report.rows) {
        nlohmann::json r;
        r["a"] = row.cls.a;
        r["b"] = row.cls.b;
        r["lets"] = row.lets;
        r["eas"] = row.eas;
        r["feas"] = row.feas;
        nlohmann::json primes = nlohmann::json::object();
        for (const auto& [k, counts] : row.per_prime) {
            primes[std::to_string(k)] = {counts[0], counts[1], counts[2]};
        }
        r["primes"] = primes;
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j.dump(1);
}

}  // namespace trapscan

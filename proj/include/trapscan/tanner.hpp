// Tanner graph model: alist parsing, quasi-cyclic and array-code builders,
// girth, and induced-subgraph profiles of variable-node sets.
#pragma once

#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "trapscan/normal_graph.hpp"

namespace trapscan {

constexpr int kGirthInfinite = std::numeric_limits<int>::max();

class TannerGraph {
  public:
    TannerGraph() = default;
    // adjacency given as check lists per variable; degrees must all equal d_v
    TannerGraph(int n, int m_checks, std::vector<std::vector<int>> var_adj);

    int n() const { return n_; }
    int m_checks() const { return m_checks_; }
    int d_v() const { return d_v_; }
    int max_check_degree() const;

    const std::vector<int>& var_checks(int v) const { return var_adj_[size_t(v)]; }
    const std::vector<int>& check_vars(int c) const { return chk_adj_[size_t(c)]; }

    // length of the shortest cycle (even), kGirthInfinite if acyclic; cached
    int girth() const;

  private:
    int n_ = 0;
    int m_checks_ = 0;
    int d_v_ = 0;
    std::vector<std::vector<int>> var_adj_;
    std::vector<std::vector<int>> chk_adj_;
    mutable int girth_cache_ = -1;
};

struct AlistError : std::runtime_error {
    int line;
    AlistError(int line_no, const std::string& what)
        : std::runtime_error("alist line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

TannerGraph parse_alist(std::istream& in);
TannerGraph parse_alist_file(const std::string& path);
void write_alist(const TannerGraph& g, std::ostream& out);

// Array LDPC code: gamma x p grid of p x p circulant blocks sigma^(i*j).
// n = p^2, m = gamma*p, d_v = gamma, girth 6.
TannerGraph build_array_code(int p, int gamma);

// Quasi-cyclic code from an exponent matrix; entries < 0 give all-zero blocks.
TannerGraph build_qc_code(int block, const std::vector<std::vector<int>>& exponents);

// The (155, 64) girth-8 QC code with d_v = 3, d_c = 5, block 31.
TannerGraph build_tanner_155();

struct InducedProfile {
    int a = 0;
    int b = 0;
    std::vector<int> gamma_o;  // odd-degree (unsatisfied) checks, ascending
    std::vector<int> gamma_e;  // even-degree (satisfied) checks, ascending
    bool is_elementary = false;
    bool is_connected = false;
    bool is_leafless = false;
};

InducedProfile induced_profile(const TannerGraph& g, const std::vector<int>& vars);

// Variable set with an elementary induced subgraph -> its normal graph.
// Node i corresponds to the i-th variable of the sorted set.
NormalGraph normal_from_induced(const TannerGraph& g, const std::vector<int>& vars);

}  // namespace trapscan

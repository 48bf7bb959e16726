#include "gspline/minimality.hpp"

#include <algorithm>
#include <vector>

#include "gspline/basis.hpp"
#include "gspline/collapse.hpp"
#include "gspline/errors.hpp"

namespace gspline {

namespace {

// Proper positive divisors of n (excluding n itself), ascending. Every
// trial division counts against `bound`.
std::vector<Int> proper_divisors(const Int& n, const Int& bound) {
    std::vector<Int> low, high;
    Int steps = 0;
    for (Int t = 1; t * t <= n; ++t) {
        if (++steps > bound) throw SearchBoundExceeded("divisor scan exceeded the search bound");
        if (n % t != 0) continue;
        low.push_back(t);
        Int other = n / t;
        if (other != t && other != n) high.push_back(other);
    }
    std::reverse(high.begin(), high.end());
    low.insert(low.end(), high.begin(), high.end());
    if (!low.empty() && low.back() == n) low.pop_back();
    return low;
}

// True when some valid spline on g has exactly `zeros` leading zeros and
// leading term f. The candidate must satisfy every star congruence of
// v_{zeros+1} in its collapse level (all lower labels are zero there);
// from that seed the extension lifts level by level.
bool leading_value_achievable(const WeightedGraph& g, const CollapseSequence& seq, int zeros,
                              const Int& f) {
    int n = g.vertex_count();
    Spline cur;
    cur.entries.assign(static_cast<std::size_t>(zeros), 0);
    cur.entries.push_back(f);
    if (!verify(seq.level(zeros + 1), cur).valid()) return false;
    while (static_cast<int>(cur.entries.size()) < n) cur = extend_spline(seq, cur);
    if (!verify(g, cur).valid()) throw std::logic_error("extension produced an invalid spline");
    return true;
}

}  // namespace

bool is_minimal_in_class(const WeightedGraph& g, const Spline& s, const Int& search_bound) {
    VerifyReport report = verify(g, s);
    if (!report.valid()) throw DomainError("spline does not verify on the graph");
    Int lead = leading_term(s);  // throws ZeroSpline on the zero spline
    if (lead < 0) return false;

    int zeros = flow_up_index(s);
    CollapseSequence seq = complete_collapse(g);
    for (const Int& f : proper_divisors(lead, search_bound)) {
        if (leading_value_achievable(g, seq, zeros, f)) return false;
    }
    return true;
}

}  // namespace gspline

#include "gspline/spline.hpp"

#include "gspline/errors.hpp"

namespace gspline {

bool Spline::is_zero() const {
    for (const Int& e : entries) {
        if (e != 0) return false;
    }
    return true;
}

VerifyReport verify(const WeightedGraph& g, const Spline& s) {
    if (s.entries.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw LengthMismatch(s.entries.size(), g.vertex_count());
    }
    VerifyReport report;
    for (const Edge& e : g.edges()) {
        Int diff = s.entries[e.u - 1] - s.entries[e.v - 1];
        if (diff % e.w != 0) {
            report.violations.push_back({e.id, e.u, e.v, e.w, diff});
        }
    }
    return report;
}

int flow_up_index(const Spline& s) {
    int i = 0;
    for (const Int& e : s.entries) {
        if (e != 0) break;
        ++i;
    }
    return i;
}

Int leading_term(const Spline& s) {
    for (const Int& e : s.entries) {
        if (e != 0) return e;
    }
    throw ZeroSpline();
}

}  // namespace gspline

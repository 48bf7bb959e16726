#pragma once

#include "gspline/collapse.hpp"
#include "gspline/spline.hpp"

#include <vector>

namespace gspline {

// Generator of the kernel K_i of the projection S_{G_i} -> S_{G_{i-1}}: the
// value 1 at level 1, otherwise the lcm of v_i's star weights in G_i. The
// spline (0,...,0,value) on G_i generates K_i.
struct KernelGenerator {
    int level;
    Int value;

    bool operator==(const KernelGenerator&) const = default;
};

// Flow-up basis M_1..M_n of S_G: M_i has i-1 leading zeros and leading term
// generators[i-1].value.
struct FlowUpBasis {
    std::vector<Spline> elements;
    std::vector<KernelGenerator> generators;

    int rank() const { return static_cast<int>(elements.size()); }
    const Int& leading(int i) const { return generators[i - 1].value; }
};

// One generator per level, read off the collapse sequence's star weights.
std::vector<KernelGenerator> kernel_generators(const CollapseSequence& seq);

// Lifts a spline on G_r one stage up the chain: appends a value for the
// restored vertex v_{r+1} solving x ≡ g_j (mod a_j) over its star in G_{r+1},
// taking the least non-negative representative. The input must verify on G_r;
// an incompatible system then cannot occur and raises std::logic_error.
Spline extend_spline(const CollapseSequence& seq, const Spline& partial);

// Runs a complete collapse, seeds (0,...,0,m_i) at level i, and lifts each
// seed stage by stage back to G. M_1 is the all-ones spline. Levels are
// independent after the collapse trace, so they may be lifted on `threads`
// workers; the output is identical regardless.
FlowUpBasis build_basis(const WeightedGraph& g, unsigned threads = 1);

// Coefficients α with s = Σ α_i M_i, by forward substitution down the flow-up
// triangle. Division must be exact at every step; NotInSpan otherwise (which
// for a verified spline means a broken basis).
std::vector<Int> decompose(const FlowUpBasis& basis, const Spline& s);

}  // namespace gspline

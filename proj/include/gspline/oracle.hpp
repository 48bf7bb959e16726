#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gspline/basis.hpp"
#include "gspline/graph.hpp"
#include "gspline/numtheory.hpp"
#include "gspline/spline.hpp"

namespace gspline {

// The finite shadow of the spline module: every spline with entries reduced
// into [0, modulus), where modulus is the lcm of all edge weights. Reducing
// mod the lcm preserves every defining congruence, so membership here is
// ground truth for small instances.
struct ResidueBox {
    Int modulus;
    std::vector<Spline> splines;  // lexicographically sorted, entries in [0, modulus)

    bool contains(const Spline& s) const;
};

// Enumerates the full residue box by depth-first search over vertex values:
// each new vertex value is a CRT solve against its already-fixed lower
// neighbors, so incompatible prefixes are pruned immediately. Throws
// CapExceeded when the box would exceed `cap` splines (the box always holds
// at least `modulus` splines, the constants) or when the search visits more
// than an internal work limit of nodes.
ResidueBox enumerate_splines(const WeightedGraph& g, std::size_t cap);

// Verdict of a basis-against-box certification. On failure `counterexample`
// holds the offending spline and `reason` says which direction broke.
struct SpanCheck {
    bool ok = true;
    std::optional<Spline> counterexample;
    std::string reason;
};

// Certifies that the basis and the box describe the same module: every basis
// element reduces into the box, and every box spline decomposes over the
// basis with integer coefficients.
SpanCheck check_basis_spans(const WeightedGraph& g, const FlowUpBasis& basis,
                            const ResidueBox& box);

// Brute-force CRT: linear scan of [0, lcm of moduli) for a value satisfying
// every congruence. Returns nullopt when the system is incompatible. Throws
// ScanTooLarge when the lcm exceeds 10^6; under that bound the scan runs on
// machine words.
std::optional<CrtSolution> crt_scan(const std::vector<Congruence>& congruences);

}  // namespace gspline

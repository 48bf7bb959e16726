#pragma once

#include "gspline/graph.hpp"
#include "gspline/numtheory.hpp"
#include "gspline/spline.hpp"

namespace gspline {

// Brute-force minimality test for a flow-up class: s is minimal iff its
// leading term is positive and no valid spline with the same number of
// leading zeros has a smaller positive leading term. Candidate leading
// values are the proper divisors of |L(s)| (achievable leading values form
// an ideal of Z, so the minimum divides every other); each candidate is
// checked against the star congruences of the collapse sequence and, when
// compatible, extended to a full spline as a witness.
//
// `search_bound` caps the trial divisions performed while factoring L(s);
// exceeding it throws SearchBoundExceeded. Requires s to verify on g and
// be non-zero.
bool is_minimal_in_class(const WeightedGraph& g, const Spline& s, const Int& search_bound);

}  // namespace gspline

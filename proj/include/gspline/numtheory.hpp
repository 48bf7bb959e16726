#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace gspline {

// All arithmetic runs on unbounded integers; lcm values outgrow machine words
// quickly even on small graphs.
using Int = boost::multiprecision::cpp_int;

// Least non-negative representative of a mod m (m >= 1).
Int pos_mod(const Int& a, const Int& m);

// gcd of all values; the empty aggregate is 0, the identity of the gcd lattice.
// Flattens: gcd(a, gcd(b, c)) = gcd(a, b, c).
Int gcd_all(const std::vector<Int>& values);

// lcm of all values; the empty aggregate is 1. Throws DomainError if any value
// is zero.
Int lcm_all(const std::vector<Int>& values);

// lcm over groups of the gcd within each group. Satisfies the lattice identity
// lcm(gcd(a,c), gcd(b,c)) = gcd(lcm(a,b), c).
Int lcm_of_gcds(const std::vector<std::vector<Int>>& groups);

// Bezout coefficients: g = gcd(a, b) >= 0 with a*x + b*y = g.
struct ExtGcd {
    Int g, x, y;
};
ExtGcd ext_gcd(Int a, Int b);

// x ≡ residue (mod modulus); the residue is canonicalized into [0, modulus).
struct Congruence {
    Int residue;
    Int modulus;
    Congruence(Int r, Int m);
};

struct CrtSolution {
    Int residue;  // least non-negative representative
    Int modulus;  // lcm of all input moduli

    bool operator==(const CrtSolution&) const = default;
};

// Positions of an incompatible input pair: a_i ≢ a_j mod gcd(m_i, m_j).
struct CrtConflict {
    std::size_t i, j;

    bool operator==(const CrtConflict&) const = default;
};

struct CrtResult {
    std::optional<CrtSolution> solution;
    std::optional<CrtConflict> conflict;

    bool ok() const { return solution.has_value(); }
};

// Solves a simultaneous system with non-coprime moduli by sequential pairwise
// merging (extended Euclid). A solution exists iff a_i ≡ a_j mod (m_i, m_j)
// for every pair; it is then unique modulo the lcm of the moduli and is
// returned with the least non-negative residue. On failure the reported pair
// is a genuine pairwise witness. Throws DomainError on an empty system.
CrtResult crt_solve(const std::vector<Congruence>& congruences);

// The all-pairs compatibility condition, checked directly (independent of the
// merge path above). Returns the first violating pair in lexicographic order,
// or nullopt when the system is solvable.
std::optional<CrtConflict> crt_conflict(const std::vector<Congruence>& congruences);

}  // namespace gspline

#include "gspline/numtheory.hpp"

#include "gspline/errors.hpp"

#include <utility>

namespace gspline {

Int pos_mod(const Int& a, const Int& m) {
    Int r = a % m;  // cpp_int % truncates toward zero
    if (r < 0) r += m;
    return r;
}

Int gcd_all(const std::vector<Int>& values) {
    Int g = 0;
    for (const Int& v : values) {
        g = gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

Int lcm_all(const std::vector<Int>& values) {
    Int l = 1;
    for (const Int& v : values) {
        if (v == 0) throw DomainError("lcm of a set containing zero is undefined here");
        l = l / gcd(l, v) * v;
    }
    return l;
}

Int lcm_of_gcds(const std::vector<std::vector<Int>>& groups) {
    std::vector<Int> gcds;
    gcds.reserve(groups.size());
    for (const auto& group : groups) {
        if (group.empty()) throw DomainError("lcm_of_gcds: empty group");
        gcds.push_back(gcd_all(group));
    }
    return lcm_all(gcds);
}

ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = std::move(a), r = std::move(b);
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {  // negative inputs land here; the certificate negates through
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

Congruence::Congruence(Int r, Int m) : residue(std::move(r)), modulus(std::move(m)) {
    if (modulus < 1) throw DomainError("congruence modulus must be >= 1");
    residue = pos_mod(residue, modulus);
}

namespace {

// Merge two congruences into one over lcm(m1, m2), if compatible.
std::optional<Congruence> merge(const Congruence& c1, const Congruence& c2) {
    auto [g, p, q] = ext_gcd(c1.modulus, c2.modulus);
    Int diff = c2.residue - c1.residue;
    if (diff % g != 0) return std::nullopt;
    Int l = c1.modulus / g * c2.modulus;
    // x = r1 + m1*k with k ≡ (diff/g) * inv(m1/g) (mod m2/g); p is that inverse.
    Int k = pos_mod(diff / g * p, c2.modulus / g);
    return Congruence(c1.residue + c1.modulus * k, l);
}

bool pair_compatible(const Congruence& a, const Congruence& b) {
    Int g = gcd(a.modulus, b.modulus);
    return (a.residue - b.residue) % g == 0;
}

}  // namespace

CrtResult crt_solve(const std::vector<Congruence>& congruences) {
    if (congruences.empty()) throw DomainError("crt_solve: empty system");
    Congruence acc = congruences.front();
    for (std::size_t k = 1; k < congruences.size(); ++k) {
        auto merged = merge(acc, congruences[k]);
        if (!merged) {
            // The merged prefix is solvable, so the obstruction is a pairwise
            // incompatibility against position k. Locate one.
            for (std::size_t i = 0; i < k; ++i) {
                if (!pair_compatible(congruences[i], congruences[k])) {
                    return {std::nullopt, CrtConflict{i, k}};
                }
            }
            throw std::logic_error("crt_solve: merge failed without a pairwise witness");
        }
        acc = std::move(*merged);
    }
    return {CrtSolution{acc.residue, acc.modulus}, std::nullopt};
}

std::optional<CrtConflict> crt_conflict(const std::vector<Congruence>& congruences) {
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        for (std::size_t j = i + 1; j < congruences.size(); ++j) {
            if (!pair_compatible(congruences[i], congruences[j])) {
                return CrtConflict{i, j};
            }
        }
    }
    return std::nullopt;
}

}  // namespace gspline

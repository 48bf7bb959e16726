#include "gspline/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "gspline/errors.hpp"

namespace gspline {

namespace {

bool spline_less(const Spline& a, const Spline& b) { return a.entries < b.entries; }

// Generous node budget for the enumeration DFS; prefix counts can exceed the
// final box size when constraints bind late, so the completion cap alone does
// not bound the work.
constexpr std::size_t kWorkLimit = 10'000'000;

}  // namespace

bool ResidueBox::contains(const Spline& s) const {
    return std::binary_search(splines.begin(), splines.end(), s, spline_less);
}

ResidueBox enumerate_splines(const WeightedGraph& g, std::size_t cap) {
    int n = g.vertex_count();
    std::vector<Int> weights;
    for (const Edge& e : g.edges()) weights.push_back(e.w);

    ResidueBox box;
    box.modulus = lcm_all(weights);
    if (n == 0) {
        box.splines.push_back(Spline{});
        return box;
    }
    // The constant labelings (a,...,a) are always splines, so the box has at
    // least `modulus` members.
    if (box.modulus > Int(cap)) throw CapExceeded(cap);

    std::size_t visited = 0;
    std::vector<Int> partial;
    partial.reserve(n);

    // Fix vertex values in order; the value at vertex k must satisfy
    // x ≡ g_j (mod w) for every edge {j, k} with j < k already fixed.
    std::function<void(int)> assign = [&](int k) {
        if (k > n) {
            if (box.splines.size() >= cap) throw CapExceeded(cap);
            box.splines.push_back(Spline{partial});
            return;
        }
        std::vector<Congruence> wanted;
        for (const StarEdge& se : g.star(k)) {
            if (se.neighbor < k) wanted.emplace_back(partial[se.neighbor - 1], se.weight);
        }
        Int start = 0;
        Int step = 1;
        if (!wanted.empty()) {
            CrtResult r = crt_solve(wanted);
            if (!r.ok()) return;  // no value completes this prefix
            start = r.solution->residue;
            step = r.solution->modulus;
        }
        for (Int x = start; x < box.modulus; x += step) {
            if (++visited > kWorkLimit) throw CapExceeded(cap);
            partial.push_back(x);
            assign(k + 1);
            partial.pop_back();
        }
    };
    assign(1);
    // Ascending choice at every level makes the DFS emit splines in
    // lexicographic order already.
    return box;
}

SpanCheck check_basis_spans(const WeightedGraph& g, const FlowUpBasis& basis,
                            const ResidueBox& box) {
    SpanCheck result;
    if (basis.rank() != g.vertex_count()) {
        result.ok = false;
        result.reason = "basis rank does not match the vertex count";
        return result;
    }
    for (const Spline& m : basis.elements) {
        Spline reduced;
        for (const Int& e : m.entries) reduced.entries.push_back(pos_mod(e, box.modulus));
        if (!box.contains(reduced)) {
            result.ok = false;
            result.counterexample = m;
            result.reason = "basis element does not reduce into the enumerated box";
            return result;
        }
    }
    for (const Spline& s : box.splines) {
        try {
            decompose(basis, s);
        } catch (const NotInSpan&) {
            result.ok = false;
            result.counterexample = s;
            result.reason = "box spline has no integer decomposition over the basis";
            return result;
        }
    }
    return result;
}

std::optional<CrtSolution> crt_scan(const std::vector<Congruence>& congruences) {
    std::vector<Int> moduli;
    for (const Congruence& c : congruences) moduli.push_back(c.modulus);
    Int big_lcm = lcm_all(moduli);
    if (big_lcm > 1'000'000) throw ScanTooLarge("scan range exceeds 10^6");

    // Everything fits in machine words under the bound above.
    auto l = static_cast<std::int64_t>(big_lcm);
    std::vector<std::int64_t> r(congruences.size()), m(congruences.size());
    for (std::size_t i = 0; i < congruences.size(); ++i) {
        r[i] = static_cast<std::int64_t>(congruences[i].residue);
        m[i] = static_cast<std::int64_t>(congruences[i].modulus);
    }
    for (std::int64_t x = 0; x < l; ++x) {
        bool all = true;
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (x % m[i] != r[i]) {
                all = false;
                break;
            }
        }
        if (all) return CrtSolution{x, big_lcm};
    }
    return std::nullopt;
}

}  // namespace gspline

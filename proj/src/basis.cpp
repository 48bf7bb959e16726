#include "gspline/basis.hpp"

#include "gspline/errors.hpp"

#include <stdexcept>
#include <thread>

namespace gspline {

std::vector<KernelGenerator> kernel_generators(const CollapseSequence& seq) {
    int n = seq.vertex_count();
    std::vector<KernelGenerator> gens;
    gens.reserve(n);
    gens.push_back({1, 1});
    for (int i = 2; i <= n; ++i) {
        gens.push_back({i, lcm_all(seq.star_weights_of.at(i))});
    }
    return gens;
}

Spline extend_spline(const CollapseSequence& seq, const Spline& partial) {
    int n = seq.vertex_count();
    int r = static_cast<int>(partial.entries.size());
    if (r < 1 || r >= n) {
        throw DomainError("extend_spline: partial must cover levels 1..n-1");
    }
    const WeightedGraph& up = seq.level(r + 1);
    std::vector<Congruence> system;
    for (const StarEdge& s : up.star(r + 1)) {
        system.emplace_back(partial.entries[s.neighbor - 1], s.weight);
    }
    if (system.empty()) {
        // G_{r+1} is connected, so the restored vertex always has neighbors.
        throw std::logic_error("extend_spline: restored vertex has an empty star");
    }
    CrtResult res = crt_solve(system);
    if (!res.ok()) {
        throw std::logic_error("extend_spline: incompatible system for a verified prefix");
    }
    Spline out = partial;
    out.entries.push_back(res.solution->residue);
    return out;
}

FlowUpBasis build_basis(const WeightedGraph& g, unsigned threads) {
    CollapseSequence seq = complete_collapse(g);
    std::vector<KernelGenerator> gens = kernel_generators(seq);
    int n = seq.vertex_count();

    FlowUpBasis basis;
    basis.generators = gens;
    basis.elements.resize(n);

    auto lift_level = [&](int i) {
        if (i == 1) {
            // (1,...,1) satisfies every congruence and has the minimal leading term.
            basis.elements[0] = Spline{std::vector<Int>(n, 1)};
            return;
        }
        Spline s;
        s.entries.assign(i - 1, 0);
        s.entries.push_back(gens[i - 1].value);
        for (int r = i; r < n; ++r) s = extend_spline(seq, s);
        basis.elements[i - 1] = std::move(s);
    };

    if (threads <= 1 || n <= 2) {
        for (int i = 1; i <= n; ++i) lift_level(i);
    } else {
        unsigned count = std::min<unsigned>(threads, n);
        std::vector<std::thread> pool;
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back([&, t] {
                for (int i = 1 + static_cast<int>(t); i <= n; i += count) lift_level(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return basis;
}

std::vector<Int> decompose(const FlowUpBasis& basis, const Spline& s) {
    std::size_t n = basis.elements.size();
    if (s.entries.size() != n) throw LengthMismatch(s.entries.size(), n);

    std::vector<Int> residual = s.entries;
    std::vector<Int> alpha(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Int& lead = basis.generators[i].value;
        if (residual[i] % lead != 0) throw NotInSpan(i);
        Int a = residual[i] / lead;
        if (a != 0) {
            const Spline& m = basis.elements[i];
            for (std::size_t k = i; k < n; ++k) residual[k] -= a * m.entries[k];
        }
        alpha[i] = std::move(a);
    }
    return alpha;
}

}  // namespace gspline

#include "conductor/artin.hpp"

#include <algorithm>

#include "conductor/errors.hpp"

namespace conductor {

void RamificationData::validate() const {
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const std::string path = "chain[" + std::to_string(i) + "]";
        if (!group.is_subgroup(chain[i])) throw ValidationError(path, "not a subgroup");
        if (!std::is_sorted(chain[i].begin(), chain[i].end()))
            throw ValidationError(path, "elements must be sorted");
        if (!group.is_normal(chain[i], chain[0])) throw ValidationError(path, "not normal in G_0");
        if (i > 0 && !std::includes(chain[i - 1].begin(), chain[i - 1].end(), chain[i].begin(), chain[i].end()))
            throw ValidationError(path, "chain is not descending");
    }
    if (!chain.empty() && chain.back().size() != 1) throw ValidationError("chain", "last group must be trivial");
}

Rational artin_conductor(const GLattice& lattice, const RamificationData& ramification) {
    ramification.validate();
    if (!(lattice.group() == ramification.group))
        throw ValidationError("lattice", "lattice and filtration use different groups");
    if (ramification.chain.empty()) return Rational(0);
    const auto g0 = static_cast<std::int64_t>(ramification.chain[0].size());
    Rational a(0);
    for (const auto& gi : ramification.chain) {
        const auto codim = static_cast<std::int64_t>(lattice.rank() - fixed_sublattice(lattice, gi).rank());
        a += Rational(static_cast<std::int64_t>(gi.size()) * codim, g0);
    }
    return a;
}

Rational torus_conductor_formula(const GLattice& lattice, const RamificationData& ramification) {
    return artin_conductor(lattice, ramification) / Rational(2);
}

namespace {

bool same_images(const FiniteFlatAlgebra& a, const std::vector<AlgebraElement>& x,
                 const std::vector<AlgebraElement>& y) {
    for (std::size_t k = 0; k < x.size(); ++k)
        if (!a.congruent(x[k], y[k])) return false;
    return true;
}

}  // namespace

FiniteGroup embedding_group(const ExtensionData& e) {
    if (!e.embeds_into(e)) throw ValidationError("embeddings", "embeddings must land in the extension itself");
    const auto& emb = e.embeddings();
    const auto& alg = e.algebra();
    const int m = static_cast<int>(emb.size());
    if (m > FiniteGroup::max_order) throw ValidationError("embeddings", "too many embeddings");
    std::vector<AlgebraElement> basis;
    for (int k = 0; k < alg.rank(); ++k) basis.push_back(alg.basis(k));
    int identity = -1;
    for (int s = 0; s < m; ++s)
        if (same_images(alg, emb[s].basis_images, basis)) identity = s;
    if (identity < 0) throw ValidationError("embeddings", "the identity is not among the embeddings");
    std::vector<std::vector<int>> table(m, std::vector<int>(m, -1));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) {
            std::vector<AlgebraElement> composed;
            for (const auto& b : emb[t].basis_images) composed.push_back(e.apply(s, b));
            for (int u = 0; u < m; ++u)
                if (same_images(alg, composed, emb[u].basis_images)) table[s][t] = u;
            if (table[s][t] < 0)
                throw ValidationError("embeddings", "embeddings do not close under composition");
        }
    std::vector<std::string> labels;
    for (int s = 0; s < m; ++s) labels.push_back(s == identity ? "1" : "s" + std::to_string(s));
    return FiniteGroup(std::move(table), identity, std::move(labels));
}

RamificationData ramification_filtration_from_extension(const ExtensionData& e) {
    if (e.residue_degree() != 1) throw ValidationError("f", "extension is not totally ramified");
    FiniteGroup group = embedding_group(e);
    const auto& alg = e.algebra();
    const AlgebraElement& pi_l = e.uniformizer();
    std::vector<int> level(group.order(), 0);  // i_G(s); identity marked below
    int top = 0;
    for (int s = 0; s < group.order(); ++s) {
        if (s == group.identity()) continue;
        Valuation v = algebra_valuation(e, alg.sub(e.apply(s, pi_l), pi_l));
        if (!v.exact) throw PrecisionError("ramification break exceeds working precision");
        level[s] = v.value;
        top = std::max(top, v.value);
    }
    RamificationData r{group, {}};
    if (group.order() == 1) return r;
    for (int i = 0; i < top; ++i) {
        std::vector<int> gi;
        for (int s = 0; s < group.order(); ++s)
            if (s == group.identity() || level[s] >= i + 1) gi.push_back(s);
        r.chain.push_back(std::move(gi));
    }
    r.chain.push_back({group.identity()});
    r.validate();
    return r;
}

IsogenyCheck isogeny_invariance_check(const GLattice& large, const GLattice& small, const IntMatrix& injection,
                                      const RamificationData& ramification) {
    if (!is_equivariant(injection, small, large))
        throw ValidationError("injection", "map is not G-equivariant");
    if (injection.rows() != injection.cols()) throw ValidationError("injection", "lattices have different ranks");
    const std::int64_t d = intmat::determinant(injection);
    if (d == 0) throw ValidationError("injection", "map is not injective");
    IsogenyCheck c;
    c.conductor_large = artin_conductor(large, ramification);
    c.conductor_small = artin_conductor(small, ramification);
    c.index = d < 0 ? -d : d;
    c.invariant = c.conductor_large == c.conductor_small;
    return c;
}

Rational additivity_from_formula(const GLattice& sub, const GLattice& total, const GLattice& quotient,
                                 const IntMatrix& inclusion, const IntMatrix& projection,
                                 const RamificationData& ramification) {
    if (!is_equivariant(inclusion, sub, total)) throw ValidationError("inclusion", "map is not G-equivariant");
    if (!is_equivariant(projection, total, quotient))
        throw ValidationError("projection", "map is not G-equivariant");
    if (!intmat::is_zero(intmat::multiply(projection, inclusion)))
        throw ValidationError("projection", "composition with the inclusion is not zero");
    if (intmat::rank(inclusion) != sub.rank()) throw ValidationError("inclusion", "not injective");
    if (intmat::rank(projection) != quotient.rank()) throw ValidationError("projection", "not surjective over Q");
    if (sub.rank() + quotient.rank() != total.rank())
        throw ValidationError("total", "ranks do not add up; sequence is not exact in the middle");
    return (artin_conductor(total, ramification) - artin_conductor(sub, ramification) -
            artin_conductor(quotient, ramification)) /
           Rational(2);
}

}  // namespace conductor

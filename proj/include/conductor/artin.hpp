#pragma once

#include <vector>

#include "conductor/extension.hpp"
#include "conductor/lattice.hpp"
#include "conductor/rational.hpp"

namespace conductor {

// Lower-numbered filtration G_0 ⊇ G_1 ⊇ ... ⊇ G_k = {1}; chain[i] = G_i,
// each sorted. An empty chain means G_0 is trivial (unramified).
struct RamificationData {
    FiniteGroup group;
    std::vector<std::vector<int>> chain;

    // Subgroups, descending, each normal in G_0, ending in the trivial group.
    void validate() const;
};

// a(V) = sum_{i >= 0} |G_i|/|G_0| * codim V^{G_i} for V = L (x) Q.
Rational artin_conductor(const GLattice& lattice, const RamificationData& ramification);

// Half the Artin conductor of the (co)character lattice.
Rational torus_conductor_formula(const GLattice& lattice, const RamificationData& ramification);

// For a totally ramified extension whose embeddings into itself form a
// group under composition: G_i = {s : v_L(s(pi_L) - pi_L) >= i + 1}.
// The group's element k is embedding k.
RamificationData ramification_filtration_from_extension(const ExtensionData& e);

// Group of self-embeddings under composition, element k = embedding k.
FiniteGroup embedding_group(const ExtensionData& e);

struct IsogenyCheck {
    Rational conductor_large;
    Rational conductor_small;
    std::int64_t index = 0;
    bool invariant = false;
};

// `injection` maps `small` into `large` (columns are images of small's basis)
// equivariantly with nonzero determinant.
IsogenyCheck isogeny_invariance_check(const GLattice& large, const GLattice& small, const IntMatrix& injection,
                                      const RamificationData& ramification);

// 1/2 (a(total) - a(sub) - a(quotient)) for 0 -> sub -> total -> quotient -> 0,
// exact after (x) Q. Throws ValidationError on non-equivariant or non-exact
// maps.
Rational additivity_from_formula(const GLattice& sub, const GLattice& total, const GLattice& quotient,
                                 const IntMatrix& inclusion, const IntMatrix& projection,
                                 const RamificationData& ramification);

}  // namespace conductor

#pragma once

#include <memory>
#include <vector>

#include "conductor/artin.hpp"
#include "conductor/extension.hpp"
#include "conductor/lattice.hpp"
#include "conductor/torus.hpp"

namespace conductor::imperfect {

// The tower over O_K = F_2(t)[[pi]] with c = t, which is not a square in the
// residue field:
//   K_i = K[a]/(X^2 + pi^i X + c)      e = 1, f = 2, v(disc) = 2i
//   L   = K_1[g]/(X^2 + pi^2 X + pi a1 + pi^2 a1), basis 1, a1, a2, a1*a2
//         with a2 = g - a1                         e = 2, f = 2
//   F   = K[b]/(X^2 + pi^2 X + pi^2 c + c)         e = 1, f = 2
// Gal(L/K) = {1, s1, s2, s1*s2} (indices 0..3), s1 fixing K_2 and s2 fixing K_1.

std::shared_ptr<const ExtensionData> trivial_extension(const BaseDVR& base);
// K_i with its two conjugate embeddings a -> a, a -> a + pi^i.
std::shared_ptr<const ExtensionData> quadratic_extension(const BaseDVR& base, int i);
std::shared_ptr<const ExtensionData> compositum(const BaseDVR& base);
std::shared_ptr<const ExtensionData> field_f(const BaseDVR& base);
// K_1 with its embeddings landing in L.
std::shared_ptr<const ExtensionData> quadratic_in_compositum(const BaseDVR& base,
                                                              const std::shared_ptr<const ExtensionData>& l);

BaseDVR tower_base(int precision = 32);

// Character lattices: X*(T) with the rank-two action, the sub X*(T_1) = Z e1
// and the quotient X*(T_2), plus the isogeny X*(T_1) + X*(T_2) -> X*(T).
struct CharacterData {
    FiniteGroup group;
    GLattice total;
    GLattice sub;
    GLattice quotient;
    IntMatrix inclusion;
    IntMatrix projection;
    IntMatrix isogeny;
    // A wild-looking filtration G_0 = G_1 = G, G_2 = 1 used for the formula
    // path; any filtration gives the same verdicts.
    RamificationData filtration;
};
CharacterData character_data();

struct Tower {
    BaseDVR base;
    std::shared_ptr<const ExtensionData> trivial;
    std::vector<std::shared_ptr<const ExtensionData>> quadratics;  // K_1, K_2, ...
    std::shared_ptr<const ExtensionData> l;
    std::shared_ptr<const ExtensionData> f;
    std::shared_ptr<const ExtensionData> k1_in_l;
    ResolutionSpec resolution;  // 0 -> Res_F -> Res_L -> T -> 0
};
Tower build_tower(int precision = 32, int quadratics = 4);

}  // namespace conductor::imperfect

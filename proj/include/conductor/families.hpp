#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "conductor/extension.hpp"
#include "conductor/rational.hpp"

namespace conductor::families {

// Totally ramified Galois extensions with all conjugates written down.
// `u`, `v` must be nonzero in the residue field.

// X^2 - u pi over F_p, p odd: conjugates x, -x.
std::shared_ptr<const ExtensionData> tame_quadratic(std::uint32_t p, std::int64_t u, int precision);
// X^2 + pi^a u X + pi v in characteristic 2: conjugates x, x + pi^a u.
std::shared_ptr<const ExtensionData> artin_schreier_quadratic(const CoefficientField& field, int a, const Coeff& u,
                                                              const Coeff& v, int precision);
// X^3 - u pi over F_p with p = 1 mod 3: conjugates zeta^k x.
std::shared_ptr<const ExtensionData> tame_cubic(std::uint32_t p, std::int64_t u, int precision);
// y^2 - u pi, then x^2 - y, over F_p with p = 1 mod 4: cyclic of degree 4
// with x -> zeta_4^k x.
std::shared_ptr<const ExtensionData> tame_quartic_tower(std::uint32_t p, std::int64_t u, int precision);

// Smallest element of exact multiplicative order k in F_p.
std::int64_t primitive_root_of_unity(std::uint32_t p, int k);

struct FamilyMember {
    std::string family;
    std::shared_ptr<const ExtensionData> extension;
};

// The fixed sample used by the formula cross-check: tame quadratics in
// characteristics 3, 5, 7, 11; Artin-Schreier quadratics over F_2 and F_2(t)
// with breaks 2, 4, 6; tame cubics and quartics.
std::vector<FamilyMember> cross_check_sample(int precision = 16);

}  // namespace conductor::families

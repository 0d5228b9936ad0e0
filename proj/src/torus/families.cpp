#include "conductor/families.hpp"

#include <stdexcept>

#include "conductor/coefficient_field.hpp"

namespace conductor::families {

namespace {

std::int64_t power_mod(std::int64_t b, int k, std::int64_t p) {
    std::int64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * b % p;
    return r;
}

std::string residue_tag(std::uint32_t p, std::int64_t u) {
    return "p" + std::to_string(p) + "_u" + std::to_string(u);
}

}  // namespace

std::int64_t primitive_root_of_unity(std::uint32_t p, int k) {
    for (std::int64_t g = 2; g < p; ++g) {
        if (power_mod(g, k, p) != 1) continue;
        bool primitive = true;
        for (int j = 1; j < k; ++j)
            if (power_mod(g, j, p) == 1) primitive = false;
        if (primitive) return g;
    }
    throw std::invalid_argument("F_" + std::to_string(p) + " has no primitive root of unity of order " +
                                std::to_string(k));
}

std::shared_ptr<const ExtensionData> tame_quadratic(std::uint32_t p, std::int64_t u, int precision) {
    BaseDVR base(CoefficientField::prime_field(p), precision);
    Presentation pr = monogenic_presentation(base, {-(base.from_integer(u) * base.uniformizer_power(1)), base.zero(), base.one()}, "x");
    const FiniteFlatAlgebra& a = pr.algebra;
    const AlgebraElement x = pr.generators[0].value;
    ExtensionData::Options o;
    o.name = "tame2_" + residue_tag(p, u);
    o.uniformizer = x;
    o.ramification_index = 2;
    o.generator_images = {{x}, {a.neg(x)}};
    return ExtensionData::create(std::move(pr), std::move(o));
}

std::shared_ptr<const ExtensionData> artin_schreier_quadratic(const CoefficientField& field, int a, const Coeff& u,
                                                              const Coeff& v, int precision) {
    if (field.characteristic() != 2) throw std::invalid_argument("Artin-Schreier quadratics need characteristic 2");
    BaseDVR base(field, precision);
    const Series shift = base.constant(u) * base.uniformizer_power(a);
    Presentation pr =
        monogenic_presentation(base, {base.constant(v) * base.uniformizer_power(1), shift, base.one()}, "x");
    const FiniteFlatAlgebra& alg = pr.algebra;
    const AlgebraElement x = pr.generators[0].value;
    ExtensionData::Options o;
    o.name = "as2_a" + std::to_string(a) + "_u" + field.format(u) + "_v" + field.format(v);
    std::erase(o.name, ' ');
    o.uniformizer = x;
    o.ramification_index = 2;
    o.generator_images = {{x}, {alg.add(x, alg.scalar(shift))}};
    return ExtensionData::create(std::move(pr), std::move(o));
}

std::shared_ptr<const ExtensionData> tame_cubic(std::uint32_t p, std::int64_t u, int precision) {
    const std::int64_t zeta = primitive_root_of_unity(p, 3);
    BaseDVR base(CoefficientField::prime_field(p), precision);
    Presentation pr = monogenic_presentation(
        base, {-(base.from_integer(u) * base.uniformizer_power(1)), base.zero(), base.zero(), base.one()}, "x");
    const FiniteFlatAlgebra& a = pr.algebra;
    const AlgebraElement x = pr.generators[0].value;
    ExtensionData::Options o;
    o.name = "tame3_" + residue_tag(p, u);
    o.uniformizer = x;
    o.ramification_index = 3;
    for (int k = 0; k < 3; ++k) o.generator_images.push_back({a.scale(base.from_integer(power_mod(zeta, k, p)), x)});
    return ExtensionData::create(std::move(pr), std::move(o));
}

std::shared_ptr<const ExtensionData> tame_quartic_tower(std::uint32_t p, std::int64_t u, int precision) {
    const std::int64_t zeta = primitive_root_of_unity(p, 4);
    BaseDVR base(CoefficientField::prime_field(p), precision);
    Presentation lower =
        monogenic_presentation(base, {-(base.from_integer(u) * base.uniformizer_power(1)), base.zero(), base.one()}, "y");
    const FiniteFlatAlgebra& la = lower.algebra;
    Presentation pr = tower_compositum(lower, {la.neg(la.basis(1)), la.zero(), la.one()}, "x");
    const FiniteFlatAlgebra& a = pr.algebra;
    const AlgebraElement y = pr.generator("y").value, x = pr.generator("x").value;
    ExtensionData::Options o;
    o.name = "tame4_" + residue_tag(p, u);
    o.uniformizer = x;
    o.ramification_index = 4;
    for (int k = 0; k < 4; ++k)
        o.generator_images.push_back({a.scale(base.from_integer(power_mod(zeta, 2 * k, p)), y),
                                      a.scale(base.from_integer(power_mod(zeta, k, p)), x)});
    return ExtensionData::create(std::move(pr), std::move(o));
}

std::vector<FamilyMember> cross_check_sample(int precision) {
    std::vector<FamilyMember> out;
    for (std::uint32_t p : {3u, 5u, 7u, 11u})
        for (std::int64_t u : {1, 2}) out.push_back({"tame-quadratic", tame_quadratic(p, u, precision)});
    const CoefficientField f2 = CoefficientField::prime_field(2);
    const CoefficientField f2t = CoefficientField::rational_functions(2, "t");
    const Coeff one = f2t.one(), t = f2t.variable();
    for (int a : {1, 2, 3})
        out.push_back({"artin-schreier", artin_schreier_quadratic(f2, a, f2.one(), f2.one(), precision)});
    out.push_back({"artin-schreier", artin_schreier_quadratic(f2t, 1, t, one, precision)});
    out.push_back({"artin-schreier", artin_schreier_quadratic(f2t, 2, one, t, precision)});
    out.push_back({"artin-schreier", artin_schreier_quadratic(f2t, 3, t + one, t, precision)});
    for (std::uint32_t p : {7u, 13u})
        for (std::int64_t u : {1, 2}) out.push_back({"tame-cubic", tame_cubic(p, u, precision)});
    for (std::uint32_t p : {5u, 13u})
        for (std::int64_t u : {1, 2}) out.push_back({"tame-quartic", tame_quartic_tower(p, u, precision)});
    return out;
}

}  // namespace conductor::families

#include "conductor/imperfect_tower.hpp"

#include <string>

namespace conductor::imperfect {

namespace {

std::string monogenic_maximal(const std::string& generator) {
    return "O_K[" + generator + "] is the maximal order: the defining polynomial is irreducible modulo pi";
}

}  // namespace

BaseDVR tower_base(int precision) { return BaseDVR(CoefficientField::rational_functions(2, "t"), precision); }

std::shared_ptr<const ExtensionData> trivial_extension(const BaseDVR& base) {
    Presentation p = monogenic_presentation(base, {base.zero(), base.one()}, "x");
    ExtensionData::Options o;
    o.name = "K";
    o.uniformizer = p.algebra.scalar(base.uniformizer_power(1));
    o.generator_images = {{p.generators[0].value}};
    return ExtensionData::create(std::move(p), std::move(o));
}

std::shared_ptr<const ExtensionData> quadratic_extension(const BaseDVR& base, int i) {
    const Series c = base.constant(base.field().variable());
    Presentation p = monogenic_presentation(base, {c, base.uniformizer_power(i), base.one()}, "a" + std::to_string(i));
    const FiniteFlatAlgebra& a = p.algebra;
    const AlgebraElement x = p.generators[0].value;
    ExtensionData::Options o;
    o.name = "K_" + std::to_string(i);
    o.uniformizer = a.scalar(base.uniformizer_power(1));
    o.ramification_index = 1;
    o.residue_degree = 2;
    o.generator_images = {{x}, {a.add(x, a.scalar(base.uniformizer_power(i)))}};
    o.assumptions = {monogenic_maximal("a" + std::to_string(i))};
    return ExtensionData::create(std::move(p), std::move(o));
}

std::shared_ptr<const ExtensionData> compositum(const BaseDVR& base) {
    const Series c = base.constant(base.field().variable());
    auto pi = [&](int k) { return base.uniformizer_power(k); };
    Presentation k1 = monogenic_presentation(base, {c, pi(1), base.one()}, "a1");
    const FiniteFlatAlgebra& a = k1.algebra;
    const AlgebraElement a1 = a.basis(1);
    // gamma = a1 + a2 is a root of X^2 + pi^2 X + pi a1 + pi^2 a1.
    Presentation tower = tower_compositum(k1, {a.scale(pi(1) + pi(2), a1), a.scalar(pi(2)), a.one()}, "g");
    const FiniteFlatAlgebra& t = tower.algebra;
    const AlgebraElement ta1 = tower.generator("a1").value, tg = tower.generator("g").value;
    const AlgebraElement a2 = t.sub(tg, ta1);
    Presentation lp = rebase(tower, {t.one(), ta1, a2, t.mul(ta1, a2)}, {"1", "a1", "a2", "a1*a2"});
    const FiniteFlatAlgebra& la = lp.algebra;
    const AlgebraElement la1 = lp.generator("a1").value, lg = lp.generator("g").value;
    auto p = [&](int k) { return la.scalar(pi(k)); };
    ExtensionData::Options o;
    o.name = "L";
    o.uniformizer = lg;
    o.ramification_index = 2;
    o.residue_degree = 2;
    // Images of (a1, g) under 1, s1, s2, s1*s2.
    o.generator_images = {{la1, lg},
                          {la.add(la1, p(1)), la.add(lg, p(1))},
                          {la1, la.add(lg, p(2))},
                          {la.add(la1, p(1)), la.add(la.add(lg, p(1)), p(2))}};
    o.assumptions = {monogenic_maximal("a1"),
                     "O_L = O_K[a1][g]: g satisfies an Eisenstein polynomial over O_K[a1]"};
    return ExtensionData::create(std::move(lp), std::move(o));
}

std::shared_ptr<const ExtensionData> field_f(const BaseDVR& base) {
    const Series c = base.constant(base.field().variable());
    const Series pi2 = base.uniformizer_power(2);
    Presentation p = monogenic_presentation(base, {pi2 * c + c, pi2, base.one()}, "b");
    const FiniteFlatAlgebra& a = p.algebra;
    const AlgebraElement b = p.generators[0].value;
    ExtensionData::Options o;
    o.name = "F";
    o.uniformizer = a.scalar(base.uniformizer_power(1));
    o.ramification_index = 1;
    o.residue_degree = 2;
    o.generator_images = {{b}, {a.add(b, a.scalar(pi2))}};
    o.assumptions = {monogenic_maximal("b")};
    return ExtensionData::create(std::move(p), std::move(o));
}

std::shared_ptr<const ExtensionData> quadratic_in_compositum(const BaseDVR& base,
                                                              const std::shared_ptr<const ExtensionData>& l) {
    const Series c = base.constant(base.field().variable());
    Presentation p = monogenic_presentation(base, {c, base.uniformizer_power(1), base.one()}, "a1");
    const FiniteFlatAlgebra& la = l->algebra();
    const AlgebraElement la1 = l->presentation().generator("a1").value;
    ExtensionData::Options o;
    o.name = "K_1";
    o.uniformizer = p.algebra.scalar(base.uniformizer_power(1));
    o.ramification_index = 1;
    o.residue_degree = 2;
    o.generator_images = {{la1}, {la.add(la1, la.scalar(base.uniformizer_power(1)))}};
    o.target = l;
    o.assumptions = {monogenic_maximal("a1")};
    return ExtensionData::create(std::move(p), std::move(o));
}

CharacterData character_data() {
    FiniteGroup v4 = FiniteGroup::klein_four();
    const std::vector<int> gens{1, 2};
    GLattice total = GLattice::from_generators(
        v4, gens, {intmat::from_rows({{-1, 1}, {0, 1}}), intmat::from_rows({{1, -1}, {0, -1}})});
    GLattice sub = GLattice::from_generators(v4, gens, {intmat::from_rows({{-1}}), intmat::from_rows({{1}})});
    GLattice quotient = GLattice::from_generators(v4, gens, {intmat::from_rows({{1}}), intmat::from_rows({{-1}})});
    RamificationData filtration{v4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0}}};
    return CharacterData{v4,
                         std::move(total),
                         std::move(sub),
                         std::move(quotient),
                         intmat::from_rows({{1}, {0}}),
                         intmat::from_rows({{0, 1}}),
                         intmat::from_rows({{1, 1}, {0, 2}}),
                         std::move(filtration)};
}

Tower build_tower(int precision, int quadratics) {
    Tower t{tower_base(precision), nullptr, {}, nullptr, nullptr, nullptr, {}};
    t.trivial = trivial_extension(t.base);
    for (int i = 1; i <= quadratics; ++i) t.quadratics.push_back(quadratic_extension(t.base, i));
    t.l = compositum(t.base);
    t.f = field_f(t.base);
    t.k1_in_l = quadratic_in_compositum(t.base, t.l);
    t.resolution = ResolutionSpec{"T", {t.f}, {t.l},
                                  "induced tori give an exact sequence of Neron lft-models",
                                  character_data().total};
    return t;
}

}  // namespace conductor::imperfect

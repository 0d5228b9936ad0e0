#include "doctest.h"

#include "conductor/families.hpp"
#include "conductor/imperfect_tower.hpp"
#include "support.hpp"

using namespace conductor;
using namespace testing_support;

namespace {

BaseDVR f2t(int n = 32) { return BaseDVR(CoefficientField::rational_functions(2, "t"), n); }

std::vector<BaseDVR> sample_bases(int n) {
    return {BaseDVR(CoefficientField::prime_field(2), n), BaseDVR(CoefficientField::prime_field(3), n), f2t(n)};
}

}  // namespace

TEST_SUITE("exact_rings") {

TEST_CASE("coefficient field: canonical rational functions") {
    const CoefficientField k = CoefficientField::rational_functions(2, "t");
    const Coeff t = k.variable(), one = k.one();
    CHECK((t * t + one) / (t + one) == t + one);  // (t+1)^2 / (t+1) in char 2
    CHECK((one / t) * t == one);
    CHECK((t / (t * t)).to_string("t") == (one / t).to_string("t"));
    CHECK(k.from_integer(3) == one);
    CHECK_THROWS_AS(k.zero().inverse(), std::domain_error);
    CHECK_THROWS(CoefficientField::prime_field(4));
    const CoefficientField f5 = CoefficientField::prime_field(5);
    CHECK(f5.from_integer(2).inverse() == f5.from_integer(3));
    CHECK(f5.from_integer(-1) == f5.from_integer(4));
}

TEST_CASE("coefficient field: field axioms on random elements") {
    for (const auto& k : {CoefficientField::prime_field(3), CoefficientField::rational_functions(2, "t"),
                          CoefficientField::rational_functions(3, "t")}) {
        for (int trial = 0; trial < 200; ++trial) {
            const Coeff a = random_coeff(k), b = random_coeff(k), c = random_coeff(k, true);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + b) - b == a);
            CHECK((a / c) * c == a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("dvr valuation") {
    const BaseDVR b(CoefficientField::prime_field(2), 8);
    const Series pi = b.uniformizer_power(1);
    const Valuation v3 = (b.uniformizer_power(3) + b.uniformizer_power(5)).valuation();
    CHECK(v3.exact);
    CHECK(v3.value == 3);
    CHECK((b.one() + pi).valuation() == Valuation{0, true});
    const Valuation z = b.zero().valuation();
    CHECK_FALSE(z.exact);
    CHECK(z.to_string() == ">=8");
    CHECK(b.uniformizer_power(8).is_zero());
}

TEST_CASE("dvr valuation is additive on random pairs") {
    for (const auto& b : sample_bases(12)) {
        for (int trial = 0; trial < 200; ++trial) {
            const Series x = random_with_valuation(b, uniform(0, 5)), y = random_with_valuation(b, uniform(0, 5));
            const Valuation vx = x.valuation(), vy = y.valuation(), vxy = (x * y).valuation();
            REQUIRE(vx.exact);
            REQUIRE(vy.exact);
            if (vx.value + vy.value < b.precision()) {
                CHECK(vxy.exact);
                CHECK(vxy.value == vx.value + vy.value);
            } else {
                CHECK_FALSE(vxy.exact);
            }
        }
    }
}

TEST_CASE("series: exact division tracks precision") {
    const BaseDVR b(CoefficientField::prime_field(3), 10);
    const Series pi = b.uniformizer_power(1);
    const Series x = random_unit(b) * b.uniformizer_power(4);
    const Series d = divide_exact(x, pi * pi);
    CHECK(d.valuation().value == 2);
    CHECK(d.precision() == 8);  // dividing by pi^2 loses two digits
    CHECK((d * pi * pi).congruent(x));
    CHECK_THROWS_AS(divide_exact(pi, pi * pi), std::domain_error);
    CHECK_THROWS_AS(divide_exact(pi, b.zero()), PrecisionError);
    const Series u = random_unit(b);
    CHECK((u * u.inverse()).congruent(b.one()));
}

TEST_CASE("monogenic algebra of f_1 in characteristic 2") {
    const BaseDVR b = f2t();
    const Series c = b.constant(b.field().variable()), pi = b.uniformizer_power(1);
    const FiniteFlatAlgebra a = monogenic_algebra(b, {c, pi, b.one()}, "a");
    REQUIRE(a.rank() == 2);
    // x^2 = -pi x - c = pi x + c
    const auto& xx = a.basis_product(1, 1);
    CHECK(xx[0] == c);
    CHECK(xx[1] == pi);
    CHECK_NOTHROW(a.validate());
}

TEST_CASE("monogenic algebra: degree one and rejection of non-monic input") {
    const BaseDVR b(CoefficientField::prime_field(5), 8);
    const FiniteFlatAlgebra line = monogenic_algebra(b, {b.from_integer(3), b.one()}, "x");
    CHECK(line.rank() == 1);
    const Series u = random_unit(b);
    CHECK(line.norm(line.scalar(u)) == u);
    CHECK_THROWS_AS(monogenic_algebra(b, {b.one(), b.from_integer(2)}, "x"), std::invalid_argument);
    CHECK_THROWS_AS(monogenic_algebra(b, {b.one()}, "x"), std::invalid_argument);
}

TEST_CASE("monogenic algebra for F") {
    const BaseDVR b = f2t();
    const Series c = b.constant(b.field().variable()), pi2 = b.uniformizer_power(2);
    const FiniteFlatAlgebra a = monogenic_algebra(b, {pi2 * c + c, pi2, b.one()}, "b");
    CHECK(a.basis_product(1, 1)[0] == pi2 * c + c);
    CHECK(a.basis_product(1, 1)[1] == pi2);
    CHECK(discriminant_of_algebra(a).valuation() == Valuation{4, true});
}

TEST_CASE("tower compositum for L") {
    const BaseDVR b = f2t();
    const auto l = imperfect::compositum(b);
    CHECK(l->degree() == 4);
    CHECK(l->ramification_index() == 2);
    CHECK(l->residue_degree() == 2);
    CHECK(l->algebra().is_associative());
    CHECK(l->algebra().is_commutative());
    // g is a root of X^2 + pi^2 X + pi a1 + pi^2 a1, written out by hand.
    const auto& a = l->algebra();
    const AlgebraElement g = l->presentation().generator("g").value, a1 = l->presentation().generator("a1").value;
    const AlgebraElement pi = a.scalar(b.uniformizer_power(1)), pi2 = a.scalar(b.uniformizer_power(2));
    const AlgebraElement value = a.add(a.add(a.mul(g, g), a.mul(pi2, g)), a.add(a.mul(pi, a1), a.mul(pi2, a1)));
    CHECK(a.is_zero(value));
}

TEST_CASE("tower compositum: linear polynomial returns the lower algebra") {
    const BaseDVR b = f2t();
    const Series c = b.constant(b.field().variable());
    const Presentation k1 = monogenic_presentation(b, {c, b.uniformizer_power(1), b.one()}, "a1");
    const Presentation same = tower_compositum(k1, {k1.algebra.zero(), k1.algebra.one()}, "y");
    CHECK(same.algebra.rank() == 2);
    CHECK(same.algebra.structure_constants() == k1.algebra.structure_constants());
}

TEST_CASE("tower over the base: K_2 and its conjugate") {
    const BaseDVR b = f2t();
    const auto k2 = imperfect::quadratic_extension(b, 2);
    const auto& a = k2->algebra();
    const AlgebraElement x = k2->presentation().generators[0].value;
    const AlgebraElement pi2 = a.scalar(b.uniformizer_power(2)), c = a.scalar(b.constant(b.field().variable()));
    const AlgebraElement y = a.add(x, pi2);
    // (a2 + pi^2)^2 + pi^2 (a2 + pi^2) + c, expanded independently of the
    // embedding validation.
    CHECK(a.is_zero(a.add(a.add(a.mul(y, y), a.mul(pi2, y)), c)));
    CHECK(k2->embeddings().size() == 2);
    CHECK(a.congruent(k2->apply(1, x), y));
}

TEST_CASE("algebra norm") {
    const BaseDVR b = f2t();
    const auto k1 = imperfect::quadratic_extension(b, 1);
    const auto& a = k1->algebra();
    const Series u = random_unit(b);
    CHECK(a.norm(a.scalar(u)) == u * u);
    // multiplication by a1 is [[0, c], [1, pi]], determinant -c = c
    const Matrix<Series> m = a.multiplication_matrix(a.basis(1));
    CHECK(m(0, 0).is_zero());
    CHECK(m(1, 0) == b.one());
    CHECK(m(0, 1) == b.constant(b.field().variable()));
    CHECK(a.norm(a.basis(1)) == b.constant(b.field().variable()));
    const auto l = imperfect::compositum(b);
    CHECK(l->algebra().norm(l->uniformizer()).valuation() == Valuation{2, true});
}

TEST_CASE("algebra norm is multiplicative on random pairs") {
    const BaseDVR b = f2t(16);
    const auto l = imperfect::compositum(b);
    const auto& a = l->algebra();
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Series> cx, cy;
        for (int k = 0; k < 4; ++k) {
            cx.push_back(random_series(b, 0, 5));
            cy.push_back(random_series(b, 0, 5));
        }
        const AlgebraElement x = a.from_coords(cx), y = a.from_coords(cy);
        CHECK(a.norm(a.mul(x, y)).congruent(a.norm(x) * a.norm(y)));
    }
    const auto q = families::tame_cubic(7, 3, 12);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Series> cx, cy;
        for (int k = 0; k < 3; ++k) {
            cx.push_back(random_series(q->base()));
            cy.push_back(random_series(q->base()));
        }
        const auto& qa = q->algebra();
        const AlgebraElement x = qa.from_coords(cx), y = qa.from_coords(cy);
        CHECK(qa.norm(qa.mul(x, y)).congruent(qa.norm(x) * qa.norm(y)));
    }
}

TEST_CASE("algebra valuation on L") {
    const BaseDVR b = f2t();
    const auto l = imperfect::compositum(b);
    const auto& a = l->algebra();
    CHECK(algebra_valuation(*l, a.scalar(b.uniformizer_power(1))) == Valuation{2, true});
    CHECK(algebra_valuation(*l, l->presentation().generator("a1").value) == Valuation{0, true});
    CHECK(algebra_valuation(*l, l->uniformizer()) == Valuation{1, true});
    CHECK_FALSE(algebra_valuation(*l, a.zero()).exact);
}

TEST_CASE("discriminants") {
    const BaseDVR b = f2t();
    const auto k1 = imperfect::quadratic_extension(b, 1);
    CHECK(discriminant_of_algebra(k1->algebra()) == b.uniformizer_power(2));
    CHECK(discriminant_of_algebra(imperfect::field_f(b)->algebra()).valuation() == Valuation{4, true});
    CHECK(discriminant_of_algebra(imperfect::compositum(b)->algebra()).valuation() == Valuation{12, true});
    for (int i = 1; i <= 4; ++i)
        CHECK(discriminant_of_algebra(imperfect::quadratic_extension(b, i)->algebra()).valuation() ==
              Valuation{2 * i, true});
}

TEST_CASE("discriminant of a monogenic algebra equals the polynomial discriminant") {
    for (const auto& b : sample_bases(10)) {
        for (int trial = 0; trial < 30; ++trial) {
            const int n = uniform(1, 4);
            BasePolynomial f;
            for (int k = 0; k < n; ++k) f.push_back(random_series(b));
            f.push_back(b.one());
            const FiniteFlatAlgebra a = monogenic_algebra(b, f, "x");
            CHECK(discriminant_of_algebra(a).congruent(polynomial_discriminant(b, f)));
        }
    }
    // b^2 - 4c by hand in characteristic 5
    const BaseDVR b5(CoefficientField::prime_field(5), 8);
    const Series bb = b5.from_integer(2) + b5.uniformizer_power(1), cc = b5.from_integer(3);
    CHECK(polynomial_discriminant(b5, {cc, bb, b5.one()}).congruent(bb * bb - b5.from_integer(4) * cc));
}

TEST_CASE("embeddings matrix of L is the displayed matrix") {
    const BaseDVR b = f2t();
    const auto l = imperfect::compositum(b);
    const auto& a = l->algebra();
    const AlgebraElement a1 = a.basis(1), a2 = a.basis(2), d = a.basis(3), one = a.one();
    auto pi = [&](int k) { return a.scalar(b.uniformizer_power(k)); };
    auto sum = [&](std::initializer_list<AlgebraElement> xs) {
        AlgebraElement s = a.zero();
        for (const auto& x : xs) s = a.add(s, x);
        return s;
    };
    const std::vector<std::vector<AlgebraElement>> expected{
        {one, a1, a2, d},
        {one, sum({a1, pi(1)}), a2, sum({d, a.mul(pi(1), a2)})},
        {one, a1, sum({a2, pi(2)}), sum({d, a.mul(pi(2), a1)})},
        {one, sum({a1, pi(1)}), sum({a2, pi(2)}), sum({d, a.mul(pi(2), a1), a.mul(pi(1), a2), pi(3)})}};
    const Matrix<AlgebraElement> m = embeddings_matrix(*l, *l);
    REQUIRE(m.rows() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(a.congruent(m(i, j), expected[i][j]));
}

TEST_CASE("embeddings matrix: trivial extension and K_1 inside L") {
    const BaseDVR b = f2t();
    const auto k = imperfect::trivial_extension(b);
    const Matrix<AlgebraElement> m = embeddings_matrix(*k, *k);
    REQUIRE(m.rows() == 1);
    CHECK(k->algebra().congruent(m(0, 0), k->algebra().one()));

    const auto l = imperfect::compositum(b);
    const auto k1 = imperfect::quadratic_in_compositum(b, l);
    const Matrix<AlgebraElement> e = embeddings_matrix(*k1, *l);
    const auto& a = l->algebra();
    const AlgebraElement a1 = l->presentation().generator("a1").value;
    CHECK(a.congruent(e(0, 0), a.one()));
    CHECK(a.congruent(e(0, 1), a1));
    CHECK(a.congruent(e(1, 0), a.one()));
    CHECK(a.congruent(e(1, 1), a.add(a1, a.scalar(b.uniformizer_power(1)))));
    CHECK_THROWS_AS(embeddings_matrix(*k1, *k1), ValidationError);
}

TEST_CASE("square of the embeddings determinant is the discriminant") {
    const BaseDVR b = f2t();
    const auto l = imperfect::compositum(b);
    std::vector<std::pair<std::shared_ptr<const ExtensionData>, std::shared_ptr<const ExtensionData>>> pairs{
        {l, l}, {imperfect::quadratic_in_compositum(b, l), l}, {imperfect::field_f(b), nullptr}};
    for (int i = 1; i <= 4; ++i) pairs.push_back({imperfect::quadratic_extension(b, i), nullptr});
    for (const auto& m : families::cross_check_sample(16)) pairs.push_back({m.extension, nullptr});
    for (auto [e, m] : pairs) {
        if (!m) m = e;
        const ExtensionRing ring(m);
        const Valuation vdet = ring.valuation(determinant(ring, embeddings_matrix(*e, *m)));
        const Valuation vdisc = discriminant_of_algebra(e->algebra()).valuation();
        REQUIRE(vdet.exact);
        REQUIRE(vdisc.exact);
        CHECK_MESSAGE(2 * vdet.value == vdisc.value * m->ramification_index(), e->name());
    }
}

TEST_CASE("extension validation rejects inconsistent data") {
    const BaseDVR b = f2t();
    const Series c = b.constant(b.field().variable()), pi = b.uniformizer_power(1);
    auto base_options = [&](const Presentation& p) {
        ExtensionData::Options o;
        o.name = "K_1";
        o.uniformizer = p.algebra.scalar(pi);
        o.ramification_index = 1;
        o.residue_degree = 2;
        const AlgebraElement x = p.generators[0].value;
        o.generator_images = {{x}, {p.algebra.add(x, p.algebra.scalar(pi))}};
        return o;
    };
    const Presentation p = monogenic_presentation(b, {c, pi, b.one()}, "a1");
    CHECK_NOTHROW(ExtensionData::create(p, base_options(p)));

    auto o = base_options(p);
    o.ramification_index = 2;
    CHECK_THROWS_AS(ExtensionData::create(p, o), ValidationError);  // e*f != n

    o = base_options(p);
    o.generator_images[1] = {p.algebra.add(p.generators[0].value, p.algebra.scalar(pi * pi))};
    try {
        ExtensionData::create(p, o);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.path().find("embeddings[1]") != std::string::npos);
    }

    o = base_options(p);
    o.uniformizer = p.algebra.scalar(pi * pi);
    CHECK_THROWS_AS(ExtensionData::create(p, o), ValidationError);

    o = base_options(p);
    o.generator_images.push_back({p.generators[0].value, p.generators[0].value});
    CHECK_THROWS_AS(ExtensionData::create(p, o), ValidationError);
}

TEST_CASE("rebase rejects non-unimodular bases") {
    const BaseDVR b = f2t();
    const Series c = b.constant(b.field().variable()), pi = b.uniformizer_power(1);
    const Presentation p = monogenic_presentation(b, {c, pi, b.one()}, "a1");
    const auto& a = p.algebra;
    CHECK_THROWS_AS(rebase(p, {a.one(), a.scale(pi, a.basis(1))}, {"1", "pi*a1"}), ValidationError);
    CHECK_THROWS_AS(rebase(p, {a.basis(1), a.one()}, {"a1", "1"}), ValidationError);
    CHECK_NOTHROW(rebase(p, {a.one(), a.add(a.basis(1), a.one())}, {"1", "a1+1"}));
}

TEST_CASE("precision exhaustion is reported, not guessed") {
    const BaseDVR low = f2t(3);
    CHECK_THROWS_AS(imperfect::compositum(low), PrecisionError);
    const BaseDVR ok = f2t(13);
    CHECK_NOTHROW(imperfect::compositum(ok));
}

}  // TEST_SUITE

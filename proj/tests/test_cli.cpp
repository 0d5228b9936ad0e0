#include "doctest.h"

#include <fstream>

#include "conductor/cli/commands.hpp"
#include "conductor/cli/expression.hpp"
#include "conductor/imperfect_tower.hpp"

using namespace conductor;
using namespace conductor::cli;

namespace {

Json load_data(const std::string& file) {
    std::ifstream in(std::string(CONDUCTOR_DATA_DIR) + "/" + file);
    REQUIRE(in.good());
    return Json::parse(in);
}

std::string validation_path(const Json& doc) {
    try {
        Workbench::load(doc);
    } catch (const ValidationError& e) {
        return e.path();
    }
    return "<no error>";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("scalar expressions") {
    const BaseDVR b(CoefficientField::rational_functions(2, "t"), 16);
    const Series t = b.constant(b.field().variable()), pi = b.uniformizer_power(1);
    CHECK(evaluate_scalar("pi^2*t + t", b) == pi * pi * t + t);
    CHECK(evaluate_scalar("(1 + pi) / (1 + pi)", b).congruent(b.one()));
    CHECK(evaluate_scalar("-(t + 1)^2", b) == t * t + b.one());  // characteristic 2
    CHECK(evaluate_scalar("3", b) == b.one());
    CHECK(evaluate_scalar("pi / t", b) == pi * b.constant(b.field().variable().inverse()));
    CHECK(evaluate_scalar(" 2*pi^0 ", b).is_zero());
}

TEST_CASE("algebra expressions with bindings") {
    const BaseDVR b(CoefficientField::prime_field(3), 12);
    const FiniteFlatAlgebra a = monogenic_algebra(b, {b.from_integer(-1) * b.uniformizer_power(1), b.zero(), b.one()}, "x");
    const Bindings x{{"x", a.basis(1)}};
    CHECK(a.congruent(evaluate("x^2", a, x), a.scalar(b.uniformizer_power(1))));
    CHECK(a.congruent(evaluate("-x", a, x), a.neg(a.basis(1))));
    CHECK(a.congruent(evaluate("(x + 1)*(x - 1)", a, x), a.scalar(b.uniformizer_power(1) - b.one())));
}

TEST_CASE("malformed expressions are rejected with an offset") {
    const BaseDVR b(CoefficientField::prime_field(2), 8);
    for (const char* bad : {"pi +", "(pi", "pi)", "y", "pi / pi", "1 / 0", "pi^", "pi^99999", "", "2 $ 3",
                            "99999999999999999999"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(evaluate_scalar(bad, b), ValidationError);
    }
    try {
        evaluate_scalar("pi + * 1", b);
        FAIL("expected a parse error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
    }
}

TEST_CASE("shipped inputs load") {
    const Workbench w = Workbench::load(load_data("imperfect_tower.json"));
    CHECK(w.extension("L")->degree() == 4);
    CHECK(w.extension("K_1_in_L")->embeds_into(*w.extension("L")));
    CHECK(w.torus("T").kind == "resolution");
    CHECK(w.lattice("X_T").rank() == 2);
    CHECK(w.filtration("V4-break-2").chain.size() == 3);
    CHECK(w.group("V4").order() == 4);
    CHECK(Workbench::declared_precision(load_data("tame.json")) == 16);
    CHECK_NOTHROW(Workbench::load(load_data("complexes.json")));
    CHECK(Workbench::load(load_data("tame.json"), 40).base().precision() == 40);
    CHECK_THROWS_AS(w.extension("M"), ValidationError);
}

TEST_CASE("loader errors carry the offending path") {
    const Json tame = load_data("tame.json");
    Json doc = tame;
    doc["extensions"][0]["embeddings"][1]["x"] = "x + pi";
    CHECK(validation_path(doc).find("extensions[0].embeddings[1]") == 0);

    doc = tame;
    doc["extensions"][0]["e"] = 1;
    CHECK(validation_path(doc).find("extensions[0]") == 0);

    doc = tame;
    doc["extensions"].push_back(tame["extensions"][0]);
    CHECK(validation_path(doc).find("extensions[1]") == 0);

    doc = tame;
    doc["extensions"][0]["over"] = "nowhere";
    CHECK(validation_path(doc).find("extensions[0]") == 0);

    doc = tame;
    doc["extensions"][0]["polynomial"] = Json::array({"-pi", "0", "2"});
    CHECK(validation_path(doc).find("extensions[0].polynomial") == 0);

    doc = tame;
    doc["tori"][0]["extension"] = "R";
    CHECK(validation_path(doc).find("tori[0]") == 0);

    doc = tame;
    doc["galois"]["filtrations"][0]["chain"] = Json::array({Json::array({0, 1})});
    CHECK(validation_path(doc).find("galois.filtrations[0]") == 0);

    doc = tame;
    doc["galois"]["lattices"][0]["group"] = "C3";
    CHECK(validation_path(doc).find("galois.lattices[0]") == 0);

    doc = tame;
    doc["base"]["characteristic"] = 4;
    CHECK(validation_path(doc).find("base") == 0);

    doc = load_data("complexes.json");
    doc["complexes"][0]["differentials"][1] = Json::array({Json::array({"1", "1"})});
    CHECK(validation_path(doc).find("complexes[0]") == 0);
}

TEST_CASE("extension dependency cycles are reported") {
    Json doc = load_data("imperfect_tower.json");
    for (auto& e : doc["extensions"])
        if (e["name"] == "K_1") e["target"] = "K_1_in_L";
    CHECK(validation_path(doc).find("extensions") == 0);
}

TEST_CASE("examples pass") {
    for (const auto& name : example_names()) {
        CAPTURE(name);
        const CommandResult r = run_examples(name);
        CHECK(r.exit_code == kSuccess);
        CHECK(r.output["status"] == "PASS");
        for (const auto& c : r.output["checks"]) CHECK(c["ok"] == true);
    }
    const CommandResult bad = run_examples("lemma-9.9");
    CHECK(bad.exit_code == kMismatch);
    CHECK(bad.output["known"].size() == 5);
}

TEST_CASE("corollary example carries both paths") {
    const Json out = run_examples("corollary-4.5").output;
    CHECK(out["details"]["direct"]["defect"] == "1/1");
    CHECK(out["details"]["direct"]["isogeny_invariant"] == false);
    CHECK(out["details"]["direct"]["c(T)"] == "4/1");
    CHECK(out["details"]["direct"]["c(T_1 x T_2)"] == "3/1");
    CHECK(out["details"]["formula"]["defect"] == "0/1");
    CHECK(out["details"]["formula"]["isogeny_invariant"] == true);
}

TEST_CASE("conductor command") {
    const Json doc = load_data("imperfect_tower.json");
    CommandResult r = run_conductor(doc, "Res_L", "discriminant");
    CHECK(r.exit_code == kSuccess);
    CHECK(r.output["report"]["value"] == "6/1");

    r = run_conductor(doc, "Res_L", "lie-coker");
    CHECK(r.output["report"]["value"] == "6/1");
    CHECK(r.output["report"]["witnesses"]["composition_lengths"] == Json::array({2, 4, 6}));

    r = run_conductor(doc, "G_m", "all");
    CHECK(r.exit_code == kSuccess);
    CHECK(r.output["value"] == "0/1");

    r = run_conductor(doc, "Res_K_1", "all");
    CHECK(r.output["agree"] == true);
    CHECK(r.output["value"] == "1/1");
    CHECK(r.output["reports"].size() == 2);

    r = run_conductor(doc, "Res_K_1_split_by_L", "lie-coker");
    CHECK(r.output["report"]["value"] == "1/1");

    r = run_conductor(doc, "T", "resolution");
    CHECK(r.output["report"]["value"] == "4/1");

    r = run_conductor(load_data("tame.json"), "Res_Q", "all");
    CHECK(r.exit_code == kSuccess);
    CHECK(r.output["reports"].size() == 3);
    CHECK(r.output["value"] == "1/2");

    CHECK(run_conductor(doc, "Res_L", "galois").exit_code == kMismatch);
    CHECK(run_conductor(doc, "missing", "all").exit_code == kMismatch);
}

TEST_CASE("precision exhaustion reports the least sufficient precision") {
    const CommandResult r = run_conductor(load_data("imperfect_tower.json"), "Res_L", "discriminant", 4);
    CHECK(r.exit_code == kPrecisionExhausted);
    CHECK(r.output["minimal_sufficient_precision"] == 13);
    CHECK(run_conductor(load_data("imperfect_tower.json"), "Res_L", "discriminant", 13).exit_code == kSuccess);

    const CommandResult synthetic = with_precision_search(
        [](int n) -> CommandResult {
            if (n < 37) throw PrecisionError("not enough digits");
            return {Json::object(), kSuccess};
        },
        5);
    CHECK(synthetic.exit_code == kPrecisionExhausted);
    CHECK(synthetic.output["minimal_sufficient_precision"] == 37);

    const CommandResult hopeless = with_precision_search(
        [](int) -> CommandResult { throw PrecisionError("never enough"); }, 8, 64);
    CHECK(hopeless.exit_code == kPrecisionExhausted);
    CHECK(hopeless.output["minimal_sufficient_precision"].is_null());
}

TEST_CASE("complex command") {
    const Json doc = load_data("complexes.json");
    CommandResult r = run_complex(doc, "two-term");
    CHECK(r.exit_code == kSuccess);
    CHECK(r.output["chi"] == 2);
    CHECK(r.output["gamma"] == 2);
    r = run_complex(doc, "split-exact");
    CHECK(r.output["chi"] == 0);
    CHECK(r.output["gamma"] == 0);
    r = run_complex(doc, "three-term");
    CHECK(r.output["cohomology_lengths"] == Json::array({0, 1, 1}));
    CHECK(r.output["chi"] == 0);
    r = run_complex(doc, "over-E");
    CHECK(r.output["chi"] == 3);
    CHECK(r.output["gamma"] == 3);
    CHECK(run_complex(doc, "absent").exit_code == kMismatch);
}

TEST_CASE("artin command") {
    const Json doc = load_data("imperfect_tower.json");
    CommandResult r = run_artin(doc, "Z[C2]", "C2-wild");
    CHECK(r.output["artin_conductor"] == "2/1");
    CHECK(r.output["torus_conductor"] == "1/1");
    r = run_artin(doc, "Z", "C2-wild");
    CHECK(r.output["artin_conductor"] == "0/1");
    r = run_artin(load_data("tame.json"), "Z[C2]", "tame");
    CHECK(r.output["artin_conductor"] == "1/1");
    CHECK(r.output["torus_conductor"] == "1/2");
    r = run_artin(doc, "X_T", "V4-break-2");
    CHECK(r.output["artin_conductor"] == "4/1");
    CHECK(run_artin(doc, "X_T", "C2-wild").exit_code == kMismatch);  // different groups
}

TEST_CASE("output is byte-identical across runs") {
    const Json doc = load_data("imperfect_tower.json");
    CHECK(run_conductor(doc, "T", "all").output.dump(2) == run_conductor(doc, "T", "all").output.dump(2));
    CHECK(run_examples("lemma-4.4").output.dump(2) == run_examples("lemma-4.4").output.dump(2));
    CHECK(run_complex(load_data("complexes.json"), "over-E").output.dump() ==
          run_complex(load_data("complexes.json"), "over-E").output.dump());
}

}  // TEST_SUITE

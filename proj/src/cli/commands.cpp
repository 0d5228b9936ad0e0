#include "conductor/cli/commands.hpp"

#include <algorithm>

#include "conductor/errors.hpp"
#include "conductor/families.hpp"
#include "conductor/imperfect_tower.hpp"

namespace conductor::cli {

namespace {

std::string q(const Rational& r) { return format_rational(r); }

Json filtration_json(const RamificationData& r) {
    Json chain = Json::array();
    for (const auto& gi : r.chain) {
        Json labels = Json::array();
        for (int g : gi) labels.push_back(r.group.labels()[g]);
        chain.push_back(labels);
    }
    return chain;
}

// Accumulates expected-vs-computed rows for the examples.
class Checklist {
  public:
    void add(const std::string& quantity, const Json& expected, const Json& computed) {
        const bool ok = expected == computed;
        all_ok_ = all_ok_ && ok;
        rows_.push_back(Json{{"quantity", quantity}, {"expected", expected}, {"computed", computed}, {"ok", ok}});
    }
    bool ok() const { return all_ok_; }
    Json rows() const { return rows_; }

  private:
    Json rows_ = Json::array();
    bool all_ok_ = true;
};

CommandResult finish(const std::string& name, int precision, Checklist& checks, Json details) {
    Json out;
    out["example"] = name;
    out["precision"] = precision;
    out["checks"] = checks.rows();
    out["details"] = std::move(details);
    out["status"] = checks.ok() ? "PASS" : "MISMATCH";
    return {out, checks.ok() ? kSuccess : kMismatch};
}

CommandResult example_induced_quadratics(int n) {
    const BaseDVR base = imperfect::tower_base(n);
    const auto trivial = imperfect::trivial_extension(base);
    Checklist checks;
    Json details = Json::array();
    for (int i = 1; i <= 2; ++i) {
        const auto k = imperfect::quadratic_extension(base, i);
        const ConductorReport disc = conductor_induced_discriminant(*k);
        const ConductorReport res =
            conductor_from_resolution({"T_" + std::to_string(i), {trivial}, {k}, "0 -> G_m -> Res G_m -> T_i -> 0", {}});
        const std::string t = "c(T_" + std::to_string(i) + ")";
        checks.add(t + " via discriminant", q(Rational(i)), q(disc.value));
        checks.add(t + " via resolution", q(Rational(i)), q(res.value));
        details.push_back(Json{{"torus", "T_" + std::to_string(i)}, {"discriminant", report_json(disc)},
                               {"resolution", report_json(res)}});
    }
    return finish("lemma-4.3", n, checks, details);
}

CommandResult example_compositum(int n) {
    const BaseDVR base = imperfect::tower_base(n);
    const auto l = imperfect::compositum(base);
    const auto k1 = imperfect::quadratic_in_compositum(base, l);
    const ConductorReport coker = conductor_induced_liecoker(*l, l);
    const ConductorReport disc = conductor_induced_discriminant(*l);
    const ConductorReport k1_coker = conductor_induced_liecoker(*k1, l);
    Checklist checks;
    checks.add("cokernel length over O_L", 12, *coker.cokernel_length);
    checks.add("composition lengths", Json::array({2, 4, 6}), coker.composition_lengths);
    checks.add("c(Res_L G_m) via lie-coker", q(Rational(6)), q(coker.value));
    checks.add("c(Res_L G_m) via discriminant", q(Rational(6)), q(disc.value));
    checks.add("c(Res_K_1 G_m) via lie-coker in L", q(Rational(1)), q(k1_coker.value));
    const Matrix<AlgebraElement> m = embeddings_matrix(*l, *l);
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(l->algebra().format(m(i, j)));
        rows.push_back(row);
    }
    return finish("lemma-4.4", n, checks,
                  Json{{"embeddings_matrix", rows}, {"lie_coker", report_json(coker)},
                       {"discriminant", report_json(disc)}, {"K_1_in_L", report_json(k1_coker)}});
}

CommandResult example_non_additivity(int n) {
    const imperfect::Tower t = imperfect::build_tower(n, 2);
    const imperfect::CharacterData cd = imperfect::character_data();
    const ConductorReport cf = conductor_induced_discriminant(*t.f);
    const ConductorReport ct = conductor_from_resolution(t.resolution);
    const Rational c1 = conductor_induced_discriminant(*t.quadratics[0]).value;
    const Rational c2 = conductor_induced_discriminant(*t.quadratics[1]).value;
    const Rational direct_defect = additivity_defect(c2, ct.value, c1);

    const Rational formula_defect =
        additivity_from_formula(cd.sub, cd.total, cd.quotient, cd.inclusion, cd.projection, cd.filtration);
    const IsogenyCheck iso =
        isogeny_invariance_check(cd.total, GLattice::direct_sum(cd.sub, cd.quotient), cd.isogeny, cd.filtration);

    Checklist checks;
    checks.add("c(Res_F G_m)", q(Rational(2)), q(cf.value));
    checks.add("c(T)", q(Rational(4)), q(ct.value));
    checks.add("c(T_1) + c(T_2)", q(Rational(3)), q(c1 + c2));
    checks.add("direct additivity defect", q(Rational(1)), q(direct_defect));
    checks.add("direct isogeny invariance", false, ct.value == c1 + c2);
    checks.add("formula additivity defect", q(Rational(0)), q(formula_defect));
    checks.add("formula isogeny invariance", true, iso.invariant);

    Json details;
    details["direct"] = Json{{"c(T)", q(ct.value)},
                             {"c(T_1)", q(c1)},
                             {"c(T_2)", q(c2)},
                             {"c(T_1 x T_2)", q(c1 + c2)},
                             {"defect", q(direct_defect)},
                             {"isogeny_invariant", ct.value == c1 + c2},
                             {"resolution", report_json(ct)}};
    details["formula"] = Json{{"filtration", filtration_json(cd.filtration)},
                              {"a(X*(T))", q(iso.conductor_large)},
                              {"a(X*(T_1) + X*(T_2))", q(iso.conductor_small)},
                              {"isogeny_degree", iso.index},
                              {"defect", q(formula_defect)},
                              {"isogeny_invariant", iso.invariant}};
    return finish("corollary-4.5", n, checks, details);
}

CommandResult example_artin_crosscheck(int n) {
    Checklist checks;
    Json rows = Json::array();
    for (const auto& m : families::cross_check_sample(n)) {
        const ConductorReport d = conductor_induced_discriminant(*m.extension);
        const ConductorReport l = conductor_induced_liecoker(*m.extension, m.extension);
        const ConductorReport a = conductor_induced_artin(*m.extension);
        checks.add(m.extension->name() + " formula = discriminant", q(d.value), q(a.value));
        checks.add(m.extension->name() + " lie-coker = discriminant", q(d.value), q(l.value));
        rows.push_back(Json{{"extension", m.extension->name()},
                            {"family", m.family},
                            {"discriminant", q(d.value)},
                            {"lie-coker", q(l.value)},
                            {"artin-formula", q(a.value)},
                            {"filtration", a.filtration}});
    }
    // The quadratic K_1 of the imperfect tower has the same numbers as a
    // wildly ramified quadratic with break 2, though it is not ramified in
    // the classical sense.
    const FiniteGroup c2 = FiniteGroup::cyclic(2);
    const RamificationData wild{c2, {{0, 1}, {0, 1}, {0}}};
    const Rational a = artin_conductor(GLattice::regular(c2), wild);
    const Rational c_k1 = conductor_induced_discriminant(*imperfect::quadratic_extension(imperfect::tower_base(n), 1)).value;
    checks.add("a(Z[C_2]) with G_0 = G_1 = G", q(Rational(2)), q(a));
    checks.add("half of it equals c(T_1)", q(c_k1), q(a / Rational(2)));
    return finish("artin-crosscheck", n, checks, Json{{"extensions", rows}});
}

CommandResult example_gamma_chi(int n) {
    const BaseRing ring(BaseDVR(CoefficientField::prime_field(2), n));
    const BaseDVR& b = ring.dvr();
    const Series pi = b.uniformizer_power(1), one = b.one(), zero = b.zero();
    struct Case {
        std::string name;
        BoundedComplex<Series> c;
        std::vector<long> lengths;
        long chi;
    };
    std::vector<Case> cases;
    cases.push_back({"three-term", {1, {1, 2, 1}, {Matrix<Series>(2, 1, {pi, zero}), Matrix<Series>(1, 2, {zero, pi})}}, {0, 1, 1}, 0});
    cases.push_back({"two-term", {1, {2, 2}, {Matrix<Series>(2, 2, {pi, one, zero, pi})}}, {0, 2}, 2});
    cases.push_back({"split-exact", {1, {1, 2, 1}, {Matrix<Series>(2, 1, {one, zero}), Matrix<Series>(1, 2, {zero, one})}}, {0, 0, 0}, 0});
    Checklist checks;
    Json rows = Json::array();
    for (const auto& c : cases) {
        const auto h = cohomology_lengths(ring, c.c);
        const long chi = complex_chi(ring, c.c), gamma = complex_gamma(ring, c.c);
        checks.add(c.name + " cohomology lengths", c.lengths, h);
        checks.add(c.name + " chi", c.chi, chi);
        checks.add(c.name + " gamma", c.chi, gamma);
        rows.push_back(Json{{"complex", c.name}, {"cohomology_lengths", h}, {"chi", chi}, {"gamma", gamma}});
    }
    // The Lie lattice comparison for Res_L G_m as a two-term complex over
    // O_L: gamma / e recovers the conductor.
    const BaseDVR tb = imperfect::tower_base(n);
    const auto l = imperfect::compositum(tb);
    const ExtensionRing lring(l);
    const BoundedComplex<AlgebraElement> cl{1, {4, 4}, {embeddings_matrix(*l, *l)}};
    const BoundedComplex<Series> ck{1, {4, 4}, {identity_matrix(BaseRing(tb), 4)}};
    const long gl = complex_gamma(lring, cl);
    const Rational defect = gamma_defect(BaseRing(tb), ck, lring, cl, l->ramification_index());
    checks.add("gamma of the O_L embedding complex", 12, gl);
    checks.add("chi of the O_L embedding complex", 12, complex_chi(lring, cl));
    checks.add("gamma defect (1/e) gamma_L - gamma_K", q(Rational(6)), q(defect));
    return finish("gamma-chi", n, checks, Json{{"complexes", rows}, {"lie_gamma", gl}, {"gamma_defect", q(defect)}});
}

CommandResult precision_exhausted(const std::string& what, int n, std::optional<int> minimal) {
    Json out;
    out["error"] = "precision exhausted";
    out["message"] = what;
    out["precision"] = n;
    out["minimal_sufficient_precision"] = minimal ? Json(*minimal) : Json(nullptr);
    return {out, kPrecisionExhausted};
}

CommandResult failure(const std::string& kind, const std::exception& e, const std::string& path = "") {
    Json out;
    out["error"] = kind;
    if (!path.empty()) out["path"] = path;
    out["message"] = e.what();
    return {out, kMismatch};
}

}  // namespace

Json report_json(const ConductorReport& r) {
    Json j;
    j["subject"] = r.subject;
    j["method"] = method_tag(r.method);
    j["value"] = q(r.value);
    Json w = Json::object();
    if (r.discriminant_valuation) w["discriminant_valuation"] = *r.discriminant_valuation;
    if (r.cokernel_length) w["cokernel_length"] = *r.cokernel_length;
    if (r.ramification_index) w["ramification_index"] = *r.ramification_index;
    if (r.method == ConductorMethod::LieCoker) {
        w["composition_lengths"] = r.composition_lengths;
        w["splitting_field"] = r.splitting_field;
    }
    if (r.artin_conductor) {
        w["artin_conductor"] = q(*r.artin_conductor);
        w["filtration"] = r.filtration;
    }
    if (!r.components.empty()) {
        Json comps = Json::array();
        for (const auto& [name, value] : r.components) comps.push_back(Json{{"extension", name}, {"value", q(value)}});
        w["components"] = comps;
    }
    j["witnesses"] = w;
    j["assumptions"] = r.assumptions;
    return j;
}

const std::vector<std::string>& example_names() {
    static const std::vector<std::string> names{"lemma-4.3", "lemma-4.4", "corollary-4.5", "artin-crosscheck",
                                                "gamma-chi"};
    return names;
}

CommandResult with_precision_search(const std::function<CommandResult(int)>& attempt, int start, int ceiling) {
    auto succeeds = [&](int n) {
        try {
            return attempt(n).exit_code != kPrecisionExhausted;
        } catch (const PrecisionError&) {
            return false;
        }
    };
    try {
        CommandResult r = attempt(start);
        if (r.exit_code != kPrecisionExhausted) return r;
        throw PrecisionError(r.output.value("message", "precision exhausted"));
    } catch (const PrecisionError& e) {
        int lo = start, hi = -1;
        for (int n = std::max(2 * start, 2); n <= ceiling; n *= 2) {
            if (succeeds(n)) {
                hi = n;
                break;
            }
            lo = n;
        }
        if (hi < 0) return precision_exhausted(e.what(), start, std::nullopt);
        while (hi - lo > 1) {
            const int mid = lo + (hi - lo) / 2;
            (succeeds(mid) ? hi : lo) = mid;
        }
        return precision_exhausted(e.what(), start, hi);
    } catch (const ValidationError& e) {
        return failure("validation failed", e, e.path());
    } catch (const std::exception& e) {
        return failure("error", e);
    }
}

CommandResult run_examples(const std::string& name, std::optional<int> precision) {
    const auto& names = example_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        Json out{{"error", "unknown example"}, {"message", "unknown example '" + name + "'"}, {"known", names}};
        return {out, kMismatch};
    }
    return with_precision_search(
        [&](int n) -> CommandResult {
            if (name == "lemma-4.3") return example_induced_quadratics(n);
            if (name == "lemma-4.4") return example_compositum(n);
            if (name == "corollary-4.5") return example_non_additivity(n);
            if (name == "artin-crosscheck") return example_artin_crosscheck(n);
            return example_gamma_chi(n);
        },
        precision.value_or(32));
}

CommandResult run_conductor(const Json& doc, const std::string& torus, const std::string& method,
                            std::optional<int> precision) {
    return with_precision_search(
        [&](int n) -> CommandResult {
            const Workbench w = Workbench::load(doc, n);
            const TorusEntry& t = w.torus(torus);
            std::vector<ConductorMethod> methods;
            const bool all = method == "all";
            if (all) {
                if (t.kind == "induced")
                    methods = {ConductorMethod::Discriminant, ConductorMethod::LieCoker, ConductorMethod::ArtinFormula};
                else
                    methods = {ConductorMethod::Resolution};
            } else {
                try {
                    methods = {parse_method(method)};
                } catch (const std::invalid_argument& e) {
                    throw ValidationError("--method", e.what());
                }
            }
            Json reports = Json::array(), skipped = Json::array();
            std::vector<Rational> values;
            for (ConductorMethod m : methods) {
                std::string not_applicable;
                if (t.kind == "resolution" && m != ConductorMethod::Resolution)
                    not_applicable = "a resolution torus is computed from its resolution";
                if (t.kind == "induced" && m == ConductorMethod::Resolution)
                    not_applicable = "an induced torus has no resolution entry";
                if (t.kind == "induced" && m == ConductorMethod::ArtinFormula) {
                    const auto e = w.extension(t.extension);
                    if (e->residue_degree() != 1)
                        not_applicable = "the formula needs a totally ramified extension (f = 1)";
                    else if (!e->embeds_into(*e))
                        not_applicable = "the formula needs the embeddings to land in the extension itself";
                }
                if (!not_applicable.empty()) {
                    if (!all) throw ValidationError("--method", method_tag(m) + " is not applicable: " + not_applicable);
                    skipped.push_back(Json{{"method", method_tag(m)}, {"reason", not_applicable}});
                    continue;
                }
                ConductorReport r;
                if (m == ConductorMethod::Resolution) {
                    ResolutionSpec spec{t.name, {w.extension(t.inner)}, {w.extension(t.outer)}, t.citation, {}};
                    if (!t.lattice.empty()) spec.quotient_lattice = w.lattice(t.lattice);
                    r = conductor_from_resolution(spec);
                } else {
                    const auto e = w.extension(t.extension);
                    if (m == ConductorMethod::Discriminant) r = conductor_induced_discriminant(*e);
                    else if (m == ConductorMethod::LieCoker)
                        r = conductor_induced_liecoker(*e, e->explicit_target() ? e->explicit_target() : e);
                    else r = conductor_induced_artin(*e);
                }
                r.subject = t.name;
                values.push_back(r.value);
                reports.push_back(report_json(r));
            }
            Json out;
            out["torus"] = t.name;
            out["precision"] = n;
            if (!all) {
                out["report"] = reports.at(0);
                return {out, kSuccess};
            }
            const bool agree = std::all_of(values.begin(), values.end(), [&](const Rational& v) { return v == values.front(); });
            out["reports"] = reports;
            out["skipped"] = skipped;
            out["agree"] = agree;
            if (agree && !values.empty()) out["value"] = q(values.front());
            return {out, agree ? kSuccess : kMismatch};
        },
        precision.value_or(Workbench::declared_precision(doc)));
}

CommandResult run_complex(const Json& doc, const std::string& name, std::optional<int> precision) {
    return with_precision_search(
        [&](int n) -> CommandResult {
            const Workbench w = Workbench::load(doc, n);
            const ComplexEntry& c = w.complex(name);
            std::vector<long> h;
            long chi = 0, gamma = 0;
            int first = 1;
            if (const auto* bc = std::get_if<BoundedComplex<Series>>(&c.complex)) {
                const BaseRing ring(w.base());
                h = cohomology_lengths(ring, *bc);
                chi = complex_chi(ring, *bc);
                gamma = complex_gamma(ring, *bc);
                first = bc->first_degree;
            } else {
                const auto& ec = std::get<BoundedComplex<AlgebraElement>>(c.complex);
                const ExtensionRing ring(w.extension(c.ring));
                h = cohomology_lengths(ring, ec);
                chi = complex_chi(ring, ec);
                gamma = complex_gamma(ring, ec);
                first = ec.first_degree;
            }
            Json out;
            out["complex"] = c.name;
            out["ring"] = c.ring;
            out["precision"] = n;
            out["first_degree"] = first;
            out["cohomology_lengths"] = h;
            out["chi"] = chi;
            out["gamma"] = gamma;
            out["agree"] = chi == gamma;
            return {out, chi == gamma ? kSuccess : kMismatch};
        },
        precision.value_or(Workbench::declared_precision(doc)));
}

CommandResult run_artin(const Json& doc, const std::string& lattice, const std::string& filtration,
                        std::optional<int> precision) {
    return with_precision_search(
        [&](int n) -> CommandResult {
            const Workbench w = Workbench::load(doc, n);
            const GLattice& l = w.lattice(lattice);
            const RamificationData& r = w.filtration(filtration);
            if (!(l.group() == r.group))
                throw ValidationError("--filtration", "lattice and filtration are over different groups");
            const Rational a = artin_conductor(l, r);
            Json out;
            out["lattice"] = lattice;
            out["filtration"] = filtration;
            out["role"] = l.role() == LatticeRole::Characters ? "characters" : "cocharacters";
            out["rank"] = l.rank();
            out["chain"] = filtration_json(r);
            out["artin_conductor"] = q(a);
            out["torus_conductor"] = q(a / Rational(2));
            return {out, kSuccess};
        },
        precision.value_or(Workbench::declared_precision(doc)));
}

}  // namespace conductor::cli

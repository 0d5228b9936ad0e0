#include "conductor/torus.hpp"

#include <stdexcept>

#include "conductor/errors.hpp"
#include "conductor/smith.hpp"

namespace conductor {

std::string method_tag(ConductorMethod m) {
    switch (m) {
        case ConductorMethod::Discriminant: return "discriminant";
        case ConductorMethod::LieCoker: return "lie-coker";
        case ConductorMethod::ArtinFormula: return "artin-formula";
        case ConductorMethod::Resolution: return "resolution";
    }
    return "?";
}

ConductorMethod parse_method(const std::string& tag) {
    for (auto m : {ConductorMethod::Discriminant, ConductorMethod::LieCoker, ConductorMethod::ArtinFormula,
                   ConductorMethod::Resolution})
        if (method_tag(m) == tag) return m;
    throw std::invalid_argument("unknown method '" + tag + "'");
}

ConductorReport conductor_induced_discriminant(const ExtensionData& e) {
    Valuation v = discriminant_of_algebra(e.algebra()).valuation();
    if (!v.exact)
        throw PrecisionError("discriminant of " + e.name() + " vanishes to precision " + std::to_string(v.value));
    ConductorReport r;
    r.subject = e.name();
    r.method = ConductorMethod::Discriminant;
    r.value = Rational(v.value, 2);
    r.discriminant_valuation = v.value;
    r.assumptions = e.assumptions();
    return r;
}

ConductorReport conductor_induced_liecoker(const ExtensionData& e, const std::shared_ptr<const ExtensionData>& m) {
    if (!m) throw std::invalid_argument("no splitting extension given");
    if (!e.embeds_into(*m))
        throw ValidationError("splitting", e.name() + " does not embed into " + m->name());
    ExtensionRing ring(m);
    const Matrix<AlgebraElement> mat = embeddings_matrix(e, *m);
    const ElementaryDivisors d = smith_normal_form(ring, mat);
    if (!d.full_row_rank())
        throw PrecisionError("embedding matrix of " + e.name() + " is singular to working precision");
    ConductorReport r;
    r.subject = e.name();
    r.method = ConductorMethod::LieCoker;
    r.cokernel_length = d.total();
    r.ramification_index = m->ramification_index();
    r.value = Rational(d.total(), m->ramification_index());
    for (int v : d.valuations)
        if (v > 0) r.composition_lengths.push_back(v);
    r.splitting_field = m->name();
    r.assumptions = e.assumptions();
    return r;
}

ConductorReport conductor_induced_artin(const ExtensionData& e) {
    RamificationData ram = ramification_filtration_from_extension(e);
    const GLattice regular = GLattice::regular(ram.group);
    ConductorReport r;
    r.subject = e.name();
    r.method = ConductorMethod::ArtinFormula;
    r.artin_conductor = artin_conductor(regular, ram);
    r.value = *r.artin_conductor / Rational(2);
    r.filtration = ram.chain;
    r.assumptions = e.assumptions();
    return r;
}

ConductorReport conductor_from_resolution(const ResolutionSpec& spec) {
    if (!spec.inner.extension || !spec.outer.extension) throw ValidationError("resolution", "missing extension");
    const ExtensionData& f = *spec.inner.extension;
    const ExtensionData& l = *spec.outer.extension;
    if (spec.quotient_lattice && static_cast<std::size_t>(l.degree() - f.degree()) != spec.quotient_lattice->rank())
        throw ValidationError("lattice", "rank " + std::to_string(spec.quotient_lattice->rank()) +
                                             " does not equal [L:K] - [F:K] = " +
                                             std::to_string(l.degree() - f.degree()));
    const ConductorReport outer = conductor_induced_discriminant(l);
    const ConductorReport inner = conductor_induced_discriminant(f);
    ConductorReport r;
    r.subject = spec.name;
    r.method = ConductorMethod::Resolution;
    r.value = outer.value - inner.value;
    if (r.value < 0) throw ValidationError("resolution", "resolution yields a negative conductor");
    r.components = {{l.name(), outer.value}, {f.name(), inner.value}};
    r.assumptions.push_back("exact Neron sequence: " + spec.exactness_citation);
    for (const auto* ext : {&l, &f})
        for (const auto& a : ext->assumptions()) r.assumptions.push_back(ext->name() + ": " + a);
    return r;
}

Rational additivity_defect(const Rational& c_sub, const Rational& c_total, const Rational& c_quotient) {
    return c_total - c_sub - c_quotient;
}

Rational gamma_defect(const BaseRing& base, const BoundedComplex<Series>& ck, const ExtensionRing& ring,
                      const BoundedComplex<AlgebraElement>& cl, int e) {
    if (e <= 0) throw std::invalid_argument("ramification index must be positive");
    return Rational(complex_gamma(ring, cl), e) - Rational(complex_gamma(base, ck));
}

}  // namespace conductor

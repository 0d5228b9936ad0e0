#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conductor/artin.hpp"
#include "conductor/complex.hpp"
#include "conductor/extension.hpp"
#include "conductor/rational.hpp"

namespace conductor {

enum class ConductorMethod { Discriminant, LieCoker, ArtinFormula, Resolution };

std::string method_tag(ConductorMethod m);
// Throws std::invalid_argument for unknown tags.
ConductorMethod parse_method(const std::string& tag);

// A conductor together with the intermediate data that produced it.
struct ConductorReport {
    std::string subject;
    ConductorMethod method = ConductorMethod::Discriminant;
    Rational value;

    // discriminant
    std::optional<int> discriminant_valuation;
    // lie-coker: length over O_M, e_{M/K}, and the nonzero elementary
    // divisor valuations (the composition factors O_M / m^v).
    std::optional<long> cokernel_length;
    std::optional<int> ramification_index;
    std::vector<int> composition_lengths;
    std::string splitting_field;
    // artin-formula
    std::optional<Rational> artin_conductor;
    std::vector<std::vector<int>> filtration;
    // resolution
    std::vector<std::pair<std::string, Rational>> components;

    std::vector<std::string> assumptions;
};

// Res_{L/K} G_m for the extension L.
struct InducedTorusSpec {
    std::shared_ptr<const ExtensionData> extension;
};

// 0 -> Res_{F/K} G_m -> Res_{L/K} G_m -> T -> 0, whose induced sequence of
// Neron Lie lattices is assumed exact (`exactness_citation` records why).
struct ResolutionSpec {
    std::string name;
    InducedTorusSpec inner;
    InducedTorusSpec outer;
    std::string exactness_citation;
    std::optional<GLattice> quotient_lattice;
};

// 1/2 v_K(disc O_L).
ConductorReport conductor_induced_discriminant(const ExtensionData& e);

// (1/e_{M/K}) length_{O_M} coker(O_L (x) O_M -> O_M^n). E's embeddings must
// land in M.
ConductorReport conductor_induced_liecoker(const ExtensionData& e, const std::shared_ptr<const ExtensionData>& m);

// 1/2 a(Z[G]) along the filtration of a totally ramified Galois extension.
ConductorReport conductor_induced_artin(const ExtensionData& e);

// c(Res_L) - c(Res_F), both by the discriminant method.
ConductorReport conductor_from_resolution(const ResolutionSpec& spec);

// c(B) - c(T) - c(A) for 0 -> T -> B -> A -> 0.
Rational additivity_defect(const Rational& c_sub, const Rational& c_total, const Rational& c_quotient);

// (1/e) gamma(C_L) - gamma(C_K).
Rational gamma_defect(const BaseRing& base, const BoundedComplex<Series>& ck, const ExtensionRing& ring,
                      const BoundedComplex<AlgebraElement>& cl, int e);

}  // namespace conductor

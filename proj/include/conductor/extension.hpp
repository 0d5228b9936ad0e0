#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conductor/algebra.hpp"
#include "conductor/valued_ring.hpp"

namespace conductor {

// A named algebra generator together with the monic polynomial it satisfies.
// The polynomial's coefficients are elements of the same algebra lying in
// the subring generated by earlier generators; lowest degree first.
struct Generator {
    std::string name;
    AlgebraElement value;
    std::vector<AlgebraElement> defining_polynomial;
};

// A finite flat algebra plus a description of its basis as polynomials in
// the generators: b_k = sum_m basis_in_monomials(k, m) * monomial_m, where
// monomial_m = prod_g gen_g^{monomials[m][g]}. This is what lets a ring map
// be specified by the images of the generators alone.
struct Presentation {
    FiniteFlatAlgebra algebra;
    std::vector<Generator> generators;
    std::vector<std::vector<int>> monomials;
    Matrix<Series> basis_in_monomials;

    const Generator& generator(const std::string& name) const;
    bool has_generator(const std::string& name) const;
};

// O_K[x]/(f).
Presentation monogenic_presentation(const BaseDVR& base, const BasePolynomial& f, const std::string& generator);

// lower[x]/(g) for monic g with coefficients in lower's algebra, as a free
// O_K-algebra with basis {b_i * x^j} (index j * rank(lower) + i).
// A linear g returns `lower` unchanged.
Presentation tower_compositum(const Presentation& lower, const std::vector<AlgebraElement>& g,
                              const std::string& generator);

// Same algebra in a new basis; `basis` holds the new basis elements in old
// coordinates and must be unimodular with basis[0] = 1.
Presentation rebase(const Presentation& p, const std::vector<AlgebraElement>& basis,
                    std::vector<std::string> labels);

// Evaluates sum_k coeffs[k] * y^k.
AlgebraElement evaluate_polynomial(const FiniteFlatAlgebra& algebra, const std::vector<AlgebraElement>& coeffs,
                                   const AlgebraElement& y);

// A ring map O_L -> O_M fixing O_K, stored as the images of O_L's basis.
struct Embedding {
    std::vector<AlgebraElement> basis_images;
};

// O_L with the ramification data and conjugate embeddings supplied by the
// caller. Embeddings land in `target()` (O_L itself when none is given).
class ExtensionData {
  public:
    struct Options {
        std::string name;
        AlgebraElement uniformizer;
        int ramification_index = 1;
        int residue_degree = 1;
        // One entry per embedding, one image per generator (in presentation
        // order), written in the target algebra.
        std::vector<std::vector<AlgebraElement>> generator_images;
        std::shared_ptr<const ExtensionData> target;
        std::vector<std::string> assumptions;
    };

    // Validates the algebra axioms, e*f = n, v_L(pi_L) = 1, v_L(pi) = e and
    // every embedding (unit, multiplicativity, generator roots). Throws
    // ValidationError with a field path on failure.
    static std::shared_ptr<const ExtensionData> create(Presentation presentation, Options options);

    const std::string& name() const { return name_; }
    const Presentation& presentation() const { return presentation_; }
    const FiniteFlatAlgebra& algebra() const { return presentation_.algebra; }
    const BaseDVR& base() const { return presentation_.algebra.base(); }
    int degree() const { return algebra().rank(); }
    int ramification_index() const { return e_; }
    int residue_degree() const { return f_; }
    const AlgebraElement& uniformizer() const { return uniformizer_; }
    const std::vector<Embedding>& embeddings() const { return embeddings_; }
    const std::vector<std::string>& assumptions() const { return assumptions_; }

    // Null when the embeddings land in this extension itself.
    const std::shared_ptr<const ExtensionData>& explicit_target() const { return target_; }
    const ExtensionData& target() const { return target_ ? *target_ : *this; }
    bool embeds_into(const ExtensionData& m) const { return &target() == &m; }

    // Image of x under embedding i, in target coordinates.
    AlgebraElement apply(std::size_t i, const AlgebraElement& x) const;

    // Basis images of the ring map determined by generator images.
    static std::vector<AlgebraElement> basis_images_from_generators(const Presentation& source,
                                                                    const FiniteFlatAlgebra& target,
                                                                    const std::vector<AlgebraElement>& images);

  private:
    explicit ExtensionData(Presentation p) : presentation_(std::move(p)) {}

    std::string name_;
    Presentation presentation_;
    AlgebraElement uniformizer_;
    int e_ = 1;
    int f_ = 1;
    std::vector<Embedding> embeddings_;
    std::shared_ptr<const ExtensionData> target_;
    std::vector<std::string> assumptions_;
};

// v_L(x) = v_K(N(x)) / f, normalized so that v_L(pi_L) = 1. Inexact when the
// norm vanishes to working precision.
Valuation algebra_valuation(const FiniteFlatAlgebra& algebra, int residue_degree, const AlgebraElement& x);
Valuation algebra_valuation(const ExtensionData& e, const AlgebraElement& x);

// O_L as a valued ring, for elimination over O_L.
class ExtensionRing {
  public:
    using Element = AlgebraElement;

    explicit ExtensionRing(std::shared_ptr<const ExtensionData> ext);

    const ExtensionData& extension() const { return *ext_; }
    const std::shared_ptr<const ExtensionData>& extension_ptr() const { return ext_; }

    Element zero() const { return ext_->algebra().zero(); }
    Element one() const { return ext_->algebra().one(); }
    Element add(const Element& a, const Element& b) const { return ext_->algebra().add(a, b); }
    Element sub(const Element& a, const Element& b) const { return ext_->algebra().sub(a, b); }
    Element mul(const Element& a, const Element& b) const { return ext_->algebra().mul(a, b); }
    Element neg(const Element& a) const { return ext_->algebra().neg(a); }
    Element divide(const Element& a, const Element& b) const;
    Valuation valuation(const Element& a) const { return algebra_valuation(*ext_, a); }
    Element from_base(const Series& s) const { return ext_->algebra().scalar(s); }

  private:
    std::shared_ptr<const ExtensionData> ext_;
};

// Row i holds the images of E's basis under embedding i, as elements of the
// target M. This is the map O_L (x)_{O_K} O_M -> O_M^n.
Matrix<AlgebraElement> embeddings_matrix(const ExtensionData& e, const ExtensionData& target);

}  // namespace conductor

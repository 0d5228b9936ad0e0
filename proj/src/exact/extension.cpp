#include "conductor/extension.hpp"

#include "conductor/errors.hpp"

namespace conductor {

namespace {

std::string index_path(const std::string& field, std::size_t i) { return field + "[" + std::to_string(i) + "]"; }

bool is_monic(const FiniteFlatAlgebra& a, const std::vector<AlgebraElement>& poly) {
    return poly.size() >= 2 && a.congruent(poly.back(), a.one());
}

// Element of the lower algebra viewed in the tower algebra (j = 0 slot).
AlgebraElement lift(const FiniteFlatAlgebra& upper, int lower_rank, const AlgebraElement& x) {
    AlgebraElement r = upper.zero();
    for (int i = 0; i < lower_rank; ++i) r.coords[i] = x.coords[i];
    return r;
}

AlgebraElement to_new_basis(const BaseRing& ring, const Matrix<Series>& basis_transposed, const AlgebraElement& x) {
    Matrix<Series> col(x.coords.size(), 1, x.coords);
    Matrix<Series> y = solve(ring, basis_transposed, std::move(col));
    return {y.data()};
}

}  // namespace

const Generator& Presentation::generator(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name) return g;
    throw std::out_of_range("unknown generator '" + name + "'");
}

bool Presentation::has_generator(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name) return true;
    return false;
}

Presentation monogenic_presentation(const BaseDVR& base, const BasePolynomial& f, const std::string& generator) {
    FiniteFlatAlgebra algebra = monogenic_algebra(base, f, generator);
    const int n = algebra.rank();
    Generator g;
    g.name = generator;
    if (n == 1) {
        // x satisfies x + f_0 = 0.
        g.value = algebra.scalar(-f[0]);
    } else {
        g.value = algebra.basis(1);
    }
    for (const auto& c : f) g.defining_polynomial.push_back(algebra.scalar(c));

    std::vector<std::vector<int>> monomials;
    for (int s = 0; s < n; ++s) monomials.push_back({s});
    Matrix<Series> c = identity_matrix(BaseRing(base), n);
    return Presentation{std::move(algebra), {std::move(g)}, std::move(monomials), std::move(c)};
}

Presentation tower_compositum(const Presentation& lower, const std::vector<AlgebraElement>& g,
                              const std::string& generator) {
    const FiniteFlatAlgebra& a1 = lower.algebra;
    if (!is_monic(a1, g)) throw std::invalid_argument("tower polynomial must be monic of degree >= 1");
    if (lower.has_generator(generator)) throw std::invalid_argument("generator name '" + generator + "' already used");
    const int m = static_cast<int>(g.size()) - 1;
    if (m == 1) return lower;
    const int n1 = a1.rank();
    const int n = n1 * m;
    const BaseDVR& base = a1.base();

    // reduced[s][t]: coefficient (in A1) of x^t in x^s, for s <= 2m - 2.
    std::vector<std::vector<AlgebraElement>> reduced;
    for (int s = 0; s < m; ++s) {
        std::vector<AlgebraElement> v(m, a1.zero());
        v[s] = a1.one();
        reduced.push_back(std::move(v));
    }
    for (int s = m; s <= 2 * m - 2; ++s) {
        const std::vector<AlgebraElement> prev = reduced.back();
        std::vector<AlgebraElement> v(m, a1.zero());
        for (int t = 0; t + 1 < m; ++t) v[t + 1] = prev[t];
        for (int t = 0; t < m; ++t) v[t] = a1.sub(v[t], a1.mul(prev[m - 1], g[t]));
        reduced.push_back(std::move(v));
    }

    FiniteFlatAlgebra::StructureConstants table(n, std::vector<std::vector<Series>>(n));
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n1; ++i)
            for (int l = 0; l < m; ++l)
                for (int k = 0; k < n1; ++k) {
                    AlgebraElement bb = a1.mul(a1.basis(i), a1.basis(k));
                    std::vector<Series> coords(n, base.zero());
                    for (int t = 0; t < m; ++t) {
                        AlgebraElement c = a1.mul(bb, reduced[j + l][t]);
                        for (int u = 0; u < n1; ++u) coords[t * n1 + u] = c.coords[u];
                    }
                    table[j * n1 + i][l * n1 + k] = std::move(coords);
                }

    std::vector<std::string> labels;
    for (int j = 0; j < m; ++j) {
        std::string xj = j == 0 ? "" : (j == 1 ? generator : generator + "^" + std::to_string(j));
        for (int i = 0; i < n1; ++i) {
            const std::string& bi = a1.labels()[i];
            if (j == 0) labels.push_back(bi);
            else if (i == 0) labels.push_back(xj);
            else labels.push_back(bi + "*" + xj);
        }
    }
    FiniteFlatAlgebra algebra(base, std::move(labels), std::move(table));

    std::vector<Generator> gens;
    for (const auto& lg : lower.generators) {
        Generator ng;
        ng.name = lg.name;
        ng.value = lift(algebra, n1, lg.value);
        for (const auto& c : lg.defining_polynomial) ng.defining_polynomial.push_back(lift(algebra, n1, c));
        gens.push_back(std::move(ng));
    }
    Generator x;
    x.name = generator;
    x.value = algebra.basis(n1);
    for (const auto& c : g) x.defining_polynomial.push_back(lift(algebra, n1, c));
    gens.push_back(std::move(x));

    std::vector<std::vector<int>> monomials;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n1; ++i) {
            std::vector<int> e = lower.monomials[i];
            e.push_back(j);
            monomials.push_back(std::move(e));
        }
    Matrix<Series> c(n, n, base.zero());
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < n1; ++i)
            for (int mm = 0; mm < n1; ++mm) c(j * n1 + i, j * n1 + mm) = lower.basis_in_monomials(i, mm);

    return Presentation{std::move(algebra), std::move(gens), std::move(monomials), std::move(c)};
}

Presentation rebase(const Presentation& p, const std::vector<AlgebraElement>& basis, std::vector<std::string> labels) {
    const FiniteFlatAlgebra& old = p.algebra;
    const int n = old.rank();
    const BaseDVR& base = old.base();
    const BaseRing ring(base);
    if (static_cast<int>(basis.size()) != n || static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("rebase needs exactly one element and one label per basis slot");
    if (!old.congruent(basis[0], old.one())) throw ValidationError("basis[0]", "first basis element must be 1");

    Matrix<Series> b(n, n, base.zero());
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) b(k, l) = basis[k].coords[l];
    Valuation det_v = determinant(ring, b).valuation();
    if (!det_v.exact && det_v.value <= 0) throw PrecisionError("change of basis determinant vanishes to working precision");
    if (!det_v.exact || det_v.value != 0) throw ValidationError("basis", "change of basis is not unimodular");
    const Matrix<Series> bt = b.transposed();

    FiniteFlatAlgebra::StructureConstants table(n, std::vector<std::vector<Series>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = to_new_basis(ring, bt, old.mul(basis[i], basis[j])).coords;
    FiniteFlatAlgebra algebra(base, std::move(labels), std::move(table));

    std::vector<Generator> gens;
    for (const auto& g : p.generators) {
        Generator ng;
        ng.name = g.name;
        ng.value = to_new_basis(ring, bt, g.value);
        for (const auto& c : g.defining_polynomial) ng.defining_polynomial.push_back(to_new_basis(ring, bt, c));
        gens.push_back(std::move(ng));
    }
    return Presentation{std::move(algebra), std::move(gens), p.monomials, multiply(ring, b, p.basis_in_monomials)};
}

AlgebraElement evaluate_polynomial(const FiniteFlatAlgebra& algebra, const std::vector<AlgebraElement>& coeffs,
                                   const AlgebraElement& y) {
    AlgebraElement acc = algebra.zero();
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = algebra.add(algebra.mul(acc, y), coeffs[k]);
    return acc;
}

std::vector<AlgebraElement> ExtensionData::basis_images_from_generators(const Presentation& source,
                                                                        const FiniteFlatAlgebra& target,
                                                                        const std::vector<AlgebraElement>& images) {
    if (images.size() != source.generators.size())
        throw std::invalid_argument("expected one image per generator");
    std::vector<AlgebraElement> monomial_images;
    for (const auto& exps : source.monomials) {
        AlgebraElement v = target.one();
        for (std::size_t g = 0; g < exps.size(); ++g)
            if (exps[g] > 0) v = target.mul(v, target.power(images[g], exps[g]));
        monomial_images.push_back(std::move(v));
    }
    const int n = source.algebra.rank();
    std::vector<AlgebraElement> out;
    for (int k = 0; k < n; ++k) {
        AlgebraElement v = target.zero();
        for (int m = 0; m < n; ++m) {
            const Series& c = source.basis_in_monomials(k, m);
            if (c == source.algebra.base().zero()) continue;
            v = target.add(v, target.scale(c, monomial_images[m]));
        }
        out.push_back(std::move(v));
    }
    return out;
}

AlgebraElement ExtensionData::apply(std::size_t i, const AlgebraElement& x) const {
    const Embedding& emb = embeddings_.at(i);
    const FiniteFlatAlgebra& t = target().algebra();
    AlgebraElement v = t.zero();
    for (int k = 0; k < degree(); ++k) v = t.add(v, t.scale(x.coords[k], emb.basis_images[k]));
    return v;
}

std::shared_ptr<const ExtensionData> ExtensionData::create(Presentation presentation, Options options) {
    auto ext = std::shared_ptr<ExtensionData>(new ExtensionData(std::move(presentation)));
    ext->name_ = std::move(options.name);
    ext->uniformizer_ = std::move(options.uniformizer);
    ext->e_ = options.ramification_index;
    ext->f_ = options.residue_degree;
    ext->target_ = std::move(options.target);
    ext->assumptions_ = std::move(options.assumptions);

    const FiniteFlatAlgebra& a = ext->algebra();
    const int n = a.rank();
    a.validate();
    if (ext->e_ < 1 || ext->f_ < 1) throw ValidationError("e", "ramification index and residue degree must be positive");
    if (ext->e_ * ext->f_ != n)
        throw ValidationError("e", "e*f = " + std::to_string(ext->e_ * ext->f_) + " but the degree is " +
                                       std::to_string(n));
    if (static_cast<int>(ext->uniformizer_.coords.size()) != n)
        throw ValidationError("uniformizer", "coordinate vector has wrong length");

    for (std::size_t g = 0; g < ext->presentation_.generators.size(); ++g) {
        const Generator& gen = ext->presentation_.generators[g];
        if (!a.is_zero(evaluate_polynomial(a, gen.defining_polynomial, gen.value)))
            throw ValidationError(index_path("generators", g), "generator '" + gen.name +
                                                                   "' is not a root of its defining polynomial");
    }

    Valuation vu = algebra_valuation(a, ext->f_, ext->uniformizer_);
    if (!vu.exact && vu.value <= 1)
        throw PrecisionError("valuation of the uniformizer is not determined at this precision");
    if (!vu.exact || vu.value != 1)
        throw ValidationError("uniformizer", "uniformizer has valuation " + vu.to_string() + ", expected 1");
    Valuation vpi = algebra_valuation(a, ext->f_, a.scalar(ext->base().uniformizer_power(1)));
    if (!vpi.exact && vpi.value <= ext->e_)
        throw PrecisionError("v_L(pi) is not determined at this precision");
    if (!vpi.exact || vpi.value != ext->e_)
        throw ValidationError("e", "v_L(pi) = " + vpi.to_string() + " does not match e = " + std::to_string(ext->e_));

    const FiniteFlatAlgebra& t = ext->target().algebra();
    if (!(t.base() == a.base())) throw ValidationError("target", "embedding target has a different base ring");
    for (std::size_t i = 0; i < options.generator_images.size(); ++i) {
        const std::string path = index_path("embeddings", i);
        if (options.generator_images[i].size() != ext->presentation_.generators.size())
            throw ValidationError(path, "expected one image per generator");
        Embedding emb;
        emb.basis_images = basis_images_from_generators(ext->presentation_, t, options.generator_images[i]);
        if (!t.congruent(emb.basis_images[0], t.one())) throw ValidationError(path, "does not send 1 to 1");
        for (int p = 0; p < n; ++p)
            for (int q = p; q < n; ++q) {
                AlgebraElement lhs = t.mul(emb.basis_images[p], emb.basis_images[q]);
                AlgebraElement rhs = t.zero();
                for (int k = 0; k < n; ++k)
                    rhs = t.add(rhs, t.scale(a.basis_product(p, q)[k], emb.basis_images[k]));
                if (!t.congruent(lhs, rhs))
                    throw ValidationError(path, "not multiplicative on " + a.labels()[p] + "*" + a.labels()[q]);
            }
        ext->embeddings_.push_back(std::move(emb));
        for (std::size_t g = 0; g < ext->presentation_.generators.size(); ++g) {
            const Generator& gen = ext->presentation_.generators[g];
            std::vector<AlgebraElement> mapped;
            for (const auto& c : gen.defining_polynomial) mapped.push_back(ext->apply(i, c));
            AlgebraElement residual = evaluate_polynomial(t, mapped, options.generator_images[i][g]);
            if (!t.is_zero(residual))
                throw ValidationError(path + "." + gen.name, "image is not a root of the defining polynomial");
        }
    }
    return ext;
}

Valuation algebra_valuation(const FiniteFlatAlgebra& algebra, int residue_degree, const AlgebraElement& x) {
    Valuation v = algebra.norm(x).valuation();
    if (!v.exact) return Valuation::at_least(v.value / residue_degree);
    if (v.value % residue_degree != 0)
        throw std::logic_error("norm valuation " + std::to_string(v.value) + " is not divisible by f = " +
                               std::to_string(residue_degree));
    return {v.value / residue_degree, true};
}

Valuation algebra_valuation(const ExtensionData& e, const AlgebraElement& x) {
    return algebra_valuation(e.algebra(), e.residue_degree(), x);
}

ExtensionRing::ExtensionRing(std::shared_ptr<const ExtensionData> ext) : ext_(std::move(ext)) {
    if (!ext_) throw std::invalid_argument("extension ring needs an extension");
}

AlgebraElement ExtensionRing::divide(const AlgebraElement& a, const AlgebraElement& b) const {
    const FiniteFlatAlgebra& alg = ext_->algebra();
    Matrix<Series> rhs(a.coords.size(), 1, a.coords);
    Matrix<Series> z = solve(BaseRing(alg.base()), alg.multiplication_matrix(b), std::move(rhs));
    return {z.data()};
}

Matrix<AlgebraElement> embeddings_matrix(const ExtensionData& e, const ExtensionData& target) {
    if (!e.embeds_into(target))
        throw ValidationError("target", "embeddings of '" + e.name() + "' do not land in '" + target.name() + "'");
    const std::size_t n = static_cast<std::size_t>(e.degree());
    if (e.embeddings().size() != n)
        throw ValidationError("embeddings", "expected " + std::to_string(n) + " embeddings, found " +
                                                std::to_string(e.embeddings().size()));
    Matrix<AlgebraElement> m(n, n, target.algebra().zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) m(i, k) = e.embeddings()[i].basis_images[k];
    return m;
}

}  // namespace conductor

#pragma once

#include <string>
#include <vector>

#include "conductor/errors.hpp"
#include "conductor/extension.hpp"
#include "conductor/smith.hpp"

namespace conductor {

// 0 -> A^{a} -> A^{a+1} -> ... -> A^{b} -> 0 with A^i free of rank ranks[i - a].
// differentials[k] maps A^{a+k} -> A^{a+k+1} and has shape
// ranks[k + 1] x ranks[k], acting on column vectors.
template <class E>
struct BoundedComplex {
    int first_degree = 1;
    std::vector<std::size_t> ranks;
    std::vector<Matrix<E>> differentials;

    std::size_t length() const { return ranks.size(); }
    int last_degree() const { return first_degree + static_cast<int>(ranks.size()) - 1; }
    int degree_of(std::size_t k) const { return first_degree + static_cast<int>(k); }
};

namespace detail {

inline int degree_sign(int degree) { return degree % 2 == 0 ? 1 : -1; }

inline std::string differential_path(std::size_t k) { return "differentials[" + std::to_string(k) + "]"; }

}  // namespace detail

// Shapes and d^{i+1} d^i = 0 modulo working precision.
template <ValuedRing R>
void validate_complex(const R& ring, const BoundedComplex<typename R::Element>& c) {
    if (c.ranks.empty()) throw ValidationError("ranks", "complex has no terms");
    if (c.differentials.size() + 1 != c.ranks.size())
        throw ValidationError("differentials", "expected " + std::to_string(c.ranks.size() - 1) + " differentials");
    for (std::size_t k = 0; k < c.differentials.size(); ++k) {
        const auto& d = c.differentials[k];
        if (d.rows() != c.ranks[k + 1] || d.cols() != c.ranks[k])
            throw ValidationError(detail::differential_path(k),
                                  "shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                      " does not match ranks " + std::to_string(c.ranks[k + 1]) + "x" +
                                      std::to_string(c.ranks[k]));
    }
    for (std::size_t k = 0; k + 1 < c.differentials.size(); ++k) {
        if (c.ranks[k] == 0 || c.ranks[k + 2] == 0) continue;
        if (!vanishes(ring, multiply(ring, c.differentials[k + 1], c.differentials[k])))
            throw ValidationError(detail::differential_path(k + 1), "composition with the previous differential is not zero");
    }
}

// Lengths of H^i for every degree, computed from saturated kernel bases:
// ker d^i is spanned by the trailing columns of the right Smith transform,
// and H^i is the cokernel of d^{i-1} written in those coordinates.
template <ValuedRing R>
std::vector<long> cohomology_lengths(const R& ring, const BoundedComplex<typename R::Element>& c) {
    using E = typename R::Element;
    validate_complex(ring, c);
    const std::size_t n = c.length();
    std::vector<SmithDecomposition<R>> snf;
    for (const auto& d : c.differentials) snf.push_back(smith_decomposition(ring, d, true));

    std::vector<long> lengths(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t rank_out = k + 1 < n ? snf[k].divisors.rank() : 0;
        const std::size_t rank_in = k > 0 ? snf[k - 1].divisors.rank() : 0;
        if (rank_in + rank_out != c.ranks[k])
            throw ValidationError("ranks[" + std::to_string(k) + "]",
                                  "complex is not exact over the fraction field in degree " +
                                      std::to_string(c.degree_of(k)) + " (rank in " + std::to_string(rank_in) +
                                      ", rank out " + std::to_string(rank_out) + ", term rank " +
                                      std::to_string(c.ranks[k]) + ")");
        const std::size_t kernel_rank = c.ranks[k] - rank_out;
        if (kernel_rank == 0) continue;
        const Matrix<E>& incoming = c.differentials[k - 1];
        Matrix<E> in_kernel_coords =
            k + 1 < n ? multiply(ring, snf[k].right_inverse, incoming).block(rank_out, c.ranks[k], 0, incoming.cols())
                      : incoming;
        Length h = cokernel_length(ring, in_kernel_coords);
        if (!h.is_finite())
            throw ValidationError(detail::differential_path(k - 1), "cohomology has a free part");
        lengths[k] = h.value();
    }
    return lengths;
}

// sum_i (-1)^i length(H^i) with the complex's own degree labels.
template <ValuedRing R>
long complex_chi(const R& ring, const BoundedComplex<typename R::Element>& c) {
    std::vector<long> h = cohomology_lengths(ring, c);
    long chi = 0;
    for (std::size_t k = 0; k < h.size(); ++k) chi += detail::degree_sign(c.degree_of(k)) * h[k];
    return chi;
}

// The determinant invariant: det A = m^{-gamma} inside the fraction field.
// Peels off the top two-term piece [im d -> A^top] at each step, whose
// contribution is (-1)^top v(det of the inclusion), and recurses on the
// complex truncated at the saturated kernel.
template <ValuedRing R>
long complex_gamma(const R& ring, const BoundedComplex<typename R::Element>& c) {
    using E = typename R::Element;
    validate_complex(ring, c);
    std::vector<std::size_t> ranks = c.ranks;
    std::vector<Matrix<E>> diffs = c.differentials;
    long gamma = 0;
    while (ranks.size() > 1) {
        const std::size_t n = ranks.size();
        const int top = c.first_degree + static_cast<int>(n) - 1;
        const Matrix<E>& d = diffs.back();
        const std::size_t r_top = ranks[n - 1], r_below = ranks[n - 2];
        if (r_top > 0) {
            SmithDecomposition<R> s = smith_decomposition(ring, d, true);
            const std::size_t rk = s.divisors.rank();
            if (rk != r_top)
                throw ValidationError(detail::differential_path(n - 2),
                                      "complex is not exact over the fraction field in degree " + std::to_string(top));
            Matrix<E> image_basis = multiply(ring, d, s.right.block(0, r_below, 0, rk));
            Valuation v = ring.valuation(determinant(ring, image_basis));
            if (!v.exact) throw PrecisionError("image inclusion determinant vanishes to working precision");
            gamma += detail::degree_sign(top) * v.value;
            if (n >= 3) {
                const Matrix<E>& prev = diffs[n - 3];
                diffs[n - 3] = multiply(ring, s.right_inverse, prev).block(rk, r_below, 0, prev.cols());
            }
            ranks[n - 2] = r_below - rk;
        }
        ranks.pop_back();
        diffs.pop_back();
    }
    if (ranks[0] != 0)
        throw ValidationError("ranks[0]", "complex is not exact over the fraction field in degree " +
                                              std::to_string(c.first_degree));
    return gamma;
}

// Termwise direct sum of two complexes on the same degree range.
template <ValuedRing R>
BoundedComplex<typename R::Element> direct_sum(const R& ring, const BoundedComplex<typename R::Element>& a,
                                               const BoundedComplex<typename R::Element>& b) {
    if (a.first_degree != b.first_degree || a.length() != b.length())
        throw std::invalid_argument("direct sum needs complexes on the same degree range");
    BoundedComplex<typename R::Element> s;
    s.first_degree = a.first_degree;
    for (std::size_t k = 0; k < a.length(); ++k) s.ranks.push_back(a.ranks[k] + b.ranks[k]);
    for (std::size_t k = 0; k < a.differentials.size(); ++k) {
        Matrix<typename R::Element> d(s.ranks[k + 1], s.ranks[k], ring.zero());
        for (std::size_t i = 0; i < a.ranks[k + 1]; ++i)
            for (std::size_t j = 0; j < a.ranks[k]; ++j) d(i, j) = a.differentials[k](i, j);
        for (std::size_t i = 0; i < b.ranks[k + 1]; ++i)
            for (std::size_t j = 0; j < b.ranks[k]; ++j)
                d(a.ranks[k + 1] + i, a.ranks[k] + j) = b.differentials[k](i, j);
        s.differentials.push_back(std::move(d));
    }
    return s;
}

// A complex over O_K tensored up to the target ring.
template <ValuedRing R>
BoundedComplex<typename R::Element> base_change(const R& ring, const BoundedComplex<Series>& c) {
    BoundedComplex<typename R::Element> out;
    out.first_degree = c.first_degree;
    out.ranks = c.ranks;
    for (const auto& d : c.differentials) {
        std::vector<typename R::Element> entries;
        for (const auto& e : d.data()) entries.push_back(ring.from_base(e));
        out.differentials.emplace_back(d.rows(), d.cols(), std::move(entries));
    }
    return out;
}

}  // namespace conductor

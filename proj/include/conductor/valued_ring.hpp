#pragma once

#include <concepts>
#include <optional>

#include "conductor/matrix.hpp"
#include "conductor/series.hpp"

namespace conductor {

// A discrete valuation ring with truncated elements: enough structure to run
// elimination with minimal-valuation pivots. divide(a, b) is exact division
// and requires v(a) >= v(b).
template <class R>
concept ValuedRing = requires(const R& r, const typename R::Element& a) {
    { r.zero() } -> std::same_as<typename R::Element>;
    { r.one() } -> std::same_as<typename R::Element>;
    { r.add(a, a) } -> std::same_as<typename R::Element>;
    { r.sub(a, a) } -> std::same_as<typename R::Element>;
    { r.mul(a, a) } -> std::same_as<typename R::Element>;
    { r.neg(a) } -> std::same_as<typename R::Element>;
    { r.divide(a, a) } -> std::same_as<typename R::Element>;
    { r.valuation(a) } -> std::same_as<Valuation>;
};

// O_K itself.
class BaseRing {
  public:
    using Element = Series;

    explicit BaseRing(BaseDVR dvr) : dvr_(std::move(dvr)) {}

    const BaseDVR& dvr() const { return dvr_; }

    Element zero() const { return dvr_.zero(); }
    Element one() const { return dvr_.one(); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element divide(const Element& a, const Element& b) const { return divide_exact(a, b); }
    Valuation valuation(const Element& a) const { return a.valuation(); }
    // Image of a base-ring element; the identity here.
    Element from_base(const Series& s) const { return s; }

  private:
    BaseDVR dvr_;
};

template <ValuedRing R>
bool vanishes(const R& ring, const typename R::Element& a) {
    return !ring.valuation(a).exact;
}

template <ValuedRing R>
Matrix<typename R::Element> identity_matrix(const R& ring, std::size_t n) {
    Matrix<typename R::Element> m(n, n, ring.zero());
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
}

template <ValuedRing R>
Matrix<typename R::Element> multiply(const R& ring, const Matrix<typename R::Element>& a,
                                     const Matrix<typename R::Element>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    Matrix<typename R::Element> c(a.rows(), b.cols(), ring.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (vanishes(ring, a(i, k)) && a(i, k) == ring.zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
        }
    return c;
}

// True when every entry vanishes to working precision.
template <ValuedRing R>
bool vanishes(const R& ring, const Matrix<typename R::Element>& m) {
    for (const auto& e : m.data())
        if (!vanishes(ring, e)) return false;
    return true;
}

// Row index in [from, rows) of the entry of minimal exact valuation in column
// `col`; ties go to the lowest row.
template <ValuedRing R>
std::optional<std::size_t> min_valuation_row(const R& ring, const Matrix<typename R::Element>& m, std::size_t col,
                                             std::size_t from) {
    std::optional<std::size_t> best;
    int best_v = 0;
    for (std::size_t r = from; r < m.rows(); ++r) {
        Valuation v = ring.valuation(m(r, col));
        if (!v.exact) continue;
        if (!best || v.value < best_v) {
            best = r;
            best_v = v.value;
        }
    }
    return best;
}

// Determinant by elimination with minimal-valuation pivots. If a column
// vanishes to working precision the result is a correspondingly truncated
// zero rather than an exact one.
template <ValuedRing R>
typename R::Element determinant(const R& ring, Matrix<typename R::Element> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    auto result = ring.one();
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        auto pivot = min_valuation_row(ring, m, k, k);
        if (!pivot) {
            std::size_t weakest = k;
            for (std::size_t r = k; r < n; ++r)
                if (ring.valuation(m(r, k)).value < ring.valuation(m(weakest, k)).value) weakest = r;
            return ring.mul(result, m(weakest, k));
        }
        if (*pivot != k) {
            m.swap_rows(*pivot, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (vanishes(ring, m(i, k))) continue;
            auto f = ring.divide(m(i, k), m(k, k));
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = ring.sub(m(i, j), ring.mul(f, m(k, j)));
        }
        result = ring.mul(result, m(k, k));
    }
    return negate ? ring.neg(result) : result;
}

// Solves a * x = b for square nonsingular a. Throws std::domain_error when
// the solution is not integral.
template <ValuedRing R>
Matrix<typename R::Element> solve(const R& ring, Matrix<typename R::Element> a, Matrix<typename R::Element> b) {
    if (a.rows() != a.cols() || b.rows() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        auto pivot = min_valuation_row(ring, a, k, k);
        if (!pivot) throw PrecisionError("linear system is singular to working precision");
        a.swap_rows(*pivot, k);
        b.swap_rows(*pivot, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (vanishes(ring, a(i, k))) continue;
            auto f = ring.divide(a(i, k), a(k, k));
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = ring.sub(a(i, j), ring.mul(f, a(k, j)));
            for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = ring.sub(b(i, j), ring.mul(f, b(k, j)));
            a(i, k) = ring.zero();
        }
    }
    Matrix<typename R::Element> x(n, b.cols(), ring.zero());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t kk = n; kk-- > 0;) {
            auto acc = b(kk, c);
            for (std::size_t j = kk + 1; j < n; ++j) acc = ring.sub(acc, ring.mul(a(kk, j), x(j, c)));
            x(kk, c) = ring.divide(acc, a(kk, kk));
        }
    }
    return x;
}

}  // namespace conductor

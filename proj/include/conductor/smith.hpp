#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "conductor/valued_ring.hpp"

namespace conductor {

// Length of a module over a DVR, with a dedicated infinite state for modules
// with a free part.
class Length {
  public:
    static Length finite(long v) { return Length(v, true); }
    static Length infinite() { return Length(0, false); }

    bool is_finite() const { return finite_; }
    long value() const {
        if (!finite_) throw std::logic_error("length is infinite");
        return value_;
    }
    std::string to_string() const { return finite_ ? std::to_string(value_) : "inf"; }

    friend bool operator==(const Length&, const Length&) = default;

  private:
    Length(long v, bool f) : value_(v), finite_(f) {}
    long value_;
    bool finite_;
};

// Valuations of the nonzero Smith diagonal, ascending. `vanishing` counts
// diagonal slots that vanish to working precision and are treated as zero.
struct ElementaryDivisors {
    std::vector<int> valuations;
    std::size_t vanishing = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;

    std::size_t rank() const { return valuations.size(); }
    bool full_row_rank() const { return rank() == rows; }
    long total() const { return std::accumulate(valuations.begin(), valuations.end(), 0L); }
};

// D = left * M * right with left, right invertible and D diagonal.
template <ValuedRing R>
struct SmithDecomposition {
    using E = typename R::Element;
    ElementaryDivisors divisors;
    Matrix<E> diagonal;
    Matrix<E> left, left_inverse;
    Matrix<E> right, right_inverse;
};

// Smith form over a DVR: pivot on the entry of minimal valuation (ties to
// the lowest (row, col)), clear its row and column, recurse. With
// `track_transforms` the unimodular transforms and their inverses are kept.
template <ValuedRing R>
SmithDecomposition<R> smith_decomposition(const R& ring, const Matrix<typename R::Element>& m,
                                          bool track_transforms = true) {
    using E = typename R::Element;
    const std::size_t rows = m.rows(), cols = m.cols();
    SmithDecomposition<R> s;
    s.diagonal = m;
    Matrix<E>& d = s.diagonal;
    if (track_transforms) {
        s.left = identity_matrix(ring, rows);
        s.left_inverse = identity_matrix(ring, rows);
        s.right = identity_matrix(ring, cols);
        s.right_inverse = identity_matrix(ring, cols);
    }
    const std::size_t steps = std::min(rows, cols);
    std::size_t t = 0;
    for (; t < steps; ++t) {
        bool found = false;
        std::size_t pr = 0, pc = 0;
        int best = 0;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                Valuation v = ring.valuation(d(r, c));
                if (v.exact && (!found || v.value < best)) {
                    found = true;
                    best = v.value;
                    pr = r;
                    pc = c;
                }
            }
        if (!found) break;
        s.divisors.valuations.push_back(best);

        if (pr != t) {
            d.swap_rows(pr, t);
            if (track_transforms) {
                s.left.swap_rows(pr, t);
                s.left_inverse.swap_cols(pr, t);
            }
        }
        if (pc != t) {
            d.swap_cols(pc, t);
            if (track_transforms) {
                s.right.swap_cols(pc, t);
                s.right_inverse.swap_rows(pc, t);
            }
        }
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (vanishes(ring, d(i, t))) {
                d(i, t) = ring.zero();
                continue;
            }
            E f = ring.divide(d(i, t), d(t, t));
            for (std::size_t j = t + 1; j < cols; ++j) d(i, j) = ring.sub(d(i, j), ring.mul(f, d(t, j)));
            d(i, t) = ring.zero();
            if (track_transforms) {
                for (std::size_t j = 0; j < rows; ++j)
                    s.left(i, j) = ring.sub(s.left(i, j), ring.mul(f, s.left(t, j)));
                for (std::size_t j = 0; j < rows; ++j)
                    s.left_inverse(j, t) = ring.add(s.left_inverse(j, t), ring.mul(f, s.left_inverse(j, i)));
            }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (vanishes(ring, d(t, j))) {
                d(t, j) = ring.zero();
                continue;
            }
            E f = ring.divide(d(t, j), d(t, t));
            d(t, j) = ring.zero();
            if (track_transforms) {
                for (std::size_t i = 0; i < cols; ++i)
                    s.right(i, j) = ring.sub(s.right(i, j), ring.mul(f, s.right(i, t)));
                for (std::size_t i = 0; i < cols; ++i)
                    s.right_inverse(t, i) = ring.add(s.right_inverse(t, i), ring.mul(f, s.right_inverse(j, i)));
            }
        }
    }
    s.divisors.vanishing = steps - t;
    s.divisors.rows = rows;
    s.divisors.cols = cols;
    return s;
}

template <ValuedRing R>
ElementaryDivisors smith_normal_form(const R& ring, const Matrix<typename R::Element>& m) {
    return smith_decomposition(ring, m, false).divisors;
}

// Length of coker(M: R^cols -> R^rows); infinite unless M has full row rank
// over the fraction field.
template <ValuedRing R>
Length cokernel_length(const R& ring, const Matrix<typename R::Element>& m) {
    ElementaryDivisors d = smith_normal_form(ring, m);
    if (!d.full_row_rank()) return Length::infinite();
    return Length::finite(d.total());
}

}  // namespace conductor

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "conductor/complex.hpp"
#include "conductor/lattice.hpp"
#include "conductor/series.hpp"

namespace testing_support {

using namespace conductor;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(20240611);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

// A random residue-field element; for F_p(t) a small rational function.
inline Coeff random_coeff(const CoefficientField& f, bool nonzero = false) {
    while (true) {
        Coeff c = f.from_integer(uniform(0, static_cast<int>(f.characteristic()) - 1));
        if (f.kind() == CoefficientField::Kind::RationalFunctions) {
            const int shape = uniform(0, 3);
            if (shape == 1) c = c * f.variable() + f.from_integer(uniform(0, 1));
            if (shape == 2) c = (c + f.variable()) / (f.variable() + f.one());
        }
        if (!nonzero || !c.is_zero()) return c;
    }
}

// Random element with valuation at least `min_val`, digits up to `max_digit`.
inline Series random_series(const BaseDVR& b, int min_val = 0, int max_digit = -1) {
    const int top = max_digit < 0 ? b.precision() - 1 : std::min(max_digit, b.precision() - 1);
    std::vector<Coeff> d(b.precision(), b.field().zero());
    for (int j = min_val; j <= top; ++j) d[j] = random_coeff(b.field());
    return b.from_digits(d);
}

inline Series random_unit(const BaseDVR& b, int max_digit = -1) {
    Series s = random_series(b, 1, max_digit);
    return s + b.constant(random_coeff(b.field(), true));
}

inline Series random_with_valuation(const BaseDVR& b, int v, int max_digit = -1) {
    return random_unit(b, max_digit) * b.uniformizer_power(v);
}

// A random invertible matrix over O_K built from elementary operations,
// returned together with its exact inverse.
struct UnimodularPair {
    Matrix<Series> u;
    Matrix<Series> inverse;
};

inline UnimodularPair random_unimodular(const BaseRing& ring, std::size_t n, int steps = 6) {
    UnimodularPair p{identity_matrix(ring, n), identity_matrix(ring, n)};
    if (n == 0) return p;
    const BaseDVR& b = ring.dvr();
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = uniform(0, static_cast<int>(n) - 1), j = uniform(0, static_cast<int>(n) - 1);
        if (i == j) {
            // scale row i of u by a unit; column i of the inverse by its inverse
            const Series c = random_unit(b, 3), ci = c.inverse();
            for (std::size_t k = 0; k < n; ++k) {
                p.u(i, k) = p.u(i, k) * c;
                p.inverse(k, i) = p.inverse(k, i) * ci;
            }
        } else {
            // row_i += c row_j on u; col_j -= c col_i on the inverse
            const Series c = random_series(b, 0, 3);
            for (std::size_t k = 0; k < n; ++k) {
                p.u(i, k) = p.u(i, k) + c * p.u(j, k);
                p.inverse(k, j) = p.inverse(k, j) - p.inverse(k, i) * c;
            }
        }
    }
    return p;
}

// A generically exact complex with a known Euler characteristic. Degree i
// splits as X_i + Y_i with d(Y_i) = Lambda_i X_{i+1} for a full-rank square
// Lambda_i; H^{i+1} = X_{i+1} / Lambda_i, so chi = sum (-1)^{i+1} v(det Lambda_i).
struct KnownComplex {
    BoundedComplex<Series> complex;
    long chi = 0;
};

inline KnownComplex random_known_complex(const BaseRing& ring, int length, int max_rank = 5, int max_val = 3,
                                         int first_degree = 1) {
    const BaseDVR& b = ring.dvr();
    std::vector<std::size_t> y(length, 0);  // y[i] = size of Y at position i
    for (int i = 0; i + 1 < length; ++i) {
        const int x_here = i == 0 ? 0 : static_cast<int>(y[i - 1]);
        y[i] = uniform(0, std::max(0, std::min(max_rank - x_here, max_rank / 2 + 1)));
        if (static_cast<int>(y[i]) + x_here > max_rank) y[i] = max_rank - x_here;
    }
    KnownComplex k;
    k.complex.first_degree = first_degree;
    for (int i = 0; i < length; ++i) k.complex.ranks.push_back((i ? y[i - 1] : 0) + y[i]);
    std::vector<UnimodularPair> u;
    for (int i = 0; i < length; ++i) u.push_back(random_unimodular(ring, k.complex.ranks[i]));
    for (int i = 0; i + 1 < length; ++i) {
        const std::size_t rows = k.complex.ranks[i + 1], cols = k.complex.ranks[i];
        const std::size_t x_i = i ? y[i - 1] : 0, n = y[i];
        Matrix<Series> d(rows, cols, b.zero());
        long v_det = 0;
        const bool triangular = uniform(0, 1) == 1;
        for (std::size_t r = 0; r < n; ++r) {
            const int v = uniform(0, max_val);
            v_det += v;
            d(r, x_i + r) = random_with_valuation(b, v, 4);
            if (triangular)
                for (std::size_t c = r + 1; c < n; ++c) d(r, x_i + c) = random_series(b, 0, 4);
        }
        k.chi += ((first_degree + i + 1) % 2 == 0 ? 1 : -1) * v_det;
        k.complex.differentials.push_back(multiply(ring, multiply(ring, u[i + 1].u, d), u[i].inverse));
    }
    return k;
}

inline IntMatrix random_unimodular_int(std::size_t n, int steps = 8) {
    IntMatrix m = intmat::identity(n);
    if (n < 2) return uniform(0, 1) ? m : intmat::scaled(-1, m);
    for (int s = 0; s < steps; ++s) {
        const std::size_t i = uniform(0, static_cast<int>(n) - 1), j = uniform(0, static_cast<int>(n) - 1);
        if (i == j) continue;
        const int c = uniform(-2, 2);
        for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
    }
    return m;
}

}  // namespace testing_support

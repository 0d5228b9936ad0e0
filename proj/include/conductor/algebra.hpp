#pragma once

#include <string>
#include <vector>

#include "conductor/matrix.hpp"
#include "conductor/series.hpp"

namespace conductor {

// Coordinates of an element of a free O_K-algebra in its basis.
struct AlgebraElement {
    std::vector<Series> coords;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

// Polynomial with base-ring coefficients, lowest degree first.
using BasePolynomial = std::vector<Series>;

// A commutative O_K-algebra, free of rank n with basis b_0 = 1, b_1, ...,
// b_{n-1}, presented by structure constants: b_i * b_j = sum_k table[i][j][k] b_k.
class FiniteFlatAlgebra {
  public:
    using StructureConstants = std::vector<std::vector<std::vector<Series>>>;

    FiniteFlatAlgebra(BaseDVR base, std::vector<std::string> labels, StructureConstants table);

    const BaseDVR& base() const { return base_; }
    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Series>& basis_product(int i, int j) const { return table_[i][j]; }
    const StructureConstants& structure_constants() const { return table_; }

    AlgebraElement zero() const;
    AlgebraElement one() const { return basis(0); }
    AlgebraElement basis(int i) const;
    AlgebraElement scalar(const Series& s) const;
    AlgebraElement from_coords(std::vector<Series> coords) const;

    AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement neg(const AlgebraElement& a) const;
    AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement scale(const Series& s, const AlgebraElement& a) const;
    AlgebraElement power(const AlgebraElement& a, int k) const;

    // Column j holds the coordinates of x * b_j.
    Matrix<Series> multiplication_matrix(const AlgebraElement& x) const;
    Series trace(const AlgebraElement& x) const;
    Series norm(const AlgebraElement& x) const;

    // Difference vanishes to working precision.
    bool congruent(const AlgebraElement& a, const AlgebraElement& b) const;
    bool is_zero(const AlgebraElement& a) const;

    bool is_commutative() const;
    bool is_associative() const;
    bool has_unit() const;
    // Throws ValidationError naming the first failed axiom.
    void validate() const;

    std::string format(const AlgebraElement& x) const;

  private:
    BaseDVR base_;
    std::vector<std::string> labels_;
    StructureConstants table_;
};

// O_K[x]/(f) with basis 1, x, ..., x^{n-1}; f monic of degree n >= 1.
FiniteFlatAlgebra monogenic_algebra(const BaseDVR& base, const BasePolynomial& f, const std::string& generator = "x");

// Trace-form determinant det(Tr(b_i b_j)).
Series discriminant_of_algebra(const FiniteFlatAlgebra& algebra);

// Discriminant of a monic polynomial as the resultant Res(f, f') up to the
// sign (-1)^{n(n-1)/2}; computed from the Sylvester matrix.
Series polynomial_discriminant(const BaseDVR& base, const BasePolynomial& f);

}  // namespace conductor

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conductor {

// Dense polynomials over F_p, coefficients stored low degree first with no
// trailing zeros. The zero polynomial is the empty vector.
namespace fp {

using Poly = std::vector<std::uint32_t>;

bool is_prime(std::uint32_t p);
std::uint32_t inverse(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(std::int64_t v, std::uint32_t p);

void trim(Poly& a);
int degree(const Poly& a);  // -1 for zero

Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly neg(const Poly& a, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p);

// Euclidean division, b nonzero.
void divmod(const Poly& a, const Poly& b, std::uint32_t p, Poly& q, Poly& r);
Poly exact_quotient(const Poly& a, const Poly& b, std::uint32_t p);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b, std::uint32_t p);

}  // namespace fp

// An element of F_p or of F_p(t). Rational functions are kept reduced with a
// monic denominator; an empty denominator stands for 1, so elements of the
// prime field never allocate a denominator.
class Coeff {
  public:
    Coeff() = default;

    static Coeff constant(std::uint32_t p, std::int64_t v);
    static Coeff variable(std::uint32_t p);
    static Coeff fraction(std::uint32_t p, fp::Poly num, fp::Poly den);

    std::uint32_t characteristic() const { return p_; }
    const fp::Poly& numerator() const { return num_; }
    fp::Poly denominator() const;

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    // True when the element lies in the prime field.
    bool is_constant() const { return den_.empty() && num_.size() <= 1; }

    Coeff inverse() const;

    Coeff& operator+=(const Coeff& o);
    Coeff& operator-=(const Coeff& o);
    Coeff& operator*=(const Coeff& o);

    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
    friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
    friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
    friend Coeff operator/(const Coeff& a, const Coeff& b) { return a * b.inverse(); }
    Coeff operator-() const;

    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.p_ == b.p_ && a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string(std::string_view var = "t") const;

  private:
    Coeff(std::uint32_t p, fp::Poly num, fp::Poly den) : p_(p), num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    std::uint32_t p_ = 2;
    fp::Poly num_;
    fp::Poly den_;
};

// The residue field kappa: either F_p or F_p(t).
class CoefficientField {
  public:
    enum class Kind { PrimeField, RationalFunctions };

    static CoefficientField prime_field(std::uint32_t p);
    static CoefficientField rational_functions(std::uint32_t p, std::string variable = "t");

    Kind kind() const { return kind_; }
    std::uint32_t characteristic() const { return p_; }
    const std::string& variable_name() const { return variable_; }

    Coeff zero() const { return Coeff::constant(p_, 0); }
    Coeff one() const { return Coeff::constant(p_, 1); }
    Coeff from_integer(std::int64_t v) const { return Coeff::constant(p_, v); }
    // The transcendental t; throws std::logic_error for a prime field.
    Coeff variable() const;

    bool contains(const Coeff& x) const;
    std::string format(const Coeff& x) const { return x.to_string(variable_); }

    friend bool operator==(const CoefficientField&, const CoefficientField&) = default;

  private:
    CoefficientField(Kind kind, std::uint32_t p, std::string variable)
        : kind_(kind), p_(p), variable_(std::move(variable)) {}

    Kind kind_;
    std::uint32_t p_;
    std::string variable_;
};

}  // namespace conductor

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "conductor/coefficient_field.hpp"

namespace conductor {

// Valuation of a truncated element. When `exact` is false the element
// vanishes to its working precision and `value` is only a lower bound.
struct Valuation {
    int value = 0;
    bool exact = true;

    static Valuation at_least(int bound) { return {bound, false}; }
    std::string to_string() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

// Raised whenever an answer would depend on coefficients beyond the working
// precision. `required_precision` is filled in when a sufficient precision
// is known.
class PrecisionError : public std::runtime_error {
  public:
    explicit PrecisionError(const std::string& what, std::optional<int> required = std::nullopt)
        : std::runtime_error(what), required_(required) {}

    std::optional<int> required_precision() const { return required_; }

  private:
    std::optional<int> required_;
};

class Series;

// The complete DVR kappa[[pi]] truncated to `precision` pi-adic digits.
class BaseDVR {
  public:
    explicit BaseDVR(CoefficientField field, int precision = 32, std::string uniformizer = "pi");

    const CoefficientField& field() const { return field_; }
    int precision() const { return precision_; }
    const std::string& uniformizer_symbol() const { return uniformizer_; }

    Series zero() const;
    Series one() const;
    Series constant(const Coeff& c) const;
    Series from_integer(std::int64_t v) const;
    Series uniformizer_power(int k) const;
    // Coefficient of pi^j at index j; missing trailing digits are zero.
    Series from_digits(std::vector<Coeff> digits) const;

    BaseDVR with_precision(int precision) const { return BaseDVR(field_, precision, uniformizer_); }

    friend bool operator==(const BaseDVR&, const BaseDVR&) = default;

  private:
    CoefficientField field_;
    int precision_;
    std::string uniformizer_;
};

// An element of kappa[[pi]] stored as N = capacity() digits. The element is
// known modulo pi^precision(); digits at and above precision() are zero.
// Arithmetic propagates absolute precision, so a result never claims more
// digits than its inputs determine.
class Series {
  public:
    Series() = default;
    Series(std::vector<Coeff> digits, int precision);

    int capacity() const { return static_cast<int>(c_.size()); }
    int precision() const { return prec_; }
    std::uint32_t characteristic() const { return c_.empty() ? 0 : c_.front().characteristic(); }
    const Coeff& digit(int j) const { return c_.at(j); }
    const std::vector<Coeff>& digits() const { return c_; }

    Valuation valuation() const;
    bool is_zero() const { return !valuation().exact; }
    bool is_unit() const { return prec_ > 0 && !c_[0].is_zero(); }

    // Inverse of a unit; throws std::domain_error otherwise.
    Series inverse() const;
    // Division by pi^k; requires the element to vanish below k.
    Series shift_down(int k) const;
    Series shift_up(int k) const;
    Series with_precision(int prec) const;

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const;
    Series scaled(const Coeff& s) const;

    // Exact quotient a / b in kappa[[pi]]; requires v(a) >= v(b).
    friend Series divide_exact(const Series& a, const Series& b);

    // Agreement modulo the smaller of the two precisions.
    bool congruent(const Series& o) const { return (*this - o).is_zero(); }

    friend bool operator==(const Series&, const Series&) = default;

    std::string to_string(const std::string& var = "t", const std::string& pi = "pi") const;

  private:
    std::vector<Coeff> c_;
    int prec_ = 0;
};

}  // namespace conductor

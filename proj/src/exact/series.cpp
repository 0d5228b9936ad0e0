#include "conductor/series.hpp"

#include <algorithm>
#include <sstream>

namespace conductor {

std::string Valuation::to_string() const {
    return exact ? std::to_string(value) : ">=" + std::to_string(value);
}

BaseDVR::BaseDVR(CoefficientField field, int precision, std::string uniformizer)
    : field_(std::move(field)), precision_(precision), uniformizer_(std::move(uniformizer)) {
    if (precision_ < 1) throw std::invalid_argument("precision must be at least 1");
}

Series BaseDVR::zero() const { return Series(std::vector<Coeff>(precision_, field_.zero()), precision_); }

Series BaseDVR::one() const { return constant(field_.one()); }

Series BaseDVR::constant(const Coeff& c) const {
    if (!field_.contains(c)) throw std::invalid_argument("coefficient does not lie in the residue field");
    std::vector<Coeff> d(precision_, field_.zero());
    d[0] = c;
    return Series(std::move(d), precision_);
}

Series BaseDVR::from_integer(std::int64_t v) const { return constant(field_.from_integer(v)); }

Series BaseDVR::uniformizer_power(int k) const {
    if (k < 0) throw std::invalid_argument("negative power of the uniformizer");
    std::vector<Coeff> d(precision_, field_.zero());
    if (k < precision_) d[k] = field_.one();
    return Series(std::move(d), precision_);
}

Series BaseDVR::from_digits(std::vector<Coeff> digits) const {
    for (const auto& c : digits)
        if (!field_.contains(c)) throw std::invalid_argument("digit does not lie in the residue field");
    digits.resize(precision_, field_.zero());
    return Series(std::move(digits), precision_);
}

Series::Series(std::vector<Coeff> digits, int precision) : c_(std::move(digits)), prec_(precision) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one digit");
    prec_ = std::clamp(prec_, 0, capacity());
    const Coeff zero = Coeff::constant(characteristic(), 0);
    for (int j = prec_; j < capacity(); ++j) c_[j] = zero;
}

Valuation Series::valuation() const {
    for (int j = 0; j < prec_; ++j)
        if (!c_[j].is_zero()) return {j, true};
    return Valuation::at_least(prec_);
}

Series Series::inverse() const {
    if (!is_unit()) throw std::domain_error("inverse of a non-unit series");
    const int n = capacity();
    std::vector<Coeff> w(n, Coeff::constant(characteristic(), 0));
    const Coeff inv0 = c_[0].inverse();
    w[0] = inv0;
    for (int k = 1; k < prec_; ++k) {
        Coeff acc = Coeff::constant(characteristic(), 0);
        for (int j = 1; j <= k; ++j)
            if (!c_[j].is_zero() && !w[k - j].is_zero()) acc += c_[j] * w[k - j];
        w[k] = -(acc * inv0);
    }
    return Series(std::move(w), prec_);
}

Series Series::shift_down(int k) const {
    if (k < 0) return shift_up(-k);
    Valuation v = valuation();
    if (v.exact && v.value < k) throw std::domain_error("series is not divisible by the requested power of pi");
    std::vector<Coeff> d(capacity(), Coeff::constant(characteristic(), 0));
    for (int j = k; j < prec_; ++j) d[j - k] = c_[j];
    return Series(std::move(d), std::max(0, prec_ - k));
}

Series Series::shift_up(int k) const {
    if (k < 0) return shift_down(-k);
    std::vector<Coeff> d(capacity(), Coeff::constant(characteristic(), 0));
    for (int j = 0; j + k < capacity() && j < prec_; ++j) d[j + k] = c_[j];
    return Series(std::move(d), std::min(capacity(), prec_ + k));
}

Series Series::with_precision(int prec) const { return Series(c_, std::min(prec, prec_)); }

Series& Series::operator+=(const Series& o) {
    if (o.capacity() != capacity()) throw std::invalid_argument("series capacities differ");
    prec_ = std::min(prec_, o.prec_);
    const Coeff zero = Coeff::constant(characteristic(), 0);
    for (int j = 0; j < capacity(); ++j) {
        if (j < prec_) {
            if (!o.c_[j].is_zero()) c_[j] += o.c_[j];
        } else {
            c_[j] = zero;
        }
    }
    return *this;
}

Series& Series::operator-=(const Series& o) { return *this += -o; }

Series Series::operator-() const {
    Series r = *this;
    for (auto& c : r.c_)
        if (!c.is_zero()) c = -c;
    return r;
}

Series Series::scaled(const Coeff& s) const {
    Series r = *this;
    for (auto& c : r.c_)
        if (!c.is_zero()) c *= s;
    if (s.is_zero()) r.prec_ = capacity();
    return r;
}

Series operator*(const Series& a, const Series& b) {
    if (a.capacity() != b.capacity()) throw std::invalid_argument("series capacities differ");
    const int n = a.capacity();
    const int va = a.valuation().value;
    const int vb = b.valuation().value;
    const int prec = std::min({n, a.prec_ + vb, b.prec_ + va});
    std::vector<Coeff> d(n, Coeff::constant(a.characteristic(), 0));
    for (int i = va; i < a.prec_ && i < prec; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = vb; j < b.prec_ && i + j < prec; ++j)
            if (!b.c_[j].is_zero()) d[i + j] += a.c_[i] * b.c_[j];
    }
    return Series(std::move(d), prec);
}

Series divide_exact(const Series& a, const Series& b) {
    const Valuation vb = b.valuation();
    if (!vb.exact)
        throw PrecisionError("division by an element that vanishes to working precision " + std::to_string(b.prec_),
                             b.capacity() + 1);
    const Valuation va = a.valuation();
    if (va.exact && va.value < vb.value) throw std::domain_error("quotient is not integral");
    return a.shift_down(vb.value) * b.shift_down(vb.value).inverse();
}

std::string Series::to_string(const std::string& var, const std::string& pi) const {
    std::ostringstream os;
    bool first = true;
    for (int j = 0; j < prec_; ++j) {
        if (c_[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string c = c_[j].to_string(var);
        bool compound = c.find_first_of("+/") != std::string::npos;
        if (j == 0) {
            os << c;
            continue;
        }
        if (!c_[j].is_one()) os << (compound ? "(" + c + ")" : c) << "*";
        os << pi;
        if (j > 1) os << "^" << j;
    }
    if (first) os << "0";
    if (prec_ < capacity()) os << " + O(" << pi << "^" << prec_ << ")";
    return os.str();
}

}  // namespace conductor

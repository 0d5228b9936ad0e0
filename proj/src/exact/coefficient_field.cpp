#include "conductor/coefficient_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace conductor {
namespace fp {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t inverse(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return reduce(t, p);
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < a.size() ? a[i] : 0) + static_cast<std::uint64_t>(i < b.size() ? b[i] : 0);
        r[i] = static_cast<std::uint32_t>(s % p);
    }
    trim(r);
    return r;
}

Poly neg(const Poly& a, std::uint32_t p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] == 0 ? 0 : p - a[i];
    return r;
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) { return add(a, neg(b, p), p); }

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    Poly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<std::uint32_t>(acc[i]);
    trim(r);
    return r;
}

Poly scale(const Poly& a, std::uint32_t s, std::uint32_t p) {
    if (s % p == 0) return {};
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a[i]) * s % p);
    return r;
}

void divmod(const Poly& a, const Poly& b, std::uint32_t p, Poly& q, Poly& r) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    r = a;
    q.clear();
    if (a.size() < b.size()) return;
    q.assign(a.size() - b.size() + 1, 0);
    const std::uint32_t lead_inv = inverse(b.back(), p);
    for (int k = static_cast<int>(a.size() - b.size()); k >= 0; --k) {
        std::uint32_t top = r[k + b.size() - 1];
        if (top == 0) continue;
        std::uint32_t f = static_cast<std::uint32_t>(static_cast<std::uint64_t>(top) * lead_inv % p);
        q[k] = f;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t sub = static_cast<std::uint64_t>(f) * b[j] % p;
            r[k + j] = static_cast<std::uint32_t>((r[k + j] + p - sub) % p);
        }
    }
    trim(q);
    trim(r);
}

Poly exact_quotient(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly q, r;
    divmod(a, b, p, q, r);
    if (!r.empty()) throw std::logic_error("polynomial quotient is not exact");
    return q;
}

Poly gcd(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly q, r;
        divmod(x, y, p, q, r);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    return scale(x, inverse(x.back(), p), p);
}

}  // namespace fp

Coeff Coeff::constant(std::uint32_t p, std::int64_t v) {
    fp::Poly num;
    std::uint32_t r = fp::reduce(v, p);
    if (r != 0) num.push_back(r);
    return Coeff(p, std::move(num), {});
}

Coeff Coeff::variable(std::uint32_t p) { return Coeff(p, fp::Poly{0, 1}, {}); }

Coeff Coeff::fraction(std::uint32_t p, fp::Poly num, fp::Poly den) {
    fp::trim(num);
    fp::trim(den);
    if (den.empty()) throw std::domain_error("rational function with zero denominator");
    Coeff c(p, std::move(num), std::move(den));
    c.normalize();
    return c;
}

fp::Poly Coeff::denominator() const { return den_.empty() ? fp::Poly{1} : den_; }

bool Coeff::is_one() const { return den_.empty() && num_.size() == 1 && num_[0] == 1; }

void Coeff::normalize() {
    if (num_.empty()) {
        den_.clear();
        return;
    }
    if (den_.empty()) return;
    fp::Poly g = fp::gcd(num_, den_, p_);
    if (g.size() > 1) {
        num_ = fp::exact_quotient(num_, g, p_);
        den_ = fp::exact_quotient(den_, g, p_);
    }
    std::uint32_t lead = den_.back();
    if (lead != 1) {
        std::uint32_t inv = fp::inverse(lead, p_);
        num_ = fp::scale(num_, inv, p_);
        den_ = fp::scale(den_, inv, p_);
    }
    if (den_.size() == 1) den_.clear();
}

Coeff Coeff::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero coefficient");
    return fraction(p_, denominator(), num_);
}

Coeff& Coeff::operator+=(const Coeff& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_.empty() && o.den_.empty()) {
        num_ = fp::add(num_, o.num_, p_);
        return *this;
    }
    if (den_ == o.den_) {
        num_ = fp::add(num_, o.num_, p_);
        normalize();
        return *this;
    }
    fp::Poly d1 = denominator(), d2 = o.denominator();
    num_ = fp::add(fp::mul(num_, d2, p_), fp::mul(o.num_, d1, p_), p_);
    den_ = fp::mul(d1, d2, p_);
    normalize();
    return *this;
}

Coeff Coeff::operator-() const { return Coeff(p_, fp::neg(num_, p_), den_); }

Coeff& Coeff::operator-=(const Coeff& o) { return *this += -o; }

Coeff& Coeff::operator*=(const Coeff& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        num_.clear();
        den_.clear();
        return *this;
    }
    num_ = fp::mul(num_, o.num_, p_);
    if (den_.empty() && o.den_.empty()) return *this;
    den_ = fp::mul(denominator(), o.denominator(), p_);
    normalize();
    return *this;
}

namespace {

std::string poly_to_string(const fp::Poly& a, std::string_view var) {
    if (a.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = fp::degree(a); k >= 0; --k) {
        if (a[k] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << a[k];
            continue;
        }
        if (a[k] != 1) os << a[k] << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace

std::string Coeff::to_string(std::string_view var) const {
    std::string n = poly_to_string(num_, var);
    if (den_.empty()) return n;
    bool compound_num = num_.size() > 1 && std::count_if(num_.begin(), num_.end(), [](auto c) { return c != 0; }) > 1;
    std::string out = compound_num ? "(" + n + ")" : n;
    return out + "/(" + poly_to_string(den_, var) + ")";
}

CoefficientField CoefficientField::prime_field(std::uint32_t p) {
    if (!fp::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    return CoefficientField(Kind::PrimeField, p, "");
}

CoefficientField CoefficientField::rational_functions(std::uint32_t p, std::string variable) {
    if (!fp::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (variable.empty()) throw std::invalid_argument("rational function field needs a variable name");
    return CoefficientField(Kind::RationalFunctions, p, std::move(variable));
}

Coeff CoefficientField::variable() const {
    if (kind_ != Kind::RationalFunctions) throw std::logic_error("prime field has no transcendental variable");
    return Coeff::variable(p_);
}

bool CoefficientField::contains(const Coeff& x) const {
    if (x.characteristic() != p_) return false;
    return kind_ == Kind::RationalFunctions || x.is_constant();
}

}  // namespace conductor

#include "conductor/algebra.hpp"

#include <sstream>

#include "conductor/errors.hpp"
#include "conductor/valued_ring.hpp"

namespace conductor {

FiniteFlatAlgebra::FiniteFlatAlgebra(BaseDVR base, std::vector<std::string> labels, StructureConstants table)
    : base_(std::move(base)), labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw ValidationError("rank", "algebra must have positive rank");
    if (table_.size() != n) throw ValidationError("structure_constants", "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
        if (table_[i].size() != n)
            throw ValidationError("structure_constants[" + std::to_string(i) + "]", "wrong number of entries");
        for (std::size_t j = 0; j < n; ++j) {
            if (table_[i][j].size() != n)
                throw ValidationError("structure_constants[" + std::to_string(i) + "][" + std::to_string(j) + "]",
                                      "coordinate vector has wrong length");
            for (const auto& s : table_[i][j])
                if (s.capacity() != base_.precision())
                    throw ValidationError("structure_constants", "entry precision does not match the base ring");
        }
    }
}

AlgebraElement FiniteFlatAlgebra::zero() const { return {std::vector<Series>(rank(), base_.zero())}; }

AlgebraElement FiniteFlatAlgebra::basis(int i) const {
    AlgebraElement e = zero();
    e.coords.at(i) = base_.one();
    return e;
}

AlgebraElement FiniteFlatAlgebra::scalar(const Series& s) const {
    AlgebraElement e = zero();
    e.coords[0] = s;
    return e;
}

AlgebraElement FiniteFlatAlgebra::from_coords(std::vector<Series> coords) const {
    if (static_cast<int>(coords.size()) != rank()) throw std::invalid_argument("coordinate vector has wrong length");
    return {std::move(coords)};
}

AlgebraElement FiniteFlatAlgebra::add(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r = a;
    for (int k = 0; k < rank(); ++k) r.coords[k] += b.coords[k];
    return r;
}

AlgebraElement FiniteFlatAlgebra::sub(const AlgebraElement& a, const AlgebraElement& b) const {
    AlgebraElement r = a;
    for (int k = 0; k < rank(); ++k) r.coords[k] -= b.coords[k];
    return r;
}

AlgebraElement FiniteFlatAlgebra::neg(const AlgebraElement& a) const {
    AlgebraElement r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

AlgebraElement FiniteFlatAlgebra::mul(const AlgebraElement& a, const AlgebraElement& b) const {
    const int n = rank();
    AlgebraElement r = zero();
    for (int i = 0; i < n; ++i) {
        if (a.coords[i] == base_.zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (b.coords[j] == base_.zero()) continue;
            Series ab = a.coords[i] * b.coords[j];
            for (int k = 0; k < n; ++k) {
                const Series& c = table_[i][j][k];
                if (c == base_.zero()) continue;
                r.coords[k] += ab * c;
            }
        }
    }
    return r;
}

AlgebraElement FiniteFlatAlgebra::scale(const Series& s, const AlgebraElement& a) const {
    AlgebraElement r = a;
    for (auto& c : r.coords) c = s * c;
    return r;
}

AlgebraElement FiniteFlatAlgebra::power(const AlgebraElement& a, int k) const {
    if (k < 0) throw std::invalid_argument("negative power in an algebra");
    AlgebraElement r = one();
    AlgebraElement b = a;
    while (k > 0) {
        if (k & 1) r = mul(r, b);
        k >>= 1;
        if (k > 0) b = mul(b, b);
    }
    return r;
}

Matrix<Series> FiniteFlatAlgebra::multiplication_matrix(const AlgebraElement& x) const {
    const int n = rank();
    Matrix<Series> m(n, n, base_.zero());
    for (int j = 0; j < n; ++j) {
        AlgebraElement col = mul(x, basis(j));
        for (int k = 0; k < n; ++k) m(k, j) = col.coords[k];
    }
    return m;
}

Series FiniteFlatAlgebra::trace(const AlgebraElement& x) const {
    Matrix<Series> m = multiplication_matrix(x);
    Series t = base_.zero();
    for (int i = 0; i < rank(); ++i) t += m(i, i);
    return t;
}

Series FiniteFlatAlgebra::norm(const AlgebraElement& x) const {
    return determinant(BaseRing(base_), multiplication_matrix(x));
}

bool FiniteFlatAlgebra::is_zero(const AlgebraElement& a) const {
    for (const auto& c : a.coords)
        if (!c.is_zero()) return false;
    return true;
}

bool FiniteFlatAlgebra::congruent(const AlgebraElement& a, const AlgebraElement& b) const { return is_zero(sub(a, b)); }

bool FiniteFlatAlgebra::is_commutative() const {
    for (int i = 0; i < rank(); ++i)
        for (int j = i + 1; j < rank(); ++j)
            for (int k = 0; k < rank(); ++k)
                if (!table_[i][j][k].congruent(table_[j][i][k])) return false;
    return true;
}

bool FiniteFlatAlgebra::is_associative() const {
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            for (int k = 0; k < rank(); ++k) {
                AlgebraElement left = mul(mul(basis(i), basis(j)), basis(k));
                AlgebraElement right = mul(basis(i), mul(basis(j), basis(k)));
                if (!congruent(left, right)) return false;
            }
    return true;
}

bool FiniteFlatAlgebra::has_unit() const {
    for (int j = 0; j < rank(); ++j) {
        if (!congruent(mul(basis(0), basis(j)), basis(j))) return false;
        if (!congruent(mul(basis(j), basis(0)), basis(j))) return false;
    }
    return true;
}

void FiniteFlatAlgebra::validate() const {
    if (!has_unit()) throw ValidationError("structure_constants", "basis element 0 is not the identity");
    if (!is_commutative()) throw ValidationError("structure_constants", "multiplication is not commutative");
    if (!is_associative()) throw ValidationError("structure_constants", "multiplication is not associative");
}

std::string FiniteFlatAlgebra::format(const AlgebraElement& x) const {
    const std::string& t = base_.field().variable_name().empty() ? std::string("t") : base_.field().variable_name();
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < rank(); ++k) {
        const Series& c = x.coords[k];
        if (c == base_.zero()) continue;
        if (!first) os << " + ";
        first = false;
        std::string s = c.to_string(t, base_.uniformizer_symbol());
        if (k == 0) {
            os << s;
        } else if (s == "1") {
            os << labels_[k];
        } else {
            bool compound = s.find(" + ") != std::string::npos;
            os << (compound ? "(" + s + ")" : s) << "*" << labels_[k];
        }
    }
    if (first) os << "0";
    return os.str();
}

FiniteFlatAlgebra monogenic_algebra(const BaseDVR& base, const BasePolynomial& f, const std::string& generator) {
    if (f.size() < 2) throw std::invalid_argument("monogenic algebra needs a polynomial of degree >= 1");
    if (!f.back().congruent(base.one()) || f.back().precision() < base.precision())
        throw std::invalid_argument("defining polynomial is not monic");
    const int n = static_cast<int>(f.size()) - 1;

    // powers[s] = coordinates of x^s for s < 2n - 1, reduced by x^n = -sum f_k x^k.
    std::vector<std::vector<Series>> powers;
    for (int s = 0; s < n; ++s) {
        std::vector<Series> v(n, base.zero());
        v[s] = base.one();
        powers.push_back(std::move(v));
    }
    for (int s = n; s <= 2 * n - 2; ++s) {
        const std::vector<Series>& prev = powers.back();
        std::vector<Series> v(n, base.zero());
        for (int k = 0; k + 1 < n; ++k) v[k + 1] = prev[k];
        const Series top = prev[n - 1];
        for (int k = 0; k < n; ++k) v[k] -= top * f[k];
        powers.push_back(std::move(v));
    }

    FiniteFlatAlgebra::StructureConstants table(n, std::vector<std::vector<Series>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) table[i][j] = powers[i + j];

    std::vector<std::string> labels;
    for (int s = 0; s < n; ++s) {
        if (s == 0) labels.push_back("1");
        else if (s == 1) labels.push_back(generator);
        else labels.push_back(generator + "^" + std::to_string(s));
    }
    return FiniteFlatAlgebra(base, std::move(labels), std::move(table));
}

Series discriminant_of_algebra(const FiniteFlatAlgebra& algebra) {
    const int n = algebra.rank();
    const BaseDVR& base = algebra.base();
    Matrix<Series> form(n, n, base.zero());
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Series tr = algebra.trace(algebra.mul(algebra.basis(i), algebra.basis(j)));
            form(i, j) = tr;
            form(j, i) = tr;
        }
    return determinant(BaseRing(base), std::move(form));
}

Series polynomial_discriminant(const BaseDVR& base, const BasePolynomial& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n < 1) throw std::invalid_argument("discriminant of a constant polynomial");
    if (n == 1) return base.one();
    BasePolynomial df(n, base.zero());
    for (int k = 1; k <= n; ++k) df[k - 1] = base.from_integer(k) * f[k];

    // Sylvester matrix of f (degree n) and f' (formal degree n - 1).
    const int size = 2 * n - 1;
    Matrix<Series> syl(size, size, base.zero());
    for (int r = 0; r < n - 1; ++r)
        for (int k = 0; k <= n; ++k) syl(r, r + n - k) = f[k];
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= n - 1; ++k) syl(n - 1 + r, r + n - 1 - k) = df[k];
    Series res = determinant(BaseRing(base), std::move(syl));
    return (n * (n - 1) / 2) % 2 == 1 ? -res : res;
}

}  // namespace conductor

#include "conductor/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "conductor/errors.hpp"
#include "conductor/rational.hpp"

namespace conductor {
namespace intmat {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
    return r;
}

namespace {

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
    return r;
}

// col[dst] -= q * col[src]
void column_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(q, m(r, src)));
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, std::int64_t q) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
}

}  // namespace

IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shapes do not compose");
    IntMatrix c(a.rows(), b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = checked_add(c(i, j), checked_mul(a(i, k), b(k, j)));
        }
    return c;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shapes differ");
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = checked_add(a(i, j), b(i, j));
    return c;
}

IntMatrix sub(const IntMatrix& a, const IntMatrix& b) { return add(a, scaled(-1, b)); }

IntMatrix scaled(std::int64_t s, const IntMatrix& a) {
    IntMatrix c = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = checked_mul(s, a(i, j));
    return c;
}

IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<std::int64_t> data;
    for (const auto& r : rows) {
        if (r.size() != cols) throw std::invalid_argument("ragged matrix rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return IntMatrix(rows.size(), cols, std::move(data));
}

bool is_zero(const IntMatrix& a) {
    return std::all_of(a.data().begin(), a.data().end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = checked_sub(checked_mul(m(i, j), m(k, k)), checked_mul(m(i, k), m(k, j))) / prev;
        prev = m(k, k);
    }
    return checked_mul(sign, m(n - 1, n - 1));
}

IntMatrix kernel(const IntMatrix& a) {
    const std::size_t n = a.cols();
    IntMatrix m = a;
    IntMatrix u = identity(n);
    std::size_t start = 0;
    for (std::size_t r = 0; r < m.rows() && start < n; ++r) {
        while (true) {
            std::size_t best = n;
            for (std::size_t c = start; c < n; ++c)
                if (m(r, c) != 0 && (best == n || std::llabs(m(r, c)) < std::llabs(m(r, best)))) best = c;
            if (best == n) break;
            m.swap_cols(best, start);
            u.swap_cols(best, start);
            bool reduced = true;
            for (std::size_t c = start + 1; c < n; ++c) {
                if (m(r, c) == 0) continue;
                const std::int64_t q = m(r, c) / m(r, start);
                column_axpy(m, c, start, q);
                column_axpy(u, c, start, q);
                if (m(r, c) != 0) reduced = false;
            }
            if (reduced) {
                ++start;
                break;
            }
        }
    }
    return u.block(0, n, start, n);
}

std::size_t rank(const IntMatrix& a) { return a.cols() - kernel(a).cols(); }

std::vector<std::int64_t> elementary_divisors(const IntMatrix& a) {
    IntMatrix m = a;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::int64_t> out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        while (true) {
            std::size_t pr = rows, pc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (m(r, c) != 0 && (pr == rows || std::llabs(m(r, c)) < std::llabs(m(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr == rows) {
                std::sort(out.begin(), out.end());
                return out;
            }
            m.swap_rows(pr, t);
            m.swap_cols(pc, t);
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                row_axpy(m, r, t, m(r, t) / m(t, t));
                if (m(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                column_axpy(m, c, t, m(t, c) / m(t, t));
                if (m(t, c) != 0) clean = false;
            }
            if (!clean) continue;
            // The pivot must divide the rest of the block.
            std::size_t bad_row = rows;
            for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (m(r, c) % m(t, t) != 0) {
                        bad_row = r;
                        break;
                    }
            if (bad_row == rows) break;
            row_axpy(m, t, bad_row, -1);
        }
        out.push_back(std::llabs(m(t, t)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a(i, j);
        m[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k].numerator() == 0) ++p;
        if (p == n) throw std::domain_error("matrix is singular");
        std::swap(m[p], m[k]);
        const Rational piv = m[k][k];
        for (auto& x : m[k]) x /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].numerator() == 0) continue;
            const Rational f = m[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    IntMatrix inv(n, n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = m[i][n + j];
            if (x.denominator() != 1) throw std::domain_error("matrix is not unimodular");
            inv(i, j) = x.numerator();
        }
    return inv;
}

std::string format(const IntMatrix& a) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < a.cols(); ++j) os << (j ? ", " : "") << a(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace intmat

GLattice::GLattice(FiniteGroup group, std::vector<IntMatrix> action, LatticeRole role)
    : group_(std::move(group)), action_(std::move(action)), role_(role) {
    const int m = group_.order();
    if (static_cast<int>(action_.size()) != m)
        throw ValidationError("action", "expected one matrix per group element (" + std::to_string(m) + ")");
    rank_ = action_.front().rows();
    for (int g = 0; g < m; ++g) {
        const IntMatrix& a = action_[g];
        const std::string path = "action[" + std::to_string(g) + "]";
        if (a.rows() != rank_ || a.cols() != rank_) throw ValidationError(path, "matrix is not " + std::to_string(rank_) + "x" + std::to_string(rank_));
        const std::int64_t d = intmat::determinant(a);
        if (d != 1 && d != -1) throw ValidationError(path, "determinant " + std::to_string(d) + " is not a unit");
    }
    if (action_[group_.identity()] != intmat::identity(rank_))
        throw ValidationError("action[" + std::to_string(group_.identity()) + "]", "identity does not act trivially");
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h)
            if (intmat::multiply(action_[g], action_[h]) != action_[group_.multiply(g, h)])
                throw ValidationError("action", "rho(" + group_.labels()[g] + ") rho(" + group_.labels()[h] +
                                                    ") differs from rho of the product");
}

GLattice GLattice::from_generators(const FiniteGroup& group, const std::vector<int>& generators,
                                   const std::vector<IntMatrix>& images, LatticeRole role) {
    if (generators.size() != images.size() || generators.empty())
        throw ValidationError("generators", "need one image per generator");
    const std::size_t r = images.front().rows();
    std::vector<std::optional<IntMatrix>> act(group.order());
    act[group.identity()] = intmat::identity(r);
    std::vector<int> frontier{group.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier)
            for (std::size_t k = 0; k < generators.size(); ++k) {
                const int y = group.multiply(generators[k], x);
                IntMatrix m = intmat::multiply(images[k], *act[x]);
                if (!act[y]) {
                    act[y] = std::move(m);
                    next.push_back(y);
                } else if (*act[y] != m) {
                    throw ValidationError("generators", "images do not define a homomorphism");
                }
            }
        frontier = std::move(next);
    }
    std::vector<IntMatrix> action;
    for (int g = 0; g < group.order(); ++g) {
        if (!act[g]) throw ValidationError("generators", "elements do not generate the group");
        action.push_back(*act[g]);
    }
    return GLattice(group, std::move(action), role);
}

GLattice GLattice::trivial(const FiniteGroup& group, std::size_t rank) {
    return GLattice(group, std::vector<IntMatrix>(group.order(), intmat::identity(rank)));
}

GLattice GLattice::regular(const FiniteGroup& group) { return permutation(group, {group.identity()}); }

GLattice GLattice::permutation(const FiniteGroup& group, const std::vector<int>& subgroup) {
    if (!group.is_subgroup(subgroup)) throw ValidationError("subgroup", "not a subgroup");
    // coset_of[x] = index of the coset xH.
    std::vector<int> coset_of(group.order(), -1);
    int count = 0;
    for (int x = 0; x < group.order(); ++x) {
        if (coset_of[x] >= 0) continue;
        for (int h : subgroup) coset_of[group.multiply(x, h)] = count;
        ++count;
    }
    std::vector<int> representative(count);
    for (int x = group.order(); x-- > 0;) representative[coset_of[x]] = x;
    std::vector<IntMatrix> action;
    for (int g = 0; g < group.order(); ++g) {
        IntMatrix m(count, count, 0);
        for (int c = 0; c < count; ++c) m(coset_of[group.multiply(g, representative[c])], c) = 1;
        action.push_back(std::move(m));
    }
    return GLattice(group, std::move(action));
}

GLattice GLattice::direct_sum(const GLattice& a, const GLattice& b) {
    if (!(a.group() == b.group())) throw std::invalid_argument("direct sum of lattices for different groups");
    const std::size_t n = a.rank() + b.rank();
    std::vector<IntMatrix> action;
    for (int g = 0; g < a.group().order(); ++g) {
        IntMatrix m(n, n, 0);
        for (std::size_t i = 0; i < a.rank(); ++i)
            for (std::size_t j = 0; j < a.rank(); ++j) m(i, j) = a.action(g)(i, j);
        for (std::size_t i = 0; i < b.rank(); ++i)
            for (std::size_t j = 0; j < b.rank(); ++j) m(a.rank() + i, a.rank() + j) = b.action(g)(i, j);
        action.push_back(std::move(m));
    }
    return GLattice(a.group(), std::move(action), a.role());
}

GLattice GLattice::rebased(const IntMatrix& basis) const {
    const IntMatrix inv = intmat::unimodular_inverse(basis);
    std::vector<IntMatrix> action;
    for (const auto& m : action_) action.push_back(intmat::multiply(inv, intmat::multiply(m, basis)));
    return GLattice(group_, std::move(action), role_);
}

bool is_primitive(const IntMatrix& basis) {
    const auto d = intmat::elementary_divisors(basis);
    return d.size() == basis.cols() && std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x == 1; });
}

SaturatedSublattice fixed_sublattice(const GLattice& lattice, const std::vector<int>& subgroup) {
    if (!lattice.group().is_subgroup(subgroup)) throw ValidationError("subgroup", "not a subgroup");
    const std::size_t r = lattice.rank();
    IntMatrix stacked(r * subgroup.size(), r, 0);
    for (std::size_t k = 0; k < subgroup.size(); ++k) {
        const IntMatrix d = intmat::sub(lattice.action(subgroup[k]), intmat::identity(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) stacked(k * r + i, j) = d(i, j);
    }
    return {r, intmat::kernel(stacked)};
}

bool is_equivariant(const IntMatrix& m, const GLattice& source, const GLattice& target) {
    if (!(source.group() == target.group())) return false;
    if (m.rows() != target.rank() || m.cols() != source.rank()) return false;
    for (int g = 0; g < source.group().order(); ++g)
        if (intmat::multiply(m, source.action(g)) != intmat::multiply(target.action(g), m)) return false;
    return true;
}

}  // namespace conductor

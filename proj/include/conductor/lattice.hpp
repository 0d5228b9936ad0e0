#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "conductor/group.hpp"
#include "conductor/matrix.hpp"

namespace conductor {

using IntMatrix = Matrix<std::int64_t>;

// Integer linear algebra on small matrices. Every operation uses checked
// 64-bit arithmetic and throws std::overflow_error instead of wrapping.
namespace intmat {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

IntMatrix identity(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix sub(const IntMatrix& a, const IntMatrix& b);
IntMatrix scaled(std::int64_t s, const IntMatrix& a);
IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
bool is_zero(const IntMatrix& a);

// Fraction-free (Bareiss) determinant.
std::int64_t determinant(const IntMatrix& a);
// Rank over Q.
std::size_t rank(const IntMatrix& a);
// Columns form a basis of {v in Z^cols : a v = 0}; the basis spans a
// saturated sublattice (it extends to a basis of Z^cols).
IntMatrix kernel(const IntMatrix& a);
// Nonzero invariant factors d_1 | d_2 | ..., positive.
std::vector<std::int64_t> elementary_divisors(const IntMatrix& a);
// Integer inverse of a unimodular matrix.
IntMatrix unimodular_inverse(const IntMatrix& a);

std::string format(const IntMatrix& a);

}  // namespace intmat

// Whether a lattice is read as the character or the cocharacter lattice of a
// torus. The Artin conductor of L (x) Q and of its dual agree, so this is
// bookkeeping only.
enum class LatticeRole { Characters, Cocharacters };

// A free Z-module of rank r with a G-action; action[g] acts on column
// vectors, so action[g*h] = action[g] * action[h].
class GLattice {
  public:
    // Validates rank, homomorphism property and unimodularity.
    GLattice(FiniteGroup group, std::vector<IntMatrix> action, LatticeRole role = LatticeRole::Characters);

    // Extends the images of `generators` to a homomorphism; throws
    // ValidationError if the images do not define one.
    static GLattice from_generators(const FiniteGroup& group, const std::vector<int>& generators,
                                    const std::vector<IntMatrix>& images,
                                    LatticeRole role = LatticeRole::Characters);
    static GLattice trivial(const FiniteGroup& group, std::size_t rank = 1);
    static GLattice regular(const FiniteGroup& group);
    // Z[G/H] with basis the left cosets of `subgroup`, in order of first
    // appearance when G is enumerated.
    static GLattice permutation(const FiniteGroup& group, const std::vector<int>& subgroup);
    static GLattice direct_sum(const GLattice& a, const GLattice& b);

    const FiniteGroup& group() const { return group_; }
    std::size_t rank() const { return rank_; }
    const IntMatrix& action(int g) const { return action_.at(g); }
    const std::vector<IntMatrix>& actions() const { return action_; }
    LatticeRole role() const { return role_; }

    // Same action on a new basis: columns of `basis` (unimodular) give the
    // new basis in old coordinates.
    GLattice rebased(const IntMatrix& basis) const;
    GLattice with_role(LatticeRole role) const {
        GLattice l = *this;
        l.role_ = role;
        return l;
    }

  private:
    FiniteGroup group_;
    std::size_t rank_ = 0;
    std::vector<IntMatrix> action_;
    LatticeRole role_;
};

// A primitive sublattice of Z^r given by the columns of `basis`.
struct SaturatedSublattice {
    std::size_t ambient_rank = 0;
    IntMatrix basis;

    std::size_t rank() const { return basis.cols(); }
};

// True iff the columns extend to a basis of Z^rows (all invariant factors 1).
bool is_primitive(const IntMatrix& basis);

// L^H as the kernel of the stacked maps rho(h) - 1, h in H.
SaturatedSublattice fixed_sublattice(const GLattice& lattice, const std::vector<int>& subgroup);

// m * rho_source(g) = rho_target(g) * m for every g.
bool is_equivariant(const IntMatrix& m, const GLattice& source, const GLattice& target);

}  // namespace conductor

#pragma once

#include "e36/rational.hpp"

#include <optional>
#include <vector>

namespace e36 {

// Integer linear algebra: vectors, matrices, Hermite/Smith forms with
// unimodular witnesses, kernels and exact rational solves.

using LatticeVector = std::vector<Int>;
using RationalVector = std::vector<Rational>;

struct LatticeMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<Int> a;  // row-major

    LatticeMatrix() = default;
    LatticeMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
    static LatticeMatrix identity(std::size_t n);
    static LatticeMatrix from_rows(const std::vector<LatticeVector>& rs);

    Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    LatticeVector row(std::size_t r) const;
    LatticeVector col(std::size_t c) const;
    LatticeMatrix transposed() const;
    bool operator==(const LatticeMatrix&) const = default;
};

LatticeMatrix mat_mul(const LatticeMatrix& A, const LatticeMatrix& B);
LatticeVector mat_vec(const LatticeMatrix& A, const LatticeVector& v);
Int dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

LatticeVector vec_sub(const LatticeVector& a, const LatticeVector& b);
LatticeVector vec_add(const LatticeVector& a, const LatticeVector& b);
LatticeVector vec_neg(const LatticeVector& a);
bool is_zero(const LatticeVector& v);

// gcd-normalized direction; zero vector stays zero
LatticeVector primitive(const LatticeVector& v);
RationalVector to_rational(const LatticeVector& v);
// clears denominators and primitivizes; direction of a rational vector
LatticeVector primitive_direction(const RationalVector& v);

Int det(const LatticeMatrix& A);           // square, fraction-free
std::size_t rank(const LatticeMatrix& A);  // over Q

// Row-style Hermite normal form H = U*A with |det U| = 1. H is
// upper-echelon with positive pivots and entries above a pivot reduced
// into [0, pivot).
struct HermiteResult {
    LatticeMatrix H;
    LatticeMatrix U;  // unimodular witness
    std::size_t rank = 0;
};
HermiteResult hermite_normal_form(const LatticeMatrix& A);

// Smith normal form S = U*A*V, U,V unimodular, S diagonal with
// d1 | d2 | ... (nonnegative).
struct SmithResult {
    LatticeMatrix S, U, V;
    std::vector<Int> divisors;  // nonzero diagonal entries
};
SmithResult smith_normal_form(const LatticeMatrix& A);

// Z-basis of {v : M v = 0}, rows Hermite-reduced (canonical).
std::vector<LatticeVector> kernel_lattice(const LatticeMatrix& M);

// Exact solve A x = b over Q; empty optional if inconsistent.
std::optional<RationalVector> solve_rational(const std::vector<RationalVector>& A,
                                             const RationalVector& b);
std::optional<RationalVector> solve_rational(const LatticeMatrix& A,
                                             const LatticeVector& b);

// Basis of {x : A x = 0} over Q.
std::vector<RationalVector> nullspace(const std::vector<RationalVector>& A);

std::size_t rank(const std::vector<RationalVector>& rows);
Rational det(const std::vector<RationalVector>& rows);

}  // namespace e36

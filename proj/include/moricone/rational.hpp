// rational.hpp -- exact scalars (GMP) and small dense exact linear algebra.
//
// Everything downstream (signatures, cone duality, bound formulas) depends on
// verdicts of the form "this determinant is zero" or "this value is < 62^2",
// so all arithmetic here is exact. Floating point only appears in report
// rendering helpers.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace moricone {

using Int = mpz_class;
using Rat = mpq_class;
using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major, rectangular

inline int sign_of(const Rat& q) { return sgn(q); }

// n/d as a canonical rational (gmp does not canonicalize two-arg construction).
Rat make_rat(long n, long d);
Rat make_rat(const Int& n, const Int& d);

// Accepts "p", "-p", "p/q" with nonzero q; canonicalizes. Throws std::invalid_argument.
Rat parse_rat(const std::string& text);

// Canonical "p" or "p/q" with positive denominator.
std::string rat_str(const Rat& q);

double to_double(const Rat& q);

QMat identity_matrix(int n);
QMat int_to_rat(const std::vector<std::vector<Int>>& m);

// Gaussian elimination utilities (all exact, inputs copied).
int rank_of(QMat a);
Rat determinant(QMat a);
QMat inverse(QMat a);                                   // throws on singular input
std::optional<QVec> solve_linear(QMat a, QVec b);       // one solution of a x = b, nullopt if inconsistent
std::vector<QVec> kernel_basis(QMat a);                 // basis of {x : a x = 0}

Rat dot(const QVec& x, const QVec& y);
QVec mat_vec(const QMat& a, const QVec& x);
// x^T form y
Rat bilinear(const QVec& x, const QMat& form, const QVec& y);

// Scale a nonzero rational vector by a positive rational so that entries are
// coprime integers. Direction is preserved (no sign flip).
QVec primitive_vector(const QVec& v);

// Lexicographic comparison, used for canonical ray ordering.
bool lex_less(const QVec& a, const QVec& b);

}  // namespace moricone

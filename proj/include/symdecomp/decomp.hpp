#pragma once

#include "symdecomp/partitions.hpp"
#include "symdecomp/polynomial.hpp"

#include <map>
#include <vector>

namespace symdecomp {

struct DecompositionPart {
    Exponent support;   // nonzero 0/1 vector
    long multiplicity;  // > 0

    bool operator==(const DecompositionPart&) const = default;
};

// One way of assembling a target exponent from distinct sigma supports:
// the multiplicity-weighted supports sum to the target, and the size-k
// multiplicities sum to lambda_k.
struct Decomposition {
    // Ordered by support size, then lex-descending support.
    std::vector<DecompositionPart> parts;

    bool operator==(const Decomposition&) const = default;
};

// The square lower-triangular system tying the degree-d coefficients of a
// symmetric polynomial to its weight-d coefficients over the sigma basis.
struct DegreeSystem {
    long d = 0;
    std::vector<CanonicalClass> rows;
    std::vector<Exponent> cols;                // phi of the rows
    std::vector<std::vector<Integer>> matrix;  // lower triangular, unit diagonal
    std::vector<Rational> rhs;
};

enum class CoefficientPath {
    General,       // enumeration over decompositions
    ClosedFormN2,  // two-variable factorial formula
};

std::vector<Decomposition> enumerate_decompositions(const Exponent& nu, const Exponent& lambda);

// Coefficient of g_lambda in the equation indexed by nu: the sum of
// lambda! / prod(multiplicity!) over all decompositions.
Integer coefficient(const Exponent& nu, const Exponent& lambda);

// Two-variable closed form: lambda_1! / ((nu_1-lambda_2)! (nu_2-lambda_2)!)
// when weight(lambda) = degree(nu) and lambda_2 <= nu_2, else 0. Requires
// nu_1 >= nu_2.
Integer n2_coefficient(const Exponent& nu, const Exponent& lambda);

DegreeSystem build_system(int n, long d, const Polynomial& f,
                          CoefficientPath path = CoefficientPath::General);

// Forward substitution; the unit diagonal makes the solve division-free.
std::map<Exponent, Rational> solve_degree(const DegreeSystem& sys);

// The unique g with compose_with_sigma(g, f.var_count()) == f.
// Throws NotSymmetricError when f is not symmetric.
Polynomial decompose(const Polynomial& f, CoefficientPath path = CoefficientPath::General);

// Decomposition of a series truncation: all weight-<=max_degree
// coefficients of the exact decomposition, nothing above. Symmetry is
// checked on the degree-<=max_degree part.
Polynomial decompose_truncated(const Polynomial& f_trunc, long max_degree,
                               CoefficientPath path = CoefficientPath::General);

// Composition of the weight-<=max_degree part of g with sigma, truncated
// to total degree <= max_degree.
Polynomial compose_truncated(const Polynomial& g, int n, long max_degree);

}  // namespace symdecomp

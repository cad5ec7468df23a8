#pragma once

#include "symdecomp/polynomial.hpp"

#include <stdexcept>

namespace symdecomp {

class InconsistentSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Reference decomposition that bypasses the per-degree triangular systems:
// expands sum g_lambda sigma^lambda monomial-by-monomial and solves the
// resulting equations (one per monomial, not one per orbit) by exact
// Gaussian elimination. Slow but direct.
Polynomial oracle_decompose(const Polynomial& f);

// True iff compose_with_sigma(g, f.var_count()) == f exactly.
bool verify_roundtrip(const Polynomial& f, const Polynomial& g);

}  // namespace symdecomp

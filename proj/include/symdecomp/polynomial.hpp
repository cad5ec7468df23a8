#pragma once

#include "symdecomp/exponent.hpp"
#include "symdecomp/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace symdecomp {

// An adjacent transposition of variables together with an exponent whose
// coefficient changes under it.
struct SymmetryWitness {
    int first = 0;  // 1-based variable indices; second = first + 1
    int second = 0;
    Exponent at;
};

class NotSymmetricError : public std::runtime_error {
public:
    explicit NotSymmetricError(SymmetryWitness witness);
    const SymmetryWitness& witness() const { return witness_; }

private:
    SymmetryWitness witness_;
};

// Sparse polynomial with exact rational coefficients. Stored terms are
// always nonzero, so equal term maps mean equal polynomials.
class Polynomial {
public:
    explicit Polynomial(int n);
    static Polynomial constant(int n, const Rational& value);
    static Polynomial monomial(Exponent e, const Rational& coeff);

    int var_count() const { return n_; }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponent& e) const;
    bool is_zero() const { return terms_.empty(); }
    std::optional<long> degree() const;  // empty for the zero polynomial

    // Accumulates c * x^e, dropping the term if the sum cancels.
    void add_term(const Exponent& e, const Rational& c);

    Polynomial truncated_to_degree(long max_degree) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    Polynomial operator*(const Rational& s) const;

    bool operator==(const Polynomial&) const = default;

private:
    int n_ = 0;
    std::map<Exponent, Rational> terms_;
};

// sigma_k: the sum of all products of k distinct variables among x1..xn.
Polynomial elementary_symmetric(int n, int k);

// Empty when f is symmetric; otherwise an adjacent transposition and an
// exponent whose coefficient it changes. Adjacent transpositions generate
// the whole permutation group, so checking them suffices.
std::optional<SymmetryWitness> symmetry_witness(const Polynomial& f);

// g(sigma_1, ..., sigma_n) expanded in x1..xn.
Polynomial compose_with_sigma(const Polynomial& g, int n);

}  // namespace symdecomp

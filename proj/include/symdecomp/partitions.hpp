#pragma once

#include "symdecomp/exponent.hpp"

#include <vector>

namespace symdecomp {

// Non-increasing representative of an exponent orbit under variable
// permutation; exactly one per orbit.
class CanonicalClass {
public:
    explicit CanonicalClass(Exponent rep);
    const Exponent& rep() const { return rep_; }

    auto operator<=>(const CanonicalClass&) const = default;

private:
    Exponent rep_;
};

CanonicalClass canonicalize(const Exponent& nu);

// All distinct rearrangements of the representative.
std::vector<Exponent> orbit(const CanonicalClass& c);

// Adjacent differences (rep_1 - rep_2, ..., rep_{n-1} - rep_n, rep_n).
// Sends degree-d classes to weight-d exponents.
Exponent phi(const CanonicalClass& c);

// Suffix sums; two-sided inverse of phi.
CanonicalClass phi_inv(const Exponent& lambda);

// All classes of degree d, lex-descending on representatives, so
// (d, 0, ..., 0) comes first.
std::vector<CanonicalClass> degree_classes(int n, long d);

// phi applied to degree_classes(n, d): the weight-d exponents in system
// column order.
std::vector<Exponent> weight_vectors(int n, long d);

}  // namespace symdecomp

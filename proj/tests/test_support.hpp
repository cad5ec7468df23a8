#pragma once

#include "symdecomp/decomp.hpp"
#include "symdecomp/io.hpp"
#include "symdecomp/oracle.hpp"

#include <cassert>
#include <random>
#include <string>
#include <vector>

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace symdecomp {
inline doctest::String toString(const Polynomial& p) {
    return doctest::String(format_poly(p, 'x').c_str());
}
}  // namespace symdecomp
#endif

namespace testsupport {

using namespace symdecomp;

inline Rational random_rational(std::mt19937& rng, long num_abs, long den_max) {
    std::uniform_int_distribution<long> num(-num_abs, num_abs);
    std::uniform_int_distribution<long> den(1, den_max);
    long v = num(rng);
    if (v == 0) v = 1;
    return make_rational(Integer(v), Integer(den(rng)));
}

// Random polynomial on the sigma side: weight-bounded exponents, small
// rational coefficients. May come out zero.
inline Polynomial random_sigma_poly(std::mt19937& rng, int n, long max_weight, double keep = 0.4) {
    std::bernoulli_distribution pick(keep);
    Polynomial g(n);
    for (long w = 1; w <= max_weight; ++w)
        for (const Exponent& lambda : weight_vectors(n, w))
            if (pick(rng)) g.add_term(lambda, random_rational(rng, 9, 4));
    return g;
}

// Arbitrary sparse polynomial with total degree <= max_degree.
inline Polynomial random_poly(std::mt19937& rng, int n, long max_degree, int max_terms,
                              long num_abs, long den_max) {
    std::uniform_int_distribution<int> count(0, max_terms);
    std::uniform_int_distribution<int> entry(0, static_cast<int>(max_degree));
    Polynomial p(n);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(n));
        do {
            for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = entry(rng);
        } while (Exponent(e).degree() > max_degree);
        p.add_term(Exponent(e), random_rational(rng, num_abs, den_max));
    }
    return p;
}

// [x^nu] sigma^lambda by direct multiplication; independent of the
// decomposition enumeration it cross-checks.
inline Integer expansion_coefficient(const Exponent& nu, const Exponent& lambda) {
    const Polynomial expanded =
        compose_with_sigma(Polynomial::monomial(lambda, Rational(1)), lambda.size());
    const Rational c = expanded.coeff(nu);
    assert(c.get_den() == 1);
    return Integer(c.get_num());
}

// All lambda in N^n with weight d, by plain recursion.
inline void weight_rec(int coord, int n, long remaining, std::vector<int>& acc,
                       std::vector<Exponent>& out) {
    if (coord == n) {
        if (remaining == 0) out.push_back(Exponent(acc));
        return;
    }
    const long step = coord + 1;
    for (long v = 0; v * step <= remaining; ++v) {
        acc[static_cast<std::size_t>(coord)] = static_cast<int>(v);
        weight_rec(coord + 1, n, remaining - v * step, acc, out);
    }
    acc[static_cast<std::size_t>(coord)] = 0;
}

inline std::vector<Exponent> all_weight_exponents(int n, long d) {
    std::vector<int> acc(static_cast<std::size_t>(n), 0);
    std::vector<Exponent> out;
    weight_rec(0, n, d, acc, out);
    return out;
}

// Degree-<=D truncation of exp(x1 + x2): coefficient 1/(a! b!) at (a, b).
inline Polynomial exp_sum_truncated(long max_degree) {
    Polynomial f(2);
    for (long a = 0; a <= max_degree; ++a)
        for (long b = 0; a + b <= max_degree; ++b)
            f.add_term(Exponent({static_cast<int>(a), static_cast<int>(b)}),
                       make_rational(Integer(1), factorial(a) * factorial(b)));
    return f;
}

// Weight-<=D part of exp(y1) seen as a 2-variable polynomial.
inline Polynomial exp_y1_truncated(long max_degree) {
    Polynomial g(2);
    for (long i = 0; i <= max_degree; ++i)
        g.add_term(Exponent({static_cast<int>(i), 0}), make_rational(Integer(1), factorial(i)));
    return g;
}

// Power sum x1^k + ... + xn^k.
inline Polynomial power_sum(int n, int k) {
    Polynomial p(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = k;
        p.add_term(Exponent(std::move(e)), Rational(1));
    }
    return p;
}

}  // namespace testsupport

#include "symdecomp/decomp.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <utility>

namespace symdecomp {

namespace {

// Candidate supports: nonzero 0/1 vectors inside the coordinate support of
// nu whose size class has budget in lambda, ordered by size then
// lex-descending. The search consumes them in index order, so emitted
// decompositions keep their parts sorted.
std::vector<Exponent> support_candidates(const Exponent& nu, const Exponent& lambda) {
    const int n = nu.size();
    std::vector<int> coords;
    for (int i = 0; i < n; ++i)
        if (nu[i] > 0) coords.push_back(i);
    std::vector<Exponent> out;
    for (int size = 1; size <= n; ++size) {
        if (lambda[size - 1] == 0) continue;
        if (size > static_cast<int>(coords.size())) break;
        std::vector<int> mask(coords.size(), 0);
        std::fill(mask.begin(), mask.begin() + size, 1);
        do {
            std::vector<int> v(static_cast<std::size_t>(n), 0);
            for (std::size_t j = 0; j < coords.size(); ++j)
                if (mask[j]) v[static_cast<std::size_t>(coords[j])] = 1;
            out.push_back(Exponent(std::move(v)));
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return out;
}

struct DecompositionSearch {
    std::vector<Exponent> candidates;
    std::vector<unsigned> sizes_left;  // bitmask of support sizes in candidates[idx..]
    std::vector<long> remaining;       // of nu, per coordinate
    std::vector<long> budget;          // of lambda, per size class (index size-1)
    long remaining_total = 0;
    std::vector<DecompositionPart> parts;
    std::vector<Decomposition> found;

    // Invariant along the search: sum_k k*budget[k-1] == remaining_total,
    // so exhausting one exhausts the other.
    void run(std::size_t idx) {
        if (remaining_total == 0) {
            found.push_back(Decomposition{parts});
            return;
        }
        if (idx == candidates.size()) return;
        const unsigned avail = sizes_left[idx];
        for (std::size_t s = 0; s < budget.size(); ++s)
            if (budget[s] > 0 && !((avail >> s) & 1u)) return;
        const Exponent& support = candidates[idx];
        const int size = static_cast<int>(support.degree());
        long cap = budget[static_cast<std::size_t>(size - 1)];
        for (int i = 0; i < support.size() && cap > 0; ++i)
            if (support[i] == 1) cap = std::min(cap, remaining[static_cast<std::size_t>(i)]);
        run(idx + 1);  // multiplicity 0
        for (long m = 1; m <= cap; ++m) {
            budget[static_cast<std::size_t>(size - 1)] -= 1;
            remaining_total -= size;
            for (int i = 0; i < support.size(); ++i)
                if (support[i] == 1) remaining[static_cast<std::size_t>(i)] -= 1;
            parts.push_back(DecompositionPart{support, m});
            run(idx + 1);
            parts.pop_back();
        }
        budget[static_cast<std::size_t>(size - 1)] += cap;
        remaining_total += cap * size;
        for (int i = 0; i < support.size(); ++i)
            if (support[i] == 1) remaining[static_cast<std::size_t>(i)] += cap;
    }
};

}  // namespace

std::vector<Decomposition> enumerate_decompositions(const Exponent& nu, const Exponent& lambda) {
    if (nu.size() != lambda.size()) throw std::invalid_argument("mismatched exponent lengths");
    if (nu.is_zero()) throw std::invalid_argument("target exponent must be nonzero");
    if (lambda.weight() != nu.degree()) return {};
    DecompositionSearch search;
    search.candidates = support_candidates(nu, lambda);
    search.sizes_left.assign(search.candidates.size() + 1, 0u);
    for (std::size_t i = search.candidates.size(); i-- > 0;)
        search.sizes_left[i] =
            search.sizes_left[i + 1] | (1u << (search.candidates[i].degree() - 1));
    search.remaining.assign(nu.entries().begin(), nu.entries().end());
    search.budget.assign(lambda.entries().begin(), lambda.entries().end());
    search.remaining_total = nu.degree();
    search.run(0);
    return std::move(search.found);
}

Integer coefficient(const Exponent& nu, const Exponent& lambda) {
    Integer lambda_factorial(1);
    for (int i = 0; i < lambda.size(); ++i) lambda_factorial *= factorial(lambda[i]);
    Integer total(0);
    for (const Decomposition& dec : enumerate_decompositions(nu, lambda)) {
        Integer denom(1);
        for (const DecompositionPart& part : dec.parts) denom *= factorial(part.multiplicity);
        total += exact_quotient(lambda_factorial, denom);
    }
    return total;
}

Integer n2_coefficient(const Exponent& nu, const Exponent& lambda) {
    if (nu.size() != 2 || lambda.size() != 2)
        throw std::invalid_argument("closed form requires exactly two variables");
    if (nu[0] < nu[1]) throw std::invalid_argument("nu must be non-increasing");
    if (lambda.weight() != nu.degree() || lambda[1] > nu[1]) return Integer(0);
    return exact_quotient(factorial(lambda[0]),
                          factorial(nu[0] - lambda[1]) * factorial(nu[1] - lambda[1]));
}

DegreeSystem build_system(int n, long d, const Polynomial& f, CoefficientPath path) {
    if (f.var_count() != n) throw std::invalid_argument("f must have n variables");
    if (d < 1) throw std::invalid_argument("degree must be positive");
    if (path == CoefficientPath::ClosedFormN2 && n != 2)
        throw std::invalid_argument("closed form requires exactly two variables");
    DegreeSystem sys;
    sys.d = d;
    sys.rows = degree_classes(n, d);
    sys.cols = weight_vectors(n, d);
    sys.matrix.reserve(sys.rows.size());
    sys.rhs.reserve(sys.rows.size());
    for (const CanonicalClass& row : sys.rows) {
        std::vector<Integer> entries;
        entries.reserve(sys.cols.size());
        for (const Exponent& col : sys.cols)
            entries.push_back(path == CoefficientPath::General ? coefficient(row.rep(), col)
                                                               : n2_coefficient(row.rep(), col));
        sys.matrix.push_back(std::move(entries));
        sys.rhs.push_back(f.coeff(row.rep()));
#ifndef NDEBUG
        // on symmetric input every orbit member carries the same coefficient
        for (const Exponent& member : orbit(row)) assert(f.coeff(member) == sys.rhs.back());
#endif
    }
    return sys;
}

std::map<Exponent, Rational> solve_degree(const DegreeSystem& sys) {
    const std::size_t m = sys.rows.size();
    std::vector<Rational> x(m);
    for (std::size_t i = 0; i < m; ++i) {
        Rational acc = sys.rhs[i];
        for (std::size_t j = 0; j < i; ++j)
            if (sys.matrix[i][j] != 0) acc -= Rational(sys.matrix[i][j]) * x[j];
        x[i] = acc;
    }
    std::map<Exponent, Rational> out;
    for (std::size_t j = 0; j < m; ++j) out.emplace(sys.cols[j], x[j]);
    return out;
}

namespace {

Polynomial decompose_symmetric(const Polynomial& f, CoefficientPath path) {
    const int n = f.var_count();
    if (n == 1) return f;  // sigma_1 = x1: the identity on coefficients
    Polynomial g(n);
    g.add_term(Exponent::zeros(n), f.coeff(Exponent::zeros(n)));
    const std::optional<long> deg = f.degree();
    if (!deg) return g;
    for (long d = 1; d <= *deg; ++d)
        for (const auto& [lambda, value] : solve_degree(build_system(n, d, f, path)))
            g.add_term(lambda, value);
    return g;
}

}  // namespace

Polynomial decompose(const Polynomial& f, CoefficientPath path) {
    if (path == CoefficientPath::ClosedFormN2 && f.var_count() != 2)
        throw std::invalid_argument("closed form requires exactly two variables");
    if (auto w = symmetry_witness(f)) throw NotSymmetricError(*w);
    return decompose_symmetric(f, path);
}

Polynomial decompose_truncated(const Polynomial& f_trunc, long max_degree, CoefficientPath path) {
    if (max_degree < 0) throw std::invalid_argument("degree bound must be nonnegative");
    if (path == CoefficientPath::ClosedFormN2 && f_trunc.var_count() != 2)
        throw std::invalid_argument("closed form requires exactly two variables");
    const Polynomial bounded = f_trunc.truncated_to_degree(max_degree);
    if (auto w = symmetry_witness(bounded)) throw NotSymmetricError(*w);
    return decompose_symmetric(bounded, path);
}

Polynomial compose_truncated(const Polynomial& g, int n, long max_degree) {
    if (g.var_count() != n) throw std::invalid_argument("g must have n variables");
    Polynomial bounded(n);
    for (const auto& [lambda, c] : g.terms())
        if (lambda.weight() <= max_degree) bounded.add_term(lambda, c);
    return compose_with_sigma(bounded, n).truncated_to_degree(max_degree);
}

}  // namespace symdecomp

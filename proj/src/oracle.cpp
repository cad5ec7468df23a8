#include "symdecomp/oracle.hpp"

#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

namespace symdecomp {

namespace {

// lambda in N^n with sum i*lambda_i == d, enumerated directly; kept local
// so the oracle does not lean on the solver's combinatorics.
void weight_exponents_rec(int coord, int n, long remaining, std::vector<int>& acc,
                          std::vector<Exponent>& out) {
    if (coord == n) {
        if (remaining == 0) out.push_back(Exponent(acc));
        return;
    }
    const long step = coord + 1;
    for (long v = 0; v * step <= remaining; ++v) {
        acc[static_cast<std::size_t>(coord)] = static_cast<int>(v);
        weight_exponents_rec(coord + 1, n, remaining - v * step, acc, out);
    }
    acc[static_cast<std::size_t>(coord)] = 0;
}

std::vector<Exponent> weight_exponents(int n, long d) {
    std::vector<int> acc(static_cast<std::size_t>(n), 0);
    std::vector<Exponent> out;
    weight_exponents_rec(0, n, d, acc, out);
    return out;
}

constexpr std::size_t kNoPivot = std::numeric_limits<std::size_t>::max();

// Exact Gauss-Jordan elimination, pivoting on the first nonzero entry.
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_row(cols, kNoPivot);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
        std::size_t p = next_row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[next_row]);
        std::swap(b[p], b[next_row]);
        const Rational lead = a[next_row][col];
        for (std::size_t j = col; j < cols; ++j) a[next_row][j] /= lead;
        b[next_row] /= lead;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next_row || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[r][j] -= factor * a[next_row][j];
            b[r] -= factor * b[next_row];
        }
        pivot_row[col] = next_row;
        ++next_row;
    }
    for (std::size_t r = next_row; r < rows; ++r)
        if (b[r] != 0) throw InconsistentSystemError("equations have no common solution");
    std::vector<Rational> x(cols);
    for (std::size_t col = 0; col < cols; ++col) {
        if (pivot_row[col] == kNoPivot) throw InconsistentSystemError("system is underdetermined");
        x[col] = b[pivot_row[col]];
    }
    return x;
}

}  // namespace

Polynomial oracle_decompose(const Polynomial& f) {
    if (auto w = symmetry_witness(f)) throw NotSymmetricError(*w);
    const int n = f.var_count();
    Polynomial g(n);
    g.add_term(Exponent::zeros(n), f.coeff(Exponent::zeros(n)));
    const std::optional<long> deg = f.degree();
    if (!deg) return g;
    for (long d = 1; d <= *deg; ++d) {
        const std::vector<Exponent> unknowns = weight_exponents(n, d);
        std::vector<Polynomial> expansions;
        expansions.reserve(unknowns.size());
        for (const Exponent& lambda : unknowns)
            expansions.push_back(compose_with_sigma(Polynomial::monomial(lambda, Rational(1)), n));
        // one equation per degree-d monomial seen anywhere
        std::map<Exponent, std::size_t> row_of;
        for (const Polynomial& p : expansions)
            for (const auto& [e, c] : p.terms()) row_of.emplace(e, row_of.size());
        for (const auto& [e, c] : f.terms())
            if (e.degree() == d) row_of.emplace(e, row_of.size());
        std::vector<std::vector<Rational>> a(row_of.size(),
                                             std::vector<Rational>(unknowns.size(), Rational(0)));
        std::vector<Rational> b(row_of.size(), Rational(0));
        for (std::size_t col = 0; col < unknowns.size(); ++col)
            for (const auto& [e, c] : expansions[col].terms()) a[row_of.at(e)][col] = c;
        for (const auto& [e, idx] : row_of) b[idx] = f.coeff(e);
        const std::vector<Rational> x = solve_exact(std::move(a), std::move(b));
        for (std::size_t col = 0; col < unknowns.size(); ++col) g.add_term(unknowns[col], x[col]);
    }
    return g;
}

bool verify_roundtrip(const Polynomial& f, const Polynomial& g) {
    if (f.var_count() != g.var_count()) throw std::invalid_argument("mismatched variable counts");
    return compose_with_sigma(g, f.var_count()) == f;
}

}  // namespace symdecomp

#include "symdecomp/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace symdecomp {

namespace {

std::string witness_message(const SymmetryWitness& w) {
    std::ostringstream os;
    os << "not symmetric: swapping x" << w.first << " and x" << w.second
       << " changes the coefficient at " << w.at;
    return os.str();
}

}  // namespace

NotSymmetricError::NotSymmetricError(SymmetryWitness witness)
    : std::runtime_error(witness_message(witness)), witness_(std::move(witness)) {}

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
}

Polynomial Polynomial::constant(int n, const Rational& value) {
    Polynomial p(n);
    p.add_term(Exponent::zeros(n), value);
    return p;
}

Polynomial Polynomial::monomial(Exponent e, const Rational& coeff) {
    Polynomial p(e.size());
    p.add_term(e, coeff);
    return p;
}

Rational Polynomial::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<long> Polynomial::degree() const {
    std::optional<long> best;
    for (const auto& [e, c] : terms_) {
        const long d = e.degree();
        if (!best || d > *best) best = d;
    }
    return best;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (e.size() != n_) throw std::invalid_argument("exponent length differs from variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::truncated_to_degree(long max_degree) const {
    Polynomial out(n_);
    for (const auto& [e, c] : terms_)
        if (e.degree() <= max_degree) out.add_term(e, c);
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mismatched variable counts");
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mismatched variable counts");
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, Rational(-c));
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("mismatched variable counts");
    Polynomial out(a.n_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea.plus(eb), Rational(ca * cb));
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, Rational(-c));
    return out;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial out(n_);
    for (const auto& [e, c] : terms_) out.add_term(e, Rational(c * s));
    return out;
}

Polynomial elementary_symmetric(int n, int k) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("sigma index out of range");
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    Polynomial p(n);
    do {
        p.add_term(Exponent(mask), Rational(1));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return p;
}

std::optional<SymmetryWitness> symmetry_witness(const Polynomial& f) {
    const int n = f.var_count();
    for (int i = 0; i + 1 < n; ++i) {
        for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
            const auto& [e, c] = *it;
            if (f.coeff(e.swapped(i, i + 1)) != c) return SymmetryWitness{i + 1, i + 2, e};
        }
    }
    return std::nullopt;
}

Polynomial compose_with_sigma(const Polynomial& g, int n) {
    if (g.var_count() != n) throw std::invalid_argument("g must have n variables");
    // powers[i] caches sigma_i^0, sigma_i^1, ...
    std::vector<std::vector<Polynomial>> powers(
        static_cast<std::size_t>(n) + 1, std::vector<Polynomial>{Polynomial::constant(n, Rational(1))});
    auto sigma_power = [&](int i, int p) -> const Polynomial& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        while (static_cast<int>(cache.size()) <= p)
            cache.push_back(cache.size() == 1 ? elementary_symmetric(n, i) : cache.back() * cache[1]);
        return cache[static_cast<std::size_t>(p)];
    };
    Polynomial out(n);
    for (const auto& [lambda, c] : g.terms()) {
        Polynomial term = Polynomial::constant(n, c);
        for (int i = 0; i < n; ++i)
            if (lambda[i] > 0) term = term * sigma_power(i + 1, lambda[i]);
        out = out + term;
    }
    return out;
}

}  // namespace symdecomp

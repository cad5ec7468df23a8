#include "symdecomp/partitions.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace symdecomp {

namespace {

bool non_increasing(const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

}  // namespace

CanonicalClass::CanonicalClass(Exponent rep) : rep_(std::move(rep)) {
    if (!non_increasing(rep_.entries()))
        throw std::invalid_argument("representative must be non-increasing");
}

CanonicalClass canonicalize(const Exponent& nu) {
    std::vector<int> v = nu.entries();
    std::sort(v.begin(), v.end(), std::greater<>());
    return CanonicalClass(Exponent(std::move(v)));
}

std::vector<Exponent> orbit(const CanonicalClass& c) {
    std::vector<int> v = c.rep().entries();
    std::sort(v.begin(), v.end());
    std::vector<Exponent> out;
    do {
        out.push_back(Exponent(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

Exponent phi(const CanonicalClass& c) {
    const std::vector<int>& r = c.rep().entries();
    std::vector<int> out(r.size());
    for (std::size_t i = 0; i + 1 < r.size(); ++i) out[i] = r[i] - r[i + 1];
    if (!r.empty()) out.back() = r.back();
    return Exponent(std::move(out));
}

CanonicalClass phi_inv(const Exponent& lambda) {
    const std::vector<int>& l = lambda.entries();
    std::vector<int> out(l.size());
    int suffix = 0;
    for (int i = static_cast<int>(l.size()) - 1; i >= 0; --i) {
        suffix += l[i];
        out[i] = suffix;
    }
    return CanonicalClass(Exponent(std::move(out)));
}

std::vector<CanonicalClass> degree_classes(int n, long d) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    if (d < 0) throw std::invalid_argument("degree must be nonnegative");
    std::vector<CanonicalClass> out;
    std::vector<int> parts;
    // Largest first part first, so the list comes out lex-descending.
    std::function<void(long, long, int)> descend = [&](long remaining, long max_part, int slots) {
        if (remaining == 0) {
            std::vector<int> v = parts;
            v.resize(static_cast<std::size_t>(n), 0);
            out.push_back(CanonicalClass(Exponent(std::move(v))));
            return;
        }
        if (slots == 0) return;
        const long hi = std::min(remaining, max_part);
        const long lo = (remaining + slots - 1) / slots;
        for (long p = hi; p >= lo; --p) {
            parts.push_back(static_cast<int>(p));
            descend(remaining - p, p, slots - 1);
            parts.pop_back();
        }
    };
    descend(d, d, n);
    return out;
}

std::vector<Exponent> weight_vectors(int n, long d) {
    std::vector<Exponent> out;
    for (const CanonicalClass& c : degree_classes(n, d)) out.push_back(phi(c));
    return out;
}

}  // namespace symdecomp

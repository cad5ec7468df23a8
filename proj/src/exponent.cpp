#include "symdecomp/exponent.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace symdecomp {

Exponent::Exponent(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int v : entries_)
        if (v < 0) throw std::invalid_argument("negative exponent entry");
}

Exponent Exponent::zeros(int n) { return Exponent(std::vector<int>(n, 0)); }

long Exponent::degree() const {
    long sum = 0;
    for (int v : entries_) sum += v;
    return sum;
}

long Exponent::weight() const {
    long sum = 0;
    for (int i = 0; i < size(); ++i) sum += static_cast<long>(i + 1) * entries_[i];
    return sum;
}

bool Exponent::is_zero() const {
    for (int v : entries_)
        if (v != 0) return false;
    return true;
}

bool Exponent::is_binary() const {
    for (int v : entries_)
        if (v > 1) return false;
    return true;
}

Exponent Exponent::plus(const Exponent& other) const {
    if (other.size() != size()) throw std::invalid_argument("exponent length mismatch");
    std::vector<int> out(entries_);
    for (int i = 0; i < size(); ++i) out[i] += other.entries_[i];
    return Exponent(std::move(out));
}

Exponent Exponent::swapped(int i, int j) const {
    std::vector<int> out(entries_);
    std::swap(out[i], out[j]);
    return Exponent(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Exponent& e) {
    for (int i = 0; i < e.size(); ++i) {
        if (i) os << ' ';
        os << e[i];
    }
    return os;
}

}  // namespace symdecomp

#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

namespace symdecomp {

// Multi-index over x1..xn; the vector length is the ambient variable count.
// Entries are nonnegative.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<int> entries);
    static Exponent zeros(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }

    long degree() const;  // sum of entries
    long weight() const;  // sum of i * entry_i with i = 1..n
    bool is_zero() const;
    bool is_binary() const;  // all entries 0 or 1

    Exponent plus(const Exponent& other) const;
    Exponent swapped(int i, int j) const;  // entries i and j exchanged (0-based)

    auto operator<=>(const Exponent&) const = default;

private:
    std::vector<int> entries_;
};

// Entries separated by single spaces, e.g. "2 1 0".
std::ostream& operator<<(std::ostream& os, const Exponent& e);

}  // namespace symdecomp

#pragma once

#include "symdecomp/decomp.hpp"
#include "symdecomp/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symdecomp {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& message);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class SyntaxError : public ParseError {
public:
    SyntaxError(std::size_t position, const std::string& expected);
    const std::string& expected() const { return expected_; }

private:
    std::string expected_;
};

class VariableOutOfRangeError : public ParseError {
public:
    VariableOutOfRangeError(std::size_t position, long index, int var_count);
    long index() const { return index_; }
    int var_count() const { return var_count_; }

private:
    long index_;
    int var_count_;
};

class ZeroDenominatorError : public ParseError {
public:
    explicit ZeroDenominatorError(std::size_t position);
};

// Grammar: terms joined by '+'/'-'; a term is an optional rational
// coefficient ("3", "5/2") followed by '*'-joined factors "x3" / "x3^2".
// Whitespace between tokens is insignificant; implicit multiplication
// ("3x1") is rejected. 'y' is accepted as variable letter as well. The
// literal "0" gives the zero polynomial.
Polynomial parse_poly(std::string_view text, int n);

// Deterministic rendering: terms by weight ascending (entry i graded by
// i, the degree after substituting sigma_i), ties broken lex-descending
// on the exponent; coefficients in lowest terms; unit coefficients
// elided. parse_poly(format_poly(p), n) == p.
std::string format_poly(const Polynomial& p, char var_prefix = 'x');

struct TermRecord {
    Exponent exponent;
    Integer numerator;
    Integer denominator;

    bool operator==(const TermRecord&) const = default;
};

// One record per term, in format_poly order.
std::vector<TermRecord> export_records(const Polynomial& p);

// One line per record: space-separated exponent entries, then numerator,
// then denominator, comma-separated. Locale-independent.
std::string format_records(const std::vector<TermRecord>& records);

// Plain-text table: column header, then one line per row with the row
// label and right-aligned integer entries.
std::string format_system(const DegreeSystem& sys);

// Term map in presentation order (weight ascending, then lex-descending).
std::vector<std::pair<Exponent, Rational>> presentation_order(const Polynomial& p);

}  // namespace symdecomp

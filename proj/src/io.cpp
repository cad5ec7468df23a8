#include "symdecomp/io.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <iomanip>
#include <sstream>
#include <utility>

namespace symdecomp {

namespace {

std::string with_position(const std::string& what, std::size_t position) {
    std::ostringstream os;
    os << what << " at position " << position;
    return os.str();
}

constexpr long kMaxExponent = 1000000L;

}  // namespace

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error(message), position_(position) {}

SyntaxError::SyntaxError(std::size_t position, const std::string& expected)
    : ParseError(position, with_position("expected " + expected, position)), expected_(expected) {}

VariableOutOfRangeError::VariableOutOfRangeError(std::size_t position, long index, int var_count)
    : ParseError(position, with_position("variable index " + std::to_string(index) +
                                             " outside 1.." + std::to_string(var_count),
                                         position)),
      index_(index),
      var_count_(var_count) {}

ZeroDenominatorError::ZeroDenominatorError(std::size_t position)
    : ParseError(position, with_position("zero denominator", position)) {}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    std::size_t pos() const { return pos_; }
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void take() { ++pos_; }

    bool accept(char c) {
        if (!eof() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_digit() const {
        return !eof() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    std::string digits() {
        const std::size_t start = pos_;
        while (at_digit()) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Integer parse_integer(Cursor& cur, const char* what) {
    if (!cur.at_digit()) throw SyntaxError(cur.pos(), what);
    return Integer(cur.digits(), 10);
}

long parse_bounded(Cursor& cur, const char* what, long max_value) {
    const std::size_t pos = cur.pos();
    const Integer value = parse_integer(cur, what);
    if (value > max_value) throw SyntaxError(pos, std::string(what) + " within range");
    return value.get_si();
}

void parse_factor(Cursor& cur, int n, std::vector<int>& exponent) {
    if (cur.eof() || (cur.peek() != 'x' && cur.peek() != 'y'))
        throw SyntaxError(cur.pos(), "a variable such as x1");
    const std::size_t var_pos = cur.pos();
    cur.take();
    if (!cur.at_digit()) throw SyntaxError(cur.pos(), "a variable index");
    const Integer index = parse_integer(cur, "a variable index");
    if (index < 1 || index > n) {
        const long reported = index.fits_slong_p() ? index.get_si() : LONG_MAX;
        throw VariableOutOfRangeError(var_pos, reported, n);
    }
    const int k = static_cast<int>(index.get_si());
    long e = 1;
    cur.skip_ws();
    if (cur.accept('^')) {
        cur.skip_ws();
        e = parse_bounded(cur, "an exponent", kMaxExponent);
    }
    const long updated = exponent[static_cast<std::size_t>(k - 1)] + e;
    if (updated > kMaxExponent) throw SyntaxError(var_pos, "an exponent within range");
    exponent[static_cast<std::size_t>(k - 1)] = static_cast<int>(updated);
}

void parse_term(Cursor& cur, int n, bool negate, Polynomial& out) {
    cur.skip_ws();
    if (cur.eof()) throw SyntaxError(cur.pos(), "a term");
    Rational coeff(1);
    std::vector<int> exponent(static_cast<std::size_t>(n), 0);
    if (cur.at_digit()) {
        const Integer numerator = parse_integer(cur, "a number");
        Integer denominator(1);
        cur.skip_ws();
        if (cur.accept('/')) {
            cur.skip_ws();
            const std::size_t den_pos = cur.pos();
            denominator = parse_integer(cur, "a denominator");
            if (denominator == 0) throw ZeroDenominatorError(den_pos);
        }
        coeff = make_rational(numerator, denominator);
    } else {
        parse_factor(cur, n, exponent);
    }
    cur.skip_ws();
    while (cur.accept('*')) {
        cur.skip_ws();
        parse_factor(cur, n, exponent);
        cur.skip_ws();
    }
    if (negate) coeff = -coeff;
    out.add_term(Exponent(std::move(exponent)), coeff);
}

}  // namespace

Polynomial parse_poly(std::string_view text, int n) {
    if (n < 1) throw std::invalid_argument("variable count must be positive");
    Cursor cur(text);
    Polynomial out(n);
    cur.skip_ws();
    if (cur.eof()) throw SyntaxError(cur.pos(), "a term");
    bool negate = cur.accept('-');
    if (!negate) cur.accept('+');
    parse_term(cur, n, negate, out);
    for (;;) {
        cur.skip_ws();
        if (cur.eof()) break;
        if (cur.accept('+'))
            negate = false;
        else if (cur.accept('-'))
            negate = true;
        else
            throw SyntaxError(cur.pos(), "'+' or '-'");
        parse_term(cur, n, negate, out);
    }
    return out;
}

std::vector<std::pair<Exponent, Rational>> presentation_order(const Polynomial& p) {
    std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const long wa = a.first.weight();
        const long wb = b.first.weight();
        if (wa != wb) return wa < wb;
        return b.first < a.first;  // lex-descending within a weight
    });
    return terms;
}

std::string format_poly(const Polynomial& p, char var_prefix) {
    if (var_prefix != 'x' && var_prefix != 'y')
        throw std::invalid_argument("variable prefix must be 'x' or 'y'");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : presentation_order(p)) {
        const bool negative = c < 0;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const Rational magnitude = abs(c);
        if (e.is_zero()) {
            os << magnitude;
            continue;
        }
        if (magnitude != 1) os << magnitude << '*';
        bool first_factor = true;
        for (int i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_factor) os << '*';
            os << var_prefix << (i + 1);
            if (e[i] > 1) os << '^' << e[i];
            first_factor = false;
        }
    }
    return os.str();
}

std::vector<TermRecord> export_records(const Polynomial& p) {
    std::vector<TermRecord> out;
    for (const auto& [e, c] : presentation_order(p))
        out.push_back(TermRecord{e, Integer(c.get_num()), Integer(c.get_den())});
    return out;
}

std::string format_records(const std::vector<TermRecord>& records) {
    std::ostringstream os;
    for (const TermRecord& r : records)
        os << r.exponent << ',' << r.numerator << ',' << r.denominator << '\n';
    return os.str();
}

std::string format_system(const DegreeSystem& sys) {
    std::size_t width = 1;
    for (const auto& row : sys.matrix)
        for (const Integer& entry : row) width = std::max(width, entry.get_str().size());
    std::ostringstream os;
    os << "cols:";
    for (std::size_t j = 0; j < sys.cols.size(); ++j) os << (j == 0 ? " " : " | ") << sys.cols[j];
    os << '\n';
    for (std::size_t i = 0; i < sys.rows.size(); ++i) {
        os << sys.rows[i].rep() << " |";
        for (const Integer& entry : sys.matrix[i])
            os << ' ' << std::setw(static_cast<int>(width)) << entry;
        os << '\n';
    }
    return os.str();
}

}  // namespace symdecomp

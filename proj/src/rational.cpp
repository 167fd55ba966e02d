#include "chores/rational.hpp"

#include <stdexcept>

#include "chores/errors.hpp"

namespace chores {

Rat make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    // The two-argument constructor canonicalizes (lowest terms, positive
    // denominator); the string constructor does not, so never use it.
    return Rat(num, den);
}

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k)
        if (s[k] < '0' || s[k] > '9') return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text))
            throw ParseError("", "not a rational: '" + text + "'");
        return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den))
        throw ParseError("", "not a rational: '" + text + "'");
    if (den[0] == '-')
        throw ParseError("", "denominator must be positive: '" + text + "'");
    Int d(den);
    if (d == 0) throw ParseError("", "zero denominator: '" + text + "'");
    return make_rational(Int(num), d);
}

std::string format_rational(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

double rational_to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace chores

#include "antimagic/rational.hpp"

#include "antimagic/errors.hpp"

#include <cctype>

namespace antimagic {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text, const std::string& where) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError(where, "malformed rational '" + std::string(text) + "'");
    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw ParseError(where, "zero denominator in '" + std::string(text) + "'");
    Rational r(negative ? Integer(-p) : p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

} // namespace antimagic

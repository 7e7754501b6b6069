#ifndef ANTIMAGIC_RATIONAL_HPP
#define ANTIMAGIC_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace antimagic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0 after sign normalisation). Throws
/// ParseError tagged with `where` on anything else, including q = 0.
Rational parse_rational(std::string_view text, const std::string& where = {});

/// Canonical lowest-terms form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// p/q in lowest terms (mpq_class's two-argument constructor does not reduce).
inline Rational make_rational(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

} // namespace antimagic

#endif

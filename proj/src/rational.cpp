#include "subsum/rational.hpp"

#include "subsum/error.hpp"

#include <cctype>

namespace subsum {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IndexBeyondFinite: return "IndexBeyondFinite";
        case ErrorCode::UnsupportedExponent: return "UnsupportedExponent";
        case ErrorCode::UnsupportedKind: return "UnsupportedKind";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::EmptyUnion: return "EmptyUnion";
        case ErrorCode::DepthLimit: return "DepthLimit";
        case ErrorCode::NotDivergent: return "NotDivergent";
        case ErrorCode::DivergentTail: return "DivergentTail";
        case ErrorCode::IndeterminateComparison: return "IndeterminateComparison";
        case ErrorCode::WrongKind: return "WrongKind";
        case ErrorCode::NotDigitForm: return "NotDigitForm";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw Error(ErrorCode::ParseError, "not an exact rational: '" + std::string(text) + "'");
    }
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    Rational value(n, d);
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Rational fraction(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
    Rational out(Integer(std::to_string(num), 10), Integer(std::to_string(den), 10));
    out.canonicalize();
    return out;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
    Integer num;
    Integer den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    // Powers of coprime integers stay coprime, so no canonicalization is needed.
    return Rational(num, den);
}

Integer pow2(std::uint64_t exponent) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, exponent);
    return out;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational rational_gcd(const Rational& a, const Rational& b) {
    Integer g;
    Integer l;
    mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Rational out(g, l);
    out.canonicalize();
    return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace subsum

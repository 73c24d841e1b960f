#include "ncf/rational.hpp"

#include <charconv>
#include <cctype>
#include <cstdlib>

#include "ncf/errors.hpp"

namespace ncf {

namespace {

// Exact conversion of a decimal literal: mantissa digits over a power of
// ten, with an optional exponent folded in.
Rational decimalToRational(std::string_view text) {
    std::string digits;
    bool negative = false;
    long fracDigits = 0;
    long exponent = 0;
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    bool seenDigit = false, seenDot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (seenDot) ++fracDigits;
            seenDigit = true;
        } else if (c == '.' && !seenDot) {
            seenDot = true;
        } else if ((c == 'e' || c == 'E') && seenDigit) {
            long e = 0;
            auto res = std::from_chars(text.data() + i + 1, text.data() + text.size(), e);
            if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
                throw Error("invalid numeric literal: " + std::string(text));
            exponent = e;
            i = text.size();
            break;
        } else {
            throw Error("invalid numeric literal: " + std::string(text));
        }
    }
    if (!seenDigit) throw Error("invalid numeric literal: " + std::string(text));

    mpz_class mantissa(digits.empty() ? "0" : digits, 10);
    if (negative) mantissa = -mantissa;
    long shift = exponent - fracDigits;
    mpz_class pow10 = 1;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    Rational q;
    if (shift >= 0)
        q = Rational(mantissa * pow10);
    else
        q = Rational(mantissa, pow10);
    q.canonicalize();
    return q;
}

} // namespace

Rational ratFromString(std::string_view text) {
    std::size_t begin = text.find_first_not_of(" \t");
    std::size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) throw Error("empty numeric literal");
    text = text.substr(begin, end - begin + 1);

    if (text.find('.') != std::string_view::npos ||
        ((text.find('e') != std::string_view::npos || text.find('E') != std::string_view::npos) &&
         text.find('/') == std::string_view::npos)) {
        return decimalToRational(text);
    }
    try {
        Rational q(std::string(text), 10);
        q.canonicalize();
        if (sgn(q.get_den()) == 0) throw Error("zero denominator: " + std::string(text));
        return q;
    } catch (const std::invalid_argument&) {
        throw Error("invalid rational literal: " + std::string(text));
    }
}

std::string ratToString(const Rational& q) {
    return q.get_str();
}

std::string doubleToString(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

} // namespace ncf

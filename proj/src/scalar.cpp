#include "hpade/scalar.hpp"

#include <cctype>
#include <string>

namespace hpade {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

// Leading zeros would make the GMP string constructor read the digits as octal.
BigInt from_digits(std::string_view digits) {
    auto first = digits.find_first_not_of('0');
    if (first == std::string_view::npos) return BigInt(0);
    return BigInt(std::string(digits.substr(first)));
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
    BigInt v = from_digits(s);
    return negative ? BigInt(-v) : v;
}

BigInt pow10(long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string_view::npos) {
        std::string_view exp_part = s.substr(epos + 1);
        BigInt e = parse_integer(exp_part, whole);
        if (abs(e) > 10000) throw ParseError("exponent out of range: '" + std::string(whole) + "'");
        exponent = e.convert_to<long>();
        s = s.substr(0, epos);
    }
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string digits;
    long frac_len = 0;
    auto dot = s.find('.');
    if (dot == std::string_view::npos) {
        digits = std::string(s);
    } else {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        if (ip.empty() && fp.empty()) throw ParseError("not a rational number: '" + std::string(whole) + "'");
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) {
            throw ParseError("not a rational number: '" + std::string(whole) + "'");
        }
        digits = std::string(ip) + std::string(fp);
        frac_len = static_cast<long>(fp.size());
    }
    if (!all_digits(digits)) throw ParseError("not a rational number: '" + std::string(whole) + "'");
    BigInt mantissa = from_digits(digits);
    if (negative) mantissa = -mantissa;
    long shift = exponent - frac_len;
    if (shift >= 0) return Rational(mantissa * pow10(shift));
    return Rational(mantissa, pow10(-shift));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        BigInt num = parse_integer(s.substr(0, slash), text);
        BigInt den = parse_integer(s.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (s.find_first_of(".eE") != std::string_view::npos) return parse_decimal(s, text);
    return Rational(parse_integer(s, text));
}

ComplexRational parse_complex_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty() || s.back() != 'i') return ComplexRational(parse_rational(s));
    s.remove_suffix(1);
    // Split at the last sign that is not leading and not part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string_view re_part = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
    Rational im;
    if (im_part.empty() || im_part == "+") {
        im = 1;
    } else if (im_part == "-") {
        im = -1;
    } else {
        im = parse_rational(im_part);
    }
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return {re, im};
}

std::string to_string(const Rational& x) {
    BigInt num = numerator(x);
    BigInt den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string to_string(const ComplexRational& z) {
    if (z.is_real()) return to_string(z.re());
    std::string im;
    if (z.im() == 1) {
        im = "i";
    } else if (z.im() == -1) {
        im = "-i";
    } else {
        im = to_string(z.im()) + "i";
    }
    if (z.re() == 0) return im;
    if (im.front() != '-') im = "+" + im;
    return to_string(z.re()) + im;
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

ComplexFloat to_complex_float(const ComplexRational& z) {
    return {to_double(z.re()), to_double(z.im())};
}

Rational pow(const Rational& x, int e) {
    if (e < 0) {
        if (x == 0) throw DivisionByZero("zero raised to a negative power");
        return Rational(1) / pow(x, -e);
    }
    Rational result = 1;
    Rational base = x;
    unsigned k = static_cast<unsigned>(e);
    while (k) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k) base *= base;
    }
    return result;
}

Rational pochhammer(const Rational& gamma, unsigned p) {
    Rational r = 1;
    for (unsigned i = 0; i < p; ++i) r *= gamma + i;
    return r;
}

Rational gamma_ratio(const Rational& gamma, unsigned n, unsigned m) {
    Rational denom = 1;
    for (unsigned i = 0; i < m; ++i) {
        Rational factor = gamma + n + i;
        if (factor == 0) {
            throw DivisionByZero("gamma_ratio: factor n+gamma+" + std::to_string(i) + " vanishes");
        }
        denom *= factor;
    }
    return Rational(1) / denom;
}

}  // namespace hpade

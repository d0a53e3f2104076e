#include "hpade/polynomial.hpp"

namespace hpade {

Poly<Rational> primitive_part(const Poly<Rational>& p) {
    Poly<Rational> r = p.trimmed();
    if (r.is_zero()) return r;
    BigInt lcm_den = 1;
    for (const auto& c : r.coeffs()) {
        BigInt d = denominator(c);
        lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
    }
    BigInt content = 0;
    for (const auto& c : r.coeffs()) {
        BigInt v = numerator(c) * (lcm_den / denominator(c));
        content = boost::multiprecision::gcd(content, v);
    }
    if (r[r.size() - 1] < 0) content = -content;
    r *= Rational(lcm_den, content);
    return r;
}

Poly<Rational> gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
    Poly<Rational> x = primitive_part(a);
    Poly<Rational> y = primitive_part(b);
    while (!y.is_zero()) {
        Poly<Rational> r = divmod(x, y).second;
        x = std::move(y);
        y = primitive_part(r);
    }
    if (x.is_zero()) return x;
    Rational lead = x[x.size() - 1];
    x *= Rational(1) / lead;
    return x;
}

}  // namespace hpade

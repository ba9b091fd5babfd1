#include "toricfan/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace toricfan {

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            s += a[i] * b[i];
    return s;
}

std::int64_t dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dot: dimension mismatch");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RationalVector to_rational(const IntVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

bool is_zero(const RationalVector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

IntVector primitive(const RationalVector& v) {
    mpz_class den = 1;
    for (const auto& x : v)
        den = lcm(den, mpz_class(x.get_den()));
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class z = x.get_num() * (den / x.get_den());
        g = gcd(g, z);
        ints.push_back(z);
    }
    IntVector out(v.size(), 0);
    if (g == 0)
        return out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        mpz_class z = ints[i] / g;
        if (!z.fits_slong_p())
            throw std::overflow_error("primitive: entry exceeds 64 bits");
        out[i] = z.get_si();
    }
    return out;
}

IntVector primitive(const IntVector& v) {
    std::int64_t g = 0;
    for (auto x : v)
        g = std::gcd(g, x);
    IntVector out = v;
    if (g == 0)
        return out;
    for (auto& x : out)
        x /= g;
    return out;
}

IntVector primitive_unsigned(const RationalVector& v) {
    IntVector p = primitive(v);
    for (auto x : p) {
        if (x == 0)
            continue;
        if (x < 0)
            for (auto& y : p)
                y = -y;
        break;
    }
    return p;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string to_string(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

Rational from_double(double x) {
    if (!std::isfinite(x))
        throw std::invalid_argument("from_double: non-finite value");
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Rational& x, const Rational& y) { return x < y; });
}

} // namespace toricfan

#include "bierfan/rational.hpp"

#include <charconv>
#include <limits>

namespace bierfan {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(i128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rational arithmetic exceeded 64-bit range");
    return static_cast<long long>(v);
}

}  // namespace

Rational Rational::reduce(i128 n, i128 d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    i128 g = gcd128(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
}

Rational::Rational(long long n, long long d) { *this = reduce(n, d); }

Rational operator+(const Rational& a, const Rational& b) {
    return Rational::reduce(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                            i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational::reduce(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                            i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational::reduce(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("rational division by zero");
    return Rational::reduce(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail();

    auto parse_int = [&](std::string_view part) -> long long {
        long long value = 0;
        if (part.empty()) fail();
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size()) fail();
        return value;
    };

    long long num = 0;
    long long den = 1;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = parse_int(s.substr(0, slash));
        den = parse_int(s.substr(slash + 1));
    } else {
        num = parse_int(s);
    }
    return Rational(negative ? -num : num, den);
}

}  // namespace bierfan

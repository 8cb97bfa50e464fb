#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bierfan {

// Exact rational number with 64-bit numerator and denominator.
// All fan geometry runs on these; floating point never appears in the
// geometric code paths. Intermediate products are computed in 128 bits
// and any value that does not fit back into 64 bits after reduction
// throws std::overflow_error instead of wrapping.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    // Accepts an optional sign, then "a" or "a/b".
    static Rational parse(std::string_view text);

  private:
    static Rational reduce(__int128 n, __int128 d);

    long long num_;
    long long den_;  // always > 0
};

}  // namespace bierfan

#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "tensorcolor/errors.hpp"

namespace tc {

/**
 * Exact rational number on int64, always normalized (gcd 1, positive
 * denominator).  Every threshold comparison in the library goes through this
 * type so that boundary cases are decided exactly, never by floating point.
 * Comparisons cross-multiply in 128-bit, which is safe for the magnitudes the
 * library produces (counts below 2^40, denominators below 2^20).
 */
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw InvalidParams("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return Rat(a.num * b.num, a.den * b.den);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw InvalidParams("rational division by zero");
        return Rat(a.num * b.den, a.den * b.num);
    }
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return (__int128)a.num * b.den < (__int128)b.num * a.den;
    }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

    bool is_zero() const { return num == 0; }

    // floor(this * k) for integer k >= 0; used for per-vertex deletion budgets.
    long long floor_mul(long long k) const {
        __int128 p = (__int128)num * k;
        if (p >= 0) return (long long)(p / den);
        return (long long)(-(((-p) + den - 1) / den));
    }

    double to_double() const { return (double)num / (double)den; }

    // Renders "0" / "3" / "1/40".  parse() accepts that form plus plain
    // decimals like "0.015".
    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    static Rat parse(const std::string& s);
};

inline Rat Rat::parse(const std::string& s) {
    if (s.empty()) throw InvalidParams("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash != std::string::npos) {
            long long n = std::stoll(s.substr(0, slash));
            long long d = std::stoll(s.substr(slash + 1));
            return Rat(n, d);
        }
        auto dot = s.find('.');
        if (dot == std::string::npos) return Rat(std::stoll(s));
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (fp.size() > 18) fp = fp.substr(0, 18);
        bool neg = !ip.empty() && ip[0] == '-';
        long long whole = ip.empty() || ip == "-" ? 0 : std::stoll(ip);
        long long frac = fp.empty() ? 0 : std::stoll(fp);
        long long scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        Rat r = Rat(whole < 0 ? -whole : whole) + Rat(frac, scale);
        return neg || whole < 0 ? -r : r;
    } catch (const std::exception&) {
        throw InvalidParams("bad rational literal: " + s);
    }
}

} // namespace tc

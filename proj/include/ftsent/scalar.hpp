#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace ftsent {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

/// Element of Q(i): exact complex number with rational real and imaginary
/// parts. Used as the certification backend for all zero-tests that are
/// tolerance-sensitive in floating point.
struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(int v) : re(v) {}  // NOLINT: implicit by design, mirrors std::complex
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational d = b.re * b.re + b.im * b.im;
        if (d == 0) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational conj(const GaussianRational& v) { return {v.re, -v.im}; }

inline Complex to_complex(const GaussianRational& v) {
    return {static_cast<double>(v.re), static_cast<double>(v.im)};
}

/// Parses "p/q", "p", or "-p/q"; denominator must be nonzero.
inline Rational parse_rational(std::string_view text) {
    auto pos = text.find('/');
    try {
        if (pos == std::string_view::npos) {
            return Rational(boost::multiprecision::cpp_int(std::string(text)));
        }
        boost::multiprecision::cpp_int num{std::string(text.substr(0, pos))};
        boost::multiprecision::cpp_int den{std::string(text.substr(pos + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + std::string(text) + "': " + e.what());
    }
}

inline std::string rational_to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

template <class F>
struct scalar_traits;

template <>
struct scalar_traits<Complex> {
    static constexpr bool is_exact = false;
    using real_type = double;
    static Complex conjugate(const Complex& v) { return std::conj(v); }
    static real_type real(const Complex& v) { return v.real(); }
    static real_type imag(const Complex& v) { return v.imag(); }
    static real_type abs_sq(const Complex& v) { return std::norm(v); }
    static double to_double(real_type r) { return r; }
    static Complex to_std_complex(const Complex& v) { return v; }
};

template <>
struct scalar_traits<GaussianRational> {
    static constexpr bool is_exact = true;
    using real_type = Rational;
    static GaussianRational conjugate(const GaussianRational& v) { return conj(v); }
    static real_type real(const GaussianRational& v) { return v.re; }
    static real_type imag(const GaussianRational& v) { return v.im; }
    static real_type abs_sq(const GaussianRational& v) { return v.re * v.re + v.im * v.im; }
    static double to_double(const real_type& r) { return static_cast<double>(r); }
    static Complex to_std_complex(const GaussianRational& v) { return to_complex(v); }
};

}  // namespace ftsent

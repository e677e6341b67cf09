#pragma once

#include <array>
#include <cmath>

#include "ftsent/fts.hpp"

namespace ftsent {

/// Pure three-qubit state: 8 amplitudes a_ABC stored at index i = 4A + 2B + C
/// (decimal-binary order: 0 <-> 000, ..., 7 <-> 111; bit order A,B,C).
/// No normalization is imposed.
template <class F>
struct ThreeQubitState {
    std::array<F, 8> amp{};

    F& operator[](int i) { return amp[static_cast<std::size_t>(i)]; }
    const F& operator[](int i) const { return amp[static_cast<std::size_t>(i)]; }

    /// Amplitude by bit triple.
    F& at(int a, int b, int c) { return amp[static_cast<std::size_t>(4 * a + 2 * b + c)]; }
    const F& at(int a, int b, int c) const {
        return amp[static_cast<std::size_t>(4 * a + 2 * b + c)];
    }

    friend ThreeQubitState operator+(const ThreeQubitState& x, const ThreeQubitState& y) {
        ThreeQubitState r;
        for (int i = 0; i < 8; ++i) r[i] = x[i] + y[i];
        return r;
    }
    friend ThreeQubitState operator-(const ThreeQubitState& x, const ThreeQubitState& y) {
        ThreeQubitState r;
        for (int i = 0; i < 8; ++i) r[i] = x[i] - y[i];
        return r;
    }
    friend ThreeQubitState operator*(const F& s, const ThreeQubitState& x) {
        ThreeQubitState r;
        for (int i = 0; i < 8; ++i) r[i] = s * x[i];
        return r;
    }
    friend bool operator==(const ThreeQubitState& x, const ThreeQubitState& y) {
        return x.amp == y.amp;
    }
};

/// State -> FTS dictionary:
///   alpha = a111, beta = a000,
///   A = (a001, a010, a100), B = (a110, a101, a011).
template <class F>
FtsElement<F> to_fts(const ThreeQubitState<F>& s) {
    FtsElement<F> x;
    x.alpha = s[7];
    x.beta = s[0];
    x.a_part = {s[1], s[2], s[4]};
    x.b_part = {s[6], s[5], s[3]};
    return x;
}

template <class F>
ThreeQubitState<F> from_fts(const FtsElement<F>& x) {
    ThreeQubitState<F> s;
    s[7] = x.alpha;
    s[0] = x.beta;
    s[1] = x.a_part[0];
    s[2] = x.a_part[1];
    s[4] = x.a_part[2];
    s[6] = x.b_part[0];
    s[5] = x.b_part[1];
    s[3] = x.b_part[2];
    return s;
}

/// Squared Hermitian norm, sum |a_i|^2.
template <class F>
typename scalar_traits<F>::real_type norm_sq(const ThreeQubitState<F>& s) {
    typename scalar_traits<F>::real_type n{};
    for (int i = 0; i < 8; ++i) n += scalar_traits<F>::abs_sq(s[i]);
    return n;
}

/// Largest |a_i| (float backend), used for degree-scaled zero tests.
inline double max_abs(const ThreeQubitState<Complex>& s) {
    double m = 0.0;
    for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(s[i]));
    return m;
}

inline double max_abs(const FtsElement<Complex>& x) {
    double m = 0.0;
    for (const auto& v : x.to_array()) m = std::max(m, std::abs(v));
    return m;
}

template <class F>
bool is_exactly_zero(const ThreeQubitState<F>& s) {
    for (int i = 0; i < 8; ++i)
        if (!(s[i] == F{})) return false;
    return true;
}

template <class F>
bool is_exactly_zero(const FtsElement<F>& x) {
    for (const auto& v : x.to_array())
        if (!(v == F{})) return false;
    return true;
}

/// Relabels the parties by a permutation perm of {0,1,2} = {A,B,C}: the new
/// party p takes the role of old party perm[p]. Used by the triality suites.
template <class F>
ThreeQubitState<F> permute_parties(const ThreeQubitState<F>& s, const std::array<int, 3>& perm) {
    ThreeQubitState<F> r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                std::array<int, 3> bits{a, b, c};
                std::array<int, 3> old{};
                for (int p = 0; p < 3; ++p) old[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = bits[static_cast<std::size_t>(p)];
                r.at(a, b, c) = s.at(old[0], old[1], old[2]);
            }
    return r;
}

}  // namespace ftsent

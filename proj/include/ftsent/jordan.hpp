#pragma once

#include <array>

#include "ftsent/scalar.hpp"

namespace ftsent {

/// Element of the cubic Jordan algebra F+F+F (three scalars, componentwise
/// product, cubic norm A1*A2*A3, base point (1,1,1)).
template <class F>
struct JordanElement {
    std::array<F, 3> comp{};

    JordanElement() = default;
    JordanElement(F a1, F a2, F a3) : comp{std::move(a1), std::move(a2), std::move(a3)} {}

    F& operator[](int i) { return comp[static_cast<std::size_t>(i)]; }
    const F& operator[](int i) const { return comp[static_cast<std::size_t>(i)]; }

    static JordanElement zero() { return {}; }
    static JordanElement identity() { return {F(1), F(1), F(1)}; }
    static JordanElement basis(int i) {
        JordanElement e;
        e[i] = F(1);
        return e;
    }

    friend JordanElement operator+(const JordanElement& a, const JordanElement& b) {
        return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    }
    friend JordanElement operator-(const JordanElement& a, const JordanElement& b) {
        return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    }
    friend JordanElement operator-(const JordanElement& a) { return {-a[0], -a[1], -a[2]}; }
    friend JordanElement operator*(const F& s, const JordanElement& a) {
        return {s * a[0], s * a[1], s * a[2]};
    }
    friend bool operator==(const JordanElement& a, const JordanElement& b) {
        return a.comp == b.comp;
    }
};

/// N(A) = A1 A2 A3, homogeneous of degree 3.
template <class F>
F cubic_norm(const JordanElement<F>& a) {
    return a[0] * a[1] * a[2];
}

/// Full linearisation of N: symmetric trilinear, N(A,A,A) = N(A).
template <class F>
F linearized_norm(const JordanElement<F>& a, const JordanElement<F>& b, const JordanElement<F>& c) {
    F s = cubic_norm(a + b + c) - cubic_norm(a + b) - cubic_norm(a + c) - cubic_norm(b + c) +
          cubic_norm(a) + cubic_norm(b) + cubic_norm(c);
    return s / F(6);
}

/// Tr(A) = A1 + A2 + A3 (agrees with 3 N(c,c,A)).
template <class F>
F trace(const JordanElement<F>& a) {
    return a[0] + a[1] + a[2];
}

/// S(A) = 3 N(A,A,c).
template <class F>
F s_quadratic(const JordanElement<F>& a) {
    return F(3) * linearized_norm(a, a, JordanElement<F>::identity());
}

/// S(A,B) = 6 N(A,B,c); S(A,A) = 2 S(A).
template <class F>
F s_bilinear(const JordanElement<F>& a, const JordanElement<F>& b) {
    return F(6) * linearized_norm(a, b, JordanElement<F>::identity());
}

/// Trace bilinear form Tr(A,B) = Tr(A)Tr(B) - S(A,B); for F+F+F this is the
/// componentwise dot product, which is what we evaluate directly.
template <class F>
F trace_form(const JordanElement<F>& a, const JordanElement<F>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

/// Quadratic adjoint: A# = (A2 A3, A1 A3, A1 A2). Satisfies (A#)# = N(A) A
/// and Tr(A#, B) = 3 N(A,A,B).
template <class F>
JordanElement<F> sharp(const JordanElement<F>& a) {
    return {a[1] * a[2], a[0] * a[2], a[0] * a[1]};
}

/// Freudenthal cross product, the bilinear polarization of the adjoint:
/// A x B = (A+B)# - A# - B#.
///
/// Note on the product/trace expansion: the identity consistent with this
/// definition is
///   A x B = 2 (A o B) - Tr(A) B - Tr(B) A + [Tr(A) Tr(B) - Tr(A,B)] 1,
/// measured here on F+F+F (e.g. (1,0,0) x (0,1,0) = (0,0,1)). Variants of
/// this expansion circulate with halved coefficients and a flipped Tr(A,B)
/// sign; those do not reproduce the definition above and are not used.
template <class F>
JordanElement<F> cross(const JordanElement<F>& a, const JordanElement<F>& b) {
    return sharp(a + b) - sharp(a) - sharp(b);
}

/// Componentwise Jordan product A o B = (A1 B1, A2 B2, A3 B3); commutative
/// and associative, identity (1,1,1).
template <class F>
JordanElement<F> jordan_product(const JordanElement<F>& a, const JordanElement<F>& b) {
    return {a[0] * b[0], a[1] * b[1], a[2] * b[2]};
}

}  // namespace ftsent

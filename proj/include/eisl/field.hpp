#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

// Exact arithmetic in the tower Q < Q(w) < Q(w, sqrt3), where w is a primitive
// cube root of unity and theta = w - conj(w) = 1 + 2w = sqrt(-3).  Every scalar
// appearing in the lattice computations lives here; there is no floating point
// on any verification path.

namespace eisl {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat makeRat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int floorRat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return q;
}

/// Nearest integer, halves rounded up.
inline Int roundRat(const Rat& x) { return floorRat(x + makeRat(1, 2)); }

struct MathError : std::runtime_error {
    explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Eisenstein integers Z[w]
// ---------------------------------------------------------------------------

/// a + b*w with a, b integers; w^2 = -1 - w, conj(a+bw) = (a-b) - bw.
struct Eis {
    Int a, b;

    Eis() : a(0), b(0) {}
    Eis(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit Eis(long x) : a(x), b(0) {}

    Eis conj() const { return Eis(a - b, -b); }
    /// |x|^2 = a^2 - ab + b^2.
    Int normSq() const { return a * a - a * b + b * b; }
    bool isZero() const { return a == 0 && b == 0; }
    bool isUnit() const { return normSq() == 1; }

    friend Eis operator+(const Eis& x, const Eis& y) { return Eis(x.a + y.a, x.b + y.b); }
    friend Eis operator-(const Eis& x, const Eis& y) { return Eis(x.a - y.a, x.b - y.b); }
    friend Eis operator-(const Eis& x) { return Eis(-x.a, -x.b); }
    friend Eis operator*(const Eis& x, const Eis& y) {
        return Eis(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
    }
    friend bool operator==(const Eis& x, const Eis& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Eis& x, const Eis& y) { return !(x == y); }
    /// Lexicographic on (a, b); a total order used only for deterministic tie-breaking.
    friend bool operator<(const Eis& x, const Eis& y) {
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
    friend std::ostream& operator<<(std::ostream& os, const Eis& x) {
        return os << x.a << (sgn(x.b) < 0 ? "" : "+") << x.b << "w";
    }
};

inline Eis eisOmega() { return Eis(0, 1); }
inline Eis eisOmegaBar() { return Eis(-1, -1); }
inline Eis eisTheta() { return Eis(1, 2); }  // w - conj(w) = sqrt(-3)

/// The six units of Z[w]: {1, -1, w, -w, wbar, -wbar}.
inline const std::array<Eis, 6>& eisUnits() {
    static const std::array<Eis, 6> u = {Eis(1, 0),  Eis(-1, 0), Eis(0, 1),
                                         Eis(0, -1), Eis(-1, -1), Eis(1, 1)};
    return u;
}

/// x/theta if x lies in theta*Z[w]; equivalently 3 | a+b.
std::optional<Eis> divByThetaOpt(const Eis& x);
Eis divByTheta(const Eis& x);  // throws MathError("NotDivisible")

/// Residue of x modulo theta, in {0, 1, 2} (w == 1 mod theta).
inline int modTheta(const Eis& x) {
    Int r = (x.a + x.b) % 3;
    return static_cast<int>(mpz_class((r + 3) % 3).get_si());
}

/// The unit multiples of x; a single {0} for x = 0.
std::vector<Eis> unitAssociates(const Eis& x);

/// Deterministic representative among the six associates: the one with the
/// largest imaginary part, ties broken by the larger real part.  This sends
/// -theta (and every associate of theta) to theta.
Eis canonicalAssociate(const Eis& x);
/// The unit u with u*x == canonicalAssociate(x).
Eis canonicalizingUnit(const Eis& x);

// ---------------------------------------------------------------------------
// Q(w)
// ---------------------------------------------------------------------------

/// a + b*w with rational a, b.
struct Cyclo {
    Rat a, b;

    Cyclo() : a(0), b(0) {}
    Cyclo(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit Cyclo(const Eis& x) : a(x.a), b(x.b) {}
    explicit Cyclo(long x) : a(x), b(0) {}

    Cyclo conj() const { return Cyclo(a - b, -b); }
    Rat normSq() const { return a * a - a * b + b * b; }
    bool isZero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool isEisenstein() const {
        return mpz_cmp_ui(mpq_denref(a.get_mpq_t()), 1) == 0 &&
               mpz_cmp_ui(mpq_denref(b.get_mpq_t()), 1) == 0;
    }
    Eis asEis() const {
        if (!isEisenstein()) throw MathError("Cyclo::asEis: not integral");
        return Eis(Int(a.get_num()), Int(b.get_num()));
    }

    friend Cyclo operator+(const Cyclo& x, const Cyclo& y) { return Cyclo(x.a + y.a, x.b + y.b); }
    friend Cyclo operator-(const Cyclo& x, const Cyclo& y) { return Cyclo(x.a - y.a, x.b - y.b); }
    friend Cyclo operator-(const Cyclo& x) { return Cyclo(-x.a, -x.b); }
    friend Cyclo operator*(const Cyclo& x, const Cyclo& y) {
        return Cyclo(x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b);
    }
    friend bool operator==(const Cyclo& x, const Cyclo& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Cyclo& x, const Cyclo& y) { return !(x == y); }

    Cyclo inverse() const {
        Rat n = normSq();
        if (sgn(n) == 0) throw MathError("Cyclo: division by zero");
        Cyclo c = conj();
        return Cyclo(c.a / n, c.b / n);
    }
    friend Cyclo operator/(const Cyclo& x, const Cyclo& y) { return x * y.inverse(); }
};

// ---------------------------------------------------------------------------
// Real subfield Q(sqrt3)
// ---------------------------------------------------------------------------

/// p + q*sqrt(3) with rational p, q; totally ordered by the exact sign rule.
struct RealQuad {
    Rat p, q;

    RealQuad() : p(0), q(0) {}
    RealQuad(Rat p_, Rat q_) : p(std::move(p_)), q(std::move(q_)) {}
    explicit RealQuad(long x) : p(x), q(0) {}
    explicit RealQuad(const Rat& x) : p(x), q(0) {}

    bool isRational() const { return sgn(q) == 0; }
    bool isZero() const { return sgn(p) == 0 && sgn(q) == 0; }

    friend RealQuad operator+(const RealQuad& x, const RealQuad& y) { return {x.p + y.p, x.q + y.q}; }
    friend RealQuad operator-(const RealQuad& x, const RealQuad& y) { return {x.p - y.p, x.q - y.q}; }
    friend RealQuad operator-(const RealQuad& x) { return {-x.p, -x.q}; }
    friend RealQuad operator*(const RealQuad& x, const RealQuad& y) {
        return {x.p * y.p + 3 * x.q * y.q, x.p * y.q + x.q * y.p};
    }
    friend RealQuad operator*(const Rat& c, const RealQuad& x) { return {c * x.p, c * x.q}; }
    RealQuad inverse() const {
        Rat d = p * p - 3 * q * q;
        if (sgn(d) == 0) throw MathError("RealQuad: division by zero");
        return {p / d, -q / d};
    }
    friend RealQuad operator/(const RealQuad& x, const RealQuad& y) { return x * y.inverse(); }
    friend bool operator==(const RealQuad& x, const RealQuad& y) { return x.p == y.p && x.q == y.q; }
    friend bool operator!=(const RealQuad& x, const RealQuad& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const RealQuad& x) {
        return os << x.p << (sgn(x.q) < 0 ? "" : "+") << x.q << "*sqrt3";
    }
};

/// Exact sign of p + q*sqrt(3) without floating point: case analysis on the
/// signs of p and q, settled by comparing p^2 with 3 q^2 when they disagree.
int sign(const RealQuad& x);

inline bool operator<(const RealQuad& x, const RealQuad& y) { return sign(x - y) < 0; }
inline bool operator<=(const RealQuad& x, const RealQuad& y) { return sign(x - y) <= 0; }
inline bool operator>(const RealQuad& x, const RealQuad& y) { return sign(x - y) > 0; }
inline bool operator>=(const RealQuad& x, const RealQuad& y) { return sign(x - y) >= 0; }

/// Largest integer <= p + q*sqrt(3), computed exactly.
Int floorRealQuad(const RealQuad& x);

// ---------------------------------------------------------------------------
// Q(w, sqrt3)
// ---------------------------------------------------------------------------

/// u + v*sqrt(3) with u, v in Q(w).  sqrt(3) is real: complex conjugation
/// fixes it and sends w to wbar.  Contains i = theta/sqrt3.
struct FieldElem {
    Cyclo u, v;

    FieldElem() = default;
    FieldElem(Cyclo u_, Cyclo v_) : u(std::move(u_)), v(std::move(v_)) {}
    explicit FieldElem(const Cyclo& c) : u(c), v() {}
    explicit FieldElem(const Eis& x) : u(Cyclo(x)), v() {}
    explicit FieldElem(const Rat& x) : u(Cyclo(x, Rat(0))), v() {}
    explicit FieldElem(long x) : u(Cyclo(x)), v() {}
    explicit FieldElem(const RealQuad& x) : u(Cyclo(x.p, Rat(0))), v(Cyclo(x.q, Rat(0))) {}

    FieldElem conj() const { return {u.conj(), v.conj()}; }
    bool isZero() const { return u.isZero() && v.isZero(); }
    bool isReal() const { return sgn(u.b) == 0 && sgn(v.b) == 0; }
    bool isCyclo() const { return v.isZero(); }
    bool isEisenstein() const { return v.isZero() && u.isEisenstein(); }
    Eis asEis() const {
        if (!v.isZero()) throw MathError("FieldElem::asEis: sqrt3 part nonzero");
        return u.asEis();
    }
    Cyclo asCyclo() const {
        if (!v.isZero()) throw MathError("FieldElem::asCyclo: sqrt3 part nonzero");
        return u;
    }
    RealQuad asRealQuad() const {
        if (!isReal()) throw MathError("FieldElem::asRealQuad: not real");
        return {u.a, v.a};
    }

    friend FieldElem operator+(const FieldElem& x, const FieldElem& y) { return {x.u + y.u, x.v + y.v}; }
    friend FieldElem operator-(const FieldElem& x, const FieldElem& y) { return {x.u - y.u, x.v - y.v}; }
    friend FieldElem operator-(const FieldElem& x) { return {-x.u, -x.v}; }
    friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
        return {x.u * y.u + Cyclo(Rat(3), Rat(0)) * (x.v * y.v), x.u * y.v + x.v * y.u};
    }
    friend bool operator==(const FieldElem& x, const FieldElem& y) { return x.u == y.u && x.v == y.v; }
    friend bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

    FieldElem inverse() const;
    friend FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x * y.inverse(); }
};

inline FieldElem feOmega() { return FieldElem(eisOmega()); }
inline FieldElem feTheta() { return FieldElem(eisTheta()); }
inline FieldElem feSqrt3() { return {Cyclo(), Cyclo(1)}; }
inline FieldElem feHalf() { return FieldElem(makeRat(1, 2)); }

/// x * conj(x) as an exact element of Q(sqrt3); nonnegative, zero iff x = 0.
RealQuad absSq(const FieldElem& x);

/// (x - conj(x))/2: the imaginary part *as an element* (Im theta = theta).
inline FieldElem imPart(const FieldElem& x) { return feHalf() * (x - x.conj()); }
inline FieldElem rePart(const FieldElem& x) { return feHalf() * (x + x.conj()); }
inline bool isPurelyImaginary(const FieldElem& x) { return (x + x.conj()).isZero(); }

/// Coefficient c in Im x = c * theta, defined for x in Q(w).
Rat imThetaCoeff(const Cyclo& x);

// ---------------------------------------------------------------------------
// Single adjoined radical p + q*sqrt(d), used by the region-corner checks
// where |m| and the v5 radicand are not in Q(sqrt3).
// ---------------------------------------------------------------------------

struct QuadRad {
    Rat p, q, d;  // p + q*sqrt(d), d >= 0
    QuadRad(Rat p_, Rat q_, Rat d_) : p(std::move(p_)), q(std::move(q_)), d(std::move(d_)) {
        if (sgn(d) < 0) throw MathError("QuadRad: negative radicand");
    }
};

/// Exact sign of p + q*sqrt(d).  Unlike RealQuad, equality with zero is
/// possible when d is a square of a rational times q^2 ratio; handled exactly.
int sign(const QuadRad& x);

}  // namespace eisl

#include "eisl/field.hpp"

#include <algorithm>
#include <cmath>

namespace eisl {

std::optional<Eis> divByThetaOpt(const Eis& x) {
    // x/theta = -x*theta/3; divisibility <=> 3 | a+b.
    if ((x.a + x.b) % 3 != 0) return std::nullopt;
    Eis p = x * eisTheta();
    return Eis(-p.a / 3, -p.b / 3);
}

Eis divByTheta(const Eis& x) {
    auto r = divByThetaOpt(x);
    if (!r) throw MathError("NotDivisible: argument is not in theta*E");
    return *r;
}

std::vector<Eis> unitAssociates(const Eis& x) {
    if (x.isZero()) return {Eis()};
    std::vector<Eis> out;
    out.reserve(6);
    for (const Eis& u : eisUnits()) out.push_back(u * x);
    return out;
}

Eis canonicalAssociate(const Eis& x) { return canonicalizingUnit(x) * x; }

Eis canonicalizingUnit(const Eis& x) {
    if (x.isZero()) return Eis(1, 0);
    // Im(a+bw) = (b/2) sqrt3, Re = a - b/2.  Maximize (Im, Re) <=> (b, 2a-b) lex.
    Eis bestU(1, 0);
    Eis best = x;
    for (const Eis& u : eisUnits()) {
        Eis cand = u * x;
        Int candKey2 = 2 * cand.a - cand.b, bestKey2 = 2 * best.a - best.b;
        if (cand.b > best.b || (cand.b == best.b && candKey2 > bestKey2)) {
            best = cand;
            bestU = u;
        }
    }
    return bestU;
}

int sign(const RealQuad& x) {
    int sp = sgn(x.p), sq = sgn(x.q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // opposite signs: compare p^2 with 3 q^2
    Rat lhs = x.p * x.p, rhs = 3 * x.q * x.q;
    if (lhs == rhs) throw MathError("RealQuad: p^2 == 3q^2 with p,q nonzero is impossible");
    return (lhs > rhs) ? sp : sq;
}

Int floorRealQuad(const RealQuad& x) {
    if (x.isRational()) return floorRat(x.p);
    // start from a double estimate, then correct with exact sign tests
    double est = x.p.get_d() + x.q.get_d() * 1.7320508075688772;
    Int n(static_cast<long>(std::floor(est)));
    while (sign(x - RealQuad(Rat(n))) < 0) n -= 1;
    while (sign(x - RealQuad(Rat(n + 1))) >= 0) n += 1;
    return n;
}

FieldElem FieldElem::inverse() const {
    // 1/(u + v sqrt3) = (u - v sqrt3) / (u^2 - 3 v^2); the denominator is a
    // nonzero element of Q(w) since sqrt3 is not in Q(w).
    Cyclo den = u * u - Cyclo(Rat(3), Rat(0)) * (v * v);
    if (den.isZero()) {
        if (!isZero()) throw MathError("FieldElem: inconsistent zero denominator");
        throw MathError("FieldElem: division by zero");
    }
    Cyclo di = den.inverse();
    return {u * di, -(v * di)};
}

RealQuad absSq(const FieldElem& x) {
    FieldElem n = x * x.conj();
    RealQuad r = n.asRealQuad();
    if (sign(r) < 0) throw MathError("absSq: negative square norm");
    return r;
}

Rat imThetaCoeff(const Cyclo& x) {
    // x - conj(x) = 2b w + b = b(1+2w) = b * theta; Im x = (b/2) theta.
    return x.b / 2;
}

int sign(const QuadRad& x) {
    int sp = sgn(x.p), sq = sgn(x.q);
    if (sq == 0 || sgn(x.d) == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    Rat lhs = x.p * x.p, rhs = x.d * x.q * x.q;
    if (lhs == rhs) return 0;  // p = -q sqrt d exactly
    return (lhs > rhs) ? sp : sq;
}

}  // namespace eisl

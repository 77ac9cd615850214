#include "eisl/lorentz.hpp"

namespace eisl {

namespace {
const FieldElem kThird = FieldElem(makeRat(1, 3));
const FieldElem kSixth = FieldElem(makeRat(1, 6));
}  // namespace

bool AmbientVector::isIntegral() const {
    for (const auto& c : sigma)
        if (!c.isEisenstein()) return false;
    return y.isEisenstein() && z.isEisenstein();
}

AmbientVector rho() {
    AmbientVector r;
    r.z = FieldElem(1);
    return r;
}

AmbientVector ambientFromParts(const LeechPoint& sigma, const Eis& y, const Eis& z) {
    AmbientVector v;
    v.sigma = toFieldVec(sigma);
    v.y = FieldElem(y);
    v.z = FieldElem(z);
    return v;
}

FieldElem ip(const AmbientVector& v, const AmbientVector& w) {
    const FieldElem theta = feTheta();
    FieldElem s = LeechLattice::get().innerField(v.sigma, w.sigma);
    return s + theta.conj() * v.y * w.z.conj() + theta * v.z * w.y.conj();
}

RealQuad normSq(const AmbientVector& v) { return ip(v, v).asRealQuad(); }

Root Root::checked(const AmbientVector& v) {
    if (!v.isIntegral()) throw MathError("NotARoot: vector is not in L");
    if (normSq(v) != RealQuad(3)) throw MathError("NotARoot: norm is not 3");
    return Root{v};
}

RealQuad height(const AmbientVector& nullV, const AmbientVector& w) {
    if (sign(normSq(nullV)) != 0) throw MathError("height: first argument must be null");
    RealQuad wn = normSq(w);
    if (sign(wn) == 0) throw MathError("ZeroNorm: height undefined on null w");
    return -(absSq(ip(nullV, w)) / wn);
}

RealQuad coshSqDist(const AmbientVector& v, const AmbientVector& w) {
    RealQuad vn = normSq(v), wn = normSq(w);
    if (sign(vn) >= 0 || sign(wn) >= 0)
        throw MathError("NotNegativeNorm: points of CH^13 need negative norm");
    return absSq(ip(v, w)) / (vn * wn);
}

RealQuad sinhSqDistMirror(const AmbientVector& v, const Root& s) {
    RealQuad vn = normSq(v);
    if (sign(vn) >= 0) throw MathError("NotNegativeNorm: point of CH^13 needs negative norm");
    return -(absSq(ip(v, s.v)) / (RealQuad(3) * vn));
}

AmbientVector projectToMirror(const AmbientVector& v, const Root& s) {
    return v - (kThird * ip(v, s.v)) * s.v;
}

FieldElem zetaValue(Zeta z) { return z == Zeta::Omega ? feOmega() : feOmega().conj(); }

AmbientVector triflection(const Root& s, Zeta zeta, const AmbientVector& x) {
    FieldElem c = (FieldElem(1) - zetaValue(zeta)) * kThird * ip(x, s.v);
    return x - c * s.v;
}

Decomposition decompose(const AmbientVector& s) {
    // <rho, s> = theta * conj(m)
    FieldElem m = (ip(rho(), s) / feTheta()).conj();
    if (m.isZero()) throw MathError("InRhoPerp: decomposition needs <s, rho> != 0");
    Decomposition d;
    d.sigma = s.sigma;
    d.m = m;
    d.N = normSq(s);
    FieldElem sigmaSq = FieldElem(LeechLattice::get().normSqField(s.sigma));
    d.nu = m.conj() * s.z / feTheta() - kSixth * (sigmaSq - FieldElem(d.N));
    if (!isPurelyImaginary(d.nu)) throw MathError("decompose: nu not purely imaginary");
    return d;
}

AmbientVector recompose(const Decomposition& d) {
    AmbientVector v;
    v.sigma = d.sigma;
    v.y = d.m;
    FieldElem sigmaSq = FieldElem(LeechLattice::get().normSqField(d.sigma));
    v.z = feTheta() / d.m.conj() * (kSixth * (sigmaSq - FieldElem(d.N)) + d.nu);
    return v;
}

Root leechRoot(const LeechRootSpec& spec) {
    if (!isPurelyImaginary(spec.nuL)) throw MathError("InvalidNu: nu_l must be purely imaginary");
    Int lamSq = LeechLattice::get().normSq(spec.lambda);
    AmbientVector v;
    v.sigma = toFieldVec(spec.lambda);
    v.y = FieldElem(1);
    v.z = feTheta() * (kSixth * FieldElem(Rat(lamSq - 3)) + spec.nuL);
    if (!v.z.isEisenstein())
        throw MathError("InvalidNu: nu_l is not in the allowed translate of (1/theta)Z");
    return Root::checked(v);
}

LeechRootSpec leechRootSpecOf(const Root& l) {
    Decomposition d = decompose(l.v);
    if (d.m != FieldElem(1)) throw MathError("leechRootSpecOf: middle coordinate must be 1");
    LeechRootSpec spec;
    for (int i = 0; i < 12; ++i) spec.lambda.c[i] = d.sigma[i].asEis();
    spec.nuL = d.nu;
    return spec;
}

bool isLeechRoot(const AmbientVector& s) {
    return s.isIntegral() && normSq(s) == RealQuad(3) && absSq(ip(rho(), s)) == RealQuad(3);
}

HeisenbergElement HeisenbergElement::checked(const LeechPoint& lambda, const FieldElem& z) {
    if (!isPurelyImaginary(z)) throw MathError("Heisenberg: z must be purely imaginary");
    Int lamSq = LeechLattice::get().normSq(lambda);
    FieldElem r = z - FieldElem(makeRat(lamSq, 2));
    if (!r.isEisenstein() || !divByThetaOpt(r.asEis()))
        throw MathError("Heisenberg: z - lambda^2/2 must lie in theta*E");
    return HeisenbergElement{lambda, z};
}

AmbientVector heisenbergApply(const HeisenbergElement& t, const AmbientVector& v) {
    // (sigma; y, z) -> (sigma + y*lambda; y, z + <sigma,lambda>/conj(theta)
    //                                         + y (t.z - lambda^2/2)/theta)
    const auto& lat = LeechLattice::get();
    FieldVec12 lam = toFieldVec(t.lambda);
    AmbientVector r;
    for (int i = 0; i < 12; ++i) r.sigma[i] = v.sigma[i] + v.y * lam[i];
    r.y = v.y;
    Int lamSq = lat.normSq(t.lambda);
    FieldElem central = (t.z - FieldElem(makeRat(lamSq, 2))) / feTheta();
    r.z = v.z + lat.innerField(v.sigma, lam) / feTheta().conj() + v.y * central;
    return r;
}

HeisenbergElement heisenbergCompose(const HeisenbergElement& a, const HeisenbergElement& b) {
    const auto& lat = LeechLattice::get();
    FieldElem ipab = lat.innerField(toFieldVec(a.lambda), toFieldVec(b.lambda));
    return HeisenbergElement::checked(a.lambda + b.lambda, a.z + b.z + imPart(ipab));
}

}  // namespace eisl

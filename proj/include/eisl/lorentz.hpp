#pragma once

#include "eisl/leech.hpp"

// The Lorentzian E-lattice L = Lambda + hyperbolic cell with block Gram
// [[0, conj(theta)], [theta, 0]], signature (13,1).  Vectors are written
// (sigma; y, z) and the Hermitian form, linear in the first and antilinear in
// the second argument, is
//
//   <(sigma;y,z), (sigma';y',z')> = <sigma,sigma'>_Lambda
//                                   + conj(theta) y conj(z') + theta z conj(y')
//
// The convention is pinned by the printed values it must reproduce:
// <rho, (lambda9; theta, -1)> = 3 and the projection (-lambda9; conj(theta), 2).

namespace eisl {

struct AmbientVector {
    FieldVec12 sigma{};
    FieldElem y, z;

    friend AmbientVector operator+(const AmbientVector& a, const AmbientVector& b) {
        AmbientVector r;
        for (int i = 0; i < 12; ++i) r.sigma[i] = a.sigma[i] + b.sigma[i];
        r.y = a.y + b.y;
        r.z = a.z + b.z;
        return r;
    }
    friend AmbientVector operator-(const AmbientVector& a, const AmbientVector& b) {
        AmbientVector r;
        for (int i = 0; i < 12; ++i) r.sigma[i] = a.sigma[i] - b.sigma[i];
        r.y = a.y - b.y;
        r.z = a.z - b.z;
        return r;
    }
    friend AmbientVector operator*(const FieldElem& c, const AmbientVector& a) {
        AmbientVector r;
        for (int i = 0; i < 12; ++i) r.sigma[i] = c * a.sigma[i];
        r.y = c * a.y;
        r.z = c * a.z;
        return r;
    }
    friend bool operator==(const AmbientVector& a, const AmbientVector& b) {
        return a.sigma == b.sigma && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const AmbientVector& a, const AmbientVector& b) { return !(a == b); }

    bool isIntegral() const;
};

/// The distinguished primitive null vector rho = (0; 0, 1).
AmbientVector rho();

AmbientVector ambientFromParts(const LeechPoint& sigma, const Eis& y, const Eis& z);

FieldElem ip(const AmbientVector& v, const AmbientVector& w);
RealQuad normSq(const AmbientVector& v);

/// Norm-3 integral vector.
struct Root {
    AmbientVector v;
    static Root checked(const AmbientVector& v);  // throws MathError("NotARoot: ...")
};

/// ht_v(w) = -|<v,w>|^2 / w^2 for null v; positive on negative-norm w.
RealQuad height(const AmbientVector& nullV, const AmbientVector& w);

/// cosh^2 of the hyperbolic distance: |<v,w>|^2 / (v^2 w^2), both norms < 0.
RealQuad coshSqDist(const AmbientVector& v, const AmbientVector& w);

/// sinh^2 of the distance from the point of v to the mirror of s.
RealQuad sinhSqDistMirror(const AmbientVector& v, const Root& s);

/// v - (<v,s>/3) s, the projection onto the mirror s-perp.
AmbientVector projectToMirror(const AmbientVector& v, const Root& s);

enum class Zeta { Omega, OmegaBar };
FieldElem zetaValue(Zeta z);
inline Zeta zetaConj(Zeta z) { return z == Zeta::Omega ? Zeta::OmegaBar : Zeta::Omega; }

/// x -> x - (1 - zeta)(<x,s>/3) s: the zeta-reflection in the root s.  Order
/// 3, fixes the mirror pointwise, scales s by zeta, preserves L.
AmbientVector triflection(const Root& s, Zeta zeta, const AmbientVector& x);

/// The (sigma, m, N, nu) normal form: s = (sigma; m, (theta/conj(m))((sigma^2-N)/6 + nu)).
struct Decomposition {
    FieldVec12 sigma{};
    FieldElem m;
    RealQuad N;
    FieldElem nu;  // purely imaginary
};
Decomposition decompose(const AmbientVector& s);  // throws MathError("InRhoPerp: ...")
AmbientVector recompose(const Decomposition& d);

/// Leech-root data: l = (lambda; 1, theta((lambda^2-3)/6 + nu_l)).
/// nu_l lies in (1/theta)(1/2 + Z) when 6 | lambda^2 and in (1/theta) Z else.
struct LeechRootSpec {
    LeechPoint lambda;
    FieldElem nuL;
};
Root leechRoot(const LeechRootSpec& spec);  // throws MathError("InvalidNu: ...")
/// Recover the spec from a Leech root (m = 1 after unit scaling is required).
LeechRootSpec leechRootSpecOf(const Root& l);

/// |<rho, s>|^2 == 3, i.e. |m| = 1.
bool isLeechRoot(const AmbientVector& s);

/// Translation T_{lambda,z} fixing rho; requires z purely imaginary with
/// z - lambda^2/2 in theta*E.
struct HeisenbergElement {
    LeechPoint lambda;
    FieldElem z;
    static HeisenbergElement checked(const LeechPoint& lambda, const FieldElem& z);
};
AmbientVector heisenbergApply(const HeisenbergElement& t, const AmbientVector& v);
/// Group law: T_{l,z} . T_{m,w} = T_{l+m, z+w+Im<l,m>}.
HeisenbergElement heisenbergCompose(const HeisenbergElement& a, const HeisenbergElement& b);

}  // namespace eisl

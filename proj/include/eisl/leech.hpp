#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "eisl/enumerate.hpp"
#include "eisl/field.hpp"
#include "eisl/golay.hpp"
#include "eisl/linalg.hpp"

// The complex Leech lattice over the Eisenstein integers, at the scale where
// the minimal norm is 6, every inner product is divisible by theta, and
// Lambda = theta * dual(Lambda).  Constructed from the ternary Golay code:
//
//   Lambda' = { x in E^12 : (x mod theta) in C,  sum_i x_i == 0 (mod 3) }
//   Lambda  = Lambda' + E*w,   w = (theta/3)(4,1,1,...,1)
//
// The recipe is validated at build time against the binding contract: minimal
// norm 6, Gram determinant 729, theta-duality.  The underlying real form is
// an even unimodular rank-24 lattice with no norm-2 vectors, i.e. the Leech
// lattice, which also yields covering radius sqrt3 for the Hermitian metric.

namespace eisl {

/// Lattice vector, coordinates in the constructed basis.
struct LeechPoint {
    std::array<Eis, 12> c{};

    bool isZero() const {
        for (const auto& x : c)
            if (!x.isZero()) return false;
        return true;
    }
    friend LeechPoint operator+(const LeechPoint& x, const LeechPoint& y) {
        LeechPoint r;
        for (int i = 0; i < 12; ++i) r.c[i] = x.c[i] + y.c[i];
        return r;
    }
    friend LeechPoint operator-(const LeechPoint& x, const LeechPoint& y) {
        LeechPoint r;
        for (int i = 0; i < 12; ++i) r.c[i] = x.c[i] - y.c[i];
        return r;
    }
    friend LeechPoint operator-(const LeechPoint& x) {
        LeechPoint r;
        for (int i = 0; i < 12; ++i) r.c[i] = -x.c[i];
        return r;
    }
    friend LeechPoint operator*(const Eis& s, const LeechPoint& x) {
        LeechPoint r;
        for (int i = 0; i < 12; ++i) r.c[i] = s * x.c[i];
        return r;
    }
    friend bool operator==(const LeechPoint& x, const LeechPoint& y) { return x.c == y.c; }
    friend bool operator!=(const LeechPoint& x, const LeechPoint& y) { return !(x == y); }
    /// Total order for deterministic tie-breaking.
    friend bool operator<(const LeechPoint& x, const LeechPoint& y) {
        for (int i = 0; i < 12; ++i) {
            if (x.c[i] != y.c[i]) return x.c[i] < y.c[i];
        }
        return false;
    }
};

using FieldVec12 = std::array<FieldElem, 12>;

inline FieldVec12 toFieldVec(const LeechPoint& p) {
    FieldVec12 v;
    for (int i = 0; i < 12; ++i) v[i] = FieldElem(p.c[i]);
    return v;
}

enum class CosetTag { Zero, Norm6, Norm9 };

struct LeechCosetClass {
    CosetTag tag;
    LeechPoint rep;
};

class LeechLattice {
public:
    /// The verified singleton.  Throws MathError("ConstructionInvalid: ...")
    /// if any binding property fails.
    static const LeechLattice& get();

    const GolayTernary& golay() const { return golay_; }
    /// Basis rows in ambient coordinates, scaled by 3 (exact integers).
    const EisMat& basisAmbientTimes3() const { return basisAmb3_; }
    /// Hermitian Gram matrix of the basis, entries in E.
    const EisMat& gram() const { return gram_; }

    Eis inner(const LeechPoint& x, const LeechPoint& y) const;
    Int normSq(const LeechPoint& x) const { return inner(x, x).a; }

    /// Hermitian form on field-coefficient vectors over the same basis.
    FieldElem innerField(const FieldVec12& x, const FieldVec12& y) const;
    RealQuad normSqField(const FieldVec12& x) const;

    /// Basis coordinates of an ambient Q(w)-vector if it lies in Lambda.
    std::optional<LeechPoint> fromAmbient(const CycloRow& ambient) const;
    CycloRow toAmbient(const LeechPoint& p) const;
    /// The construction congruences applied directly (same predicate as
    /// fromAmbient, derived independently).
    bool congruenceMember(const CycloRow& ambient) const;

    struct CvpResult {
        RealQuad distSq;  // Hermitian metric
        LeechPoint point;
    };
    /// Closest lattice point to a field-coordinate target; ties broken by the
    /// coordinate order.  radiusSq >= 3 always succeeds (covering radius).
    CvpResult cvp(const FieldVec12& target, const RealQuad& radiusSq) const;
    /// Every lattice point within radiusSq of the target, sorted by (distSq,
    /// coordinate order).
    std::vector<CvpResult> cvpAll(const FieldVec12& target, const RealQuad& radiusSq) const;

    /// Minimal-norm representative of sigma + theta*Lambda; norm 0, 6 or 9.
    LeechCosetClass cosetRep(const LeechPoint& sigma) const;

    /// Exact count of vectors of the given Hermitian norm, by enumeration.
    Int minVectorCount(const Int& norm) const;

    const LeechPoint& lambda6() const { return lambda6_; }
    const LeechPoint& lambda9() const { return lambda9_; }

    /// Real quadratic form data (the rank-24 integer form B = (2/3) Re h).
    const std::vector<std::vector<Int>>& realGram() const { return realGram_; }

private:
    LeechLattice();

    GolayTernary golay_;
    EisMat basisAmb3_;   // 12x12, rows = basis of 3*Lambda in ambient coords
    CycloMat basisInv_;  // inverse of (basisAmb3_/3) over Q(w)
    EisMat gram_;
    std::vector<std::vector<Int>> realGram_;  // 24x24, interleaved (v_i, w v_i)

    // enumeration data: frozen short Z-basis of the real form
    std::vector<LeechPoint> redBasis_;          // 24 lattice vectors
    std::vector<std::vector<Int>> redCoords_;   // their real coordinates (rows)
    std::vector<std::vector<Int>> redCoordsInv_;
    std::unique_ptr<GramSchmidt> gs_;

    LeechPoint lambda6_, lambda9_;

    template <class S>
    void enumerate(const std::vector<S>& reducedTarget, const S& radiusB, bool shrink,
                   const std::function<bool(const S&, const std::vector<long long>&)>& visit) const;
    template <class S>
    std::vector<CvpResult> cvpImpl(const FieldVec12& target, const RealQuad& radiusSq,
                                   bool onlyClosest) const;
    LeechPoint pointFromEnum(const std::vector<long long>& x) const;
};

/// Standalone verification of exported lattice data (used by the CLI for
/// imported bases): Gram consistency, determinant 729, theta-duality, and
/// absence of vectors of norm < 6.
struct LatticeCheckReport {
    bool gramMatchesBasis = false;
    bool hermitian = false;
    bool det729 = false;
    bool thetaDual = false;
    bool minNorm6 = false;
    bool ok() const { return gramMatchesBasis && hermitian && det729 && thetaDual && minNorm6; }
};
LatticeCheckReport verifyLatticeData(const EisMat& basisAmb3, const EisMat& gram);

}  // namespace eisl

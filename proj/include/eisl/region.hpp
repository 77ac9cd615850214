#pragma once

#include <string>
#include <vector>

#include "eisl/lorentz.hpp"

// Geometry of the y-parameter plane.  V is the union of the open sqrt3-disks
// around 1-omega and 1-omegabar; the recipe places y in the rectangle
// [-delta, 3/2-delta] x [-theta/2, theta/2] (delta = 3/2|m|^2) minus the open
// (sqrt3/|m|)-disk around -2delta, and for |m|^2 = 4 also minus the open
// (sqrt3/2)-disks around -3/4 +- theta/2.

namespace eisl {

/// |(1/3)(1-conj(zeta)) y - 1|^2: the squared ratio |<p,R(rho)>/<p,rho>|^2.
/// Less than 1 iff |y - (1-zeta)|^2 < 3.
RealQuad ratioPSq(const FieldElem& y, Zeta zeta);

/// |1 - (1/3)(1-conj(zeta))(3/|m|^2 + y)|^2: the ratio |<s,R(rho)>/<s,rho>|^2.
RealQuad ratioMirrorSq(const FieldElem& y, const RealQuad& mSq, Zeta zeta);

enum class RegionKind { Inside, Boundary, Outside };

struct RegionClass {
    RegionKind kind;
    Zeta zeta;  // meaningful for Inside (smaller ratioPSq, ties to omega) and Boundary
};

/// Exact classification of y against the two open disks of V.
RegionClass classifyRegionV(const FieldElem& y);

/// One corner of the region U of Figure 4, with its exact squared distances
/// to the two disk centers of V (values carry a single adjoined radical).
struct CornerReport {
    std::string name;      // "v1".."v5"
    int sideLower;         // sign(dist^2 to 1-omega  - 3)
    int sideUpper;         // sign(dist^2 to 1-omegabar - 3)
    RegionKind kind;       // against V as a whole
};

/// The five corners v1..v5 for rational |m|^2 (the printed Figure 4 data).
std::vector<CornerReport> verifyRegionCorners(const Rat& mSq);

/// Exact subdivision certificate that the closed rectangle minus the open
/// excluded disks is contained in V.  Valid input: rational mSq with the
/// containment strict (mSq > 7, or mSq = 4 with the two extra disks).
struct CoverStats {
    bool ok = false;
    long cells = 0;
    int maxDepth = 0;
};
CoverStats rectMinusDisksInV(const Rat& mSq, bool extraDisksM2, int maxDepth = 60);

}  // namespace eisl

#include "eisl/region.hpp"

#include <algorithm>
#include <deque>

namespace eisl {

RealQuad ratioPSq(const FieldElem& y, Zeta zeta) {
    FieldElem r = FieldElem(makeRat(1, 3)) * (FieldElem(1) - zetaValue(zeta).conj()) * y - FieldElem(1);
    return absSq(r);
}

RealQuad ratioMirrorSq(const FieldElem& y, const RealQuad& mSq, Zeta zeta) {
    if (sign(mSq) <= 0) throw MathError("ratioMirrorSq: |m|^2 must be positive");
    FieldElem shift = FieldElem(RealQuad(3) / mSq) + y;
    FieldElem r = FieldElem(1) - FieldElem(makeRat(1, 3)) * (FieldElem(1) - zetaValue(zeta).conj()) * shift;
    return absSq(r);
}

RegionClass classifyRegionV(const FieldElem& y) {
    const FieldElem one(1);
    RealQuad dOmega = absSq(y - (one - feOmega()));
    RealQuad dOmegaBar = absSq(y - (one - feOmega().conj()));
    int sO = sign(dOmega - RealQuad(3));
    int sOB = sign(dOmegaBar - RealQuad(3));
    if (sO < 0 || sOB < 0) {
        Zeta z;
        if (sO < 0 && sOB < 0)
            z = sign(dOmega - dOmegaBar) <= 0 ? Zeta::Omega : Zeta::OmegaBar;
        else
            z = sO < 0 ? Zeta::Omega : Zeta::OmegaBar;
        return {RegionKind::Inside, z};
    }
    if (sO == 0 || sOB == 0)
        return {RegionKind::Boundary, sO == 0 ? Zeta::Omega : Zeta::OmegaBar};
    return {RegionKind::Outside, Zeta::Omega};
}

namespace {

RegionKind kindFromSides(int lower, int upper) {
    if (lower < 0 || upper < 0) return RegionKind::Inside;
    if (lower == 0 || upper == 0) return RegionKind::Boundary;
    return RegionKind::Outside;
}

}  // namespace

std::vector<CornerReport> verifyRegionCorners(const Rat& mSq) {
    if (sgn(mSq) <= 0) throw MathError("verifyRegionCorners: |m|^2 must be positive");
    const Rat delta = makeRat(3, 2) / mSq;
    const Rat radial = 3 / mSq;                       // (sqrt3/|m|)^2
    const Rat vr = radial - makeRat(9, 4) / (mSq * mSq);  // v5 radicand
    if (sgn(vr) < 0) throw MathError("verifyRegionCorners: v5 undefined for this |m|^2");
    std::vector<CornerReport> out;

    // v1 = -2delta + sqrt(3/mSq), on the real axis
    {
        Rat base = radial + (2 * delta + makeRat(3, 2)) * (2 * delta + makeRat(3, 2)) + makeRat(3, 4);
        QuadRad d(base - 3, -2 * (2 * delta + makeRat(3, 2)), radial);
        int s = sign(d);
        out.push_back({"v1", s, s, kindFromSides(s, s)});
    }
    // v2 = 3/2 - delta
    {
        int s = sgn(delta * delta + makeRat(3, 4) - 3);
        out.push_back({"v2", s, s, kindFromSides(s, s)});
    }
    // v3 = 3/2 - delta - (sqrt3/2) i
    {
        int sl = sgn(delta * delta - 3);
        int su = sgn(delta * delta + 3 - 3);
        out.push_back({"v3", sl, su, kindFromSides(sl, su)});
    }
    // v4 = -delta - (sqrt3/2) i
    {
        Rat b = (delta + makeRat(3, 2)) * (delta + makeRat(3, 2));
        int sl = sgn(b - 3);
        int su = sgn(b + 3 - 3);
        out.push_back({"v4", sl, su, kindFromSides(sl, su)});
    }
    // v5 = -delta - i sqrt(vr)
    {
        Rat base = (delta + makeRat(3, 2)) * (delta + makeRat(3, 2)) + vr + makeRat(3, 4);
        QuadRad lower(base - 3, Rat(-1), 3 * vr);
        QuadRad upper(base - 3, Rat(1), 3 * vr);
        int sl = sign(lower), su = sign(upper);
        out.push_back({"v5", sl, su, kindFromSides(sl, su)});
    }
    return out;
}

namespace {

// Points are a + b*sqrt3*i with rational a, b; squared distance
// (da)^2 + 3 (db)^2 is rational.
struct Disk {
    Rat ca, cb, r2;
};

bool cellInsideDisk(const Rat& a0, const Rat& a1, const Rat& b0, const Rat& b1, const Disk& d) {
    for (int i = 0; i < 4; ++i) {
        const Rat& a = (i & 1) ? a1 : a0;
        const Rat& b = (i & 2) ? b1 : b0;
        Rat dist = (a - d.ca) * (a - d.ca) + 3 * (b - d.cb) * (b - d.cb);
        if (dist >= d.r2) return false;
    }
    return true;
}

}  // namespace

CoverStats rectMinusDisksInV(const Rat& mSq, bool extraDisksM2, int maxDepth) {
    if (extraDisksM2 && mSq != 4)
        throw MathError("rectMinusDisksInV: the extra disks belong to |m|^2 = 4");
    const Rat delta = makeRat(3, 2) / mSq;
    std::vector<Disk> excluded = {{-2 * delta, Rat(0), 3 / mSq}};
    if (extraDisksM2) {
        excluded.push_back({makeRat(-3, 4), makeRat(1, 2), makeRat(3, 4)});
        excluded.push_back({makeRat(-3, 4), makeRat(-1, 2), makeRat(3, 4)});
    }
    const Disk vLower{makeRat(3, 2), makeRat(-1, 2), Rat(3)};
    const Disk vUpper{makeRat(3, 2), makeRat(1, 2), Rat(3)};

    struct Cell {
        Rat a0, a1, b0, b1;
        int depth;
    };
    std::deque<Cell> work;
    work.push_back({-delta, makeRat(3, 2) - delta, makeRat(-1, 2), makeRat(1, 2), 0});
    CoverStats stats;
    stats.ok = true;
    while (!work.empty()) {
        Cell c = work.front();
        work.pop_front();
        ++stats.cells;
        stats.maxDepth = std::max(stats.maxDepth, c.depth);
        if (cellInsideDisk(c.a0, c.a1, c.b0, c.b1, vLower) ||
            cellInsideDisk(c.a0, c.a1, c.b0, c.b1, vUpper))
            continue;
        bool dropped = false;
        for (const Disk& d : excluded)
            if (cellInsideDisk(c.a0, c.a1, c.b0, c.b1, d)) {
                dropped = true;
                break;
            }
        if (dropped) continue;
        if (c.depth >= maxDepth) {
            stats.ok = false;
            return stats;
        }
        Rat wa = c.a1 - c.a0, wb = c.b1 - c.b0;
        if (wa * wa >= 3 * wb * wb) {
            Rat mid = (c.a0 + c.a1) / 2;
            work.push_back({c.a0, mid, c.b0, c.b1, c.depth + 1});
            work.push_back({mid, c.a1, c.b0, c.b1, c.depth + 1});
        } else {
            Rat mid = (c.b0 + c.b1) / 2;
            work.push_back({c.a0, c.a1, c.b0, mid, c.depth + 1});
            work.push_back({c.a0, c.a1, mid, c.b1, c.depth + 1});
        }
    }
    return stats;
}

}  // namespace eisl

#include "eisl/leech.hpp"

#include <algorithm>
#include <memory>

namespace eisl {

namespace {

#include "leech_reduced_basis.inc"

Eis hermAmb(const EisRow& x, const EisRow& y) {
    Eis s;
    for (size_t k = 0; k < x.size(); ++k) s = s + x[k] * y[k].conj();
    return s;
}

/// (2/3) Re h blocks of the real form, from a Hermitian Gram entry g = a + bw:
/// [ (2a-b)/3   (2b-a)/3 ]
/// [ -(a+b)/3   (2a-b)/3 ]
void fillRealBlock(std::vector<std::vector<Int>>& B, int i, int j, const Eis& g) {
    Int d0 = 2 * g.a - g.b, d1 = 2 * g.b - g.a, d2 = -(g.a + g.b);
    if (d0 % 3 != 0 || d1 % 3 != 0 || d2 % 3 != 0)
        throw MathError("ConstructionInvalid: real form not integral");
    B[2 * i][2 * j] = d0 / 3;
    B[2 * i][2 * j + 1] = d1 / 3;
    B[2 * i + 1][2 * j] = d2 / 3;
    B[2 * i + 1][2 * j + 1] = d0 / 3;
}

std::vector<std::vector<Int>> realFormFromGram(const EisMat& gram) {
    std::vector<std::vector<Int>> B(24, std::vector<Int>(24, Int(0)));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) fillRealBlock(B, i, j, gram[i][j]);
    for (int i = 0; i < 24; ++i) {
        if (B[i][i] % 2 != 0) throw MathError("ConstructionInvalid: real form not even");
        for (int j = 0; j < 24; ++j)
            if (B[i][j] != B[j][i]) throw MathError("ConstructionInvalid: real form not symmetric");
    }
    return B;
}

std::vector<std::vector<Int>> intMatInverse(const std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n)), inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
        inv[i][i] = 1;
    }
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && sgn(a[piv][k]) == 0) ++piv;
        if (piv == n) throw MathError("intMatInverse: singular");
        std::swap(a[piv], a[k]);
        std::swap(inv[piv], inv[k]);
        Rat d = a[k][k];
        for (size_t j = 0; j < n; ++j) {
            a[k][j] /= d;
            inv[k][j] /= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || sgn(a[i][k]) == 0) continue;
            Rat f = a[i][k];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    std::vector<std::vector<Int>> out(n, std::vector<Int>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (mpz_cmp_ui(mpq_denref(inv[i][j].get_mpq_t()), 1) != 0)
                throw MathError("intMatInverse: inverse not integral");
            out[i][j] = Int(inv[i][j].get_num());
        }
    return out;
}

bool checkNoShortVectors(const EisMat& gram) {
    // no nonzero vector of Hermitian norm < 6  <=>  real-form ball of radius 3
    // contains only the origin (real norms are even, Hermitian norms in 3Z).
    auto B = realFormFromGram(gram);
    GramSchmidt gs(B);
    std::vector<Rat> zero(24, Rat(0));
    long count = 0;
    enumerateBall<Rat>(gs, zero, Rat(3), false,
                       [&](const Rat&, const std::vector<long long>&) {
                           ++count;
                           return count <= 1;
                       });
    return count == 1;
}

}  // namespace

const LeechLattice& LeechLattice::get() {
    static const LeechLattice instance;
    return instance;
}

LeechLattice::LeechLattice() {
    golay_.verify();

    // generators of 3*Lambda in ambient coordinates
    EisMat gens;
    for (const auto& row : golay_.generators()) {
        EisRow r(12);
        for (int j = 0; j < 12; ++j) {
            int v = row[j] == 2 ? -1 : row[j];
            r[j] = Eis(3 * v);
        }
        gens.push_back(std::move(r));
    }
    for (int i = 0; i < 11; ++i) {
        EisRow r(12);
        r[i] = Eis(3) * eisTheta();
        r[i + 1] = Eis(-3) * eisTheta();
        gens.push_back(std::move(r));
    }
    {
        EisRow r(12);
        r[0] = Eis(9);
        gens.push_back(std::move(r));
    }
    {
        EisRow r(12, eisTheta());  // 3w = theta*(4,1,...,1)
        r[0] = Eis(4) * eisTheta();
        gens.push_back(std::move(r));
    }
    gens.push_back(EisRow(12, Eis(3) * eisTheta()));

    basisAmb3_ = hnfBasis(std::move(gens), 12);

    // Gram of Lambda = (1/9) * Gram of 3*Lambda
    gram_.assign(12, EisRow(12));
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            Eis h = hermAmb(basisAmb3_[i], basisAmb3_[j]);
            if (h.a % 9 != 0 || h.b % 9 != 0)
                throw MathError("ConstructionInvalid: Gram not integral at scale 1/9");
            gram_[i][j] = Eis(h.a / 9, h.b / 9);
        }

    LatticeCheckReport rep = verifyLatticeData(basisAmb3_, gram_);
    if (!rep.ok()) throw MathError("ConstructionInvalid: binding property check failed");

    realGram_ = realFormFromGram(gram_);
    if (intDet(realGram_) != 1) throw MathError("ConstructionInvalid: real form not unimodular");

    {
        CycloMat b(12, CycloRow(12));
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j)
                b[i][j] = Cyclo(makeRat(basisAmb3_[i][j].a, 3), makeRat(basisAmb3_[i][j].b, 3));
        basisInv_ = cycloInverse(std::move(b));
    }

    // frozen short basis of the real form, for enumeration
    redBasis_.reserve(24);
    redCoords_.assign(24, std::vector<Int>(24));
    for (int k = 0; k < 24; ++k) {
        CycloRow amb(12);
        for (int j = 0; j < 12; ++j)
            amb[j] = Cyclo(makeRat(kReducedBasisAmb3[k][j][0], 3), makeRat(kReducedBasisAmb3[k][j][1], 3));
        auto pt = fromAmbient(amb);
        if (!pt) throw MathError("ConstructionInvalid: reduced basis vector not in lattice");
        for (int i = 0; i < 12; ++i) {
            redCoords_[k][2 * i] = pt->c[i].a;
            redCoords_[k][2 * i + 1] = pt->c[i].b;
        }
        redBasis_.push_back(std::move(*pt));
    }
    {
        Int d = intDet(redCoords_);
        if (d != 1 && d != -1)
            throw MathError("ConstructionInvalid: reduced basis is not unimodular");
    }
    redCoordsInv_ = intMatInverse(redCoords_);

    std::vector<std::vector<Int>> redGram(24, std::vector<Int>(24, Int(0)));
    for (int i = 0; i < 24; ++i)
        for (int j = 0; j < 24; ++j) {
            Int s(0);
            for (int k = 0; k < 24; ++k)
                for (int l = 0; l < 24; ++l) s += redCoords_[i][k] * realGram_[k][l] * redCoords_[j][l];
            redGram[i][j] = s;
        }
    gs_ = std::make_unique<GramSchmidt>(redGram);

    // named constants: lambda6 = theta(e1 - e2), lambda9 = theta(1-w) e1 = -3 wbar e1
    {
        CycloRow amb(12);
        amb[0] = Cyclo(eisTheta());
        amb[1] = Cyclo(-eisTheta());
        auto p = fromAmbient(amb);
        if (!p || normSq(*p) != 6) throw MathError("ConstructionInvalid: lambda6");
        lambda6_ = *p;
        CycloRow amb9(12);
        amb9[0] = Cyclo(Eis(-3) * eisOmegaBar());
        auto q = fromAmbient(amb9);
        if (!q || normSq(*q) != 9) throw MathError("ConstructionInvalid: lambda9");
        lambda9_ = *q;
    }
    if (cosetRep(lambda9_).tag != CosetTag::Norm9)
        throw MathError("ConstructionInvalid: lambda9 is not a norm-9 coset representative");
}

Eis LeechLattice::inner(const LeechPoint& x, const LeechPoint& y) const {
    Eis s;
    for (int i = 0; i < 12; ++i) {
        if (x.c[i].isZero()) continue;
        for (int j = 0; j < 12; ++j) {
            if (y.c[j].isZero()) continue;
            s = s + x.c[i] * gram_[i][j] * y.c[j].conj();
        }
    }
    return s;
}

FieldElem LeechLattice::innerField(const FieldVec12& x, const FieldVec12& y) const {
    FieldElem s;
    for (int i = 0; i < 12; ++i) {
        if (x[i].isZero()) continue;
        for (int j = 0; j < 12; ++j) {
            if (y[j].isZero()) continue;
            s = s + x[i] * FieldElem(gram_[i][j]) * y[j].conj();
        }
    }
    return s;
}

RealQuad LeechLattice::normSqField(const FieldVec12& x) const {
    return innerField(x, x).asRealQuad();
}

std::optional<LeechPoint> LeechLattice::fromAmbient(const CycloRow& ambient) const {
    // coords * (basisAmb3/3) = ambient  =>  coords = 3 * ambient * basisInv_...
    // basisInv_ is the inverse of basisAmb3/3 already.
    LeechPoint p;
    for (int j = 0; j < 12; ++j) {
        Cyclo s;
        for (int i = 0; i < 12; ++i) s = s + ambient[i] * basisInv_[i][j];
        if (!s.isEisenstein()) return std::nullopt;
        p.c[j] = s.asEis();
    }
    return p;
}

CycloRow LeechLattice::toAmbient(const LeechPoint& p) const {
    CycloRow amb(12);
    for (int j = 0; j < 12; ++j) {
        Cyclo s;
        for (int i = 0; i < 12; ++i)
            s = s + Cyclo(p.c[i]) * Cyclo(makeRat(basisAmb3_[i][j].a, 3), makeRat(basisAmb3_[i][j].b, 3));
        amb[j] = s;
    }
    return amb;
}

bool LeechLattice::congruenceMember(const CycloRow& ambient) const {
    const Eis theta = eisTheta();
    for (int eps = -1; eps <= 1; ++eps) {
        // v = ambient - eps*w, w = (theta/3)(4,1,...,1)
        CycloRow v = ambient;
        if (eps != 0) {
            Cyclo wc(makeRat(Int(eps) * theta.a, 3), makeRat(Int(eps) * theta.b, 3));
            for (int j = 0; j < 12; ++j) v[j] = v[j] - (j == 0 ? Cyclo(Rat(4), Rat(0)) * wc : wc);
        }
        bool integral = true;
        std::array<int, 12> word{};
        Eis sum;
        for (int j = 0; j < 12 && integral; ++j) {
            if (!v[j].isEisenstein()) {
                integral = false;
                break;
            }
            Eis e = v[j].asEis();
            word[j] = modTheta(e);
            sum = sum + e;
        }
        if (!integral) continue;
        if (!golay_.contains(word)) return false;
        return sum.a % 3 == 0 && sum.b % 3 == 0;
    }
    return false;
}

template <class S>
void LeechLattice::enumerate(const std::vector<S>& reducedTarget, const S& radiusB, bool shrink,
                             const std::function<bool(const S&, const std::vector<long long>&)>& visit) const {
    enumerateBall<S>(*gs_, reducedTarget, radiusB, shrink, visit);
}

LeechPoint LeechLattice::pointFromEnum(const std::vector<long long>& x) const {
    LeechPoint p;
    for (int k = 0; k < 24; ++k) {
        if (x[k] == 0) continue;
        Eis s(Int(x[k]), Int(0));
        for (int i = 0; i < 12; ++i) p.c[i] = p.c[i] + s * redBasis_[k].c[i];
    }
    return p;
}

template <class S>
std::vector<LeechLattice::CvpResult> LeechLattice::cvpImpl(const FieldVec12& target,
                                                           const RealQuad& radiusSq,
                                                           bool onlyClosest) const {
    using Ops = ScalarOps<S>;
    // real coordinates of the target w.r.t. the basis frame (v_i, w v_i):
    // coordinate x = (u.a + v.a sqrt3) + (u.b + v.b sqrt3) w.
    std::vector<RealQuad> real(24);
    for (int i = 0; i < 12; ++i) {
        real[2 * i] = RealQuad(target[i].u.a, target[i].v.a);
        real[2 * i + 1] = RealQuad(target[i].u.b, target[i].v.b);
    }
    std::vector<S> tau(24);
    for (int k = 0; k < 24; ++k) {
        RealQuad s;
        for (int j = 0; j < 24; ++j) {
            if (redCoordsInv_[j][k] == 0) continue;
            s = s + Rat(redCoordsInv_[j][k]) * real[j];
        }
        if constexpr (std::is_same_v<S, Rat>) {
            if (!s.isRational()) throw MathError("cvp: irrational target in rational path");
            tau[k] = s.p;
        } else {
            tau[k] = s;
        }
    }
    // Hermitian radius -> real-form radius: B = (2/3) h
    RealQuad radB = makeRat(2, 3) * radiusSq;
    S rB = [&] {
        if constexpr (std::is_same_v<S, Rat>) {
            if (!radB.isRational()) throw MathError("cvp: irrational radius in rational path");
            return radB.p;
        } else {
            return radB;
        }
    }();

    std::vector<std::pair<S, std::vector<long long>>> found;
    enumerate<S>(tau, rB, onlyClosest, [&](const S& d, const std::vector<long long>& x) {
        found.emplace_back(d, x);
        return true;
    });
    std::vector<CvpResult> out;
    for (auto& [d, x] : found) {
        RealQuad dh;
        if constexpr (std::is_same_v<S, Rat>)
            dh = RealQuad(makeRat(3, 2) * d);
        else
            dh = makeRat(3, 2) * d;
        out.push_back(CvpResult{dh, pointFromEnum(x)});
    }
    std::sort(out.begin(), out.end(), [](const CvpResult& a, const CvpResult& b) {
        int s = sign(a.distSq - b.distSq);
        if (s != 0) return s < 0;
        return a.point < b.point;
    });
    if (onlyClosest && !out.empty()) {
        RealQuad best = out.front().distSq;
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [&](const CvpResult& r) { return sign(r.distSq - best) > 0; }),
                  out.end());
    }
    return out;
}

LeechLattice::CvpResult LeechLattice::cvp(const FieldVec12& target, const RealQuad& radiusSq) const {
    bool rational = true;
    for (const auto& t : target)
        if (sgn(t.v.a) != 0 || sgn(t.v.b) != 0) rational = false;
    auto sols = rational ? cvpImpl<Rat>(target, radiusSq, true) : cvpImpl<RealQuad>(target, radiusSq, true);
    if (sols.empty())
        throw MathError("NotFound: no lattice point within the requested radius (caller bug: radius < covering radius)");
    return sols.front();
}

std::vector<LeechLattice::CvpResult> LeechLattice::cvpAll(const FieldVec12& target,
                                                          const RealQuad& radiusSq) const {
    bool rational = true;
    for (const auto& t : target)
        if (sgn(t.v.a) != 0 || sgn(t.v.b) != 0) rational = false;
    return rational ? cvpImpl<Rat>(target, radiusSq, false) : cvpImpl<RealQuad>(target, radiusSq, false);
}

LeechCosetClass LeechLattice::cosetRep(const LeechPoint& sigma) const {
    // minimize |sigma - theta mu|^2 = 3 |sigma/theta - mu|^2 over mu
    FieldVec12 target;
    const Cyclo invTheta(makeRat(0, 1), makeRat(-1, 3));  // 1/theta = -theta/3
    for (int i = 0; i < 12; ++i) target[i] = FieldElem(Cyclo(sigma.c[i]) * invTheta);
    CvpResult r = cvp(target, RealQuad(Rat(3)));
    LeechPoint rep = sigma - eisTheta() * r.point;
    Int n = normSq(rep);
    if (n == 0) return {CosetTag::Zero, rep};
    if (n == 6) return {CosetTag::Norm6, rep};
    if (n == 9) return {CosetTag::Norm9, rep};
    throw MathError("ClassificationFailed: coset representative norm outside {0,6,9}");
}

Int LeechLattice::minVectorCount(const Int& norm) const {
    if (norm == 0) return Int(1);
    if (norm % 3 != 0) return Int(0);
    Rat radB = makeRat(2 * norm, 3);
    Rat exact = radB;
    std::vector<Rat> zero(24, Rat(0));
    long long count = 0;
    enumerateBall<Rat>(*gs_, zero, radB, false, [&](const Rat& d, const std::vector<long long>&) {
        if (d == exact) ++count;
        return true;
    });
    return Int(count);
}

LatticeCheckReport verifyLatticeData(const EisMat& basisAmb3, const EisMat& gram) {
    LatticeCheckReport rep;
    if (basisAmb3.size() != 12 || gram.size() != 12) return rep;

    rep.gramMatchesBasis = true;
    for (int i = 0; i < 12 && rep.gramMatchesBasis; ++i)
        for (int j = 0; j < 12; ++j) {
            Eis h = hermAmb(basisAmb3[i], basisAmb3[j]);
            if (h.a != 9 * gram[i][j].a || h.b != 9 * gram[i][j].b) {
                rep.gramMatchesBasis = false;
                break;
            }
        }

    rep.hermitian = true;
    for (int i = 0; i < 12 && rep.hermitian; ++i)
        for (int j = 0; j < 12; ++j)
            if (gram[j][i] != gram[i][j].conj()) {
                rep.hermitian = false;
                break;
            }

    try {
        Cyclo d = cycloDet(toCyclo(gram));
        rep.det729 = (d == Cyclo(Rat(729), Rat(0)));
    } catch (const MathError&) {
        rep.det729 = false;
    }

    try {
        CycloMat inv = cycloInverse(toCyclo(gram));
        const Cyclo theta(eisTheta());
        rep.thetaDual = true;
        for (int i = 0; i < 12 && rep.thetaDual; ++i)
            for (int j = 0; j < 12; ++j)
                if (!(theta * inv[i][j]).isEisenstein()) {
                    rep.thetaDual = false;
                    break;
                }
        // theta G^{-1} integral with det(G) = 729 makes theta G^{-1} unimodular,
        // i.e. Lambda equals theta times its dual exactly.
        rep.thetaDual = rep.thetaDual && rep.det729;
    } catch (const MathError&) {
        rep.thetaDual = false;
    }

    try {
        rep.minNorm6 = checkNoShortVectors(gram);
    } catch (const MathError&) {
        rep.minNorm6 = false;
    }
    return rep;
}

}  // namespace eisl

#pragma once

#include <optional>
#include <vector>

#include "eisl/region.hpp"

// The certified height-reduction engine.  Given a root s of L, it produces a
// word of triflections in Leech roots (with Heisenberg/unit normalization
// steps where |m|^2 = 3) that carries s to a Leech root, together with one
// exact certificate per step.  Heights |<rho,s>|^2 = 3|m|^2 decrease strictly
// through the discrete set of Eisenstein norms, which forces termination.
//
// Certificates re-verify from scratch: a verifier with no access to the
// producer replays the recorded word and re-checks every inequality.

namespace eisl {

enum class CaseTag { MovesCloserToP, MovesCloserToMirror, BallOverlap };

struct RecipeFailed : MathError {
    explicit RecipeFailed(const std::string& what) : MathError(what) {}
};
struct VerificationFailed : MathError {
    int stepIndex;
    VerificationFailed(int step, const std::string& what)
        : MathError(what), stepIndex(step) {}
};

/// Normalization op applied to the root before the reflection is chosen.
struct PreOp {
    enum class Kind { UnitScale, Translate };
    Kind kind;
    Eis unit;             // UnitScale
    LeechPoint lambda;    // Translate
    FieldElem z;          // Translate
};

AmbientVector applyPreOp(const PreOp& op, const AmbientVector& v);

/// Exact data of the Lemma 5.4 ball-overlap certificate (the lambda9 case).
struct OverlapWitness {
    RealQuad t;             // 2 sqrt3 - 2
    RealQuad u;             // sqrt3 / 4
    RealQuad htRhoP;        // 3
    RealQuad coshSqPPrime;  // 4
    RealQuad htReflX;       // (57 - 24 sqrt3)/9, must be < 3
    RealQuad htReflY;       // < 3
    RealQuad coshSqYP;      // < 4/3
};

struct StepCertificate {
    CaseTag tag;
    std::vector<PreOp> pre;
    LeechRootSpec lroot;
    Zeta zeta;
    FieldElem y;
    RealQuad ratioPSq;       // P and MIRROR cases
    RealQuad ratioMirrorSq;  // MIRROR case
    std::optional<OverlapWitness> overlap;
    RealQuad heightBefore, heightAfter;
};

struct ReductionTrace {
    Root initial;
    std::vector<StepCertificate> steps;
    Root final;
};

/// y = (theta/|m|^2) <p, l>, computed as -3/|m|^2 + (1/m)<s, l>.
FieldElem yParam(const Decomposition& dec, const LeechRootSpec& l);

/// The expanded form of the same quantity:
/// -3/(2|m|^2) + 3/2 - (1/2)(sigma/m - lambda)^2 + Im<sigma/m, lambda>
///   + 3(nu_l - nu/|m|^2).
/// Independent route; must agree with yParam everywhere.
FieldElem yFormula(const Decomposition& dec, const LeechRootSpec& l);

struct NormalizeResult {
    std::vector<PreOp> word;
    Root root;  // (sigma0; theta, c) with nu in {theta/2, conj(theta)/2, 0}
    CosetTag tag;
};
/// Lemma 5.1 normal form for |m|^2 = 3 roots: unit-scale to m = theta, then
/// translate sigma to its coset representative and center nu.
NormalizeResult normalizeMTheta(const Root& s);

/// The constructive recipe for a non-Leech root: CVP choice of lambda, nu_l
/// banding, exact classification of y.  Dispatches |m|^2 = 3 through the
/// normalizer (tag Norm9 becomes the ball-overlap certificate).
StepCertificate chooseReflection(const Root& s);

/// The Lemma 5.4 certificate for a normalized (sigma9; theta, -1) root.
StepCertificate certifyBallOverlap(const Root& normalized, std::vector<PreOp> pre);

/// Applies a certificate's word to the root: pre-ops, then the inverse
/// triflection (the conj(zeta)-reflection in the recorded Leech root).
Root applyStep(const StepCertificate& cert, const Root& s);

ReductionTrace reduceToLeech(const Root& s);

/// Re-checks a trace with no producer state: validates every recorded op,
/// recomputes y and the ratio witnesses, replays the word exactly, and
/// checks strict height decrease and the final Leech root.
void verifyTrace(const ReductionTrace& trace);

}  // namespace eisl

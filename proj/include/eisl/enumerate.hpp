#pragma once

#include <functional>
#include <vector>

#include "eisl/field.hpp"

// Exact Schnorr-Euchner enumeration over an integer Gram matrix.  All bounds
// are tested with exact signs; no pruning step ever uses floating point.  The
// scalar type S is Rat for rational targets and RealQuad when the target has
// sqrt3 parts (CVP targets sigma/m with field coordinates).

namespace eisl {

template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rat> {
    static Rat fromRat(const Rat& r) { return r; }
    static int sign(const Rat& x) { return sgn(x); }
};

template <>
struct ScalarOps<RealQuad> {
    static RealQuad fromRat(const Rat& r) { return RealQuad(r); }
    static int sign(const RealQuad& x) { return eisl::sign(x); }
};

inline Int floorScalar(const Rat& x) { return floorRat(x); }
inline Int floorScalar(const RealQuad& x) { return floorRealQuad(x); }

/// Exact Gram-Schmidt data of a positive-definite integer Gram matrix.
struct GramSchmidt {
    std::vector<std::vector<Rat>> mu;  // lower triangular, mu[i][j] for j < i
    std::vector<Rat> normSq;           // |b*_i|^2, positive rationals

    explicit GramSchmidt(const std::vector<std::vector<Int>>& gram) {
        const size_t n = gram.size();
        mu.assign(n, std::vector<Rat>(n, Rat(0)));
        normSq.assign(n, Rat(0));
        for (size_t i = 0; i < n; ++i) {
            normSq[i] = Rat(gram[i][i]);
            for (size_t j = 0; j < i; ++j) {
                Rat m(gram[i][j]);
                for (size_t k = 0; k < j; ++k) m -= mu[j][k] * mu[i][k] * normSq[k];
                m /= normSq[j];
                mu[i][j] = m;
                normSq[i] -= m * m * normSq[j];
            }
            if (sgn(normSq[i]) <= 0) throw MathError("GramSchmidt: Gram not positive definite");
        }
    }
};

/// Enumerates all integer vectors x with Q(x - target) <= radiusSq, where Q is
/// the quadratic form described by `gs`.  If `shrink` is set, the radius is
/// lowered to each newly found distance (closest-vector search keeping ties).
/// The visitor returns false to abort.
template <class S>
void enumerateBall(const GramSchmidt& gs, const std::vector<S>& target, S radiusSq, bool shrink,
                   const std::function<bool(const S&, const std::vector<long long>&)>& visit) {
    using Ops = ScalarOps<S>;
    const int n = static_cast<int>(gs.normSq.size());
    std::vector<long long> x(n, 0);
    std::vector<S> dist(n + 1, Ops::fromRat(Rat(0)));
    S radius = radiusSq;
    bool aborted = false;

    // c_i = target_i - sum_{j>i} mu[j][i] (x_j - target_j)
    auto center = [&](int i) {
        S c = target[i];
        for (int j = i + 1; j < n; ++j) {
            Rat m = gs.mu[j][i];
            if (sgn(m) == 0) continue;
            S d = Ops::fromRat(Rat(x[j])) - target[j];
            c = c - S(Ops::fromRat(m) * d);
        }
        return c;
    };

    std::function<void(int)> rec = [&](int i) {
        if (aborted) return;
        if (i < 0) {
            if (!visit(dist[0], x)) aborted = true;
            if (shrink && Ops::sign(dist[0] - radius) < 0) radius = dist[0];
            return;
        }
        const S c = center(i);
        const S bn = Ops::fromRat(gs.normSq[i]);
        const Int v0 = floorScalar(c);
        for (int dir = 0; dir < 2; ++dir) {
            Int v = (dir == 0) ? v0 : v0 - 1;
            const int step = (dir == 0) ? 1 : -1;
            for (;;) {
                S d = Ops::fromRat(Rat(v)) - c;
                S t = bn * d * d;
                S total = dist[i + 1] + t;
                if (Ops::sign(total - radius) > 0) {
                    // past the center and out of budget: the term only grows
                    if ((step > 0 && Ops::sign(d) >= 0) || (step < 0 && Ops::sign(d) <= 0)) break;
                } else {
                    if (mpz_cmpabs_ui(v.get_mpz_t(), 1ull << 62) > 0)
                        throw MathError("enumerateBall: coordinate overflow");
                    x[i] = mpz_get_si(v.get_mpz_t());
                    dist[i] = total;
                    rec(i - 1);
                    if (aborted) return;
                }
                v += step;
            }
        }
        x[i] = 0;
    };
    rec(n - 1);
}

}  // namespace eisl

#include "eisl/linalg.hpp"

#include <algorithm>

namespace eisl {

namespace {

Cyclo cdiv(const Cyclo& x, const Cyclo& y) { return x / y; }

bool rowIsZero(const EisRow& r) {
    for (const auto& x : r)
        if (!x.isZero()) return false;
    return true;
}

}  // namespace

EisMat hnfBasis(EisMat rows, int cols) {
    EisMat basis;
    for (int col = 0; col < cols; ++col) {
        for (;;) {
            int piv = -1;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][col].isZero()) continue;
                if (piv < 0) {
                    piv = static_cast<int>(i);
                    continue;
                }
                Int np = rows[piv][col].normSq(), ni = rows[i][col].normSq();
                if (ni < np || (ni == np && rows[i][col] < rows[piv][col])) piv = static_cast<int>(i);
            }
            if (piv < 0) break;
            EisRow pivot = rows[piv];
            rows.erase(rows.begin() + piv);
            bool clean = true;
            EisMat next;
            for (auto& r : rows) {
                if (!r[col].isZero()) {
                    Eis q = roundCyclo(Cyclo(r[col]) / Cyclo(pivot[col]));
                    for (int j = 0; j < cols; ++j) r[j] = r[j] - q * pivot[j];
                    if (!r[col].isZero()) clean = false;
                }
                if (!rowIsZero(r)) next.push_back(std::move(r));
            }
            rows = std::move(next);
            if (clean) {
                basis.push_back(std::move(pivot));
                break;
            }
            rows.push_back(std::move(pivot));
        }
    }
    if (static_cast<int>(basis.size()) != cols)
        throw MathError("hnfBasis: generators do not have full rank");
    // normalize: scale pivots by canonical unit, reduce rows above each pivot
    for (int k = 0; k < cols; ++k) {
        Eis u = canonicalizingUnit(basis[k][k]);
        for (int j = 0; j < cols; ++j) basis[k][j] = u * basis[k][j];
        for (int i = 0; i < k; ++i) {
            Eis q = roundCyclo(Cyclo(basis[i][k]) / Cyclo(basis[k][k]));
            if (!q.isZero())
                for (int j = 0; j < cols; ++j) basis[i][j] = basis[i][j] - q * basis[k][j];
        }
    }
    return basis;
}

CycloMat toCyclo(const EisMat& m) {
    CycloMat out(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (const auto& x : m[i]) out[i].emplace_back(x);
    return out;
}

Cyclo cycloDet(CycloMat m) {
    const size_t n = m.size();
    Cyclo det(Rat(1), Rat(0));
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].isZero()) ++piv;
        if (piv == n) return Cyclo();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det = det * m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].isZero()) continue;
            Cyclo f = cdiv(m[i][k], m[k][k]);
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - f * m[k][j];
        }
    }
    return det;
}

CycloMat cycloInverse(CycloMat m) {
    const size_t n = m.size();
    CycloMat inv(n, CycloRow(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Cyclo(Rat(1), Rat(0));
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].isZero()) ++piv;
        if (piv == n) throw MathError("cycloInverse: singular matrix");
        std::swap(m[piv], m[k]);
        std::swap(inv[piv], inv[k]);
        Cyclo d = m[k][k].inverse();
        for (size_t j = 0; j < n; ++j) {
            m[k][j] = m[k][j] * d;
            inv[k][j] = inv[k][j] * d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k].isZero()) continue;
            Cyclo f = m[i][k];
            for (size_t j = 0; j < n; ++j) {
                m[i][j] = m[i][j] - f * m[k][j];
                inv[i][j] = inv[i][j] - f * inv[k][j];
            }
        }
    }
    return inv;
}

CycloRow cycloSolveLeft(const CycloMat& m, const CycloRow& rhs) {
    CycloMat inv = cycloInverse(m);
    const size_t n = rhs.size();
    CycloRow x(n);
    for (size_t j = 0; j < n; ++j) {
        Cyclo s;
        for (size_t i = 0; i < n; ++i) s = s + rhs[i] * inv[i][j];
        x[j] = s;
    }
    return x;
}

Int intDet(std::vector<std::vector<Int>> m) {
    const size_t n = m.size();
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace eisl

#include "eisl/golay.hpp"

#include <set>

namespace eisl {

GolayTernary::GolayTernary() {
    // generator polynomial of the length-11 QR code over F_3:
    // g(x) = 2 + x^2 + 2x^3 + x^4 + x^5  (a degree-5 divisor of x^11 - 1)
    static const int g[6] = {2, 0, 1, 2, 1, 1};
    for (int i = 0; i < 6; ++i) {
        gen_[i].fill(0);
        int sum = 0;
        for (int j = 0; j < 6; ++j) {
            gen_[i][(i + j) % 11] = g[j];
            sum += g[j];
        }
        gen_[i][11] = (3 - sum % 3) % 3;  // sum-zero extension
    }
}

bool GolayTernary::contains(const std::array<int, 12>& word) const {
    for (const auto& row : gen_) {
        int dot = 0;
        for (int j = 0; j < 12; ++j) dot += row[j] * word[j];
        if (dot % 3 != 0) return false;
    }
    return true;
}

std::vector<std::array<int, 12>> GolayTernary::allWords() const {
    std::vector<std::array<int, 12>> out;
    out.reserve(729);
    for (int m = 0; m < 729; ++m) {
        std::array<int, 12> c{};
        int mm = m;
        for (int k = 0; k < 6; ++k) {
            int coef = mm % 3;
            mm /= 3;
            if (coef)
                for (int j = 0; j < 12; ++j) c[j] = (c[j] + coef * gen_[k][j]) % 3;
        }
        out.push_back(c);
    }
    return out;
}

void GolayTernary::verify() const {
    auto words = allWords();
    std::set<std::array<int, 12>> distinct(words.begin(), words.end());
    if (distinct.size() != 729) throw MathError("GolayTernary: expected 3^6 distinct words");

    // self-dual
    for (const auto& r1 : gen_)
        for (const auto& r2 : gen_) {
            int dot = 0;
            for (int j = 0; j < 12; ++j) dot += r1[j] * r2[j];
            if (dot % 3 != 0) throw MathError("GolayTernary: generators not self-orthogonal");
        }

    bool sawSix = false;
    std::array<int, 12> ones;
    ones.fill(1);
    if (!contains(ones)) throw MathError("GolayTernary: all-ones word missing");
    for (const auto& c : words) {
        int wt = 0;
        for (int v : c) wt += (v != 0);
        if (wt != 0 && wt != 6 && wt != 9 && wt != 12)
            throw MathError("GolayTernary: weight outside {0,6,9,12}");
        if (wt == 6) sawSix = true;
    }
    if (!sawSix) throw MathError("GolayTernary: minimum weight is not 6");
}

}  // namespace eisl

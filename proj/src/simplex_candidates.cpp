#include "simplex_candidates.hpp"

#include <algorithm>
#include <set>

namespace zhouval {

Rat dot(const RatVec& w, const RatVec& v) {
    Rat s;
    for (size_t i = 0; i < w.size(); ++i) s += w[i] * v[i];
    return s;
}

Rat dot(const RatVec& w, const Exponents& e) {
    Rat s;
    for (size_t i = 0; i < w.size(); ++i) s += w[i] * Rat(static_cast<long>(e[i]));
    return s;
}

RatVec to_ratvec(const Exponents& e) {
    RatVec v;
    v.reserve(e.size());
    for (unsigned x : e) v.emplace_back(static_cast<long>(x));
    return v;
}

Rat MinForm::eval(const RatVec& x) const {
    Rat best = dot(x, forms.front());
    for (size_t j = 1; j < forms.size(); ++j) {
        Rat v = dot(x, forms[j]);
        if (v < best) best = v;
    }
    return best;
}

namespace {

struct RatVecLess {
    bool operator()(const RatVec& a, const RatVec& b) const {
        for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return a.size() < b.size();
    }
};

// Scale-and-sign canonical form of a hyperplane normal, for dedup.
RatVec canonical_normal(RatVec v) {
    const Rat zero(0);
    Rat lead = zero;
    for (const Rat& x : v)
        if (!x.is_zero()) {
            lead = x;
            break;
        }
    if (lead.is_zero()) return v;
    for (Rat& x : v) x = x / lead;
    return v;
}

// Solves the square rational system A x = b by Gaussian elimination.
// Returns false when A is singular.
bool solve_square(std::vector<RatVec> a, RatVec b, RatVec& out) {
    const size_t n = b.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        Rat inv = a[col][col].reciprocal();
        for (size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            Rat f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    out = b;
    return true;
}

}  // namespace

std::vector<RatVec> simplex_candidates(size_t n, const std::vector<std::vector<RatVec>>& families) {
    std::set<RatVec, RatVecLess> normals;
    for (const auto& fam : families) {
        for (size_t i = 0; i < fam.size(); ++i)
            for (size_t j = i + 1; j < fam.size(); ++j) {
                RatVec d(n);
                bool nonzero = false;
                for (size_t k = 0; k < n; ++k) {
                    d[k] = fam[i][k] - fam[j][k];
                    nonzero = nonzero || !d[k].is_zero();
                }
                if (nonzero) normals.insert(canonical_normal(std::move(d)));
            }
    }
    // Constraint pool: tie hyperplanes plus the simplex's coordinate facets.
    std::vector<RatVec> pool(normals.begin(), normals.end());
    for (size_t k = 0; k < n; ++k) {
        RatVec e(n);
        e[k] = Rat(1);
        pool.push_back(std::move(e));
    }

    std::set<RatVec, RatVecLess> found;
    if (n == 1) {
        found.insert(RatVec{Rat(1)});
    } else {
        const size_t pick = n - 1;
        std::vector<size_t> idx(pick);
        for (size_t i = 0; i < pick; ++i) idx[i] = i;
        // Enumerate all (n-1)-subsets of the pool together with sum(w) = 1.
        // Low-dimensional by design; guard the combinatorial blowup.
        auto combinations = [&](auto&& body) {
            if (pool.size() < pick) return;
            while (true) {
                body(idx);
                size_t i = pick;
                while (i > 0) {
                    --i;
                    if (idx[i] != i + pool.size() - pick) break;
                    if (i == 0) return;
                }
                ++idx[i];
                for (size_t j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
            }
        };
        double rough = 1.0;
        for (size_t i = 0; i < pick; ++i) rough *= static_cast<double>(pool.size() - i) / static_cast<double>(i + 1);
        if (rough > 4e6)
            throw Error(ErrCode::kDomain,
                        "tie-hyperplane arrangement too large for exact vertex enumeration");
        combinations([&](const std::vector<size_t>& chosen) {
            std::vector<RatVec> rows;
            rows.reserve(n);
            RatVec rhs(n);
            for (size_t i : chosen) {
                rows.push_back(pool[i]);
                rhs[rows.size() - 1] = Rat(0);
            }
            rows.push_back(RatVec(n, Rat(1)));
            rhs[n - 1] = Rat(1);
            RatVec w;
            if (!solve_square(std::move(rows), std::move(rhs), w)) return;
            for (const Rat& x : w)
                if (x.sign() < 0) return;
            found.insert(std::move(w));
        });
    }
    return {found.begin(), found.end()};
}

}  // namespace zhouval

#pragma once

// Dense exact linear algebra over Q(sqrt 5).
//
// Three elimination engines:
//   * bareiss_rank      - fraction-free elimination in Z[sqrt5] after clearing
//                         denominators (primary rank algorithm),
//   * rref / gauss      - plain exact field elimination (kernel bases, solving,
//                         and the independent second rank route),
//   * modular_rank      - deterministic multi-modular elimination for large
//                         matrices (fixed primes p = 19 mod 20, sqrt5 embedded
//                         mod p).

#include "qs5.hpp"

#include <cassert>
#include <cstddef>
#include <vector>

namespace h3 {

struct Mat {
    size_t rows = 0, cols = 0;
    std::vector<QS5> e;

    Mat() = default;
    Mat(size_t r, size_t c) : rows(r), cols(c), e(r * c) {}

    QS5& at(size_t i, size_t j) { return e[i * cols + j]; }
    const QS5& at(size_t i, size_t j) const { return e[i * cols + j]; }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m.at(i, i) = QS5(1);
        return m;
    }

    Mat transposed() const {
        Mat t(cols, rows);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& x : e)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows == y.rows && x.cols == y.cols && x.e == y.e;
    }

    friend Mat operator*(const Mat& x, const Mat& y) {
        assert(x.cols == y.rows);
        Mat z(x.rows, y.cols);
        for (size_t i = 0; i < x.rows; ++i)
            for (size_t k = 0; k < x.cols; ++k) {
                const QS5& xik = x.at(i, k);
                if (xik.is_zero()) continue;
                for (size_t j = 0; j < y.cols; ++j) {
                    const QS5& ykj = y.at(k, j);
                    if (!ykj.is_zero()) z.at(i, j) += xik * ykj;
                }
            }
        return z;
    }

    friend Mat operator+(const Mat& x, const Mat& y) {
        assert(x.rows == y.rows && x.cols == y.cols);
        Mat z(x.rows, x.cols);
        for (size_t i = 0; i < x.e.size(); ++i) z.e[i] = x.e[i] + y.e[i];
        return z;
    }
    friend Mat operator-(const Mat& x, const Mat& y) {
        assert(x.rows == y.rows && x.cols == y.cols);
        Mat z(x.rows, x.cols);
        for (size_t i = 0; i < x.e.size(); ++i) z.e[i] = x.e[i] - y.e[i];
        return z;
    }
    friend Mat operator*(const QS5& s, const Mat& y) {
        Mat z(y.rows, y.cols);
        for (size_t i = 0; i < y.e.size(); ++i) z.e[i] = s * y.e[i];
        return z;
    }

    QS5 trace() const {
        assert(rows == cols);
        QS5 t;
        for (size_t i = 0; i < rows; ++i) t += at(i, i);
        return t;
    }
};

// ---------------------------------------------------------------------------
// Field elimination (RREF).  Deterministic: first nonzero pivot per column.

struct Rref {
    Mat m;                          // reduced row echelon form
    std::vector<size_t> pivot_cols;
    size_t rank() const { return pivot_cols.size(); }
};

inline Rref rref(Mat m) {
    Rref out;
    size_t pr = 0;
    for (size_t pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        size_t sel = pr;
        while (sel < m.rows && m.at(sel, pc).is_zero()) ++sel;
        if (sel == m.rows) continue;
        if (sel != pr)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(sel, j));
        QS5 inv = m.at(pr, pc).inverse();
        for (size_t j = pc; j < m.cols; ++j) m.at(pr, j) *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == pr || m.at(i, pc).is_zero()) continue;
            QS5 f = m.at(i, pc);
            for (size_t j = pc; j < m.cols; ++j) m.at(i, j) -= f * m.at(pr, j);
        }
        out.pivot_cols.push_back(pc);
        ++pr;
    }
    out.m = std::move(m);
    return out;
}

inline size_t gauss_rank(const Mat& m) { return rref(m).rank(); }

// Basis of the right null space; columns of the result.
inline Mat nullspace(const Mat& m) {
    Rref r = rref(m);
    size_t n = m.cols, rk = r.rank();
    std::vector<int> pivot_of_col(n, -1);
    for (size_t i = 0; i < rk; ++i) pivot_of_col[r.pivot_cols[i]] = (int)i;
    Mat ker(n, n - rk);
    size_t kcol = 0;
    for (size_t j = 0; j < n; ++j) {
        if (pivot_of_col[j] >= 0) continue;
        ker.at(j, kcol) = QS5(1);
        for (size_t i = 0; i < rk; ++i)
            ker.at(r.pivot_cols[i], kcol) = -r.m.at(i, j);
        ++kcol;
    }
    return ker;
}

// Solve A X = B exactly; nullopt if inconsistent.  If the system is
// underdetermined the free variables are set to zero.
inline std::optional<Mat> solve(const Mat& a, const Mat& b) {
    assert(a.rows == b.rows);
    Mat aug(a.rows, a.cols + b.cols);
    for (size_t i = 0; i < a.rows; ++i) {
        for (size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        for (size_t j = 0; j < b.cols; ++j) aug.at(i, a.cols + j) = b.at(i, j);
    }
    Rref r = rref(std::move(aug));
    Mat x(a.cols, b.cols);
    for (size_t i = 0; i < r.rank(); ++i) {
        if (r.pivot_cols[i] >= a.cols) return std::nullopt;  // 0 = nonzero row
        for (size_t j = 0; j < b.cols; ++j)
            x.at(r.pivot_cols[i], j) = r.m.at(i, a.cols + j);
    }
    return x;
}

inline Mat inverse(const Mat& a) {
    assert(a.rows == a.cols);
    auto x = solve(a, Mat::identity(a.rows));
    assert(x && gauss_rank(a) == a.rows);
    return *x;
}

// ---------------------------------------------------------------------------
// Fraction-free Bareiss rank over Z[sqrt5].

namespace detail {

// Rough size of an entry, for pivot selection.
inline size_t qs5_size(const QS5& x) {
    return mpz_sizeinbase(x.a.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(x.b.get_num().get_mpz_t(), 2);
}

// Exact division x / y inside Z[sqrt5] (denominators must come out 1).
inline QS5 exact_div(const QS5& x, const QS5& y) {
    QS5 q = x * y.inverse();
    assert(q.a.get_den() == 1 && q.b.get_den() == 1);
    return q;
}

}  // namespace detail

inline size_t bareiss_rank(Mat m) {
    // Clear denominators row by row: rank is scaling invariant.
    for (size_t i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (size_t j = 0; j < m.cols; ++j) {
            l = lcm(l, m.at(i, j).a.get_den());
            l = lcm(l, m.at(i, j).b.get_den());
        }
        if (l != 1) {
            QS5 f{Rat(l)};
            for (size_t j = 0; j < m.cols; ++j) m.at(i, j) *= f;
        }
    }
    QS5 prev(1);
    size_t pr = 0;
    for (size_t pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        // Pivot: nonzero entry of minimal size in this column (growth control).
        size_t sel = m.rows;
        size_t best = ~size_t(0);
        for (size_t i = pr; i < m.rows; ++i) {
            if (m.at(i, pc).is_zero()) continue;
            size_t sz = detail::qs5_size(m.at(i, pc));
            if (sz < best) {
                best = sz;
                sel = i;
            }
        }
        if (sel == m.rows) continue;
        if (sel != pr)
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(sel, j));
        const QS5 piv = m.at(pr, pc);
        for (size_t i = pr + 1; i < m.rows; ++i) {
            const QS5 f = m.at(i, pc);
            for (size_t j = pc + 1; j < m.cols; ++j)
                m.at(i, j) = detail::exact_div(piv * m.at(i, j) - f * m.at(pr, j), prev);
            m.at(i, pc) = QS5();
        }
        prev = piv;
        ++pr;
    }
    return pr;
}

// ---------------------------------------------------------------------------
// Multi-modular rank.  Primes p = 19 (mod 20): 5 is a QR and sqrt can be
// taken as 5^((p+1)/4); rank mod p is a lower bound for the true rank, so the
// maximum over the fixed prime set is reported (deterministic).

namespace detail {

inline uint64_t mulmod(uint64_t x, uint64_t y, uint64_t p) {
    return (uint64_t)((__uint128_t)x * y % p);
}
inline uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}
inline uint64_t invmod(uint64_t x, uint64_t p) { return powmod(x, p - 2, p); }

inline constexpr uint64_t kRankPrimes[] = {
    1000000000000000079ULL,  // = 19 mod 20
    1000000000000000619ULL,
    1000000000000000799ULL,
    1000000000000001359ULL,
    1000000000000001459ULL,
};

// Image of x in F_p under sqrt5 -> 5^((p+1)/4); nullopt if a denominator
// vanishes mod p.
inline std::optional<uint64_t> qs5_mod(const QS5& x, uint64_t p, uint64_t sqrt5p) {
    auto rat_mod = [&](const Rat& r) -> std::optional<uint64_t> {
        uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), p);
        if (den == 0) return std::nullopt;
        uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), p);
        return mulmod(num, invmod(den, p), p);
    };
    auto a = rat_mod(x.a), b = rat_mod(x.b);
    if (!a || !b) return std::nullopt;
    return (*a + mulmod(*b, sqrt5p, p)) % p;
}

inline std::optional<size_t> rank_mod_p(const Mat& m, uint64_t p) {
    uint64_t s5 = powmod(5, (p + 1) / 4, p);
    if (mulmod(s5, s5, p) != 5) return std::nullopt;  // p not usable
    std::vector<uint64_t> a(m.rows * m.cols);
    for (size_t i = 0; i < m.e.size(); ++i) {
        auto v = qs5_mod(m.e[i], p, s5);
        if (!v) return std::nullopt;
        a[i] = *v;
    }
    size_t pr = 0;
    for (size_t pc = 0; pc < m.cols && pr < m.rows; ++pc) {
        size_t sel = pr;
        while (sel < m.rows && a[sel * m.cols + pc] == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != pr)
            for (size_t j = 0; j < m.cols; ++j)
                std::swap(a[pr * m.cols + j], a[sel * m.cols + j]);
        uint64_t inv = invmod(a[pr * m.cols + pc], p);
        for (size_t i = pr + 1; i < m.rows; ++i) {
            uint64_t f = mulmod(a[i * m.cols + pc], inv, p);
            if (f == 0) continue;
            for (size_t j = pc; j < m.cols; ++j) {
                uint64_t sub = mulmod(f, a[pr * m.cols + j], p);
                uint64_t& t = a[i * m.cols + j];
                t = (t >= sub) ? t - sub : t + p - sub;
            }
        }
        ++pr;
    }
    return pr;
}

}  // namespace detail

inline size_t modular_rank(const Mat& m) {
    size_t best = 0;
    for (uint64_t p : detail::kRankPrimes) {
        auto r = detail::rank_mod_p(m, p);
        if (r && *r > best) best = *r;
    }
    return best;
}

}  // namespace h3

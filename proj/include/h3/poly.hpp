#pragma once

// Sparse polynomials in three variables with QS5 coefficients, plus the
// handful of operations the Dunkl-operator machinery needs: products,
// partial derivatives, linear changes of variable, and exact division by a
// linear form.

#include <h3/linalg.hpp>

#include <array>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

namespace h3 {

using Mono = std::array<int, 3>;

struct Poly {
    // monomial exponents -> coefficient; zero coefficients are never stored
    std::map<Mono, QS5> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const Mono& m, const QS5& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const QS5& s, const Poly& p) {
        Poly r;
        if (s.is_zero()) return r;
        for (const auto& [m, c] : p.terms) r.terms.emplace(m, s * c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms)
                r.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
        return r;
    }
    bool operator==(const Poly& o) const { return terms == o.terms; }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms) d = std::max(d, m[0] + m[1] + m[2]);
        return d;
    }
};

inline Poly monomial(const Mono& m, const QS5& c = QS5(1)) {
    Poly p;
    p.add_term(m, c);
    return p;
}

inline Poly variable(int i) {
    Mono m{0, 0, 0};
    m[i] = 1;
    return monomial(m);
}

// coeffs . (x1, x2, x3)
inline Poly linear_form(const std::vector<QS5>& coeffs) {
    Poly p;
    for (int i = 0; i < 3; ++i) {
        Mono m{0, 0, 0};
        m[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

// Monomials of total degree k in a fixed order; this order is the basis
// convention for every graded computation downstream.
inline const std::vector<Mono>& monomials_of_degree(int k) {
    // deque: growing the cache must not invalidate references handed out
    static std::deque<std::vector<Mono>> cache;
    while ((int)cache.size() <= k) {
        int d = (int)cache.size();
        std::vector<Mono> ms;
        for (int a = d; a >= 0; --a)
            for (int b = d - a; b >= 0; --b) ms.push_back({a, b, d - a - b});
        cache.push_back(std::move(ms));
    }
    return cache[k];
}

inline size_t monomial_index(const Mono& m) {
    const auto& ms = monomials_of_degree(m[0] + m[1] + m[2]);
    for (size_t i = 0; i < ms.size(); ++i)
        if (ms[i] == m) return i;
    throw std::logic_error("monomial_index: not found");
}

inline Poly derivative(const Poly& p, int var) {
    Poly r;
    for (const auto& [m, c] : p.terms) {
        if (m[var] == 0) continue;
        Mono n = m;
        --n[var];
        r.add_term(n, QS5((long)m[var]) * c);
    }
    return r;
}

// Substitute x_j -> sum_i M(i, j) x_i (a linear change of variable by the
// matrix that sends basis vectors to its columns).
inline Poly apply_matrix(const Mat& mat, const Poly& p) {
    std::array<Poly, 3> img;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) {
            Mono m{0, 0, 0};
            m[i] = 1;
            img[j].add_term(m, mat.at(i, j));
        }
    Poly r;
    for (const auto& [m, c] : p.terms) {
        Poly t = monomial({0, 0, 0}, c);
        for (int j = 0; j < 3; ++j)
            for (int e = 0; e < m[j]; ++e) t = t * img[j];
        r += t;
    }
    return r;
}

// Exact division by a nonzero linear form; throws if the division leaves a
// remainder (it never should for the differences (1 - s) f over the root of s).
inline Poly divide_by_linear(Poly f, const Poly& lin) {
    int pivot = -1;
    QS5 a;
    for (const auto& [m, c] : lin.terms) {
        if (m[0] + m[1] + m[2] != 1) throw std::invalid_argument("divisor is not linear");
        int v = m[0] ? 0 : (m[1] ? 1 : 2);
        if (pivot < 0) {
            pivot = v;
            a = c;
        }
    }
    if (pivot < 0) throw std::invalid_argument("divisor is zero");
    Poly q;
    while (!f.is_zero()) {
        // peel the terms with the highest pivot exponent
        int top = 0;
        for (const auto& [m, c] : f.terms) top = std::max(top, m[pivot]);
        if (top == 0) throw std::domain_error("divide_by_linear: nonzero remainder");
        Poly qk;
        for (const auto& [m, c] : f.terms)
            if (m[pivot] == top) {
                Mono n = m;
                --n[pivot];
                qk.add_term(n, c / a);
            }
        q += qk;
        f -= qk * lin;
    }
    return q;
}

}  // namespace h3

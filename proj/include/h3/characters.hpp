#pragma once

// Grothendieck-group calculus for the lowest-weight category attached to
// H3: lowest weights h_c(tau), virtual characters (integer combinations of
// standard modules), graded multiplicities, finite-dimension detection via
// the pole order at t = 1, the support criterion, induction/restriction to
// parabolic subgroups, and the closed-form decomposition tables with their
// transport to arbitrary rational c.

#include <h3/reps.hpp>

#include <optional>

namespace h3 {

// ---------------------------------------------------------------------------
// Lowest weights.

// Value of the central element sum_{s in S} s on each irreducible:
// 15 * chi(s-class) / dim.  Recomputed from the character table and checked
// against the known constants.
inline const std::array<long, 10>& central_constants() {
    static const std::array<long, 10> vals = [] {
        const Group& g = h3_group();
        const auto& table = character_table(g);
        int refl_class = g.elements[g.gens[0]].class_id;
        std::array<long, 10> v{};
        for (int t = 0; t < 10; ++t) {
            QS5 x = QS5(15) * table[t][refl_class] / table[t][0];
            if (!x.is_rational() || x.a.get_den() != 1)
                throw std::logic_error("central constant is not an integer");
            v[t] = (long)x.a.get_num().get_si();
        }
        static const std::array<long, 10> expected = {15, -15, -5, 5, -5,
                                                      5,  0,   0,  3, -3};
        if (v != expected) throw std::logic_error("central constants mismatch");
        return v;
    }();
    return vals;
}

inline Rat h_weight(const Rat& c, int tau) {
    return rat(3, 2) - c * central_constants()[tau];
}

inline std::array<Rat, 10> h_weights(const Rat& c) {
    std::array<Rat, 10> w;
    for (int t = 0; t < 10; ++t) w[t] = h_weight(c, t);
    return w;
}

// Sign of -Id on tau: +1 or -1.
inline int central_sign(int tau) {
    const Group& g = h3_group();
    const auto& chi = character_table(g)[tau];
    return chi[1] == chi[0] ? 1 : -1;
}

// Lemma "even": n_{tau,sigma} can be nonzero only if h_c(sigma) - h_c(tau)
// is a positive integer whose parity matches the -Id signs.
inline bool parity_allowed(const Rat& c, int tau, int sigma) {
    Rat gap = h_weight(c, sigma) - h_weight(c, tau);
    if (gap <= 0 || gap.get_den() != 1) return false;
    long g = gap.get_num().get_si();
    int same = central_sign(tau) == central_sign(sigma) ? 0 : 1;
    return (g % 2 + 2) % 2 == same;
}

// Irreducible constituents sigma of h* (x) tau with weight gap exactly 1;
// such sigma consist of singular vectors in degree 1 of M_c(tau).
inline std::vector<int> degree_one_singulars(const Rat& c, int tau) {
    const Group& g = h3_group();
    const auto& table = character_table(g);
    auto prod = tensor_decompose(g, table[irrep_index("3-")], table[tau]);
    std::vector<int> out;
    for (const auto& [sigma, mult] : prod)
        if (mult > 0 && h_weight(c, sigma) - h_weight(c, tau) == 1)
            out.push_back(sigma);
    return out;
}

// ---------------------------------------------------------------------------
// Virtual characters: integer combinations sum_sigma n_sigma [M_c(sigma)].

struct VirtualCharacter {
    Rat c;
    std::array<long, 10> n{};

    friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
        return a.c == b.c && a.n == b.n;
    }
    friend VirtualCharacter operator+(VirtualCharacter a, const VirtualCharacter& b) {
        for (int i = 0; i < 10; ++i) a.n[i] += b.n[i];
        return a;
    }
    friend VirtualCharacter operator-(VirtualCharacter a, const VirtualCharacter& b) {
        for (int i = 0; i < 10; ++i) a.n[i] -= b.n[i];
        return a;
    }
};

inline VirtualCharacter make_virtual(
    const Rat& c, std::initializer_list<std::pair<const char*, long>> terms) {
    VirtualCharacter v;
    v.c = c;
    for (const auto& [label, coeff] : terms) v.n[irrep_index(label)] += coeff;
    return v;
}

// Smallest lowest weight among contributing standard modules.
inline std::optional<Rat> lowest_weight(const VirtualCharacter& v) {
    std::optional<Rat> best;
    for (int t = 0; t < 10; ++t)
        if (v.n[t] != 0) {
            Rat h = h_weight(v.c, t);
            if (!best || h < *best) best = h;
        }
    return best;
}

// Virtual H3-character of the graded piece at absolute weight w:
// sum over sigma with w - h_c(sigma) a nonnegative integer e of
// n_sigma * chi_sigma * ch(S^e h*).
inline ClassFunction graded_mult_at(const VirtualCharacter& v, const Rat& w) {
    const Group& g = h3_group();
    const auto& table = character_table(g);
    ClassFunction out;
    for (int t = 0; t < 10; ++t) {
        if (v.n[t] == 0) continue;
        Rat e = w - h_weight(v.c, t);
        if (e < 0 || e.get_den() != 1) continue;
        out = out + QS5((long)v.n[t]) *
                        (table[t] * sym_power_char(g, (int)e.get_num().get_si()));
    }
    return out;
}

// Graded piece j steps above the lowest weight.
inline ClassFunction graded_mult(const VirtualCharacter& v, long j) {
    auto base = lowest_weight(v);
    if (!base) return ClassFunction{};
    return graded_mult_at(v, *base + j);
}

inline long graded_dim(const VirtualCharacter& v, long j) {
    QS5 d = graded_mult(v, j)[0];
    if (!d.is_rational() || d.a.get_den() != 1)
        throw std::logic_error("graded dimension is not an integer");
    return (long)d.a.get_num().get_si();
}

// Multiplicity of the trivial representation in graded piece j.
inline long invariant_multiplicity(const VirtualCharacter& v, long j) {
    const Group& g = h3_group();
    QS5 m = char_inner(g, graded_mult(v, j), character_table(g)[0]);
    if (!m.is_rational() || m.a.get_den() != 1)
        throw std::logic_error("invariant multiplicity is not an integer");
    return (long)m.a.get_num().get_si();
}

// ---------------------------------------------------------------------------
// Finite-dimensionality: the Id-class Hilbert series of V is
//   sum_sigma n_sigma dim(sigma) t^{h_c(sigma)} / (1-t)^3,
// so V is finite dimensional iff the numerator (per block of weights with
// integer gaps) is divisible by (1-t)^3; the total dimension is the value of
// the quotient at t = 1.

struct FiniteReport {
    bool finite = false;
    std::optional<Int> dim;  // set when finite
};

inline FiniteReport finite_dim_and_dimension(const VirtualCharacter& v) {
    // Group terms by weight mod 1; each block must vanish to order 3 at t=1.
    std::map<Rat, std::map<long, long>> blocks;  // frac part -> exponent -> coeff
    const Group& g = h3_group();
    const auto& table = character_table(g);
    for (int t = 0; t < 10; ++t) {
        if (v.n[t] == 0) continue;
        Rat h = h_weight(v.c, t);
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), h.get_num().get_mpz_t(), h.get_den().get_mpz_t());
        Rat frac = h - Rat(fl);
        long dim = (long)table[t][0].a.get_num().get_si();
        blocks[frac][fl.get_si()] += v.n[t] * dim;
    }
    Int total = 0;
    for (auto& [frac, poly] : blocks) {
        // p(t) = sum coeff t^e; write t = 1 - u and expand: finite iff the
        // u^0, u^1, u^2 coefficients vanish; block dimension = u^3 coefficient.
        long emin = poly.begin()->first;
        std::array<Int, 4> u{};  // coefficients of u^0..u^3 of p(1-u)*t^{-emin}
        for (auto& [e, coeff] : poly) {
            if (coeff == 0) continue;
            long n = e - emin;  // (1-u)^n, nonnegative exponent
            Int binom = 1;
            for (int i = 0; i <= 3 && i <= n; ++i) {
                u[i] += coeff * binom * ((i % 2) ? -1 : 1);
                binom = binom * (n - i) / (i + 1);
            }
        }
        if (u[0] != 0 || u[1] != 0 || u[2] != 0) return {false, std::nullopt};
        total += u[3];  // p(1-u) = u^3 q(1-u), so [u^3] p(1-u) = q(1)
    }
    return {true, total};
}

// ---------------------------------------------------------------------------
// Support of L_c(1_+): by the degree-divisibility criterion, the support
// dimension is the largest 3 - rank(P) over parabolic types P whose degree
// multiset matches the count #{i : d | d_i} of the full group.

inline int support_dim(const Rat& c) {
    if (c == 0) return 3;
    long d = (long)mpz_class(Rat(abs(c)).get_den()).get_si();
    if (d != 2 && d != 3 && d != 5 && d != 6 && d != 10) return 3;  // semisimple
    auto count = [&](const std::vector<int>& degrees) {
        int m = 0;
        for (int deg : degrees)
            if (deg % d == 0) ++m;
        return m;
    };
    int m_full = count({2, 6, 10});
    int best = -1;
    for (const auto& p : parabolic_types())
        if (count(p.degrees) == m_full) best = std::max(best, 3 - p.rank());
    if (best < 0) throw std::logic_error("support: no parabolic matches");
    return best;
}

// ---------------------------------------------------------------------------
// K-group induction / restriction through a parabolic subgroup.

// Lowest weight of the parabolic algebra's standard module over xi: both
// supported parabolics have rank 2, so h'_c(xi) = 1 - c sum_s chi_xi(s)/dim.
inline Rat parabolic_h_weight(const Parabolic& p, const Rat& c, size_t xi) {
    QS5 sum;
    for (size_t pos : p.reflection_positions)
        sum = sum + p.char_table.at(xi, (size_t)p.class_of[pos]);
    QS5 val = QS5(1) - QS5(c) * sum * QS5(rat(1, p.irrep_dims[xi]));
    if (!val.is_rational())
        throw std::logic_error("parabolic_h_weight: irrational value");
    return val.a;
}

inline VirtualCharacter kgroup_induct(const Group& g, const Parabolic& p,
                                      const Rat& c, const std::vector<long>& coeffs) {
    const auto& table = character_table(g);
    VirtualCharacter out;
    out.c = c;
    for (int t = 0; t < 10; ++t) {
        auto b = branching(g, table[t], p);
        for (size_t xi = 0; xi < b.size(); ++xi) out.n[t] += coeffs[xi] * b[xi];
    }
    return out;
}

inline std::vector<long> kgroup_restrict(const Group& g, const Parabolic& p,
                                         const VirtualCharacter& v) {
    const auto& table = character_table(g);
    std::vector<long> out(p.irrep_labels.size(), 0);
    for (int t = 0; t < 10; ++t) {
        if (v.n[t] == 0) continue;
        auto b = branching(g, table[t], p);
        for (size_t xi = 0; xi < b.size(); ++xi) out[xi] += v.n[t] * b[xi];
    }
    return out;
}

// ---------------------------------------------------------------------------
// The closed-form decomposition tables.  For c = r/d > 0 reduced with
// d in {2,3,5,6,10} the nontrivial rows of [L] in terms of [M] are as below,
// depending only on d and r mod d (mod 10 for d = 5); all other rows are
// L(tau) = M(tau).  Negative c goes through the sign twist, and all other c
// are semisimple.

namespace detail {

struct TheoremRow {
    const char* tau;
    std::vector<std::pair<const char*, long>> l_row;  // [L] in [M]
    std::vector<std::pair<const char*, long>> m_row;  // [M] in [L]
};

inline const std::vector<TheoremRow>& theorem_case(long d, long rmod) {
    using Rows = std::vector<TheoremRow>;
    static const Rows d10a = {
        {"1+", {{"1+", 1}, {"3-", -1}, {"3+", 1}, {"1-", -1}}, {{"1+", 1}, {"3-", 1}}},
        {"3+", {{"3+", 1}, {"1-", -1}}, {{"3+", 1}, {"1-", 1}}},
        {"3-", {{"3-", 1}, {"3+", -1}, {"1-", 1}}, {{"3-", 1}, {"3+", 1}}},
    };
    static const Rows d10b = {
        {"1+", {{"1+", 1}, {"3~-", -1}, {"3~+", 1}, {"1-", -1}}, {{"1+", 1}, {"3~-", 1}}},
        {"3~+", {{"3~+", 1}, {"1-", -1}}, {{"3~+", 1}, {"1-", 1}}},
        {"3~-", {{"3~-", 1}, {"3~+", -1}, {"1-", 1}}, {{"3~-", 1}, {"3~+", 1}}},
    };
    static const Rows d6 = {
        {"1+", {{"1+", 1}, {"5+", -1}, {"5-", 1}, {"1-", -1}}, {{"1+", 1}, {"5+", 1}}},
        {"5+", {{"5+", 1}, {"5-", -1}, {"1-", 1}}, {{"5+", 1}, {"5-", 1}}},
        {"5-", {{"5-", 1}, {"1-", -1}}, {{"5-", 1}, {"1-", 1}}},
    };
    static const Rows d5r19 = {
        {"1+", {{"1+", 1}, {"4-", -1}, {"3~+", 1}}, {{"1+", 1}, {"4-", 1}}},
        {"3~-", {{"3~-", 1}, {"4+", -1}, {"1-", 1}}, {{"3~-", 1}, {"4+", 1}}},
        {"4+", {{"4+", 1}, {"1-", -1}}, {{"4+", 1}, {"1-", 1}}},
        {"4-", {{"4-", 1}, {"3~+", -1}}, {{"4-", 1}, {"3~+", 1}}},
    };
    static const Rows d5r28 = {
        {"1+", {{"1+", 1}, {"4+", -1}, {"3+", 1}}, {{"1+", 1}, {"4+", 1}}},
        {"3-", {{"3-", 1}, {"4-", -1}, {"1-", 1}}, {{"3-", 1}, {"4-", 1}}},
        {"4-", {{"4-", 1}, {"1-", -1}}, {{"4-", 1}, {"1-", 1}}},
        {"4+", {{"4+", 1}, {"3+", -1}}, {{"4+", 1}, {"3+", 1}}},
    };
    static const Rows d5r37 = {
        {"1+", {{"1+", 1}, {"4-", -1}, {"3+", 1}}, {{"1+", 1}, {"4-", 1}}},
        {"3-", {{"3-", 1}, {"4+", -1}, {"1-", 1}}, {{"3-", 1}, {"4+", 1}}},
        {"4+", {{"4+", 1}, {"1-", -1}}, {{"4+", 1}, {"1-", 1}}},
        {"4-", {{"4-", 1}, {"3+", -1}}, {{"4-", 1}, {"3+", 1}}},
    };
    static const Rows d5r46 = {
        {"1+", {{"1+", 1}, {"4+", -1}, {"3~+", 1}}, {{"1+", 1}, {"4+", 1}}},
        {"3~-", {{"3~-", 1}, {"4-", -1}, {"1-", 1}}, {{"3~-", 1}, {"4-", 1}}},
        {"4-", {{"4-", 1}, {"1-", -1}}, {{"4-", 1}, {"1-", 1}}},
        {"4+", {{"4+", 1}, {"3~+", -1}}, {{"4+", 1}, {"3~+", 1}}},
    };
    static const Rows d3odd = {
        {"1+", {{"1+", 1}, {"5+", -1}, {"4-", 1}}, {{"1+", 1}, {"5+", 1}}},
        {"4+", {{"4+", 1}, {"5-", -1}, {"1-", 1}}, {{"4+", 1}, {"5-", 1}}},
        {"5-", {{"5-", 1}, {"1-", -1}}, {{"5-", 1}, {"1-", 1}}},
        {"5+", {{"5+", 1}, {"4-", -1}}, {{"5+", 1}, {"4-", 1}}},
    };
    static const Rows d3even = {
        {"1+", {{"1+", 1}, {"5+", -1}, {"4+", 1}}, {{"1+", 1}, {"5+", 1}}},
        {"4-", {{"4-", 1}, {"5-", -1}, {"1-", 1}}, {{"4-", 1}, {"5-", 1}}},
        {"5-", {{"5-", 1}, {"1-", -1}}, {{"5-", 1}, {"1-", 1}}},
        {"5+", {{"5+", 1}, {"4+", -1}}, {{"5+", 1}, {"4+", 1}}},
    };
    static const Rows d2 = {
        {"1+",
         {{"1+", 1}, {"3-", -1}, {"3~-", -1}, {"5+", 1}, {"5-", -1}, {"3+", 1}, {"3~+", 1}, {"1-", -1}},
         {{"1+", 1}, {"3-", 1}, {"3~-", 1}, {"5+", 1}, {"5-", 1}, {"1-", 1}}},
        {"3+", {{"3+", 1}, {"1-", -1}}, {{"3+", 1}, {"1-", 1}}},
        {"3-",
         {{"3-", 1}, {"5+", -1}, {"5-", 1}, {"3+", -1}},
         {{"3-", 1}, {"5+", 1}, {"5-", 1}, {"3+", 1}, {"1-", 1}}},
        {"3~+", {{"3~+", 1}, {"1-", -1}}, {{"3~+", 1}, {"1-", 1}}},
        {"3~-",
         {{"3~-", 1}, {"5+", -1}, {"5-", 1}, {"3~+", -1}},
         {{"3~-", 1}, {"5+", 1}, {"5-", 1}, {"3~+", 1}, {"1-", 1}}},
        {"5+",
         {{"5+", 1}, {"5-", -2}, {"3+", 1}, {"3~+", 1}, {"1-", -1}},
         {{"5+", 1}, {"5-", 2}, {"3+", 1}, {"3~+", 1}, {"1-", 1}}},
        {"5-",
         {{"5-", 1}, {"3+", -1}, {"3~+", -1}, {"1-", 1}},
         {{"5-", 1}, {"3+", 1}, {"3~+", 1}, {"1-", 1}}},
    };
    static const Rows none = {};
    switch (d) {
        case 10: return (rmod == 3 || rmod == 7) ? d10b : d10a;
        case 6: return d6;
        case 5:
            if (rmod == 1 || rmod == 9) return d5r19;
            if (rmod == 2 || rmod == 8) return d5r28;
            if (rmod == 3 || rmod == 7) return d5r37;
            return d5r46;
        case 3: return (rmod % 2) ? d3odd : d3even;
        case 2: return d2;
        default: return none;
    }
}

// r mod 10 for d in {5, 10} (the mod-10 residue distinguishes Galois cases),
// r mod 2 for d = 3.
inline long theorem_residue(long r, long d) {
    if (d == 5 || d == 10) return ((r % 10) + 10) % 10;
    return ((r % 2) + 2) % 2;
}

}  // namespace detail

// Row of [L_c(tau)] in the basis of standard modules per the closed-form
// tables; the inverse table ([M] in terms of [L]) with m_rows.
inline VirtualCharacter theorem_formula(const Rat& c, int tau, bool inverse = false) {
    VirtualCharacter unit;
    unit.c = c;
    unit.n[tau] = 1;
    if (c == 0) return unit;
    if (c < 0) {
        VirtualCharacter pos = theorem_formula(-c, sign_twist(tau), inverse);
        VirtualCharacter out;
        out.c = c;
        for (int s = 0; s < 10; ++s) out.n[sign_twist(s)] = pos.n[s];
        return out;
    }
    long d = (long)mpz_class(c.get_den()).get_si();
    long r = (long)mpz_class(c.get_num()).get_si();
    if (d != 2 && d != 3 && d != 5 && d != 6 && d != 10) return unit;
    for (const auto& row : detail::theorem_case(d, detail::theorem_residue(r, d)))
        if (irrep_index(row.tau) == tau) {
            VirtualCharacter v;
            v.c = c;
            for (const auto& [label, coeff] : (inverse ? row.m_row : row.l_row))
                v.n[irrep_index(label)] += coeff;
            return v;
        }
    return unit;
}

// Finite-dimensionality per the closed-form tables: at c = r/d > 0 only
// L(1_+) for d in {10, 6, 2} and additionally L(3_-), L(3~_-) for d = 2.
inline std::optional<Int> theorem_dim(const Rat& c, int tau) {
    if (c < 0) return theorem_dim(-c, sign_twist(tau));
    if (c == 0 || c.get_den() == 1) return std::nullopt;
    long d = (long)mpz_class(c.get_den()).get_si();
    Int r{mpz_class(c.get_num())};
    Int r3 = r * r * r;
    if (tau == irrep_index("1+")) {
        if (d == 10) return r3;
        if (d == 6) return 5 * r3;
        if (d == 2) return 115 * r3;
    }
    if (d == 2 && (tau == irrep_index("3-") || tau == irrep_index("3~-")))
        return 10 * r3;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exact graded pieces of the closed-form characters
//   det_{h*}(1 - w t^r) / det_{h*}(1 - w t) * sum_i chi_i t^{offset_i},
// expanded per conjugacy class up to a degree bound.  Degrees are relative
// to the smallest offset.

inline std::vector<ClassFunction> closed_form_series(
    int u_rep, long r, const std::vector<std::pair<long, ClassFunction>>& shifts,
    long maxdeg) {
    const Group& g = h3_group();
    const auto& table = character_table(g);
    long off0 = shifts.front().first;
    for (const auto& [o, chi] : shifts) off0 = std::min(off0, o);

    // Traces of w^k on the 3-dimensional numerator representation u_rep,
    // hence the coefficients of det_U(1 - w t^r) by Newton's identities.
    auto chi_pow = [&](int cl, int k) {
        int ord = g.elements[g.classes[cl].rep].order;
        return table[u_rep][g.power_class[cl][k % ord]];
    };
    std::vector<ClassFunction> out(maxdeg + 1);
    for (int cl = 0; cl < 10; ++cl) {
        const Mat& w = g.elements[g.classes[cl].rep].m;
        // denominator det_{h*}(1 - w t) = 1 - c1 t + c2 t^2 - c3 t^3
        QS5 c1 = w.trace();
        QS5 c2 = QS5(rat(1, 2)) * (c1 * c1 - (w * w).trace());
        QS5 c3 = QS5(rat(1, 6)) * (c1 * c1 * c1 - QS5(3) * c1 * (w * w).trace() +
                                   QS5(2) * (w * w * w).trace());
        QS5 p1 = chi_pow(cl, 1), p2 = chi_pow(cl, 2), p3 = chi_pow(cl, 3);
        QS5 d1 = p1;
        QS5 d2 = QS5(rat(1, 2)) * (p1 * p1 - p2);
        QS5 d3 = QS5(rat(1, 6)) * (p1 * p1 * p1 - QS5(3) * p1 * p2 + QS5(2) * p3);
        // numerator: det_U(1 - w t^r) * sum_i chi_i(w) t^{offset_i - off0}
        std::map<long, QS5> num;
        for (const auto& [off, chi] : shifts) {
            long base = off - off0;
            num[base] += chi[cl];
            num[base + r] += -d1 * chi[cl];
            num[base + 2 * r] += d2 * chi[cl];
            num[base + 3 * r] += -d3 * chi[cl];
        }
        // divide by 1 - c1 t + c2 t^2 - c3 t^3 as a power series
        std::vector<QS5> series(maxdeg + 1);
        for (long j = 0; j <= maxdeg; ++j) {
            QS5 v;
            auto it = num.find(j);
            if (it != num.end()) v = it->second;
            if (j >= 1) v += c1 * series[j - 1];
            if (j >= 2) v -= c2 * series[j - 2];
            if (j >= 3) v += c3 * series[j - 3];
            series[j] = v;
        }
        for (long j = 0; j <= maxdeg; ++j) out[j][cl] = series[j];
    }
    return out;
}

// The four published closed-form characters, as graded class functions
// relative to the lowest weight; empty when no closed form is published.
inline std::vector<ClassFunction> theorem_character_series(const Rat& c, int tau,
                                                           long maxdeg) {
    const Group& g = h3_group();
    const auto& table = character_table(g);
    if (c <= 0 || c.get_den() == 1) return {};
    long d = (long)mpz_class(c.get_den()).get_si();
    long r = (long)mpz_class(c.get_num()).get_si();
    // The rep inside det(1 - w t^r).  Only in the denominator-10 case do the
    // degree-r generators transform in the Galois twist of h*; for the other
    // denominators they stay in the reflection representation itself.
    int u = (d == 10 && (r % 10 == 3 || r % 10 == 7)) ? irrep_index("3~-")
                                                      : irrep_index("3-");
    if (tau == irrep_index("1+") && d == 10)
        return closed_form_series(u, r, {{0, table[irrep_index("1+")]}}, maxdeg);
    if (tau == irrep_index("1+") && d == 6)
        return closed_form_series(u, r,
                                  {{-r, table[irrep_index("1+")]},
                                   {0, table[irrep_index("3-")]},
                                   {r, table[irrep_index("1+")]}},
                                  maxdeg);
    if (tau == irrep_index("3-") && d == 2)
        return closed_form_series(u, r,
                                  {{-r, table[irrep_index("3-")]},
                                   {0, table[irrep_index("1+")]},
                                   {0, table[irrep_index("3+")]},
                                   {r, table[irrep_index("3-")]}},
                                  maxdeg);
    if (tau == irrep_index("3~-") && d == 2)
        return closed_form_series(u, r,
                                  {{-r, table[irrep_index("3~-")]},
                                   {0, table[irrep_index("4+")]},
                                   {r, table[irrep_index("3~-")]}},
                                  maxdeg);
    return {};
}

}  // namespace h3

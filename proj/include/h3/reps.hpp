#pragma once

// The ten irreducible representations of H3 with explicit matrices over
// Q(sqrt5), invariant symmetric forms, and the character-level calculus
// (tensor products, symmetric powers of h*, branching to parabolics,
// sign/Galois twists).
//
// Label order everywhere: 1+, 1-, 3+, 3-, 3~+, 3~-, 4+, 4-, 5+, 5-.

#include "group.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace h3 {

constexpr int kNumIrreps = 10;

inline const std::array<std::string, 10>& irrep_labels() {
    static const std::array<std::string, 10> labels = {
        "1+", "1-", "3+", "3-", "3~+", "3~-", "4+", "4-", "5+", "5-"};
    return labels;
}

inline int irrep_index(const std::string& label) {
    const auto& l = irrep_labels();
    auto it = std::find(l.begin(), l.end(), label);
    if (it == l.end()) throw std::invalid_argument("unknown irrep label: " + label);
    return (int)(it - l.begin());
}

// Tensoring with 1_- flips the +/- subscript.
inline int sign_twist(int i) { return i ^ 1; }

// The Galois involution swaps 3 <-> 3~ and fixes everything else.
inline int galois_twist(int i) { return (i >= 2 && i <= 5) ? (i ^ 6) : i; }

struct ClassFunction {
    std::array<QS5, 10> v{};

    QS5& operator[](size_t i) { return v[i]; }
    const QS5& operator[](size_t i) const { return v[i]; }

    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
        for (int i = 0; i < 10; ++i) a.v[i] += b.v[i];
        return a;
    }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) {
        for (int i = 0; i < 10; ++i) a.v[i] -= b.v[i];
        return a;
    }
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
        ClassFunction c;
        for (int i = 0; i < 10; ++i) c.v[i] = a.v[i] * b.v[i];
        return c;
    }
    friend ClassFunction operator*(const QS5& s, ClassFunction a) {
        for (int i = 0; i < 10; ++i) a.v[i] *= s;
        return a;
    }
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.v == b.v;
    }
    bool is_zero() const {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    ClassFunction galois_conj() const {
        // Galois acts on values and permutes nothing at the class level:
        // conjugating a representation conjugates its character values.
        ClassFunction c;
        for (int i = 0; i < 10; ++i) c.v[i] = galois(v[i]);
        return c;
    }
};

// <a, b> = (1/120) sum_w a(w) b(w)   (all H3 characters are real).
inline QS5 char_inner(const Group& g, const ClassFunction& a, const ClassFunction& b) {
    QS5 s;
    for (int c = 0; c < 10; ++c)
        s += QS5((long)g.classes[c].size) * a[c] * b[c];
    return s * QS5(rat(1, 120));
}

// ---------------------------------------------------------------------------
// Character table, built from the reflection representation alone.

inline Mat class_rep_det(const Group& g) {
    Mat d(1, 10);
    for (int c = 0; c < 10; ++c) {
        const Mat& m = g.elements[g.classes[c].rep].m;
        QS5 det;
        for (int p = 0; p < 6; ++p) {
            static const int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
            QS5 t = m.at(0, perm[p][0]) * m.at(1, perm[p][1]) * m.at(2, perm[p][2]);
            det += (p < 3) ? t : -t;
        }
        d.at(0, c) = det;
    }
    return d;
}

// chi_{S^k h*} by the Newton/Molien recurrence, cached.
inline const ClassFunction& sym_power_char(const Group& g, int k) {
    static std::vector<ClassFunction> cache;
    if (k < (int)cache.size()) return cache[k];
    if (cache.empty()) {
        ClassFunction one;
        for (int c = 0; c < 10; ++c) one[c] = QS5(1);
        cache.push_back(one);
    }
    for (int n = (int)cache.size(); n <= k; ++n) {
        ClassFunction s;
        for (int c = 0; c < 10; ++c) {
            QS5 acc;
            int ord = g.elements[g.classes[c].rep].order;
            for (int j = 1; j <= n; ++j) {
                int pc = g.power_class[c][j % ord];
                QS5 chi_pow = g.elements[g.classes[pc].rep].m.trace();
                acc += chi_pow * cache[n - j][c];
            }
            s[c] = acc * QS5(rat(1, n));
        }
        cache.push_back(s);
    }
    return cache[k];
}

// The ten irreducible characters in label order.
inline const std::array<ClassFunction, 10>& character_table(const Group& g) {
    static const std::array<ClassFunction, 10> table = [&g]() {
        std::array<ClassFunction, 10> t;
        Mat det = class_rep_det(g);
        ClassFunction one, sign, refl;
        for (int c = 0; c < 10; ++c) {
            one[c] = QS5(1);
            sign[c] = det.at(0, c);
            refl[c] = g.elements[g.classes[c].rep].m.trace();
        }
        t[0] = one;                        // 1+
        t[1] = sign;                       // 1-
        t[3] = refl;                       // 3-
        t[2] = sign * t[3];                // 3+
        t[5] = t[3].galois_conj();         // 3~-
        t[4] = sign * t[5];                // 3~+
        t[8] = sym_power_char(g, 2) - one; // 5+:  S^2 h* = 1+ (+) 5+
        t[9] = sign * t[8];                // 5-
        t[6] = t[3] * t[5] - t[8];         // 4+:  3- (x) 3~- = 4+ (+) 5+
        t[7] = sign * t[6];                // 4-
        return t;
    }();
    return table;
}

// Decompose a virtual character into irreducible multiplicities.
// Throws if a multiplicity fails to be an integer.
inline std::array<long, 10> decompose_class_function(const Group& g, const ClassFunction& f) {
    const auto& table = character_table(g);
    std::array<long, 10> mult{};
    for (int t = 0; t < 10; ++t) {
        QS5 m = char_inner(g, f, table[t]);
        if (!m.is_rational() || m.a.get_den() != 1)
            throw std::domain_error("decompose: input is not a virtual character");
        mult[t] = (long)m.a.get_num().get_si();
    }
    return mult;
}

// Multiset of labels (with multiplicities) for a genuine character.
inline std::map<int, long> tensor_decompose(const Group& g, const ClassFunction& a,
                                            const ClassFunction& b) {
    auto mult = decompose_class_function(g, a * b);
    std::map<int, long> out;
    for (int t = 0; t < 10; ++t) {
        if (mult[t] < 0)
            throw std::domain_error("tensor_decompose: negative multiplicity");
        if (mult[t] > 0) out[t] = mult[t];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Explicit irreducible representations.

struct Irrep {
    std::string label;
    int dim = 0;
    std::array<Mat, 3> gens;      // images of s1, s2, s3
    std::vector<Mat> mats;        // images of all 120 elements
    ClassFunction chars;
    Mat inv_form;                 // W-invariant symmetric bilinear form
};

namespace detail {

inline Mat kron(const Mat& x, const Mat& y) {
    Mat z(x.rows * y.rows, x.cols * y.cols);
    for (size_t i = 0; i < x.rows; ++i)
        for (size_t j = 0; j < x.cols; ++j) {
            if (x.at(i, j).is_zero()) continue;
            for (size_t k = 0; k < y.rows; ++k)
                for (size_t l = 0; l < y.cols; ++l)
                    z.at(i * y.rows + k, j * y.cols + l) = x.at(i, j) * y.at(k, l);
        }
    return z;
}

struct AmbientRep {
    std::vector<Mat> mats;  // one per group element
    Mat form;               // invariant symmetric form on the ambient space
};

// Extract the isotype of chi (multiplicity one in the ambient) as an Irrep.
// column_order reversed gives an alternative model for the independence test.
inline Irrep extract_isotype(const Group& g, const AmbientRep& amb,
                             const ClassFunction& chi, const std::string& label,
                             bool reverse_columns = false) {
    size_t n = amb.mats[0].rows;
    long d = chi[0].a.get_num().get_si();
    Mat proj(n, n);
    for (size_t w = 0; w < g.size(); ++w) {
        QS5 coef = chi[g.elements[g.inv(w)].class_id] * QS5(rat(d, 120));
        if (!coef.is_zero()) proj = proj + coef * amb.mats[w];
    }
    // Pick d independent columns (deterministic tie-break: column order),
    // then echelonize the chosen basis for reproducibility.
    std::vector<size_t> order(n);
    for (size_t j = 0; j < n; ++j) order[j] = reverse_columns ? n - 1 - j : j;
    size_t have = 0;
    Mat acc(n, (size_t)d);
    for (size_t j : order) {
        if (have == (size_t)d) break;
        Mat trial(n, have + 1);
        for (size_t i = 0; i < n; ++i) {
            for (size_t c = 0; c < have; ++c) trial.at(i, c) = acc.at(i, c);
            trial.at(i, have) = proj.at(i, j);
        }
        if (gauss_rank(trial) == have + 1) {
            acc = trial;
            ++have;
        }
    }
    if (have != (size_t)d)
        throw std::logic_error("isotype extraction: expected multiplicity not found");
    Rref r = rref(acc.transposed());
    Mat q = r.m.transposed();  // n x d, echelonized basis

    Irrep out;
    out.label = label;
    out.dim = (int)d;
    out.mats.resize(g.size());
    for (size_t w = 0; w < g.size(); ++w) {
        auto x = solve(q, amb.mats[w] * q);
        if (!x) throw std::logic_error("isotype extraction: subspace not invariant");
        out.mats[w] = *x;
    }
    for (int i = 0; i < 3; ++i) out.gens[i] = out.mats[g.gens[i]];
    for (int c = 0; c < 10; ++c) out.chars[c] = out.mats[g.classes[c].rep].trace();
    out.inv_form = q.transposed() * amb.form * q;
    return out;
}

inline Irrep sign_twist_rep(const Group& g, const Irrep& r, const std::string& label) {
    Irrep out = r;
    out.label = label;
    Mat det = class_rep_det(g);
    for (size_t w = 0; w < g.size(); ++w)
        out.mats[w] = det.at(0, g.elements[w].class_id) * r.mats[w];
    for (int i = 0; i < 3; ++i) out.gens[i] = out.mats[g.gens[i]];
    for (int c = 0; c < 10; ++c) out.chars[c] = out.mats[g.classes[c].rep].trace();
    return out;
}

inline Mat galois_mat(const Mat& m) {
    Mat out = m;
    for (auto& x : out.e) x = galois(x);
    return out;
}

inline Irrep galois_rep(const Group& g, const Irrep& r, const std::string& label) {
    Irrep out = r;
    out.label = label;
    for (size_t w = 0; w < g.size(); ++w) out.mats[w] = galois_mat(r.mats[w]);
    for (int i = 0; i < 3; ++i) out.gens[i] = out.mats[g.gens[i]];
    for (int c = 0; c < 10; ++c) out.chars[c] = out.mats[g.classes[c].rep].trace();
    out.inv_form = galois_mat(r.inv_form);
    return out;
}

}  // namespace detail

inline std::array<Irrep, 10> build_irreps(const Group& g, bool reverse_columns = false) {
    using namespace detail;
    const auto& table = character_table(g);
    std::array<Irrep, 10> irr;

    // 1+ and 1- directly.
    for (int which : {0, 1}) {
        Irrep r;
        r.label = irrep_labels()[which];
        r.dim = 1;
        r.mats.resize(g.size());
        for (size_t w = 0; w < g.size(); ++w) {
            Mat m(1, 1);
            m.at(0, 0) = table[which][g.elements[w].class_id];
            r.mats[w] = m;
        }
        for (int i = 0; i < 3; ++i) r.gens[i] = r.mats[g.gens[i]];
        r.chars = table[which];
        r.inv_form = Mat::identity(1);
        irr[which] = r;
    }

    // 3- is the reflection representation itself; its form is the Gram matrix.
    {
        Irrep r;
        r.label = "3-";
        r.dim = 3;
        r.mats.resize(g.size());
        for (size_t w = 0; w < g.size(); ++w) r.mats[w] = g.elements[w].m;
        for (int i = 0; i < 3; ++i) r.gens[i] = r.mats[g.gens[i]];
        r.chars = table[3];
        r.inv_form = g.gram;
        irr[3] = r;
    }
    irr[2] = sign_twist_rep(g, irr[3], "3+");
    irr[5] = galois_rep(g, irr[3], "3~-");
    irr[4] = sign_twist_rep(g, irr[5], "3~+");

    // 5+ from 3- (x) 3-, 4+ from 3- (x) 3~-.
    {
        AmbientRep amb;
        amb.mats.resize(g.size());
        for (size_t w = 0; w < g.size(); ++w)
            amb.mats[w] = kron(irr[3].mats[w], irr[3].mats[w]);
        amb.form = kron(g.gram, g.gram);
        irr[8] = extract_isotype(g, amb, table[8], "5+", reverse_columns);
    }
    {
        AmbientRep amb;
        amb.mats.resize(g.size());
        for (size_t w = 0; w < g.size(); ++w)
            amb.mats[w] = kron(irr[3].mats[w], irr[5].mats[w]);
        amb.form = kron(g.gram, irr[5].inv_form);
        irr[6] = extract_isotype(g, amb, table[6], "4+", reverse_columns);
    }
    irr[9] = sign_twist_rep(g, irr[8], "5-");
    irr[7] = sign_twist_rep(g, irr[6], "4-");

    // Internal consistency: characters must equal the character table.
    for (int t = 0; t < 10; ++t)
        if (!(irr[t].chars == table[t]))
            throw std::logic_error("build_irreps: character mismatch for " + irr[t].label);
    return irr;
}

inline const std::array<Irrep, 10>& h3_irreps() {
    static const std::array<Irrep, 10> irr = build_irreps(h3_group());
    return irr;
}

// ---------------------------------------------------------------------------
// Branching to a parabolic subgroup (restriction multiplicities).

inline std::vector<long> branching(const Group& g, const ClassFunction& chi,
                                   const Parabolic& p) {
    size_t n = p.elems.size();
    std::vector<long> mult(p.irrep_labels.size(), 0);
    for (size_t t = 0; t < p.irrep_labels.size(); ++t) {
        QS5 acc;
        for (size_t i = 0; i < n; ++i) {
            int big_class = g.elements[p.elems[i]].class_id;
            acc += chi[big_class] * p.char_table.at(t, p.class_of[i]);
        }
        QS5 m = acc * QS5(rat(1, (long)n));
        if (!m.is_rational() || m.a.get_den() != 1)
            throw std::domain_error("branching: non-integer multiplicity");
        mult[t] = (long)m.a.get_num().get_si();
    }
    return mult;
}

}  // namespace h3

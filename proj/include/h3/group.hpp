#pragma once

// The Coxeter group H3 as explicit 3x3 matrices over Q(sqrt5), acting on h*
// in the basis of simple roots, plus the two parabolic subgroups used for
// induction/restriction (Z2xZ2 generated by s1,s3 and S3 generated by s1,s2).
//
// Geometric realization: Gram matrix B(a_i,a_j) = -cos(pi/m_ij) on simple
// roots (m12 = 3, m23 = 5, m13 = 2), reflections s_i(v) = v - 2B(a_i,v)a_i.

#include "linalg.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace h3 {

struct GroupElement {
    Mat m;         // action on h* in simple-root coordinates
    int order = 0;
    int class_id = -1;
};

struct Reflection {
    size_t elem;      // index into Group::elements
    Mat alpha;        // root in h* (3x1, simple-root coordinates)
    Mat alpha_check;  // coroot in h, normalized so (alpha, alpha_check) = 2
};

struct ConjClass {
    int id;
    size_t size;
    size_t rep;  // element index
    std::string label;
};

struct Parabolic {
    std::string name;                       // "Z2xZ2" or "S3"
    std::vector<size_t> elems;              // element indices in the big group
    std::vector<int> class_of;              // per position in elems
    std::vector<size_t> class_sizes;
    std::vector<size_t> class_reps;         // positions in elems
    std::vector<std::string> irrep_labels;
    std::vector<int> irrep_dims;
    Mat char_table;                         // irreps x classes
    std::vector<size_t> reflection_positions;  // positions in elems
};

struct ParabolicType {
    std::string name;
    std::vector<int> degrees;
    int rank() const { return (int)degrees.size(); }
};

inline const std::vector<ParabolicType>& parabolic_types() {
    static const std::vector<ParabolicType> types = {
        {"H3", {2, 6, 10}}, {"A2", {2, 3}},  {"I2(5)", {2, 5}},
        {"A1xA1", {2, 2}},  {"A1", {2}},     {"trivial", {}},
    };
    return types;
}

struct Group {
    std::vector<GroupElement> elements;  // [0] is the identity
    std::array<size_t, 3> gens{};        // s1, s2, s3
    std::vector<ConjClass> classes;      // Table-1 order
    std::vector<Reflection> reflections;
    Mat gram, gram_inv;                  // invariant form on h*
    std::vector<std::vector<size_t>> mult;   // multiplication table
    std::vector<size_t> invs;
    // class id of (class rep)^j, j in 0..order-1
    std::vector<std::vector<int>> power_class;

    size_t size() const { return elements.size(); }
    size_t mul(size_t a, size_t b) const { return mult[a][b]; }
    size_t inv(size_t a) const { return invs[a]; }

    // Pairing between h* and h, both written in simple-root coordinates.
    QS5 pair(const Mat& x, const Mat& y) const {
        QS5 v;
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                v += x.at(i, 0) * gram.at(i, j) * y.at(j, 0);
        return v;
    }
};

namespace detail {

inline std::vector<QS5> mat_key(const Mat& m) { return m.e; }

inline int element_order(const Group& g, size_t idx) {
    size_t x = idx;
    int n = 1;
    while (x != 0) {
        x = g.mul(x, idx);
        ++n;
        if (n > 200) throw std::logic_error("group: unbounded element order");
    }
    return n;
}

}  // namespace detail

inline Group build_h3() {
    Group g;
    const QS5 half(rat(1, 2));
    const QS5 cos5 = (QS5(1) + sqrt5()) * QS5(rat(1, 4));  // cos(pi/5)
    g.gram = Mat(3, 3);
    g.gram.at(0, 0) = g.gram.at(1, 1) = g.gram.at(2, 2) = QS5(1);
    g.gram.at(0, 1) = g.gram.at(1, 0) = -half;
    g.gram.at(1, 2) = g.gram.at(2, 1) = -cos5;
    g.gram_inv = inverse(g.gram);

    // Simple reflections: s_i = I - 2 e_i (row i of the Gram matrix).
    std::array<Mat, 3> s;
    for (size_t i = 0; i < 3; ++i) {
        s[i] = Mat::identity(3);
        for (size_t j = 0; j < 3; ++j)
            s[i].at(i, j) -= QS5(2) * g.gram.at(i, j);
    }

    // Breadth-first closure.
    std::map<std::vector<QS5>, size_t> index;
    auto add = [&](const Mat& m) -> size_t {
        auto key = detail::mat_key(m);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        size_t id = g.elements.size();
        index.emplace(std::move(key), id);
        g.elements.push_back(GroupElement{m, 0, -1});
        return id;
    };
    add(Mat::identity(3));
    for (size_t i = 0; i < 3; ++i) g.gens[i] = add(s[i]);
    for (size_t head = 0; head < g.elements.size(); ++head)
        for (size_t i = 0; i < 3; ++i) add(g.elements[head].m * s[i]);
    if (g.size() != 120) throw std::logic_error("group: closure size != 120");

    g.mult.assign(120, std::vector<size_t>(120));
    for (size_t a = 0; a < 120; ++a)
        for (size_t b = 0; b < 120; ++b) {
            auto it = index.find(detail::mat_key(g.elements[a].m * g.elements[b].m));
            if (it == index.end()) throw std::logic_error("group: not closed");
            g.mult[a][b] = it->second;
        }
    g.invs.assign(120, 0);
    for (size_t a = 0; a < 120; ++a)
        for (size_t b = 0; b < 120; ++b)
            if (g.mult[a][b] == 0) g.invs[a] = b;

    for (size_t a = 0; a < 120; ++a)
        g.elements[a].order = detail::element_order(g, a);

    // Conjugacy classes by orbit computation.
    std::vector<int> cls(120, -1);
    std::vector<std::vector<size_t>> orbits;
    for (size_t a = 0; a < 120; ++a) {
        if (cls[a] >= 0) continue;
        int id = (int)orbits.size();
        std::vector<size_t> orb;
        std::vector<size_t> stack{a};
        cls[a] = id;
        while (!stack.empty()) {
            size_t x = stack.back();
            stack.pop_back();
            orb.push_back(x);
            for (size_t w = 0; w < 120; ++w) {
                size_t y = g.mul(g.mul(w, x), g.inv(w));
                if (cls[y] < 0) {
                    cls[y] = id;
                    stack.push_back(y);
                }
            }
        }
        orbits.push_back(std::move(orb));
    }
    if (orbits.size() != 10) throw std::logic_error("group: class count != 10");

    // Pin the published class labels by the (order, trace-on-h*) signature.
    const QS5 phi = golden(), phibar = galois(golden());
    struct Sig { int order; QS5 trace; const char* label; };
    const Sig sigs[10] = {
        {1, QS5(3), "Id"},
        {2, QS5(-3), "-Id"},
        {3, QS5(0), "(123)"},
        {6, QS5(0), "-(123)"},
        {2, QS5(-1), "(12)(34)"},
        {2, QS5(1), "-(12)(34)"},
        {5, phi, "(12345)"},
        {10, -phi, "-(12345)"},
        {5, phibar, "(13245)"},
        {10, -phibar, "-(13245)"},
    };
    g.classes.resize(10);
    std::vector<int> renumber(10, -1);
    for (int t = 0; t < 10; ++t) {
        int found = -1;
        for (size_t o = 0; o < orbits.size(); ++o) {
            const GroupElement& rep = g.elements[orbits[o][0]];
            if (rep.order == sigs[t].order && rep.m.trace() == sigs[t].trace) {
                found = (int)o;
                break;
            }
        }
        if (found < 0) throw std::logic_error("group: class signature missing");
        renumber[found] = t;
        g.classes[t] = ConjClass{t, orbits[found].size(), orbits[found][0], sigs[t].label};
    }
    for (size_t a = 0; a < 120; ++a) g.elements[a].class_id = renumber[cls[a]];
    // Signatures must separate classes (consistency of classify()).
    for (size_t a = 0; a < 120; ++a) {
        const GroupElement& x = g.elements[a];
        const ConjClass& c = g.classes[x.class_id];
        const GroupElement& r = g.elements[c.rep];
        if (x.order != r.order || !(x.m.trace() == r.m.trace()))
            throw std::logic_error("group: (order, trace) not a class invariant");
    }

    // Reflections: order 2, trace 1; root = the (-1)-eigenvector.
    for (size_t a = 0; a < 120; ++a) {
        const GroupElement& x = g.elements[a];
        if (x.order != 2 || !(x.m.trace() == QS5(1))) continue;
        Mat ker = nullspace(x.m + Mat::identity(3));
        if (ker.cols != 1) throw std::logic_error("group: reflection eigenspace");
        // Normalize first nonzero coordinate to 1 (scaling is immaterial).
        QS5 lead;
        for (size_t i = 0; i < 3; ++i)
            if (!ker.at(i, 0).is_zero()) {
                lead = ker.at(i, 0);
                break;
            }
        Mat alpha = lead.inverse() * ker;
        QS5 len;  // B(alpha, alpha)
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                len += alpha.at(i, 0) * g.gram.at(i, j) * alpha.at(j, 0);
        Mat alpha_check = (QS5(2) * len.inverse()) * alpha;
        g.reflections.push_back(Reflection{a, alpha, alpha_check});
    }
    if (g.reflections.size() != 15) throw std::logic_error("group: reflection count != 15");

    g.power_class.resize(10);
    for (int t = 0; t < 10; ++t) {
        size_t r = g.classes[t].rep;
        int n = g.elements[r].order;
        g.power_class[t].resize(n);
        size_t x = 0;  // identity
        for (int j = 0; j < n; ++j) {
            g.power_class[t][j] = g.elements[x].class_id;
            x = g.mul(x, r);
        }
    }
    return g;
}

// Shared immutable instance (built on first use).
inline const Group& h3_group() {
    static const Group g = build_h3();
    return g;
}

inline int classify(const Group& g, const Mat& m, int order) {
    QS5 tr = m.trace();
    for (const ConjClass& c : g.classes) {
        const GroupElement& r = g.elements[c.rep];
        if (r.order == order && r.m.trace() == tr) return c.id;
    }
    throw std::logic_error("classify: unknown (order, trace) signature");
}

// ---------------------------------------------------------------------------
// Parabolic subgroups with their own class data and character tables.

inline Parabolic build_parabolic(const Group& g, const std::string& name) {
    Parabolic p;
    p.name = name;
    std::vector<size_t> gens;
    if (name == "Z2xZ2")
        gens = {g.gens[0], g.gens[2]};
    else if (name == "S3")
        gens = {g.gens[0], g.gens[1]};
    else
        throw std::invalid_argument("parabolic: unsupported name " + name);

    // Subgroup closure.
    std::vector<size_t> elems{0};
    std::vector<char> in(g.size(), 0);
    in[0] = 1;
    for (size_t head = 0; head < elems.size(); ++head)
        for (size_t s : gens) {
            size_t y = g.mul(elems[head], s);
            if (!in[y]) {
                in[y] = 1;
                elems.push_back(y);
            }
        }
    p.elems = elems;
    std::vector<size_t> pos(g.size(), SIZE_MAX);
    for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = i;

    // Conjugacy classes within the subgroup.
    p.class_of.assign(elems.size(), -1);
    for (size_t i = 0; i < elems.size(); ++i) {
        if (p.class_of[i] >= 0) continue;
        int id = (int)p.class_sizes.size();
        std::vector<size_t> stack{i};
        p.class_of[i] = id;
        size_t count = 0;
        while (!stack.empty()) {
            size_t x = stack.back();
            stack.pop_back();
            ++count;
            for (size_t w : elems) {
                size_t y = pos[g.mul(g.mul(w, elems[x]), g.inv(w))];
                if (p.class_of[y] < 0) {
                    p.class_of[y] = id;
                    stack.push_back(y);
                }
            }
        }
        p.class_sizes.push_back(count);
        p.class_reps.push_back(i);
    }

    // Reflections of the subgroup = elements in the H3 reflection class.
    for (size_t i = 0; i < elems.size(); ++i)
        if (g.elements[elems[i]].class_id == 5)  // "-(12)(34)"
            p.reflection_positions.push_back(i);

    if (name == "Z2xZ2") {
        if (elems.size() != 4) throw std::logic_error("Z2xZ2: wrong order");
        // Classes: {e}, {s1}, {s3}, {s1 s3}; all singletons.
        // Irreps 1_{e1 e2}: value e1 on s1, e2 on s3.
        size_t s1 = pos[gens[0]], s3 = pos[gens[1]];
        p.irrep_labels = {"1++", "1+-", "1-+", "1--"};
        p.irrep_dims = {1, 1, 1, 1};
        p.char_table = Mat(4, p.class_sizes.size());
        const int eps[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        for (int r = 0; r < 4; ++r)
            for (size_t c = 0; c < p.class_reps.size(); ++c) {
                // class rep as a word in s1, s3: read off values directly
                size_t x = p.class_reps[c];
                int v;
                if (x == 0) v = 1;
                else if (x == s1) v = eps[r][0];
                else if (x == s3) v = eps[r][1];
                else v = eps[r][0] * eps[r][1];  // s1 s3
                p.char_table.at(r, c) = QS5(v);
            }
    } else {  // S3
        if (elems.size() != 6) throw std::logic_error("S3: wrong order");
        p.irrep_labels = {"1+", "1-", "2"};
        p.irrep_dims = {1, 1, 2};
        p.char_table = Mat(3, p.class_sizes.size());
        for (size_t c = 0; c < p.class_reps.size(); ++c) {
            int ord = g.elements[elems[p.class_reps[c]]].order;
            // classes: identity (order 1), transpositions (2), rotations (3)
            p.char_table.at(0, c) = QS5(1);
            p.char_table.at(1, c) = QS5(ord == 2 ? -1 : 1);
            p.char_table.at(2, c) = QS5(ord == 1 ? 2 : (ord == 3 ? -1 : 0));
        }
    }
    return p;
}

}  // namespace h3

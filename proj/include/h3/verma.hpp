#pragma once

// Standard modules M_c(tau) = S(h*) (x) tau, Dunkl operators on their graded
// slices, and the contravariant form B_k with exact rank / kernel data.
//
// Basis convention for the degree-k slice: monomials_of_degree(k) ordered as
// in poly.hpp, tensor the tau basis; index = mono * dim(tau) + tau_coord.
//
// The Dunkl operator in the dual-basis direction y_j splits as
//     D_j(c) = P_j - c * R_j
// with P_j the plain partial derivative and R_j the reflection part
//     R_j (f (x) v) = sum_s alpha_s[j] * ((f - s.f)/alpha_s) (x) (s.v),
// both independent of c; every operator here is cached per (tau, degree).

#include <h3/poly.hpp>
#include <h3/reps.hpp>

#include <map>
#include <optional>

namespace h3 {

// Polynomial-only data shared by all ten standard modules.
namespace detail {

// (m - s.m)/alpha_s for every degree-k monomial m, as a matrix from the
// degree-k to the degree-(k-1) monomial basis; one matrix per reflection.
inline const std::vector<Mat>& reflection_quotients(int k) {
    static std::map<int, std::vector<Mat>> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;

    const Group& g = h3_group();
    const auto& lo = monomials_of_degree(k - 1);
    const auto& hi = monomials_of_degree(k);
    std::vector<Mat> qs;
    for (const Reflection& r : g.reflections) {
        std::vector<QS5> alpha = {r.alpha.at(0, 0), r.alpha.at(1, 0), r.alpha.at(2, 0)};
        Poly lin = linear_form(alpha);
        const Mat& ms = g.elements[r.elem].m;
        Mat q((int)lo.size(), (int)hi.size());
        for (size_t col = 0; col < hi.size(); ++col) {
            Poly f = monomial(hi[col]);
            Poly quot = divide_by_linear(f - apply_matrix(ms, f), lin);
            for (const auto& [m, c] : quot.terms) q.at(monomial_index(m), col) = c;
        }
        qs.push_back(std::move(q));
    }
    return cache.emplace(k, std::move(qs)).first->second;
}

// Action of group element w on the degree-k monomial basis.
inline const Mat& monomial_action(size_t w, int k) {
    static std::map<std::pair<size_t, int>, Mat> cache;
    auto key = std::make_pair(w, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const Group& g = h3_group();
    const auto& ms = monomials_of_degree(k);
    Mat a(ms.size(), ms.size());
    for (size_t col = 0; col < ms.size(); ++col) {
        Poly img = apply_matrix(g.elements[w].m, monomial(ms[col]));
        for (const auto& [m, c] : img.terms) a.at(monomial_index(m), col) = c;
    }
    return cache.emplace(key, std::move(a)).first->second;
}

// a (x) b with a acting on the monomial factor, b on the tau factor.
inline Mat tensor_with(const Mat& a, const Mat& b) {
    Mat t(a.rows * b.rows, a.cols * b.cols);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t j = 0; j < a.cols; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (size_t p = 0; p < b.rows; ++p)
                for (size_t q = 0; q < b.cols; ++q)
                    t.at(i * b.rows + p, j * b.cols + q) = a.at(i, j) * b.at(p, q);
        }
    return t;
}

}  // namespace detail

// Rank/kernel report for one contravariant form slice.
struct SliceRank {
    size_t dim = 0;
    size_t rank = 0;
    bool kernel_known = false;       // false when only a modular rank was taken
    std::array<long, 10> kernel{};   // irrep multiplicities of the kernel
};

class StandardModule {
public:
    explicit StandardModule(int tau)
        : g_(h3_group()), rep_(h3_irreps()[tau]), tau_(tau) {}

    int tau() const { return tau_; }
    const Irrep& rep() const { return rep_; }

    size_t dim(int k) const { return rep_.dim * monomials_of_degree(k).size(); }

    // Dunkl operator parts, degree k -> k-1.
    const Mat& dunkl_p(int j, int k) {
        Mat& m = p_[{j, k}];
        if (m.rows == 0) m = build_p(j, k);
        return m;
    }
    const Mat& dunkl_r(int j, int k) {
        Mat& m = r_[{j, k}];
        if (m.rows == 0) m = build_r(j, k);
        return m;
    }
    Mat dunkl(const Rat& c, int j, int k) {
        return dunkl_p(j, k) - QS5(c) * dunkl_r(j, k);
    }

    // Multiplication by x_i, degree k -> k+1.
    Mat x_mult(int i, int k) const {
        const auto& lo = monomials_of_degree(k);
        Mat m(dim(k + 1), dim(k));
        for (size_t col = 0; col < lo.size(); ++col) {
            Mono n = lo[col];
            ++n[i];
            size_t row = monomial_index(n);
            for (int a = 0; a < rep_.dim; ++a)
                m.at(row * rep_.dim + a, col * rep_.dim + a) = QS5(1);
        }
        return m;
    }

    // Action of group element w on the degree-k slice.
    Mat action(size_t w, int k) const {
        return detail::tensor_with(detail::monomial_action(w, k), rep_.mats[w]);
    }

    // Contravariant form on the degree-k slice at parameter c.
    const Mat& form(const Rat& c, int k) {
        std::vector<Mat>& forms = forms_[c];
        if (forms.empty()) forms.push_back(rep_.inv_form);
        while ((int)forms.size() <= k) {
            int d = (int)forms.size();
            const Mat& prev = forms[d - 1];
            // Peeling x_i off a row vector moves it across the form as the
            // image of x_i under the W-invariant identification of h* with h:
            // Dbar_i = sum_j G(i, j) D_j.
            std::array<std::optional<Mat>, 3> bd;  // prev * Dbar_i, on demand
            const auto& ms = monomials_of_degree(d);
            Mat b(dim(d), dim(d));
            for (size_t mi = 0; mi < ms.size(); ++mi) {
                int i = ms[mi][0] ? 0 : (ms[mi][1] ? 1 : 2);
                if (!bd[i]) {
                    Mat dbar(dim(d - 1), dim(d));
                    for (int j = 0; j < 3; ++j)
                        if (!g_.gram.at(i, j).is_zero())
                            dbar = dbar + g_.gram.at(i, j) * dunkl(c, j, d);
                    bd[i] = prev * dbar;
                }
                Mono rest = ms[mi];
                --rest[i];
                size_t src = monomial_index(rest);
                for (int a = 0; a < rep_.dim; ++a)
                    for (size_t col = 0; col < b.cols; ++col)
                        b.at(mi * rep_.dim + a, col) =
                            bd[i]->at(src * rep_.dim + a, col);
            }
            forms.push_back(std::move(b));
        }
        return forms[k];
    }

    // Rank and (when exact elimination is feasible) the W-character of the
    // kernel of B_k.  Matrices above `exact_limit` rows go through the
    // multi-modular engine and report rank only.
    const SliceRank& rank_and_kernel(const Rat& c, int k, size_t exact_limit = 200) {
        auto key = std::make_pair(c, k);
        auto it = ranks_.find(key);
        if (it != ranks_.end()) return it->second;

        const Mat& b = form(c, k);
        SliceRank out;
        out.dim = b.rows;
        if (b.rows <= exact_limit) {
            out.rank = bareiss_rank(b);
            out.kernel_known = true;
            Mat ker = nullspace(b);
            if (b.rows - out.rank != ker.cols)
                throw std::logic_error("rank engines disagree");
            if (ker.cols > 0) {
                ClassFunction chi;
                for (int cl = 0; cl < 10; ++cl) {
                    Mat t = action(g_.classes[cl].rep, k);
                    auto x = solve(ker, t * ker);
                    if (!x) throw std::logic_error("kernel is not W-stable");
                    chi[cl] = x->trace();
                }
                out.kernel = decompose_class_function(g_, chi);
            }
        } else {
            out.rank = modular_rank(b);
        }
        return ranks_.emplace(key, out).first->second;
    }

    void drop_form_cache(const Rat& c) { forms_.erase(c); }

private:
    Mat build_p(int j, int k) const {
        const auto& hi = monomials_of_degree(k);
        Mat m(dim(k - 1), dim(k));
        for (size_t col = 0; col < hi.size(); ++col) {
            if (hi[col][j] == 0) continue;
            Mono n = hi[col];
            --n[j];
            size_t row = monomial_index(n);
            for (int a = 0; a < rep_.dim; ++a)
                m.at(row * rep_.dim + a, col * rep_.dim + a) = QS5((long)hi[col][j]);
        }
        return m;
    }

    Mat build_r(int j, int k) const {
        const auto& quots = detail::reflection_quotients(k);
        Mat m(dim(k - 1), dim(k));
        for (size_t s = 0; s < g_.reflections.size(); ++s) {
            const Reflection& r = g_.reflections[s];
            QS5 aj = r.alpha.at(j, 0);
            if (aj.is_zero()) continue;
            m = m + aj * detail::tensor_with(quots[s], rep_.mats[r.elem]);
        }
        return m;
    }

    const Group& g_;
    const Irrep& rep_;
    int tau_;
    std::map<std::pair<int, int>, Mat> p_, r_;
    std::map<Rat, std::vector<Mat>> forms_;
    std::map<std::pair<Rat, int>, SliceRank> ranks_;
};

inline StandardModule& standard_module(int tau) {
    static std::array<std::optional<StandardModule>, 10> mods;
    if (!mods[tau]) mods[tau].emplace(tau);
    return *mods[tau];
}

}  // namespace h3

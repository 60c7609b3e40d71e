#include <catch2/catch_amalgamated.hpp>

#include <h3/verma.hpp>

using namespace h3;

namespace {

// Scalar 15 * chi_tau(reflection) / dim(tau); the reflection class is the
// class of the simple generators.
QS5 reflection_sum_scalar(int tau) {
    const Group& g = h3_group();
    int refl_class = g.elements[g.gens[0]].class_id;
    const auto& chi = character_table(g)[tau];
    return QS5(15) * chi[refl_class] / chi[0];
}

// Lowest-weight of M_c(tau): 3/2 - c * 15 chi(s)/dim.
QS5 lowest_weight(const Rat& c, int tau) {
    return QS5(rat(3, 2)) - QS5(c) * reflection_sum_scalar(tau);
}

bool is_scalar(const Mat& m, const QS5& s) {
    for (size_t i = 0; i < m.rows; ++i)
        for (size_t j = 0; j < m.cols; ++j)
            if (m.at(i, j) != (i == j ? s : QS5())) return false;
    return true;
}

}  // namespace

TEST_CASE("degree-1 Dunkl operator matches the closed reflection formula") {
    const Group& g = h3_group();
    Rat c = rat(2, 7);
    for (int tau : {0, 3, 8}) {
        StandardModule& m = standard_module(tau);
        const Irrep& rep = m.rep();
        for (int j = 0; j < 3; ++j) {
            Mat d = m.dunkl(c, j, 1);
            // oracle: D_j(x_i (x) v) = delta_ij v
            //         - c sum_s alpha_s[j] <x_i, alpha_s^vee> (s.v)
            Mat want((size_t)rep.dim, 3 * rep.dim);
            for (int i = 0; i < 3; ++i) {
                Mat block(rep.dim, rep.dim);
                if (i == j) block = Mat::identity(rep.dim);
                for (const Reflection& r : g.reflections) {
                    Mat xi(3, 1);
                    xi.at(i, 0) = QS5(1);
                    QS5 coef = QS5(c) * r.alpha.at(j, 0) * g.pair(xi, r.alpha_check);
                    block = block - coef * rep.mats[r.elem];
                }
                size_t col0 = monomial_index({i == 0, i == 1, i == 2});
                for (int p = 0; p < rep.dim; ++p)
                    for (int q = 0; q < rep.dim; ++q)
                        want.at(p, col0 * rep.dim + q) = block.at(p, q);
            }
            CHECK(d == want);
        }
    }
}

TEST_CASE("Dunkl operators commute for every parameter value") {
    // D_i(c) = P_i - c R_i, so [D_i, D_j] = 0 identically in c iff the c^0,
    // c^1, c^2 coefficient matrices are each symmetric under i <-> j.
    auto check_commute = [](int tau, int k) {
        StandardModule& m = standard_module(tau);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                const Mat &pi = m.dunkl_p(i, k - 1), &pj = m.dunkl_p(j, k - 1);
                const Mat &ri = m.dunkl_r(i, k - 1), &rj = m.dunkl_r(j, k - 1);
                const Mat &Pi = m.dunkl_p(i, k), &Pj = m.dunkl_p(j, k);
                const Mat &Ri = m.dunkl_r(i, k), &Rj = m.dunkl_r(j, k);
                CHECK(pi * Pj == pj * Pi);
                CHECK(pi * Rj + ri * Pj == pj * Ri + rj * Pi);
                CHECK(ri * Rj == rj * Ri);
            }
    };
    for (int tau = 0; tau < 10; ++tau)
        for (int k = 2; k <= 4; ++k) check_commute(tau, k);
    check_commute(3, 6);
    check_commute(8, 5);
}

TEST_CASE("at c = 0 the form is the symmetric power of the Gram pairing") {
    // Independent oracle: pair x^a against x^b by applying, for each factor
    // x_i of x^a, the constant-coefficient operator sum_j G(i,j) d/dx_j, and
    // reading off the constant term.
    const Group& g = h3_group();
    auto pairing = [&](const Mono& a, const Mono& b) {
        Poly f = monomial(b);
        for (int i = 0; i < 3; ++i)
            for (int rep = 0; rep < a[i]; ++rep) {
                Poly next;
                for (int j = 0; j < 3; ++j)
                    next += g.gram.at(i, j) * derivative(f, j);
                f = next;
            }
        auto it = f.terms.find(Mono{0, 0, 0});
        return it == f.terms.end() ? QS5() : it->second;
    };
    for (int tau : {3, 8}) {
        StandardModule& m = standard_module(tau);
        const Irrep& rep = m.rep();
        for (int k = 1; k <= 4; ++k) {
            const Mat& b = m.form(Rat(0), k);
            const auto& ms = monomials_of_degree(k);
            for (size_t p = 0; p < ms.size(); ++p)
                for (size_t q = 0; q < ms.size(); ++q) {
                    QS5 s = pairing(ms[p], ms[q]);
                    for (int a = 0; a < rep.dim; ++a)
                        for (int bb = 0; bb < rep.dim; ++bb)
                            CHECK(b.at(p * rep.dim + a, q * rep.dim + bb) ==
                                  s * rep.inv_form.at(a, bb));
                }
        }
    }
}

TEST_CASE("contravariant form is symmetric and W-invariant") {
    const Group& g = h3_group();
    for (int tau : {0, 1, 3, 6, 8}) {
        StandardModule& m = standard_module(tau);
        for (Rat c : {rat(1, 2), rat(1, 10)}) {
            for (int k = 1; k <= 4; ++k) {
                const Mat& b = m.form(c, k);
                CHECK(b == b.transposed());
                for (size_t s : g.gens) {
                    Mat t = m.action(s, k);
                    CHECK(t.transposed() * b * t == b);
                }
            }
            m.drop_form_cache(c);
        }
    }
}

TEST_CASE("Euler operator acts by k plus the lowest weight") {
    const Group& g = h3_group();
    Rat c = rat(1, 2);
    for (int tau : {0, 2, 7}) {
        StandardModule& m = standard_module(tau);
        for (int k = 1; k <= 3; ++k) {
            Mat h(m.dim(k), m.dim(k));
            for (int i = 0; i < 3; ++i) h = h + m.x_mult(i, k - 1) * m.dunkl(c, i, k);
            h = h + QS5(rat(3, 2)) * Mat::identity(m.dim(k));
            for (const Reflection& r : g.reflections)
                h = h - QS5(c) * m.action(r.elem, k);
            CHECK(is_scalar(h, QS5((long)k) + lowest_weight(c, tau)));
        }
    }
}

TEST_CASE("sl2 commutator [E, F] is the Euler operator") {
    const Group& g = h3_group();
    auto E = [&](StandardModule& m, int k) {
        Mat e(m.dim(k + 2), m.dim(k));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (g.gram_inv.at(i, j).is_zero()) continue;
                e = e + (QS5(rat(1, 2)) * g.gram_inv.at(i, j)) *
                            (m.x_mult(i, k + 1) * m.x_mult(j, k));
            }
        return e;
    };
    auto F = [&](StandardModule& m, const Rat& c, int k) {
        Mat f(m.dim(k - 2), m.dim(k));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (g.gram.at(i, j).is_zero()) continue;
                f = f - (QS5(rat(1, 2)) * g.gram.at(i, j)) *
                            (m.dunkl(c, i, k - 1) * m.dunkl(c, j, k));
            }
        return f;
    };
    Rat c = rat(1, 2);
    for (int tau : {0, 3}) {
        StandardModule& m = standard_module(tau);
        for (int k = 2; k <= 4; ++k) {
            Mat comm = E(m, k - 2) * F(m, c, k) - F(m, c, k + 2) * E(m, k);
            CHECK(is_scalar(comm, QS5((long)k) + lowest_weight(c, tau)));
        }
    }
}

TEST_CASE("reflection difference quotients are root-scale invariant") {
    const Group& g = h3_group();
    const Reflection& r = g.reflections[4];
    std::vector<QS5> a = {r.alpha.at(0, 0), r.alpha.at(1, 0), r.alpha.at(2, 0)};
    std::vector<QS5> a3 = {QS5(3) * a[0], QS5(3) * a[1], QS5(3) * a[2]};
    Poly f = monomial({2, 1, 0});
    Poly diff = f - apply_matrix(g.elements[r.elem].m, f);
    CHECK(divide_by_linear(diff, linear_form(a3)) ==
          QS5(rat(1, 3)) * divide_by_linear(diff, linear_form(a)));
}

TEST_CASE("degree-1 singular vectors appear exactly at the predicted c") {
    // M_c(3-) has a 3+ singular vector in degree 1 iff c = 1/10.
    StandardModule& m = standard_module(irrep_index("3-"));
    auto& r = m.rank_and_kernel(rat(1, 10), 1);
    CHECK(r.dim == 9);
    CHECK(r.rank == 6);
    REQUIRE(r.kernel_known);
    std::array<long, 10> expect{};
    expect[irrep_index("3+")] = 1;
    CHECK(r.kernel == expect);

    auto& full = m.rank_and_kernel(rat(1, 7), 1);
    CHECK(full.rank == 9);
    CHECK(full.kernel == std::array<long, 10>{});
}

TEST_CASE("the trivial module at c = 1/2 degenerates in degree 5") {
    StandardModule& m = standard_module(irrep_index("1+"));
    auto& r = m.rank_and_kernel(rat(1, 2), 5);
    CHECK(r.dim == 21);
    CHECK(r.rank == 15);
    REQUIRE(r.kernel_known);
    std::array<long, 10> expect{};
    expect[irrep_index("3-")] = 1;
    expect[irrep_index("3~-")] = 1;
    CHECK(r.kernel == expect);
    for (int k = 1; k <= 4; ++k)
        CHECK(m.rank_and_kernel(rat(1, 2), k).rank == m.dim(k));
}

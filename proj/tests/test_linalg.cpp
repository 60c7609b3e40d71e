#include <catch2/catch_amalgamated.hpp>

#include <h3/linalg.hpp>

using namespace h3;

namespace {

// Deterministic pseudo-random Q(sqrt5) entries with small numerators.
struct Lcg {
    unsigned long s = 0x9e3779b97f4a7c15UL;
    long next(long lo, long hi) {
        s = s * 6364136223846793005UL + 1442695040888963407UL;
        return lo + (long)((s >> 33) % (unsigned long)(hi - lo + 1));
    }
    QS5 entry(bool with_root) {
        Rat a = rat(next(-5, 5), next(1, 3));
        Rat b = with_root ? rat(next(-3, 3), next(1, 2)) : Rat(0);
        return QS5(a, b);
    }
    Mat matrix(size_t rows, size_t cols, bool with_root) {
        Mat m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) m.at(i, j) = entry(with_root);
        return m;
    }
};

}  // namespace

TEST_CASE("rank engines agree on random matrices") {
    Lcg rng;
    for (bool with_root : {false, true})
        for (int trial = 0; trial < 25; ++trial) {
            size_t n = 2 + (size_t)rng.next(0, 6);
            size_t m = 2 + (size_t)rng.next(0, 6);
            Mat a = rng.matrix(n, m, with_root);
            size_t g = gauss_rank(a);
            CHECK(bareiss_rank(a) == g);
            CHECK(modular_rank(a) == g);
            CHECK(nullspace(a).cols == m - g);
        }
}

TEST_CASE("products of thin matrices have the expected rank") {
    Lcg rng;
    for (int trial = 0; trial < 15; ++trial) {
        size_t n = 5 + (size_t)rng.next(0, 3);
        size_t r = 1 + (size_t)rng.next(0, 3);
        Mat b = rng.matrix(n, r, true), c = rng.matrix(r, n, true);
        Mat a = b * c;
        size_t expect = std::min(gauss_rank(b), gauss_rank(c));
        CHECK(gauss_rank(a) == expect);
        CHECK(bareiss_rank(a) == expect);
        CHECK(modular_rank(a) == expect);
    }
}

TEST_CASE("solve returns exact solutions and detects inconsistency") {
    Lcg rng;
    for (int trial = 0; trial < 10; ++trial) {
        size_t n = 3 + (size_t)rng.next(0, 3);
        Mat a = rng.matrix(n, n, true);
        if (gauss_rank(a) < n) continue;
        Mat x = rng.matrix(n, 2, true);
        auto got = solve(a, a * x);
        REQUIRE(got);
        CHECK(*got == x);
        CHECK(inverse(a) * a == Mat::identity(n));
    }
    // inconsistent: duplicate a row but change the right-hand side
    Mat a(2, 1), b(2, 1);
    a.at(0, 0) = a.at(1, 0) = QS5(1);
    b.at(0, 0) = QS5(1);
    b.at(1, 0) = QS5(2);
    CHECK_FALSE(solve(a, b));
}

TEST_CASE("null vectors are annihilated exactly") {
    Lcg rng;
    for (int trial = 0; trial < 10; ++trial) {
        Mat a = rng.matrix(4, 7, true);
        Mat k = nullspace(a);
        Mat prod = a * k;
        for (size_t i = 0; i < prod.rows; ++i)
            for (size_t j = 0; j < prod.cols; ++j) CHECK(prod.at(i, j).is_zero());
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <h3/group.hpp>

#include <algorithm>
#include <set>

using namespace h3;

TEST_CASE("H3 has 120 elements, 15 reflections, 10 classes") {
    const Group& g = h3_group();
    CHECK(g.size() == 120);
    CHECK(g.reflections.size() == 15);
    REQUIRE(g.classes.size() == 10);

    std::multiset<size_t> sizes;
    size_t total = 0;
    for (const auto& c : g.classes) {
        sizes.insert(c.size);
        total += c.size;
    }
    CHECK(total == 120);
    CHECK(sizes == std::multiset<size_t>{1, 1, 20, 20, 15, 15, 12, 12, 12, 12});
}

TEST_CASE("Coxeter presentation relations") {
    const Group& g = h3_group();
    size_t s1 = g.gens[0], s2 = g.gens[1], s3 = g.gens[2];
    auto pow = [&](size_t a, int n) {
        size_t x = 0;
        for (int i = 0; i < n; ++i) x = g.mul(x, a);
        return x;
    };
    CHECK(g.mul(s1, s1) == 0);
    CHECK(g.mul(s2, s2) == 0);
    CHECK(g.mul(s3, s3) == 0);
    CHECK(pow(g.mul(s1, s2), 3) == 0);
    CHECK(pow(g.mul(s2, s3), 5) == 0);
    CHECK(pow(g.mul(s1, s3), 2) == 0);
}

TEST_CASE("generators are orthogonal for the invariant form") {
    const Group& g = h3_group();
    for (size_t s : g.gens) {
        const Mat& m = g.elements[s].m;
        CHECK(m.transposed() * g.gram * m == g.gram);
    }
}

TEST_CASE("center is {Id, -Id}") {
    const Group& g = h3_group();
    std::vector<size_t> center;
    for (size_t a = 0; a < g.size(); ++a) {
        bool central = true;
        for (size_t b = 0; b < g.size() && central; ++b)
            central = g.mul(a, b) == g.mul(b, a);
        if (central) center.push_back(a);
    }
    REQUIRE(center.size() == 2);
    CHECK(center[0] == 0);
    CHECK(g.elements[center[1]].m.trace() == QS5(-3));
    CHECK(g.elements[center[1]].order == 2);
}

TEST_CASE("classification by (order, trace) signature") {
    const Group& g = h3_group();
    CHECK(g.classes[g.elements[0].class_id].label == "Id");
    for (const Reflection& r : g.reflections)
        CHECK(g.classes[g.elements[r.elem].class_id].label == "-(12)(34)");
    // reflections form a single class: the class of s1
    CHECK(g.classes[g.elements[g.gens[0]].class_id].size == 15);
    for (size_t a = 0; a < g.size(); ++a) {
        const GroupElement& x = g.elements[a];
        CHECK(classify(g, x.m, x.order) == x.class_id);
        if (x.order == 10 && x.m.trace() == -golden())
            CHECK(g.classes[x.class_id].label == "-(12345)");
    }
}

TEST_CASE("reflection root data") {
    const Group& g = h3_group();
    for (const Reflection& r : g.reflections) {
        const Mat& m = g.elements[r.elem].m;
        CHECK(g.mul(r.elem, r.elem) == 0);
        CHECK(gauss_rank(m - Mat::identity(3)) == 1);
        CHECK(m * r.alpha == QS5(-1) * r.alpha);
        CHECK(g.pair(r.alpha, r.alpha_check) == QS5(2));
    }
}

TEST_CASE("parabolic Z2xZ2") {
    const Group& g = h3_group();
    Parabolic p = build_parabolic(g, "Z2xZ2");
    CHECK(p.elems.size() == 4);
    CHECK(p.irrep_labels.size() == 4);
    CHECK(p.class_sizes == std::vector<size_t>{1, 1, 1, 1});
    CHECK(p.reflection_positions.size() == 2);
    // Character table rows are orthonormal for the class weighting.
    for (size_t r = 0; r < 4; ++r)
        for (size_t s = 0; s < 4; ++s) {
            QS5 inner;
            for (size_t c = 0; c < 4; ++c)
                inner += QS5((long)p.class_sizes[c]) * p.char_table.at(r, c) *
                         p.char_table.at(s, c);
            CHECK(inner == QS5(r == s ? 4 : 0));
        }
}

TEST_CASE("parabolic S3") {
    const Group& g = h3_group();
    Parabolic p = build_parabolic(g, "S3");
    CHECK(p.elems.size() == 6);
    CHECK(p.irrep_dims == std::vector<int>{1, 1, 2});
    std::multiset<size_t> sizes(p.class_sizes.begin(), p.class_sizes.end());
    CHECK(sizes == std::multiset<size_t>{1, 3, 2});
    CHECK(p.reflection_positions.size() == 3);
    for (size_t r = 0; r < 3; ++r)
        for (size_t s = 0; s < 3; ++s) {
            QS5 inner;
            for (size_t c = 0; c < p.class_sizes.size(); ++c)
                inner += QS5((long)p.class_sizes[c]) * p.char_table.at(r, c) *
                         p.char_table.at(s, c);
            CHECK(inner == QS5(r == s ? 6 : 0));
        }
    CHECK_THROWS_AS(build_parabolic(g, "A4"), std::invalid_argument);
}

TEST_CASE("parabolic type degree tables") {
    for (const auto& t : parabolic_types()) {
        if (t.name == "H3") CHECK(t.degrees == std::vector<int>{2, 6, 10});
        if (t.name == "A2") CHECK(t.degrees == std::vector<int>{2, 3});
        if (t.name == "I2(5)") CHECK(t.degrees == std::vector<int>{2, 5});
        CHECK(t.rank() == (int)t.degrees.size());
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <h3/reps.hpp>

using namespace h3;

namespace {

// The full H3 character table, frozen; rows in label order, columns in class
// order Id, -Id, (123), -(123), (12)(34), -(12)(34), (12345), -(12345),
// (13245), -(13245).  p = (1+sqrt5)/2, q = (1-sqrt5)/2.
std::array<std::array<QS5, 10>, 10> expected_table() {
    const QS5 p = golden(), q = galois(golden());
    return {{
        {QS5(1), QS5(1), QS5(1), QS5(1), QS5(1), QS5(1), QS5(1), QS5(1), QS5(1), QS5(1)},
        {QS5(1), QS5(-1), QS5(1), QS5(-1), QS5(1), QS5(-1), QS5(1), QS5(-1), QS5(1), QS5(-1)},
        {QS5(3), QS5(3), QS5(0), QS5(0), QS5(-1), QS5(-1), p, p, q, q},
        {QS5(3), QS5(-3), QS5(0), QS5(0), QS5(-1), QS5(1), p, -p, q, -q},
        {QS5(3), QS5(3), QS5(0), QS5(0), QS5(-1), QS5(-1), q, q, p, p},
        {QS5(3), QS5(-3), QS5(0), QS5(0), QS5(-1), QS5(1), q, -q, p, -p},
        {QS5(4), QS5(4), QS5(1), QS5(1), QS5(0), QS5(0), QS5(-1), QS5(-1), QS5(-1), QS5(-1)},
        {QS5(4), QS5(-4), QS5(1), QS5(-1), QS5(0), QS5(0), QS5(-1), QS5(1), QS5(-1), QS5(1)},
        {QS5(5), QS5(5), QS5(-1), QS5(-1), QS5(1), QS5(1), QS5(0), QS5(0), QS5(0), QS5(0)},
        {QS5(5), QS5(-5), QS5(-1), QS5(1), QS5(1), QS5(-1), QS5(0), QS5(0), QS5(0), QS5(0)},
    }};
}

std::map<int, long> labels_to_mult(std::initializer_list<std::pair<const char*, long>> xs) {
    std::map<int, long> m;
    for (const auto& [l, n] : xs) m[irrep_index(l)] = n;
    return m;
}

}  // namespace

TEST_CASE("character table matches the known H3 table entry for entry") {
    const Group& g = h3_group();
    const auto& table = character_table(g);
    auto expect = expected_table();
    for (int t = 0; t < 10; ++t)
        for (int c = 0; c < 10; ++c) {
            INFO("irrep " << irrep_labels()[t] << ", class " << g.classes[c].label);
            CHECK(table[t][c] == expect[t][c]);
        }
}

TEST_CASE("character orthogonality and Burnside") {
    const Group& g = h3_group();
    const auto& table = character_table(g);
    long sumsq = 0;
    for (int t = 0; t < 10; ++t) {
        sumsq += (long)(table[t][0].a.get_num().get_si() * table[t][0].a.get_num().get_si());
        for (int s = 0; s < 10; ++s)
            CHECK(char_inner(g, table[t], table[s]) == QS5(t == s ? 1 : 0));
    }
    CHECK(sumsq == 120);
}

TEST_CASE("explicit irreps: dims, relations, characters, forms") {
    const Group& g = h3_group();
    const auto& irr = h3_irreps();
    const auto& table = character_table(g);
    for (int t = 0; t < 10; ++t) {
        const Irrep& r = irr[t];
        CHECK(r.label == irrep_labels()[t]);
        CHECK(r.dim == (int)r.gens[0].rows);
        CHECK(r.chars == table[t]);
        // homomorphism: spot-check against the multiplication table
        for (size_t a : {(size_t)3, (size_t)17, (size_t)85})
            for (size_t b : {(size_t)5, (size_t)40, (size_t)119})
                CHECK(r.mats[g.mul(a, b)] == r.mats[a] * r.mats[b]);
        // invariant form: symmetric, nondegenerate, invariant for all elements
        CHECK(r.inv_form == r.inv_form.transposed());
        CHECK(gauss_rank(r.inv_form) == (size_t)r.dim);
        for (size_t w = 0; w < g.size(); ++w)
            CHECK(r.mats[w].transposed() * r.inv_form * r.mats[w] == r.inv_form);
    }
}

TEST_CASE("1- is det of 3-, 3~ is the entrywise Galois conjugate") {
    const Group& g = h3_group();
    const auto& irr = h3_irreps();
    Mat det = class_rep_det(g);
    for (int c = 0; c < 10; ++c)
        CHECK(irr[1].chars[c] == det.at(0, c));
    for (size_t w = 0; w < g.size(); ++w)
        CHECK(irr[5].mats[w] == detail::galois_mat(irr[3].mats[w]));
}

TEST_CASE("twist involutions on labels") {
    CHECK(sign_twist(irrep_index("5+")) == irrep_index("5-"));
    CHECK(galois_twist(irrep_index("3-")) == irrep_index("3~-"));
    CHECK(galois_twist(irrep_index("4+")) == irrep_index("4+"));
    for (int i = 0; i < 10; ++i) {
        CHECK(sign_twist(sign_twist(i)) == i);
        CHECK(galois_twist(galois_twist(i)) == i);
    }
}

TEST_CASE("known tensor-product decompositions") {
    const Group& g = h3_group();
    const auto& t = character_table(g);
    CHECK(tensor_decompose(g, t[irrep_index("3-")], t[irrep_index("3+")]) ==
          labels_to_mult({{"1-", 1}, {"3-", 1}, {"5-", 1}}));
    CHECK(tensor_decompose(g, t[irrep_index("3-")], t[irrep_index("3~+")]) ==
          labels_to_mult({{"4-", 1}, {"5-", 1}}));
    for (int i = 0; i < 10; ++i) {
        CHECK(tensor_decompose(g, t[0], t[i]) == std::map<int, long>{{i, 1}});
        CHECK(tensor_decompose(g, t[1], t[i]) ==
              std::map<int, long>{{sign_twist(i), 1}});
    }
}

TEST_CASE("symmetric power characters") {
    const Group& g = h3_group();
    const auto& t = character_table(g);
    CHECK(sym_power_char(g, 0) == t[0]);
    for (int k = 0; k <= 50; ++k)
        CHECK(sym_power_char(g, k)[0] == QS5((k + 1) * (k + 2) / 2));
    // S^2 h* = 1+ (+) 5+
    CHECK(tensor_decompose(g, sym_power_char(g, 2), t[0]) ==
          labels_to_mult({{"1+", 1}, {"5+", 1}}));
    // S^2 h* (x) 5- = 1- + 3- + 3~- + 2*4- + 3*5-
    CHECK(tensor_decompose(g, sym_power_char(g, 2), t[irrep_index("5-")]) ==
          labels_to_mult({{"1-", 1}, {"3-", 1}, {"3~-", 1}, {"4-", 2}, {"5-", 3}}));
}

TEST_CASE("branching to Z2xZ2 matches the restriction table") {
    const Group& g = h3_group();
    Parabolic p = build_parabolic(g, "Z2xZ2");
    const auto& t = character_table(g);
    auto row = [&](const char* label) { return branching(g, t[irrep_index(label)], p); };
    auto mult = [&](std::initializer_list<std::pair<const char*, long>> xs) {
        std::vector<long> v(4, 0);
        for (const auto& [l, n] : xs) {
            auto it = std::find(p.irrep_labels.begin(), p.irrep_labels.end(), l);
            REQUIRE(it != p.irrep_labels.end());
            v[it - p.irrep_labels.begin()] = n;
        }
        return v;
    };
    CHECK(row("1+") == mult({{"1++", 1}}));
    CHECK(row("1-") == mult({{"1--", 1}}));
    CHECK(row("3+") == mult({{"1-+", 1}, {"1+-", 1}, {"1--", 1}}));
    CHECK(row("3-") == mult({{"1-+", 1}, {"1+-", 1}, {"1++", 1}}));
    CHECK(row("3~+") == mult({{"1-+", 1}, {"1+-", 1}, {"1--", 1}}));
    CHECK(row("3~-") == mult({{"1-+", 1}, {"1+-", 1}, {"1++", 1}}));
    CHECK(row("4+") == mult({{"1--", 1}, {"1-+", 1}, {"1+-", 1}, {"1++", 1}}));
    CHECK(row("4-") == mult({{"1--", 1}, {"1-+", 1}, {"1+-", 1}, {"1++", 1}}));
    CHECK(row("5+") == mult({{"1--", 1}, {"1-+", 1}, {"1+-", 1}, {"1++", 2}}));
    CHECK(row("5-") == mult({{"1--", 2}, {"1-+", 1}, {"1+-", 1}, {"1++", 1}}));
}

TEST_CASE("branching to S3") {
    const Group& g = h3_group();
    Parabolic p = build_parabolic(g, "S3");
    const auto& t = character_table(g);
    auto row = [&](const char* label) { return branching(g, t[irrep_index(label)], p); };
    // dims must add up
    for (int i = 0; i < 10; ++i) {
        auto b = branching(g, t[i], p);
        long total = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            CHECK(b[j] >= 0);
            total += b[j] * p.irrep_dims[j];
        }
        CHECK(total == t[i][0].a.get_num().get_si());
    }
    CHECK(row("1+") == std::vector<long>{1, 0, 0});
    CHECK(row("1-") == std::vector<long>{0, 1, 0});
    CHECK(row("3-") == std::vector<long>{1, 0, 1});
    CHECK(row("3+") == std::vector<long>{0, 1, 1});
}

TEST_CASE("alternative extraction order gives character-identical models") {
    const Group& g = h3_group();
    auto alt = build_irreps(g, /*reverse_columns=*/true);
    const auto& table = character_table(g);
    for (int t = 0; t < 10; ++t) {
        CHECK(alt[t].chars == table[t]);
        CHECK(alt[t].inv_form == alt[t].inv_form.transposed());
        CHECK(gauss_rank(alt[t].inv_form) == (size_t)alt[t].dim);
    }
}

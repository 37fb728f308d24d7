#include <doctest.h>

#include <random>

#include "phsq/steenrod.hpp"
#include "phsq/synthetic.hpp"
#include "support/checks.hpp"

using namespace phsq;

namespace {

bool same_partition(const index_partition& p, std::initializer_list<vertex_t> minus,
                    std::initializer_list<vertex_t> plus) {
    return p.u_minus == std::vector<vertex_t>(minus) && p.u_plus == std::vector<vertex_t>(plus);
}

}  // namespace

TEST_CASE("index partition") {
    CHECK(same_partition(partition_by_index(simplex{2, 5}, simplex{2, 3, 5}), {5}, {2}));
    CHECK(same_partition(partition_by_index(simplex{4, 5}, simplex{1, 4, 5}), {4, 5}, {}));
    CHECK(same_partition(partition_by_index(simplex{1, 2}, simplex{1, 2}), {}, {1, 2}));
    CHECK(thrown_code([] { partition_by_index(simplex{4}, simplex{1, 2}); }) == errc::not_subset);
}

TEST_CASE("stsq on the projective plane") {
    filtered_complex x = rp2_complex();
    cochain s = rp2_cocycle();
    CHECK(stsq(1, s, x) == cochain(2, {simplex{2, 3, 5}}));
    CHECK(stsq_serial(1, s, x) == cochain(2, {simplex{2, 3, 5}}));
    CHECK(cup_square_oracle(1, s, x) == cochain(2, {simplex{2, 3, 5}}));
}

TEST_CASE("stsq edge cases") {
    filtered_complex x = rp2_complex();
    CHECK(stsq(1, cochain(1), x) == cochain(2));
    CHECK(stsq(3, rp2_cocycle(), x) == cochain(4));  // k > d

    filtered_complex edge = filtered_complex::build({simplex{1}, simplex{2}, simplex{1, 2}});
    CHECK(stsq(1, cochain(1, {simplex{1, 2}}), edge) == cochain(2));  // no 2-simplices

    CHECK(thrown_code([&] { stsq(0, rp2_cocycle(), x); }) == errc::invalid_k);
    CHECK(thrown_code([&] { stsq(1, cochain(1, {simplex{9, 10}}), x); }) ==
          errc::unsupported_cochain);
}

TEST_CASE("pair acceptance is symmetric") {
    std::mt19937 rng(41);
    filtered_complex x = rp2_complex();
    auto edges = x.stages_of_dimension(1);
    for (int trial = 0; trial < 200; ++trial) {
        const simplex& a = x.at(edges[rng() % edges.size()]);
        const simplex& b = x.at(edges[rng() % edges.size()]);
        if (a == b) continue;
        simplex c1, c2;
        bool fwd = detail::stsq_pair_contributes(a, b, 1, x, &c1);
        bool bwd = detail::stsq_pair_contributes(b, a, 1, x, &c2);
        CHECK(fwd == bwd);
        if (fwd) CHECK(c1 == c2);
    }
}

TEST_CASE("stsq equals the cup-square oracle on arbitrary cochains") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        filtered_complex x = random_filtered_complex(rng, 40, 3, 8);
        int d = static_cast<int>(rng() % 3);
        cochain s = random_cochain(rng, x, d);
        for (unsigned k = 1; k <= static_cast<unsigned>(d) + 2; ++k) {
            cochain expected = cup_square_oracle(k, s, x);
            CHECK(stsq(k, s, x) == expected);
            CHECK(stsq_serial(k, s, x) == expected);
        }
    }
}

TEST_CASE("stsq equals the oracle for top squares on a sphere") {
    std::mt19937 rng(47);
    filtered_complex sphere = sphere_boundary_complex(3);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 1 + static_cast<int>(rng() % 3);
        cochain s = random_cocycle(rng, sphere, d);
        CHECK(stsq(static_cast<unsigned>(d), s, sphere) ==
              cup_square_oracle(static_cast<unsigned>(d), s, sphere));
    }
}

TEST_CASE("oracle trivialities") {
    filtered_complex x = rp2_complex();
    CHECK(cup_square_oracle(1, cochain(1), x) == cochain(2));
    CHECK(cup_square_oracle(1, cochain(1, {simplex{1, 2}}), x) == cochain(2));
}

TEST_CASE("the k = d+1 enumeration is empty") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        filtered_complex x = random_filtered_complex(rng, 35, 3, 7);
        int d = static_cast<int>(rng() % 3);
        cochain s = random_cochain(rng, x, d);
        unsigned k = static_cast<unsigned>(d) + 1;
        CHECK(detail::stsq_enumerate(k, s, x).empty());
        CHECK(cup_square_oracle(k, s, x).empty());
    }
}

TEST_CASE("cup product") {
    filtered_complex edge = filtered_complex::build({simplex{1}, simplex{2}, simplex{1, 2}});
    cochain v1(0, {simplex{1}}), v2(0, {simplex{2}});
    cochain e(1, {simplex{1, 2}});
    // degree-zero products are pointwise
    CHECK(cup_product(v1, v2, edge) == cochain(0));
    CHECK(cup_product(v1, v1, edge) == v1);
    // front/back evaluation: the order of the factors matters
    CHECK(cup_product(v1, e, edge) == e);
    CHECK(cup_product(v2, e, edge) == cochain(1));
    CHECK(cup_product(e, v2, edge) == e);
    CHECK(cup_product(e, v1, edge) == cochain(1));

    filtered_complex x = rp2_complex();
    cochain s = rp2_cocycle();
    cochain square = cup_product(s, s, x);
    CHECK(is_cocycle(square, x));
    CHECK(cohomologous(square, cochain(2, {simplex{2, 3, 5}}), x));
}

TEST_CASE("the vertex sum is a unit for the cup product") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        filtered_complex x = random_filtered_complex(rng, 35, 3, 8);
        std::vector<simplex> verts;
        for (index_t s : x.stages_of_dimension(0)) verts.push_back(x.at(s));
        cochain unit(0, std::move(verts));
        int d = static_cast<int>(rng() % 3);
        cochain b = random_cochain(rng, x, d);
        CHECK(cup_product(unit, b, x) == b);
        CHECK(cup_product(b, unit, x) == b);
    }
}

TEST_CASE("is_cocycle") {
    filtered_complex x = rp2_complex();
    CHECK(is_cocycle(rp2_cocycle(), x));
    CHECK(is_cocycle(cochain(1), x));
    filtered_complex edge = filtered_complex::build({simplex{1}, simplex{2}, simplex{1, 2}});
    CHECK(!is_cocycle(cochain(0, {simplex{1}}), edge));
}

TEST_CASE("cohomologous") {
    filtered_complex x = rp2_complex();
    cochain s = rp2_cocycle();
    CHECK(cohomologous(s, s, x));
    // H^2 is one-dimensional: any two triangles are cohomologous
    CHECK(cohomologous(cochain(2, {simplex{1, 2, 4}}), cochain(2, {simplex{4, 5, 6}}), x));
    // the generator is not a coboundary
    CHECK(!cohomologous(s, cochain(1), x));

    CHECK(thrown_code([&] { cohomologous(s, cochain(2), x); }) == errc::degree_mismatch);
    filtered_complex edge = filtered_complex::build({simplex{1}, simplex{2}, simplex{1, 2}});
    CHECK(thrown_code([&] {
              cohomologous(cochain(0, {simplex{1}}), cochain(0), edge);
          }) == errc::not_cocycle);
}

TEST_CASE("squares preserve cocycles and classes") {
    std::mt19937 rng(59);
    int done = 0;
    while (done < 25) {
        filtered_complex x = random_filtered_complex(rng, 40, 3, 8);
        int d = 1 + static_cast<int>(rng() % 2);
        cochain a = random_cocycle(rng, x, d);
        if (a.empty()) continue;
        ++done;
        coboundary_cache cache(x);
        for (unsigned k = 1; k <= static_cast<unsigned>(d); ++k) {
            cochain sq = stsq(k, a, x);
            CHECK(is_cocycle(sq, x));
            // adding a coboundary does not move the class of the square
            cochain b = a + random_coboundary(rng, x, d);
            CHECK(cohomologous(sq, stsq(k, b, x), cache));
        }
    }
}

TEST_CASE("top square is the cup square") {
    std::mt19937 rng(61);
    int done = 0;
    while (done < 25) {
        filtered_complex x = random_filtered_complex(rng, 40, 3, 8);
        int d = 1 + static_cast<int>(rng() % 2);
        cochain a = random_cocycle(rng, x, d);
        if (a.empty()) continue;
        ++done;
        CHECK(cohomologous(stsq(static_cast<unsigned>(d), a, x), cup_product(a, a, x), x));
    }
}

TEST_CASE("Cartan relation at class level") {
    std::mt19937 rng(67);
    int done = 0;
    while (done < 15) {
        filtered_complex x = random_filtered_complex(rng, 40, 3, 8);
        cochain a = random_cocycle(rng, x, 1);
        cochain b = random_cocycle(rng, x, 1);
        if (a.empty() || b.empty()) continue;
        ++done;
        coboundary_cache cache(x);
        cochain ab = cup_product(a, b, x);
        for (unsigned k = 1; k <= 2; ++k) {
            cochain rhs(ab.degree() + static_cast<int>(k));
            for (unsigned i = 0; i <= k; ++i) {
                cochain left = i == 0 ? a : stsq(i, a, x);
                cochain right = k - i == 0 ? b : stsq(k - i, b, x);
                rhs = rhs + cup_product(left, right, x);
            }
            CHECK(cohomologous(stsq(k, ab, x), rhs, cache));
        }
    }
}

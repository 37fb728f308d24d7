#include <doctest.h>

#include <random>

#include "phsq/io.hpp"
#include "phsq/synthetic.hpp"
#include "support/checks.hpp"

using namespace phsq;

TEST_CASE("complex file parsing") {
    filtered_complex x = parse_complex_file("1\n2\n1 2\n");
    CHECK(x.size() == 3);

    filtered_complex with_noise = parse_complex_file("# header\n\n 1 \n2\n1 2  # edge\n");
    CHECK(with_noise.size() == 3);

    CHECK(thrown_code([] { parse_complex_file("1 2\n"); }) == errc::not_closed);
    CHECK(thrown_code([] { parse_complex_file("2 1\n"); }) == errc::malformed_simplex);
    CHECK(thrown_code([] { parse_complex_file("1\nx\n"); }) == errc::parse_error);
    CHECK(parse_complex_file("").size() == 0);
}

TEST_CASE("cochain file parsing") {
    filtered_complex x = rp2_complex();
    cochain s = parse_cochain_file("1 4\n1 5\n2 3\n2 4\n3 5\n", x);
    CHECK(s == rp2_cocycle());

    CHECK(thrown_code([&] { parse_cochain_file("", x); }) == errc::missing_degree);
    CHECK(parse_cochain_file("", x, 1) == cochain(1));
    CHECK(thrown_code([&] { parse_cochain_file("1\n1 2\n", x); }) == errc::mixed_degrees);
    CHECK(thrown_code([&] { parse_cochain_file("7 9\n", x); }) == errc::unsupported_cochain);
    CHECK(thrown_code([&] { parse_cochain_file("1 2\n", x, 0); }) == errc::degree_mismatch);
}

TEST_CASE("complex files round trip") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 10; ++trial) {
        filtered_complex x = random_filtered_complex(rng, 40, 3, 9);
        std::string text = emit_complex(x);
        filtered_complex back = parse_complex_file(text);
        REQUIRE(back.size() == x.size());
        for (index_t s = 1; s <= x.size(); ++s) CHECK(back.at(s) == x.at(s));
        CHECK(emit_complex(back) == text);
    }
}

TEST_CASE("point cloud parsing") {
    point_cloud p = parse_points_csv("x,y\n0,0\n1,0\n0.5,0.8\n");
    CHECK(p.points.size() == 3);
    CHECK(p.points[2][1] == doctest::Approx(0.8));

    CHECK(thrown_code([] { parse_points_csv(""); }) == errc::parse_error);
    CHECK(thrown_code([] { parse_points_csv("0,0\n1\n"); }) == errc::parse_error);
    CHECK(thrown_code([] { parse_points_csv("0,0\na,b\n"); }) == errc::parse_error);
}

TEST_CASE("rips filtration") {
    point_cloud two{{{0, 0}, {1, 0}}};
    CHECK(rips_filtration(two, {0.5, 1}).size() == 2);  // no edge at threshold 0.5

    filtered_complex joined = rips_filtration(two, {1.0, 1});
    CHECK(joined.size() == 3);
    CHECK(joined.at(3) == simplex{0, 1});

    // equilateral triangle with unit sides: everything enters, triangle last
    point_cloud tri{{{0, 0}, {1, 0}, {0.5, 0.8660254037844386}}};
    filtered_complex full = rips_filtration(tri, {1.0, 2});
    REQUIRE(full.size() == 7);
    for (index_t s = 1; s <= 3; ++s) CHECK(full.at(s).dimension() == 0);
    for (index_t s = 4; s <= 6; ++s) CHECK(full.at(s).dimension() == 1);
    CHECK(full.at(7) == simplex{0, 1, 2});

    // right isoceles triangle: all distances exact, so the tie-breaks are too
    point_cloud right{{{0, 0}, {1, 0}, {0, 1}}};
    filtered_complex ordered = rips_filtration(right, {1.5, 2});
    REQUIRE(ordered.size() == 7);
    CHECK(ordered.at(1) == simplex{0});
    CHECK(ordered.at(2) == simplex{1});
    CHECK(ordered.at(3) == simplex{2});
    CHECK(ordered.at(4) == simplex{0, 1});  // diameter ties break lexicographically
    CHECK(ordered.at(5) == simplex{0, 2});
    CHECK(ordered.at(6) == simplex{1, 2});  // and dimension breaks the sqrt(2) tie
    CHECK(ordered.at(7) == simplex{0, 1, 2});
}

TEST_CASE("rips output is always a valid filtration") {
    std::mt19937 rng(113);
    std::uniform_real_distribution<double> coord(0, 1);
    for (int trial = 0; trial < 10; ++trial) {
        point_cloud cloud;
        for (int i = 0; i < 12; ++i) cloud.points.push_back({coord(rng), coord(rng), coord(rng)});
        filtered_complex x = rips_filtration(cloud, {0.7, 2});
        // reparse through the validating builder
        std::vector<simplex> order(x.simplices().begin(), x.simplices().end());
        filtered_complex again = filtered_complex::build(std::move(order));
        CHECK(again.size() == x.size());
    }
}

TEST_CASE("barcode json") {
    filtered_complex point = parse_complex_file("1\n");
    barcode bc = barcode_of(persistence_triples(point));
    std::string json = barcode_json(bc);
    CHECK(json ==
          "[\n  {\n    \"degree\": 0,\n    \"left\": \"-inf\",\n    \"right\": 1,\n"
          "    \"count\": 1\n  }\n]\n");

    // byte-identical across runs, bars sorted by (degree, left, right)
    filtered_complex x = rp2_complex();
    std::string a = barcode_json(barcode_of(persistence_triples(x)));
    std::string b = barcode_json(barcode_of(persistence_triples(rp2_complex())));
    CHECK(a == b);
}

TEST_CASE("rank table csv") {
    filtered_complex point = parse_complex_file("1\n");
    rank_table t = rank_inv_table(point, 1, 0);
    CHECK(rank_table_csv(t) == "i,j,rank\n-inf,1,0\n1,1,0\n");
}

TEST_CASE("svg output") {
    filtered_complex x = rp2_complex();
    barcode bc = barcode_of(persistence_triples(x));
    std::string svg = barcode_svg(bc, x.size());
    CHECK(svg == barcode_svg(bc, x.size()));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<path") != std::string::npos);  // arrowhead on the unbounded bar
    CHECK(svg.find("H2") != std::string::npos);
}

TEST_CASE("cochain emission") {
    CHECK(emit_cochain(cochain(2, {simplex{2, 3, 5}})) == "2 3 5\n");
    CHECK(emit_cochain(cochain(1)) == "");
    std::string json = cochain_json(cochain(2, {simplex{2, 3, 5}}));
    CHECK(json.find("\"degree\": 2") != std::string::npos);
    CHECK(json.find("[\n      2,\n      3,\n      5\n    ]") != std::string::npos);
}

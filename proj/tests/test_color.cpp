#include <doctest.h>

#include <set>

#include "support/fixtures.hpp"
#include "twoended/builtin_specs.hpp"
#include "twoended/coloring.hpp"
#include "twoended/harmonic.hpp"
#include "twoended/symmetry.hpp"

using namespace twoended;

namespace {

template <typename T>
VertexField<T> ladder_height(const GraphPtr& g) {
    VertexField<T> h(g);
    for (int v = 0; v < g->vertex_count(); ++v) {
        h[v] = NumTraits<T>::from_int(g->coord(v).layer);
    }
    return h;
}

VertexField<Rational> gamma_closed_form(const GraphPtr& g) {
    VertexField<Rational> field(g);
    for (int v = 0; v < g->vertex_count(); ++v) {
        VertexId id = g->coord(v);
        field[v] = Rational(3 * id.layer + (id.pos % 2));
    }
    return field;
}

}  // namespace

TEST_CASE("classification: ladder case 1, gamma case 2, star pattern case 3") {
    auto ladder = expand(ladder_spec(), -4, 4, 0);
    auto h = ladder_height<Rational>(ladder);
    auto c1 = classify_case(h, ladder->origin());
    CHECK(c1.kind == ColourCaseKind::Case1);
    CHECK(c1.pattern == std::array<Rational, 3>{-1, 0, 1});

    auto gamma = expand(gamma::gamma_spec(), -4, 4, 0);
    auto g = gamma_closed_form(gamma);
    auto c2 = classify_case(g, gamma->require_index({0, 1}));
    CHECK(c2.kind == ColourCaseKind::Case2);
    CHECK(c2.pattern == std::array<Rational, 3>{Rational(-1, 2), Rational(-1, 2), 1});
    // Odd vertices see (-1, -1, 2), so the rescale factor is 1/2.
    CHECK(c2.scale == Rational(1, 2));
    CHECK(classify_case(g, gamma->origin()).kind == ColourCaseKind::Case2);

    // A star with differences (-3, -1, 4) is the plain case-3 pattern match.
    auto star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    VertexField<Rational> s(star);
    s[1] = -3;
    s[2] = -1;
    s[3] = 4;
    auto c3 = classify_case(s, 0);
    CHECK(c3.kind == ColourCaseKind::Case3);
    CHECK(c3.pattern == std::array<Rational, 3>{Rational(-3, 4), Rational(-1, 4), 1});
}

TEST_CASE("classification is invariant under affine rescaling, including sign flips") {
    auto gamma = expand(gamma::gamma_spec(), -4, 4, 0);
    auto g = gamma_closed_form(gamma);
    VertexField<Rational> rescaled(gamma);
    for (int v = 0; v < g.size(); ++v) rescaled[v] = Rational(-7) * g[v] + 11;
    CHECK(classify_case(rescaled, gamma->origin()).kind == ColourCaseKind::Case2);
    CHECK(classify_case_sampled(rescaled).kind == ColourCaseKind::Case2);
}

TEST_CASE("classification errors: non-harmonic sums, wrong degree, constant field") {
    auto star = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    VertexField<Rational> bad(star);
    bad[1] = 1;
    bad[2] = 1;
    bad[3] = 1;
    CHECK_THROWS_WITH_AS(classify_case(bad, 0), doctest::Contains("sum"), PreconditionError);

    auto path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    VertexField<Rational> u(path);
    CHECK_THROWS_WITH_AS(classify_case(u, 1), doctest::Contains("cubic"), PreconditionError);

    VertexField<Rational> constant(star);
    CHECK_THROWS_WITH_AS(classify_case(constant, 0), doctest::Contains("constant"),
                         PreconditionError);
}

TEST_CASE("ladder colouring: rungs red, rails alternate") {
    auto ladder = expand(ladder_spec(), -6, 6, 0);
    auto h = ladder_height<Rational>(ladder);
    auto cc = classify_case_sampled(h);
    auto colouring = three_edge_colour(h, cc);
    CHECK(verify_colouring(colouring).pass);
    const Graph& g = *ladder;
    for (int e = 0; e < g.edge_count(); ++e) {
        VertexId a = g.coord(g.edges()[e].u);
        VertexId b = g.coord(g.edges()[e].v);
        if (a.layer == b.layer) {
            CHECK(colouring.by_edge[e] == EdgeColour::Red);
        } else {
            CHECK(colouring.by_edge[e] != EdgeColour::Red);
        }
    }
    // Rails clip at the window, so the leftover components are paths.
    CHECK(colouring.h_cycle_lengths.empty());
}

TEST_CASE("gamma colouring: cross edges red, the 10-cycle layers alternate") {
    auto gamma = expand(gamma::gamma_spec(), -8, 8, 0);
    auto g = gamma_closed_form(gamma);
    auto cc = classify_case_sampled(g);
    REQUIRE(cc.kind == ColourCaseKind::Case2);
    auto colouring = three_edge_colour(g, cc);
    CHECK(verify_colouring(colouring).pass);
    const Graph& gr = *gamma;
    for (int e = 0; e < gr.edge_count(); ++e) {
        bool cross = gr.coord(gr.edges()[e].u).layer != gr.coord(gr.edges()[e].v).layer;
        CHECK((colouring.by_edge[e] == EdgeColour::Red) == cross);
    }
    // Every leftover component is a full layer 10-cycle.
    CHECK(colouring.h_cycle_lengths.size() == 17);
    for (int len : colouring.h_cycle_lengths) CHECK(len == 10);
}

TEST_CASE("three-magnitude colouring equals the partition by gradient magnitude") {
    auto spec = testsupport::case3_spec();
    auto window = expand(spec, -4, 4, 0);
    auto form = periodic_harmonic<Rational>(spec, 0);
    auto g = materialize(form, window);
    auto cc = classify_case_sampled(g);
    REQUIRE(cc.kind == ColourCaseKind::Case3);
    auto colouring = three_edge_colour(g, cc);
    CHECK(verify_colouring(colouring).pass);

    // Colour classes coincide with |dg| classes.
    std::set<Rational> red_mags, blue_mags, green_mags;
    const Graph& gr = *window;
    for (int e = 0; e < gr.edge_count(); ++e) {
        Rational mag = abs(g[gr.edges()[e].u] - g[gr.edges()[e].v]);
        switch (colouring.by_edge[e]) {
            case EdgeColour::Red: red_mags.insert(mag); break;
            case EdgeColour::Blue: blue_mags.insert(mag); break;
            case EdgeColour::Green: green_mags.insert(mag); break;
        }
    }
    CHECK(red_mags.size() == 1);
    CHECK(blue_mags.size() == 1);
    CHECK(green_mags.size() == 1);
    CHECK(*red_mags.begin() == Rational(4) / 26);
    CHECK(*blue_mags.begin() == Rational(3) / 26);
    CHECK(*green_mags.begin() == Rational(1) / 26);
}

TEST_CASE("verify_colouring reports the offending vertex") {
    auto ladder = expand(ladder_spec(), -4, 4, 0);
    auto h = ladder_height<Rational>(ladder);
    auto colouring = three_edge_colour(h, classify_case_sampled(h));
    // Corrupt one rail edge at the origin to red: the origin now sees two reds.
    auto e = ladder->edge_index(ladder->origin(), ladder->require_index({1, 0}));
    REQUIRE(e.has_value());
    colouring.by_edge[e->first] = EdgeColour::Red;
    auto rep = verify_colouring(colouring);
    CHECK_FALSE(rep.pass);
    bool names_origin = false;
    for (const auto& line : rep.violations) {
        if (line.find("0,0") != std::string::npos) names_origin = true;
    }
    CHECK(names_origin);
}

TEST_CASE("colouring at radii 4, 8, 12 stays proper on ladder and gamma") {
    for (int radius : {4, 8, 12}) {
        auto ladder = expand(ladder_spec(), -radius, radius, 0);
        auto h = ladder_height<Rational>(ladder);
        CHECK(verify_colouring(three_edge_colour(h, classify_case_sampled(h))).pass);

        auto gamma = expand(gamma::gamma_spec(), -radius, radius, 0);
        auto g = gamma_closed_form(gamma);
        CHECK(verify_colouring(three_edge_colour(g, classify_case_sampled(g))).pass);
    }
}

TEST_CASE("float-mode colouring agrees with the exact one on gamma") {
    auto gamma = expand(gamma::gamma_spec(), -6, 6, 0);
    VertexField<double> g(gamma);
    for (int v = 0; v < gamma->vertex_count(); ++v) {
        VertexId id = gamma->coord(v);
        g[v] = 3.0 * id.layer + (id.pos % 2);
    }
    auto cc = classify_case_sampled(g);
    CHECK(cc.kind == ColourCaseKind::Case2);
    auto colouring = three_edge_colour(g, cc);
    CHECK(verify_colouring(colouring).pass);
}

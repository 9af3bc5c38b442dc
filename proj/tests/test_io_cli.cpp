#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "twoended/builtin_specs.hpp"
#include "twoended/electric.hpp"
#include "twoended/io.hpp"
#include "twoended/symmetry.hpp"

using namespace twoended;

namespace {

// CLI binary location, injected by ctest; the exit-code tests skip without it.
const char* cli_path() { return std::getenv("TWOENDED_CLI_PATH"); }

int cli_exit(const std::string& args) {
    std::string command = std::string(cli_path()) + " " + args + " >/dev/null 2>&1";
    int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("spec JSON round trip") {
    auto spec = gamma::gamma_spec();
    auto text = spec_to_json(spec);
    auto parsed = parse_spec_json(text);
    CHECK(parsed.layer_size == spec.layer_size);
    CHECK(parsed.intra == spec.intra);
    CHECK(parsed.cross == spec.cross);
}

TEST_CASE("malformed spec documents are rejected") {
    CHECK_THROWS_AS(parse_spec_json("not json"), SpecError);
    CHECK_THROWS_AS(parse_spec_json("{\"intra\": []}"), SpecError);
    CHECK_THROWS_AS(parse_spec_json("{\"m\": 2, \"cross\": [[0]]}"), SpecError);
    // Well-formed document, invalid spec.
    CHECK_THROWS_AS(parse_spec_json("{\"m\": 2, \"intra\": [[0,0]], \"cross\": [[0,0]]}"),
                    SpecError);
}

TEST_CASE("builtin spec lookup") {
    CHECK(spec_by_name_or_file("path").layer_size == 1);
    CHECK(spec_by_name_or_file("ladder").layer_size == 2);
    CHECK(spec_by_name_or_file("gamma").layer_size == 10);
    CHECK_THROWS_AS(spec_by_name_or_file("no-such-file.json"), SpecError);
}

TEST_CASE("DOT export labels vertices by coordinates") {
    auto g = expand(ladder_spec(), -1, 1, 0);
    auto dot = to_dot(*g);
    CHECK(dot.find("\"0,0\" -- \"0,1\"") != std::string::npos);
    CHECK(dot.find("graph G {") != std::string::npos);
    auto adjacency = adjacency_listing(*g);
    CHECK(adjacency.find("0,0:") != std::string::npos);
}

TEST_CASE("field rows serialise exact values as fractions") {
    auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    auto i = unit_current<Rational>(g, 0, 1);
    auto rows = edge_field_rows(i);
    CHECK(rows.find("3/4") != std::string::npos);
    CHECK(rows.find("1/4") != std::string::npos);

    VertexField<Rational> u(g);
    u[0] = Rational(7) / 8;
    auto vrows = vertex_field_rows(u);
    CHECK(vrows.find("0,0,7/8") != std::string::npos);
}

TEST_CASE("rational parsing round-trips and rejects junk") {
    CHECK(parse_rational("3/4") == Rational(3) / 4);
    CHECK(parse_rational("-17") == -17);
    CHECK(parse_rational("6/26") == Rational(3) / 13);
    CHECK_THROWS_AS(parse_rational("pi"), SpecError);
    CHECK_THROWS_AS(parse_rational("1/0"), SpecError);
}

TEST_CASE("CLI exit-code contract: 0 pass, 1 verification failure, 2 usage error") {
    if (!cli_path()) {
        MESSAGE("TWOENDED_CLI_PATH not set; skipping CLI contract checks");
        return;
    }
    CHECK(cli_exit("verify") == 0);
    CHECK(cli_exit("gamma --check claim2") == 0);
    CHECK(cli_exit("definitely-not-a-subcommand") == 2);
    CHECK(cli_exit("gamma --check claim99") == 2);
    CHECK(cli_exit("build --spec /nonexistent/spec.json") == 2);

    // Disconnected expansion: a malformed spec document is a usage error.
    std::string path = "/tmp/twoended_disconnected_spec.json";
    {
        std::ofstream out(path);
        out << "{\"m\": 2, \"cross\": [[0,0],[1,1]]}";
    }
    CHECK(cli_exit("build --spec " + path) == 2);
    std::remove(path.c_str());

    // A well-formed spec loaded from a file runs end to end.
    std::string good = "/tmp/twoended_ladder_spec.json";
    {
        std::ofstream out(good);
        out << spec_to_json(ladder_spec());
    }
    CHECK(cli_exit("color3 --spec " + good + " --radius 4") == 0);
    CHECK(cli_exit("saw --spec " + good + " --max 6") == 0);
    std::remove(good.c_str());
}

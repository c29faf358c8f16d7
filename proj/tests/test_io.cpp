#include <doctest.h>

#include <sstream>

#include "latpath/generators.hpp"
#include "latpath/io.hpp"
#include "test_util.hpp"

using namespace latpath;
using lptest::qv;

TEST_CASE("H-rep files round trip") {
    Polytope p5 = lptest::pentagon();
    std::ostringstream out;
    write_hrep(out, p5.hrep());
    std::istringstream in(out.str());
    HRep back = parse_hrep(in);
    CHECK(back.n == 2);
    REQUIRE(back.rows.size() == 5);
    for (std::size_t r = 0; r < back.rows.size(); ++r)
        CHECK(cmp(back.rows[r], p5.hrep().rows[r]) == 0);
}

TEST_CASE("V-rep files round trip with rational coordinates") {
    VRep v;
    v.n = 2;
    v.vertices = {qv({0, 0}), {Rat(1, 2), Rat(1)}, qv({1, 0})};
    std::ostringstream out;
    write_vrep(out, v);
    CHECK(out.str() == "2 3\n0 0\n1/2 1\n1 0\n");
    std::istringstream in(out.str());
    VRep back = parse_vrep(in);
    CHECK(back.vertices == v.vertices);
    CHECK(!back.box_k.has_value());  // 1/2 is not a lattice coordinate
}

TEST_CASE("H-rep parser rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_hrep(in), ParseError);
    };
    reject("2\n");                       // short header
    reject("2 1\n1 0\n");                // short row
    reject("2 1\n1 0 1 7\n");            // long row
    reject("2 1\n1 0.5 1\n");            // non-integral entry
    reject("2 1\n1 1/2 1\n");            // rational entry
    reject("2 2\n1 0 1\n");              // missing row
    reject("2 1\n1 0 1\nextra\n");       // trailing data
    reject("2 1\r\n1 0 1\r\n");          // CRLF endings
    reject("0 0\n");                     // n out of range
}

TEST_CASE("objective files") {
    Objective o{qv({1, -2}), {qv({0, 1}), {Rat(1, 3), Rat(0)}}};
    std::ostringstream out;
    write_objective(out, o);
    CHECK(out.str() == "2 2\n1 -2\n0 1\n1/3 0\n");
    std::istringstream in(out.str());
    Objective back = parse_objective(in);
    CHECK(back.primary == o.primary);
    CHECK(back.perturbations == o.perturbations);

    std::istringstream bad("2 1\n1 2\n");  // declared one perturbation, gave none
    CHECK_THROWS_AS(parse_objective(bad), ParseError);
}

TEST_CASE("signed permutation files") {
    std::istringstream in("-2 1 3\n");
    SignedPermutation s = parse_sigma(in);
    CHECK(s.sigma == std::vector<int>{-2, 1, 3});
    std::ostringstream out;
    write_sigma(out, s);
    CHECK(out.str() == "-2 1 3\n");

    std::istringstream bad("1 1\n");
    CHECK_THROWS_AS(parse_sigma(bad), ParseError);
}

TEST_CASE("manifests skip comments and blank lines") {
    std::vector<GenSpec> specs = parse_manifest(
        "# corpus\n"
        "family=cube,n=2,k=1,seed=1\n"
        "\n"
        "family=simplex,n=3,k=2,seed=4\n");
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].family == Family::cube);
    CHECK(specs[1].family == Family::simplex);
    CHECK_THROWS_AS(parse_manifest("family=cube,n=2,k=1,seed=1\r\n"), ParseError);
}

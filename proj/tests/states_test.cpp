#include <doctest.h>

#include <numbers>
#include <stdexcept>

#include "mzi/states.hpp"

using namespace mzi;

TEST_CASE("parse_state accepts the four kinds") {
    const PortState c = parse_state("coh:10:0");
    CHECK(c.kind == PortState::Kind::coherent);
    CHECK(c.amplitude.magnitude == 10.0);
    CHECK(c.amplitude.phase == 0.0);

    const PortState sc = parse_state("sqzcoh:10:0:0.75:3.141592653589793");
    CHECK(sc.kind == PortState::Kind::squeezed_coherent);
    CHECK(sc.squeeze.factor == 0.75);
    CHECK(sc.squeeze.phase == doctest::Approx(std::numbers::pi).epsilon(1e-15));

    CHECK(parse_state("vac").kind == PortState::Kind::vacuum);
    CHECK(parse_state("sqz:1.2:0").kind == PortState::Kind::squeezed_vacuum);
}

TEST_CASE("parse_state error paths") {
    CHECK_THROWS_AS(parse_state("coh:-1:0"), std::domain_error);
    CHECK_THROWS_AS(parse_state("sqz:-0.1:0"), std::domain_error);
    CHECK_THROWS_AS(parse_state("coh:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state("coh:1:2:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state("coh:x:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state("thermal:1:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state(""), std::invalid_argument);
}

TEST_CASE("degenerate parameters collapse to the simpler kind") {
    CHECK(PortState::coherent(ComplexAmplitude(0.0, 1.0)).kind == PortState::Kind::vacuum);
    CHECK(PortState::squeezed_vacuum(SqueezeParam(0.0, 1.0)).kind == PortState::Kind::vacuum);
    CHECK(PortState::squeezed_coherent(ComplexAmplitude(1.0, 0.0), SqueezeParam(0.0, 0.0)).kind ==
          PortState::Kind::coherent);
    CHECK(PortState::squeezed_coherent(ComplexAmplitude(0.0, 0.0), SqueezeParam(0.5, 0.0)).kind ==
          PortState::Kind::squeezed_vacuum);
}

TEST_CASE("phases normalize into [0, 2pi)") {
    const double two_pi = 2.0 * std::numbers::pi;
    CHECK(ComplexAmplitude(1.0, -0.5).phase == doctest::Approx(two_pi - 0.5));
    CHECK(ComplexAmplitude(1.0, two_pi + 0.25).phase == doctest::Approx(0.25));
    CHECK(ComplexAmplitude(1.0, two_pi).phase == 0.0);
}

TEST_CASE("to_string round-trips through parse_state") {
    const PortState p = PortState::squeezed_coherent(ComplexAmplitude(1.25, 0.7), SqueezeParam(0.6, 5.1));
    const PortState q = parse_state(to_string(p));
    CHECK(q.kind == p.kind);
    CHECK(q.amplitude.magnitude == p.amplitude.magnitude);
    CHECK(q.amplitude.phase == p.amplitude.phase);
    CHECK(q.squeeze.factor == p.squeeze.factor);
    CHECK(q.squeeze.phase == p.squeeze.phase);
}

#include <gtest/gtest.h>

#include <random>

#include "kanforge/io/json_io.hpp"
#include "kanforge/kanforge.hpp"
#include "support/random_complexes.hpp"

using namespace kanforge;
using io::json;

namespace {

const char* circle_text = R"({"name": "S1", "cells": {"0": ["v"], "1": [{"id": "a", "faces": [{"base": "v", "degens": []}, {"base": "v"}]}]}})";

std::string parse_error_of(const std::string& text)
{
    try {
        io::complex_from_json(json::parse(text));
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(JsonIo, CircleFile)
{
    const auto f = io::complex_from_json(json::parse(circle_text));
    EXPECT_EQ(f.complex.counts(), (std::vector<int>{1, 1}));
    EXPECT_EQ(f.complex.name(), "S1");
    EXPECT_FALSE(f.basepoint);
    const auto H = homology(chain_complex(f.complex));
    EXPECT_EQ(H[1].group().to_string(), "Z");
}

TEST(JsonIo, FieldContextInErrors)
{
    const auto bad_degens = R"({"cells": {"0": ["v"], "1": [{"id": "a", "faces": [{"base": "v"}, {"base": "v"}]}],
        "2": [{"id": "s", "faces": [{"base": "v", "degens": [0, 1]}, {"base": "a"}, {"base": "a"}]}]}})";
    const auto msg = parse_error_of(bad_degens);
    EXPECT_NE(msg.find("cells.2[0].faces[0].degens"), std::string::npos) << msg;
    EXPECT_NE(parse_error_of(R"({"cells": {"0": ["v"], "1": [{"id": "a", "faces": [{"base": "w"}, {"base": "v"}]}]}})")
                  .find("cells.1[0].faces[0].base"),
              std::string::npos);
    EXPECT_NE(parse_error_of(R"({"cells": {"0": ["v"], "1": [{"id": "a", "faces": [{"base": "v"}]}]}})").find("faces"),
              std::string::npos);
    EXPECT_NE(parse_error_of(R"({"cells": {"x": []}})").find("dimension key"), std::string::npos);
    EXPECT_NE(parse_error_of(R"({"name": "x"})").find("cells"), std::string::npos);
    // identity violations are forwarded from validation
    EXPECT_THROW(io::complex_from_json(json::parse(R"({"cells": {"0": ["u", "v"], "1": [{"id": "a", "faces": [{"base": "v"}, {"base": "u"}]}],
        "2": [{"id": "s", "faces": [{"base": "a"}, {"base": "a"}, {"base": "a"}]}]}})")),
                 ValidationError);
}

TEST(JsonIo, RoundTrips)
{
    auto S = std::make_shared<const Presentation>(circle());
    std::vector<Presentation> samples = {circle(), klein_bottle(), standard_simplex(3), horn(3, 1),
                                         product(circle(), circle()), wbar_truncated(FiniteGroup::cyclic(3), 3),
                                         *w_truncated(FiniteGroup::cyclic(2), 3).total};
    std::mt19937 rng(51);
    for (int t = 0; t < 30; ++t)
        samples.push_back(fixtures::random_presentation(rng));
    for (const auto& K : samples) {
        const auto text = io::complex_to_json(K).dump(2);
        const auto back = io::complex_from_json(json::parse(text)).complex;
        EXPECT_EQ(back, K) << K.name();
        EXPECT_EQ(io::complex_to_json(back).dump(2), text);
    }
    const auto with_bp = io::complex_from_json(io::complex_to_json(circle(), "v"));
    EXPECT_EQ(with_bp.basepoint, std::optional<std::string>("v"));
    EXPECT_THROW(io::complex_from_json(io::complex_to_json(circle(), "a")), ParseError);
}

TEST(JsonIo, GroupsTwistingsAndCocycles)
{
    EXPECT_EQ(std::get<FiniteGroup>(io::group_from_name("z2xz2")).order(), 4);
    EXPECT_EQ(std::get<FiniteGroup>(io::group_from_name("S3")).order(), 6);
    EXPECT_TRUE(std::holds_alternative<PresentedGroup>(io::group_from_name("Z^2")));
    EXPECT_THROW(io::group_from_name("q8"), ParseError);

    auto S = std::make_shared<const Presentation>(circle());
    const auto tw = io::twisting_from_json(json::parse(R"({"group": {"kind": "finite", "name": "z2"}, "labels": {"a": "t"}})"), S);
    const auto& tau = std::get<TwistingFunction<FiniteGroup>>(tw);
    EXPECT_EQ(tau.labels(), (std::vector<int>{1}));
    EXPECT_THROW(io::twisting_from_json(json::parse(R"({"group": {"kind": "finite", "name": "z2"}, "labels": {"v": "t"}})"), S),
                 ParseError);

    const auto c = io::cocycle_from_json(json::parse(R"({"degree": 1, "coeff": "z2", "values": [{"args": ["t"], "value": 1}]})"),
                                         tau.group());
    EXPECT_FALSE(characteristic_class(tau, std::get<GroupCochain>(c)).is_zero());

    const auto ptw = io::twisting_from_json(
        json::parse(R"({"group": {"kind": "presented", "name": "heisenberg"}, "labels": {"a": "x y"}})"), S);
    const auto& ptau = std::get<TwistingFunction<PresentedGroup>>(ptw);
    const auto hom = io::cocycle_from_json(json::parse(R"({"degree": 1, "coeff": "z", "generators": [0, 1, 0]})"), ptau.group());
    EXPECT_FALSE(characteristic_class(ptau, std::get<PresentedHomomorphism>(hom)).is_zero());
    EXPECT_THROW(io::cocycle_from_json(json::parse(R"({"degree": 2, "coeff": "z", "generators": []})"), ptau.group()),
                 Unsupported);
    EXPECT_EQ(io::coefficients_from_name("z12"), Coefficients::mod(12));
    EXPECT_THROW(io::coefficients_from_name("q"), ParseError);
}

TEST(JsonIo, MapFiles)
{
    const auto f = wrap_map(3);
    const auto back = io::map_from_json(io::map_to_json(f));
    EXPECT_EQ(back, f);
}

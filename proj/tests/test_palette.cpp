#include <doctest.h>

#include <sstream>

#include "vcs/errors.hpp"
#include "vcs/palette.hpp"

using namespace vcs;

TEST_CASE("default palette is red, green, blue")
{
    const Palette p = default_palette(3);
    CHECK(p.model == Palette::Model::additive);
    REQUIRE(p.size() == 3);
    CHECK(p.entry(1) == PaletteEntry{1, 255, 0, 0});
    CHECK(p.entry(2) == PaletteEntry{2, 0, 255, 0});
    CHECK(p.entry(3) == PaletteEntry{3, 0, 0, 255});
    CHECK(default_palette(2).size() == 2);
    CHECK_THROWS_AS(default_palette(0), ParameterError);
    CHECK_THROWS_AS(default_palette(4), ParameterError);
    CHECK_THROWS_AS(p.entry(4), ParameterError);
}

TEST_CASE("color lookup is exact")
{
    const Palette p = default_palette(3);
    CHECK(p.id_for(255, 0, 0) == 1);
    CHECK(p.id_for(0, 0, 255) == 3);
    CHECK_FALSE(p.id_for(254, 0, 0).has_value());
    CHECK_FALSE(p.id_for(0, 0, 0).has_value());
}

TEST_CASE("model conversion flips every component")
{
    const Palette p = default_palette(3);
    const Palette q = p.converted();
    CHECK(q.model == Palette::Model::subtractive);
    CHECK(q.entry(1) == PaletteEntry{1, 0, 255, 255});
    CHECK(q.converted() == p);
}

TEST_CASE("validation rejects reserved and duplicate colors")
{
    Palette p;
    p.entries = {{1, 10, 20, 30}, {2, 10, 20, 30}};
    CHECK_THROWS_AS(validate(p), ParameterError);
    p.entries = {{1, 0, 0, 0}};
    CHECK_THROWS_AS(validate(p), ParameterError);
    p.entries = {{1, 255, 255, 255}};
    CHECK_THROWS_AS(validate(p), ParameterError);
    p.entries = {{2, 10, 20, 30}};
    CHECK_THROWS_AS(validate(p), ParameterError); // ids must start at 1
    p.entries = {{1, 10, 20, 300}};
    CHECK_THROWS_AS(validate(p), ParameterError);
    p.entries = {{1, 10, 20, 30}, {2, 11, 20, 30}};
    CHECK_NOTHROW(validate(p));
}

TEST_CASE("palette text round-trips")
{
    const Palette p = default_palette(3);
    const std::string text = palette_to_text(p);
    CHECK(text == "model additive\n1 255 0 0\n2 0 255 0\n3 0 0 255\n");
    std::istringstream in(text);
    CHECK(palette_from_stream(in, 3) == p);

    std::istringstream subtractive("model subtractive\n1 0 255 255\n");
    CHECK(palette_from_stream(subtractive, 1).model == Palette::Model::subtractive);

    std::istringstream bad_model("model vivid\n1 255 0 0\n");
    CHECK_THROWS_AS(palette_from_stream(bad_model, 1), ParseError);
    std::istringstream short_list("model additive\n1 255 0 0\n");
    CHECK_THROWS_AS(palette_from_stream(short_list, 2), ParseError);
    std::istringstream no_header("1 255 0 0\n");
    CHECK_THROWS_AS(palette_from_stream(no_header, 1), ParseError);
}

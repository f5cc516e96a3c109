#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>

#include <hotelcoda/config.hpp>

using namespace hotelcoda;

namespace {

ToolConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

} // namespace

TEST(Config, ShippedDefaultMatchesBuiltIns) {
    auto cfg = load_config(std::filesystem::path(HOTELCODA_SOURCE_DIR) / "config" / "default.conf");
    ASSERT_TRUE(cfg.graph);
    EXPECT_EQ(cfg.graph->edges(), default_hotel_graph().edges());
    EXPECT_TRUE(cfg.synth == SynthConfig{});
}

TEST(Config, WriteThenParseIsIdentity) {
    SynthConfig synth;
    synth.n = 300;
    synth.seed = 12345678901234ull;
    synth.urban = 0.3;
    synth.coefficients(2, 5) = -1.0 / 3.0;
    synth.encoding = {RestaurantMode::share, SeasonalMode::days};
    std::ostringstream out;
    write_config(out, default_hotel_graph(), synth);
    auto back = parse(out.str());
    EXPECT_TRUE(back.synth == synth);
    EXPECT_EQ(back.graph->edges(), default_hotel_graph().edges());
}

TEST(Config, BareEdgeList) {
    auto cfg = parse("# two ratios\nA: x/y\nB : z / y\n");
    ASSERT_TRUE(cfg.graph);
    ASSERT_EQ(cfg.graph->edges().size(), 2u);
    EXPECT_EQ(cfg.graph->edges()[1], LogRatioSpec("B", "z", "y"));
    EXPECT_TRUE(cfg.synth == SynthConfig{});
}

TEST(Config, ExtraNodesAndNoGraph) {
    auto cfg = parse("[graph]\nA: x/y\nnodes: w\n");
    EXPECT_EQ(cfg.graph->nodes().size(), 3u);
    EXPECT_FALSE(parse("[synth]\nn = 40\n").graph);
}

TEST(Config, CoefficientColumnsInAnyOrder) {
    const auto& keys = predictor_keys();
    std::string text = "[coefficients]\nresponse";
    for (std::size_t c = keys.size(); c-- > 0;) text += " " + keys[c];
    text += "\n";
    for (const char* r : {"P1", "P2", "P3", "P4"}) {
        text += r;
        for (std::size_t c = keys.size(); c-- > 0;) text += " " + std::to_string(c);
        text += "\n";
    }
    auto cfg = parse(text);
    for (int j = 0; j < 4; ++j)
        for (int c = 0; c < 12; ++c) EXPECT_EQ(cfg.synth.coefficients(j, c), c);
}

TEST(Config, Errors) {
    for (const char* bad : {
             "[weird]\n",
             "A x/y\n",
             "A: x\n",
             "A: x/x\n",
             "A: x/y\nA: y/z\n",
             "[synth]\nn 40\n",
             "[synth]\nn = forty\n",
             "[synth]\nstrategy = 0.5 0.5\n",
             "[synth]\ncolour = red\n",
             "[synth]\nseasonal_mode = weekly\n",
             "[coefficients]\nP1 1 2 3\n",
             "[coefficients]\nresponse intercept\n",
         }) {
        EXPECT_THROW(parse(bad), InvalidConfig) << bad;
    }
    const auto& keys = predictor_keys();
    std::string partial = "[coefficients]\nresponse";
    for (const auto& k : keys) partial += " " + k;
    partial += "\nP1 0 0 0 0 0 0 0 0 0 0 0 0\n";
    EXPECT_THROW(parse(partial), InvalidConfig);
    EXPECT_THROW(load_config("missing.conf"), IoError);
}

TEST(Config, ErrorsNameTheLine) {
    try {
        parse("[synth]\nn = 40\nurban = x\n");
        FAIL();
    } catch (const InvalidConfig& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

#include <gtest/gtest.h>

#include <thread>

#include <httplib.h>

#include "rosette/error.hpp"
#include "rosette/presets.hpp"
#include "rosette/service.hpp"
#include "rosette/svg.hpp"

using namespace rosette;
using nlohmann::json;

TEST(ServeRenderTest, StarRequest) {
    const ConfigDoc doc = parse_config("mode=star\nN=8\nS=3\nradii=51,70,172");
    const RenderResponse out = serve_render(doc);
    EXPECT_FALSE(out.svg.empty());
    EXPECT_EQ(out.segment_count, 32u);
    EXPECT_TRUE(out.warnings.empty());
}

TEST(ServeRenderTest, MatchesDirectRender) {
    const ConfigDoc& doc = find_preset("table1-part1").config;
    EXPECT_EQ(serve_render(doc).svg, render_svg(generate(doc.pattern), doc.render));
}

TEST(ServeRenderTest, InvalidRequestNamesField) {
    ConfigDoc doc = find_preset("table1-part1").config;
    doc.pattern.s = 1;
    doc.pattern.radii = {1};
    try {
        serve_render(doc);
        FAIL();
    } catch (const ValidationError& e) {
        EXPECT_EQ(e.field(), "S");
    }
}

TEST(ServeRenderTest, Warnings) {
    ConfigDoc doc = parse_config("mode=star\nN=6\nS=2\nradii=2,5\nspecial=2\nalpha=0\nspr=0");
    const RenderResponse out = serve_render(doc);
    EXPECT_EQ(out.segment_count, 12u);
    ASSERT_EQ(out.warnings.size(), 1u);
    EXPECT_NE(out.warnings[0].find("zero-length"), std::string::npos);

    doc = parse_config("mode=star\nN=6\nS=2\nradii=2,5\nspecial=2\nalpha=10\nspr=-3");
    EXPECT_NE(serve_render(doc).warnings.at(0).find("outside"), std::string::npos);
}

TEST(ServeRenderTest, TilingSegmentCountIsDeduplicated) {
    const ConfigDoc& doc = find_preset("table3-3").config;
    EXPECT_EQ(serve_render(doc).segment_count, tile_plane(doc.tiling_spec()).size());
}

TEST(ConfigJsonTest, RoundTripsPresets) {
    for (const Preset& p : list_presets()) EXPECT_EQ(config_from_json(config_to_json(p.config)), p.config) << p.name;
}

TEST(ConfigJsonTest, Errors) {
    auto field_of = [](const json& body) {
        try {
            config_from_json(body);
        } catch (const ValidationError& e) {
            return e.field();
        }
        return std::string("<none>");
    };
    const json good = {{"mode", "star"}, {"N", 8}, {"S", 2}, {"radii", {1, 2}}};
    EXPECT_EQ(field_of(good), "<none>");
    json bad = good;
    bad["S"] = 1;
    bad["radii"] = {1};
    EXPECT_EQ(field_of(bad), "S");
    bad = good;
    bad["N"] = 8.5;
    EXPECT_EQ(field_of(bad), "N");
    bad = good;
    bad["colour"] = "red";
    EXPECT_EQ(field_of(bad), "colour");
    bad = good;
    bad.erase("radii");
    EXPECT_EQ(field_of(bad), "radii");
    bad = good;
    bad["radii"] = "1,2";
    EXPECT_EQ(field_of(bad), "radii");
    bad = good;
    bad["special"] = nullptr;
    EXPECT_EQ(field_of(bad), "<none>");
    EXPECT_EQ(field_of(json::array()), "");
}

class HttpServiceTest : public ::testing::Test {
protected:
    void SetUp() override {
        port_ = service_.bind_to_any_port("127.0.0.1");
        ASSERT_GT(port_, 0);
        thread_ = std::thread([this] { service_.listen_after_bind(); });
        service_.wait_until_ready();
    }

    void TearDown() override {
        service_.stop();
        if (thread_.joinable()) thread_.join();
    }

    httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

    RenderService service_;
    std::thread thread_;
    int port_ = -1;
};

TEST_F(HttpServiceTest, PostRenderMatchesLibrary) {
    const Preset& preset = find_preset("table1-part1");
    auto res = client().Post("/render", config_to_json(preset.config).dump(), "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    const json body = json::parse(res->body);
    EXPECT_EQ(body["segment_count"], 32);
    EXPECT_EQ(body["svg"].get<std::string>(), render_config(preset.config).svg);
    EXPECT_TRUE(body["warnings"].is_array());
}

TEST_F(HttpServiceTest, ValidationErrorIs400WithField) {
    const json req = {{"mode", "star"}, {"N", 8}, {"S", 1}, {"radii", {1}}};
    auto res = client().Post("/render", req.dump(), "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);
    const json body = json::parse(res->body);
    EXPECT_EQ(body["field"], "S");
    EXPECT_TRUE(body["reason"].is_string());
}

TEST_F(HttpServiceTest, MalformedJsonIs400) {
    auto res = client().Post("/render", "{not json", "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);
    EXPECT_TRUE(json::parse(res->body).contains("reason"));
}

TEST_F(HttpServiceTest, GetPresets) {
    auto res = client().Get("/presets");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    const json body = json::parse(res->body);
    ASSERT_EQ(body.size(), 7u);
    EXPECT_EQ(body[0]["name"], "table1-part1");
    EXPECT_FALSE(body[0]["provenance"].get<std::string>().empty());
    EXPECT_EQ(config_from_json(body[5]["config"]), find_preset("table3-2").config);
}

TEST_F(HttpServiceTest, ConcurrentRequestsAreIndependent) {
    std::vector<std::thread> threads;
    std::vector<int> counts(6, -1);
    for (int k = 0; k < 6; ++k)
        threads.emplace_back([&, k] {
            const json req = {{"mode", "star"}, {"N", 3 + k}, {"S", 2}, {"radii", {1, 2}}};
            auto res = client().Post("/render", req.dump(), "application/json");
            if (res && res->status == 200) counts[k] = json::parse(res->body)["segment_count"].get<int>();
        });
    for (auto& t : threads) t.join();
    for (int k = 0; k < 6; ++k) EXPECT_EQ(counts[k], 2 * (3 + k));
}

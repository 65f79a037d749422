#include <gtest/gtest.h>

#include <random>

#include "docarl/geometry/anchor_mapping.hpp"
#include "docarl/similarity/gestalt.hpp"
#include "docarl/templates/registry.hpp"
#include "docarl/templates/template.hpp"
#include "test_support.hpp"

using namespace docarl;
using docarl::testing::registry;

namespace {

nlohmann::json minimal_template() {
  return nlohmann::json::parse(R"({
    "code": "T",
    "identifying_region": {"code": "DOCUMENT_IDENTITY_REGION", "isx": 10, "isy": 10, "iex": 110, "iey": 30,
                           "osx": 5, "osy": 5, "oex": 115, "oey": 35, "identifying_text": "HELLO"},
    "data_regions": [{"code": "A", "osx": 10, "osy": 50, "oex": 200, "oey": 70},
                     {"code": "B", "osx": 10, "osy": 80, "oex": 200, "oey": 100}]
  })");
}

Errc code_of(const nlohmann::json& j) {
  try {
    parse_template(j);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace

TEST(Template, ParsesAndDefaultsFieldOrder) {
  const auto t = parse_template(minimal_template());
  EXPECT_EQ(t.code, "T");
  EXPECT_EQ(t.identifying_region.identified_box, Box(10, 10, 110, 30));
  EXPECT_EQ(t.field_order, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(t.region("B").region_box, Box(10, 80, 200, 100));
  EXPECT_THROW(t.region("C"), Error);
  EXPECT_EQ(parse_template(template_to_json(t)).data_regions.size(), 2u);
}

TEST(Template, SchemaErrors) {
  auto j = minimal_template();
  j["extra"] = 1;
  EXPECT_EQ(code_of(j), Errc::SchemaError);

  j = minimal_template();
  j["identifying_region"]["iex"] = 10;
  EXPECT_EQ(code_of(j), Errc::DegenerateAnchor);

  j = minimal_template();
  j["data_regions"][1]["code"] = "A";
  EXPECT_EQ(code_of(j), Errc::SchemaError);

  j = minimal_template();
  j["data_regions"][0]["osx"] = "ten";
  EXPECT_EQ(code_of(j), Errc::SchemaError);

  j = minimal_template();
  j["field_order"] = {"A", "Z"};
  EXPECT_EQ(code_of(j), Errc::SchemaError);

  j = minimal_template();
  j["data_regions"][0]["oex"] = 1;
  EXPECT_EQ(code_of(j), Errc::SchemaError);
}

TEST(Registry, LoadsAllShippedTemplates) {
  const auto& reg = registry();
  EXPECT_EQ(reg.size(), std::size(kDocumentClasses));
  for (const auto& cls : kDocumentClasses) {
    const auto& t = reg.registry_for(cls.id);
    EXPECT_EQ(t.code, cls.template_code);
    ASSERT_EQ(t.field_order.size(), cls.field_order.size());
    const Box canvas(0, 0, cls.native_width, cls.native_height);
    EXPECT_TRUE(canvas.contains(t.identifying_region.identified_box)) << cls.id;
    for (const auto& r : t.data_regions) EXPECT_TRUE(canvas.contains(r.region_box)) << cls.id << " " << r.code;
  }
  EXPECT_EQ(reg.registry_for(kPan).identifying_region.identifying_text, "INCOME TAX DEPARTMENT");
  EXPECT_THROW(reg.registry_for("nope"), Error);
}

TEST(Registry, RejectsForeignFieldOrder) {
  TemplateRegistry reg;
  EXPECT_THROW(reg.add(kPan, parse_template(minimal_template())), Error);
}

TEST(AnchorMapping, IdentityIsExact) {
  for (const auto& cls : kDocumentClasses) {
    const auto& t = registry().registry_for(cls.id);
    const Box& anchor = t.identifying_region.identified_box;
    const AnchorCorrespondence corr(anchor, anchor);
    for (const auto& r : t.data_regions) {
      EXPECT_EQ(map_region(corr, r.region_box), r.region_box) << cls.id << " " << r.code;
      EXPECT_EQ(map_region_similar_triangles(corr, r.region_box), r.region_box);
    }
  }
}

TEST(AnchorMapping, EquivariantUnderScaleAndTranslate) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coord(0, 3000), size(5, 1500), scale(0.05, 8), shift(-2000, 2000);
  for (int i = 0; i < 1000; ++i) {
    const double ax = coord(rng), ay = coord(rng);
    const Box anchor(ax, ay, ax + size(rng), ay + size(rng));
    const double rx = coord(rng), ry = coord(rng);
    const Box region(rx, ry, rx + size(rng), ry + size(rng));
    const double sx = scale(rng), sy = scale(rng), tx = shift(rng), ty = shift(rng);
    const AnchorCorrespondence corr(anchor, anchor.scaled_translated(sx, sy, tx, ty));
    const Box want = region.scaled_translated(sx, sy, tx, ty);
    const Box got = map_region(corr, region);
    EXPECT_LE(rel_err(got.x0(), want.x0()), 1e-9);
    EXPECT_LE(rel_err(got.y0(), want.y0()), 1e-9);
    EXPECT_LE(rel_err(got.x1(), want.x1()), 1e-9);
    EXPECT_LE(rel_err(got.y1(), want.y1()), 1e-9);
  }
}

TEST(AnchorMapping, BothFormsAgree) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0, 3000), w(1, 1500);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double ax = u(rng), ay = u(rng), fx = u(rng), fy = u(rng), rx = u(rng), ry = u(rng);
    const AnchorCorrespondence corr(Box(ax, ay, ax + w(rng), ay + w(rng)), Box(fx, fy, fx + w(rng), fy + w(rng)));
    const Box region(rx, ry, rx + w(rng), ry + w(rng));
    const Box a = map_region(corr, region), b = map_region_similar_triangles(corr, region);
    worst = std::max({worst, std::abs(a.x0() - b.x0()), std::abs(a.y0() - b.y0()), std::abs(a.x1() - b.x1()),
                      std::abs(a.y1() - b.y1())});
  }
  EXPECT_LT(worst, 1e-6);
}

TEST(AnchorMapping, HandWorkedExample) {
  // Template anchor 100x20 at (10,10); found at double size shifted to (50,100).
  const AnchorCorrespondence corr(Box(10, 10, 110, 30), Box(50, 100, 250, 140));
  const Box mapped = map_region(corr, Box(10, 50, 200, 70));
  EXPECT_DOUBLE_EQ(mapped.x0(), 50);
  EXPECT_DOUBLE_EQ(mapped.y0(), 180);
  EXPECT_DOUBLE_EQ(mapped.x1(), 430);
  EXPECT_DOUBLE_EQ(mapped.y1(), 220);
}

TEST(AnchorMapping, DegenerateAndCollapsed) {
  EXPECT_THROW(AnchorCorrespondence(Box(0, 0, 0, 10), Box(0, 0, 5, 5)), Error);
  const AnchorCorrespondence flat(Box(0, 0, 10, 10), Box(5, 5, 5, 5));
  const Box m = map_region(flat, Box(20, 20, 40, 40));
  EXPECT_EQ(m.area(), 0.0);
  try {
    clamp_to_image(Box(500, 500, 600, 600), 100, 100);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyCrop);
  }
  EXPECT_EQ(clamp_to_image(Box(-5, -5, 50, 200), 100, 100), Box(0, 0, 50, 100));
}

TEST(Similarity, MatchesSequenceMatcherRatios) {
  // Expected values come from Python's difflib.SequenceMatcher(None, a, b, autojunk=False).ratio().
  const struct {
    const char* a;
    const char* b;
    double ratio;
  } cases[] = {
      {"INCOME TAX DEPARTMENT", "INCOME TAX DEPARTMENT", 1.0},
      {"INCOME TAX DEPARTMENT", "INCOME TAX DEPT", 0.8333333333333334},
      {"Government of India", "Govemment of lndia", 0.8648648648648649},
      {"abcd", "bcda", 0.75},
      {"", "", 1.0},
      {"abc", "", 0.0},
      {"ELECTION COMMISSION OF INDIA", "ELECTION COMMISION OF INDIA", 0.9818181818181818},
      {"S\xC3\xA3o Paulo", "Sao Paulo", 0.8888888888888888},
      {"abxcd", "abcd", 0.8888888888888888},
      {"kitten", "sitting", 0.6153846153846154},
  };
  for (const auto& c : cases) {
    EXPECT_NEAR(similarity(c.a, c.b), c.ratio, 1e-12) << c.a << " / " << c.b;
    EXPECT_NEAR(similarity(c.b, c.a), c.ratio, 1e-12);
  }
  EXPECT_TRUE(check_similarity("INCOME TAX DEPARTMENT", "INCOME TAX DEPT", 0.8));
  EXPECT_FALSE(check_similarity("kitten", "sitting", 0.8));
}

TEST(Similarity, InvalidUtf8DoesNotCrash) {
  const std::string bad = "ab\xFF\xFE";
  EXPECT_NEAR(similarity(bad, bad), 1.0, 0);
  EXPECT_LT(similarity(bad, "ab"), 1.0);
}

#include <gtest/gtest.h>

#include <memory>

#include "docarl/pipeline/oracle.hpp"
#include "docarl/pipeline/pipeline.hpp"
#include "docarl/pipeline/subprocess.hpp"
#include "docarl/render/augment.hpp"
#include "docarl/render/build.hpp"
#include "test_support.hpp"

using namespace docarl;
using docarl::testing::registry;
using docarl::testing::TempDir;

namespace {

struct Rendered {
  DocumentRecord record;
  std::vector<Variant> variants;
};

Rendered render_variants(const DocumentRecord& rec) {
  BaseRender base = render_base(rec, registry().registry_for(rec.class_id));
  const std::string stem = base_stem(rec.class_id, rec.serial);
  auto variants = fanout(base.image, base.manifest, stem);
  for (auto& v : variants) v.manifest.content_hash = content_hash(v.image);
  return {rec, std::move(variants)};
}

std::shared_ptr<ManifestIndex> index_of(const std::vector<Variant>& variants) {
  auto idx = std::make_shared<ManifestIndex>();
  for (const auto& v : variants) idx->add(v.manifest);
  return idx;
}

class StubDetector final : public DetectorBackend {
 public:
  explicit StubDetector(std::vector<DetectionResult> out) : out_(std::move(out)) {}
  std::vector<DetectionResult> detect(const ImageRef&) const override { return out_; }

 private:
  std::vector<DetectionResult> out_;
};

}  // namespace

TEST(Identify, KeepsHighestConfidenceEarliestOnTies) {
  const StubDetector det({DetectionResult("pan_v1", Box(0, 0, 1, 1), 0.4),
                          DetectionResult("dl_v1_p1", Box(0, 0, 1, 1), 0.9),
                          DetectionResult("adhaar_v1_p1", Box(0, 0, 1, 1), 0.9)});
  const ImageRef img = make_image_ref(cv::Mat(2, 2, CV_8UC1, cv::Scalar(0)));
  EXPECT_EQ(identify(img, det).class_id, "dl_v1_p1");
  const StubDetector none({});
  EXPECT_THROW(identify(img, none), Error);
}

TEST(FindAnchor, BestAboveThreshold) {
  const std::vector<OcrSpan> spans{OcrSpan(Box(0, 0, 10, 10), "INCOME TAX DEPT", 1.0),
                                   OcrSpan(Box(0, 20, 10, 30), "INCOME TAX DEPARTMENT", 1.0),
                                   OcrSpan(Box(0, 40, 10, 50), "noise", 1.0)};
  EXPECT_EQ(find_anchor(spans, "INCOME TAX DEPARTMENT"), Box(0, 20, 10, 30));
  EXPECT_EQ(find_anchor({spans[0]}, "INCOME TAX DEPARTMENT"), Box(0, 0, 10, 10));
  try {
    find_anchor({spans[2]}, "INCOME TAX DEPARTMENT");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AnchorNotFound);
  }
}

TEST(OracleRoundTrip, EveryVariantOfEveryClass) {
  for (const auto& cls : kDocumentClasses) {
    const auto r = render_variants(generate_record(cls.id, first_serial(cls.id) + 1, GenSeed{42, 10}));
    const auto idx = index_of(r.variants);
    const OracleDetector det(idx);
    const OracleOcr ocr(idx);
    const std::string truth = serialize_annotation(r.record.annotation);
    for (const auto& v : r.variants) {
      const ImageRef img = make_image_ref(v.image);
      const auto ex = extract(img, det, ocr, registry());
      EXPECT_EQ(ex.class_id, cls.id);
      EXPECT_DOUBLE_EQ(ex.confidence, 1.0);
      EXPECT_EQ(ex.serialized, truth) << v.spec.stem;
      EXPECT_DOUBLE_EQ(validate(ex.serialized, truth), 1.0);
      EXPECT_TRUE(ex.empty_crops.empty());
    }
  }
}

TEST(OracleRoundTrip, SherryRiversRecord) {
  const auto rec = make_record(kAdhaar, 91,
                               {{"NAME", "Sherry Rivers"},
                                {"DATE_OF_BIRTH", "03/05/2018"},
                                {"GENDER", "Male"},
                                {"ADHAAR_NUMBER", format_serial(kAdhaar, 91)}});
  const auto r = render_variants(rec);
  const auto idx = index_of(r.variants);
  const OracleDetector det(idx);
  const OracleOcr ocr(idx);
  const auto ex = extract(make_image_ref(r.variants[4].image), det, ocr, registry());
  EXPECT_EQ(ex.serialized, "Sherry Rivers::03/05/2018::Male::0000 0000 0091");
  ASSERT_EQ(ex.fields.size(), 4u);
  EXPECT_EQ(ex.fields[0].code, "NAME");
  EXPECT_EQ(ex.fields[3].value, "0000 0000 0091");
}

TEST(OracleRoundTrip, WrongClassHasNoAnchor) {
  const auto r = render_variants(generate_record(kPan, 1, GenSeed{42, 10}));
  const auto idx = index_of(r.variants);
  const OracleOcr ocr(idx);
  try {
    extract(make_image_ref(r.variants[0].image), kPassport, ocr, registry());
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AnchorNotFound);
  }
}

TEST(Oracle, UnknownImages) {
  const auto idx = std::make_shared<ManifestIndex>();
  const ImageRef img = make_image_ref(cv::Mat(3, 3, CV_8UC3, cv::Scalar(1, 2, 3)));
  try {
    OracleDetector(idx).detect(img);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoDocumentFound);
  }
  EXPECT_TRUE(OracleOcr(idx).read(img, std::nullopt).empty());
}

TEST(Oracle, ManifestIdWinsOverHash) {
  RenderManifest a, b;
  a.manifest_id = "a";
  a.class_id = std::string(kPan);
  a.content_hash = "h1";
  b.manifest_id = "b";
  b.class_id = std::string(kDl);
  b.content_hash = "h2";
  ManifestIndex idx({a, b});
  ImageRef ref;
  ref.content_hash = "h1";
  EXPECT_EQ(idx.resolve(ref)->manifest_id, "a");
  ref.manifest_id = "b";
  EXPECT_EQ(idx.resolve(ref)->manifest_id, "b");
  ref.manifest_id = "zzz";
  EXPECT_EQ(idx.resolve(ref)->manifest_id, "a");
}

TEST(Subprocess, LineJsonBackends) {
  TempDir dir;
  const auto script = dir / "backend.py";
  write_text_file(script, R"(import json, sys
for line in sys.stdin:
    req = json.loads(line)
    if req["op"] == "detect":
        out = {"detections": [{"class_id": "pan_v1", "box": [0, 0, 4, 4], "confidence": 0.75}]}
    else:
        spans = [{"box": [0, 5, 3, 6], "text": "second"}, {"box": [0, 0, 3, 1], "text": "first", "score": 0.5}]
        if "crop" in req:
            spans = spans[:1]
        out = {"spans": spans}
    print(json.dumps(out), flush=True)
)");
  const SubprocessDetector det({"python3", script.string()}, dir / "spill");
  const SubprocessOcr ocr({"python3", script.string()}, dir / "spill");
  const ImageRef img = make_image_ref(cv::Mat(4, 4, CV_8UC3, cv::Scalar(9, 9, 9)));
  const auto d = identify(img, det);
  EXPECT_EQ(d.class_id, "pan_v1");
  EXPECT_DOUBLE_EQ(d.confidence, 0.75);
  EXPECT_TRUE(fs::exists(dir / "spill" / (img.content_hash + ".png")));
  const auto spans = ocr.read(img, std::nullopt);
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0].text, "first");
  EXPECT_EQ(ocr.read(img, Box(0, 0, 1, 1)).size(), 1u);
}

TEST(Subprocess, DeadBackendIsAnError) {
  const SubprocessDetector det({"false"});
  const ImageRef img = make_image_ref(cv::Mat(4, 4, CV_8UC3, cv::Scalar(9, 9, 9)));
  try {
    det.detect(img);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SubprocessError);
  }
}

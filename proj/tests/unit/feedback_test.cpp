#include <gtest/gtest.h>

#include <atomic>
#include <set>
#include <thread>

#include "docarl/feedback/assemble.hpp"
#include "docarl/feedback/store.hpp"
#include "docarl/render/build.hpp"
#include "test_support.hpp"

using namespace docarl;
using docarl::testing::registry;
using docarl::testing::TempDir;

namespace {

std::string png_b64(const cv::Mat& m) { return base64::encode(png::encode(m)); }

std::string tiny_png_b64(unsigned char v = 7) { return png_b64(cv::Mat(6, 5, CV_8UC3, cv::Scalar(v, 20, 30))); }

std::size_t count_files(const fs::path& dir) {
  if (!fs::exists(dir)) return 0;
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(dir)) n += e.is_regular_file();
  return n;
}

std::size_t count_tree(const fs::path& dir) {
  std::size_t n = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir)) n += e.is_regular_file();
  return n;
}

}  // namespace

TEST(FeedbackStore, ProposeListApprove) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  const auto id = store.propose("pan_v1", "dl_v1_p1", tiny_png_b64());
  auto all = store.list_requests();
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].req_id, id);
  EXPECT_EQ(all[0].document_identified, "pan_v1");
  EXPECT_EQ(all[0].document_suggested, "dl_v1_p1");

  const auto entry = store.approve(id);
  EXPECT_TRUE(store.list_requests().empty());
  EXPECT_EQ(entry.class_id, "dl_v1_p1");
  EXPECT_EQ(entry.path, dir / "rej" / "images" / "dl_v1_p1" / ("req_" + std::to_string(id) + ".png"));
  EXPECT_EQ(count_files(dir / "rej" / "images" / "dl_v1_p1"), 1u);
  EXPECT_EQ(load_image(entry.path).content_hash, entry.content_hash);
  const auto ledger = store.rejected_entries();
  ASSERT_EQ(ledger.size(), 1u);
  EXPECT_EQ(ledger[0].origin_req_id, id);
}

TEST(FeedbackStore, RejectRemovesOnlyTheRequest) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  const auto keep = store.propose(std::string(kNoClass), "pan_v1", tiny_png_b64(1));
  const auto drop = store.propose("pan_v1", "adhaar_v1_p1", tiny_png_b64(2));
  store.reject(drop);
  const auto all = store.list_requests();
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].req_id, keep);
  EXPECT_EQ(count_tree(dir / "rej"), 0u);
  EXPECT_THROW(store.reject(drop), Error);
  try {
    store.approve(drop);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotFound);
  }
}

TEST(FeedbackStore, ValidatesInput) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  EXPECT_THROW(store.propose("pan_v1", "bogus", tiny_png_b64()), Error);
  EXPECT_THROW(store.propose("bogus", "pan_v1", tiny_png_b64()), Error);
  try {
    store.propose("pan_v1", "dl_v1_p1", "%%%");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadImage);
  }
  EXPECT_TRUE(store.list_requests().empty());
}

TEST(FeedbackStore, CorruptRequestIsSkipped) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  store.propose("pan_v1", "dl_v1_p1", tiny_png_b64());
  write_text_file(store.request_path(1), "{not json");
  EXPECT_EQ(store.list_requests().size(), 1u);
}

TEST(FeedbackStore, UndecodableImageLeavesRequestInPlace) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  const auto id = store.propose("pan_v1", "dl_v1_p1", base64::encode(std::vector<unsigned char>{1, 2, 3, 4}));
  EXPECT_THROW(store.approve(id), Error);
  EXPECT_EQ(store.list_requests().size(), 1u);
}

TEST(FeedbackStore, ConcurrentProposalsGetUniqueIds) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  const std::string img = tiny_png_b64();
  std::vector<std::int64_t> ids(100);
  std::vector<std::thread> threads;
  for (int t = 0; t < 100; ++t) {
    threads.emplace_back([&, t] { ids[t] = store.propose("pan_v1", "dl_v1_p1", img); });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(std::set<std::int64_t>(ids.begin(), ids.end()).size(), 100u);
  EXPECT_EQ(store.list_requests().size(), 100u);
}

TEST(FeedbackStore, TwoStoresOnOneDirectoryDoNotCollide) {
  TempDir dir;
  FeedbackStore a(dir / "req", dir / "rej"), b(dir / "req", dir / "rej");
  std::set<std::int64_t> ids;
  for (int i = 0; i < 20; ++i) {
    ids.insert(a.propose("pan_v1", "dl_v1_p1", tiny_png_b64()));
    ids.insert(b.propose("pan_v1", "dl_v1_p1", tiny_png_b64()));
  }
  EXPECT_EQ(ids.size(), 40u);
}

TEST(FeedbackStore, ApproveRejectRaceHasOneWinner) {
  for (int round = 0; round < 20; ++round) {
    TempDir dir;
    FeedbackStore store(dir / "req", dir / "rej");
    const auto id = store.propose("pan_v1", "dl_v1_p1", tiny_png_b64());
    std::atomic<int> wins{0}, not_found{0};
    bool approved = false;
    auto attempt = [&](bool approve) {
      try {
        approve ? (void)store.approve(id) : store.reject(id);
        ++wins;
        if (approve) approved = true;
      } catch (const Error& e) {
        if (e.code() == Errc::NotFound) ++not_found;
      }
    };
    std::thread t1(attempt, true), t2(attempt, false);
    t1.join();
    t2.join();
    EXPECT_EQ(wins.load(), 1);
    EXPECT_EQ(not_found.load(), 1);
    EXPECT_EQ(count_files(dir / "rej" / "images" / "dl_v1_p1"), approved ? 1u : 0u);
    EXPECT_TRUE(store.list_requests().empty());
  }
}

class AssembleTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    base_ = new TempDir;
    build_dataset(registry(), all_class_ids(), 2, 42, base_->path());
  }
  static void TearDownTestSuite() {
    delete base_;
    base_ = nullptr;
  }
  static fs::path base() { return base_->path(); }

  static TempDir* base_;
};

TempDir* AssembleTest::base_ = nullptr;

TEST_F(AssembleTest, NoEntriesCopiesTheBase) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  const auto s = assemble_dataset(base(), dir / "rej", dir / "out");
  EXPECT_EQ(s.base_count, 140u);
  EXPECT_EQ(s.rejected_count, 0u);
  EXPECT_EQ(count_files(dir / "out" / "data" / "images" / "train"), 70u);
  EXPECT_EQ(read_text_file(dir / "out" / "data" / "manifests.jsonl"),
            read_text_file(base() / "data" / "manifests.jsonl"));
}

TEST_F(AssembleTest, ResolvableAndUnresolvableEntries) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  // An A4 variant from the test split: its placement crop gets the full fan-out.
  const auto a4 = base() / "data" / "images" / "test" / "pan_v1_2_a4_100_100.png";
  ASSERT_TRUE(fs::exists(a4));
  const auto bytes = read_file_bytes(a4);
  const auto r1 = store.propose("adhaar_v1_p1", "pan_v1", base64::encode(bytes));
  const auto r2 = store.propose(std::string(kNoClass), "votercard_v1", tiny_png_b64());
  store.approve(r1);
  store.approve(r2);

  const auto s = assemble_dataset(base(), dir / "rej", dir / "out");
  EXPECT_EQ(s.rejected_count, 2u);
  EXPECT_EQ(s.variant_count, 16u);
  const auto out = dir / "out" / "data";
  EXPECT_EQ(count_files(out / "images" / "train"), 70u + 16u);
  EXPECT_EQ(count_files(out / "images" / "test"), 70u);
  EXPECT_EQ(count_files(out / "labels" / "train"), 70u + 16u);
  // Rejected images add labels but no annotation files.
  EXPECT_EQ(count_files(out / "annotation" / "train"), 70u);

  const std::string stem = "req_" + std::to_string(r1);
  const cv::Mat crop = load_image(out / "images" / "train" / (stem + ".png")).pixels;
  EXPECT_EQ(crop.rows, kA4DocHeight);
  EXPECT_EQ(crop.cols, a4_resized_width(document_class(kPan).native_width, document_class(kPan).native_height));
  EXPECT_TRUE(fs::exists(out / "images" / "train" / (stem + "_a4_1500_2000_greyscale.png")));
  EXPECT_EQ(read_text_file(out / "labels" / "train" / (stem + ".txt")).substr(0, 2), "2 ");

  const std::string u = "req_" + std::to_string(r2);
  EXPECT_EQ(read_text_file(out / "labels" / "train" / (u + ".txt")), "4 0.500000 0.500000 1.000000 1.000000\n");
  EXPECT_TRUE(fs::exists(out / "images" / "train" / (u + "_greyscale.png")));

  // Base files are byte-identical.
  for (const auto& e : fs::directory_iterator(base() / "data" / "labels" / "test")) {
    EXPECT_EQ(read_text_file(e.path()), read_text_file(out / "labels" / "test" / e.path().filename()));
  }
}

TEST_F(AssembleTest, RerunIsIdempotentAndGuarded) {
  TempDir dir;
  FeedbackStore store(dir / "req", dir / "rej");
  store.approve(store.propose("pan_v1", "dl_v1_p1", tiny_png_b64()));
  assemble_dataset(base(), dir / "rej", dir / "out");
  const auto first = read_text_file(dir / "out" / "data" / "manifests.jsonl");
  assemble_dataset(base(), dir / "rej", dir / "out");
  EXPECT_EQ(read_text_file(dir / "out" / "data" / "manifests.jsonl"), first);
  EXPECT_EQ(count_files(dir / "out" / "data" / "images" / "train"), 72u);

  fs::create_directories(dir / "foreign");
  write_text_file(dir / "foreign" / "keep.txt", "x");
  EXPECT_THROW(assemble_dataset(base(), dir / "rej", dir / "foreign"), Error);
  EXPECT_TRUE(fs::exists(dir / "foreign" / "keep.txt"));
}

TEST(KindsCoveredBy, GreyscaleNeverYieldsColour) {
  EXPECT_EQ(kinds_covered_by(true).size(), 2u);
  EXPECT_EQ(kinds_covered_by(false).size(), 4u);
}

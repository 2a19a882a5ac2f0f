#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <mutex>
#include <set>
#include <thread>

#include "ais/common/bounded.hpp"
#include "ais/common/error.hpp"
#include "ais/common/files.hpp"
#include "ais/common/hash.hpp"

namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("ais_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::vector<std::uint8_t> bytes(std::string_view s) { return {s.begin(), s.end()}; }

}  // namespace

TEST(Hash, Sha256KnownVectors) {
  EXPECT_EQ(ais::sha256_hex(""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(ais::sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Hash, IncrementalMatchesOneShot) {
  ais::Sha256 h;
  h.update("ab");
  h.update("c");
  EXPECT_EQ(h.hex(), ais::sha256_hex("abc"));
}

TEST(Hash, Base64KnownVectors) {
  const std::pair<const char*, const char*> cases[] = {
      {"", ""}, {"f", "Zg=="}, {"fo", "Zm8="}, {"foo", "Zm9v"}, {"foobar", "Zm9vYmFy"}};
  for (const auto& [plain, coded] : cases) {
    EXPECT_EQ(ais::base64_encode(bytes(plain)), coded);
    EXPECT_EQ(ais::base64_decode(coded), bytes(plain));
  }
}

TEST(Hash, Base64RejectsGarbage) {
  EXPECT_THROW(ais::base64_decode("Zm9v!"), ais::InvalidInput);
  EXPECT_THROW(ais::base64_decode("Zm9"), ais::InvalidInput);
}

TEST(Hash, Base64RoundTripsAllByteValues) {
  std::vector<std::uint8_t> all;
  for (int i = 0; i < 256; ++i) all.push_back(static_cast<std::uint8_t>(i));
  for (std::size_t n = 0; n <= all.size(); n += 37) {
    const std::vector<std::uint8_t> part(all.begin(), all.begin() + static_cast<long>(n));
    EXPECT_EQ(ais::base64_decode(ais::base64_encode(part)), part);
  }
}

TEST(Files, WriteAtomicSkipsIdenticalContent) {
  const auto dir = temp_dir("files");
  const auto path = dir / "sub" / "a.txt";
  EXPECT_EQ(ais::write_atomic(path, "hello"), ais::WriteResult::written);
  const auto stamp = fs::last_write_time(path);
  EXPECT_EQ(ais::write_atomic(path, "hello"), ais::WriteResult::unchanged);
  EXPECT_EQ(fs::last_write_time(path), stamp);
  EXPECT_EQ(ais::write_atomic(path, "world"), ais::WriteResult::written);
  EXPECT_EQ(ais::read_text(path), "world");
  EXPECT_THROW(ais::read_text(dir / "missing.txt"), ais::InvalidInput);
}

TEST(Errors, ExitCodesAreStable) {
  EXPECT_EQ(ais::exit_code(ais::ErrorKind::transport), 1);
  EXPECT_EQ(ais::exit_code(ais::ErrorKind::invalid_input), 2);
  EXPECT_EQ(ais::exit_code(ais::ErrorKind::permanent), 2);
  EXPECT_EQ(ais::exit_code(ais::ErrorKind::manifest), 3);
}

TEST(Bounded, RunsEveryIndexOnce) {
  std::mutex m;
  std::multiset<std::size_t> seen;
  ais::run_bounded(100, 4, [&](std::size_t i) {
    std::lock_guard lock(m);
    seen.insert(i);
  });
  ASSERT_EQ(seen.size(), 100u);
  for (std::size_t i = 0; i < 100; ++i) EXPECT_EQ(seen.count(i), 1u);
}

TEST(Bounded, NeverExceedsBound) {
  std::atomic<int> live{0}, peak{0};
  ais::run_bounded(40, 3, [&](std::size_t) {
    const int now = ++live;
    int p = peak.load();
    while (now > p && !peak.compare_exchange_weak(p, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
    --live;
  });
  EXPECT_LE(peak.load(), 3);
}

TEST(Bounded, RethrowsLowestFailingIndexAfterFinishing) {
  std::atomic<int> ran{0};
  try {
    ais::run_bounded(20, 4, [&](std::size_t i) {
      ++ran;
      if (i == 7 || i == 13) throw ais::InvalidInput("fail " + std::to_string(i));
    });
    FAIL() << "expected an exception";
  } catch (const ais::InvalidInput& e) {
    EXPECT_STREQ(e.what(), "fail 7");
  }
  EXPECT_EQ(ran.load(), 20);
}

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "cache.hpp"
#include "higgsmot/pipeline.hpp"
#include "render.hpp"

namespace higgsmot::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() / ("higgsmot-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

ClassDocument rank_one_document() {
  const MotClass value = MotClass(1) / (MotClass::L() - MotClass(1));
  return make_document("mss", 0, 1, 0, {1, 2, 1}, value);
}

TEST(Document, JsonRoundTrip) {
  const ClassDocument doc = rank_one_document();
  const ClassDocument back = from_json(nlohmann::json::parse(to_json(doc).dump()));
  EXPECT_EQ(back, doc);
  EXPECT_EQ(back.value, doc.value);
}

TEST(Document, BigCoefficientsSurvive) {
  const MotClass big = MotClass(mpq_class(mpz_class("123456789012345678901234567890"))) * MotClass::u();
  const ClassDocument doc = make_document("h", 1, 1, 0, {}, big);
  const nlohmann::json j = to_json(doc);
  EXPECT_EQ(j["class"]["numerator"][0]["coefficient"], "123456789012345678901234567890");
  EXPECT_EQ(from_json(j).value, big);
}

TEST(Document, RejectsTampering) {
  nlohmann::json j = to_json(rank_one_document());
  j["class"]["numerator"][0]["coefficient"] = "2";
  EXPECT_THROW(from_json(j), DocumentError);
  nlohmann::json k = to_json(rank_one_document());
  k["genus"] = 3;
  EXPECT_THROW(from_json(k), DocumentError);
  nlohmann::json m = to_json(rank_one_document());
  m["class"]["numerator"][0]["coefficient"] = "1.5";
  EXPECT_THROW(from_json(m), DocumentError);
}

TEST(Document, ChecksumIsFnv1a) {
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Cache, StoreThenLoad) {
  TempDir dir;
  Cache cache(dir.path());
  const ClassDocument doc = rank_one_document();
  cache.store("k", doc);
  EXPECT_TRUE(fs::exists(cache.object_path(doc.checksum)));
  EXPECT_EQ(cache.load(doc.checksum), doc);
  const auto hit = cache.lookup("k");
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(*hit, doc);
  EXPECT_FALSE(cache.lookup("missing").has_value());
}

TEST(Cache, TamperedFileRejected) {
  TempDir dir;
  Cache cache(dir.path());
  const ClassDocument doc = rank_one_document();
  cache.store("k", doc);
  {
    std::ifstream in(cache.object_path(doc.checksum));
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    text.replace(text.find("\"-1\""), 4, "\"-2\"");
    std::ofstream out(cache.object_path(doc.checksum), std::ios::trunc);
    out << text;
  }
  EXPECT_THROW(cache.load(doc.checksum), DocumentError);
  std::string why;
  EXPECT_FALSE(cache.lookup("k", &why).has_value());
  EXPECT_NE(why.find("checksum"), std::string::npos);
}

TEST(Cache, SchemaBumpHidesOldEntries) {
  TempDir dir;
  Cache(dir.path(), "1").store("k", rank_one_document());
  EXPECT_FALSE(Cache(dir.path(), "2").lookup("k").has_value());
}

TEST(Cache, ResolutionOrder) {
  ::setenv("HIGGSMOT_CACHE_DIR", "/tmp/from-env", 1);
  EXPECT_EQ(resolve_cache_dir(std::string("/tmp/from-flag")), fs::path("/tmp/from-flag"));
  EXPECT_EQ(resolve_cache_dir(std::nullopt), fs::path("/tmp/from-env"));
  ::unsetenv("HIGGSMOT_CACHE_DIR");
  EXPECT_FALSE(resolve_cache_dir(std::nullopt).empty());
}

TEST(Render, TextAndLatex) {
  const MotClass x = MotClass::L() / (MotClass::L() - MotClass(1));
  EXPECT_EQ(render_class(x, Format::text), "u*v/(u*v - 1)");
  EXPECT_EQ(render_class(x, Format::latex), "\\frac{\\mathbb{L}}{\\mathbb{L} - 1}");
  EXPECT_EQ(render_class(make_curve(1).jac(), Format::latex), "u v - u - v + 1");
}

TEST(Run, HiggsRankOneText) {
  TempDir dir;
  const Result r = invoke({"higgs", "--genus", "0", "--rank", "1", "--degree", "0", "--format", "text", "--cache-dir",
                           dir.path().string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "1/(u*v - 1)\n");
}

TEST(Run, ConnMatchesHiggsAtDegreeZero) {
  TempDir dir;
  const Result conn = invoke({"conn", "-g", "1", "-r", "1", "-f", "text", "--cache-dir", dir.path().string()});
  const Result higgs = invoke({"higgs", "-g", "1", "-r", "1", "-d", "0", "-f", "text", "--cache-dir", dir.path().string()});
  EXPECT_EQ(conn.code, kOk);
  EXPECT_EQ(conn.out, higgs.out);
}

TEST(Run, WarmCacheIsByteIdentical) {
  TempDir dir;
  const std::vector<std::string> args{"higgs", "-g", "1", "-r", "2", "-d", "1", "--cache-dir", dir.path().string()};
  const Result cold = invoke(args);
  const Result warm = invoke(args);
  EXPECT_EQ(cold.code, kOk);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_TRUE(fs::exists(dir.path() / "v1" / "index" / "mss-g1-r2-d1"));
  const ClassDocument doc = from_json(nlohmann::json::parse(cold.out));
  EXPECT_EQ(doc.value, mss_class(make_curve(1), 2, 1));
}

TEST(Run, EnvironmentSelectsCache) {
  TempDir dir;
  ::setenv("HIGGSMOT_CACHE_DIR", dir.path().string().c_str(), 1);
  const Result r = invoke({"conn", "-g", "0", "-r", "2"});
  ::unsetenv("HIGGSMOT_CACHE_DIR");
  EXPECT_EQ(r.code, kOk);
  EXPECT_TRUE(fs::exists(dir.path() / "v1" / "index" / "conn-g0-r2-d0"));
}

TEST(Run, TamperedCacheIsRecomputed) {
  TempDir dir;
  const std::vector<std::string> args{"higgs", "-g", "0", "-r", "1", "-d", "0", "--cache-dir", dir.path().string()};
  const Result first = invoke(args);
  for (const auto& e : fs::directory_iterator(dir.path() / "v1" / "objects")) {
    std::ofstream(e.path(), std::ios::trunc) << "{}";
  }
  const Result second = invoke(args);
  EXPECT_EQ(second.code, kOk);
  EXPECT_EQ(second.out, first.out);
  EXPECT_NE(second.err.find("ignoring cache entry"), std::string::npos);
}

TEST(Run, Table) {
  const Result r = invoke({"table", "-g", "0", "-r", "2", "-d", "2", "-f", "text", "--no-cache"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("H_{1,0} = 1/(u*v - 1)"), std::string::npos);
  EXPECT_NE(r.out.find("H_{2,1} = 0"), std::string::npos);
}

TEST(Run, VerifyZeta) {
  const Result r = invoke({"verify", "--suite", "zeta", "--genus", "3"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("PASS zeta", 0), 0u);
}

TEST(Run, VerifyAllGenusZero) {
  const Result r = invoke({"verify", "--suite", "all", "--genus", "0"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  for (const auto& s : suite_names()) {
    if (s != "all") EXPECT_NE(r.out.find("PASS " + s), std::string::npos) << s;
  }
}

TEST(Run, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, kUsage);
  EXPECT_EQ(invoke({"higgs", "-g", "0", "-r", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"higgs", "-g", "-1", "-r", "1", "-d", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  const Result bad = invoke({"verify", "--suite", "bogus"});
  EXPECT_NE(bad.err.find("Usage"), std::string::npos);
}

TEST(Run, TruncationErrorExitsThree) {
  const Result r = invoke({"higgs", "-g", "2", "-r", "3", "-d", "0", "--max-degree", "5", "--no-cache"});
  EXPECT_EQ(r.code, kResource);
  EXPECT_NE(r.err.find("d_max >= 12"), std::string::npos);
  EXPECT_EQ(invoke({"table", "-g", "0", "-r", "7", "-d", "1", "--no-cache"}).code, kResource);
}

}  // namespace
}  // namespace higgsmot::cli

#include "cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace higgsmot::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw CacheError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const fs::path& p, const std::string& content) {
  std::error_code ec;
  fs::create_directories(p.parent_path(), ec);
  if (ec) throw CacheError("cannot create " + p.parent_path().string() + ": " + ec.message());
  static std::atomic<unsigned> counter{0};
  const fs::path tmp = p.parent_path() / ("." + p.filename().string() + "." + std::to_string(::getpid()) + "." +
                                          std::to_string(counter++) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw CacheError("cannot write " + tmp.string());
  }
  fs::rename(tmp, p, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw CacheError("cannot rename into " + p.string());
  }
}

bool is_hex_checksum(const std::string& s) {
  return s.size() == 16 && s.find_first_not_of("0123456789abcdef") == std::string::npos;
}

}  // namespace

Cache::Cache(fs::path root, std::string schema_version)
    : root_(std::move(root)), schema_version_(std::move(schema_version)) {}

fs::path Cache::layout_dir() const { return root_ / ("v" + schema_version_); }

fs::path Cache::object_path(const std::string& checksum) const {
  return layout_dir() / "objects" / (checksum + ".json");
}

void Cache::store(const std::string& key, const ClassDocument& doc) {
  write_atomically(object_path(doc.checksum), to_json(doc).dump(2) + "\n");
  write_atomically(layout_dir() / "index" / key, doc.checksum + "\n");
}

ClassDocument Cache::load(const std::string& checksum) const {
  if (!is_hex_checksum(checksum)) throw DocumentError("'" + checksum + "' is not a checksum");
  const fs::path p = object_path(checksum);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(p));
  } catch (const nlohmann::json::parse_error&) {
    throw DocumentError(p.string() + " is not valid JSON");
  }
  ClassDocument doc;
  try {
    doc = from_json(j);
  } catch (const DocumentError& e) {
    throw DocumentError(p.string() + ": " + e.what());
  }
  if (doc.checksum != checksum) throw DocumentError(p.string() + ": stored under the wrong checksum");
  if (doc.schema_version != schema_version_) throw DocumentError(p.string() + ": schema version mismatch");
  return doc;
}

std::optional<ClassDocument> Cache::lookup(const std::string& key, std::string* rejected) const {
  const fs::path index = layout_dir() / "index" / key;
  std::error_code ec;
  if (!fs::exists(index, ec)) return std::nullopt;
  try {
    std::string checksum = read_file(index);
    while (!checksum.empty() && (checksum.back() == '\n' || checksum.back() == '\r')) checksum.pop_back();
    return load(checksum);
  } catch (const Error& e) {
    if (rejected) *rejected = e.what();
    return std::nullopt;
  }
}

fs::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("HIGGSMOT_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "higgsmot";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "higgsmot";
  return fs::temp_directory_path() / "higgsmot-cache";
}

std::string request_key(const std::string& quantity, int genus, int rank, int degree) {
  return quantity + "-g" + std::to_string(genus) + "-r" + std::to_string(rank) + "-d" + std::to_string(degree);
}

}  // namespace higgsmot::cli

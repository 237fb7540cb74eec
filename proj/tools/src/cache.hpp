#ifndef HIGGSMOT_TOOLS_CACHE_HPP
#define HIGGSMOT_TOOLS_CACHE_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "document.hpp"

namespace higgsmot::cli {

// I/O failures; the message names the offending path.
class CacheError : public Error {
 public:
  using Error::Error;
};

// Content-addressed store under <root>/v<schema>/:
//   objects/<checksum>.json   the documents
//   index/<request key>       the checksum answering a request
// Files are written to a temporary name and renamed into place.
class Cache {
 public:
  explicit Cache(std::filesystem::path root, std::string schema_version = kSchemaVersion);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path layout_dir() const;
  std::filesystem::path object_path(const std::string& checksum) const;

  // Stores the object and points `key` at it.
  void store(const std::string& key, const ClassDocument& doc);
  // Loads an object by checksum; throws DocumentError when the file does not
  // match its checksum and CacheError when it cannot be read.
  ClassDocument load(const std::string& checksum) const;
  // nullopt on a miss. A rejected entry is reported in `rejected` and also
  // treated as a miss.
  std::optional<ClassDocument> lookup(const std::string& key, std::string* rejected = nullptr) const;

 private:
  std::filesystem::path root_;
  std::string schema_version_;
};

// Flag, else HIGGSMOT_CACHE_DIR, else the platform cache directory.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

std::string request_key(const std::string& quantity, int genus, int rank, int degree);

}  // namespace higgsmot::cli

#endif  // HIGGSMOT_TOOLS_CACHE_HPP

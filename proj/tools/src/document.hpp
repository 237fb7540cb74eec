#ifndef HIGGSMOT_TOOLS_DOCUMENT_HPP
#define HIGGSMOT_TOOLS_DOCUMENT_HPP

#include <string>

#include "higgsmot/errors.hpp"
#include "higgsmot/mot_class.hpp"
#include "json.hpp"

namespace higgsmot::cli {

inline constexpr const char* kSchemaVersion = "1";

// Raised for malformed documents and checksum mismatches.
class DocumentError : public Error {
 public:
  using Error::Error;
};

struct Truncation {
  int r_max = 0;
  int d_max = 0;
  int twist = 0;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

// One computed class with the request that produced it. `quantity` is
// "mss" for [M^ss_{r,d}], "conn" for [Conn_r] and "h" for a raw H_{r,d}.
struct ClassDocument {
  std::string schema_version = kSchemaVersion;
  std::string quantity;
  int genus = 0;
  int rank = 0;
  int degree = 0;
  Truncation truncation;
  MotClass value;
  std::string checksum;

  friend bool operator==(const ClassDocument& a, const ClassDocument& b) {
    return a.schema_version == b.schema_version && a.quantity == b.quantity && a.genus == b.genus &&
           a.rank == b.rank && a.degree == b.degree && a.truncation == b.truncation && a.value == b.value &&
           a.checksum == b.checksum;
  }
};

ClassDocument make_document(std::string quantity, int genus, int rank, int degree, Truncation truncation,
                            MotClass value);

// FNV-1a 64 over the compact JSON of every field but the checksum.
std::string compute_checksum(const ClassDocument& doc);

nlohmann::json to_json(const ClassDocument& doc);
// Throws DocumentError on a schema violation or a checksum mismatch.
ClassDocument from_json(const nlohmann::json& j);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace higgsmot::cli

#endif  // HIGGSMOT_TOOLS_DOCUMENT_HPP

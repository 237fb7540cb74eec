#include "document.hpp"

#include <cstdint>
#include <cstdio>
#include <regex>

namespace higgsmot::cli {

namespace {

nlohmann::json poly_to_json(const LaurentPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms()) {
    terms.push_back({{"coefficient", t.coeff.get_num().get_str()}, {"u_exp", t.exp[kU]}, {"v_exp", t.exp[kV]}});
  }
  return terms;
}

LaurentPoly poly_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw DocumentError(std::string("class.") + field + " must be an array");
  static const std::regex integer("-?(0|[1-9][0-9]*)");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coefficient") || !t.contains("u_exp") || !t.contains("v_exp")) {
      throw DocumentError(std::string("malformed term in class.") + field);
    }
    const auto& c = t.at("coefficient");
    if (!c.is_string() || !std::regex_match(c.get<std::string>(), integer)) {
      throw DocumentError(std::string("coefficient in class.") + field + " is not a decimal integer string");
    }
    const auto& ue = t.at("u_exp");
    const auto& ve = t.at("v_exp");
    if (!ue.is_number_integer() || !ve.is_number_integer() || ue.get<long long>() < 0 || ve.get<long long>() < 0) {
      throw DocumentError(std::string("exponents in class.") + field + " must be nonnegative integers");
    }
    LaurentPoly::Term term;
    term.exp = Exponent{};
    term.exp[kU] = ue.get<std::int32_t>();
    term.exp[kV] = ve.get<std::int32_t>();
    term.coeff = mpq_class(mpz_class(c.get<std::string>()));
    terms.push_back(std::move(term));
  }
  return LaurentPoly::from_terms(kClassVars, std::move(terms));
}

int get_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw DocumentError(std::string("field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

nlohmann::json content_json(const ClassDocument& doc) {
  const auto [num, den] = doc.value.canonical();
  return {
      {"schema_version", doc.schema_version},
      {"quantity", doc.quantity},
      {"genus", doc.genus},
      {"rank", doc.rank},
      {"degree", doc.degree},
      {"truncation", {{"r_max", doc.truncation.r_max}, {"d_max", doc.truncation.d_max}, {"twist", doc.truncation.twist}}},
      {"class", {{"numerator", poly_to_json(num)}, {"denominator", poly_to_json(den)}}},
  };
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string compute_checksum(const ClassDocument& doc) { return fnv1a_hex(content_json(doc).dump()); }

ClassDocument make_document(std::string quantity, int genus, int rank, int degree, Truncation truncation,
                            MotClass value) {
  ClassDocument doc;
  doc.quantity = std::move(quantity);
  doc.genus = genus;
  doc.rank = rank;
  doc.degree = degree;
  doc.truncation = truncation;
  doc.value = std::move(value);
  doc.checksum = compute_checksum(doc);
  return doc;
}

nlohmann::json to_json(const ClassDocument& doc) {
  nlohmann::json j = content_json(doc);
  j["checksum"] = doc.checksum;
  return j;
}

ClassDocument from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DocumentError("a class document must be a JSON object");
  for (const char* key : {"schema_version", "quantity", "checksum"}) {
    if (!j.contains(key) || !j.at(key).is_string()) throw DocumentError(std::string("field '") + key + "' must be a string");
  }
  if (!j.contains("truncation") || !j.at("truncation").is_object()) throw DocumentError("field 'truncation' is missing");
  if (!j.contains("class") || !j.at("class").is_object()) throw DocumentError("field 'class' is missing");
  const auto& cls = j.at("class");
  if (!cls.contains("numerator") || !cls.contains("denominator")) throw DocumentError("class needs numerator and denominator");

  ClassDocument doc;
  doc.schema_version = j.at("schema_version").get<std::string>();
  doc.quantity = j.at("quantity").get<std::string>();
  doc.genus = get_int(j, "genus");
  doc.rank = get_int(j, "rank");
  doc.degree = get_int(j, "degree");
  const auto& t = j.at("truncation");
  doc.truncation = {get_int(t, "r_max"), get_int(t, "d_max"), get_int(t, "twist")};
  const LaurentPoly num = poly_from_json(cls.at("numerator"), "numerator");
  const LaurentPoly den = poly_from_json(cls.at("denominator"), "denominator");
  try {
    doc.value = make_class(num, den);
  } catch (const ZeroDenominator&) {
    throw DocumentError("class has a zero denominator");
  }
  doc.checksum = j.at("checksum").get<std::string>();
  // The stored form must already be canonical; otherwise the checksum
  // recomputed from the value would not describe the file.
  if (compute_checksum(doc) != doc.checksum) throw DocumentError("checksum mismatch");
  return doc;
}

}  // namespace higgsmot::cli

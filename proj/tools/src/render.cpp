#include "render.hpp"

#include <map>
#include <sstream>

namespace higgsmot::cli {

namespace {

// Signed-term assembly shared by both LaTeX polynomial writers.
void append_term(std::ostringstream& os, bool first, const mpz_class& coeff, const std::string& monomial) {
  const bool negative = coeff < 0;
  const mpz_class mag = abs(coeff);
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  if (monomial.empty()) {
    os << mag.get_str();
  } else {
    if (mag != 1) os << mag.get_str() << " ";
    os << monomial;
  }
}

std::string power(const std::string& base, int e) {
  if (e == 0) return "";
  if (e == 1) return base;
  return base + "^{" + std::to_string(e) + "}";
}

std::string latex_l_poly(const std::map<int, mpq_class>& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    append_term(os, first, it->second.get_num(), power("\\mathbb{L}", it->first));
    first = false;
  }
  return os.str();
}

std::string latex_uv_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& t = *it;
    std::string m = power("u", t.exp[kU]);
    const std::string v = power("v", t.exp[kV]);
    if (!m.empty() && !v.empty()) m += " ";
    m += v;
    append_term(os, first, t.coeff.get_num(), m);
    first = false;
  }
  return os.str();
}

bool is_one(const std::map<int, mpq_class>& p) { return p.size() == 1 && p.begin()->first == 0 && p.begin()->second == 1; }

std::string label(const ClassDocument& doc) {
  if (doc.quantity == "conn") return "[Conn_" + std::to_string(doc.rank) + "]";
  if (doc.quantity == "h") return "H_{" + std::to_string(doc.rank) + "," + std::to_string(doc.degree) + "}";
  return "[M^ss_{" + std::to_string(doc.rank) + "," + std::to_string(doc.degree) + "}]";
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "latex") return Format::latex;
  if (name == "text") return Format::text;
  throw InvalidArgument("unknown format '" + name + "'");
}

std::string latex_class(const MotClass& x) {
  if (const auto lf = as_l_form(x)) {
    if (is_one(lf->den)) return latex_l_poly(lf->num);
    return "\\frac{" + latex_l_poly(lf->num) + "}{" + latex_l_poly(lf->den) + "}";
  }
  const auto [num, den] = x.canonical();
  if (den.is_one()) return latex_uv_poly(num);
  return "\\frac{" + latex_uv_poly(num) + "}{" + latex_uv_poly(den) + "}";
}

std::string render_class(const MotClass& x, Format format) {
  switch (format) {
    case Format::latex:
      return latex_class(x);
    case Format::json:
      return to_json(make_document("", 0, 0, 0, {}, x)).at("class").dump();
    case Format::text:
      break;
  }
  return x.to_string();
}

std::string render_document(const ClassDocument& doc, Format format) {
  if (format == Format::json) return to_json(doc).dump(2) + "\n";
  return render_class(doc.value, format) + "\n";
}

std::string render_table(const std::vector<ClassDocument>& docs, Format format) {
  if (format == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : docs) arr.push_back(to_json(d));
    return arr.dump(2) + "\n";
  }
  std::string out;
  for (const auto& d : docs) {
    const std::string rhs = render_class(d.value, format);
    out += format == Format::latex ? label(d) + " = " + rhs + " \\\\\n" : label(d) + " = " + rhs + "\n";
  }
  return out;
}

}  // namespace higgsmot::cli

#include "hecke/io.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include <json.hpp>

#include "hecke/errors.hpp"

namespace hecke::io {

namespace {

using json = nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end())
    throw ParseError(std::string("document is missing field \"") + name + "\"");
  return *it;
}

void check_kind(const json& doc, const char* expected) {
  if (!doc.is_object()) throw ParseError("document must be an object");
  const json& kind = field(doc, "kind");
  if (!kind.is_string() || kind.get<std::string>() != expected)
    throw ParseError(std::string("expected a \"") + expected + "\" document");
}

GaussianRational scalar_field(const json& doc, const char* name) {
  const json& value = field(doc, name);
  if (!value.is_string())
    throw ParseError(std::string("field \"") + name + "\" must be a string scalar");
  return GaussianRational::parse(value.get<std::string>());
}

std::size_t index_field(const json& doc, const char* name) {
  const json& value = field(doc, name);
  if (!value.is_number_unsigned())
    throw ParseError(std::string("field \"") + name +
                     "\" must be a non-negative integer");
  return value.get<std::size_t>();
}

json scalars_to_json(const std::vector<GaussianRational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

std::vector<GaussianRational> scalars_field(const json& doc, const char* name) {
  const json& arr = field(doc, name);
  if (!arr.is_array())
    throw ParseError(std::string("field \"") + name + "\" must be an array");
  std::vector<GaussianRational> values;
  values.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string())
      throw ParseError(std::string("entries of \"") + name +
                       "\" must be string scalars");
    values.push_back(GaussianRational::parse(item.get<std::string>()));
  }
  return values;
}

json hyp_to_json(const HypSeries& h) {
  json doc;
  doc["kind"] = "hypergeometric";
  doc["prefactor"] = h.prefactor().str();
  doc["exponent"] = h.exponent();
  doc["upper"] = scalars_to_json(h.upper());
  doc["lower"] = scalars_to_json(h.lower());
  doc["scale"] = h.scale().str();
  return doc;
}

HypSeries hyp_from_json(const json& doc) {
  check_kind(doc, "hypergeometric");
  return {scalar_field(doc, "prefactor"), index_field(doc, "exponent"),
          scalars_field(doc, "upper"), scalars_field(doc, "lower"),
          scalar_field(doc, "scale")};
}

std::string finish(json doc) { return doc.dump(2) + "\n"; }

const char* reason_name(NotEigenReason reason) {
  switch (reason) {
    case NotEigenReason::BadExponent: return "bad-exponent";
    case NotEigenReason::Unbalanced: return "unbalanced";
    case NotEigenReason::StructureMismatch: return "structure-mismatch";
    case NotEigenReason::NumericMismatch: return "numeric-mismatch";
  }
  throw ParseError("unknown reason");
}

NotEigenReason reason_from_name(const std::string& name) {
  if (name == "bad-exponent") return NotEigenReason::BadExponent;
  if (name == "unbalanced") return NotEigenReason::Unbalanced;
  if (name == "structure-mismatch") return NotEigenReason::StructureMismatch;
  if (name == "numeric-mismatch") return NotEigenReason::NumericMismatch;
  throw ParseError("unknown verdict reason \"" + name + "\"");
}

}  // namespace

std::string to_document(const TruncatedSeries& series) {
  json doc;
  doc["kind"] = "series";
  doc["order"] = series.order();
  doc["coeffs"] = scalars_to_json(series.coeffs());
  return finish(std::move(doc));
}

std::string to_document(const HypSeries& series) {
  return finish(hyp_to_json(series));
}

std::string to_document(const EigenReport& report) {
  json doc;
  doc["kind"] = "eigen-report";
  if (report.verdict == EigenVerdict::Eigen) {
    doc["verdict"] = "eigen";
    if (report.exponent) doc["exponent"] = *report.exponent;
    if (report.normalized_form)
      doc["normalized_form"] = hyp_to_json(*report.normalized_form);
  } else {
    doc["verdict"] = "not-eigen";
    if (report.reason) doc["reason"] = reason_name(*report.reason);
  }
  return finish(std::move(doc));
}

std::string to_document(const CMReport& report) {
  json doc;
  doc["kind"] = "cm-report";
  if (report.verdict == CMVerdict::CompletelyMultiplicative) {
    doc["verdict"] = "completely-multiplicative";
    if (report.exponent) doc["exponent"] = *report.exponent;
    if (report.constant) doc["constant"] = report.constant->str();
  } else {
    doc["verdict"] = "not-cm";
    if (report.witness)
      doc["witness"] = json::array({report.witness->first, report.witness->second});
  }
  return finish(std::move(doc));
}

TruncatedSeries series_from_document(std::string_view text) {
  json doc = parse_json(text);
  check_kind(doc, "series");
  std::size_t order = index_field(doc, "order");
  std::vector<GaussianRational> coeffs = scalars_field(doc, "coeffs");
  if (coeffs.size() != order + 1)
    throw ParseError("series order " + std::to_string(order) + " needs " +
                     std::to_string(order + 1) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  return TruncatedSeries(std::move(coeffs));
}

HypSeries hyp_from_document(std::string_view text) {
  return hyp_from_json(parse_json(text));
}

EigenReport eigen_report_from_document(std::string_view text) {
  json doc = parse_json(text);
  check_kind(doc, "eigen-report");
  const json& verdict = field(doc, "verdict");
  if (!verdict.is_string()) throw ParseError("verdict must be a string");
  EigenReport report;
  std::string name = verdict.get<std::string>();
  if (name == "eigen") {
    report.verdict = EigenVerdict::Eigen;
    if (doc.contains("exponent")) {
      const json& e = doc["exponent"];
      if (!e.is_number_integer()) throw ParseError("exponent must be an integer");
      report.exponent = e.get<long>();
    }
    if (doc.contains("normalized_form"))
      report.normalized_form = hyp_from_json(doc["normalized_form"]);
  } else if (name == "not-eigen") {
    report.verdict = EigenVerdict::NotEigen;
    if (doc.contains("reason")) {
      const json& r = doc["reason"];
      if (!r.is_string()) throw ParseError("reason must be a string");
      report.reason = reason_from_name(r.get<std::string>());
    }
  } else {
    throw ParseError("unknown verdict \"" + name + "\"");
  }
  return report;
}

CMReport cm_report_from_document(std::string_view text) {
  json doc = parse_json(text);
  check_kind(doc, "cm-report");
  const json& verdict = field(doc, "verdict");
  if (!verdict.is_string()) throw ParseError("verdict must be a string");
  CMReport report;
  std::string name = verdict.get<std::string>();
  if (name == "completely-multiplicative") {
    report.verdict = CMVerdict::CompletelyMultiplicative;
    if (doc.contains("exponent")) {
      const json& e = doc["exponent"];
      if (!e.is_number_integer()) throw ParseError("exponent must be an integer");
      report.exponent = e.get<long>();
    }
    if (doc.contains("constant")) {
      const json& c = doc["constant"];
      if (!c.is_string()) throw ParseError("constant must be a string scalar");
      report.constant = GaussianRational::parse(c.get<std::string>());
    }
  } else if (name == "not-cm") {
    report.verdict = CMVerdict::NotCM;
    if (doc.contains("witness")) {
      const json& w = doc["witness"];
      if (!w.is_array() || w.size() != 2 || !w[0].is_number_unsigned() ||
          !w[1].is_number_unsigned())
        throw ParseError("witness must be a pair of indices");
      report.witness = {w[0].get<std::size_t>(), w[1].get<std::size_t>()};
    }
  } else {
    throw ParseError("unknown verdict \"" + name + "\"");
  }
  return report;
}

std::vector<GaussianRational> parse_scalar_list(std::string_view text) {
  std::vector<GaussianRational> values;
  bool blank = std::all_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  if (blank) return values;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = comma == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, comma - start);
    values.push_back(GaussianRational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

}  // namespace hecke::io

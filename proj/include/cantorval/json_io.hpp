#ifndef CANTORVAL_JSON_IO_HPP
#define CANTORVAL_JSON_IO_HPP

/// \file
/// JSON encoding. Rationals are strings "p/q" (or "n"); interval unions are
/// ordered lists of [lo, hi] string pairs. Object keys come out sorted, so
/// equal values serialize to identical bytes.

#include <string>
#include <vector>

#include <json.hpp>

#include "cantorval/achievement.hpp"
#include "cantorval/classifier.hpp"
#include "cantorval/gap_forest.hpp"
#include "cantorval/interval.hpp"
#include "cantorval/lambda.hpp"

namespace cantorval::json {

using Json = nlohmann::json;

inline Json encode(const Rational& q) { return to_string(q); }

inline Rational decode_rational(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError(where + ": expected a rational string like \"7/15\"");
  }
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

inline std::vector<Rational> decode_rationals(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(decode_rational(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline Json encode_list(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(encode(q));
  return out;
}

inline Json encode(const ClosedInterval& iv) { return Json::array({encode(iv.lo), encode(iv.hi)}); }
inline Json encode(const OpenInterval& iv) { return Json::array({encode(iv.lo), encode(iv.hi)}); }

inline Json encode(const IntervalUnion& u) {
  Json out = Json::array();
  for (const auto& p : u.parts()) out.push_back(encode(p));
  return out;
}

inline IntervalUnion decode_union(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected a list of [lo, hi] pairs");
  std::vector<ClosedInterval> parts;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || j[i].size() != 2) throw ParseError(at + ": expected [lo, hi]");
    try {
      parts.emplace_back(decode_rational(j[i][0], at), decode_rational(j[i][1], at));
    } catch (const DomainError& e) {
      throw ParseError(at + ": " + e.what());
    }
  }
  return normalize(std::move(parts));
}

inline Json encode(const LambdaSpec& spec) {
  return Json{{"lambda", {{"prefix", encode_list(spec.prefix())}, {"period", encode_list(spec.period())}}}};
}

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline LambdaSpec decode_lambda(const Json& j) {
  const Json& body = member(j, "lambda", "spec");
  std::vector<Rational> prefix;
  if (body.contains("prefix")) prefix = decode_rationals(body.at("prefix"), "lambda.prefix");
  std::vector<Rational> period = decode_rationals(member(body, "period", "lambda"), "lambda.period");
  if (period.empty()) throw ParseError("lambda.period must be nonempty");
  return LambdaSpec(std::move(prefix), std::move(period));
}

inline Json encode(const SeriesSpec& s) {
  return Json{{"series", {{"prefix", encode_list(s.prefix())}, {"block", encode_list(s.block())}, {"ratio", encode(s.ratio())}}}};
}

inline SeriesSpec decode_series(const Json& j) {
  const Json& body = member(j, "series", "spec");
  std::vector<Rational> prefix;
  if (body.contains("prefix")) prefix = decode_rationals(body.at("prefix"), "series.prefix");
  return SeriesSpec(std::move(prefix), decode_rationals(member(body, "block", "series"), "series.block"),
                    decode_rational(member(body, "ratio", "series"), "series.ratio"));
}

inline Json encode(const KSequenceSpec& k) {
  return Json{{"k", {{"prefix_bits", k.prefix_bits()}, {"period_bits", k.period_bits()}}}};
}

inline KSequenceSpec decode_k(const Json& j) {
  const Json& body = member(j, "k", "spec");
  std::string prefix;
  if (body.contains("prefix_bits")) {
    if (!body.at("prefix_bits").is_string()) throw ParseError("k.prefix_bits must be a string of bits");
    prefix = body.at("prefix_bits").get<std::string>();
  }
  const Json& period = member(body, "period_bits", "k");
  if (!period.is_string()) throw ParseError("k.period_bits must be a string of bits");
  if (period.get<std::string>().empty()) throw ParseError("k.period_bits must be nonempty");
  return KSequenceSpec(prefix, period.get<std::string>());
}

inline Json encode(const GapId& id) { return Json{{"code", id.code.str()}, {"side", id.side}}; }

/// {"<level>": [{code, side, lo, hi}, ...]}
inline Json encode(const LambdaSpec& spec, const GapFamily& family) {
  Json out = Json::object();
  for (const auto& [level, gaps] : family.levels) {
    Json list = Json::array();
    for (const auto& id : gaps) {
      const OpenInterval g = gap(spec, id);
      Json entry = encode(id);
      entry["lo"] = encode(g.lo);
      entry["hi"] = encode(g.hi);
      list.push_back(std::move(entry));
    }
    out[std::to_string(level)] = std::move(list);
  }
  return out;
}

inline Json encode(const DepthReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows)
    rows.push_back(Json{{"depth", r.depth},
                        {"measure", encode(r.measure)},
                        {"parts", r.parts},
                        {"gap_count", r.gap_count},
                        {"largest_gap", encode(r.largest_gap)},
                        {"largest_part", encode(r.largest_part)},
                        {"stable", r.stable}});
  return rows;
}

inline DepthReport decode_depth_report(const Json& j) {
  if (!j.is_array()) throw ParseError("depth_report: expected an array");
  DepthReport report;
  for (const auto& r : j) {
    DepthRow row;
    row.depth = member(r, "depth", "depth_report").get<std::size_t>();
    row.measure = decode_rational(member(r, "measure", "depth_report"), "depth_report.measure");
    row.parts = member(r, "parts", "depth_report").get<std::size_t>();
    row.gap_count = member(r, "gap_count", "depth_report").get<std::size_t>();
    row.largest_gap = decode_rational(member(r, "largest_gap", "depth_report"), "depth_report.largest_gap");
    row.largest_part = decode_rational(member(r, "largest_part", "depth_report"), "depth_report.largest_part");
    row.stable = member(r, "stable", "depth_report").get<bool>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline Json encode(const TrichotomyCertificate& cert) {
  Json out = encode(cert.spec);
  out["verdict"] = to_string(cert.verdict);
  out["rule"] = cert.rule;
  out["depth"] = cert.depth;
  out["measure"] = cert.measure ? encode(*cert.measure) : Json(nullptr);
  if (cert.k0) out["k0"] = *cert.k0;
  if (cert.relation_residuals) {
    Json list = Json::array();
    for (const auto& r : *cert.relation_residuals)
      list.push_back(Json{{"index", r.index}, {"case", r.case_tag}, {"residual", encode(r.residual)}});
    out["relation_residuals"] = std::move(list);
  }
  if (cert.stabilization_depth) out["stabilization_depth"] = *cert.stabilization_depth;
  if (cert.finite_union) out["finite_union"] = encode(*cert.finite_union);
  if (cert.depth_report) out["depth_report"] = encode(*cert.depth_report);
  return out;
}

inline TrichotomyCertificate decode_certificate(const Json& j) {
  try {
    TrichotomyCertificate cert{decode_lambda(j)};
    cert.verdict = parse_verdict(member(j, "verdict", "certificate").get<std::string>());
    cert.rule = member(j, "rule", "certificate").get<std::string>();
    if (j.contains("depth")) cert.depth = j.at("depth").get<std::size_t>();
    if (j.contains("measure") && !j.at("measure").is_null())
      cert.measure = decode_rational(j.at("measure"), "certificate.measure");
    if (j.contains("k0")) cert.k0 = j.at("k0").get<std::size_t>();
    if (j.contains("relation_residuals")) {
      std::vector<RelationResidual> list;
      for (const auto& r : j.at("relation_residuals"))
        list.push_back({member(r, "index", "relation_residuals").get<std::size_t>(),
                        member(r, "case", "relation_residuals").get<std::string>(),
                        decode_rational(member(r, "residual", "relation_residuals"), "relation_residuals.residual")});
      cert.relation_residuals = std::move(list);
    }
    if (j.contains("stabilization_depth")) cert.stabilization_depth = j.at("stabilization_depth").get<std::size_t>();
    if (j.contains("finite_union")) cert.finite_union = decode_union(j.at("finite_union"), "certificate.finite_union");
    if (j.contains("depth_report")) cert.depth_report = decode_depth_report(j.at("depth_report"));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate: ") + e.what());
  }
}

inline Json encode(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return Json{{"ok", report.ok()}, {"checks", std::move(checks)}};
}

/// Parses JSON text, reporting syntax errors as ParseError.
inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace cantorval::json

#endif  // CANTORVAL_JSON_IO_HPP

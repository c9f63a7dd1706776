#include "knotconc/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "knotconc/csv.hpp"
#include "knotconc/errors.hpp"
#include "knotconc/polyio.hpp"
#include "knotconc/rootloc.hpp"

namespace knotconc {

using ordered_json = nlohmann::ordered_json;

std::string RecordEntry::verdict() const {
  if (is_error()) return "error";
  return obstruction && obstruction->obstructed() ? "obstructed" : "not_obstructed_by_this_test";
}

ScanSummary ScanReport::summary() const {
  ScanSummary s;
  s.total = records.size();
  for (const auto& r : records) {
    if (r.is_error())
      ++s.errors;
    else if (r.obstruction->obstructed())
      ++s.obstructed;
    else
      ++s.not_obstructed;
  }
  return s;
}

RecordEntry analyze(const KnotRecord& record, const ScanOptions& opts) {
  RecordEntry e;
  e.name = record.name;
  e.source_line = record.source_line;
  e.alexander = normalize(record.alexander);
  e.obstruction = obstruction_report(*e.alexander, opts.nmax);
  e.lspace_form = is_lspace_form(*e.alexander);
  e.radius2 = lspace_sum_necessary(*e.alexander);
  const IntPoly p = e.alexander->to_int_poly();
  if (p.degree() >= 1) {
    NumericOptions nopts;
    nopts.digits = opts.digits;
    nopts.thresholds = {2.0};
    try {
      const auto roots = root_moduli_numeric(p, nopts);
      e.max_modulus = NumericModulus{roots.front().modulus, roots.front().radius};
    } catch (const ConvergenceFailure& ex) {
      e.numeric_error = ex.what();
    }
  }
  return e;
}

RecordEntry analyze_row(const std::string& name, const std::string& alexander, std::size_t line,
                        const ScanOptions& opts) {
  RecordEntry err;
  err.name = name;
  err.source_line = line;
  if (name.empty()) {
    err.error = "empty knot name";
    return err;
  }
  try {
    LaurentPoly poly = parse_poly(alexander);
    if (poly.is_zero()) {
      err.error = "zero polynomial";
      return err;
    }
    return analyze(KnotRecord{name, std::move(poly), line}, opts);
  } catch (const ParseError& ex) {
    err.error = ex.what();
    err.error_offset = ex.offset();
  } catch (const Error& ex) {
    err.error = ex.what();
  }
  return err;
}

namespace {

std::string trim_cr(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) s.pop_back();
  return s;
}

ScanReport scan_rows(const std::vector<csv::Row>& rows, const ScanOptions& opts) {
  if (rows.empty()) throw HeaderMismatch("");
  const auto& header = rows.front().fields;
  if (header.size() != 2 || trim_cr(header[0]) != "name" || trim_cr(header[1]) != "alexander") {
    std::string joined;
    for (std::size_t i = 0; i < header.size(); ++i) joined += (i ? "," : "") + header[i];
    throw HeaderMismatch(joined);
  }

  ScanReport report;
  report.command = "scan";
  report.options = opts;
  report.records.resize(rows.size() - 1);

  auto work = [&](std::size_t i) {
    const csv::Row& row = rows[i + 1];
    RecordEntry& out = report.records[i];
    if (row.malformed) {
      out.name = row.fields.empty() ? "" : row.fields.front();
      out.source_line = row.line;
      out.error = "unterminated quoted field";
    } else if (row.fields.size() != 2) {
      out.name = row.fields.empty() ? "" : row.fields.front();
      out.source_line = row.line;
      out.error = "expected 2 fields, got " + std::to_string(row.fields.size());
    } else {
      out = analyze_row(row.fields[0], row.fields[1], row.line, opts);
    }
  };

  const std::size_t n = report.records.size();
  const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) work(i);
      });
    }
  }
  return report;
}

}  // namespace

ScanReport scan_csv_text(const std::string& text, const ScanOptions& opts) {
  std::istringstream in(text);
  return scan_rows(csv::read_all(in), opts);
}

ScanReport scan_csv(const std::string& path, const ScanOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileNotFound(path);
  ScanReport report = scan_rows(csv::read_all(in), opts);
  report.input = path;
  return report;
}

ScanReport check_poly(const std::string& text, const ScanOptions& opts) {
  LaurentPoly poly = parse_poly(text);
  if (poly.is_zero()) throw ZeroPolynomial("check");
  ScanReport report;
  report.command = "check";
  report.input = text;
  report.options = opts;
  report.records.push_back(analyze(KnotRecord{"input", std::move(poly), 1}, opts));
  return report;
}

namespace {

ordered_json record_json(const RecordEntry& r) {
  ordered_json j;
  j["name"] = r.name;
  j["source_line"] = r.source_line;
  j["verdict"] = r.verdict();
  if (r.is_error()) {
    j["alexander"] = nullptr;
    j["witness_n"] = nullptr;
    j["multiplicities"] = ordered_json::array();
    j["exhaustive"] = nullptr;
    j["nmax_used"] = nullptr;
    j["lspace_form"] = nullptr;
    j["lspace_form_violation"] = nullptr;
    j["radius2_pass"] = nullptr;
    j["radius2_reason"] = nullptr;
    j["radius2_witness"] = nullptr;
    j["max_modulus_estimate"] = nullptr;
    ordered_json err;
    err["message"] = *r.error;
    err["offset"] = r.error_offset ? ordered_json(*r.error_offset) : ordered_json(nullptr);
    j["error"] = err;
    return j;
  }
  const ObstructionReport& ob = *r.obstruction;
  j["alexander"] = render_poly(*r.alexander);
  j["witness_n"] = ob.witness_n ? ordered_json(*ob.witness_n) : ordered_json(nullptr);
  ordered_json mults = ordered_json::array();
  for (const auto& c : ob.candidates) {
    ordered_json m;
    m["n"] = c.n;
    m["multiplicity"] = c.multiplicity;
    m["parity"] = c.odd() ? "odd" : "even";
    mults.push_back(m);
  }
  j["multiplicities"] = mults;
  j["exhaustive"] = ob.exhaustive;
  j["nmax_used"] = ob.exhaustive ? ordered_json(nullptr) : ordered_json(ob.nmax_used);
  j["lspace_form"] = r.lspace_form.ok;
  j["lspace_form_violation"] =
      r.lspace_form.violation ? ordered_json(*r.lspace_form.violation) : ordered_json(nullptr);
  j["radius2_pass"] = r.radius2.pass ? "pass" : "fail";
  j["radius2_reason"] = to_string(r.radius2.reason);
  if (r.radius2.witness)
    j["radius2_witness"] = {r.radius2.witness->lo.get_str(), r.radius2.witness->hi.get_str()};
  else
    j["radius2_witness"] = nullptr;
  if (r.max_modulus) {
    ordered_json m;
    m["value"] = r.max_modulus->value;
    m["radius"] = r.max_modulus->radius;
    m["exact"] = false;
    j["max_modulus_estimate"] = m;
  } else if (r.numeric_error) {
    ordered_json m;
    m["error"] = *r.numeric_error;
    j["max_modulus_estimate"] = m;
  } else {
    j["max_modulus_estimate"] = nullptr;
  }
  j["error"] = nullptr;
  return j;
}

std::string tsv_cell(std::string s) {
  std::replace_if(s.begin(), s.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return s;
}

}  // namespace

std::string to_json(const ScanReport& report) {
  ordered_json doc;
  ordered_json params;
  params["tool_version"] = kToolVersion;
  params["command"] = report.command;
  params["input"] = report.input;
  params["nmax"] = report.options.nmax ? ordered_json(*report.options.nmax) : ordered_json(nullptr);
  params["digits"] = report.options.digits;
  params["format"] = report.options.format == OutputFormat::json ? "json" : "tsv";
  doc["parameters"] = params;
  ordered_json recs = ordered_json::array();
  for (const auto& r : report.records) recs.push_back(record_json(r));
  doc["records"] = recs;
  const ScanSummary s = report.summary();
  ordered_json sum;
  sum["total"] = s.total;
  sum["obstructed"] = s.obstructed;
  sum["not_obstructed_by_this_test"] = s.not_obstructed;
  sum["error"] = s.errors;
  doc["summary"] = sum;
  return doc.dump(2) + "\n";
}

std::string to_tsv(const ScanReport& report) {
  std::string out = "name\tverdict\twitness_n\texhaustive\tlspace_form\tradius2_pass\n";
  for (const auto& r : report.records) {
    out += tsv_cell(r.name) + '\t' + r.verdict() + '\t';
    if (!r.is_error()) {
      const auto& ob = *r.obstruction;
      out += (ob.witness_n ? std::to_string(*ob.witness_n) : std::string()) + '\t';
      out += std::string(ob.exhaustive ? "true" : "false") + '\t';
      out += std::string(r.lspace_form.ok ? "true" : "false") + '\t';
      out += r.radius2.pass ? "pass" : "fail";
    } else {
      out += "\t\t\t";
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const ScanReport& report) {
  return report.options.format == OutputFormat::json ? to_json(report) : to_tsv(report);
}

}  // namespace knotconc

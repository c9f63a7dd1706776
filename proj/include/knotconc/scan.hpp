#pragma once

// Batch scanning of knot corpora and report serialization.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotconc/concordance.hpp"
#include "knotconc/lspace.hpp"
#include "knotconc/polyarith.hpp"

namespace knotconc {

inline constexpr const char* kToolVersion = "0.1.0";

struct KnotRecord {
  std::string name;
  LaurentPoly alexander;  // normalized, nonzero
  std::size_t source_line = 0;
};

enum class OutputFormat { json, tsv };

struct ScanOptions {
  std::optional<std::int64_t> nmax;
  int digits = 12;
  OutputFormat format = OutputFormat::json;
  /// Worker threads for row analysis; output does not depend on it.
  unsigned jobs = 1;
};

struct NumericModulus {
  double value = 0.0;
  double radius = 0.0;
};

struct RecordEntry {
  std::string name;
  std::size_t source_line = 0;
  std::optional<LaurentPoly> alexander;
  std::optional<ObstructionReport> obstruction;
  LspaceFormResult lspace_form;
  NecessaryVerdict radius2;
  std::optional<NumericModulus> max_modulus;
  std::optional<std::string> numeric_error;
  /// Set for rows that could not be analysed.
  std::optional<std::string> error;
  std::optional<std::size_t> error_offset;

  bool is_error() const { return error.has_value(); }
  /// "obstructed", "not_obstructed_by_this_test" or "error".
  std::string verdict() const;
};

struct ScanSummary {
  std::size_t total = 0;
  std::size_t obstructed = 0;
  std::size_t not_obstructed = 0;
  std::size_t errors = 0;
};

struct ScanReport {
  std::string command;
  std::string input;
  ScanOptions options;
  std::vector<RecordEntry> records;

  ScanSummary summary() const;
  bool any_error() const { return summary().errors > 0; }
};

/// Full analysis of one knot: obstruction report, L-space form, radius-2
/// condition and a numeric largest-modulus diagnostic.
RecordEntry analyze(const KnotRecord& record, const ScanOptions& opts);

/// Parses `alexander` and analyses it; failures become error entries.
RecordEntry analyze_row(const std::string& name, const std::string& alexander, std::size_t line,
                        const ScanOptions& opts);

/// Scans a CSV with header `name,alexander`. One entry per data row, in input
/// order. Throws FileNotFound, HeaderMismatch.
ScanReport scan_csv(const std::string& path, const ScanOptions& opts);

/// Scans CSV text already in memory.
ScanReport scan_csv_text(const std::string& text, const ScanOptions& opts);

/// Single-polynomial report. Throws ParseError on bad input.
ScanReport check_poly(const std::string& text, const ScanOptions& opts);

std::string to_json(const ScanReport& report);
std::string to_tsv(const ScanReport& report);
std::string serialize(const ScanReport& report);

}  // namespace knotconc

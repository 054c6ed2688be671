// report.hpp — rendering of results as human tables, CSV or JSON lines.
#pragma once

#include <string>

#include "ecix/extremal.hpp"
#include "ecix/graph.hpp"

namespace ecix {

enum class Format { Table, Csv, JsonLines };

Format parse_format(const std::string& name);  // "table" | "csv" | "json-lines"

// CSV columns: vertex,degree,eccentricity,product with a trailing total row.
std::string emit_report(const EciReport& report, Format format);

// CSV columns: direction,n,pending,edges,dominating,value,class_size,graph6
// (one row per optimum).
std::string emit_report(const ExtremalResult& result, Format format);

// CSV columns: statement,n_min,n_max,verdict,graph6,expected,observed,detail
// (one summary row, then one row per counterexample).
std::string emit_report(const VerificationOutcome& outcome, Format format);

}  // namespace ecix

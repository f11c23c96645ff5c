#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusion/catalog.hpp"
#include "fusion/enumerator.hpp"
#include "fusion/graph_pair.hpp"
#include "fusion/ring.hpp"

namespace fusion {

using Json = nlohmann::ordered_json;

class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk ring: {"rank", "loops", "arcs", "hyperedges"} plus optional
/// "name", "source", "invariants" and "fp_dims". Lists are ascending.
struct RingRecord {
  int rank = 1;
  GraphPair pair;
  std::optional<std::string> name;
  std::optional<std::string> source;
  std::optional<RingInvariants> invariants;

  bool operator==(const RingRecord&) const = default;
};

RingRecord make_record(const GraphPair& pair);
RingRecord make_record(const EnumeratedRing& ring);
RingRecord make_record(const CatalogEntry& entry);

Json to_json(const RingRecord& record);
/// Throws parse_error on missing fields, wrong types, or invalid vertices.
RingRecord record_from_json(const Json& j);
RingRecord parse_record(const std::string& text);

/// "L:{1;2}|A:{(1,2);(2,1)}|H:{(1,2,3)}"
std::string to_line(const GraphPair& pair);

enum class Format { Json, Table, Lines };
Format parse_format(const std::string& text);

/// Columns Loops | Arcs | Hyperedges | Name, one row per record.
std::string format_table(const std::vector<RingRecord>& records);
std::string format_lines(const std::vector<RingRecord>& records);
std::string format_records(const std::vector<RingRecord>& records, Format format);

/// Byte-deterministic rendering of an enumeration (stats and timing are not
/// part of it).
std::string format_result(const EnumerationResult& result, Format format);

Json to_json(const TripleSystem& ts);
TripleSystem triple_system_from_json(const Json& j);

}  // namespace fusion

#include "fusion/record_io.hpp"

#include <sstream>

#include "fusion/graph_model.hpp"

namespace fusion {

RingRecord make_record(const GraphPair& pair) {
  RingRecord r;
  r.rank = pair.order() + 1;
  r.pair = pair;
  return r;
}

RingRecord make_record(const EnumeratedRing& ring) {
  RingRecord r = make_record(ring.pair);
  r.name = ring.catalog_name;
  r.invariants = ring.invariants;
  return r;
}

RingRecord make_record(const CatalogEntry& entry) {
  RingRecord r = make_record(entry.pair);
  if (!entry.name.empty()) r.name = entry.name;
  r.source = entry.source;
  return r;
}

Json to_json(const RingRecord& record) {
  Json j;
  j["rank"] = record.rank;
  j["loops"] = record.pair.loops();
  Json arcs = Json::array();
  for (const Arc& a : record.pair.arcs()) arcs.push_back({a.first, a.second});
  j["arcs"] = std::move(arcs);
  Json hyper = Json::array();
  for (const Triple& t : record.pair.hyperedges()) hyper.push_back({t[0], t[1], t[2]});
  j["hyperedges"] = std::move(hyper);
  if (record.name) j["name"] = *record.name;
  if (record.source) j["source"] = *record.source;
  if (record.invariants) {
    const RingInvariants& inv = *record.invariants;
    j["invariants"] = {{"loop_sum", inv.loop_sum},   {"arc_sum", inv.arc_sum},
                       {"triple_sum", inv.triple_sum}, {"trace_sum", inv.trace_sum},
                       {"total_sum", inv.total_sum},   {"fp_total", inv.fp_total}};
    j["fp_dims"] = inv.fp_dims;
  }
  return j;
}

namespace {

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw parse_error(std::string("missing field \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_tuple(const Json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size) {
    throw parse_error(std::string(what) + " entries must be lists of length " + std::to_string(size));
  }
  std::vector<int> out;
  for (const Json& v : j) out.push_back(as_int(v, what));
  return out;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw parse_error(std::string("\"") + key + "\" must be a list");
  return a;
}

}  // namespace

RingRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("ring record must be a JSON object");
  RingRecord r;
  r.rank = as_int(field(j, "rank"), "rank");
  if (r.rank < 1) throw parse_error("rank must be at least 1");

  std::vector<int> loops;
  for (const Json& v : array_field(j, "loops")) loops.push_back(as_int(v, "loop"));
  std::vector<Arc> arcs;
  for (const Json& v : array_field(j, "arcs")) {
    const std::vector<int> a = int_tuple(v, 2, "arc");
    arcs.emplace_back(a[0], a[1]);
  }
  std::vector<Triple> hyper;
  for (const Json& v : array_field(j, "hyperedges")) {
    const std::vector<int> t = int_tuple(v, 3, "hyperedge");
    hyper.push_back({t[0], t[1], t[2]});
  }
  try {
    r.pair = GraphPair(r.rank - 1, std::move(loops), std::move(arcs), std::move(hyper));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
  if (auto it = j.find("name"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw parse_error("name must be a string");
    r.name = it->get<std::string>();
  }
  if (auto it = j.find("source"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) throw parse_error("source must be a string");
    r.source = it->get<std::string>();
  }
  if (auto it = j.find("invariants"); it != j.end() && !it->is_null()) {
    RingInvariants inv;
    try {
      inv.loop_sum = it->at("loop_sum").get<long>();
      inv.arc_sum = it->at("arc_sum").get<long>();
      inv.triple_sum = it->at("triple_sum").get<long>();
      inv.trace_sum = it->at("trace_sum").get<long>();
      inv.total_sum = it->at("total_sum").get<long>();
      inv.fp_total = it->at("fp_total").get<double>();
      if (auto d = j.find("fp_dims"); d != j.end()) inv.fp_dims = d->get<std::vector<double>>();
    } catch (const nlohmann::json::exception& e) {
      throw parse_error(std::string("bad invariants: ") + e.what());
    }
    r.invariants = std::move(inv);
  }
  return r;
}

RingRecord parse_record(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
  return record_from_json(j);
}

std::string to_line(const GraphPair& pair) {
  std::ostringstream os;
  os << "L:{";
  for (std::size_t i = 0; i < pair.loops().size(); ++i) os << (i ? ";" : "") << pair.loops()[i];
  os << "}|A:{";
  for (std::size_t i = 0; i < pair.arcs().size(); ++i) {
    const Arc& a = pair.arcs()[i];
    os << (i ? ";" : "") << '(' << a.first << ',' << a.second << ')';
  }
  os << "}|H:{";
  for (std::size_t i = 0; i < pair.hyperedges().size(); ++i) {
    const Triple& t = pair.hyperedges()[i];
    os << (i ? ";" : "") << '(' << t[0] << ',' << t[1] << ',' << t[2] << ')';
  }
  os << '}';
  return os.str();
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "table") return Format::Table;
  if (text == "lines") return Format::Lines;
  throw parse_error("unknown format \"" + text + "\"");
}

std::string format_table(const std::vector<RingRecord>& records) {
  std::ostringstream os;
  os << "Loops | Arcs | Hyperedges | Name\n";
  for (const RingRecord& r : records) {
    const GraphPair& p = r.pair;
    for (std::size_t i = 0; i < p.loops().size(); ++i) os << (i ? ", " : "") << p.loops()[i];
    os << " | ";
    for (std::size_t i = 0; i < p.arcs().size(); ++i)
      os << (i ? ", " : "") << '(' << p.arcs()[i].first << ", " << p.arcs()[i].second << ')';
    os << " | ";
    for (std::size_t i = 0; i < p.hyperedges().size(); ++i) {
      const Triple& t = p.hyperedges()[i];
      os << (i ? ", " : "") << '(' << t[0] << ", " << t[1] << ", " << t[2] << ')';
    }
    os << " | " << r.name.value_or("") << '\n';
  }
  return os.str();
}

std::string format_lines(const std::vector<RingRecord>& records) {
  std::string out;
  for (const RingRecord& r : records) {
    out += to_line(r.pair);
    if (r.name) out += "\t" + *r.name;
    out += '\n';
  }
  return out;
}

std::string format_records(const std::vector<RingRecord>& records, Format format) {
  switch (format) {
    case Format::Table: return format_table(records);
    case Format::Lines: return format_lines(records);
    case Format::Json: break;
  }
  Json arr = Json::array();
  for (const RingRecord& r : records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::string format_result(const EnumerationResult& result, Format format) {
  std::vector<RingRecord> records;
  records.reserve(result.rings.size());
  for (const EnumeratedRing& ring : result.rings) records.push_back(make_record(ring));
  return format_records(records, format);
}

Json to_json(const TripleSystem& ts) {
  Json j;
  j["points"] = ts.points;
  Json triples = Json::array();
  for (const Triple& t : ts.triples) triples.push_back({t[0], t[1], t[2]});
  j["triples"] = std::move(triples);
  return j;
}

TripleSystem triple_system_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("triple system must be a JSON object");
  TripleSystem ts;
  ts.points = as_int(field(j, "points"), "points");
  if (ts.points < 0) throw parse_error("points must be non-negative");
  for (const Json& v : array_field(j, "triples")) {
    const std::vector<int> t = int_tuple(v, 3, "triple");
    ts.triples.push_back({t[0], t[1], t[2]});
  }
  return ts;
}

}  // namespace fusion

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "fusion/canonical.hpp"
#include "fusion/catalog.hpp"
#include "fusion/enumerator.hpp"
#include "fusion/errors.hpp"
#include "fusion/graph_model.hpp"
#include "fusion/record_io.hpp"
#include "fusion/ring.hpp"

namespace fusion::cli {
namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_usage = 2;
constexpr int exit_bound = 3;

constexpr int default_max_rank = 7;
constexpr int extended_max_rank = 8;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw usage_error("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

RingRecord load_record(const std::string& path, std::istream& in) {
  return parse_record(read_source(path, in));
}

int rank_limit(bool extended) {
  if (const char* env = std::getenv("FUSION_FORGE_MAX_RANK"); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 2) throw usage_error("FUSION_FORGE_MAX_RANK must be an integer >= 2");
    return int(v);
  }
  return extended ? extended_max_rank : default_max_rank;
}

void print_record(const RingRecord& record, Format format, std::ostream& out) {
  if (format == Format::Json) {
    out << to_json(record).dump(2) << '\n';
  } else {
    out << format_records({record}, format);
  }
}

struct Options {
  int rank = 0;
  bool undirected = false;
  bool triangle_free = false;
  bool empty_graph = false;
  bool extended = false;
  bool stats = false;
  int jobs = 1;
  std::string format = "json";
  std::string out_dir;
  std::vector<std::string> paths;
  int k = 0;
  std::string check;
};

int cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(o.format);
  if (o.rank < 2) throw usage_error("--rank must be at least 2");
  const int limit = rank_limit(o.extended);
  if (o.rank > limit) {
    err << "error: rank " << o.rank << " exceeds the configured limit " << limit
        << (o.extended ? "" : " (use --extended for rank 8)") << '\n';
    return exit_bound;
  }
  if (o.jobs < 1) throw usage_error("--jobs must be positive");

  SearchFilter filter;
  filter.undirected_only = o.undirected;
  filter.triangle_free_only = o.triangle_free;
  filter.empty_graph_only = o.empty_graph;
  EnumerationResult result = search(o.rank, filter, SearchOptions{o.jobs});
  Catalog::standard().annotate(result);

  if (o.stats) {
    const SearchStats& s = result.stats;
    err << "digraphs generated: " << s.digraphs_generated << '\n'
        << "digraphs kept: " << s.digraphs_kept << '\n';
    for (const auto& [reason, count] : s.digraphs_pruned_by_reason)
      err << "pruned (" << to_string(reason) << "): " << count << '\n';
    err << "completions tested: " << s.completions_tested << '\n'
        << "rings: " << result.rings.size() << '\n'
        << "elapsed seconds: " << s.elapsed_seconds << '\n';
  }

  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    const auto file = std::filesystem::path(o.out_dir) / ("rank" + std::to_string(o.rank) + ".json");
    std::ofstream f(file, std::ios::binary);
    if (!f) throw usage_error("cannot write " + file.string());
    f << format_result(result, Format::Json);
    err << "wrote " << result.rings.size() << " rings to " << file.string() << '\n';
    return exit_ok;
  }
  out << format_result(result, format);
  return exit_ok;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  const RingRecord record = load_record(o.paths.at(0), in);
  if (auto v = verify(decode(record.pair))) {
    out << "COMMUTATOR " << v->i << ' ' << v->j << ' ' << v->a << ' ' << v->b << '\n';
    return exit_invalid;
  }
  out << "VALID\n";
  return exit_ok;
}

int cmd_canon(const Options& o, std::istream& in, std::ostream& out) {
  const Format format = parse_format(o.format);
  RingRecord record = load_record(o.paths.at(0), in);
  const CanonicalKey key = canonical_form(record.pair);
  record.pair = record.pair.relabeled(key.witness);
  switch (format) {
    case Format::Json: {
      Json j = to_json(record);
      j["key"] = key.hex();
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Lines:
      out << to_line(record.pair) << '\t' << key.hex() << '\n';
      break;
    case Format::Table:
      out << format_table({record});
      break;
  }
  return exit_ok;
}

int cmd_product(const Options& o, std::istream& in, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.paths.size() != 2) throw usage_error("product takes exactly two ring files");
  if (o.paths[0] == "-" && o.paths[1] == "-") throw usage_error("only one input may be stdin");
  const RingRecord a = load_record(o.paths[0], in);
  const RingRecord b = load_record(o.paths[1], in);
  const FusionData p = product(decode(a.pair), decode(b.pair));
  RingRecord record = make_record(encode(p));
  if (a.name && b.name) record.name = *a.name + "⊠" + *b.name;
  print_record(record, format, out);
  return exit_ok;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const RingRecord record = load_record(o.paths.at(0), in);
  try {
    if (auto family = classify_triangle_free(record.pair)) {
      out << "triangle-free family " << family->family;
      if (family->family == 4) out << " (k = " << family->k << ")";
      out << '\n';
      return exit_ok;
    }
    out << "no fusion ring\n";
    return exit_invalid;
  } catch (const not_undirected& e) {
    err << "error: " << e.what() << '\n';
  } catch (const not_triangle_free& e) {
    err << "error: " << e.what() << '\n';
  }
  return exit_invalid;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  const Catalog& catalog = Catalog::standard();
  std::vector<RingRecord> records;
  if (o.rank > 0) {
    for (const CatalogEntry& e : catalog.entries_of_rank(o.rank)) records.push_back(make_record(e));
  } else {
    for (const CatalogEntry& e : catalog.builtins()) records.push_back(make_record(e));
  }
  out << format_records(records, format);
  return exit_ok;
}

int cmd_sts(const Options& o, std::istream& in, std::ostream& out) {
  if (o.k == 0 && o.check.empty()) throw usage_error("sts needs --k or --check");
  if (o.k < 0) throw usage_error("--k must be positive");
  TripleSystem ts;
  if (o.k > 0) {
    if (o.k > 4) throw order_too_large((1 << o.k) - 1, 15);
    ts = boolean_sts(o.k);
    if (o.check.empty()) {
      out << to_json(ts).dump(2) << '\n';
      return exit_ok;
    }
    if (o.check != "-") throw usage_error("--check with --k takes \"-\"");
  } else {
    const std::string text = read_source(o.check, in);
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    ts = triple_system_from_json(j);
  }
  const bool steiner = is_steiner(ts);
  const bool ring = sts_generates_ring(ts);
  out << "STS: " << (steiner ? "yes" : "no") << "; generates ring: " << (ring ? "yes" : "no")
      << '\n';
  return steiner && ring ? exit_ok : exit_invalid;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Enumerate and check self-dual multiplicity-free fusion rings", "fusion-forge"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "table", "lines"}));
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate all rings of a rank");
  enumerate->add_option("--rank", o.rank, "Rank (2..7, 8 with --extended)")->required();
  enumerate->add_flag("--undirected", o.undirected, "Only undirected digraphs");
  enumerate->add_flag("--triangle-free", o.triangle_free, "Only triangle-free digraphs");
  enumerate->add_flag("--empty-graph", o.empty_graph, "Only digraphs with no loops or arcs");
  enumerate->add_flag("--extended", o.extended, "Allow rank 8");
  enumerate->add_flag("--stats", o.stats, "Print search statistics to stderr");
  enumerate->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
  enumerate->add_option("--out", o.out_dir, "Write rank<r>.json into this directory");
  add_format(enumerate);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a ring record");
  verify_cmd->add_option("path", o.paths, "Ring JSON file or -")->required()->expected(1);

  CLI::App* canon = app.add_subcommand("canon", "Canonical relabeling and key");
  canon->add_option("path", o.paths, "Ring JSON file or -")->required()->expected(1);
  add_format(canon);

  CLI::App* product_cmd = app.add_subcommand("product", "Deligne product of two rings");
  product_cmd->add_option("paths", o.paths, "Two ring JSON files")->required()->expected(2);
  add_format(product_cmd);

  CLI::App* classify = app.add_subcommand("classify", "Triangle-free family of a ring's digraph");
  classify->add_option("path", o.paths, "Ring JSON file or -")->required()->expected(1);

  CLI::App* catalog = app.add_subcommand("catalog", "List reference rings");
  catalog->add_option("--rank", o.rank, "Only this rank (includes products)");
  add_format(catalog);

  CLI::App* sts = app.add_subcommand("sts", "Boolean Steiner triple systems");
  sts->add_option("--k", o.k, "Build the system on 2^k - 1 points");
  sts->add_option("--check", o.check, "Check a triple system JSON file, or - with --k");

  std::vector<std::string> argv_storage{"fusion-forge"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o, out, err);
    if (*verify_cmd) return cmd_verify(o, in, out);
    if (*canon) return cmd_canon(o, in, out);
    if (*product_cmd) return cmd_product(o, in, out);
    if (*classify) return cmd_classify(o, in, out, err);
    if (*catalog) return cmd_catalog(o, out);
    if (*sts) return cmd_sts(o, in, out);
  } catch (const order_too_large& e) {
    err << "error: " << e.what() << '\n';
    return exit_bound;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const non_convergence& e) {
    err << "error: " << e.what() << '\n';
    return exit_invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace fusion::cli

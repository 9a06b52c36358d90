#ifndef VRHQ_CLI_HPP
#define VRHQ_CLI_HPP

// Command-line front end. Every command produces an envelope
//   {command, params, result, provenance, status}
// rendered as JSON, or as a CSV / Markdown table of the result.
//
// Exit codes: 0 success (including negative mathematical answers and
// time-limited bounds), 2 flag errors, 3 malformed input, 4 resource caps,
// 1 anything unexpected.

#include "CLI11.hpp"
#include "vrhq/vrhq.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef VRHQ_VERSION
#define VRHQ_VERSION "unknown"
#endif

namespace vrhq::cli {

using json = nlohmann::json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_input = 3;
inline constexpr int exit_resource = 4;

enum class Format { json, csv, md };

/// Command payload plus what the table encoders need to lay it out.
struct Output {
  json params = json::object();
  json result = json::object();
  std::string rows_key;              ///< result[rows_key] is an array of row objects, if set
  std::vector<std::string> columns;  ///< column order for row tables
};

/// Big integers become JSON numbers when they fit in int64, strings otherwise.
inline json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

/// "600s", "10m", "1h", "250ms", or a bare number of seconds.
inline std::optional<std::chrono::milliseconds> parse_duration(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  if (text.empty() || !std::isdigit(static_cast<unsigned char>(text.front()))) return std::nullopt;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  const std::string unit = text.substr(pos);
  std::uint64_t scale = 0;
  if (unit.empty() || unit == "s") scale = 1000;
  else if (unit == "ms") scale = 1;
  else if (unit == "m") scale = 60'000;
  else if (unit == "h") scale = 3'600'000;
  else return std::nullopt;
  if (value > std::numeric_limits<std::int64_t>::max() / scale) return std::nullopt;
  return std::chrono::milliseconds(static_cast<std::int64_t>(value * scale));
}

/// Comma-separated decimal vertex labels.
inline std::vector<VertexLabel> parse_vertex_list(const std::string& csv) {
  std::vector<VertexLabel> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    tok = b == std::string::npos ? "" : tok.substr(b, e - b + 1);
    std::size_t pos = 0;
    std::uint64_t v = 0;
    bool ok = !tok.empty() && std::isdigit(static_cast<unsigned char>(tok.front()));
    if (ok) {
      try {
        v = std::stoull(tok, &pos, 10);
      } catch (const std::exception&) {
        ok = false;
      }
    }
    if (!ok || pos != tok.size()) throw InvalidVertex("not a vertex label: '" + tok + "'");
    out.push_back({v});
  }
  if (out.empty()) throw InvalidVertex("empty vertex list");
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Encoders

namespace detail {

inline std::string cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

/// Header plus rows of cells: the row array when there is one, else key/value pairs.
inline std::vector<std::vector<std::string>> tabulate(const Output& o) {
  std::vector<std::vector<std::string>> table;
  if (!o.rows_key.empty()) {
    table.push_back(o.columns);
    for (const auto& row : o.result.at(o.rows_key)) {
      std::vector<std::string> cells;
      for (const auto& c : o.columns) cells.push_back(row.contains(c) ? cell(row.at(c)) : "");
      table.push_back(std::move(cells));
    }
    return table;
  }
  table.push_back({"key", "value"});
  for (const auto& [k, v] : o.result.items()) table.push_back({k, cell(v)});
  return table;
}

} // namespace detail

inline std::string encode_csv(const Output& o) {
  std::string out;
  for (const auto& row : detail::tabulate(o)) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + detail::csv_escape(row[i]);
    out += '\n';
  }
  return out;
}

inline std::string encode_md(const Output& o) {
  const auto table = detail::tabulate(o);
  std::string out;
  for (std::size_t r = 0; r < table.size(); ++r) {
    out += "|";
    for (const auto& c : table[r]) out += " " + detail::md_escape(c) + " |";
    out += '\n';
    if (r == 0) {
      out += "|";
      for (std::size_t i = 0; i < table[0].size(); ++i) out += " --- |";
      out += '\n';
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Commands

struct Settings {
  unsigned threads = 1;
  std::uint64_t max_simplices = max_simplices_default();
  std::size_t snf_cap = snf_cap_default();
  std::uint64_t max_adjacency_bytes = adjacency_byte_cap();
};

inline json bound_json(unsigned n, unsigned r) {
  json row;
  row["n"] = n;
  row["r"] = r;
  const auto bound = connectivity_lower_bound({n, r});
  if (is_contractible(bound)) {
    row["alpha"] = nullptr;
    row["k"] = nullptr;
    row["contractible"] = true;
    row["connectivity"] = nullptr;
    return row;
  }
  const auto a = alpha({n, r});
  const BigInt c = *connectivity_value(bound);
  row["alpha"] = a.to_string();
  row["k"] = big_json(c + 1);
  row["contractible"] = false;
  row["connectivity"] = big_json(c);
  return row;
}

inline Output cmd_bound(unsigned n, unsigned r) {
  Output o;
  o.params = {{"n", n}, {"r", r}};
  o.result = bound_json(n, r);
  if (auto printed = published_value(n, r)) {
    const BigInt computed = *connectivity_value(connectivity_lower_bound({n, r}));
    if (BigInt(*printed) != computed)
      o.result["paper_discrepancy"] = {
          {"printed", *printed},
          {"computed", big_json(computed)},
          {"note", "published table lists " + std::to_string(*printed) + "; exact arithmetic gives " +
                       computed.str()}};
  }
  return o;
}

inline Output cmd_table(unsigned n_max, std::optional<unsigned> r_max, bool published) {
  Output o;
  o.rows_key = "rows";
  json rows = json::array();
  if (published) {
    o.params = {{"paper", true}};
    std::size_t agree = 0;
    for (const auto& row : published_table()) {
      rows.push_back({{"n", row.n},
                      {"r", row.r},
                      {"printed", row.printed},
                      {"computed", big_json(row.computed)},
                      {"agrees", row.agrees}});
      agree += row.agrees;
    }
    o.columns = {"n", "r", "printed", "computed", "agrees"};
    o.result["agreements"] = agree;
  } else {
    o.params = {{"paper", false}, {"n_max", n_max}, {"r_max", r_max ? json(*r_max) : json(nullptr)}};
    for (unsigned n = 1; n <= n_max; ++n)
      for (unsigned r = 0; r < n && (!r_max || r <= *r_max); ++r) rows.push_back(bound_json(n, r));
    o.columns = {"n", "r", "alpha", "k", "connectivity", "contractible"};
  }
  o.result["rows"] = std::move(rows);
  return o;
}

inline Output cmd_counterexamples(unsigned n_max) {
  Output o;
  o.params = {{"n_max", n_max}};
  o.rows_key = "rows";
  o.columns = {"n", "r", "connectivity"};
  json rows = json::array();
  for (const auto& e : counterexample_scan(n_max))
    rows.push_back({{"n", e.n}, {"r", e.r}, {"connectivity", big_json(e.connectivity)}});
  o.result["count"] = rows.size();
  o.result["rows"] = std::move(rows);
  return o;
}

struct GammaTArgs {
  std::optional<unsigned> n, r;
  std::optional<std::string> dimacs;
  std::optional<std::string> time_limit;
  bool exhaustive = false;
};

inline Output cmd_gamma_t(const GammaTArgs& a, const Settings& s) {
  Output o;
  Graph g;
  bool transitive = false;
  if (a.dimacs) {
    o.params["dimacs"] = *a.dimacs;
    g = read_dimacs(read_file(*a.dimacs), s.max_adjacency_bytes);
  } else {
    o.params["n"] = *a.n;
    o.params["r"] = *a.r;
    g = build_hamming_graph({*a.n, *a.r, true}, s.max_adjacency_bytes);
    transitive = true;
  }
  o.params["exhaustive"] = a.exhaustive;
  o.params["time_limit"] = a.time_limit ? json(*a.time_limit) : json(nullptr);

  json& res = o.result;
  res["order"] = g.order();
  res["edge_count"] = g.edge_count();
  res["max_degree"] = g.max_degree();
  res["trivial_lower_bound"] = trivial_lower_bound(g);
  if (a.exhaustive) {
    const auto value = gamma_t_exhaustive(g);
    res["method"] = "exhaustive";
    res["lower"] = value;
    res["upper"] = value;
    res["gamma_t"] = value;
    res["bounds_only"] = false;
    res["time_limit_hit"] = false;
    res["witness"] = nullptr;
    res["nodes"] = nullptr;
    return o;
  }
  SolverOptions opts;
  opts.vertex_transitive = transitive;
  opts.threads = s.threads;
  if (a.time_limit) opts.time_limit = parse_duration(*a.time_limit);
  const auto sol = exact_gamma_t(g, opts);
  res["method"] = "branch_and_bound";
  res["lower"] = sol.lower;
  res["upper"] = sol.upper;
  res["gamma_t"] = sol.exact ? json(*sol.exact) : json(nullptr);
  res["bounds_only"] = sol.status == SolverStatus::bounds_only;
  res["time_limit_hit"] = sol.time_limit_hit;
  res["witness"] = sol.witness;
  res["nodes"] = sol.nodes;
  return o;
}

inline Output cmd_complex(unsigned n, unsigned r, int max_dim, const std::optional<std::string>& out_path,
                          const Settings& s) {
  Output o;
  o.params = {{"n", n}, {"r", r}, {"max_dim", max_dim}, {"out", out_path ? json(*out_path) : json(nullptr)}};
  const auto k = vietoris_rips(n, r, max_dim, s.max_simplices);
  if (out_path) {
    std::ofstream f(*out_path, std::ios::binary);
    if (!f || !(f << write_complex(k))) throw ParseError(0, "cannot write '" + *out_path + "'");
  }
  o.result["vertices"] = k.n_vertices;
  o.result["max_dim"] = k.max_dim;
  o.result["f_vector"] = f_vector(k);
  o.result["total_simplices"] = k.total_simplices();
  o.result["euler_characteristic"] = euler_characteristic(k);
  return o;
}

struct HomologyArgs {
  std::optional<unsigned> n, r;
  std::optional<std::string> complex_file;
  int up_to = 0;
  std::string coefficients = "gf2";
};

inline Output cmd_homology(const HomologyArgs& a, const Settings& s) {
  Output o;
  SimplicialComplex k;
  if (a.complex_file) {
    o.params["complex"] = *a.complex_file;
    k = read_complex(read_file(*a.complex_file));
  } else {
    o.params["n"] = *a.n;
    o.params["r"] = *a.r;
    k = vietoris_rips(*a.n, *a.r, a.up_to + 1, s.max_simplices);
  }
  o.params["up_to"] = a.up_to;
  o.params["coefficients"] = a.coefficients;
  const auto profile =
      a.coefficients == "z" ? betti_integer(k, a.up_to, s.snf_cap) : betti_gf2(k, a.up_to);
  json dims = json::array();
  for (int i = 0; i <= a.up_to; ++i) dims.push_back(i);
  o.result["dims"] = dims;
  o.result["reduced_betti"] = profile.reduced_betti;
  o.result["coefficients"] = to_string(profile.coefficients);
  o.result["truncation_dim"] = profile.truncation_dim;
  if (profile.torsion) {
    json t = json::array();
    for (const auto& factors : *profile.torsion) {
      json row = json::array();
      for (const auto& f : factors) row.push_back(big_json(f));
      t.push_back(row);
    }
    o.result["torsion"] = t;
  } else {
    o.result["torsion"] = nullptr;
  }
  return o;
}

/// Largest n at which the witness command also tests the cycle for homological nontriviality.
inline constexpr unsigned witness_homology_max_n = 4;

inline Output cmd_witness(unsigned n, unsigned r, const std::string& vertices, const Settings& s) {
  Output o;
  o.params = {{"n", n}, {"r", r}, {"vertices", vertices}};
  const auto labels = parse_vertex_list(vertices);
  const auto rep = cross_polytope_witness_check(n, r, labels);
  json& res = o.result;
  json vs = json::array();
  for (auto v : labels) vs.push_back(v.bits);
  res["vertices"] = vs;
  res["is_matching_complement"] = rep.is_matching_complement;
  res["is_cross_polytope_boundary"] = rep.is_cross_polytope_boundary;
  res["is_total_dominating_in_complement"] =
      rep.is_total_dominating_in_complement ? json(*rep.is_total_dominating_in_complement) : json(nullptr);
  json pairs = json::array();
  for (auto [v, w] : rep.pairs) pairs.push_back({v.bits, w.bits});
  res["pairs"] = pairs;
  json violations = json::array();
  for (const auto& v : rep.missing_pairs)
    violations.push_back({{"a", v.a.bits},
                          {"b", v.b.bits},
                          {"distance", v.distance},
                          {"issue", v.issue == PatternIssue::no_far_partner ? "no_far_partner" : "extra_far_partner"}});
  res["violations"] = violations;

  res["homologically_nontrivial"] = nullptr;
  if (rep.is_cross_polytope_boundary && n <= witness_homology_max_n) {
    const int m = static_cast<int>(rep.pairs.size());
    const auto k = vietoris_rips(n, r, m, s.max_simplices);
    std::vector<std::pair<SimplexVertex, SimplexVertex>> pairs_idx;
    for (auto [v, w] : rep.pairs)
      pairs_idx.emplace_back(static_cast<SimplexVertex>(v.bits), static_cast<SimplexVertex>(w.bits));
    res["homologically_nontrivial"] = BoundaryImageGf2(k, m - 1).is_nontrivial_cycle(cross_polytope_facets(pairs_idx));
  }
  return o;
}

// ---------------------------------------------------------------------------
// Driver

inline std::string encode(const Output& o, Format f, const json& envelope) {
  switch (f) {
    case Format::csv: return encode_csv(o);
    case Format::md: return encode_md(o);
    case Format::json: break;
  }
  return envelope.dump(2) + "\n";
}

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connectivity bounds, total domination and homology for Vietoris-Rips complexes of hypercubes", "vrhq"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(VRHQ_VERSION));

  Settings settings;
  std::string format_name = "json";
  app.add_option("--format", format_name, "Output encoding")
      ->check(CLI::IsMember({"json", "csv", "md"}))
      ->envname("VRHQ_FORMAT")
      ->capture_default_str();
  app.add_option("--threads", settings.threads, "Worker threads for the domination solver")
      ->check(CLI::Range(1u, 1024u))
      ->envname("VRHQ_THREADS")
      ->capture_default_str();
  app.add_option("--max-simplices", settings.max_simplices, "Cap on simplices per complex construction")
      ->check(CLI::PositiveNumber)
      ->envname("VRHQ_MAX_SIMPLICES");
  app.add_option("--snf-cap", settings.snf_cap, "Cap on Smith normal form matrix side")
      ->check(CLI::PositiveNumber)
      ->envname("VRHQ_SNF_CAP");
  app.add_option("--max-adjacency-bytes", settings.max_adjacency_bytes, "Cap on adjacency matrix memory")
      ->check(CLI::PositiveNumber)
      ->envname("VRHQ_MAX_ADJACENCY_BYTES");

  unsigned bn = 1, br = 0;
  auto* bound = app.add_subcommand("bound", "Connectivity lower bound for VR(Q_n; r)");
  bound->add_option("--n", bn, "Hypercube dimension")->required()->check(CLI::Range(1u, 1024u));
  bound->add_option("--r", br, "Scale")->required()->check(CLI::NonNegativeNumber);

  unsigned tn_max = 10;
  std::optional<unsigned> tr_max;
  bool tpublished = false;
  auto* table = app.add_subcommand("table", "Bound over a grid of (n, r), or the published rows");
  table->add_option("--n-max", tn_max, "Largest n")->check(CLI::Range(1u, 1024u))->capture_default_str();
  table->add_option("--r-max", tr_max, "Largest r")->check(CLI::NonNegativeNumber);
  table->add_flag("--paper", tpublished, "Published rows with agreement flags");

  unsigned cn_max = 8;
  auto* counter = app.add_subcommand("counterexamples", "Pairs where the bound reaches r + 1");
  counter->add_option("--n-max", cn_max, "Largest n")->check(CLI::Range(2u, 1024u))->capture_default_str();

  GammaTArgs ga;
  auto* gamma = app.add_subcommand("gamma-t", "Total domination number of G^c_{n,r} or a DIMACS graph");
  auto* gn = gamma->add_option("--n", ga.n, "Hypercube dimension")->check(CLI::Range(1u, 64u));
  auto* gr = gamma->add_option("--r", ga.r, "Scale")->check(CLI::NonNegativeNumber);
  auto* gd = gamma->add_option("--dimacs", ga.dimacs, "DIMACS edge file");
  gamma->add_option("--time-limit", ga.time_limit, "Budget such as 600s, 10m, 1h")
      ->check(CLI::Validator(
          [](std::string& v) { return parse_duration(v) ? std::string{} : "invalid duration '" + v + "'"; },
          "DURATION"));
  gamma->add_flag("--exhaustive", ga.exhaustive, "Subset enumeration (at most 20 vertices)");
  gn->needs(gr);
  gr->needs(gn);
  gd->excludes(gn)->excludes(gr);

  unsigned xn = 1, xr = 0;
  int xdim = 2;
  std::optional<std::string> xout;
  auto* complex = app.add_subcommand("complex", "Build VR(Q_n; r) truncated at a dimension");
  complex->add_option("--n", xn, "Hypercube dimension")->required()->check(CLI::Range(1u, 24u));
  complex->add_option("--r", xr, "Scale")->required()->check(CLI::NonNegativeNumber);
  complex->add_option("--max-dim", xdim, "Truncation dimension")->required()->check(CLI::Range(0, 64));
  complex->add_option("--out", xout, "Write the complex file here");

  HomologyArgs ha;
  auto* homology = app.add_subcommand("homology", "Reduced homology of VR(Q_n; r) or a complex file");
  auto* hn = homology->add_option("--n", ha.n, "Hypercube dimension")->check(CLI::Range(1u, 24u));
  auto* hr = homology->add_option("--r", ha.r, "Scale")->check(CLI::NonNegativeNumber);
  auto* hc = homology->add_option("--complex", ha.complex_file, "Complex file");
  homology->add_option("--up-to", ha.up_to, "Highest homology dimension")->required()->check(CLI::Range(0, 63));
  homology->add_option("--coefficients", ha.coefficients, "gf2 or z")
      ->check(CLI::IsMember({"gf2", "z"}))
      ->capture_default_str();
  hn->needs(hr);
  hr->needs(hn);
  hc->excludes(hn)->excludes(hr);

  unsigned wn = 1, wr = 0;
  std::string wvertices;
  auto* witness = app.add_subcommand("witness", "Check a cross-polytope witness vertex set");
  witness->add_option("--n", wn, "Hypercube dimension")->required()->check(CLI::Range(1u, 64u));
  witness->add_option("--r", wr, "Scale")->required()->check(CLI::NonNegativeNumber);
  witness->add_option("--vertices", wvertices, "Comma-separated vertex labels")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*gamma && !ga.dimacs && !ga.n) throw CLI::RequiredError("gamma-t needs --n and --r, or --dimacs");
    if (*homology && !ha.complex_file && !ha.n) throw CLI::RequiredError("homology needs --n and --r, or --complex");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  const Format format = format_name == "csv" ? Format::csv : format_name == "md" ? Format::md : Format::json;
  const CLI::App* sub = app.get_subcommands().front();
  json envelope;
  envelope["command"] = sub->get_name();
  envelope["result"] = nullptr;
  envelope["params"] = json::object();

  const auto start = std::chrono::steady_clock::now();
  Output output;
  int code = exit_ok;
  try {
    if (sub == bound) output = cmd_bound(bn, br);
    else if (sub == table) output = cmd_table(tn_max, tr_max, tpublished);
    else if (sub == counter) output = cmd_counterexamples(cn_max);
    else if (sub == gamma) output = cmd_gamma_t(ga, settings);
    else if (sub == complex) output = cmd_complex(xn, xr, xdim, xout, settings);
    else if (sub == homology) output = cmd_homology(ha, settings);
    else output = cmd_witness(wn, wr, wvertices, settings);
    envelope["params"] = output.params;
    envelope["result"] = output.result;
    envelope["status"] = {{"ok", true}};
  } catch (const Error& e) {
    code = e.kind() == ErrorKind::resource ? exit_resource : exit_input;
    envelope["status"] = {{"ok", false}, {"code", e.code()}, {"message", e.what()}};
  } catch (const std::bad_alloc&) {
    code = exit_resource;
    envelope["status"] = {{"ok", false}, {"code", "OutOfMemory"}, {"message", "allocation failed"}};
  } catch (const std::exception& e) {
    code = exit_internal;
    envelope["status"] = {{"ok", false}, {"code", "Internal"}, {"message", e.what()}};
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  envelope["params"]["format"] = format_name;
  envelope["params"]["threads"] = settings.threads;
  envelope["provenance"] = {
      {"tool", "vrhq"},
      {"version", VRHQ_VERSION},
      {"wall_clock_ms", std::chrono::duration<double, std::milli>(elapsed).count()},
      {"caps",
       {{"max_simplices", settings.max_simplices},
        {"snf_cap", settings.snf_cap},
        {"max_adjacency_bytes", settings.max_adjacency_bytes}}}};

  if (code != exit_ok) {
    err << "error: " << envelope["status"]["code"].get<std::string>() << ": "
        << envelope["status"]["message"].get<std::string>() << "\n";
    if (format == Format::json) out << envelope.dump(2) << "\n";
    return code;
  }
  out << encode(output, format, envelope);
  return code;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

} // namespace vrhq::cli

#endif // VRHQ_CLI_HPP

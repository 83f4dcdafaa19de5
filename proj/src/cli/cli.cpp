#include "connsets/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "connsets/bicyclic.hpp"
#include "connsets/counting.hpp"
#include "connsets/errors.hpp"
#include "connsets/families.hpp"
#include "connsets/graph_io.hpp"
#include "connsets/transforms.hpp"
#include "connsets/verify.hpp"

namespace connsets::cli {

namespace {

using nlohmann::ordered_json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string graph6, file, family, format, out_path;
  std::optional<Vertex> root;
  std::vector<Vertex> pair;
  std::uint64_t seed = 1;
  std::optional<int> cap, trials, n_opt;
  std::string n_range;
  int workers = 1;
  bool with_count = false;
  // transform sites
  std::string surgery, cycle, left, mid, right;
  std::optional<Vertex> anchor, l, u, v, r;
  std::string claim;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A file holds either graph6 lines or one edge list ("n m" header).
std::vector<Graph> graphs_from_file(const std::string& path) {
  const std::string text = read_file(path);
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_of(" \t") != std::string::npos) return {from_edge_list(text)};
    break;
  }
  std::istringstream in(text);
  auto gs = read_graph6_lines(in);
  if (gs.empty()) throw ParseError(path + ": no graphs found");
  return gs;
}

std::vector<Graph> input_graphs(const Settings& s) {
  const int sources = !s.graph6.empty() + !s.file.empty() + !s.family.empty();
  if (sources != 1) throw CLI::ValidationError("input", "exactly one of --graph6, --file, --family is required");
  if (!s.graph6.empty()) return {from_graph6(s.graph6)};
  if (!s.family.empty()) return {build(parse_family(s.family))};
  return graphs_from_file(s.file);
}

VertexSet parse_vertex_list(const std::string& text, const char* flag) {
  VertexSet set;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v < 0 || v >= kMaxVertices) throw std::invalid_argument(tok);
      set.insert(v);
    } catch (const std::exception&) {
      throw ParseError(std::string(flag) + ": bad vertex '" + tok + "'");
    }
  }
  return set;
}

Vertex need(const std::optional<Vertex>& v, const char* flag) {
  if (!v) throw CLI::ValidationError(flag, "required by this surgery");
  return *v;
}

void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  throw CLI::ValidationError("--format", "'" + fmt + "' not supported here (use " + list + ")");
}

OracleOptions oracle_options(const Settings& s) {
  OracleOptions o;
  if (s.cap) o.cap = *s.cap;
  o.workers = s.workers;
  return o;
}

Count count_any(const Graph& g, const OracleOptions& o) {
  return is_connected(g) ? smart_count(g, o).total : oracle_count(g, o).total;
}

void cmd_count(const Settings& s, std::ostream& out) {
  const std::string fmt = s.format.empty() ? "text" : s.format;
  check_format(fmt, {"text", "json", "csv"});
  const OracleOptions o = oracle_options(s);
  if (s.pair.size() != 0 && s.pair.size() != 2) throw CLI::ValidationError("--pair", "expects two vertices u,v");
  ordered_json all = ordered_json::array();
  if (fmt == "csv") out << "graph6,n,edges,count" << (s.root ? ",rooted" : "") << (s.pair.empty() ? "" : ",pair") << '\n';
  for (const Graph& g : input_graphs(s)) {
    const Count total = count_any(g, o);
    std::optional<Count> rooted, pair;
    if (s.root) rooted = oracle_count_rooted(g, *s.root, o).value;
    if (!s.pair.empty()) pair = oracle_count_pair(g, s.pair[0], s.pair[1], o);
    if (fmt == "text") {
      out << total << '\n';
      if (rooted) out << "rooted " << *s.root << ' ' << *rooted << '\n';
      if (pair) out << "pair " << s.pair[0] << ',' << s.pair[1] << ' ' << *pair << '\n';
    } else if (fmt == "csv") {
      out << to_graph6(g) << ',' << g.order() << ',' << g.size() << ',' << total;
      if (rooted) out << ',' << *rooted;
      if (pair) out << ',' << *pair;
      out << '\n';
    } else {
      ordered_json j{{"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", g.size()}, {"count", total}};
      if (rooted) j["rooted"] = {{"vertex", *s.root}, {"count", *rooted}};
      if (pair) j["pair"] = {{"vertices", s.pair}, {"count", *pair}};
      all.push_back(j);
    }
  }
  if (fmt == "json") out << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
}

void cmd_family(const Settings& s, std::ostream& out) {
  const std::string fmt = s.format.empty() ? "text" : s.format;
  check_format(fmt, {"text", "graph6", "json"});
  if (s.family.empty()) throw CLI::ValidationError("family", "a family spec is required, e.g. L:9");
  const FamilySpec spec = parse_family(s.family);
  const Graph g = build(spec);
  std::optional<Count> total;
  if (s.with_count) total = smart_count(g, oracle_options(s)).total;
  if (fmt == "json") {
    ordered_json j{{"family", to_string(spec)}, {"graph6", to_graph6(g)}, {"n", g.order()}, {"edges", g.size()}};
    if (total) j["count"] = *total;
    if (auto cf = closed_form(spec)) j["closed_form"] = *cf;
    out << j.dump(2) << '\n';
    return;
  }
  out << to_graph6(g) << '\n';
  if (total && fmt == "text") out << *total << '\n';
}

void cmd_enumerate(const Settings& s, std::ostream& out) {
  const std::string fmt = s.format.empty() ? "graph6" : s.format;
  check_format(fmt, {"graph6", "text", "csv"});
  if (!s.n_opt) throw CLI::ValidationError("--n", "required");
  EnumerationOptions opt;
  if (s.cap) opt.cap = *s.cap;
  opt.workers = s.workers;
  const auto classes = enumerate_bicyclic(*s.n_opt, opt);
  const bool counts = s.with_count || fmt != "graph6";
  if (fmt == "csv") out << "graph6,count\n";
  for (const auto& c : classes) {
    const std::string g6 = to_graph6(c.graph);
    if (!counts) out << g6 << '\n';
    else out << g6 << (fmt == "csv" ? ',' : ' ') << oracle_count(c.graph).total << '\n';
    out.flush();
  }
  if (fmt != "csv") out << "# done n=" << *s.n_opt << " graphs=" << classes.size() << '\n';
}

void cmd_transform(const Settings& s, std::ostream& out) {
  const std::string fmt = s.format.empty() ? "json" : s.format;
  check_format(fmt, {"json", "text"});
  const OracleOptions o = oracle_options(s);
  ordered_json j{{"surgery", s.surgery}};

  if (s.surgery == "branch") {
    if (s.left.empty() || s.mid.empty() || s.right.empty())
      throw CLI::ValidationError("branch", "--left, --mid and --right graph6 parts are required");
    const Graph left = from_graph6(s.left), mid = from_graph6(s.mid), right = from_graph6(s.right);
    BranchShift b = branch_shift(left, need(s.l, "--l"), mid, need(s.u, "--u"), need(s.v, "--v"), right,
                                 need(s.r, "--r"));
    const auto base = static_cast<std::int64_t>(oracle_count(b.glued, o).total);
    const auto at_u = static_cast<std::int64_t>(oracle_count(b.both_at_u, o).total);
    const auto at_v = static_cast<std::int64_t>(oracle_count(b.both_at_v, o).total);
    j["glued"] = to_graph6(b.glued);
    j["both_at_u"] = to_graph6(b.both_at_u);
    j["both_at_v"] = to_graph6(b.both_at_v);
    j["count"] = base;
    j["predicted_delta_u"] = b.delta_u;
    j["predicted_delta_v"] = b.delta_v;
    j["observed_delta_u"] = at_u - base;
    j["observed_delta_v"] = at_v - base;
  } else {
    auto inputs = input_graphs(s);
    if (inputs.size() != 1) throw CLI::ValidationError("transform", "expects exactly one input graph");
    const Graph& g = inputs[0];
    TransformOutcome t = [&] {
      if (s.surgery == "tadpole") return cycle_to_tadpole(g, parse_vertex_list(s.cycle, "--cycle"), need(s.anchor, "--anchor"));
      if (s.surgery == "star") return subtree_to_star(g, need(s.root, "--root"));
      if (s.surgery == "q") return part_to_Q(g, parse_vertex_list(s.cycle, "--cycle"), need(s.anchor, "--anchor"));
      throw CLI::ValidationError("transform", "unknown surgery '" + s.surgery + "' (tadpole, star, q, branch)");
    }();
    const auto before = static_cast<std::int64_t>(count_any(g, o));
    const auto after = static_cast<std::int64_t>(count_any(t.result, o));
    j["input"] = to_graph6(g);
    j["result"] = to_graph6(t.result);
    j["applied"] = t.applied;
    j["identity"] = t.identity;
    j["family"] = t.family ? ordered_json(*t.family) : ordered_json(nullptr);
    j["count_before"] = before;
    j["count_after"] = after;
    j["predicted_delta"] = t.predicted_delta ? ordered_json(*t.predicted_delta) : ordered_json(nullptr);
    j["observed_delta"] = after - before;
  }
  if (fmt == "json") {
    out << j.dump(2) << '\n';
  } else {
    for (auto& [key, value] : j.items()) out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

std::pair<int, int> range_of(const Settings& s, int lo, int hi) {
  if (!s.n_range.empty()) {
    auto dots = s.n_range.find("..");
    try {
      if (dots == std::string::npos) {
        int n = std::stoi(s.n_range);
        return {n, n};
      }
      return {std::stoi(s.n_range.substr(0, dots)), std::stoi(s.n_range.substr(dots + 2))};
    } catch (const std::exception&) {
      throw ParseError("--n: expected N or A..B, got '" + s.n_range + "'");
    }
  }
  return {lo, hi};
}

int cmd_verify(const Settings& s, std::ostream& out) {
  const std::string fmt = s.format.empty() ? "text" : s.format;
  check_format(fmt, {"text", "json", "csv"});
  VerifyOptions opt;
  opt.workers = s.workers;
  if (s.cap) opt.enumeration_cap = *s.cap;
  std::vector<VerificationReport> reports;
  auto sweep = [&](int lo, int hi, auto&& claim) {
    auto [a, b] = range_of(s, lo, hi);
    for (int n = a; n <= b; ++n) reports.push_back(claim(n, opt));
  };
  auto single_max = [&](int fallback) { return range_of(s, fallback, fallback).second; };
  const std::string& c = s.claim;
  const bool all = c == "all";
  if (c == "min" || all) sweep(5, 10, verify_minimum);
  if (c == "max" || all) sweep(5, 10, verify_maximum);
  if (c == "vertex" || all) sweep(4, 9, verify_vertex_bound);
  if (c == "closed" || all) reports.push_back(verify_closed_forms(all ? 16 : single_max(16), opt));
  if (c == "lemma" || all) {
    LemmaTrials t = s.trials ? LemmaTrials::uniform(*s.trials) : LemmaTrials{};
    reports.push_back(verify_lemma_algebra(t, s.seed, opt));
  }
  if (c == "tree" || all) reports.push_back(verify_tree_bound(all ? 9 : single_max(9), opt));
  if (c == "generators" || all) reports.push_back(verify_generators(all ? 8 : single_max(8), opt));
  if (reports.empty())
    throw CLI::ValidationError("verify", "unknown claim '" + c + "' (min, max, vertex, closed, lemma, tree, generators, all)");

  if (fmt == "json") out << to_json(reports);
  else if (fmt == "csv") out << to_csv(reports);
  else
    for (const auto& r : reports) out << to_text(r);
  bool ok = true;
  for (const auto& r : reports) ok &= r.passed();
  return ok ? Exit::ok : Exit::claim_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Count connected vertex subsets in small graphs and check extremal claims for bicyclic graphs",
               "connsets"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub, bool input) {
    if (input) {
      sub->add_option("--graph6", s.graph6, "Inline graph6 string");
      sub->add_option("--file", s.file, "File of graph6 lines or one edge list");
      sub->add_option("--family", s.family, "Family spec such as L:9 or theta:2,3,4");
    }
    sub->add_option("--cap", s.cap, "Vertex cap for the oracle or the enumerator")->check(CLI::Range(1, 64));
    sub->add_option("--workers", s.workers, "Threads: 1 serial, 0 all available")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", s.format, "Output format: text, json, csv or graph6");
    sub->add_option("--out", s.out_path, "Write output to this path instead of stdout");
  };

  auto* count = app.add_subcommand("count", "Print N(G), optionally rooted or pair counts");
  common(count, true);
  count->add_option("--root", s.root, "Also count sets containing this vertex");
  count->add_option("--pair", s.pair, "Also count sets containing both vertices")->delimiter(',')->expected(2);

  auto* fam = app.add_subcommand("family", "Build a named family member and print its graph6");
  common(fam, false);
  fam->add_option("spec,--family", s.family, "Family spec");
  fam->add_flag("--count", s.with_count, "Also print N");

  auto* en = app.add_subcommand("enumerate", "Stream every n-vertex bicyclic graph");
  common(en, false);
  en->add_option("--n", s.n_opt, "Number of vertices")->required();
  en->add_flag("--count", s.with_count, "Append N to every graph6 line");

  auto* tr = app.add_subcommand("transform", "Apply one surgery at an explicit site");
  common(tr, true);
  tr->add_option("surgery", s.surgery, "tadpole, star, q or branch")->required();
  tr->add_option("--cycle", s.cycle, "Comma-separated cycle vertices");
  tr->add_option("--anchor", s.anchor, "Vertex where the cycle meets the rest");
  tr->add_option("--root", s.root, "Core vertex whose attached tree becomes a star");
  tr->add_option("--left", s.left, "graph6 of L");
  tr->add_option("--mid", s.mid, "graph6 of M");
  tr->add_option("--right", s.right, "graph6 of R");
  tr->add_option("--l", s.l, "Gluing vertex of L");
  tr->add_option("--u", s.u, "First gluing vertex of M");
  tr->add_option("--v", s.v, "Second gluing vertex of M");
  tr->add_option("--r", s.r, "Gluing vertex of R");

  auto* ver = app.add_subcommand("verify", "Run a claim suite and print its report");
  common(ver, false);
  ver->add_option("claim", s.claim, "min, max, vertex, closed, lemma, tree, generators or all")->required();
  ver->add_option("--n", s.n_range, "N or A..B; for closed, tree and generators the largest n");
  ver->add_option("--seed", s.seed, "Seed for the random lemma instances");
  ver->add_option("--trials", s.trials, "Instances per lemma identity")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Exit::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Exit::ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return Exit::usage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!s.out_path.empty()) {
    file.open(s.out_path);
    if (!file) {
      err << "I/O error: cannot write " << s.out_path << '\n';
      return Exit::io;
    }
    sink = &file;
  }

  try {
    int status = Exit::ok;
    if (count->parsed()) cmd_count(s, *sink);
    else if (fam->parsed()) cmd_family(s, *sink);
    else if (en->parsed()) cmd_enumerate(s, *sink);
    else if (tr->parsed()) cmd_transform(s, *sink);
    else status = cmd_verify(s, *sink);
    sink->flush();
    if (!*sink) {
      err << "I/O error: write failed\n";
      return Exit::io;
    }
    return status;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return Exit::usage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return Exit::parse;
  } catch (const ParameterError& e) {
    err << "parameter error: " << e.what() << '\n';
    return Exit::parameter;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return Exit::resource;
  } catch (const OverflowError& e) {
    err << "resource error: " << e.what() << '\n';
    return Exit::resource;
  } catch (const ContractError& e) {
    err << "contract error: " << e.what() << '\n';
    return Exit::contract;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return Exit::io;
  }
}

}  // namespace connsets::cli

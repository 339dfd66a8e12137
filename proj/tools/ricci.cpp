// ricci: exact Ollivier-Ricci / Lin-Lu-Yau curvature on finite graphs.
//
// Subcommands:
//   curvature  per-edge curvature of one graph
//   generate   connected cubic graphs with a girth floor, or graph6 filtering
//   classify   Ricci-flat classification of a graph stream or completion search
//   named      emit a named fixture as graph6
//
// Exit codes: 0 success, 2 usage/parse errors, 3 domain errors.

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "ricci/classify.hpp"
#include "ricci/curvature.hpp"
#include "ricci/error.hpp"
#include "ricci/generate.hpp"
#include "ricci/graph6.hpp"
#include "ricci/named.hpp"

namespace {

using ricci::Errc;
using ricci::Error;
using ricci::Graph;
using ricci::Rational;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::self_loop:
    case Errc::duplicate_edge:
    case Errc::index_out_of_range:
    case Errc::malformed_graph6:
    case Errc::malformed_edge_list:
    case Errc::unknown_name:
    case Errc::bad_parameter:
    case Errc::idleness_out_of_range:
    case Errc::odd_order:
    case Errc::unsupported_size:
      return 2;
    default:
      return 3;
  }
}

// Progress goes to the diagnostic stream only, and only when interactive,
// so piped data output stays clean and byte-stable.
std::function<void(long long)> progress_printer() {
  if (!isatty(STDERR_FILENO)) return {};
  return [](long long nodes) { std::cerr << "\r" << nodes << " states" << std::flush; };
}

void progress_done() {
  if (isatty(STDERR_FILENO)) std::cerr << "\r";
}

struct InputSelect {
  std::string named;
  std::string graph6_path;
  bool from_stdin = false;

  int sources() const {
    return (named.empty() ? 0 : 1) + (graph6_path.empty() ? 0 : 1) + (from_stdin ? 1 : 0);
  }
};

void add_input_flags(CLI::App* cmd, InputSelect& in) {
  cmd->add_option("--named", in.named, "named fixture (petersen|triplex|dodecahedron|cycle:n|gp:n:k)");
  cmd->add_option("--graph6", in.graph6_path, "file of graph6 lines");
  cmd->add_option("input", [&in](const std::vector<std::string>& vals) {
    if (vals.size() != 1 || vals[0] != "-") return false;
    in.from_stdin = true;
    return true;
  }, "read graph6 lines from stdin ('-')");
}

Graph read_single_graph6(std::istream& is, const std::string& what) {
  std::string line, extra;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) break;
  }
  if (line.empty()) ricci::fail(Errc::malformed_graph6, what + " is empty");
  while (std::getline(is, extra)) {
    if (!extra.empty() && extra != "\r")
      ricci::fail(Errc::bad_parameter, what + " holds more than one graph");
  }
  return ricci::parse_graph6(line);
}

Graph resolve_single_input(const InputSelect& in) {
  if (in.sources() != 1)
    ricci::fail(Errc::bad_parameter, "exactly one of --named, --graph6, '-' required");
  if (!in.named.empty()) return ricci::named_graph(in.named);
  if (in.from_stdin) return read_single_graph6(std::cin, "stdin");
  std::ifstream f(in.graph6_path);
  if (!f) ricci::fail(Errc::bad_parameter, "cannot open " + in.graph6_path);
  return read_single_graph6(f, in.graph6_path);
}

int jobs_or_env(int jobs_flag) {
  if (jobs_flag > 0) return jobs_flag;
  if (const char* env = std::getenv("RICCI_SEED_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

// ---------------------------------------------------------------------------
// curvature
// ---------------------------------------------------------------------------

struct CurvatureArgs {
  InputSelect in;
  std::string idleness;
  std::string format = "table";
};

int run_curvature(const CurvatureArgs& args) {
  Graph g = resolve_single_input(args.in);
  std::string out;
  if (!args.idleness.empty()) {
    auto report = ricci::idleness_report(g, Rational::parse(args.idleness));
    out = args.format == "json" ? to_json_lines(report) : to_table(report);
  } else {
    auto report = ricci::curvature_report(g);
    out = args.format == "json" ? to_json_lines(report) : to_table(report);
  }
  std::cout << out;
  return 0;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
  InputSelect in;  // when given, filter an existing graph6 stream instead
  int n = 0;
  int girth = 5;
  bool count_only = false;
  bool prune_two_pentagon = false;
  bool strict = false;
};

int run_generate(const GenerateArgs& args) {
  ricci::GenerationConfig config;
  config.girth_min = args.girth;
  config.prune_two_pentagon = args.prune_two_pentagon;

  if (args.in.sources() > 0) {
    if (args.in.sources() != 1 || !args.in.named.empty())
      ricci::fail(Errc::bad_parameter, "ingest mode takes --graph6 PATH or '-'");
    long long count = 0;
    auto sink = [&](const Graph& g) {
      ++count;
      if (!args.count_only) std::cout << ricci::emit_graph6(g) << "\n";
    };
    ricci::IngestStats stats;
    if (args.in.from_stdin) {
      stats = ricci::ingest_graph6(std::cin, config, args.strict, sink);
    } else {
      std::ifstream f(args.in.graph6_path);
      if (!f) ricci::fail(Errc::bad_parameter, "cannot open " + args.in.graph6_path);
      stats = ricci::ingest_graph6(f, config, args.strict, sink);
    }
    for (auto& [line_no, message] : stats.errors)
      std::cerr << "line " << line_no << ": " << message << "\n";
    std::cerr << "read " << stats.read << ", kept " << stats.kept << ", rejected "
              << stats.rejected << ", errors " << stats.errors.size() << "\n";
    if (args.count_only) std::cout << stats.kept << "\n";
    return 0;
  }

  if (args.n == 0) ricci::fail(Errc::bad_parameter, "-n is required without an input stream");
  config.n = args.n;
  long long count = 0;
  ricci::generate(
      config,
      [&](const Graph& g) {
        ++count;
        if (!args.count_only) std::cout << ricci::emit_graph6(g) << "\n";
      },
      progress_printer());
  progress_done();
  if (args.count_only) std::cout << count << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

struct ClassifyArgs {
  InputSelect in;
  std::string generate_range;
  bool search = false;
  int max_n = 20;
  int jobs = 0;
  bool strict = false;
  std::string format = "table";
};

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  int lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    ricci::fail(Errc::bad_parameter, "expected N or A..B, got '" + text + "'");
  }
  if (lo > hi) ricci::fail(Errc::bad_parameter, "empty range '" + text + "'");
  if (lo % 2 != 0 || hi % 2 != 0)
    ricci::fail(Errc::odd_order, "range bounds must be even in '" + text + "'");
  return {lo, hi};
}

// Stream items in input order: a parsed graph or a skip reason.
using StreamItem = std::variant<Graph, std::string>;

int run_classify(const ClassifyArgs& args) {
  int sources = args.in.sources() + (args.generate_range.empty() ? 0 : 1) + (args.search ? 1 : 0);
  if (sources != 1)
    ricci::fail(Errc::bad_parameter,
                "exactly one of --generate, --graph6, '-', --search required");
  int jobs = jobs_or_env(args.jobs);

  std::vector<StreamItem> items;
  if (!args.generate_range.empty()) {
    auto [lo, hi] = parse_range(args.generate_range);
    for (int n = lo; n <= hi; n += 2) {
      ricci::GenerationConfig config;
      config.n = n;
      config.girth_min = 5;
      ricci::generate(config, [&](const Graph& g) { items.emplace_back(g); },
                      progress_printer());
    }
    progress_done();
  } else if (args.search) {
    for (auto& g : ricci::search_two_pentagon_completions(
             args.max_n, 4'000'000'000LL, progress_printer()))
      items.emplace_back(std::move(g));
    progress_done();
  } else {
    auto consume = [&](std::istream& is) {
      std::string line;
      long line_no = 0;
      while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
          items.emplace_back(ricci::parse_graph6(line));
        } catch (const Error& e) {
          if (args.strict)
            throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.what());
          items.emplace_back(std::string(e.what()));
        }
      }
    };
    if (args.in.from_stdin) {
      consume(std::cin);
    } else {
      std::ifstream f(args.in.graph6_path);
      if (!f) ricci::fail(Errc::bad_parameter, "cannot open " + args.in.graph6_path);
      consume(f);
    }
  }

  // Assess parsed graphs (in parallel when asked), then merge everything in
  // stream order so skip indices and output are deterministic.
  std::vector<ricci::detail::GraphAssessment> assessed(items.size());
  std::atomic<size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      size_t i = cursor.fetch_add(1);
      if (i >= items.size()) return;
      if (auto* g = std::get_if<Graph>(&items[i])) assessed[i] = ricci::detail::assess_graph(*g);
    }
  };
  if (jobs > 1) {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  } else {
    worker();
  }

  ricci::Classifier classifier;
  for (size_t i = 0; i < items.size(); ++i) {
    if (std::holds_alternative<Graph>(items[i])) {
      classifier.merge(assessed[i]);
    } else {
      ricci::detail::GraphAssessment skip;
      skip.skipped = true;
      skip.skip_reason = std::get<std::string>(items[i]);
      classifier.merge(skip);
    }
  }
  auto result = classifier.finish();

  if (args.format == "json") {
    std::cout << ricci::classification_json(result);
  } else if (args.format == "graph6") {
    for (auto& entry : result.flat) std::cout << entry.canon.bytes << "\n";
  } else {
    std::cout << ricci::classification_table(result);
  }
  return 0;
}

// ---------------------------------------------------------------------------

int dispatch(int argc, char** argv) {
  CLI::App app{"exact Ollivier-Ricci / Lin-Lu-Yau curvature toolkit"};
  app.require_subcommand(1);

  CurvatureArgs curvature_args;
  auto* curvature = app.add_subcommand("curvature", "per-edge curvature of one graph");
  add_input_flags(curvature, curvature_args.in);
  curvature->add_option("--idleness", curvature_args.idleness,
                        "rational idleness a/b: report kappa_p instead of kappa");
  curvature->add_option("--format", curvature_args.format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  GenerateArgs generate_args;
  auto* generate = app.add_subcommand(
      "generate", "connected cubic graphs with a girth floor; with --graph6/'-', filter a stream");
  add_input_flags(generate, generate_args.in);
  generate->add_option("-n", generate_args.n, "vertex count (even)");
  generate->add_option("--girth", generate_args.girth, "minimum girth (default 5)");
  generate->add_flag("--count-only", generate_args.count_only, "print only the class count");
  generate->add_flag("--prune-two-pentagon", generate_args.prune_two_pentagon,
                     "prune saturated edges that cannot reach two pentagons");
  generate->add_flag("--strict", generate_args.strict, "abort on malformed graph6 input");

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "find and identify Ricci-flat graphs");
  add_input_flags(classify, classify_args.in);
  classify->add_option("--generate", classify_args.generate_range,
                       "classify generated girth-5 cubic graphs for n in A..B");
  classify->add_flag("--search", classify_args.search,
                     "run the double-pentagon completion search");
  classify->add_option("--max-n", classify_args.max_n, "vertex budget for --search");
  classify->add_option("--jobs", classify_args.jobs,
                       "worker threads (default: RICCI_SEED_JOBS or 1)");
  classify->add_flag("--strict", classify_args.strict, "abort on malformed graph6 input");
  classify->add_option("--format", classify_args.format, "table|json|graph6")
      ->check(CLI::IsMember({"table", "json", "graph6"}));

  std::string named_name;
  auto* named = app.add_subcommand("named", "emit a named fixture as graph6");
  named->add_option("name", named_name, "fixture name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (curvature->parsed()) return run_curvature(curvature_args);
  if (generate->parsed()) return run_generate(generate_args);
  if (classify->parsed()) return run_classify(classify_args);
  if (named->parsed()) {
    std::cout << ricci::emit_graph6(ricci::named_graph(named_name)) << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

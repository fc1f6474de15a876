#include "hermitia_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hermitia/classify.hpp"
#include "hermitia/enumerate.hpp"
#include "hermitia/errors.hpp"
#include "hermitia/families.hpp"
#include "hermitia/spectra.hpp"
#include "hermitia/suites.hpp"
#include "hermitia/switching.hpp"
#include "hermitia/twins.hpp"

namespace hermitia::cli {
namespace {

// Error raised for unreadable input files; reported like a usage error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw InputError("cannot read '" + path + "'");
  }
  buf << file.rdbuf();
  return buf.str();
}

QuartGainGraph load(const std::string& path, std::istream& in) {
  try {
    return parse_graph(slurp(path, in));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string join_perm(const std::vector<Vertex>& perm) {
  std::string s;
  for (std::size_t j = 0; j < perm.size(); ++j) {
    s += (j ? "," : "") + std::to_string(perm[j]);
  }
  return s;
}

std::string join_theta(const SwitchAssignment& theta) {
  std::string s;
  for (std::size_t j = 0; j < theta.size(); ++j) {
    s += (j ? "," : "") + std::string(theta[j].token());
  }
  return s;
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "perm=" << join_perm(w.perm) << " theta=" << join_theta(w.theta)
      << " converse=" << (w.converse ? "true" : "false") << '\n';
}

std::string param_text(const ParamValue& v) {
  if (const auto* n = std::get_if<long>(&v)) {
    return std::to_string(*n);
  }
  if (const auto* s = std::get_if<std::string>(&v)) {
    return *s;
  }
  std::string s;
  for (long x : std::get<std::vector<long>>(v)) {
    s += (s.empty() ? "" : ",") + std::to_string(x);
  }
  return "[" + s + "]";
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

int cmd_inertia(const Context& c, const std::string& path, bool use_float) {
  const QuartGainGraph g = load(path, c.in);
  c.out << (use_float ? inertia_float(hermitian_matrix(g)) : inertia(g)).to_string() << '\n';
  return kExitOk;
}

int cmd_classify(const Context& c, const std::string& path, bool json) {
  const ClassificationResult result = classify(load(path, c.in));
  if (json) {
    c.out << result.to_json() << '\n';
  } else if (result.empty()) {
    c.out << "none\n";
  } else {
    for (const CaseMatch& m : result.matches) {
      c.out << to_string(m.kind);
      for (const auto& [key, value] : m.params) {
        c.out << ' ' << key << '=' << param_text(value);
      }
      c.out << '\n';
      if (m.witness) {
        c.out << "  ";
        print_witness(c.out, *m.witness);
      }
    }
  }
  return result.empty() ? kExitNegative : kExitOk;
}

int cmd_generate(const Context& c, const std::string& spec, const std::string& output) {
  const std::string text = serialize_graph(realize(parse_family(spec)));
  if (output.empty() || output == "-") {
    c.out << text;
    return kExitOk;
  }
  std::ofstream file(output, std::ios::binary);
  if (!(file << text)) {
    throw InputError("cannot write '" + output + "'");
  }
  return kExitOk;
}

int cmd_canon(const Context& c, const std::string& path, bool show_theta) {
  const Normalized norm = tree_normalize(load(path, c.in));
  if (show_theta) {
    c.out << "# theta " << join_theta(norm.theta) << '\n';
  }
  c.out << serialize_graph(norm.graph);
  return kExitOk;
}

int cmd_twin_reduce(const Context& c, const std::string& path) {
  c.out << serialize_graph(twin_reduction(load(path, c.in)));
  return kExitOk;
}

int cmd_equiv(const Context& c, const std::string& a, const std::string& b, bool iso, bool strict) {
  const QuartGainGraph g1 = load(a, c.in);
  const QuartGainGraph g2 = load(b, c.in);
  const std::optional<Witness> w =
      iso ? switching_equivalent_up_to_iso(g1, g2) : equivalence_witness(g1, g2, !strict);
  if (!w) {
    c.out << "not equivalent\n";
    return kExitNegative;
  }
  c.out << "equivalent ";
  print_witness(c.out, *w);
  return kExitOk;
}

int cmd_enumerate(const Context& c, const EnumSpec& spec, bool count_only) {
  std::size_t index = 0;
  const std::size_t total = enumerate_switching_classes(spec, [&](const QuartGainGraph& g) {
    if (!count_only) {
      c.out << "# class " << index << '\n' << serialize_graph(g) << '\n';
    }
    ++index;
    return true;
  });
  if (count_only) {
    c.out << total << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Context& c, std::vector<std::string> suites, bool all, const SuiteOptions& options,
               bool json, std::size_t show) {
  if (all) {
    suites = suite_names();
  }
  if (suites.empty()) {
    throw CLI::RequiredError("--suite or --all");
  }
  bool passed = true;
  for (const std::string& name : suites) {
    const SuiteReport report = verify_suite(name, options);
    passed = passed && report.passed();
    if (json) {
      c.out << report.to_json() << '\n';
      continue;
    }
    c.out << name << ": " << (report.passed() ? "PASS" : "FAIL") << " checked=" << report.checked
          << " failures=" << report.failures.size() << " millis=" << static_cast<long>(report.millis) << '\n';
    for (std::size_t j = 0; j < std::min(show, report.failures.size()); ++j) {
      const SuiteFailure& f = report.failures[j];
      c.out << "  expected " << f.expected << ", got " << f.got << '\n';
      std::istringstream lines(f.graph);
      for (std::string line; std::getline(lines, line);) {
        c.out << "    " << line << '\n';
      }
    }
  }
  return passed ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  const Context ctx{in, out, err};
  CLI::App app{"Hermitian spectra of mixed graphs: inertia, switching and classification of p = 2"};
  app.name("hermitia");
  app.require_subcommand(1);

  std::string file_a;
  std::string file_b;
  bool flag_a = false;
  bool flag_b = false;

  auto* inertia_cmd = app.add_subcommand("inertia", "Print p, n and eta of a graph");
  inertia_cmd->add_option("file", file_a, "Graph in .qgg format, or - for stdin")->required();
  inertia_cmd->add_flag("--float", flag_a, "Use the floating-point eigensolver");

  auto* classify_cmd = app.add_subcommand("classify", "Match a graph against the p = 2 families");
  classify_cmd->add_option("file", file_a)->required();
  classify_cmd->add_flag("--json", flag_a, "Emit JSON");

  std::string output;
  auto* generate_cmd = app.add_subcommand("generate", "Build a graph from a family spec");
  generate_cmd->add_option("spec", file_a, "e.g. c3t:1,2,1 or K:q=1,2;n=1,1,1;p=2")->required();
  generate_cmd->add_option("-o,--output", output, "Output file");

  auto* canon_cmd = app.add_subcommand("canon", "Print the tree-normalized switching representative");
  canon_cmd->add_option("file", file_a)->required();
  canon_cmd->add_flag("--theta", flag_a, "Also print the switching used");
  canon_cmd->alias("switch-canon");

  auto* twin_cmd = app.add_subcommand("twin-reduce", "Print the twin reduction");
  twin_cmd->add_option("file", file_a)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide switching equivalence of two graphs");
  equiv_cmd->add_option("a", file_a)->required();
  equiv_cmd->add_option("b", file_b)->required();
  equiv_cmd->add_flag("--iso", flag_a, "Allow relabeling (bounded search)");
  equiv_cmd->add_flag("--no-converse", flag_b, "Do not allow taking the converse");

  EnumSpec spec;
  std::size_t min_n = 0;
  std::size_t limit = 0;
  auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate switching classes");
  enum_cmd->add_option("--n", spec.n, "Maximum order")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("--min-n", min_n, "Minimum order (default: --n)");
  enum_cmd->add_option("--limit", limit, "Stop after this many graphs");
  enum_cmd->add_option("--cap", spec.cap, "Hard order cap");
  enum_cmd->add_flag("--connected", spec.filters.connected);
  enum_cmd->add_flag("--has-cut-vertex", spec.filters.has_cut_vertex);
  enum_cmd->add_flag("--no-pendant", spec.filters.no_pendant);
  enum_cmd->add_flag("--has-pendant", spec.filters.has_pendant);
  enum_cmd->add_flag("--mixed-only", spec.filters.mixed_only);
  enum_cmd->add_flag("--count-only", flag_a, "Print only the number of classes");

  std::vector<std::string> suites;
  std::size_t suite_n = 0;
  std::uint64_t seed = default_seed();
  unsigned threads = 0;
  std::size_t show = 5;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  auto* suite_opt = verify_cmd->add_option("--suite", suites, "Suite name (repeatable)");
  auto* all_opt = verify_cmd->add_flag("--all", flag_a, "Run every suite");
  suite_opt->excludes(all_opt);
  verify_cmd->add_option("--n", suite_n, "Corpus order for enumeration-based suites");
  verify_cmd->add_option("--seed", seed, "Seed for randomized suites");
  verify_cmd->add_option("--threads", threads, "Worker threads (0 = hardware)");
  verify_cmd->add_option("--show", show, "Failures to print per suite");
  verify_cmd->add_flag("--json", flag_b, "One JSON report per line");
  auto* list_cmd = app.add_subcommand("suites", "List suite names");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (inertia_cmd->parsed()) {
      return cmd_inertia(ctx, file_a, flag_a);
    }
    if (classify_cmd->parsed()) {
      return cmd_classify(ctx, file_a, flag_a);
    }
    if (generate_cmd->parsed()) {
      return cmd_generate(ctx, file_a, output);
    }
    if (canon_cmd->parsed()) {
      return cmd_canon(ctx, file_a, flag_a);
    }
    if (twin_cmd->parsed()) {
      return cmd_twin_reduce(ctx, file_a);
    }
    if (equiv_cmd->parsed()) {
      return cmd_equiv(ctx, file_a, file_b, flag_a, flag_b);
    }
    if (enum_cmd->parsed()) {
      if (min_n > 0) {
        spec.min_n = min_n;
      }
      if (limit > 0) {
        spec.limit = limit;
      }
      return cmd_enumerate(ctx, spec, flag_a);
    }
    if (verify_cmd->parsed()) {
      SuiteOptions options;
      if (suite_n > 0) {
        options.n = suite_n;
      }
      options.seed = seed;
      options.threads = threads;
      return cmd_verify(ctx, suites, flag_a, options, flag_b, show);
    }
    if (list_cmd->parsed()) {
      for (const std::string& name : suite_names()) {
        out << name << '\n';
      }
      return kExitOk;
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNegative;
  }
  return kExitUsage;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace hermitia::cli

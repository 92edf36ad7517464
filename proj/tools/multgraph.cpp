// multgraph: command-line front end.
//
//   multgraph graph        --delta 1 --family A --rank 2 --depth 4 --format dot
//   multgraph kernel       --delta 2 --family B --rank 3 --depth 3 --theta const:0.5
//   multgraph limit-kernel --delta 1 --family C --depth 2 --theta const:0.5
//   multgraph sweep        --delta 1 --from 1 --to 2 --family B --theta const:0.5
//   multgraph sample       --delta 1 --family A --limit --theta const:0.5 --steps 5
//   multgraph check
//
// Exit codes: 0 success, 1 domain error, 2 bad arguments, 3 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <multgraph/multgraph.hpp>
#include <multgraph/acceptance.hpp>

namespace mg = multgraph;

namespace {

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string delta = "1";
  std::string family = "A";
  std::optional<int> rank;
  bool limit = false;
  int depth = 3;
  int max_depth = mg::default_max_depth;
  std::string theta = "const:0.5";
  std::string format = "json";
  std::string output;
  std::string from, to;
  int r_min = 0, r_max = 30;
  double tol = mg::default_limit_tolerance;
  std::uint64_t seed = 42;
  int steps = 10;
  std::string golden;
  int only = 0;
};

template <class F> auto as_argument(F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const mg::DomainError &ex) {
    throw ArgumentError(ex.what());
  }
}

mg::Partition arg_partition(const std::string &flag, const std::string &text) {
  return as_argument([&] {
    try {
      return mg::parse_partition(text);
    } catch (const mg::DomainError &ex) {
      throw mg::DomainError(flag + ": " + ex.what());
    }
  });
}

mg::Family arg_family(const Options &o) {
  return as_argument([&] { return mg::parse_family(o.family); });
}

mg::ThetaSpec arg_theta(const Options &o, bool needs_limit) {
  auto theta = as_argument([&] { return mg::ThetaSpec::parse(o.theta); });
  if (needs_limit && !(theta.sup() < 1))
    throw ArgumentError("--theta: limit operations need sup theta < 1, got " +
                        o.theta);
  return theta;
}

mg::FamilyRank arg_family_rank(const Options &o) {
  if (!o.rank)
    throw ArgumentError("--rank is required");
  return as_argument([&] { return mg::FamilyRank(arg_family(o), *o.rank); });
}

void rank_or_limit(const Options &o) {
  if (o.rank.has_value() == o.limit)
    throw ArgumentError("give exactly one of --rank and --limit");
}

/// Writes to --output, or stdout when it is empty.
template <class F> void emit(const Options &o, F &&write) {
  if (o.output.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out)
    throw mg::DomainError("cannot open '" + o.output + "' for writing");
  write(out);
}

void emit_json(const Options &o, const mg::json &j) {
  emit(o, [&](std::ostream &os) { os << j.dump(2) << '\n'; });
}

mg::MultiplicativeGraph graph_from_options(const Options &o) {
  rank_or_limit(o);
  const auto delta = arg_partition("--delta", o.delta);
  if (o.limit)
    return mg::build_limit_graph(delta, arg_family(o), o.depth, o.max_depth);
  return mg::build_graph(delta, arg_family_rank(o), o.depth, o.max_depth);
}

int cmd_graph(const Options &o) {
  const auto g = graph_from_options(o);
  if (o.format == "dot")
    emit(o, [&](std::ostream &os) { mg::write_dot(os, g); });
  else
    emit_json(o, mg::graph_to_json(g));
  return 0;
}

int cmd_kernel(const Options &o) {
  if (o.limit)
    throw ArgumentError("kernel is finite-rank; use limit-kernel");
  const auto theta = arg_theta(o, false);
  const auto g = graph_from_options(o);
  emit_json(o, mg::kernel_to_json(mg::transition_kernel(g, theta)));
  return 0;
}

int cmd_limit_kernel(const Options &o) {
  if (o.rank)
    throw ArgumentError("limit-kernel takes no --rank");
  const auto theta = arg_theta(o, true);
  const auto g = mg::build_limit_graph(arg_partition("--delta", o.delta),
                                       arg_family(o), o.depth, o.max_depth);
  emit_json(o, mg::kernel_to_json(mg::limit_kernel(g, theta, o.tol)));
  return 0;
}

int cmd_sweep(const Options &o) {
  const auto theta = arg_theta(o, true);
  const auto delta = arg_partition("--delta", o.delta);
  const auto lambda = arg_partition("--from", o.from);
  const auto mu = arg_partition("--to", o.to);
  const auto family = arg_family(o);
  const int r_min =
      o.r_min > 0 ? o.r_min
                  : std::max({delta.length(), lambda.length(), mu.length(),
                              family == mg::Family::D ? 2 : 1});
  const auto rows =
      mg::convergence_sweep(delta, lambda, mu, family, theta, r_min, o.r_max, o.tol);
  emit(o, [&](std::ostream &os) { mg::write_sweep_csv(os, rows); });
  return 0;
}

int cmd_sample(const Options &o) {
  rank_or_limit(o);
  const auto theta = arg_theta(o, o.limit);
  const auto delta = arg_partition("--delta", o.delta);
  const mg::ChainSource source =
      o.limit ? mg::ChainSource(arg_family(o)) : mg::ChainSource(arg_family_rank(o));
  const auto path = mg::sample_trajectory(delta, source, theta, o.steps, o.seed);
  emit(o, [&](std::ostream &os) { mg::write_trajectory(os, path); });
  return 0;
}

int cmd_check(const Options &o) {
  mg::AcceptanceOptions opt;
  opt.golden_trajectory = o.golden;
  opt.only = o.only;
  return mg::run_acceptance(std::cout, opt) ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Multiplicative graphs of classical Lie algebras and their "
               "Markov kernels"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *s, bool with_rank) {
    s->add_option("--delta", o.delta, "partition, e.g. 3,1 (0 = empty)")
        ->capture_default_str();
    s->add_option("--family", o.family, "A, C, B or D")->capture_default_str();
    if (with_rank) {
      s->add_option("--rank", o.rank, "finite rank r");
      s->add_flag("--limit", o.limit, "infinite-rank limit");
    }
  };
  auto depth = [&](CLI::App *s) {
    s->add_option("--depth", o.depth, "number of levels")->capture_default_str();
    s->add_option("--max-depth", o.max_depth, "refuse depths above this")
        ->capture_default_str();
  };
  auto output = [&](CLI::App *s) {
    s->add_option("-o,--output", o.output, "output file (default stdout)");
  };
  auto theta = [&](CLI::App *s) {
    s->add_option("--theta", o.theta, "const:b | geom:c,q | list:a,b;tail=t")
        ->capture_default_str();
  };
  auto tol = [&](CLI::App *s) {
    s->add_option("--tol", o.tol, "tolerance for limit values")
        ->capture_default_str();
  };

  auto *graph = app.add_subcommand("graph", "build a graph");
  common(graph, true);
  depth(graph);
  graph->add_option("--format", o.format)
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  output(graph);

  auto *kernel = app.add_subcommand("kernel", "finite-rank transition kernel");
  common(kernel, true);
  depth(kernel);
  theta(kernel);
  output(kernel);

  auto *limit = app.add_subcommand("limit-kernel", "infinite-rank kernel");
  common(limit, true);
  depth(limit);
  theta(limit);
  tol(limit);
  output(limit);

  auto *sweep = app.add_subcommand("sweep", "rank sweep of one edge probability (CSV)");
  common(sweep, false);
  theta(sweep);
  tol(sweep);
  sweep->add_option("--from", o.from, "source partition")->required();
  sweep->add_option("--to", o.to, "target partition")->required();
  sweep->add_option("--r-min", o.r_min, "first rank (default: smallest valid)");
  sweep->add_option("--r-max", o.r_max, "last rank")->capture_default_str();
  output(sweep);

  auto *sample = app.add_subcommand("sample", "one trajectory of the chain");
  common(sample, true);
  theta(sample);
  sample->add_option("--steps", o.steps, "trajectory length")->capture_default_str();
  sample->add_option("--seed", o.seed, "generator seed")->capture_default_str();
  output(sample);

  auto *check = app.add_subcommand("check", "run the acceptance suite");
  o.golden = MULTGRAPH_GOLDEN_TRAJECTORY;
  check->add_option("--golden", o.golden, "golden trajectory file")
      ->capture_default_str();
  check->add_option("--only", o.only, "run one criterion (1-10)")
      ->check(CLI::Range(1, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (graph->parsed())
      return cmd_graph(o);
    if (kernel->parsed())
      return cmd_kernel(o);
    if (limit->parsed())
      return cmd_limit_kernel(o);
    if (sweep->parsed())
      return cmd_sweep(o);
    if (sample->parsed())
      return cmd_sample(o);
    return cmd_check(o);
  } catch (const ArgumentError &e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  } catch (const mg::DomainError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  }
}

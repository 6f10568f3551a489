#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mccgs/oracle.hpp"
#include "mccgs/problem.hpp"
#include "mccgs/render.hpp"

using namespace mccgs;

namespace {

enum Exit { Ok = 0, Usage = 1, OracleFailed = 2, Invariant = 3 };

struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ProblemError("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

// Flag beats environment beats problem file.
template <typename T>
void override_from(T& target, const std::optional<T>& flag, const char* env) {
  if (flag) {
    target = *flag;
    return;
  }
  if (const char* v = std::getenv(env); v && *v) {
    std::istringstream in(v);
    T parsed;
    if (!(in >> parsed) || !in.eof()) throw ProblemError(std::string("invalid value for ") + env + ": '" + v + "'");
    target = parsed;
  }
}

MccgsTree solve(const Instance& inst, const ProblemOptions& o) {
  MccgsTree T = compute_mccgs(inst.F, inst.rings, inst.null0, inst.notnull0, mccgs_options(o));
  for (std::size_t i = 0; i < T.segments.size(); ++i) {
    auto v = check_structure(T.segments[i].tree);
    if (!v.empty()) throw InvariantError("segment " + std::to_string(i + 1) + " tree: " + v.front());
  }
  return T;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal canonical comprehensive Groebner systems"};
  app.require_subcommand(1);

  std::string input;
  std::optional<std::string> format;
  std::optional<int> max_degree;
  std::optional<unsigned> seed;
  std::optional<std::size_t> samples;
  std::string tree_path;

  auto* solve_cmd = app.add_subcommand("solve", "Compute and render the MCCGS of a problem file");
  solve_cmd->add_option("input", input, "Problem file (stdin when omitted or '-')");
  solve_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));
  solve_cmd->add_option("--max-factor-degree", max_degree, "Total degree above which factorization gives up");
  solve_cmd->add_option("--seed", seed, "Seed for randomized certification");

  auto* oracle_cmd = app.add_subcommand("oracle", "Check the MCCGS against direct bases at sampled points");
  oracle_cmd->add_option("input", input, "Problem file (stdin when omitted or '-')");
  oracle_cmd->add_option("--samples", samples, "Number of parameter points");
  oracle_cmd->add_option("--seed", seed, "Sampling seed");
  oracle_cmd->add_option("--tree", tree_path, "Check this JSON tree instead of computing one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Ok : Usage;
  }

  try {
    Problem p = parse_problem(slurp(input));
    ProblemOptions& o = p.options;
    override_from(o.max_factor_degree, max_degree, "MCCGS_MAX_FACTOR_DEGREE");
    override_from(o.seed, seed, "MCCGS_SEED");
    override_from(o.oracle_samples, samples, "MCCGS_SAMPLES");
    std::string fmt = "text";
    override_from(fmt, format, "MCCGS_FORMAT");
    if (fmt != "text" && fmt != "json" && fmt != "dot") throw ProblemError("unknown format '" + fmt + "'");
    if (o.max_factor_degree < 1) throw ProblemError("max factor degree must be positive");
    Instance inst = instantiate(p);

    if (*solve_cmd) {
      MccgsTree T = solve(inst, o);
      std::cout << (fmt == "json" ? render_json(T) : fmt == "dot" ? render_dot(T) : render_text(T));
      return Ok;
    }

    MccgsTree T = tree_path.empty() ? solve(inst, o) : parse_json(slurp(tree_path));
    if (!tree_path.empty() && (T.rings.space.vars != p.space.vars || T.rings.space.params != p.space.params))
      throw ProblemError("tree and problem declare different variables");
    OracleReport rep = run_oracle(T, inst.F, inst.null0, inst.notnull0, o.oracle_samples, o.seed);
    for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
    for (const auto& f : rep.membership_failures) std::cout << "membership: " << f << "\n";
    for (const auto& f : rep.basis_failures) std::cout << "basis: " << f << "\n";
    std::size_t bad = rep.membership_failures.size() + rep.basis_failures.size();
    std::cout << rep.samples - bad << "/" << rep.samples << " points passed\n";
    if (!rep.membership_failures.empty()) return Invariant;
    if (!rep.basis_failures.empty()) return OracleFailed;
    return Ok;
  } catch (const ProblemError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return Invariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return Invariant;
  }
}

#include "qsuper/cli.hpp"

#include "qsuper/braid.hpp"
#include "qsuper/serre.hpp"
#include "qsuper/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <iostream>
#include <sstream>

namespace qsuper::cli {

namespace {

struct RunConfig {
  std::string algebra;
  std::string config_path;
  unsigned depth = 4;
  bool allow_deep = false;
  std::string weight = "generic";
  std::string format;
  std::string output;
  int threads = 1;

  std::string which = "all";
  std::string word;
  std::string start;
  std::string multidegree;
  std::string lambda1;
  std::string lambda2;
  std::string seq1;
  std::string seq2;
};

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(part);
  if (text.back() == ',') parts.emplace_back();
  return parts;
}

Weight parse_weight(const std::string& text, const RootDatum& datum) {
  if (text == "generic") return GenericWeight{};
  ConcreteWeight weight;
  for (const auto& part : split_csv(text)) {
    try {
      weight.coords.push_back(parse_rational(part));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("bad weight: ") + e.what());
    }
  }
  check_weight(datum, weight);
  return weight;
}

Sequence parse_sequence(const std::string& text, std::size_t rank) {
  Sequence seq;
  for (const auto& part : split_csv(text)) {
    std::size_t index = 0;
    try {
      std::size_t used = 0;
      index = std::stoul(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw ConfigError("bad screening sequence '" + text + "'");
    }
    if (index < 1 || index > rank) throw ConfigError("screening index " + part + " out of range");
    seq.push_back(index - 1);
  }
  return seq;
}

RootDatum load_algebra(const RunConfig& config) {
  if (!config.config_path.empty() && !config.algebra.empty()) {
    throw ConfigError("give either --algebra or --config, not both");
  }
  if (!config.config_path.empty()) return load_config(config.config_path);
  if (config.algebra.empty()) throw ConfigError("an algebra is required (--algebra or --config)");
  return catalog(config.algebra);
}

void check_depth(const RunConfig& config) {
  if (config.depth < 1) throw ConfigError("depth must be at least 1");
  if (config.depth > max_depth && !config.allow_deep) {
    throw ConfigError("depth " + std::to_string(config.depth) + " exceeds the cap of " + std::to_string(max_depth) +
                      " (use --allow-deep)");
  }
}

bool json_output(const RunConfig& config) {
  if (config.format != "text" && config.format != "json") throw ConfigError("unknown format '" + config.format + "'");
  return config.format == "json";
}

Execution execution(const RunConfig& config) {
  if (config.threads > 1) {
    set_worker_count(config.threads);
    return Execution::parallel;
  }
  return Execution::serial;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  static const std::vector<std::string> suites = {"relations", "coproduct", "hopf", "all"};
  if (std::find(suites.begin(), suites.end(), config.which) == suites.end()) {
    throw ConfigError("unknown verification suite '" + config.which + "'");
  }
  check_depth(config);
  const RootDatum datum = load_algebra(config);
  const Weight weight = parse_weight(config.weight, datum);
  const bool json = json_output(config);
  const Execution exec = execution(config);
  const bool all = config.which == "all";

  VerificationReport report("verify " + datum.name());
  const ModuleContext ctx(datum, weight, config.depth);
  if (all || config.which == "relations") report.append(verify_relations(ctx, exec));
  if (all || config.which == "coproduct") report.append(verify_coproduct(TensorContext(datum, config.depth), exec));
  if (all || config.which == "hopf") report.append(verify_hopf_axioms(ctx, exec));

  if (json) {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.passed() ? exit_ok : exit_identity_failure;
}

int cmd_act(const RunConfig& config, std::ostream& out) {
  check_depth(config);
  const RootDatum datum = load_algebra(config);
  const Weight weight = parse_weight(config.weight, datum);
  const bool json = json_output(config);
  Word word;
  try {
    word = parse_word(config.word);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  for (const auto& g : word) {
    if (g.index >= datum.rank()) throw ConfigError("generator " + to_string(g) + " exceeds the rank");
  }
  const ModuleContext ctx(datum, weight, config.depth);
  const Sequence start = parse_sequence(config.start, datum.rank());
  if (start.size() > config.depth) throw ConfigError("start vector is longer than the depth");
  const ModuleVector input = ModuleVector::basis(start, ctx.arity());
  const ModuleVector result = apply_word(ctx, word, input);
  if (json) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [seq, c] : result.terms()) terms.push_back({{"basis", basis_label(seq)}, {"coeff", c.to_string()}});
    out << nlohmann::json{{"input", input.to_string()},
                          {"word", to_string(word)},
                          {"parity", word_parity(datum, word)},
                          {"result", result.to_string()},
                          {"terms", terms}}
               .dump(2)
        << "\n";
  } else {
    out << result.to_string() << "\n";
  }
  return exit_ok;
}

int cmd_serre_scan(const RunConfig& config, std::ostream& out) {
  check_depth(config);
  const RootDatum datum = load_algebra(config);
  const Weight weight = parse_weight(config.weight, datum);
  const bool json = json_output(config);
  Multidegree degree;
  try {
    degree = parse_multidegree(config.multidegree);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (degree.size() != datum.rank()) {
    throw ConfigError("multidegree needs " + std::to_string(datum.rank()) + " entries");
  }
  const unsigned total = std::accumulate(degree.begin(), degree.end(), 0u);
  if (total >= config.depth) {
    throw ConfigError("multidegree total " + std::to_string(total) + " must be below the depth " +
                      std::to_string(config.depth));
  }

  const ModuleContext generic(datum, GenericWeight{}, config.depth);
  const auto result = singular_scan(generic, degree, execution(config));
  bool residuals_pass = true;
  for (const auto& v : result.vectors) residuals_pass = residuals_pass && verify_candidate(generic, v.combination, degree).singular;

  nlohmann::json report = to_json(result, residuals_pass);
  std::vector<std::string> spot_lines;
  if (const auto* concrete = std::get_if<ConcreteWeight>(&weight)) {
    const ModuleContext at_weight(datum, weight, config.depth);
    const auto exponents = specialization_exponents(datum, *concrete);
    nlohmann::json spot = nlohmann::json::array();
    for (std::size_t k = 0; k < result.vectors.size(); ++k) {
      const auto special = specialized(result.vectors[k].combination, exponents);
      std::string status;
      if (!special) {
        status = "denominator vanishes";
      } else {
        status = verify_candidate(at_weight, *special, degree).singular ? "singular" : "not singular";
      }
      spot.push_back({{"vector", k + 1}, {"status", status}});
      spot_lines.push_back("  spot check vector " + std::to_string(k + 1) + " at weight " + config.weight + ": " +
                           status);
    }
    report["spot_checks"] = spot;
  }

  if (json) {
    out << report.dump(2) << "\n";
  } else {
    std::string degree_text;
    for (unsigned d : degree) degree_text += (degree_text.empty() ? "" : ",") + std::to_string(d);
    out << "multidegree (" << degree_text << "): dimension " << result.dimension() << "\n";
    for (std::size_t k = 0; k < result.vectors.size(); ++k) {
      out << "  vector " << k + 1 << ":";
      bool first = true;
      for (const auto& [w, c] : result.vectors[k].combination) {
        out << (first ? " " : " + ");
        first = false;
        std::string coeff = c.is_one() ? "" : c.to_string();
        if (!coeff.empty() && c.is_laurent() && c.numerator().size() > 1) coeff = "(" + coeff + ")";
        out << (coeff.empty() ? "" : coeff + " · ") << compact_word(w);
      }
      out << "\n";
    }
    out << "  residual checks: " << (residuals_pass ? "pass" : "fail") << "\n";
    for (const auto& line : spot_lines) out << line << "\n";
  }
  return exit_ok;
}

int cmd_braid(const RunConfig& config, std::ostream& out) {
  const RootDatum datum = load_algebra(config);
  const bool json = json_output(config);
  if (config.lambda1.empty() || config.lambda2.empty()) throw ConfigError("braid needs --lambda1 and --lambda2");
  const Weight first = parse_weight(config.lambda1, datum);
  const Weight second = parse_weight(config.lambda2, datum);
  if (is_generic(first) || is_generic(second)) throw ConfigError("braid phases need concrete weights");
  const PhaseScalar phase = braid_phase(datum, first, parse_sequence(config.seq1, datum.rank()), second,
                                        parse_sequence(config.seq2, datum.rank()));
  if (json) {
    out << nlohmann::json{{"phase", phase.to_string()}}.dump(2) << "\n";
  } else {
    out << phase.to_string() << "\n";
  }
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  if (const char* env = std::getenv("QSUPER_FORMAT")) config.format = env;
  if (config.format.empty()) config.format = "text";

  CLI::App app{"Exact screening-current representation of quantum superalgebras", "qsuper"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--algebra", config.algebra, "catalog algebra: sl2, sl3, sl2_1, osp1_2");
  app.add_option("--config", config.config_path, "algebra config file (JSON)");
  app.add_option("--depth", config.depth, "maximal number of contours per basis vector")->capture_default_str();
  app.add_flag("--allow-deep", config.allow_deep, "lift the depth cap of 12");
  app.add_option("--weight", config.weight, "\"generic\" or comma-separated coordinates in the simple roots")
      ->capture_default_str();
  app.add_option("--format", config.format, "text or json (default from QSUPER_FORMAT)");
  app.add_option("--output", config.output, "write the report to this file");
  app.add_option("--threads", config.threads, "worker threads for verification sweeps")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "verify relations, coproduct and Hopf axioms");
  verify->add_option("which", config.which, "relations | coproduct | hopf | all")->capture_default_str();
  auto* act = app.add_subcommand("act", "apply a word of generators to a basis vector");
  act->add_option("--word", config.word, "e.g. \"E1 F1 K2-\"");
  act->add_option("--start", config.start, "screening sequence of the start vector, e.g. 1,2 (default: V)");
  auto* scan = app.add_subcommand("serre-scan", "search for singular vectors of a multidegree");
  scan->add_option("--multidegree", config.multidegree, "e.g. 0,2")->required();
  auto* braid = app.add_subcommand("braid", "braiding phase of two screened vertex operators");
  braid->add_option("--lambda1", config.lambda1, "first weight coordinates");
  braid->add_option("--lambda2", config.lambda2, "second weight coordinates");
  braid->add_option("--seq1", config.seq1, "first screening sequence");
  braid->add_option("--seq2", config.seq2, "second screening sequence");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config_error;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output.empty()) {
    file.open(config.output);
    if (!file) {
      err << "error: cannot open output file " << config.output << "\n";
      return exit_config_error;
    }
    sink = &file;
  }

  try {
    if (verify->parsed()) return cmd_verify(config, *sink);
    if (act->parsed()) return cmd_act(config, *sink);
    if (scan->parsed()) return cmd_serre_scan(config, *sink);
    if (braid->parsed()) return cmd_braid(config, *sink);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const DepthExceeded& e) {
    err << "error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_config_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return exit_config_error;
  }
  return exit_config_error;
}

}  // namespace qsuper::cli

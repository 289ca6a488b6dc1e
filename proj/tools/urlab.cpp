// urlab: build, analyze and sweep uniserial representations from the command line.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "urlab/analysis.hpp"
#include "urlab/errors.hpp"
#include "urlab/io.hpp"
#include "urlab/phi.hpp"
#include "urlab/report.hpp"
#include "urlab/sweep.hpp"

using namespace urlab;
using io::Json;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInvalidInput = 2;

struct Common {
  std::string output;
  std::string format = "json";
  std::uint64_t seed = seed_from_env();
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) {
    throw SchemaError("cannot write " + c.output);
  }
  out << text;
}

void emit_counterexamples(const Common& c, const SweepReport& r) {
  if (r.pass()) {
    return;
  }
  const std::string body = io::to_json(r).at("counterexamples").dump(2) + "\n";
  if (c.output.empty() || c.output == "-") {
    std::cerr << body;
    return;
  }
  std::ofstream(c.output + ".counterexamples.json") << body;
}

int emit_sweep(const Common& c, const SweepReport& r) {
  emit(c, render_report(r, parse_format(c.format)));
  emit_counterexamples(c, r);
  return r.pass() ? kPass : kCheckFailed;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const std::size_t v = std::stoul(s);
      return {v, v};
    }
    return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw SchemaError("range must look like 2..6");
  }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) {
    out.push_back(io::rational_from_json(Json(s)));
  }
  return out;
}

Representation load_rep(const std::string& path) {
  const Json j = io::read_file(path);
  // A bare parameter object is accepted as shorthand.
  if (j.is_object() && j.contains("abc") && !j.contains("params")) {
    return build_R(io::params_from_json(j));
  }
  return io::representation_from_json(j);
}

int run_build(const Common& c, const std::string& input, bool sl2) {
  const Representation rep = sl2 ? build_sl2_tensor() : load_rep(input);
  emit(c, io::to_json(rep).dump(2) + "\n");
  return rep.verified ? kPass : kCheckFailed;
}

int run_analyze(const Common& c, const std::string& input, const std::string& compare) {
  const Representation rep = load_rep(input);
  if (!rep.verified) {
    const VerifyResult v = verify_representation(*rep.algebra, rep.images);
    Json out{{"schema", io::kSchema}, {"verified", false}};
    if (v.witness) {
      out["witness"] = {rep.algebra->name(v.witness->first), rep.algebra->name(v.witness->second)};
    }
    emit(c, out.dump(2) + "\n");
    return kCheckFailed;
  }
  AnalysisReport report = kernel_and_flags(rep);
  std::optional<IsomorphismResult> iso;
  if (!compare.empty()) {
    iso = isomorphism_search(rep, load_rep(compare), c.seed);
    report.negative_certified = iso->certified_negative;
  }
  const Format f = parse_format(c.format);
  if (f == Format::json) {
    Json j = io::to_json(report, *rep.algebra);
    if (iso) {
      j["comparison"] = io::to_json(*iso);
    }
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, render_report(report, *rep.algebra, f));
  }
  return report.funk_consistent.value_or(true) ? kPass : kCheckFailed;
}

int run_normalize(const Common& c, const std::string& input) {
  Representation rep = load_rep(input);
  if (!rep.verified) {
    return kCheckFailed;
  }
  if (!check_standard(rep).standard) {
    rep = standardize(rep);
  }
  const Normalized norm = normalize(rep);
  Json j = io::to_json(norm.rep);
  j["conjugator"] = io::to_json(norm.conjugator);
  if (norm.rep.params) {
    j["extreme"] = is_extreme(*norm.rep.params);
  }
  emit(c, j.dump(2) + "\n");
  return kPass;
}

int run_lidep(const Common& c, const Json& payload) {
  const Matrix P = io::matrix_from_json(payload.at("P"));
  const Matrix Q = io::matrix_from_json(payload.at("Q"));
  for (const auto& [key, value] : std::vector<std::pair<const char*, std::size_t>>{
           {"a", P.rows()}, {"b", P.cols()}, {"c", Q.cols()}}) {
    if (payload.contains(key) && payload.at(key) != value) {
      throw SchemaError(std::string("declared ") + key + " does not match the matrix shapes");
    }
  }
  if (P.cols() != Q.rows()) {
    throw SchemaError("P must be a x b and Q must be b x c");
  }
  const bool predict = lidep_predict(P, Q);
  const bool brute = lidep_bruteforce(P, Q);
  emit(c, Json{{"schema", io::kSchema}, {"predict", predict}, {"bruteforce", brute}, {"agree", predict == brute}}
                  .dump(2) + "\n");
  return predict == brute ? kPass : kCheckFailed;
}

int run_crosscheck_sl2(const Common& c) {
  const Representation tensor = build_sl2_tensor();
  const AnalysisReport report = kernel_and_flags(tensor);
  const RepParams params = recover_sl2_params();
  const Representation model = build_R(params);
  const IsomorphismResult iso = isomorphism_search(tensor, model, c.seed);
  const auto& part = *model.partition;
  const bool square = part.size(0) == 2 && part.size(1) == 2 && part.size(2) == 2 && params.M.rows() == params.M.cols() &&
                      params.N.rows() == params.N.cols();
  const bool ok = tensor.verified && report.faithful && report.uniserial && square && iso.intertwiner.has_value();
  Json j{{"schema", io::kSchema},       {"faithful", report.faithful},
         {"uniserial", report.uniserial}, {"blocks_square", square},
         {"params", io::to_json(params)}, {"comparison", io::to_json(iso)},
         {"pass", ok}};
  emit(c, j.dump(2) + "\n");
  return ok ? kPass : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for uniserial representations of <x> |x L(V)"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("-o,--output", common.output, "Output path (default stdout)");
  app.add_option("-f,--format", common.format, "json, md or csv")->check(CLI::IsMember({"json", "md", "csv"}));
  app.add_option("--seed", common.seed, "Base seed (default from URLAB_SEED or 1729)");

  std::string input;
  std::string compare;
  bool sl2 = false;
  auto* build = app.add_subcommand("build", "Build a representation from parameters and verify it");
  build->add_option("input", input, "Parameter or representation JSON");
  build->add_flag("--sl2", sl2, "Build the sl(2) tensor example instead");

  auto* analyze = app.add_subcommand("analyze", "Length, socle series, kernel and faithfulness flags");
  analyze->add_option("input", input, "Representation JSON")->required();
  analyze->add_option("--compare", compare, "Second representation to test for isomorphism");

  auto* normalize_cmd = app.add_subcommand("normalize", "Standardize if needed, then normalize");
  normalize_cmd->add_option("input", input, "Representation JSON")->required();

  std::string n_range = "2..6";
  std::size_t samples = 5;
  std::vector<std::string> alphas{"0", "1", "-1/2"};
  std::vector<std::string> lambdas{"1", "2", "-1/3"};
  auto* sweep = app.add_subcommand("sweep-faithful", "Faithfulness sweep over all admissible triples");
  sweep->add_option("--n", n_range, "Range of n, e.g. 2..4");
  sweep->add_option("--samples", samples, "Seeded (M, N) per cell");
  sweep->add_option("--alpha", alphas, "alpha values");
  sweep->add_option("--lambda", lambdas, "lambda values");

  std::size_t trials = 50;
  auto* roundtrip = app.add_subcommand("roundtrip", "Normal-form recovery and non-isomorphism of distinct tuples");
  roundtrip->add_option("--trials", trials, "Number of seeded trials");
  std::string rt_range = "2..5";
  roundtrip->add_option("--n", rt_range, "Range of n");
  roundtrip->add_option("--alpha", alphas, "alpha values");
  roundtrip->add_option("--lambda", lambdas, "nonzero lambda values");

  std::string p_text;
  std::string q_text;
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  auto* lidep = app.add_subcommand("lidep", "Corner predicate versus rank test for the T-set");
  lidep->add_option("input", input, "Payload JSON {a,b,c,P,Q}");
  lidep->add_option("--P", p_text, "P as a JSON matrix");
  lidep->add_option("--Q", q_text, "Q as a JSON matrix");
  lidep->add_option("--a", a);
  lidep->add_option("--b", b);
  lidep->add_option("--c", c);

  std::size_t dmax = 3;
  std::vector<std::size_t> sizes;
  std::string alpha_text = "0";
  auto* reduccion = app.add_subcommand("reduccion", "Four-block closure scan for the (1,4) obstruction");
  reduccion->add_option("--dmax", dmax, "Largest block size");
  reduccion->add_option("--sizes", sizes, "Single instance d1 d2 d3 d4")->expected(4);
  std::vector<std::string> scan_lambdas{"1", "-2", "1/3"};
  reduccion->add_option("--lambda", scan_lambdas, "nonzero lambda values");
  reduccion->add_option("--alpha", alpha_text, "alpha");
  std::size_t x_samples = 3;
  reduccion->add_option("--samples", x_samples, "X samples per tuple");

  app.add_subcommand("crosscheck-sl2", "Compare the sl(2) tensor module with its three-block model");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInvalidInput;
  }

  try {
    if (build->parsed()) {
      if (input.empty() && !sl2) {
        throw SchemaError("build needs an input file or --sl2");
      }
      return run_build(common, input, sl2);
    }
    if (analyze->parsed()) {
      return run_analyze(common, input, compare);
    }
    if (normalize_cmd->parsed()) {
      return run_normalize(common, input);
    }
    if (sweep->parsed()) {
      SweepConfig cfg;
      std::tie(cfg.n_min, cfg.n_max) = parse_range(n_range);
      cfg.samples_per_cell = samples;
      cfg.alphas = parse_rationals(alphas);
      cfg.lambdas = parse_rationals(lambdas);
      cfg.seed = common.seed;
      if (cfg.n_min < 2) {
        throw SchemaError("n must be at least 2");
      }
      return emit_sweep(common, faithful_sweep(cfg));
    }
    if (roundtrip->parsed()) {
      RoundtripConfig cfg;
      std::tie(cfg.n_min, cfg.n_max) = parse_range(rt_range);
      cfg.trials = trials;
      cfg.alphas = parse_rationals(alphas);
      cfg.lambdas = parse_rationals(lambdas);
      cfg.seed = common.seed;
      if (cfg.n_min < 2 || cfg.alphas.empty() || cfg.lambdas.empty()) {
        throw SchemaError("roundtrip needs n >= 2 and non-empty alpha/lambda sets");
      }
      for (const auto& l : cfg.lambdas) {
        if (l.is_zero()) {
          throw SchemaError("roundtrip needs lambda != 0");
        }
      }
      return emit_sweep(common, classification_roundtrip(cfg));
    }
    if (lidep->parsed()) {
      if (input.empty() && (p_text.empty() || q_text.empty())) {
        throw SchemaError("lidep needs a payload file or --P and --Q");
      }
      Json payload;
      if (!input.empty()) {
        payload = io::read_file(input);
      } else {
        payload = {{"P", io::parse(p_text)}, {"Q", io::parse(q_text)}};
        for (const auto& [key, value] : {std::pair{"a", a}, std::pair{"b", b}, std::pair{"c", c}}) {
          if (value != 0) {
            payload[key] = value;
          }
        }
      }
      return run_lidep(common, payload);
    }
    if (reduccion->parsed()) {
      const std::vector<Rational> ls = parse_rationals(scan_lambdas);
      if (ls.empty()) {
        throw SchemaError("reduccion needs at least one lambda");
      }
      const Rational alpha = io::rational_from_json(Json(alpha_text));
      if (!sizes.empty()) {
        Sampler sampler(common.seed, {long(sizes[0]), long(sizes[1]), long(sizes[2]), long(sizes[3])});
        const ReduccionInstance inst = make_reduccion_instance(sizes, ls.front(), alpha, sampler);
        const ReduccionResult r = reduccion_scan(inst);
        Json j{{"schema", io::kSchema}, {"all_14_blocks_zero", r.all_14_blocks_zero}, {"closure_dim", r.closure_dim}};
        if (r.witness) {
          j["witness"] = io::to_json(*r.witness);
        }
        emit(common, j.dump(2) + "\n");
        const bool expected = sizes == std::vector<std::size_t>{1, 1, 1, 1};
        return r.all_14_blocks_zero == expected ? kPass : kCheckFailed;
      }
      return emit_sweep(common, length_bound_scan(dmax, ls, x_samples, common.seed, alpha));
    }
    return run_crosscheck_sl2(common);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}

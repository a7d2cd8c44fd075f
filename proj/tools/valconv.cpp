#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "valconv/checks.hpp"
#include "valconv/convolution.hpp"
#include "valconv/errors.hpp"
#include "valconv/io.hpp"
#include "valconv/polytope_algebra.hpp"

using namespace valconv;

namespace {

enum Exit { kPass = 0, kToleranceFail = 1, kPartial = 2, kParse = 3 };

struct Flags {
  std::optional<double> tol;
  double mc_samples = 2e6;
  std::uint64_t seed = 42;
  std::size_t trials = 0;
  int dim = 0;
  std::string json_out;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--tol", f.tol, "numeric tolerance (default 1e-9 for n <= 3, 1e-3 above)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mc-samples", f.mc_samples, "Monte Carlo samples per simplex")->check(CLI::Range(1000.0, 1e10));
  cmd->add_option("--seed", f.seed, "random seed");
  cmd->add_option("--json-out", f.json_out, "also write the report to this file");
}

NumericConfig config_for(const Flags& f, int n) {
  NumericConfig cfg = NumericConfig::defaults_for(n);
  if (f.tol) cfg.tol = *f.tol;
  cfg.mc_samples = static_cast<long>(f.mc_samples);
  cfg.seed = f.seed;
  return cfg;
}

void emit(const Flags& f, const Json& report) {
  std::cout << report.dump(2) << "\n";
  if (!f.json_out.empty()) write_json_file(f.json_out, report);
}

Json witnesses_json(const NotTransversal& e) {
  Json w = Json::array();
  for (const auto& [a, b] : e.witnesses()) w.push_back({a, b});
  return w;
}

int cmd_faces(const Flags& f, const std::string& path) {
  emit(f, faces_report(polytope_from_json(read_json_file(path))));
  return kPass;
}

int cmd_verify_files(const Flags& f, const std::string& a, const std::string& b) {
  Polytope p = polytope_from_json(read_json_file(a));
  Polytope q = polytope_from_json(read_json_file(b));
  if (p.ambient_dim() != q.ambient_dim()) throw ParseError("polytopes live in different dimensions");
  const NumericConfig cfg = config_for(f, p.ambient_dim());
  try {
    VerificationReport r = verify_theorem(p, q, cfg);
    Json j = to_json(r);
    j["passed"] = r.passed(cfg.tol);
    emit(f, j);
    return r.passed(cfg.tol) ? kPass : kToleranceFail;
  } catch (const NotTransversal& e) {
    emit(f, {{"error", "not in general position"}, {"message", e.what()}, {"witnesses", witnesses_json(e)}});
    return kPartial;
  }
}

int cmd_verify_random(const Flags& f, const std::string& kind) {
  const int n = f.dim == 0 ? 2 : f.dim;
  if (n < 2) throw InvalidArgument("--dim must be at least 2");
  std::vector<PairSpec> specs;
  if (kind.empty()) {
    specs = default_pair_specs(n);
  } else {
    const auto comma = kind.find(',');
    const PolytopeKind ka = parse_kind(kind.substr(0, comma));
    const PolytopeKind kb = comma == std::string::npos ? ka : parse_kind(kind.substr(comma + 1));
    specs.push_back({n, ka, kb});
  }
  const NumericConfig cfg = config_for(f, n);
  const auto pairs = general_position_pairs(f.seed, specs, f.trials);
  Json reports = Json::array();
  std::size_t passed = 0;
  bool partial = false;
  for (const auto& [p, q] : pairs) {
    Json j = {{"p", to_json(p)}, {"q", to_json(q)}};
    try {
      VerificationReport r = verify_theorem(p, q, cfg);
      j["report"] = to_json(r);
      j["passed"] = r.passed(cfg.tol);
      if (r.passed(cfg.tol)) ++passed;
    } catch (const PartialFunctionDomain& e) {
      j["error"] = e.what();
      j["passed"] = false;
      partial = true;
    }
    reports.push_back(j);
  }
  emit(f, {{"dim", n},
           {"seed", f.seed},
           {"requested", f.trials},
           {"generated", pairs.size()},
           {"passed", passed},
           {"config", to_json(cfg)},
           {"pairs", reports}});
  if (passed == pairs.size() && pairs.size() == f.trials) return kPass;
  return partial ? kPartial : kToleranceFail;
}

int cmd_equal(const Flags& f, const std::string& a, const std::string& b) {
  PiElement x = pi_element_from_json(read_json_file(a));
  PiElement y = pi_element_from_json(read_json_file(b));
  if (x.ambient_dim() != y.ambient_dim()) throw ParseError("elements live in different dimensions");
  const NumericConfig cfg = config_for(f, x.ambient_dim());
  auto diff = compare(embed(x), embed(y), cfg);
  Json j = {{"equal", !diff.has_value()}};
  if (diff) j["diff"] = to_json(*diff);
  emit(f, j);
  return diff ? kToleranceFail : kPass;
}

int cmd_selftest(const Flags& f) {
  SelftestOptions opt;
  opt.seed = f.seed;
  if (f.dim != 0) opt.dims = {f.dim};
  if (f.trials != 0) opt.trials = f.trials;
  opt.mc_samples = static_cast<long>(f.mc_samples);
  if (f.tol) opt.tol = *f.tol;
  Json report = run_selftest(opt);
  emit(f, report);
  return report["passed"].get<bool>() ? kPass : kToleranceFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact current representations of polytopes and their convolution"};
  app.require_subcommand(1);
  Flags flags;
  std::string file_a, file_b, kind;

  auto* faces = app.add_subcommand("faces", "face lattice report of a polytope file");
  faces->add_option("polytope", file_a, "polytope JSON file")->required();
  add_common(faces, flags);

  auto* verify = app.add_subcommand("verify", "check M(P + Q) = M(P) * M(Q)");
  verify->add_option("p", file_a, "polytope JSON file");
  verify->add_option("q", file_b, "polytope JSON file");
  verify->add_option("--trials", flags.trials, "number of random pairs instead of files");
  verify->add_option("--dim", flags.dim, "ambient dimension of random pairs");
  verify->add_option("--kind", kind, "polytope kinds of random pairs, e.g. triangle or segment,simplex");
  add_common(verify, flags);

  auto* equal = app.add_subcommand("equal", "decide equality of two polytope algebra elements");
  equal->add_option("x", file_a, "element JSON file")->required();
  equal->add_option("y", file_b, "element JSON file")->required();
  add_common(equal, flags);

  auto* selftest = app.add_subcommand("selftest", "run the seeded invariant suites");
  selftest->add_option("--trials", flags.trials, "cases per suite");
  selftest->add_option("--dim", flags.dim, "run a single dimension");
  add_common(selftest, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kParse;
  }

  try {
    if (*faces) return cmd_faces(flags, file_a);
    if (*verify) {
      if (flags.trials > 0) return cmd_verify_random(flags, kind);
      if (file_a.empty() || file_b.empty()) throw InvalidArgument("verify needs two files or --trials");
      return cmd_verify_files(flags, file_a, file_b);
    }
    if (*equal) return cmd_equal(flags, file_a, file_b);
    if (*selftest) return cmd_selftest(flags);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const MalformedRep& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const NotTransversal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPartial;
  } catch (const PartialFunctionDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPartial;
  } catch (const NonConstantAlpha& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPartial;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kToleranceFail;
  }
  return kParse;
}

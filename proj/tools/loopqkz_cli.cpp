// loopqkz command-line front end: solve, verify, character, sumrule.
//
// Exit codes: 0 success, 1 bad arguments, 2 non-generic point,
// 3 singular parameter, 4 failed verification or internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loopqkz/io.hpp"
#include "loopqkz/loopqkz.hpp"

using namespace loopqkz;

namespace {

struct PointArgs {
  int length = 0;
  std::string z, zeta1, zeta2, w, s = "1";
  std::uint64_t seed = 1;
};

Scalar parse_s(const std::string& text) {
  if (text == "1") return fourth_root(0);
  if (text == "i") return fourth_root(1);
  if (text == "-1") return fourth_root(2);
  if (text == "-i") return fourth_root(3);
  throw invalid_argument("s must be one of 1, -1, i, -i");
}

// Unset parameters are drawn from the seed so identical arguments always give
// identical output.
SpectralPoint build_point(const PointArgs& a) {
  if (a.length < 0) throw invalid_argument("L must be non-negative");
  PointSampler ps(a.seed);
  SpectralPoint pt = ps.point(a.length, parse_s(a.s));
  if (!a.z.empty()) {
    pt.z = parse_scalar_list(a.z);
    if (static_cast<int>(pt.z.size()) != a.length)
      throw invalid_argument("--z has " + std::to_string(pt.z.size()) + " values, expected " + std::to_string(a.length));
  }
  if (!a.zeta1.empty()) pt.zeta1 = parse_scalar(a.zeta1);
  if (!a.zeta2.empty()) pt.zeta2 = parse_scalar(a.zeta2);
  if (!a.w.empty()) pt.w = parse_scalar(a.w);
  auto nonzero = [](const Scalar& x, const std::string& what) {
    if (x.is_zero()) throw invalid_argument(what + " must be nonzero");
  };
  for (const auto& x : pt.z) nonzero(x, "z");
  nonzero(pt.zeta1, "zeta1");
  nonzero(pt.zeta2, "zeta2");
  nonzero(pt.w, "w");
  return pt;
}

void add_point_options(CLI::App* cmd, PointArgs& a) {
  cmd->add_option("--L", a.length, "system size")->required();
  cmd->add_option("--z", a.z, "inhomogeneities, comma separated (p/d or a:b:c:d)");
  cmd->add_option("--zeta1", a.zeta1, "left boundary parameter");
  cmd->add_option("--zeta2", a.zeta2, "right boundary parameter");
  cmd->add_option("--w", a.w, "auxiliary spectral parameter");
  cmd->add_option("--s", a.s, "fourth root of unity: 1, -1, i, -i");
  cmd->add_option("--seed", a.seed, "seed for parameters not given");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw invalid_argument("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

int run_solve(const PointArgs& a, const std::string& format, const std::string& path) {
  const SpectralPoint pt = build_point(a);
  const GroundstateVector gs = solve(pt);
  const Scalar sum = sum_components(gs), prod = z_product(pt);
  Output out(path);
  if (format == "csv") {
    out.stream() << to_csv(gs);
    std::cerr << "sum " << sum << "\nfour-character product " << prod << "\n";
  } else {
    json j = to_json(gs);
    j["sum"] = to_json(sum);
    j["fourCharacterProduct"] = to_json(prod);
    out.stream() << j.dump(2) << "\n";
  }
  return 0;
}

int run_sumrule(const PointArgs& a, bool homogeneous, const std::string& format, const std::string& path) {
  Output out(path);
  json j{{"schemaVersion", schema_version}};
  bool equal = false;
  if (homogeneous) {
    PointArgs b = a;
    b.z.clear();
    SpectralPoint pt = build_point(b);
    const GroundstateVector gs = solve_homogeneous(a.length, pt.zeta1, pt.zeta2);
    const HomogeneousNorm h = homogeneous_norm(a.length, pt.zeta1, pt.zeta2);
    const Scalar sum = sum_components(gs);
    equal = sum == h.product();
    j["point"] = to_json(gs.point);
    j["sum"] = to_json(sum);
    j["product"] = to_json(h.product());
    j["factors"] = {{"Z2", to_json(h.z2)}, {"Z1left", to_json(h.z1_left)},
                    {"Z1right", to_json(h.z1_right)}, {"Z0", to_json(h.z0)}};
  } else {
    const SpectralPoint pt = build_point(a);
    const Scalar sum = sum_components(solve_normalized(pt)), prod = z_product(pt);
    equal = sum == prod;
    j["point"] = to_json(pt);
    j["sum"] = to_json(sum);
    j["product"] = to_json(prod);
  }
  j["equal"] = equal;
  if (format == "csv") {
    out.stream() << "quantity,c0,c1,c2,c3\n";
    for (const char* key : {"sum", "product"}) {
      out.stream() << key;
      for (const auto& c : j[key]) out.stream() << "," << c.get<std::string>();
      out.stream() << "\n";
    }
  } else {
    out.stream() << j.dump(2) << "\n";
  }
  return equal ? 0 : 4;
}

int run_verify(const std::string& suite, int length, int trials, std::uint64_t seed, const std::string& format,
               const std::string& path) {
  SuiteConfig cfg{length, trials, seed};
  const SuiteReport rep = run_suite(suite, cfg);
  Output out(path);
  if (format == "json") {
    json checks = json::array();
    for (const auto& t : rep.tallies())
      checks.push_back({{"identity", t.identity}, {"passed", t.passed}, {"total", t.total},
                        {"ok", t.ok()}, {"failure", t.first_failure}});
    out.stream() << json{{"schemaVersion", schema_version}, {"suite", suite}, {"L", length},
                         {"trials", trials}, {"seed", seed}, {"checks", checks}, {"ok", rep.ok()}}
                        .dump(2)
                 << "\n";
  } else if (format == "csv") {
    out.stream() << "identity,passed,total,ok\n";
    for (const auto& t : rep.tallies())
      out.stream() << "\"" << t.identity << "\"," << t.passed << "," << t.total << "," << (t.ok() ? 1 : 0) << "\n";
  } else {
    for (const auto& t : rep.tallies()) {
      out.stream() << (t.ok() ? "PASS " : "FAIL ") << t.identity << " (" << t.passed << "/" << t.total << ")";
      if (!t.ok()) out.stream() << ": " << t.first_failure;
      out.stream() << "\n";
    }
  }
  return rep.ok() ? 0 : 4;
}

int run_character(const std::string& lam_text, const std::string& points_text, bool confluent,
                  const std::string& format, const std::string& path) {
  Partition lam;
  {
    std::stringstream ss(lam_text);
    std::string part;
    while (std::getline(ss, part, ',')) {
      try {
        lam.push_back(std::stoi(part));
      } catch (const std::exception&) {
        throw invalid_argument("cannot parse partition part '" + part + "'");
      }
    }
  }
  validate_partition(lam);
  const std::vector<Scalar> pts = parse_scalar_list(points_text);
  Scalar value;
  if (confluent) {
    std::vector<Scalar> fixed;
    int ones = 0;
    for (const auto& x : pts) {
      if (x == Scalar(1L))
        ++ones;
      else
        fixed.push_back(x);
    }
    value = character_confluent(lam, fixed, ones);
  } else {
    try {
      value = symplectic_character(lam, pts);
    } catch (const confluent_point& e) {
      throw confluent_point(std::string(e.what()) + " (try --confluent)");
    }
  }
  Output out(path);
  if (format == "csv") {
    const auto& c = value.coefficients();
    out.stream() << "c0,c1,c2,c3\n"
                 << rational_text(c[0]) << "," << rational_text(c[1]) << "," << rational_text(c[2]) << ","
                 << rational_text(c[3]) << "\n";
  } else {
    json j{{"schemaVersion", schema_version}, {"lambda", lam}, {"value", to_json(value)}};
    if (value.is_rational()) j["rational"] = rational_text(value.coefficient(0));
    out.stream() << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact groundstate of the O(1) loop model with two open boundaries"};
  app.require_subcommand(1);
  std::string format = "json", path;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--output,-o", path, "output file (default stdout)");

  PointArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "groundstate at a spectral point");
  add_point_options(solve_cmd, solve_args);

  PointArgs sum_args;
  bool homogeneous = false;
  auto* sum_cmd = app.add_subcommand("sumrule", "sum of components against the four-character product");
  add_point_options(sum_cmd, sum_args);
  sum_cmd->add_flag("--homogeneous", homogeneous, "all z_i = 1, confluent characters");

  std::string suite = "all";
  int vlen = 3, trials = 3;
  std::uint64_t vseed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run an identity suite at random points");
  verify_cmd->add_option("--suite", suite, "algebra, local, transfer, qkz, recursion, sumrule, degree, all")
      ->check(CLI::IsMember({"algebra", "local", "transfer", "qkz", "recursion", "sumrule", "degree", "all"}));
  verify_cmd->add_option("--L", vlen, "system size");
  verify_cmd->add_option("--trials", trials, "random points per identity");
  verify_cmd->add_option("--seed", vseed, "random seed");

  std::string lam_text, points_text;
  bool confluent = false;
  auto* char_cmd = app.add_subcommand("character", "symplectic character at squared arguments");
  char_cmd->add_option("--lambda", lam_text, "partition, comma separated")->required();
  char_cmd->add_option("--points", points_text, "arguments, comma separated")->required();
  char_cmd->add_flag("--confluent", confluent, "treat arguments equal to 1 as a confluent block");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args, format, path);
    if (*sum_cmd) return run_sumrule(sum_args, homogeneous, format, path);
    if (*verify_cmd) return run_verify(suite, vlen, trials, vseed, app.count("--format") == 0 ? "text" : format, path);
    if (*char_cmd) return run_character(lam_text, points_text, confluent, format, path);
  } catch (const invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const non_generic_point& e) {
    std::cerr << "non-generic point: " << e.what() << "\n";
    return 2;
  } catch (const confluent_point& e) {
    std::cerr << "confluent point: " << e.what() << "\n";
    return 2;
  } catch (const singular_parameter& e) {
    std::cerr << "singular parameter: " << e.what() << "\n";
    return 3;
  } catch (const division_by_zero& e) {
    std::cerr << "singular parameter: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 1;
}

// Command-line front end: exact Reidemeister torsion of based chain
// complexes, verification suites for twisted surface representations, and
// train-track form evaluation.  Inputs are JSON files; reports are JSON
// lines so runs compose in shell pipelines.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "torsionlab/pairings.hpp"
#include "torsionlab/relator_solver.hpp"
#include "torsionlab/symplectic.hpp"
#include "torsionlab/train_track.hpp"

using namespace torsionlab;

namespace {

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitComplex = 3;
constexpr int kExitRelator = 4;
constexpr int kExitReducible = 5;
constexpr int kExitSwitch = 6;

struct Options {
  std::string field = "rational";
  double tol = 1e-9;
  std::uint64_t seed = 1;
  std::string out;
  std::string suite = "all";
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

FieldContext context_for(const std::string& field) {
  FieldContext ctx;
  if (field.rfind("quad:", 0) == 0) {
    try {
      ctx.quad_d = std::stol(field.substr(5));
    } catch (const std::exception&) {
      throw ParseError("bad field tag '" + field + "'");
    }
    if (ctx.quad_d <= 1) throw ParseError("quadratic field needs a radicand > 1");
  } else if (field != "rational" && field != "float") {
    throw ParseError("unknown field '" + field + "' (expected rational, quad:<d>, float)");
  }
  return ctx;
}

std::size_t thread_cap() {
  const char* env = std::getenv("TORSIONLAB_THREADS");
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  if (!env) return hw;
  long v = std::atol(env);
  if (v <= 0) return 1;
  return std::min<std::size_t>(hw, static_cast<std::size_t>(v));
}

class Report {
 public:
  explicit Report(const Options& opt) : opt_(opt) {
    json header{{"report", "torsionlab"},
                {"field", opt.field},
                {"seed", opt.seed},
                {"tolerance", opt.tol}};
    lines_.push_back(header.dump());
  }

  void add(json line) { lines_.push_back(line.dump()); }
  void add_check(const std::string& check, bool pass, json extra = json::object()) {
    extra["check"] = check;
    extra["pass"] = pass;
    all_pass_ = all_pass_ && pass;
    add(std::move(extra));
  }
  bool all_pass() const { return all_pass_; }

  void flush() const {
    std::ostringstream body;
    for (const auto& l : lines_) body << l << "\n";
    if (opt_.out.empty()) {
      std::cout << body.str();
    } else {
      std::ofstream out(opt_.out);
      if (!out) throw Error("cannot write '" + opt_.out + "'");
      out << body.str();
    }
  }

 private:
  Options opt_;
  std::vector<std::string> lines_;
  bool all_pass_ = true;
};

template <class K>
std::string scalar_string(const K& x) {
  return x.to_string();
}

// ---------------------------------------------------------------------------
// torsion subcommand
// ---------------------------------------------------------------------------
template <class K>
int run_torsion(const Options& opt, const std::string& complex_path,
                const std::string& homology_path) {
  FieldContext ctx = context_for(opt.field);
  ChainComplex<K> c = chain_complex_from_json<K>(load_json(complex_path), ctx);
  HomologyBasis<K> h = homology_path.empty()
                           ? homology_basis_default(c)
                           : homology_basis_from_json<K>(load_json(homology_path), ctx, c);
  TorsionValue<K> t = torsion(c, h);
  std::ostringstream body;
  body << t.value.to_string() << "\n";
  body << "bases: " << (homology_path.empty() ? "default echelon homology basis" : homology_path)
       << "; " << t.sign_convention << "\n";
  if (opt.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(opt.out);
    out << body.str();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify subcommand
// ---------------------------------------------------------------------------
template <class K>
void run_invariance_suite(const SurfaceRepresentation<K>& rep, const Options& opt,
                          Report& report) {
  Rng rng(opt.seed);
  Matrix<K> conj = rep.algebra().random_group_element(rng, 1);
  InvarianceReport<K> inv = invariance_suite(rep, conj);
  for (const auto& entry : inv.entries) {
    report.add_check("invariance/" + entry.label, entry.pass,
                     json{{"fixture", "representation"},
                          {"value", scalar_string(entry.value)},
                          {"reference", scalar_string(inv.reference)}});
  }
}

template <class K>
void run_main_theorem_suite(const SurfaceRepresentation<K>& rep, const Options& opt,
                            Report& report) {
  MainTheoremReport<K> r = verify_main_theorem(rep);
  report.add_check("main-theorem", r.pass,
                   json{{"fixture", "representation"},
                        {"lhs", scalar_string(r.lhs)},
                        {"rhs", scalar_string(r.rhs)},
                        {"relative_gap", r.relative_gap},
                        {"field", opt.field},
                        {"torsion", scalar_string(r.torsion_defining)},
                        {"pfaffian", scalar_string(r.pfaffian_abs)},
                        {"kronecker_det", scalar_string(r.kronecker_det_abs)}});
}

struct SymplecticCheck {
  bool pass = false;
  std::string direct, closed;
};

SymplecticCheck symplectic_check(std::uint64_t seed) {
  Rng rng(seed);
  SymplecticComplex<Rational> s = random_symplectic_complex<Rational>(rng, 6, 3);
  HomologyBasis<Rational> h = homology_basis_default(s.base());
  Rational direct = torsion(s.base(), h).value;
  Rational closed = torsion_via_symplectic(s, h).value;
  return {direct == closed, direct.to_string(), closed.to_string()};
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void run_symplectic_suite(const Options& opt, Report& report, int count = 100) {
  std::vector<SymplecticCheck> results(count);
  std::size_t workers = std::min<std::size_t>(thread_cap(), static_cast<std::size_t>(count));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) results[i] = symplectic_check(mix_seed(opt.seed, i));
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1))
          results[i] = symplectic_check(mix_seed(opt.seed, i));
      });
    for (auto& t : pool) t.join();
  }
  for (int i = 0; i < count; ++i) {
    report.add_check("symplectic/" + std::to_string(i), results[i].pass,
                     json{{"fixture", "random-symplectic-" + std::to_string(i)},
                          {"direct", results[i].direct},
                          {"closed_form", results[i].closed}});
  }
}

template <class K>
int run_verify(const Options& opt, const std::string& rep_path) {
  FieldContext ctx = context_for(opt.field);
  Report report(opt);
  bool need_rep = opt.suite == "invariance" || opt.suite == "main-theorem" || opt.suite == "all";
  if (need_rep) {
    SurfaceRepresentation<K> rep = representation_from_json<K>(load_json(rep_path), ctx);
    if (opt.suite == "invariance" || opt.suite == "all") run_invariance_suite(rep, opt, report);
    if (opt.suite == "main-theorem" || opt.suite == "all")
      run_main_theorem_suite(rep, opt, report);
  }
  if (opt.suite == "symplectic" || opt.suite == "all") run_symplectic_suite(opt, report);
  report.add(json{{"summary", report.all_pass() ? "pass" : "fail"}});
  report.flush();
  return report.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// thurston subcommand
// ---------------------------------------------------------------------------
template <class K>
int run_thurston(const Options& opt, const std::string& track_path, const std::string& c1_path,
                 const std::string& c2_path) {
  FieldContext ctx = context_for(opt.field);
  TrainTrack track = train_track_from_json(load_json(track_path));
  EdgeWeights<K> s1 = edge_weights_from_json<K>(load_json(c1_path), ctx, track);
  EdgeWeights<K> s2 = edge_weights_from_json<K>(load_json(c2_path), ctx, track);
  K value = thurston_form(track, s1, s2);
  std::ostringstream body;
  body << value.to_string() << "\n";
  if (opt.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(opt.out);
    out << body.str();
  }
  return 0;
}

template <class F>
int dispatch_field(const std::string& field, F&& f) {
  if (field == "rational") return f(Rational{});
  if (field.rfind("quad:", 0) == 0) return f(QuadExt{});
  if (field == "float") return f(Approx{});
  throw ParseError("unknown field '" + field + "' (expected rational, quad:<d>, float)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Reidemeister torsion of based and twisted surface complexes"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--field", opt.field, "scalar field: rational, quad:<d>, float")
      ->capture_default_str();
  app.add_option("--tol", opt.tol, "comparison tolerance for the float field")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--out", opt.out, "write output to this file instead of stdout");

  std::string complex_path, homology_path, rep_path, track_path, c1_path, c2_path;

  CLI::App* torsion_cmd = app.add_subcommand("torsion", "torsion of a based chain complex");
  torsion_cmd->add_option("complex", complex_path, "chain complex JSON file")->required();
  torsion_cmd->add_option("homology", homology_path, "homology basis JSON file (optional)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verification suites for a representation");
  verify_cmd->add_option("representation", rep_path, "representation JSON file");
  verify_cmd->add_option("--suite", opt.suite, "invariance | main-theorem | symplectic | all")
      ->capture_default_str();

  CLI::App* thurston_cmd = app.add_subcommand("thurston", "train-track form of two cocycles");
  thurston_cmd->add_option("track", track_path, "train track JSON file")->required();
  thurston_cmd->add_option("first", c1_path, "first cocycle JSON file")->required();
  thurston_cmd->add_option("second", c2_path, "second cocycle JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    Approx::set_tolerance(opt.tol);
    if (torsion_cmd->parsed())
      return dispatch_field(opt.field, [&](auto tag) {
        return run_torsion<decltype(tag)>(opt, complex_path, homology_path);
      });
    if (verify_cmd->parsed()) {
      if (opt.suite != "invariance" && opt.suite != "main-theorem" && opt.suite != "symplectic" &&
          opt.suite != "all")
        throw ParseError("unknown suite '" + opt.suite + "'");
      bool need_rep = opt.suite != "symplectic";
      if (need_rep && rep_path.empty()) throw ParseError("suite needs a representation file");
      return dispatch_field(opt.field,
                            [&](auto tag) { return run_verify<decltype(tag)>(opt, rep_path); });
    }
    if (thurston_cmd->parsed())
      return dispatch_field(opt.field, [&](auto tag) {
        return run_thurston<decltype(tag)>(opt, track_path, c1_path, c2_path);
      });
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ComplexError& e) {
    std::cerr << "invalid complex (degree " << e.degree() << "): " << e.what() << "\n";
    return kExitComplex;
  } catch (const RelatorError& e) {
    std::cerr << "relator violation: " << e.what() << "\n";
    return kExitRelator;
  } catch (const ReducibleError& e) {
    std::cerr << "reducible representation: " << e.what() << "\n";
    return kExitReducible;
  } catch (const SwitchConditionError& e) {
    std::cerr << "switch condition violation: " << e.what() << "\n";
    return kExitSwitch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

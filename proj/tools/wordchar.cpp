// Batch front end: exact expected-character computations, oracle
// cross-checks, and the spectral experiments, with text/JSON/CSV output.
#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wordchar/projection.hpp"
#include "wordchar/regress.hpp"
#include "wordchar/report.hpp"
#include "wordchar/weingarten.hpp"

namespace wc = wordchar;

namespace {

long env_budget() {
  if (const char* s = std::getenv("WORDCHAR_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v > 0) return v;
    throw std::invalid_argument("WORDCHAR_BUDGET must be a positive integer");
  }
  return wc::kDefaultEnumerationBudget;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

struct CommonFlags {
  std::string word;
  std::string lambda = "1";
  bool json = false;
  int threads = 1;
  long budget = 0;  // 0: use env/default
  std::string output;

  wc::EngineOptions engine() const {
    wc::EngineOptions o;
    o.threads = threads;
    o.partition_budget = budget > 0 ? budget : env_budget();
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& fl, bool with_lambda = true) {
  cmd->add_option("--word", fl.word, "word in letters a..z (A..Z for inverses)")->required();
  if (with_lambda)
    cmd->add_option("--lambda", fl.lambda, "diagram parts, e.g. \"2,1\"");
  cmd->add_flag("--json", fl.json, "emit JSON instead of text");
  cmd->add_option("--threads", fl.threads, "worker threads for the enumeration")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget", fl.budget, "enumeration budget override")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output", fl.output, "write the report to a file");
}

int cmd_expected_char(const CommonFlags& fl, const std::vector<long>& evals, int rank) {
  auto lambda = wc::YoungDiagram::parse(fl.lambda);
  auto letters = wc::parse_word(fl.word);
  if (rank > 0)
    for (const auto& l : letters)
      if (l.generator >= rank)
        throw std::invalid_argument("word uses a generator beyond --rank");
  auto r = wc::expected_character(letters, lambda, fl.engine());
  wc::Json evals_json = wc::Json::array();
  std::ostringstream text;
  text << "word: " << fl.word << "  (class " << wc::to_string(r.word_class)
       << ", core " << (r.word.length() ? r.word.to_string() : "e")
       << ", lambda " << lambda.to_string() << ")\n";
  text << "E = " << r.value.to_string("n") << "\n";
  if (!r.value.is_zero()) text << "degree gap: " << r.value.degree_gap() << "\n";
  for (long n : evals) {
    wc::Rat v = r.value.evaluate(wc::Rat(n));
    evals_json.push_back({{"n", n}, {"value", wc::rat_to_string(v)}});
    text << "E(" << n << ") = " << wc::rat_to_string(v) << "\n";
  }
  if (fl.json) {
    wc::Json j{{"word", fl.word},
               {"k", lambda.size()},
               {"lambda", lambda.to_string()},
               {"rational", wc::to_json(r.value)},
               {"evals", evals_json},
               {"degree_gap", r.value.is_zero() ? wc::Json(nullptr) : wc::Json(r.value.degree_gap())},
               {"enumeration_stats", wc::to_json(r.stats)}};
    write_output(wc::dump_report(j), fl.output);
  } else {
    write_output(text.str(), fl.output);
  }
  return 0;
}

int cmd_poly_form(const CommonFlags& fl, int q) {
  auto lambda = wc::YoungDiagram::parse(fl.lambda);
  auto pf = wc::polynomial_form(wc::parse_word(fl.word), lambda, q, fl.engine());
  if (fl.json) {
    wc::Json j{{"word", fl.word},
               {"lambda", lambda.to_string()},
               {"q", q},
               {"p", wc::to_json(pf.p)},
               {"gate", wc::to_json(pf.gate)},
               {"degree", pf.p.degree()},
               {"degree_bound", pf.degree_bound}};
    write_output(wc::dump_report(j), fl.output);
  } else {
    std::ostringstream text;
    text << "P(x)    = " << pf.p.to_string("x") << "\n";
    text << "gate(x) = " << pf.gate.to_string("x") << "\n";
    text << "deg(P) = " << pf.p.degree() << " <= " << pf.degree_bound << "\n";
    write_output(text.str(), fl.output);
  }
  return 0;
}

int cmd_phi(const CommonFlags& fl, int K) {
  auto r = wc::phi_w(wc::parse_word(fl.word), K, fl.engine());
  if (fl.json) {
    wc::Json taylor = wc::Json::array();
    for (const auto& c : r.taylor) taylor.push_back(wc::rat_to_string(c));
    wc::Json j{{"word", fl.word},
               {"K", K},
               {"word_class", wc::to_string(r.word_class)},
               {"phi", wc::to_json(r.phi)},
               {"taylor", taylor},
               {"required_vanishing", r.required_vanishing}};
    write_output(wc::dump_report(j), fl.output);
  } else {
    std::ostringstream text;
    text << "phi(x) = " << r.phi.to_string("x") << "\n";
    text << "maclaurin:";
    for (const auto& c : r.taylor) text << " " << wc::rat_to_string(c);
    text << "\nrequired vanishing: first " << r.required_vanishing << "\n";
    write_output(text.str(), fl.output);
  }
  return 0;
}

int cmd_mc(const CommonFlags& fl, int n, long samples, uint64_t seed) {
  auto lambda = wc::YoungDiagram::parse(fl.lambda);
  auto analysis = wc::preprocess_word(wc::parse_word(fl.word));
  auto r = wc::mc_expected_character(analysis.word, lambda, n, samples, seed);
  if (fl.json) {
    wc::Json j = wc::to_json(r);
    j["word"] = fl.word;
    j["lambda"] = lambda.to_string();
    j["n"] = n;
    write_output(wc::dump_report(j), fl.output);
  } else {
    std::ostringstream text;
    text << "mean = " << wc::format_double(r.mean)
         << "  stderr = " << wc::format_double(r.stderr_) << "  (" << r.samples
         << " samples, seed " << r.seed << ")\n";
    write_output(text.str(), fl.output);
  }
  return 0;
}

int cmd_exhaustive(const CommonFlags& fl, int n) {
  auto lambda = wc::YoungDiagram::parse(fl.lambda);
  auto analysis = wc::preprocess_word(wc::parse_word(fl.word));
  wc::Rat v = wc::exhaustive_expected_character(analysis.word, lambda, n);
  if (fl.json) {
    wc::Json j{{"word", fl.word}, {"lambda", lambda.to_string()}, {"n", n},
               {"value", wc::rat_to_string(v)}};
    write_output(wc::dump_report(j), fl.output);
  } else {
    write_output("E = " + wc::rat_to_string(v) + "\n", fl.output);
  }
  return 0;
}

int cmd_weingarten(int m, const std::string& sigma_text, const std::string& tau_text,
                   bool json, const std::string& output) {
  auto sigma = wc::SetPartition::parse(sigma_text);
  auto tau = wc::SetPartition::parse(tau_text);
  if (sigma.size() != m || tau.size() != m)
    throw std::invalid_argument("weingarten: partitions must have size m");
  auto wg = wc::weingarten(sigma, tau, env_budget());
  if (json) {
    wc::Json j{{"m", m},
               {"sigma", sigma.to_string()},
               {"tau", tau.to_string()},
               {"weingarten", wc::to_json(wg)}};
    write_output(wc::dump_report(j), output);
  } else {
    write_output("Wg = " + wg.to_string("n") + "\n", output);
  }
  return 0;
}

int cmd_projection_check(const std::string& lambda_text, int n, bool json,
                         const std::string& output) {
  auto lambda = wc::YoungDiagram::parse(lambda_text);
  wc::RatMatrix q = wc::build_projection(lambda, n);
  bool idempotent = q * q == q;
  bool symmetric = q.symmetric();
  bool trace_ok =
      q.trace() == wc::Rat(wc::dim(lambda)) * wc::dim_stable(lambda).evaluate(wc::Rat(n));
  bool bitrace_ok = true;
  for (uint64_t t = 0; t < 10; ++t) {
    wc::Permutation g = wc::random_permutation(n, 99, t);
    bitrace_ok = bitrace_ok &&
                 wc::bitrace_character(lambda, g, n) ==
                     wc::Rat(wc::character(lambda.with_long_first_row(n), wc::cycle_type(g)));
  }
  bool xi_ok = wc::xi_projector_check(lambda, n);
  bool all = idempotent && symmetric && trace_ok && bitrace_ok && xi_ok;
  if (json) {
    wc::Json j{{"lambda", lambda.to_string()}, {"n", n},
               {"idempotent", idempotent},     {"symmetric", symmetric},
               {"trace", trace_ok},            {"bitrace", bitrace_ok},
               {"xi_isotypic", xi_ok},         {"pass", all}};
    write_output(wc::dump_report(j), output);
  } else {
    std::ostringstream text;
    text << "idempotent: " << (idempotent ? "ok" : "FAIL") << "\n"
         << "symmetric:  " << (symmetric ? "ok" : "FAIL") << "\n"
         << "trace:      " << (trace_ok ? "ok" : "FAIL") << "\n"
         << "bitrace:    " << (bitrace_ok ? "ok" : "FAIL") << "\n"
         << "xi:         " << (xi_ok ? "ok" : "FAIL") << "\n";
    write_output(text.str(), output);
  }
  return all ? 0 : 1;
}

int cmd_spectral(int n, int k, int r, const std::string& seeds_text, double tol,
                 int max_iters, const std::string& csv_path, bool json,
                 const std::string& output) {
  std::vector<uint64_t> seeds;
  {
    std::stringstream ss(seeds_text);
    std::string item;
    while (std::getline(ss, item, ',')) seeds.push_back(std::stoull(item));
    if (seeds.empty()) throw std::invalid_argument("spectral-gap: no seeds given");
  }
  const double bound = 2.0 * std::sqrt(2.0 * r - 1.0);
  std::ostringstream csv, text;
  csv << "seed,n,k,r,lambda_nontrivial,bound,iterations,connected\n";
  wc::Json rows = wc::Json::array();
  for (uint64_t seed : seeds) {
    std::vector<wc::Permutation> gens;
    for (int g = 0; g < r; ++g)
      gens.push_back(wc::random_permutation(n, seed, static_cast<uint64_t>(g)));
    wc::SchreierOperator op(n, k, gens);
    if (!op.connected()) {
      csv << seed << "," << n << "," << k << "," << r << ",,"
          << wc::format_double(bound) << ",0,false\n";
      text << "seed " << seed << ": disconnected (" << op.component_count()
           << " components)\n";
      rows.push_back({{"seed", seed}, {"connected", false}});
      continue;
    }
    wc::SpectralOptions so;
    so.seed = seed;
    so.tolerance = tol;
    so.max_iterations = max_iters;
    wc::SpectralReport rep = wc::spectral_gap(op, so);
    std::string lam = rep.lambda_nontrivial ? wc::format_double(*rep.lambda_nontrivial) : "";
    csv << seed << "," << n << "," << k << "," << r << "," << lam << ","
        << wc::format_double(bound) << "," << rep.iterations << ",true\n";
    text << "seed " << seed << ": lambda = " << (lam.empty() ? "none" : lam)
         << "  bound = " << wc::format_double(bound) << "  iters = " << rep.iterations
         << (rep.converged ? "" : "  NOT CONVERGED") << "\n";
    wc::Json row = wc::to_json(rep);
    row["n"] = n;
    row["k"] = k;
    row["r"] = r;
    row["bound"] = bound;
    rows.push_back(row);
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open CSV file: " + csv_path);
    out << csv.str();
  }
  if (json) write_output(wc::dump_report(wc::Json{{"runs", rows}}), output);
  else write_output(text.str(), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact expected stable characters of word-random permutations, "
               "sampling oracles, and Schreier-graph spectra"};
  app.require_subcommand(1);

  CommonFlags ec_flags;
  std::vector<long> ec_evals;
  int ec_rank = 0;
  auto* ec = app.add_subcommand("expected-char", "exact E[chi] as a rational function of n");
  add_common(ec, ec_flags);
  ec->add_option("--eval", ec_evals, "evaluate the result at these integers");
  ec->add_option("--rank", ec_rank, "ambient free-group rank (validates the letters)");

  CommonFlags pf_flags;
  int pf_q = 0;
  auto* pf = app.add_subcommand("poly-form", "gate form E = P(1/n)/gate(1/n)");
  add_common(pf, pf_flags);
  pf->add_option("--q", pf_q, "gate order, at least the word length")->required();

  CommonFlags phi_flags;
  int phi_K = 1;
  auto* ph = app.add_subcommand("phi", "x^K-scaled block-sum trace function");
  add_common(ph, phi_flags, /*with_lambda=*/false);
  ph->add_option("--K", phi_K, "number of boxes")->required();

  CommonFlags mc_flags;
  int mc_n = 0;
  long mc_samples = 100000;
  uint64_t mc_seed = 0;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of E[chi]");
  add_common(mc, mc_flags);
  mc->add_option("--n", mc_n, "symmetric group degree")->required();
  mc->add_option("--samples", mc_samples, "sample count");
  mc->add_option("--seed", mc_seed, "stream seed")->required();

  CommonFlags ex_flags;
  int ex_n = 0;
  auto* ex = app.add_subcommand("exhaustive", "exact tiny-n average over all tuples");
  add_common(ex, ex_flags);
  ex->add_option("--n", ex_n, "symmetric group degree")->required();

  int wg_m = 0;
  std::string wg_sigma, wg_tau, wg_output;
  bool wg_json = false;
  auto* wg = app.add_subcommand("weingarten", "exact Weingarten kernel value");
  wg->add_option("--m", wg_m, "index count")->required();
  wg->add_option("--sigma", wg_sigma, "partition, e.g. \"{{1,2},{3}}\"")->required();
  wg->add_option("--tau", wg_tau, "partition")->required();
  wg->add_flag("--json", wg_json);
  wg->add_option("--output", wg_output);

  std::string pc_lambda = "1", pc_output;
  int pc_n = 0;
  bool pc_json = false;
  auto* pc = app.add_subcommand("projection-check", "dense projection identities");
  pc->add_option("--lambda", pc_lambda);
  pc->add_option("--n", pc_n)->required();
  pc->add_flag("--json", pc_json);
  pc->add_option("--output", pc_output);

  int sg_n = 0, sg_k = 1, sg_r = 2, sg_max_iters = 500;
  double sg_tol = 1e-8;
  std::string sg_seeds, sg_csv, sg_output;
  bool sg_json = false;
  auto* sg = app.add_subcommand("spectral-gap", "random Schreier graph spectra");
  sg->add_option("--n", sg_n)->required();
  sg->add_option("--k", sg_k)->required();
  sg->add_option("--r", sg_r)->required();
  sg->add_option("--seeds", sg_seeds, "comma separated seeds")->required();
  sg->add_option("--tol", sg_tol, "residual tolerance (times 2r)");
  sg->add_option("--max-iters", sg_max_iters);
  sg->add_option("--csv", sg_csv, "write CSV here");
  sg->add_flag("--json", sg_json);
  sg->add_option("--output", sg_output);

  auto* rg = app.add_subcommand("regress", "run the golden acceptance suite");
  std::vector<int> rg_select;
  rg->add_option("--criterion", rg_select, "criteria to run (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage mistakes exit 2
  }

  try {
    if (ec->parsed()) return cmd_expected_char(ec_flags, ec_evals, ec_rank);
    if (pf->parsed()) return cmd_poly_form(pf_flags, pf_q);
    if (ph->parsed()) return cmd_phi(phi_flags, phi_K);
    if (mc->parsed()) return cmd_mc(mc_flags, mc_n, mc_samples, mc_seed);
    if (ex->parsed()) return cmd_exhaustive(ex_flags, ex_n);
    if (wg->parsed()) return cmd_weingarten(wg_m, wg_sigma, wg_tau, wg_json, wg_output);
    if (pc->parsed()) return cmd_projection_check(pc_lambda, pc_n, pc_json, pc_output);
    if (sg->parsed())
      return cmd_spectral(sg_n, sg_k, sg_r, sg_seeds, sg_tol, sg_max_iters, sg_csv,
                          sg_json, sg_output);
    if (rg->parsed()) {
      auto results = wordchar::run_acceptance(
          rg_select, [](const std::string& line) { std::cout << line << "\n"; });
      for (const auto& r : results)
        if (!r.passed) return 1;
      return 0;
    }
  } catch (const wc::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 1;
  } catch (const wc::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

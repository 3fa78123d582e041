// Command-line front end: parses matrix/word files, dispatches to the
// library modules, writes JSON verdict reports and CSV statistics.
//
// Exit codes are a function of the verdict only: 0 for the passing
// verdicts (Dense / Consistent / AllUnipotent / Triangularized / pass),
// 1 for failing ones (NotDense / Inconclusive / WitnessFound / Refuted /
// Stuck / fail), 2 for input errors.

#include "CLI11.hpp"
#include "json.hpp"

#include "autrep/compactdyn.hpp"
#include "autrep/cosets.hpp"
#include "autrep/density.hpp"
#include "autrep/examples.hpp"
#include "autrep/matrix_io.hpp"
#include "autrep/puscan.hpp"
#include "autrep/rep_tuple.hpp"
#include "autrep/version.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <atomic>
#include <sstream>
#include <thread>

namespace {

using autrep::Rational;
using nlohmann::json;

int exit_code_for(const std::string& verdict) {
  static const std::map<std::string, int> table = {
      {"Dense", 0},          {"NotDense", 1},  {"Inconclusive", 1},
      {"AllUnipotent", 0},   {"WitnessFound", 1},
      {"Triangularized", 0}, {"Witness", 1},   {"Stuck", 1},
      {"Consistent", 0},     {"Refuted", 1},
      {"pass", 0},           {"fail", 1},
  };
  auto it = table.find(verdict);
  if (it == table.end()) throw std::logic_error("unmapped verdict " + verdict);
  return it->second;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp + "'");
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

json report_skeleton(const std::string& command) {
  json doc;
  doc["tool"] = "autrep";
  doc["version"] = autrep::kVersion;
  doc["command"] = command;
  return doc;
}

/// Finish a verdict-bearing report: stamp the verdict and exit code,
/// write/print, return the code.
int emit(json doc, const std::string& verdict, const std::string& out_path) {
  doc["verdict"] = verdict;
  int code = exit_code_for(verdict);
  doc["exit_code"] = code;
  std::string text = doc.dump(2);
  if (!out_path.empty()) atomic_write(out_path, text + "\n");
  std::cout << text << "\n";
  return code;
}

template <class R>
json matrix_json(const autrep::Mat<R>& m) {
  json doc;
  doc["ring"] = autrep::Ring<R>::name;
  doc["dim"] = m.dim();
  json rows = json::array();
  for (const auto& row : autrep::entries_as_strings(m)) rows.push_back(row);
  doc["entries"] = rows;
  return doc;
}

// ---- density ----

int run_density(const std::string& input, int word_budget, bool redundancy,
                const std::string& out_path) {
  autrep::AnyTuple tuple = autrep::parse_tuple_json(read_file(input));
  json doc = report_skeleton("density");
  doc["inputs"] = {{"file", input}, {"word_budget", word_budget},
                   {"redundancy", redundancy}, {"rank", tuple.rank}, {"dim", tuple.dim}};

  auto run = [&](const auto& mats) -> int {
    using MatT = typename std::decay_t<decltype(mats)>::value_type;
    using F = std::decay_t<decltype(mats[0].at(0, 0))>;
    static_assert(std::is_same_v<MatT, autrep::Mat<F>>);
    if (!redundancy) {
      autrep::DensityCertificate cert =
          autrep::certify_zariski_density<F>(mats, word_budget);
      doc["achieved_dim"] = cert.achieved_dim;
      doc["full_dim"] = cert.full_dim;
      json words = json::array();
      for (const auto& w : cert.spanning_words) words.push_back(autrep::format_word(w));
      doc["spanning_words"] = words;
      if (cert.witness) doc["witness"] = autrep::format_word(*cert.witness);
      if (cert.verdict == autrep::DensityVerdict::NotDense)
        doc["stable_algebra_dim"] = cert.stable_algebra_dim;
      doc["budget_exhausted"] = cert.budget_exhausted;
      return emit(std::move(doc), autrep::to_string(cert.verdict), out_path);
    }
    autrep::RepTuple<F> t{std::vector<autrep::Mat<F>>(mats)};
    auto found = autrep::redundancy_scan(t, word_budget);
    json subsets = json::array();
    for (const auto& r : found) {
      json entry;
      entry["indices"] = r.indices;
      entry["achieved_dim"] = r.certificate.achieved_dim;
      if (r.certificate.witness)
        entry["witness"] = autrep::format_word(*r.certificate.witness);
      subsets.push_back(entry);
    }
    doc["redundant_subsets"] = subsets;
    return emit(std::move(doc), found.empty() ? "NotDense" : "Dense", out_path);
  };

  if (std::holds_alternative<std::vector<autrep::RatMat>>(tuple.mats))
    return run(std::get<std::vector<autrep::RatMat>>(tuple.mats));
  if (std::holds_alternative<std::vector<autrep::GaussMat>>(tuple.mats))
    return run(std::get<std::vector<autrep::GaussMat>>(tuple.mats));
  throw std::invalid_argument("density requires a field ring (rational or gaussian)");
}

// ---- puscan ----

int run_puscan(const std::string& input, int max_len, std::size_t budget, int retries,
               std::uint64_t seed, const std::string& out_path) {
  autrep::AnyTuple tuple = autrep::parse_tuple_json(read_file(input));
  json doc = report_skeleton("puscan");
  doc["inputs"] = {{"file", input}, {"max_len", max_len}, {"budget", budget},
                   {"nielsen_retries", retries}, {"seed", seed},
                   {"rank", tuple.rank}, {"dim", tuple.dim}};

  auto run = [&](const auto& mats) -> int {
    using F = std::decay_t<decltype(mats[0].at(0, 0))>;
    autrep::RepTuple<F> t{std::vector<autrep::Mat<F>>(mats)};
    autrep::ScanReport<F> r = autrep::scan_primitives(t, max_len, budget, retries, seed);
    doc["tested"] = r.tested;
    doc["truncated"] = r.truncated;
    if (r.witness) {
      doc["witness"] = autrep::format_word(*r.witness);
      doc["witness_char_poly"] = r.witness_char_poly.str();
      doc["via_nielsen_retry"] = r.via_nielsen_retry;
      return emit(std::move(doc), "WitnessFound", out_path);
    }
    return emit(std::move(doc), "AllUnipotent", out_path);
  };

  if (std::holds_alternative<std::vector<autrep::RatMat>>(tuple.mats))
    return run(std::get<std::vector<autrep::RatMat>>(tuple.mats));
  if (std::holds_alternative<std::vector<autrep::GaussMat>>(tuple.mats))
    return run(std::get<std::vector<autrep::GaussMat>>(tuple.mats));
  return run(std::get<std::vector<autrep::LaurentMat>>(tuple.mats));
}

// ---- kolchin ----

int run_kolchin(const std::string& input, int witness_len, const std::string& out_path) {
  autrep::AnyTuple tuple = autrep::parse_tuple_json(read_file(input));
  json doc = report_skeleton("kolchin");
  doc["inputs"] = {{"file", input}, {"witness_len", witness_len},
                   {"rank", tuple.rank}, {"dim", tuple.dim}};

  auto run = [&](const auto& mats) -> int {
    using F = std::decay_t<decltype(mats[0].at(0, 0))>;
    autrep::RepTuple<F> t{std::vector<autrep::Mat<F>>(mats)};
    autrep::KolchinResult<F> r = autrep::kolchin_triangularize(t, witness_len);
    switch (r.status) {
      case autrep::KolchinResult<F>::Status::Triangularized:
        doc["basis_change"] = matrix_json(r.flag->basis_change);
        doc["signature"] = r.flag->signature;
        return emit(std::move(doc), "Triangularized", out_path);
      case autrep::KolchinResult<F>::Status::Witness:
        doc["witness"] = autrep::format_word(*r.witness);
        doc["failure_stage"] = r.failure_stage;
        return emit(std::move(doc), "Witness", out_path);
      default:
        doc["failure_stage"] = r.failure_stage;
        return emit(std::move(doc), "Stuck", out_path);
    }
  };

  if (std::holds_alternative<std::vector<autrep::RatMat>>(tuple.mats))
    return run(std::get<std::vector<autrep::RatMat>>(tuple.mats));
  if (std::holds_alternative<std::vector<autrep::GaussMat>>(tuple.mats))
    return run(std::get<std::vector<autrep::GaussMat>>(tuple.mats));
  throw std::invalid_argument("kolchin requires a field ring (rational or gaussian)");
}

// ---- coset ----

std::vector<Rational> parse_sample_list(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(autrep::parse_rational(tok));
  }
  return out;
}

int run_coset(const std::string& input, const std::string& samples_csv, int word_budget,
              const std::string& level_name, const std::string& out_path) {
  json in = json::parse(read_file(input));
  if (!in.contains("x")) throw std::invalid_argument("coset file needs field 'x'");
  autrep::AnyMatrix xm = autrep::parse_matrix_json(in["x"].dump());
  if (!std::holds_alternative<autrep::RatMat>(xm) &&
      !std::holds_alternative<autrep::GaussMat>(xm))
    throw std::invalid_argument("coset checks need a field ring");

  autrep::ConjugacyLevel level = autrep::ConjugacyLevel::InvariantFactors;
  if (level_name == "char-squarefree")
    level = autrep::ConjugacyLevel::CharPolySquarefree;
  else if (level_name == "char-only")
    level = autrep::ConjugacyLevel::CharPolyOnly;
  else if (level_name != "invariant-factors")
    throw std::invalid_argument("unknown conjugacy level '" + level_name + "'");

  json doc = report_skeleton("coset");
  doc["inputs"] = {{"file", input}, {"samples", samples_csv},
                   {"word_budget", word_budget}, {"level", autrep::to_string(level)}};

  auto run = [&](const auto& x) -> int {
    using F = std::decay_t<decltype(x.at(0, 0))>;
    autrep::CosetInstance<F> inst;
    inst.x = x;
    std::vector<autrep::Mat<F>> sample_mats;
    std::vector<Rational> ts;
    if (in.contains("exponents")) {
      for (const auto& e : in["exponents"]) inst.exponents.push_back(e.get<long long>());
      ts = parse_sample_list(samples_csv);
      if (ts.empty()) ts = {Rational(2), Rational(3), Rational(5), Rational(-1)};
    } else if (in.contains("h_gens")) {
      for (const auto& gj : in["h_gens"]) {
        autrep::AnyMatrix gm = autrep::parse_matrix_json(gj.dump());
        if (!std::holds_alternative<autrep::Mat<F>>(gm))
          throw std::invalid_argument("h_gens ring differs from x ring");
        inst.h_gens.push_back(std::get<autrep::Mat<F>>(gm));
      }
      // sampled H elements: words in the generators up to the budget
      autrep::RepTuple<F> ht{std::vector<autrep::Mat<F>>(inst.h_gens)};
      autrep::TupleEvaluator<F> eval(ht);
      std::vector<autrep::ReducedWord> queue;
      autrep::ReducedWord e;
      e.rank = static_cast<int>(inst.h_gens.size());
      queue.push_back(e);
      const std::vector<int> letters =
          autrep::signed_letters(static_cast<int>(inst.h_gens.size()));
      for (std::size_t head = 0; head < queue.size() && sample_mats.size() < 500; ++head) {
        autrep::ReducedWord w = queue[head];
        if (!w.is_identity()) sample_mats.push_back(eval(w));
        if (static_cast<int>(w.length()) >= word_budget) continue;
        for (int l : letters) {
          if (!w.letters.empty() && w.letters.back() == -l) continue;
          autrep::ReducedWord next = w;
          next.letters.push_back(l);
          queue.push_back(std::move(next));
        }
      }
    } else {
      throw std::invalid_argument("coset file needs 'exponents' or 'h_gens'");
    }
    inst.validate();

    // eigenvalue-1 audit alongside the sampled conjugacy checks
    if (!inst.h_gens.empty()) {
      auto audit = autrep::eigenvalue_one_audit<F>(inst.h_gens, word_budget);
      doc["eigenvalue_one_violation"] =
          audit.violation ? autrep::format_word(*audit.violation) : "";
      doc["eigenvalue_one_words_checked"] = audit.words_checked;
    }

    autrep::CosetVerdict v = autrep::coset_sample_check(inst, sample_mats, ts, level);
    doc["sampled"] = v.sampled;
    doc["level"] = autrep::to_string(v.level);
    if (v.status == autrep::CosetVerdict::Status::Refuted) {
      doc["witness_index"] = v.witness_index;
      if (v.witness_t) doc["witness_t"] = autrep::format_rational(*v.witness_t);
      doc["reason"] = v.reason == autrep::CosetVerdict::Reason::EigenvalueOneFailure
                          ? "eigenvalue-1 failure"
                          : "conjugacy invariant mismatch";
      return emit(std::move(doc), "Refuted", out_path);
    }
    return emit(std::move(doc), "Consistent", out_path);
  };

  if (std::holds_alternative<autrep::RatMat>(xm))
    return run(std::get<autrep::RatMat>(xm));
  return run(std::get<autrep::GaussMat>(xm));
}

// ---- walk ----

int run_walk(int rank, std::size_t steps, std::uint64_t seed, std::size_t burn_in,
             const std::string& csv_path, const std::string& out_path) {
  std::vector<autrep::Quat> initial =
      autrep::haar_sample(static_cast<std::size_t>(rank), seed);
  autrep::WalkReport r = autrep::nielsen_walk(initial, steps, seed + 1, burn_in);

  if (!csv_path.empty()) {
    std::ostringstream csv;
    csv << "step";
    for (int k = 1; k <= rank; ++k) csv << ",trace" << k;
    csv << "\n";
    char buf[64];
    for (std::size_t s = 0; s < r.coordinate_traces.size(); ++s) {
      csv << s;
      for (double t : r.coordinate_traces[s]) {
        std::snprintf(buf, sizeof buf, "%.17g", t);
        csv << "," << buf;
      }
      csv << "\n";
    }
    atomic_write(csv_path, csv.str());
  }

  json doc = report_skeleton("walk");
  doc["inputs"] = {{"rank", rank}, {"steps", steps}, {"seed", seed},
                   {"burn_in", burn_in}, {"csv", csv_path}};
  doc["ks_distance"] = r.ks_distance;
  doc["samples_after_burn_in"] = r.trace_samples.size() - r.burn_in;
  return emit(std::move(doc), "pass", out_path);
}

// ---- probes ----

int run_probe_pair(int word_len, double epsilon, std::uint64_t seed, double min_coverage,
                   const std::string& out_path) {
  auto pair = autrep::haar_sample(2, seed);
  autrep::PairDensityReport r =
      autrep::pair_density_probe(pair[0], pair[1], word_len, epsilon);
  json doc = report_skeleton("probe pair-density");
  doc["inputs"] = {{"word_len", word_len}, {"epsilon", epsilon}, {"seed", seed},
                   {"min_coverage", min_coverage}};
  doc["coverage"] = r.coverage;
  doc["net_size"] = r.net_size;
  doc["words_tried"] = r.words_tried;
  return emit(std::move(doc), r.coverage >= min_coverage ? "pass" : "fail", out_path);
}

/// AUTREP_THREADS sets the worker count for embarrassingly parallel
/// subcommands (default: hardware concurrency).
unsigned default_thread_count() {
  if (const char* env = std::getenv("AUTREP_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

int run_probe_minimality(double epsilon, std::size_t budget, std::uint64_t seed,
                         int trials, const std::string& out_path) {
  // trials are independent and pure; run them in parallel and merge the
  // results in seed order
  std::vector<autrep::MinimalityResult> results(static_cast<std::size_t>(trials));
  unsigned workers = std::min<unsigned>(default_thread_count(),
                                        static_cast<unsigned>(trials));
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int k = next.fetch_add(1); k < trials; k = next.fetch_add(1)) {
        auto start = autrep::haar_sample(3, seed + 2 * static_cast<std::uint64_t>(k));
        auto target =
            autrep::haar_sample(3, seed + 2 * static_cast<std::uint64_t>(k) + 1);
        results[static_cast<std::size_t>(k)] =
            autrep::minimality_probe(start, target, epsilon, budget);
      }
    });
  }
  for (std::thread& t : pool) t.join();

  int hits = 0;
  json all = json::array();
  for (const autrep::MinimalityResult& r : results) {
    if (r.distance <= epsilon) ++hits;
    json trial;
    trial["distance"] = r.distance;
    trial["moves"] = r.moves.size();
    all.push_back(trial);
  }
  json doc = report_skeleton("probe minimality");
  doc["inputs"] = {{"epsilon", epsilon}, {"budget", budget}, {"seed", seed},
                   {"trials", trials}};
  doc["hits"] = hits;
  doc["trials"] = all;
  return emit(std::move(doc), hits == trials ? "pass" : "fail", out_path);
}

// ---- worked examples / torsion audit ----

int run_examples_verify(int max_len, std::size_t budget, const std::string& out_path) {
  auto checks = autrep::verify_worked_examples(max_len, budget);
  json doc = report_skeleton("examples verify-all");
  doc["inputs"] = {{"max_len", max_len}, {"budget", budget}};
  bool all = true;
  json arr = json::array();
  for (const auto& c : checks) {
    json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    arr.push_back(entry);
    all = all && c.pass;
  }
  doc["checks"] = arr;
  return emit(std::move(doc), all ? "pass" : "fail", out_path);
}

int run_burnside(int max_len, std::size_t budget, const std::string& out_path) {
  autrep::TorsionAuditReport r = autrep::affine_primitive_audit(max_len, budget);
  json doc = report_skeleton("burnside");
  doc["inputs"] = {{"max_len", max_len}, {"budget", budget}};
  doc["primitives_checked"] = r.primitives_checked;
  doc["truncated"] = r.truncated;
  json hist = json::object();
  for (const auto& [order, count] : r.order_histogram)
    hist[std::to_string(order)] = count;
  doc["order_histogram"] = hist;
  json fails = json::array();
  for (const auto& w : r.failures) fails.push_back(autrep::format_word(w));
  doc["failures"] = fails;
  return emit(std::move(doc), r.ok() ? "pass" : "fail", out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nielsen dynamics and exact certification on representation tuples"};
  app.require_subcommand(1);

  std::string input, out_path, csv_path, samples_csv, level = "invariant-factors";
  int word_budget = 8, max_len = 6, witness_len = 3, rank = 3, retries = 0, trials = 1;
  int word_len = 12;
  std::size_t budget = 20000, steps = 10000, burn_in = 1000, move_budget = 5000;
  std::uint64_t seed = 0;
  double epsilon = 0.3, min_coverage = 0.0;
  bool redundancy = false;

  auto* density = app.add_subcommand("density", "Zariski density certificate for a tuple");
  density->add_option("--input", input)->required();
  density->add_option("--word-budget", word_budget)->check(CLI::PositiveNumber);
  density->add_flag("--redundancy", redundancy, "scan proper sub-tuples instead");
  density->add_option("--out", out_path);

  auto* puscan = app.add_subcommand("puscan", "primitive-unipotent scan of a tuple");
  puscan->add_option("--input", input)->required();
  puscan->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  puscan->add_option("--budget", budget)->check(CLI::PositiveNumber);
  puscan->add_option("--nielsen-retries", retries);
  puscan->add_option("--seed", seed);
  puscan->add_option("--out", out_path);

  auto* kolchin = app.add_subcommand("kolchin", "simultaneous unitriangularization");
  kolchin->add_option("--input", input)->required();
  kolchin->add_option("--witness-len", witness_len)->check(CLI::PositiveNumber);
  kolchin->add_option("--out", out_path);

  auto* coset = app.add_subcommand("coset", "coset-in-conjugacy-class sampled checks");
  coset->add_option("--input", input)->required();
  coset->add_option("--samples", samples_csv, "comma-separated rational t values");
  coset->add_option("--word-budget", word_budget)->check(CLI::PositiveNumber);
  coset->add_option("--level", level,
                    "invariant-factors | char-squarefree | char-only");
  coset->add_option("--out", out_path);

  auto* walk = app.add_subcommand("walk", "random Nielsen walk on SU(2)^n");
  walk->add_option("--rank", rank)->check(CLI::Range(3, 64));
  walk->add_option("--steps", steps);
  walk->add_option("--seed", seed)->required();
  walk->add_option("--burn-in", burn_in);
  walk->add_option("--csv", csv_path);
  walk->add_option("--out", out_path);

  auto* probe = app.add_subcommand("probe", "empirical density/minimality probes");
  probe->require_subcommand(1);
  auto* pairp = probe->add_subcommand("pair-density", "word coverage of an epsilon-net");
  pairp->add_option("--word-len", word_len)->check(CLI::PositiveNumber);
  pairp->add_option("--epsilon", epsilon)->check(CLI::PositiveNumber);
  pairp->add_option("--seed", seed)->required();
  pairp->add_option("--min-coverage", min_coverage);
  pairp->add_option("--out", out_path);
  auto* minp = probe->add_subcommand("minimality", "steer a tuple to a target");
  minp->add_option("--epsilon", epsilon)->check(CLI::PositiveNumber);
  minp->add_option("--budget", move_budget)->check(CLI::PositiveNumber);
  minp->add_option("--seed", seed)->required();
  minp->add_option("--trials", trials)->check(CLI::PositiveNumber);
  minp->add_option("--out", out_path);

  auto* examples = app.add_subcommand("examples", "worked example constructions");
  examples->require_subcommand(1);
  auto* verify = examples->add_subcommand("verify-all", "run every exact assertion");
  verify->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  verify->add_option("--budget", budget)->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path);

  auto* burnside = app.add_subcommand("burnside", "finite-order audit of the affine group");
  burnside->add_option("--max-len", max_len)->check(CLI::PositiveNumber);
  burnside->add_option("--budget", budget)->check(CLI::PositiveNumber);
  burnside->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (density->parsed()) return run_density(input, word_budget, redundancy, out_path);
    if (puscan->parsed())
      return run_puscan(input, max_len, budget, retries, seed, out_path);
    if (kolchin->parsed()) return run_kolchin(input, witness_len, out_path);
    if (coset->parsed())
      return run_coset(input, samples_csv, word_budget, level, out_path);
    if (walk->parsed())
      return run_walk(rank, steps, seed, burn_in, csv_path, out_path);
    if (probe->parsed()) {
      if (pairp->parsed())
        return run_probe_pair(word_len, epsilon, seed, min_coverage, out_path);
      return run_probe_minimality(epsilon, move_budget, seed, trials, out_path);
    }
    if (examples->parsed()) return run_examples_verify(max_len, budget, out_path);
    if (burnside->parsed()) return run_burnside(max_len, budget, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

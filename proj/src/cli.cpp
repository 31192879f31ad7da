#include "gadic/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gadic/config.hpp"
#include "gadic/errors.hpp"
#include "gadic/repcount.hpp"
#include "gadic/verifier.hpp"

namespace gadic {

namespace {

using Clock = std::chrono::steady_clock;

std::string format_values(const std::vector<std::uint64_t>& xs, std::size_t limit = 20) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  if (xs.size() > limit) out += ",... (" + std::to_string(xs.size()) + " total)";
  return out + "}";
}

/// First value on which the observed and expected gap lists disagree.
std::string first_gap_difference(const BasisReport& r) {
  std::size_t i = 0;
  while (i < r.gaps.size() && i < r.expected_gaps.size() && r.gaps[i] == r.expected_gaps[i]) ++i;
  if (i < r.gaps.size() && (i == r.expected_gaps.size() || r.gaps[i] < r.expected_gaps[i])) {
    return "n=" + std::to_string(r.gaps[i]) + " is missing from the sumset";
  }
  if (i < r.expected_gaps.size()) {
    return "n=" + std::to_string(r.expected_gaps[i]) + " is unexpectedly in the sumset";
  }
  return "";
}

void print_basis_report(std::ostream& out, std::string_view label, const BasisReport& r) {
  out << label << ": window=[0," << r.window << "] h=" << r.h
      << (r.zero_adjoined ? " set={0}uA" : " set=A") << " gaps=" << format_values(r.gaps)
      << " expected=" << format_values(r.expected_gaps) << ' ' << (r.pass ? "PASS" : "FAIL")
      << '\n';
  if (!r.pass) out << "  counterexample: " << first_gap_difference(r) << '\n';
}

void print_property_report(std::ostream& out, std::string_view label, const PropertyReport& r) {
  out << label << ": " << r.name << " cases=" << r.cases << ' ' << (r.pass ? "PASS" : "FAIL")
      << '\n';
  if (!r.pass) out << "  counterexample: " << r.counterexample << '\n';
}

std::string cert_row(const WitnessCertificate& c) {
  std::ostringstream os;
  os << "a=" << to_string(c.a_value) << " class=" << c.a_class << " M_0=" << c.m0 << " M={";
  for (std::size_t i = 0; i < c.m_choices.size(); ++i) {
    os << (i ? "," : "") << c.m_choices[i].first << '=' << c.m_choices[i].second;
  }
  os << "} n=" << to_string(c.n_value) << " expected=" << to_string(c.expected_count)
     << " measured=" << to_string(c.measured_count);
  if (c.bruteforce_count) os << " bruteforce=" << to_string(*c.bruteforce_count);
  os << " verdict=" << to_string(c.verdict);
  return os.str();
}

nlohmann::json batch_summary(const RunConfig& cfg, const MinimalityBatch& batch) {
  nlohmann::json j;
  const auto config = cfg.basis().to_string();
  std::ostringstream hash;
  hash << std::hex << config_hash(config);
  j["config"] = config;
  j["config_hash"] = hash.str();
  j["h"] = cfg.partition.h();
  j["t"] = cfg.t;
  j["members"] = cfg.budget;
  j["witnesses_per_member"] = cfg.witnesses;
  j["gate"] = {{"window", batch.gate.window}, {"pass", batch.gate.pass}};
  j["total"] = batch.certificates.size();
  j["certified"] = batch.certified;
  j["pass"] = batch.pass;
  j["engines"] = kEngineVersions;
  auto certs = nlohmann::json::array();
  for (const auto& c : batch.certificates) {
    certs.push_back({{"file", c.file_name()},
                     {"a", to_string(c.a_value)},
                     {"n", to_string(c.n_value)},
                     {"expected_count", to_string(c.expected_count)},
                     {"measured_count", to_string(c.measured_count)},
                     {"verdict", std::string(to_string(c.verdict))}});
  }
  j["certificates"] = certs;
  return j;
}

int cmd_represent(const RunConfig& cfg, const std::string& n_text, std::ostream& out) {
  auto n = parse_big(n_text);
  auto rep = cfg.seq.represent(n);
  out << rep.to_string() << " (M=" << (rep.empty() ? "undefined" : std::to_string(rep.max_index()))
      << ")\n";
  return kExitOk;
}

int cmd_check(const RunConfig& cfg, const std::string& which, std::ostream& out) {
  const auto basis = cfg.basis();
  if (which == "theorem1") {
    auto r = verify_theorem1(basis, cfg.window);
    print_basis_report(out, "theorem1", r);
    return r.pass ? kExitOk : kExitCheckFailed;
  }
  if (which == "theorem2") {
    auto r = verify_theorem2(basis, cfg.window);
    print_basis_report(out, "theorem2(a)", r.with_zero);
    print_basis_report(out, "theorem2(b)", r.without_zero);
    return r.pass ? kExitOk : kExitCheckFailed;
  }
  if (which == "lemma1") {
    auto r = run_leading_index_suite(cfg.seq, cfg.samples, cfg.seed);
    print_property_report(out, "lemma1", r);
    return r.pass ? kExitOk : kExitCheckFailed;
  }
  if (which == "lemma2") {
    auto r = run_prefix_inequality_suite(cfg.seq, cfg.samples, cfg.seed);
    print_property_report(out, "lemma2", r);
    return r.pass ? kExitOk : kExitCheckFailed;
  }
  // oracle: digit DP against brute force on every n in the window
  auto window = enumerate(basis, cfg.window);
  std::size_t cases = 0;
  for (std::uint64_t n = 0; n <= cfg.window; ++n) {
    for (bool zero : {false, true}) {
      ++cases;
      auto bf = count_reps_bruteforce(window, n, basis.h(), zero, 0).ordered_count;
      auto dp = count_reps_digitdp(basis, basis.seq.represent(to_big(n)), basis.h(), zero)
                    .ordered_count;
      if (bf != dp) {
        out << "oracle: FAIL\n  counterexample: n=" << n << " zero_allowed=" << zero
            << " bruteforce=" << to_string(bf) << " digitdp=" << to_string(dp) << '\n';
        return kExitCheckFailed;
      }
    }
  }
  out << "oracle: window=[0," << cfg.window << "] cases=" << cases << " PASS\n";
  return kExitOk;
}

int cmd_minimality(const RunConfig& cfg, bool override_threshold, std::size_t threads,
                   const std::string& out_dir, std::ostream& out) {
  const auto basis = cfg.basis();
  MinimalityOptions options;
  options.override_threshold = override_threshold;
  options.threads = threads;
  auto batch = verify_minimality(basis, cfg.t, cfg.budget, cfg.witnesses, options);

  out << "# config " << basis.to_string() << " t=" << cfg.t << " K=" << cfg.budget
      << " W=" << cfg.witnesses << '\n';
  print_basis_report(out, "gate", batch.gate);
  for (const auto& c : batch.certificates) out << cert_row(c) << '\n';
  out << "certified " << batch.certified << '/' << batch.certificates.size() << ' '
      << (batch.pass ? "PASS" : "FAIL") << '\n';

  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& c : batch.certificates) {
      std::ofstream f(std::filesystem::path(out_dir) / c.file_name());
      f << c.to_text();
    }
    std::ofstream summary(std::filesystem::path(out_dir) / "summary.json");
    summary << batch_summary(cfg, batch).dump(2) << '\n';
  }
  return batch.pass ? kExitOk : kExitCheckFailed;
}

int cmd_explore(const RunConfig& cfg, const std::string& mode, std::size_t elements,
                const std::vector<std::size_t>& ts, std::size_t threads, std::ostream& out) {
  const auto basis = cfg.basis();
  out << "# evidence only: finite windows do not certify asymptotic behaviour\n";
  if (mode == "removability") {
    auto scan = removability_scan(basis, cfg.window, elements);
    auto row = [&](const RemovalEvidence& ev, const std::string& label) {
      out << label << " misses=" << ev.misses << " last_miss="
          << (ev.last_miss ? std::to_string(*ev.last_miss) : "-")
          << " threshold=" << ev.threshold
          << " evidence=" << (ev.tail_covered ? "still-covers-window" : "misses-persist") << '\n';
    };
    out << "# set {0}uA, h=" << scan.h << ", window [0," << scan.window << "]\n";
    row(scan.baseline, "removed=none");
    for (const auto& ev : scan.rows) row(ev, "removed=" + std::to_string(ev.removed));
    return kExitOk;
  }
  if (mode == "sweep") {
    auto rows = sweep_t(basis, ts, cfg.budget, cfg.witnesses, threads);
    out << "t\tmin_t\tbelow_threshold\tfamilies\tstatus\tcertified\n";
    for (const auto& r : rows) {
      out << r.t << '\t' << r.min_t << '\t' << (r.below_threshold ? "yes" : "no") << '\t'
          << (r.families_infinite ? "infinite" : "empty") << '\t' << r.status << '\t'
          << r.certified << '/' << r.total << '\n';
    }
    return kExitOk;
  }
  // families
  out << detect_interval_families(cfg.partition, cfg.t).to_string();
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg, const std::string& list_path, const std::string& raw_path,
                  std::ostream& out) {
  auto window = enumerate(cfg.basis(), cfg.window);
  if (!list_path.empty()) {
    std::ofstream f(list_path);
    write_member_list(f, window);
  }
  if (!raw_path.empty()) {
    std::ofstream f(raw_path, std::ios::binary);
    window.bits.write_raw(f);
  }
  if (list_path.empty() && raw_path.empty()) write_member_list(out, window);
  out << "# members in [1," << cfg.window << "]: " << window.members.size() << '\n';
  return kExitOk;
}

int cmd_bench(const RunConfig& cfg, std::size_t bench_window, std::ostream& out) {
  const auto basis = cfg.basis();
  auto timed = [&](std::string_view name, auto&& body) {
    auto start = Clock::now();
    std::string detail = body();
    auto s = std::chrono::duration<double>(Clock::now() - start).count();
    out << "bench " << name << " seconds=" << s << ' ' << detail << '\n';
  };

  timed("represent-4096bit-x1000", [&] {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(cfg.seed));
    std::size_t digits = 0;
    for (int i = 0; i < 1000; ++i) digits += cfg.seq.represent(rng.get_z_bits(4096)).size();
    return "digits=" + std::to_string(digits);
  });
  MemberWindow window;
  timed("enumerate", [&] {
    window = enumerate(basis, bench_window);
    return "window=" + std::to_string(bench_window) +
           " members=" + std::to_string(window.members.size());
  });
  timed("hfold-sumset", [&] {
    auto sums = hfold_sumset_window(window.bits, basis.h());
    return "covered=" + std::to_string(sums.count());
  });
  timed("digitdp-large-witness", [&] {
    auto families = detect_interval_families(cfg.partition, cfg.t);
    auto cert = verify_witness(basis, construct_witness(basis, families, BigInt(1), 500));
    return "n_bits=" + std::to_string(mpz_sizeinbase(cert.n_value.get_mpz_t(), 2)) +
           " verdict=" + std::string(to_string(cert.verdict));
  });
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify G-adic minimal asymptotic bases", "gadic"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::string preset;
  std::optional<std::size_t> t, window, budget, witnesses, samples;
  std::optional<std::uint64_t> seed;
  bool override_threshold = false;
  std::size_t threads = 1;
  std::string out_dir;

  app.add_option("--config", config_path, "Config file (key = value lines)");
  app.add_option("--preset", preset, "Built-in configuration")
      ->check(CLI::IsMember(RunConfig::preset_names()));
  app.add_option("--t", t, "Interval length t");
  app.add_option("--window", window, "Window bound N");
  app.add_option("--budget", budget, "Members K for minimality batches");
  app.add_option("--witnesses", witnesses, "M-choices W per member");
  app.add_option("--samples", samples, "Property-suite sample count");
  app.add_option("--seed", seed, "RNG seed");
  app.add_flag("--override", override_threshold, "Allow t below the threshold");
  app.add_option("--threads", threads, "Worker threads for certificate batches");
  app.add_option("--out", out_dir, "Output directory for certificates");

  auto* represent = app.add_subcommand("represent", "Print the G-adic digits of n");
  std::string n_text;
  represent->add_option("--n", n_text, "Nonnegative integer")->required();

  auto* check = app.add_subcommand("check", "Run a window check or property suite");
  std::string which;
  check->add_option("which", which, "theorem1 | theorem2 | lemma1 | lemma2 | oracle")
      ->required()
      ->check(CLI::IsMember({"theorem1", "theorem2", "lemma1", "lemma2", "oracle"}));

  auto* minimality = app.add_subcommand("minimality", "Emit and verify witness certificates");

  auto* explore = app.add_subcommand("explore", "Window evidence for open questions");
  std::string mode = "removability";
  std::size_t elements = 32;
  std::vector<std::size_t> ts{1, 2, 3};
  explore->add_option("--mode", mode, "removability | sweep | families")
      ->check(CLI::IsMember({"removability", "sweep", "families"}));
  explore->add_option("--elements", elements, "Largest element tried for removal");
  explore->add_option("--ts", ts, "Interval lengths for the sweep")->delimiter(',');

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List members of A_G(W) in [1, N]");
  std::string list_path;
  std::string raw_path;
  enumerate_cmd->add_option("--list", list_path, "Write one member per line");
  enumerate_cmd->add_option("--raw", raw_path, "Write the raw little-endian bit array");

  auto* bench = app.add_subcommand("bench", "Time the core kernels");
  std::size_t bench_window = std::size_t{1} << 20;
  bench->add_option("--bench-window", bench_window, "Window for the sumset benchmark");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (!config_path.empty() && !preset.empty()) {
      throw ParseError("--config and --preset are mutually exclusive");
    }
    RunConfig cfg = !config_path.empty() ? RunConfig::load(config_path)
                    : !preset.empty()    ? RunConfig::preset(preset)
                                         : RunConfig{};
    if (t) cfg.t = *t;
    if (window) cfg.window = *window;
    if (budget) cfg.budget = *budget;
    if (witnesses) cfg.witnesses = *witnesses;
    if (samples) cfg.samples = *samples;
    if (seed) cfg.seed = *seed;

    if (*represent) return cmd_represent(cfg, n_text, out);
    if (*check) return cmd_check(cfg, which, out);
    if (*minimality) return cmd_minimality(cfg, override_threshold, threads, out_dir, out);
    if (*explore) return cmd_explore(cfg, mode, elements, ts, threads, out);
    if (*enumerate_cmd) return cmd_enumerate(cfg, list_path, raw_path, out);
    return cmd_bench(cfg, bench_window, out);
  } catch (const HypothesisError& e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const WindowError& e) {
    err << "window infeasible: " << e.what() << '\n';
    return kExitWindow;
  } catch (const std::invalid_argument& e) {  // ParseError, ValidationError
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace gadic

#include "pme/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pme/circuits.hpp"
#include "pme/errors.hpp"
#include "pme/families4.hpp"
#include "pme/io.hpp"
#include "pme/planar.hpp"
#include "pme/protocols.hpp"
#include "pme/state.hpp"

namespace pme {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<int> parse_site_list(const std::string& text) {
  std::vector<int> sites;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    try {
      size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      sites.push_back(value);
    } catch (const std::exception&) {
      throw std::invalid_argument("site list must be comma-separated integers, got '" +
                                  text + "'");
    }
  }
  if (sites.empty()) throw std::invalid_argument("site list is empty");
  return sites;
}

std::string bracket(const std::vector<int>& sites) {
  std::string out = "[";
  for (size_t i = 0; i < sites.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sites[i]);
  }
  out += ']';
  return out;
}

// Collects report lines so they can go to stdout and optionally to a file.
class ReportWriter {
 public:
  void line(const std::string& text) { body_ += text + "\n"; }
  void field(const std::string& key, const std::string& value) {
    line(key + " " + value);
  }
  void field(const std::string& key, int value) {
    field(key, std::to_string(value));
  }
  void field(const std::string& key, double value) {
    field(key, format_double(value));
  }
  void checks(const std::string& prefix, const VerificationReport& report) {
    for (const PartitionCheck& check : report.checks) {
      line(prefix + " " + check.where + " deviation " +
           format_double(check.deviation) + (check.pass ? " pass" : " fail"));
    }
  }
  void emit(std::ostream& out, const std::optional<std::string>& path,
            Clock::time_point start) {
    const std::string full =
        body_ + "wall_time_ms " + format_double(elapsed_ms(start)) + "\n";
    out << full;
    if (path) {
      std::ofstream os(*path);
      if (!os) throw std::runtime_error("cannot write " + *path);
      os << full;
    }
  }

 private:
  std::string body_;
};

struct ConstructOpts {
  int n = 0;
  int d = 2;
  double theta = 0.0;
  double phi = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::vector<std::string> unitary_files;
  std::string out_path;
};

// Unitaries for the entangling-circuit kinds: explicit files win, then a
// seed (one derived seed per gate), then identities.
std::vector<ComplexMatrix> chain_unitaries(const ConstructOpts& opts, int count) {
  std::vector<ComplexMatrix> us;
  if (!opts.unitary_files.empty()) {
    if (static_cast<int>(opts.unitary_files.size()) != count) {
      throw std::invalid_argument("expected " + std::to_string(count) +
                                  " unitary files, got " +
                                  std::to_string(opts.unitary_files.size()));
    }
    for (const std::string& path : opts.unitary_files) {
      us.push_back(load_matrix(path));
    }
    return us;
  }
  for (int k = 0; k < count; ++k) {
    us.push_back(opts.seed_given
                     ? random_unitary(opts.d, opts.seed + static_cast<std::uint64_t>(k))
                     : ComplexMatrix::Identity(opts.d, opts.d));
  }
  return us;
}

Eigen::Matrix2cd family_a_block(const ConstructOpts& opts) {
  if (!opts.unitary_files.empty()) {
    if (opts.unitary_files.size() != 1) {
      throw std::invalid_argument("family-a takes a single 2x2 unitary file");
    }
    const ComplexMatrix m = load_matrix(opts.unitary_files.front());
    if (m.rows() != 2 || m.cols() != 2) {
      throw std::invalid_argument("family-a unitary file must be 2x2");
    }
    return m;
  }
  if (opts.seed_given) return random_unitary(2, opts.seed);
  return Eigen::Matrix2cd::Identity();
}

int cmd_construct(const std::string& kind, const ConstructOpts& opts,
                  std::ostream& out) {
  PureState state = [&] {
    if (kind == "ghz") return ghz(opts.n, opts.d);
    if (kind == "bell-dimer") return dimerized_bell(opts.n, opts.d);
    if (kind == "family-a") return family_a(opts.theta, family_a_block(opts));
    if (kind == "family-b") {
      return family_b(opts.phi, opts.alpha, opts.beta, opts.gamma, opts.delta);
    }
    if (kind == "psi-zero") return psi_zero(opts.beta);
    if (kind == "circuit-psi") {
      return circuit_psi(opts.n, opts.d, chain_unitaries(opts, opts.n - 1));
    }
    if (kind == "circuit-xi") {
      return circuit_xi(opts.n, opts.d, chain_unitaries(opts, opts.n - 1));
    }
    throw std::invalid_argument("unknown construction kind " + kind);
  }();

  save_state(opts.out_path, state);
  Index nonzero = 0;
  for (Index i = 0; i < state.size(); ++i) {
    if (state.amp(i) != Complex{}) ++nonzero;
  }
  out << "kind " << kind << "\n";
  out << "sites " << state.sites() << "\n";
  out << "local_dim " << state.local_dim() << "\n";
  out << "norm " << format_double(state.norm()) << "\n";
  out << "nonzero " << nonzero << "\n";
  out << "wrote " << opts.out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& path, const std::string& mode, double tol,
               const std::optional<std::string>& report_path, std::ostream& out) {
  const auto start = Clock::now();
  const PureState state = load_state(path);
  const VerificationReport report =
      mode == "ame" ? verify_ame(state, tol) : verify_pme(state, tol);
  ReportWriter w;
  w.field("report", "verify");
  w.field("state", path);
  w.field("mode", mode);
  w.field("sites", state.sites());
  w.field("local_dim", state.local_dim());
  w.field("tolerance", tol);
  w.checks("check", report);
  w.field("overall", report.overall_pass ? "pass" : "fail");
  w.emit(out, report_path, start);
  return report.overall_pass ? 0 : 1;
}

int cmd_classify(const std::string& path, double tol, std::ostream& out) {
  const auto start = Clock::now();
  const PureState state = load_state(path);
  const FamilyClass result = classify_four_qubit(state, tol);
  ReportWriter w;
  w.field("report", "classify");
  w.field("state", path);
  w.field("tolerance", tol);
  w.field("class", to_string(result.tag));
  for (const auto& [name, value] : result.angles) {
    w.line("param " + name + " " + format_double(value));
  }
  if (result.block) {
    std::string entries;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        if (r || c) entries += ' ';
        entries += format_double((*result.block)(r, c).real()) + " " +
                   format_double((*result.block)(r, c).imag());
      }
    }
    w.field("block", entries);
  }
  w.emit(out, std::nullopt, start);
  return result.tag == FamilyTag::NotPme ? 1 : 0;
}

int cmd_teleport_setup(const std::string& path, const std::string& window_text,
                       double tol, const std::optional<std::string>& out_path,
                       std::ostream& out) {
  const auto start = Clock::now();
  const PureState state = load_state(path);
  const std::vector<int> window = parse_site_list(window_text);
  const Partition p =
      cyclic_window(state.sites(), window.front(), static_cast<int>(window.size()));
  if (p.window != window) {
    throw std::invalid_argument(
        "window must list a connected arc in ring order, e.g. 3,0 on 4 sites");
  }
  const TransferUnitary tu = extract_transfer_unitary(state, p, tol);
  const PureState moved = apply_local_unitary(state, p.complement, tu.u.adjoint());
  const double fid = fidelity(moved, canonical_max_entangled(p, state.local_dim()));
  if (out_path) save_state(*out_path, moved);

  const bool pass = fid >= 1.0 - tol;
  ReportWriter w;
  w.field("report", "teleport-setup");
  w.field("state", path);
  w.field("window", bracket(p.window));
  w.field("tolerance", tol);
  w.field("unitarity_deviation", unitarity_deviation(tu.u));
  w.field("fidelity_canonical", fid);
  if (out_path) w.field("wrote", *out_path);
  w.field("overall", pass ? "pass" : "fail");
  w.emit(out, std::nullopt, start);
  return pass ? 0 : 1;
}

int cmd_qss(const std::string& path, int distributor, const std::string& window_text,
            std::uint64_t secret_seed, const std::optional<std::string>& secret_file,
            double tol, std::ostream& out) {
  const auto start = Clock::now();
  const PureState resource = load_state(path);
  const int d = resource.local_dim();

  ComplexVector secret;
  std::string secret_source;
  if (secret_file) {
    secret = load_vector(*secret_file);
    secret_source = "file:" + *secret_file;
  } else {
    secret = random_state(1, d, secret_seed).amps();
    secret_source = "seed:" + std::to_string(secret_seed);
  }

  const std::vector<int> window = parse_site_list(window_text);
  const QssShares shares = qss_encode(resource, distributor, secret, tol);
  const QssRecovery recovery = qss_decode(shares, window, tol);
  const VerificationReport security = security_report(shares, tol);

  const PureState secret_state(1, d, secret);
  const PureState recovered_state(1, d, recovery.recovered);
  const double fid = fidelity(secret_state, recovered_state);
  const bool pass =
      fid >= 1.0 - tol && recovery.fidelity >= 1.0 - tol && security.overall_pass;

  ReportWriter w;
  w.field("report", "qss");
  w.field("state", path);
  w.field("distributor", distributor);
  w.field("secret_source", secret_source);
  w.field("recovery_window", bracket(window));
  w.field("decode_window", bracket(recovery.sub_window));
  w.field("recovery_site", recovery.recovery_site);
  w.field("purity", recovery.fidelity);
  w.field("recovery_fidelity", fid);
  for (Index i = 0; i < recovery.recovered.size(); ++i) {
    w.line("recovered " + format_double(recovery.recovered(i).real()) + " " +
           format_double(recovery.recovered(i).imag()));
  }
  w.checks("security", security);
  w.field("security_overall", security.overall_pass ? "pass" : "fail");
  w.field("overall", pass ? "pass" : "fail");
  w.emit(out, std::nullopt, start);
  return pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"planar maximally entangled states: construction, verification, "
               "classification, and protocols"};
  app.name("pme");
  app.require_subcommand(1);

  // construct
  ConstructOpts copts;
  CLI::App* construct =
      app.add_subcommand("construct", "build a state and write it to a file");
  construct->require_subcommand(1);
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", copts.out_path, "output state file")->required();
  };
  const auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", copts.seed, "seed for Haar-random unitaries")
        ->each([&](const std::string&) { copts.seed_given = true; });
  };

  CLI::App* k_ghz = construct->add_subcommand("ghz", "GHZ state on n sites");
  k_ghz->add_option("--n", copts.n, "total number of sites")->required();
  k_ghz->add_option("--d", copts.d, "local dimension");
  add_out(k_ghz);

  CLI::App* k_dimer = construct->add_subcommand(
      "bell-dimer", "n maximally entangled pairs, site k paired with k + n");
  k_dimer->add_option("--n", copts.n, "pair count (total sites = 2n)")->required();
  k_dimer->add_option("--d", copts.d, "local dimension");
  add_out(k_dimer);

  CLI::App* k_fa = construct->add_subcommand("family-a", "4-qubit family A state");
  k_fa->add_option("--theta", copts.theta, "phase angle");
  k_fa->add_option("--unitary", copts.unitary_files, "2x2 unitary block file");
  add_seed(k_fa);
  add_out(k_fa);

  CLI::App* k_fb = construct->add_subcommand("family-b", "4-qubit family B state");
  k_fb->add_option("--phi", copts.phi, "mixing angle");
  k_fb->add_option("--alpha", copts.alpha, "phase angle alpha");
  k_fb->add_option("--beta", copts.beta, "phase angle beta");
  k_fb->add_option("--gamma", copts.gamma, "phase angle gamma");
  k_fb->add_option("--delta", copts.delta, "phase angle delta");
  add_out(k_fb);

  CLI::App* k_pz = construct->add_subcommand(
      "psi-zero", "4-qubit intersection state of families A and B");
  k_pz->add_option("--beta", copts.beta, "phase angle");
  add_out(k_pz);

  const auto add_circuit_opts = [&](CLI::App* sub) {
    sub->add_option("--n", copts.n, "pair count (total sites = 2n)")->required();
    sub->add_option("--d", copts.d, "local dimension");
    sub->add_option("--unitary", copts.unitary_files,
                    "matrix file per chain gate (n - 1 of them)");
    add_seed(sub);
    add_out(sub);
  };
  CLI::App* k_cpsi = construct->add_subcommand(
      "circuit-psi", "entangling chain over the dimer pairing, descending order");
  add_circuit_opts(k_cpsi);
  CLI::App* k_cxi = construct->add_subcommand(
      "circuit-xi", "entangling chain over the dimer pairing, ascending order");
  add_circuit_opts(k_cxi);

  // verify
  std::string verify_path;
  std::string verify_mode = "pme";
  double verify_tol = kDefaultTol;
  std::string verify_out;
  CLI::App* verify =
      app.add_subcommand("verify", "check the PME or AME property of a state file");
  verify->add_option("path", verify_path, "state file")->required();
  verify->add_option("--mode", verify_mode, "pme or ame")
      ->check(CLI::IsMember({"pme", "ame"}));
  verify->add_option("--tol", verify_tol, "verdict tolerance");
  verify->add_option("--out", verify_out, "also write the report to a file");

  // classify
  std::string classify_path;
  double classify_tol = kDefaultTol;
  CLI::App* classify =
      app.add_subcommand("classify", "name the 4-qubit family of a state file");
  classify->add_option("path", classify_path, "state file")->required();
  classify->add_option("--tol", classify_tol, "verdict tolerance");

  // protocol
  CLI::App* protocol = app.add_subcommand("protocol", "run a protocol simulation");
  protocol->require_subcommand(1);

  std::string tp_path;
  std::string tp_window;
  double tp_tol = kDefaultTol;
  std::string tp_out;
  CLI::App* teleport = protocol->add_subcommand(
      "teleport-setup", "map a PME resource to the canonical pair across a window");
  teleport->add_option("path", tp_path, "resource state file")->required();
  teleport->add_option("--window", tp_window, "half window as ring-ordered sites")
      ->required();
  teleport->add_option("--tol", tp_tol, "verdict tolerance");
  teleport->add_option("--out", tp_out, "write the transformed state here");

  std::string qss_path;
  int qss_distributor = 0;
  std::string qss_window;
  std::uint64_t qss_secret_seed = 1;
  std::string qss_secret_file;
  double qss_tol = kDefaultTol;
  CLI::App* qss = protocol->add_subcommand(
      "qss", "share a secret over a PME resource and recover it");
  qss->add_option("path", qss_path, "resource state file")->required();
  qss->add_option("--distributor", qss_distributor, "distributor site");
  qss->add_option("--recover-window", qss_window, "player sites attempting recovery")
      ->required();
  CLI::Option* seed_opt =
      qss->add_option("--secret-seed", qss_secret_seed, "seed for a random secret");
  qss->add_option("--secret-file", qss_secret_file, "secret as '<re> <im>' lines")
      ->excludes(seed_opt);
  qss->add_option("--tol", qss_tol, "verdict tolerance");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("pme");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    for (CLI::App* kind : construct->get_subcommands()) {
      return cmd_construct(kind->get_name(), copts, out);
    }
    if (verify->parsed()) {
      const std::optional<std::string> report_path =
          verify_out.empty() ? std::nullopt : std::make_optional(verify_out);
      return cmd_verify(verify_path, verify_mode, verify_tol, report_path, out);
    }
    if (classify->parsed()) return cmd_classify(classify_path, classify_tol, out);
    if (teleport->parsed()) {
      const std::optional<std::string> out_path =
          tp_out.empty() ? std::nullopt : std::make_optional(tp_out);
      return cmd_teleport_setup(tp_path, tp_window, tp_tol, out_path, out);
    }
    if (qss->parsed()) {
      const std::optional<std::string> secret_path =
          qss_secret_file.empty() ? std::nullopt
                                  : std::make_optional(qss_secret_file);
      return cmd_qss(qss_path, qss_distributor, qss_window, qss_secret_seed,
                     secret_path, qss_tol, out);
    }
    err << "error: no command selected\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << " (deviation "
        << format_double(e.deviation()) << ")\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace pme

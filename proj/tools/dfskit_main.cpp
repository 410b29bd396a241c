// dfskit command-line front end: basis/verify/search/gate/simulate.
// Exit codes: 0 pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "dfskit/compat_search.hpp"
#include "dfskit/dfs_encoding.hpp"
#include "dfskit/json_io.hpp"
#include "dfskit/logical_gates.hpp"
#include "dfskit/noise_sim.hpp"
#include "dfskit/operator_core.hpp"
#include "dfskit/su_algebra.hpp"

namespace {

using dfskit::Complex;
using dfskit::Matrix;
using dfskit::Vector;

void write_output(const std::string& out, const std::string& payload) {
  if (out.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot open output file: " + out);
  file << payload;
}

double default_tolerance() {
  if (const char* env = std::getenv("DFSKIT_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("DFSKIT_TOL", "not a number");
    }
  }
  return 1e-10;
}

// "re,im" pairs, flattened for vectors: "re,im,re,im,...".
std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) parts.push_back(std::stod(tok));
  if (parts.size() % 2 != 0)
    throw std::invalid_argument("complex list needs an even number of values");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < parts.size(); i += 2)
    out.emplace_back(parts[i], parts[i + 1]);
  return out;
}

int cmd_basis(int d, const std::string& out) {
  const dfskit::GellMannBasis basis = dfskit::generate_basis(d);
  const dfskit::StructureTensors tensors = dfskit::structure_constants(basis);
  const std::string payload = "{\"basis\":" + dfskit::basis_json(basis) +
                              ",\"tensors\":" + dfskit::tensors_json(tensors) +
                              "}";
  write_output(out, payload);
  return 0;
}

int cmd_verify(int d, int n, double tol, const std::string& out) {
  const dfskit::GellMannBasis basis = dfskit::generate_basis(d);
  const dfskit::StructureTensors tensors = dfskit::structure_constants(basis);

  const dfskit::IdentityReport identities =
      dfskit::verify_algebra_identities(tensors, tol);
  const dfskit::CommutationTable table =
      dfskit::verify_commutation_table(basis);
  const dfskit::CompatReport sweep =
      dfskit::verify_n_qudit_compat(basis, n, tol);

  const bool table_ok = table.max_residual() < tol;
  const bool pass = identities.pass && table_ok && sweep.pass;

  std::string payload = "{\"d\":" + std::to_string(d) +
                        ",\"n\":" + std::to_string(n) + ",\"tolerance\":" +
                        dfskit::format_double(tol) + ",\"identities\":[";
  bool first = true;
  for (const auto& [name, r] : identities.residuals) {
    if (!first) payload += ",";
    first = false;
    payload += "[\"" + name + "\"," + dfskit::format_double(r) + "]";
  }
  payload += "],\"commutation_table\":[";
  first = true;
  for (const auto& [name, r] : table.residuals) {
    if (!first) payload += ",";
    first = false;
    payload += "[\"" + name + "\"," + dfskit::format_double(r) + "]";
  }
  payload += "],\"compat\":" + dfskit::compat_report_json(sweep) +
             ",\"pass\":" + (pass ? std::string("true") : "false") + "}";
  write_output(out, payload);
  return pass ? 0 : 1;
}

int cmd_search(int d, int n, double tol, const std::string& mode,
               const std::string& out) {
  const dfskit::GellMannBasis basis = dfskit::generate_basis(d);
  std::string effective = mode;
  if (effective.empty()) effective = (d <= 3) ? "full" : "verify";

  if (effective == "verify") {
    // Cheap slot-wise mode: check the known Hamiltonians only.
    const auto known = dfskit::known_hamiltonians(basis);
    const auto gens = dfskit::collective_generators(basis, 3);
    std::string payload = "{\"d\":" + std::to_string(d) +
                          ",\"n\":" + std::to_string(n) +
                          ",\"mode\":\"verify\",\"residuals\":[";
    bool first = true;
    double worst = 0.0;
    for (const auto& [name, h] : known) {
      double r = 0.0;
      for (const Matrix& s : gens)
        r = std::max(r, dfskit::max_abs(dfskit::commutator(h, s)));
      worst = std::max(worst, r);
      if (!first) payload += ",";
      first = false;
      payload += "[\"" + name + "\"," + dfskit::format_double(r) + "]";
    }
    const bool pass = worst < tol;
    payload +=
        "],\"pass\":" + (pass ? std::string("true") : "false") + "}";
    write_output(out, payload);
    return pass ? 0 : 1;
  }
  if (effective != "full") throw CLI::ValidationError("--mode", "unknown mode");

  const dfskit::ConstraintSystem system =
      dfskit::build_constraint_system(basis, n);
  const dfskit::CommutantBasis found = dfskit::commutant_basis(system, tol);
  const dfskit::MatchReport match =
      dfskit::match_against_known(found, dfskit::known_hamiltonians(basis),
                                  basis);
  write_output(out, dfskit::search_report_json(found, match));
  double worst = 0.0;
  for (double r : match.residuals) worst = std::max(worst, r);
  return (found.gap_ok && worst < 1e-9) ? 0 : 1;
}

int cmd_gate(const std::string& kind, int d, double t, bool t_given,
             const std::string& out) {
  const dfskit::GellMannBasis basis = dfskit::generate_basis(d);
  Matrix h, u;
  int n = 3;
  double tt = t;
  if (kind == "xbar") {
    h = dfskit::xbar(basis);
    u = dfskit::u_xbar(basis, tt);
  } else if (kind == "zbar") {
    h = dfskit::zbar(basis);
    u = dfskit::u_zbar(basis, tt);
  } else if (kind == "ybar") {
    h = dfskit::ybar(basis);
    u = dfskit::expm_hermitian(h, tt);
  } else if (kind == "swap" || kind == "exchange") {
    n = 2;
    if (kind == "swap" && !t_given) tt = std::numbers::pi / 4.0;
    h = dfskit::exchange_hamiltonian(basis, 0, 1, 2);
    u = dfskit::exchange_unitary(basis, 0, 1, 2, tt);
  } else if (kind == "f_triple") {
    h = dfskit::f_triple_hamiltonian(basis, 0, 1, 2, 3);
    u = dfskit::expm_hermitian(h, tt);
  } else if (kind == "d_triple") {
    h = dfskit::d_triple_hamiltonian(basis, 0, 1, 2, 3);
    u = dfskit::expm_hermitian(h, tt);
  } else {
    throw CLI::ValidationError("--kind", "unknown gate kind");
  }
  const std::string payload =
      "{\"kind\":\"" + kind + "\",\"d\":" + std::to_string(d) +
      ",\"n\":" + std::to_string(n) + ",\"t\":" + dfskit::format_double(tt) +
      ",\"hamiltonian\":" + dfskit::operator_json(h) +
      ",\"unitary\":" + dfskit::operator_json(u) + "}";
  write_output(out, payload);
  return 0;
}

int cmd_simulate(int steps, std::uint64_t seed, const std::string& a_text,
                 const std::string& b_text, const std::string& gauge_text,
                 const std::string& out) {
  const auto av = parse_complex_list(a_text);
  const auto bv = parse_complex_list(b_text);
  if (av.size() != 1 || bv.size() != 1)
    throw std::invalid_argument("--a and --b take one complex pair each");
  const auto gv = parse_complex_list(gauge_text);
  if (gv.size() != 8) throw std::invalid_argument("--gauge takes 8 pairs");
  Vector gauge(8);
  for (int i = 0; i < 8; ++i) gauge[i] = gv[static_cast<std::size_t>(i)];

  const dfskit::DfsEncoding enc = dfskit::octet_states();
  const dfskit::LogicalState state = dfskit::encode(av[0], bv[0], gauge, enc);
  const dfskit::NoiseTrajectory traj =
      dfskit::run_trajectory(state, enc, steps, seed);
  write_output(out, dfskit::trajectory_jsonl(traj));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SU(d) collective-noise toolkit"};
  app.require_subcommand(1);

  int d = 3, n = 3, steps = 100;
  std::uint64_t seed = 0;
  double tol = 0.0, t = 0.0;
  std::string out, mode, kind = "xbar";
  std::string a_text = "1,0", b_text = "0,0", gauge_text = "1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0";

  auto* basis_cmd = app.add_subcommand("basis", "export basis and tensors");
  basis_cmd->add_option("--d", d, "qudit dimension");
  basis_cmd->add_option("--out", out, "output path (default stdout)");

  auto* verify_cmd =
      app.add_subcommand("verify", "identity suite, commutation table, sweep");
  verify_cmd->add_option("--d", d);
  verify_cmd->add_option("--n", n);
  verify_cmd->add_option("--tol", tol);
  verify_cmd->add_option("--out", out);

  auto* search_cmd = app.add_subcommand("search", "commutant search");
  search_cmd->add_option("--d", d);
  search_cmd->add_option("--n", n);
  search_cmd->add_option("--tol", tol);
  search_cmd->add_option("--mode", mode, "full or verify");
  search_cmd->add_option("--out", out);

  auto* gate_cmd = app.add_subcommand("gate", "gate matrices");
  gate_cmd->add_option("--kind", kind,
                       "xbar|zbar|ybar|swap|exchange|f_triple|d_triple");
  gate_cmd->add_option("--d", d);
  auto* t_opt = gate_cmd->add_option("--t", t, "evolution parameter");
  gate_cmd->add_option("--out", out);

  auto* sim_cmd = app.add_subcommand("simulate", "collective-noise trajectory");
  sim_cmd->add_option("--steps", steps);
  sim_cmd->add_option("--seed", seed);
  sim_cmd->add_option("--a", a_text, "logical amplitude, re,im");
  sim_cmd->add_option("--b", b_text, "logical amplitude, re,im");
  sim_cmd->add_option("--gauge", gauge_text, "8 complex pairs");
  sim_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const double tolerance = (tol > 0.0) ? tol : default_tolerance();
    if (basis_cmd->parsed()) return cmd_basis(d, out);
    if (verify_cmd->parsed()) return cmd_verify(d, n, tolerance, out);
    if (search_cmd->parsed()) {
      const double search_tol = (tol > 0.0) ? tol : 1e-9;
      return cmd_search(d, n, search_tol, mode, out);
    }
    if (gate_cmd->parsed())
      return cmd_gate(kind, d, t, t_opt->count() > 0, out);
    if (sim_cmd->parsed())
      return cmd_simulate(steps, seed, a_text, b_text, gauge_text, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

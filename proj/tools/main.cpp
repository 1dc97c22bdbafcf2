#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "shinv/errors.hpp"
#include "shinv/format.hpp"
#include "shinv/info_measures.hpp"
#include "shinv/invariants.hpp"
#include "shinv/joint_distribution.hpp"
#include "shinv/kernels.hpp"
#include "shinv/lattice.hpp"
#include "shinv/pid_oracle.hpp"
#include "shinv/quantize.hpp"
#include "shinv/random_ensemble.hpp"
#include "shinv/report.hpp"
#include "shinv/sample_table.hpp"
#include "shinv/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitIllDefined = 2;

void write_output(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw shinv::Error("cannot write '" + path + "'");
  out << content;
}

int run_invariants(const std::string& csv_path, const std::string& target,
                   const std::string& unit, double threshold,
                   const std::string& format, const std::string& output) {
  const auto table = shinv::read_csv_file(csv_path, target);
  const auto dist = shinv::JointDistribution::from_samples(table);
  const auto inv = shinv::analyze(dist, threshold);

  shinv::ReportDocument doc;
  doc.input_path = csv_path;
  doc.n_rows = table.n_rows();
  for (std::size_t v = 0; v < dist.n_vars(); ++v) {
    doc.alphabet_sizes.push_back(dist.alphabet_size(v));
  }
  doc.unit = unit;
  doc.threshold_bits = threshold;
  doc.tool_version = shinv::kToolVersion;
  doc.invariants = inv;

  write_output(format == "tsv" ? shinv::to_tsv(doc) : shinv::to_json(doc),
               output);
  return inv.r_bar ? kExitOk : kExitIllDefined;
}

int run_lattice(int n, const std::string& output) {
  const auto antichains = shinv::enumerate_antichains(n);
  std::vector<int> r_hist(n + 1, 0);
  std::vector<int> v_hist(n + 1, 0);

  std::string out;
  for (const auto& alpha : antichains) {
    const int r = shinv::degree_redundancy(alpha);
    const int v = shinv::degree_vulnerability(alpha);
    ++r_hist[r];
    ++v_hist[v];
    out += alpha.to_string() + "\tr=" + std::to_string(r) +
           "\tv=" + std::to_string(v) + "\n";
  }
  auto histogram = [n](const char* name, const std::vector<int>& hist) {
    std::string line(name);
    line += ":";
    for (int k = 0; k <= n; ++k) {
      line += " " + std::to_string(k) + ":" + std::to_string(hist[k]);
    }
    return line + "\n";
  };
  out += histogram("r-degree counts", r_hist);
  out += histogram("v-degree counts", v_hist);
  out += "antichains: " + std::to_string(antichains.size()) + "\n";
  write_output(out, output);
  return kExitOk;
}

struct Certificate {
  std::string name;
  double max_residual = 0.0;

  void record(double residual) {
    if (residual > max_residual) max_residual = residual;
  }
};

int run_oracle_check(int n, int trials, std::uint64_t seed, double tolerance) {
  const auto antichains = shinv::enumerate_antichains(n);
  std::vector<int> degree_r(antichains.size());
  std::vector<int> degree_v(antichains.size());
  for (std::size_t i = 0; i < antichains.size(); ++i) {
    degree_r[i] = shinv::degree_redundancy(antichains[i]);
    degree_v[i] = shinv::degree_vulnerability(antichains[i]);
  }

  Certificate weighted_r_cert{"weighted_redundancy_sum"};
  Certificate weighted_v_cert{"weighted_vulnerability_sum"};
  Certificate rsi_cert{"rsi_from_atoms"};
  Certificate drsi_cert{"drsi_from_atoms"};
  Certificate atom_sum{"atom_sum_equals_joint_mi"};
  Certificate atom_nonneg{"atom_nonnegativity"};
  Certificate cons_mi{"consistency_mi_form"};
  Certificate cons_cmi{"consistency_cmi_form"};
  Certificate ineq_rv{"ineq_robust_covers_source_redundancy"};
  Certificate ineq_sv{"ineq_synergy_covers_vulnerability"};
  Certificate bound_syn{"bound_min_synergy_fraction"};
  Certificate bound_rob{"bound_min_robustness_fraction"};
  Certificate bound_red{"bound_min_proper_redundancy_fraction"};
  Certificate bound_vul{"bound_min_vulnerability_fraction"};
  Certificate lambda_cert{"lambda_threshold_bounds"};

  const double fraction_guard = 1e-6;  // skip ratio checks when I is tiny
  const std::vector<double> lambdas = {0.25, 0.5, 0.75};

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto d = shinv::random_joint(rng, static_cast<std::size_t>(n));
    const auto atoms = shinv::atoms_moebius(d);

    const double total_mi = shinv::mutual_information(d, d.all_sources());
    const double r_sum = shinv::redundancy_sum(d);
    const double v_sum = shinv::vulnerability_sum(d);

    std::vector<double> ir(n + 1, 0.0);
    std::vector<double> iv(n + 1, 0.0);
    double atom_total = 0.0;
    double atom_min = 0.0;
    for (std::size_t i = 0; i < atoms.values.size(); ++i) {
      ir[degree_r[i]] += atoms.values[i];
      iv[degree_v[i]] += atoms.values[i];
      atom_total += atoms.values[i];
      atom_min = std::min(atom_min, atoms.values[i]);
    }

    double weighted_r = 0.0;
    double weighted_v = 0.0;
    double high_r = 0.0;
    double high_v = 0.0;
    double rsi_atoms = -ir[0];
    double drsi_atoms = iv[0];
    for (int k = 1; k <= n; ++k) {
      weighted_r += k * ir[k];
      weighted_v += k * iv[k];
      if (k >= 2) {
        high_r += ir[k];
        high_v += iv[k];
        rsi_atoms += (k - 1) * ir[k];
        drsi_atoms -= (k - 1) * iv[k];
      }
    }

    weighted_r_cert.record(std::abs(weighted_r - r_sum));
    weighted_v_cert.record(std::abs(weighted_v - v_sum));
    rsi_cert.record(std::abs(shinv::rsi(d) - rsi_atoms));
    drsi_cert.record(std::abs(shinv::drsi(d) - drsi_atoms));
    atom_sum.record(std::abs(atom_total - total_mi));
    atom_nonneg.record(std::max(0.0, -atom_min));
    ineq_rv.record(std::max(0.0, high_r - iv[0]));
    ineq_sv.record(std::max(0.0, high_v - ir[0]));

    // Consistency equations for every source subset.
    const shinv::VarMask full = d.all_sources();
    for (shinv::VarMask a = 1; a <= full; ++a) {
      double covered = 0.0;  // atoms with some collection inside a
      double rest = 0.0;
      for (std::size_t i = 0; i < atoms.antichains.size(); ++i) {
        bool inside = false;
        for (shinv::SourceSet s : atoms.antichains[i].sets()) {
          if ((static_cast<shinv::VarMask>(s) & ~a) == 0) {
            inside = true;
            break;
          }
        }
        (inside ? covered : rest) += atoms.values[i];
      }
      cons_mi.record(std::abs(shinv::mutual_information(d, a) - covered));
      const shinv::VarMask comp = full & ~a;
      const double cmi =
          comp ? shinv::conditional_mi(d, comp, a) : 0.0;
      cons_cmi.record(std::abs(cmi - rest));
    }

    if (total_mi > fraction_guard) {
      const double r_bar = r_sum / total_mi;
      const double v_bar = v_sum / total_mi;
      bound_syn.record(std::max(0.0, (1.0 - r_bar) - ir[0] / total_mi));
      bound_rob.record(std::max(0.0, (1.0 - v_bar) - iv[0] / total_mi));
      if (n >= 2) {
        bound_red.record(
            std::max(0.0, (r_bar - 1.0) / (n - 1.0) - high_r / total_mi));
        bound_vul.record(
            std::max(0.0, (v_bar - 1.0) / (n - 1.0) - high_v / total_mi));
      }
      const double nonzero_r = (total_mi - ir[0]) / total_mi;
      const double nonzero_v = (total_mi - iv[0]) / total_mi;
      for (double lambda : lambdas) {
        const double gate = shinv::lambda_threshold(lambda, n);
        if (r_bar > gate) lambda_cert.record(std::max(0.0, lambda - nonzero_r));
        if (v_bar > gate) lambda_cert.record(std::max(0.0, lambda - nonzero_v));
      }
    }
  }

  std::vector<Certificate*> all = {
      &weighted_r_cert, &weighted_v_cert, &rsi_cert, &drsi_cert, &atom_sum,
      &atom_nonneg, &cons_mi, &cons_cmi,  &ineq_rv,  &ineq_sv,
      &bound_syn, &bound_rob, &bound_red, &bound_vul, &lambda_cert};

  bool ok = true;
  for (const Certificate* c : all) {
    const bool pass = c->max_residual <= tolerance;
    ok = ok && pass;
    std::printf("%-40s max|residual| = %-14s %s\n", c->name.c_str(),
                shinv::format_real(c->max_residual).c_str(),
                pass ? "ok" : "FAIL");
  }
  std::printf("result: %s (n=%d, trials=%d, seed=%llu, tolerance=%s)\n",
              ok ? "PASS" : "FAIL", n, trials,
              static_cast<unsigned long long>(seed),
              shinv::format_real(tolerance).c_str());
  return ok ? kExitOk : kExitInputError;
}

std::vector<std::string> read_labels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw shinv::Error("cannot open '" + path + "'");
  std::vector<std::string> labels;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    labels.push_back(line);
  }
  return labels;
}

int run_quantize(const std::string& matrix_path, const std::string& labels_path,
                 int levels, double sigma_min, double sigma_max,
                 std::uint64_t seed, const std::string& output) {
  const auto matrix = shinv::read_matrix_file(matrix_path);
  const auto labels = read_labels(labels_path);
  const shinv::QuantizerConfig cfg(sigma_min, sigma_max, levels, seed);
  const auto table = shinv::quantize_table(matrix, cfg, labels);
  write_output(shinv::to_csv(table), output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shannon invariants of multivariate information decomposition"};
  app.set_version_flag("--version", shinv::kToolVersion);
  app.require_subcommand(1);

  // invariants
  std::string csv_path;
  std::string target;
  std::string unit = "bits";
  double threshold = shinv::kDefaultIllDefinedThreshold;
  std::string format = "json";
  std::string output;
  auto* inv_cmd = app.add_subcommand(
      "invariants", "Compute r-bar, v-bar, RSI and DRSI from a CSV table");
  inv_cmd->add_option("csv", csv_path, "input CSV (header row, ',' delimiter)")
      ->required();
  inv_cmd->add_option("--target", target,
                      "target column name (default: last column)");
  inv_cmd->add_option("--unit", unit, "bits or nats")
      ->check(CLI::IsMember({"bits", "nats"}));
  inv_cmd->add_option("--threshold", threshold,
                      "ill-defined threshold for I(X;Y), in bits");
  inv_cmd->add_option("--format", format, "json or tsv")
      ->check(CLI::IsMember({"json", "tsv"}));
  inv_cmd->add_option("--output", output, "output path (default: stdout)");

  // lattice
  int lattice_n = 3;
  std::string lattice_output;
  auto* lat_cmd = app.add_subcommand(
      "lattice", "List antichains with their degrees (n <= 5)");
  lat_cmd->add_option("--n", lattice_n, "number of sources")->required();
  lat_cmd->add_option("--output", lattice_output, "output path");

  // oracle-check
  int oracle_n = 3;
  int trials = 1000;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  auto* chk_cmd = app.add_subcommand(
      "oracle-check",
      "Certify the invariant identities against brute-force atoms (n <= 4)");
  chk_cmd->add_option("--n", oracle_n, "number of sources");
  chk_cmd->add_option("--trials", trials, "random distributions to test");
  chk_cmd->add_option("--seed", seed, "ensemble seed");
  chk_cmd->add_option("--tolerance", tolerance, "max acceptable residual");

  // quantize
  std::string matrix_path;
  std::string labels_path;
  int levels = 8;
  double sigma_min = -1.0;
  double sigma_max = 1.0;
  std::uint64_t qseed = 1;
  std::string qoutput;
  auto* q_cmd = app.add_subcommand(
      "quantize", "Stochastically quantize an activation matrix to a CSV table");
  q_cmd->add_option("matrix", matrix_path, "matrix file ('rows cols' header)")
      ->required();
  q_cmd->add_option("labels", labels_path, "target symbols, one per row")
      ->required();
  q_cmd->add_option("--levels", levels, "number of quantization levels");
  q_cmd->add_option("--min", sigma_min, "activation lower bound");
  q_cmd->add_option("--max", sigma_max, "activation upper bound");
  q_cmd->add_option("--seed", qseed, "draw stream seed");
  q_cmd->add_option("--output", qoutput, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inv_cmd) {
      return run_invariants(csv_path, target, unit, threshold, format, output);
    }
    if (*lat_cmd) return run_lattice(lattice_n, lattice_output);
    if (*chk_cmd) return run_oracle_check(oracle_n, trials, seed, tolerance);
    if (*q_cmd) {
      return run_quantize(matrix_path, labels_path, levels, sigma_min,
                          sigma_max, qseed, qoutput);
    }
  } catch (const shinv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

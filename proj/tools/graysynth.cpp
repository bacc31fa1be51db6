// Command-line front end: synthesis, optimization, statistics, verification,
// exact search, and the gap experiment.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "graysynth/graysynth.hpp"

namespace {

using namespace graysynth;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + out_path + "\"");
  out << text;
}

std::optional<BitMatrix> load_pointed(const std::string& arg, int n) {
  if (arg.empty()) return std::nullopt;
  if (arg == "identity") return BitMatrix::identity(n);
  return parse_bit_matrix(slurp(arg));
}

std::string stats_line(const CircuitStats& st) {
  std::ostringstream out;
  out << "cnot=" << st.cnot_count << " t=" << st.t_count << " tdepth=" << st.t_depth
      << " h=" << st.h_count << " total=" << st.total;
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parity-network synthesis and CNOT-count optimization over CNOT+Rz circuits"};
  app.require_subcommand(1);

  // synth
  std::string synth_in, synth_out, synth_pointed_arg;
  auto* synth = app.add_subcommand("synth", "synthesize a circuit for a phase polynomial");
  synth->add_option("phasepoly", synth_in, "phase polynomial file")->required();
  synth->add_option("--pointed", synth_pointed_arg, "target transform: 'identity' or a matrix file");
  synth->add_option("-o,--output", synth_out, "output circuit file (default stdout)");

  // optimize
  std::string opt_in, opt_out, opt_template = "7cnot";
  bool opt_stats = false;
  auto* opt = app.add_subcommand("optimize", "re-synthesize a Clifford+T circuit");
  opt->add_option("circuit", opt_in, "input .qc circuit")->required();
  opt->add_option("-o,--output", opt_out, "output circuit file (default stdout)");
  opt->add_flag("--stats", opt_stats, "also print statistics of the result");
  opt->add_option("--toffoli-template", opt_template, "Toffoli expansion: 7cnot or 6cnot")
      ->check(CLI::IsMember({"7cnot", "6cnot"}));

  // stats
  std::string stats_in;
  auto* stats_cmd = app.add_subcommand("stats", "print circuit statistics");
  stats_cmd->add_option("circuit", stats_in, "input .qc circuit")->required();

  // verify
  std::string ver_a, ver_b;
  double ver_tol = 1e-7;
  auto* ver = app.add_subcommand("verify", "check unitary equivalence up to global phase");
  ver->add_option("a", ver_a, "first circuit")->required();
  ver->add_option("b", ver_b, "second circuit")->required();
  ver->add_option("--tol", ver_tol, "max-entry tolerance");

  // oracle
  std::string ora_in, ora_pointed_arg;
  int ora_max_len = 0;
  auto* ora = app.add_subcommand("oracle", "exact minimal parity network by breadth-first search");
  ora->add_option("parityset", ora_in, "parity set file")->required();
  ora->add_option("--pointed", ora_pointed_arg, "target transform: 'identity' or a matrix file");
  ora->add_option("--max-len", ora_max_len, "search depth cap (0 = automatic)");

  // experiment gap
  int gap_n = 4, gap_samples = 200, gap_jobs = 1;
  std::uint64_t gap_seed = 1;
  std::string gap_csv, gap_sizes_arg;
  auto* exp = app.add_subcommand("experiment", "reproducible experiments");
  auto* gap = exp->add_subcommand("gap", "gray-synth vs. optimal CNOT counts");
  gap->add_option("--n", gap_n, "number of bits (at most 4)")->check(CLI::Range(1, 4));
  gap->add_option("--samples", gap_samples, "samples per size");
  gap->add_option("--seed", gap_seed, "random seed");
  gap->add_option("--csv", gap_csv, "write results to this CSV file");
  gap->add_option("--sizes", gap_sizes_arg, "comma-separated sizes (default: all)");
  gap->add_option("--jobs", gap_jobs, "worker threads")->check(CLI::PositiveNumber);
  exp->require_subcommand(1);

  try {
    app.parse(argc, argv);

    if (*synth) {
      PhasePolynomial f = parse_phase_poly(slurp(synth_in));
      Circuit c(0);
      if (synth_pointed_arg.empty()) {
        GraySynthResult gs = gray_synth([&] {
          ParitySet s(f.arity());
          for (const auto& [y, a] : f.terms()) s.insert(y);
          return s;
        }());
        c = synth_phase_circuit(f, gs.transform);
      } else {
        c = synth_phase_circuit(f, *load_pointed(synth_pointed_arg, f.arity()));
      }
      emit(write_qc(c), synth_out);
    } else if (*opt) {
      CircuitFile file = parse_qc(slurp(opt_in));
      ToffoliTemplate tpl =
          opt_template == "6cnot" ? ToffoliTemplate::SixCnot : ToffoliTemplate::SevenCnot;
      Circuit expanded = decompose_toffoli(decompose_mcx(file.circ), tpl);
      Circuit result = optimize(expanded);
      CircuitFile out_file;
      out_file.names = file.names;
      for (int w = static_cast<int>(file.names.size()) + 1; w <= result.n; ++w)
        out_file.names.push_back("anc" + std::to_string(w - static_cast<int>(file.names.size())));
      out_file.primary.assign(out_file.names.size(), 1);
      for (std::size_t k = 0; k < file.primary.size(); ++k) out_file.primary[k] = file.primary[k];
      out_file.circ = result;
      emit(write_qc(out_file), opt_out);
      if (opt_stats) {
        std::ostream& os = opt_out.empty() ? std::cerr : std::cout;
        os << stats_line(stats(result)) << '\n';
      }
    } else if (*stats_cmd) {
      CircuitFile file = parse_qc(slurp(stats_in));
      std::cout << stats_line(stats(file.circ)) << '\n';
    } else if (*ver) {
      CircuitFile a = parse_qc(slurp(ver_a));
      CircuitFile b = parse_qc(slurp(ver_b));
      if (a.circ.n != b.circ.n || !equivalent_unitary(a.circ, b.circ, ver_tol)) {
        std::cout << "not equivalent\n";
        return 1;
      }
      std::cout << "equivalent\n";
    } else if (*ora) {
      ParitySet s = parse_parity_set(slurp(ora_in));
      auto pointed = load_pointed(ora_pointed_arg, s.arity());
      MinNetworkResult r = min_parity_network(s, pointed, ora_max_len);
      std::cout << "length=" << r.length << '\n' << write_qc(r.circuit);
    } else if (*gap) {
      std::vector<int> sizes;
      if (gap_sizes_arg.empty()) {
        for (int k = 1; k <= (1 << gap_n) - 1; ++k) sizes.push_back(k);
      } else {
        std::istringstream ss(gap_sizes_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) sizes.push_back(std::stoi(tok));
      }
      auto rows = gap_experiment(gap_n, sizes, gap_samples, gap_seed, gap_jobs);
      std::ostringstream csv;
      csv << "size,mean_graysynth,mean_optimal,ratio,samples\n";
      csv.setf(std::ios::fixed);
      csv.precision(4);
      for (const GapRow& r : rows)
        csv << r.size << ',' << r.mean_graysynth << ',' << r.mean_optimal << ',' << r.ratio << ','
            << r.samples << '\n';
      if (gap_csv.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream out(gap_csv, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write \"" + gap_csv + "\"");
        out << csv.str();
      }
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

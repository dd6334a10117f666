#include "fockcb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>

#include "fockcb/canonical.hpp"
#include "fockcb/decomposition.hpp"

namespace fockcb {

namespace {

struct CliState {
  int n = 0;
  int e = 1;
  std::vector<int> charges;
  std::string format = "text";
  bool q_mode = false;
  std::string output_path;
  std::string mp_text;
};

Multipartition parse_input(const CliState& state, const ParamSet& params) {
  Multipartition mp = Multipartition::parse(state.mp_text);
  if (mp.level() != params.level())
    throw usage_error("multipartition '" + state.mp_text + "' has " +
                      std::to_string(mp.level()) + " components but " +
                      std::to_string(params.level()) + " charges were given");
  return mp;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical bases of higher-level Fock spaces and decomposition matrices of "
               "Ariki-Koike algebras with parameters that are powers of one root of unity"};
  app.require_subcommand(1);
  CliState state;

  auto add_param_options = [&state](CLI::App* cmd) {
    cmd->add_option("-e", state.e, "order of the root of unity")->required();
    cmd->add_option("-v", state.charges, "charges v_0,...,v_{d-1} (defines the level d)")
        ->required()
        ->delimiter(',');
    cmd->add_option("-o", state.output_path, "write the result to this file");
  };
  auto add_rank_option = [&state](CLI::App* cmd) {
    cmd->add_option("-n", state.n, "rank (total number of boxes)")
        ->required()
        ->check(CLI::NonNegativeNumber);
  };
  auto add_input_option = [&state](CLI::App* cmd) {
    cmd->add_option("-p", state.mp_text, "multipartition, e.g. \"1|3.1|2.1.1\"")->required();
  };

  CLI::App* matrix = app.add_subcommand(
      "matrix", "decomposition matrix of rank n (specialized at q=1 unless --q is given)");
  add_rank_option(matrix);
  add_param_options(matrix);
  matrix->add_option("--format", state.format, "output format: text, csv or json")
      ->default_str("text");
  matrix->add_flag("--q", state.q_mode, "keep polynomial entries instead of specializing");

  CLI::App* basis = app.add_subcommand("basis", "canonical basis elements with polynomial coefficients");
  add_rank_option(basis);
  add_param_options(basis);

  CLI::App* flotw = app.add_subcommand("flotw", "list the FLOTW multipartitions of rank n");
  add_rank_option(flotw);
  add_param_options(flotw);

  CLI::App* aseq = app.add_subcommand("aseq", "a-sequence of residues of a FLOTW multipartition");
  add_param_options(aseq);
  add_input_option(aseq);

  CLI::App* avalue = app.add_subcommand("avalue", "a-value of a multipartition");
  add_param_options(avalue);
  add_input_option(avalue);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    return app.exit(ex, out, err);
  }

  try {
    ParamSet params(state.e, state.charges);

    std::ofstream file;
    std::ostream* os = &out;
    if (!state.output_path.empty()) {
      file.open(state.output_path, std::ios::binary);
      if (!file) throw usage_error("cannot open output file '" + state.output_path + "'");
      os = &file;
    }

    if (matrix->parsed()) {
      MatrixFormat format = parse_matrix_format(state.format);
      if (format == MatrixFormat::csv && state.q_mode)
        throw usage_error("csv output supports only the specialized integer matrix");
      DecompositionMatrix m = assemble(compute_canonical_basis(state.n, params));
      if (m.has_negative_specialized_entry())
        err << "warning: the specialized matrix has a negative entry\n";
      write_matrix(m, *os, format, state.q_mode);
    } else if (basis->parsed()) {
      compute_canonical_basis(state.n, params).dump(*os);
    } else if (flotw->parsed()) {
      for (const Multipartition& mp : enumerate_flotw(state.n, params)) *os << mp << '\n';
    } else if (aseq->parsed()) {
      Multipartition mp = parse_input(state, params);
      if (!is_flotw(mp, params))
        throw usage_error("'" + state.mp_text + "' is not FLOTW for these parameters");
      *os << render_a_sequence(a_sequence(mp, params)) << '\n';
    } else if (avalue->parsed()) {
      *os << rational_to_string(a_value(parse_input(state, params), params)) << '\n';
    }
    return 0;
  } catch (const invariant_error& ex) {
    err << "internal invariant violated: " << ex.what() << '\n';
    return 70;
  } catch (const not_divisible_error& ex) {
    err << "internal invariant violated: " << ex.what() << '\n';
    return 70;
  } catch (const error& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int t = 1; t < argc; ++t) args.emplace_back(argv[t]);
  return run_cli(args, out, err);
}

}  // namespace fockcb

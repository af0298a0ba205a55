// Command-line front end: construct basis sets, verify documents, list the
// available zero-pattern plans. Exit codes: 0 success (verify: certified),
// 1 verification failed, 2 verification inconclusive, 3 invalid parameters
// or malformed input, 4 partition search exhausted.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ueb/ueb.hpp"

namespace {

std::uint64_t env_seed() {
  if (const char* s = std::getenv("UEB_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("UEB_SEED must be an unsigned integer");
    }
  }
  return 0;
}

ueb::PhaseSystem phases_by_name(const std::string& name, int k) {
  if (name == "fourier") return ueb::fourier_phases(k);
  if (name == "tensor-hadamard") return ueb::tensor_hadamard_phases(k);
  throw std::invalid_argument("unknown phase system: " + name + " (expected fourier or tensor-hadamard)");
}

void emit(const ueb::BasisSet& S, const std::string& out_path, const std::string& csv_path) {
  if (!csv_path.empty()) ueb::write_csv(csv_path, S);
  if (out_path.empty()) {
    std::cout << ueb::dump_document(ueb::document_from_basis_set(S));
  } else {
    ueb::write_document(out_path, S);
    std::cout << ueb::to_string(S.kind) << " with " << S.count() << " states in C^" << S.d << " (x) C^"
              << S.dprime << " (k = " << S.k << ") written to " << out_path << "\n";
  }
}

void print_report(const ueb::VerificationReport& rep, const ueb::BasisSet& S) {
  std::cout << "kind:        " << ueb::to_string(S.kind) << "\n"
            << "space:       C^" << S.d << " (x) C^" << S.dprime << ", k = " << S.k << "\n"
            << "count:       " << S.count() << " of " << S.space_dim() << "\n"
            << "gram:        " << (rep.gram.ok ? "ok" : "FAILED") << " (max deviation " << rep.gram.deviation
            << ")\n"
            << "profile:     " << (rep.profile.ok ? "ok" : "FAILED") << " (max deviation "
            << rep.profile.deviation << ")\n"
            << "cardinality: " << (rep.cardinality_ok ? "ok" : "FAILED") << "\n"
            << "certificate: " << rep.certificate.kind_name();
  if (const auto* rd = std::get_if<ueb::ComplementRankDeficient>(&rep.certificate.detail))
    std::cout << " (max rank " << rd->max_rank << " < k over " << rd->trials << " trials, seed " << rd->seed
              << ")";
  else if (const auto* pb = std::get_if<ueb::PatternBound>(&rep.certificate.detail))
    std::cout << " (matching " << pb->matching << " < k on " << pb->pattern.count() << " cells)";
  else if (const auto* hn = std::get_if<ueb::HadamardNoExtension>(&rep.certificate.detail))
    std::cout << " (best residual " << hn->verdict.best_residual << " after " << hn->verdict.attempts
              << " attempts" << (hn->verdict.heuristic ? ", heuristic" : ", exact") << ")";
  std::cout << "\n";
  if (!rep.note.empty()) std::cout << "note:        " << rep.note << "\n";
  std::cout << "overall:     " << ueb::to_string(rep.overall) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"unextendible entangled basis constructions"};
  app.require_subcommand(1);
  std::uint64_t seed = env_seed();

  // construct
  auto* construct = app.add_subcommand("construct", "build a basis set");
  construct->require_subcommand(1);

  auto* sec3 = construct->add_subcommand("sec3", "zero-pattern construction on a d x d' grid");
  int s_k = 0, s_d = 0, s_dp = 0, s_param = 0;
  std::string s_case, s_phases = "fourier", s_out, s_csv;
  sec3->add_option("--k", s_k, "Schmidt number")->required();
  sec3->add_option("--d", s_d, "first factor dimension")->required();
  sec3->add_option("--dprime", s_dp, "second factor dimension")->required();
  sec3->add_option("--case", s_case, "pattern case: C1, C2, C3 or C4")->required();
  sec3->add_option("--param", s_param, "case parameter (i or t)")->required();
  sec3->add_option("--phases", s_phases, "phase system: fourier or tensor-hadamard");
  sec3->add_option("--out", s_out, "output JSON path (default: stdout)");
  sec3->add_option("--csv", s_csv, "also export amplitudes as CSV");

  auto* lift = construct->add_subcommand("lift", "lift an unextendible set to a larger space");
  std::string l_inner, l_filler, l_decomp, l_phases = "fourier", l_out, l_csv;
  int l_p = 0, l_q = 0, l_trials = 8;
  lift->add_option("--inner", l_inner, "document with the inner unextendible set")->required();
  lift->add_option("--filler", l_filler, "document with a complete basis (default: built from --phases)");
  lift->add_option("--p", l_p, "block rows of the permutation decomposition");
  lift->add_option("--q", l_q, "block columns of the permutation decomposition");
  lift->add_option("--decomposition", l_decomp, "JSON file with a custom permutation decomposition");
  lift->add_option("--phases", l_phases, "phase system for the default filler");
  lift->add_option("--trials", l_trials, "random combinations for the rank certificate");
  lift->add_option("--seed", seed, "seed for randomized steps (UEB_SEED overrides the default)");
  lift->add_option("--out", l_out, "output JSON path (default: stdout)");
  lift->add_option("--csv", l_csv, "also export amplitudes as CSV");

  auto* had = construct->add_subcommand("hadamard", "UMEB from an inextensible partial Hadamard matrix");
  std::string h_matrix = "builtin:h3x5", h_out, h_csv;
  int h_dprime = 0, h_attempts = 200, h_iterations = 1000;
  double h_tol = 1e-8;
  had->add_option("--matrix", h_matrix, "builtin:h3x5 or a path to a partial Hadamard JSON file");
  had->add_option("--dprime", h_dprime, "second factor dimension (>= d)")->required();
  had->add_option("--attempts", h_attempts, "extension search restarts");
  had->add_option("--iterations", h_iterations, "projection iterations per restart");
  had->add_option("--tol", h_tol, "extension search acceptance tolerance");
  had->add_option("--seed", seed, "seed for the extension search (UEB_SEED overrides the default)");
  had->add_option("--out", h_out, "output JSON path (default: stdout)");
  had->add_option("--csv", h_csv, "also export amplitudes as CSV");

  // verify
  auto* verify = app.add_subcommand("verify", "check a basis set document");
  std::string v_path;
  double v_tol = ueb::kRankTol;
  int v_trials = 8, v_attempts = 200, v_iterations = 1000;
  verify->add_option("file", v_path, "basis set document")->required();
  verify->add_option("--tol", v_tol, "decision tolerance");
  verify->add_option("--trials", v_trials, "random combinations for the rank check");
  verify->add_option("--attempts", v_attempts, "extension search restarts");
  verify->add_option("--iterations", v_iterations, "projection iterations per restart");
  verify->add_option("--seed", seed, "seed for randomized steps (UEB_SEED overrides the default)");

  // list
  auto* list = app.add_subcommand("list", "list zero-pattern plans for (k, d, dprime)");
  int t_k = 0, t_d = 0, t_dp = 0;
  list->add_option("--k", t_k, "Schmidt number")->required();
  list->add_option("--d", t_d, "first factor dimension")->required();
  list->add_option("--dprime", t_dp, "second factor dimension")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  if (sec3->parsed()) {
    const ueb::Sec3Plan plan =
        ueb::make_sec3_plan(s_k, s_d, s_dp, ueb::sec3_case_from_string(s_case), s_param);
    emit(ueb::construct_sec3(plan, phases_by_name(s_phases, s_k)), s_out, s_csv);
    return 0;
  }

  if (lift->parsed()) {
    const ueb::BasisSet inner = ueb::read_basis_set(l_inner);
    ueb::PermutationDecomposition D;
    if (!l_decomp.empty()) {
      D = ueb::read_decomposition(l_decomp);
    } else {
      if (l_p <= 0 || l_q <= 0)
        throw std::invalid_argument("lift: pass --p and --q (or --decomposition)");
      D = ueb::cyclic_decomposition(l_p, l_q);
    }
    ueb::BasisSet filler;
    if (!l_filler.empty()) {
      filler = ueb::read_basis_set(l_filler);
    } else {
      if ((static_cast<long>(inner.d) * inner.dprime) % inner.k != 0)
        throw std::invalid_argument(
            "lift: no complete filler basis exists because k does not divide d*dprime of the inner set");
      filler = ueb::build_sv1bk(ueb::diagonal_partition(inner.d, inner.dprime, inner.k),
                                phases_by_name(l_phases, inner.k));
    }
    ueb::LiftOptions opt;
    opt.rank_trials = l_trials;
    opt.seed = seed;
    const ueb::BasisSet S = inner.kind == ueb::BasisKind::UMEB ? ueb::lift_umeb(inner, filler, D, opt)
                                                               : ueb::lift_suebk(inner, filler, D, opt);
    emit(S, l_out, l_csv);
    return 0;
  }

  if (had->parsed()) {
    const ueb::PartialHadamard H =
        h_matrix == "builtin:h3x5" ? ueb::builtin_h3x5() : ueb::read_hadamard(h_matrix);
    ueb::ExtensionSearchOptions opt;
    opt.attempts = h_attempts;
    opt.iterations = h_iterations;
    opt.tol = h_tol;
    opt.seed = seed;
    emit(ueb::build_umeb_from_hadamard(H, h_dprime, opt), h_out, h_csv);
    return 0;
  }

  if (verify->parsed()) {
    const ueb::BasisSet S = ueb::read_basis_set(v_path);
    ueb::CertifyOptions opt;
    opt.rank_trials = v_trials;
    opt.seed = seed;
    opt.search.attempts = v_attempts;
    opt.search.iterations = v_iterations;
    const ueb::VerificationReport rep = ueb::verify(S, v_tol, opt);
    print_report(rep, S);
    switch (rep.overall) {
      case ueb::Overall::Certified: return 0;
      case ueb::Overall::Failed: return 1;
      case ueb::Overall::Inconclusive: return 2;
    }
  }

  if (list->parsed()) {
    const auto plans = ueb::enumerate_constructions(t_k, t_d, t_dp);
    std::cout << "case  param  star   count  matching\n";
    for (const auto& plan : plans)
      std::cout << ueb::to_string(plan.kase) << "    " << plan.param << "      " << plan.star_rows << "x"
                << plan.star_cols << "    " << plan.expected_count << "     "
                << ueb::pattern_max_rank(plan.complement_pattern) << "\n";
    if (plans.empty()) std::cout << "no plans apply to (k, d, dprime) = (" << t_k << ", " << t_d << ", " << t_dp << ")\n";
    return 0;
  }

  return 3;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ueb::PartitionNotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

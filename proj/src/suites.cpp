#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "uq2/dirac.hpp"
#include "uq2/fixedpt.hpp"
#include "uq2/growth.hpp"
#include "uq2/heis.hpp"
#include "uq2/hopf.hpp"
#include "uq2/pairing.hpp"
#include "uq2/suites.hpp"

namespace uq2 {

void RunConfig::validate() const {
  if (!(abs_q > 0.0 && abs_q < 1.0)) throw ConfigError("--q-abs must lie in (0,1)");
  if (!(theta > 0.0 && theta < 1.0)) throw ConfigError("--theta must lie in (0,1)");
  if (l2_max < 2) throw ConfigError("--l2max must be at least 2");
  if (k_min > k_max) throw ConfigError("--kmin must not exceed --kmax");
  if (k_max - k_min < 4) throw ConfigError("k window must span at least 5 values");
  if (m_max < 10) throw ConfigError("--mmax must be at least 10");
  if (fourier_order < 8) throw ConfigError("--fourier-order must be at least 8");
  if (!(tol > 0.0)) throw ConfigError("--tol must be positive");
  if (workers < 1) throw ConfigError("--workers must be positive");
  for (const auto& s : suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw ConfigError("unknown suite '" + s + "'");
}

std::vector<std::pair<std::string, double>> RunConfig::params() const {
  return {{"abs_q", abs_q},  {"theta", theta}, {"l2_max", double(l2_max)},
          {"k_min", double(k_min)}, {"k_max", double(k_max)}, {"m_max", double(m_max)},
          {"fourier_order", double(fourier_order)}, {"tol", tol}, {"seed", double(seed)}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "pw", "heis", "dirac", "fixedpt", "torus-index", "specdim"};
  return names;
}

std::vector<Monomial> witness_test_set() {
  std::vector<Monomial> all = monomials_up_to(2);
  std::erase(all, Monomial{});
  std::stable_sort(all.begin(), all.end(), [](const Monomial& x, const Monomial& y) { return x.degree() < y.degree(); });
  all.resize(20);
  return all;
}

namespace {

void suite_algebra(Report& r, const RunConfig& cfg, const QParam& qp) {
  Algebra alg(qp);
  const int l2_top = std::min(cfg.l2_max, 6);
  double act = 0.0, jac = 0.0;
  for (int l2 = 0; l2 <= l2_top; ++l2)
    for (int i2 = -l2; i2 <= l2; i2 += 2)
      for (int j2 = -l2; j2 <= l2; j2 += 2) {
        AlgebraElement diff = alg.jacobi_form(l2, i2, j2) - alg.matrix_coefficient(l2, i2, j2, 0);
        jac = std::max(jac, diff.max_abs());
        for (int k = -3; k <= 3; ++k)
          for (Gen g : all_gens) act = std::max(act, alg.verify_action(l2, i2, j2, k, g));
      }
  r.check("action_residual", act, "<", 1e-9);
  r.check("jacobi_vs_matrix_coefficient", jac, "<", 1e-9);

  Hopf hopf(alg);
  HopfResiduals h = hopf.check_axioms(4);
  r.check("coassociativity", h.coassociativity, "<", cfg.tol);
  r.check("counit_left", h.counit_left, "<", cfg.tol);
  r.check("counit_right", h.counit_right, "<", cfg.tol);
  r.check("antipode_left", h.antipode_left, "<", cfg.tol);
  r.check("antipode_right", h.antipode_right, "<", cfg.tol);
  r.check("comultiplication_star", h.comultiplication_star, "<", cfg.tol);
  r.info("hopf_monomials", h.monomials);

  double invol = 0.0;
  for (const Monomial& m : monomials_up_to(3)) {
    AlgebraElement x = AlgebraElement::mono(m, cplx(0.3, -1.1));
    invol = std::max(invol, (alg.adjoint(alg.adjoint(x)) - x).max_abs());
  }
  r.check("adjoint_involution", invol, "<", 1e-12);
}

void suite_pw(Report& r, const RunConfig& cfg, const QParam& qp) {
  TruncationWindow w{cfg.l2_max, cfg.k_min, cfg.k_max};
  RelationReport rel = verify_relations_pw(w, qp);
  for (const auto& nr : rel.residuals) r.check("relation_" + nr.name, nr.value, "<", cfg.tol);
  r.info("interior_vectors", rel.vectors);

  PWOp D = build_operator(Gen::D, w, qp);
  double unit = 0.0;
  for (const PWIndex& x : w.indices()) {
    if (x.k <= w.k_min) continue;
    double nrm = 0.0;
    for (const auto& [y, c] : D.column(x)) nrm += std::norm(c);
    unit = std::max(unit, std::abs(std::sqrt(nrm) - 1.0));
  }
  r.check("D_unitary_columns", unit, "<", 1e-14);

  PWOp b = build_operator(Gen::b, w, qp), bs = build_operator(Gen::b_star, w, qp);
  double adj = 0.0;
  for (const PWIndex& x : w.indices()) {
    if (!w.interior(x)) continue;
    for (const auto& [y, c] : b.column(x))
      if (w.interior(y)) {
        cplx back = 0.0;
        for (const auto& [z, d] : bs.column(y))
          if (z == x) back += d;
        adj = std::max(adj, std::abs(back - std::conj(c)));
      }
  }
  r.check("b_star_is_adjoint_of_b", adj, "<", 1e-12);

  RelationReport printed = verify_relations_pw(TruncationWindow{std::min(cfg.l2_max, 6), -6, 6}, qp, Coefficients::printed);
  r.check("printed_coefficients_break_relations", printed.max(), ">", 0.1);
}

void suite_heis(Report& r, const RunConfig&, const QParam& qp) {
  RelationReport rel = relation_residuals_heis(HeisWindow{}, qp);
  for (const auto& nr : rel.residuals) r.check("relation_" + nr.name, nr.value, "<", 1e-13);
  r.info("interior_vectors", rel.vectors);
  HeisSpectrum sp = spectrum_bbstar_heis(HeisWindow{40, -3, 3, -3, 3}, qp);
  r.check("bbstar_level_error", sp.level_error, "<", 1e-9);
  r.check("bbstar_off_diagonal", sp.off_diagonal, "<", 1e-14);
  r.check("top_level_supported_on_n0", sp.top_supported_on_n0, "==", 1);
  r.check("top_level", sp.levels.empty() ? 0.0 : sp.levels.front().value, "==", 1.0);
  TorusCompression tc = torus_generators_on_P(HeisWindow{5, -10, 10, -10, 10}, qp);
  r.check("compressed_rotation_relation", tc.rotation_residual, "<", 1e-13);
  r.check("compressed_unitarity", tc.unitarity_residual, "<", 1e-13);
  double prev = INFINITY, worst = -INFINITY;
  for (int n0 = 0; n0 <= 20; ++n0) {
    double v = compact_difference_profile(n0, qp);
    worst = std::max(worst, v - prev);
    prev = v;
  }
  r.check("compact_difference_increase", worst, "<", 0.0);
}

void suite_dirac(Report& r, const RunConfig& cfg, const QParam& qp) {
  long up = 0, lo = 0;
  for (int n = 4; n <= 32; ++n) {
    const std::int64_t c = eigenvalue_count(n);
    up += c > count_upper_bound(n);
    lo += c < count_lower_bound(n);
  }
  r.check("count_upper_bound_violations", up, "==", 0);
  r.check("count_lower_bound_violations", lo, "==", 0);
  const double slope = count_slope(12, 32);
  r.check("count_slope_min", slope, ">=", 3.7);
  r.check("count_slope_max", slope, "<=", 4.3);

  const int l2_lo = std::max(2, cfg.l2_max);
  TruncationWindow w_lo{l2_lo, cfg.k_min, cfg.k_max}, w_hi{l2_lo + 4, cfg.k_min, cfg.k_max};
  for (Gen g : all_gens) {
    double a = commutator_norm(g, w_lo, qp), b = commutator_norm(g, w_hi, qp);
    r.info(std::string("commutator_norm_") + gen_name(g), b);
    r.check(std::string("commutator_growth_") + gen_name(g), (b - a) / a, "<", 0.01);
  }
  r.check("commutator_norm_D", commutator_norm(Gen::D, w_hi, qp), "==", 1.0);

  EquivarianceResult eq = check_equivariance(w_lo, 100, cfg.seed);
  r.check("equivariance_residual", eq.residual, "<", 1e-14);
  r.check("l_mixing_control", eq.negative_control, ">=", 1.0);

  double wmin = INFINITY;
  for (const Monomial& m : witness_test_set())
    wmin = std::min(wmin, nondegeneracy_witness(AlgebraElement::mono(m), qp).value);
  r.check("witness_min_nonscalar", wmin, ">", 1e-6);
  r.check("witness_scalar", nondegeneracy_witness(AlgebraElement::unit(2.5), qp).value, "==", 0.0);

  EvenTripleReport et = assemble_even_triple(TruncationWindow{6, -6, 6}, qp);
  r.check("grading_anticommutator", et.anticommutator, "<", 1e-14);
  r.check("grading_commutes_with_algebra", et.grading_commutator, "<", 1e-14);
  r.check("dirac_square_residual", et.square_residual, "<", 1e-12);

  ResolventReport rd = resolvent_decay(TruncationWindow{cfg.l2_max, cfg.k_min, cfg.k_max}, {1.0, 0.5, 0.2, 0.1});
  r.check("resolvent_base_bound", rd.base_bound_violation, "<=", 0.0);
  r.check("resolvent_upper_tail", rd.upper_tail_violation, "<=", 0.0);
  r.check("resolvent_lower_tail", rd.lower_tail_violation, "<=", 0.0);
  r.check("tail_equality_cases", rd.lower_equality_iff_i_minus_l && rd.upper_equality_iff_i_plus_l, "==", 1);
  bool decreasing = true;
  for (std::size_t i = 1; i < rd.counts.size(); ++i) decreasing = decreasing && rd.counts[i].second >= rd.counts[i - 1].second;
  r.check("resolvent_counts_monotone", decreasing, "==", 1);
}

void suite_fixedpt(Report& r, const RunConfig& cfg, const QParam& qp) {
  r.check("closed_form_recurrence", closed_form_residual(30, qp), "<", 1e-11);
  r.check("closed_form_overlap", closed_form_overlap(cfg.m_max, qp), ">", 1.0 - 1e-9);
  BlockEigen top = block_eigenpair(0, 0, cfg.m_max, 1.0, qp);
  r.check("top_eigenvalue", std::abs(top.value - 1.0), "<", 1e-12);

  OmegaSet om = omega_detect(12, cfg.m_max, qp);
  r.check("level_0_detected", om.contains(0), "==", 1);
  r.check("block_spectrum_distance", om.spectrum_distance, "<", 1e-9);
  r.info("levels_detected", double(om.levels.size()));

  RecurrenceResult above = solve_recurrence(4.0, 0, 0, cfg.m_max, qp);
  RecurrenceResult off = solve_recurrence(0.4, 0, 0, cfg.m_max, qp);
  RecurrenceResult on = solve_recurrence(0.25, 0, 0, cfg.m_max, qp);
  r.check("nonspectral_4_not_summable", above.summable, "==", 0);
  r.check("nonspectral_0.4_not_summable", off.summable, "==", 0);
  r.check("spectral_0.25_summable", on.summable, "==", 1);

  for (int n_r : {0, 1}) {
    E1ActionReport e = verify_e1_actions(n_r, 3, 3, std::min(cfg.m_max, 40), qp);
    r.check("e1_actions_level_" + std::to_string(n_r), e.max(), "<", 1e-10);
  }
}

void suite_torus(Report& r, const RunConfig& cfg, const QParam& qp) {
  const int M = cfg.fourier_order;
  const TorusElement p = powers_rieffel(cfg.theta, M);
  RieffelGates g = rieffel_gates(p, M);
  r.check("idempotency", g.idempotency, "<", 1e-6);
  r.check("self_adjointness", g.self_adjoint, "<", 1e-6);
  r.check("trace_error", g.trace_error, "<", 1e-8);
  r.info("idempotency_l1", g.idempotency_l1);
  const double ch = chern_number(p);
  r.info("chern_number", ch);
  r.check("chern_integrality", std::abs(ch - std::round(ch)), "<", 1e-5);
  r.check("chern_nonzero", std::abs(std::round(ch)), ">=", 1);
  const int rho = -int(std::round(ch));
  for (int Mi : {M / 2, (3 * M) / 4, M}) {
    IndexResult ir = torus_dirac_index(powers_rieffel(cfg.theta, Mi), Mi, false);
    const std::string tag = "_M" + std::to_string(Mi);
    r.check("torus_index" + tag, ir.index, "==", rho);
    r.check("gap_ratio" + tag, ir.gap_ratio, ">=", 10.0);
    r.check("interior_weight" + tag, ir.interior_weight, ">", 0.5);
  }

  E1Basis basis(qp, std::min(cfg.m_max, 40));
  for (int lvl : {0, 1}) {
    BlockModel bm = block_model(basis, lvl, 5);
    r.check("block_Pb_level_" + std::to_string(lvl), bm.pb_residual, "<", 1e-8);
    r.check("block_PD_level_" + std::to_string(lvl), bm.pd_residual, "<", 1e-8);
  }
  PairingResult pr = pairing_index(basis.omega(), {0, 1}, M / 2, M, cfg.theta);
  r.check("pairing_level_0", pr.per_level[0].index, "==", rho);
  r.check("pairing_level_1", pr.per_level[1].index, "==", 0);
  r.check("pairing_total", pr.total, "==", rho);
  for (std::size_t i = 0; i < pr.per_level.size(); ++i)
    r.check("pairing_gap_level_" + std::to_string(pr.levels[i]), pr.per_level[i].gap_ratio, ">=", 10.0);
  CompactProfile cp = compact_part_profile(basis, 0, 6, 4);
  r.check("compact_part_monotone", cp.monotone, "==", 1);
  r.info("compact_part_outer", cp.norm.back());
}

void suite_specdim(Report& r, const RunConfig&, const QParam& qp) {
  SpecDimEstimate est = spectral_dimension_estimate(default_p_grid(), 10000);
  r.check("threshold_lower", est.lower, ">=", 3.8);
  r.check("threshold_upper", est.upper, "<=", 4.2);
  r.check("bracket_straddles_4", est.lower <= 4.0 && est.upper >= 4.0, "==", 1);
  auto dist = growth_distances(20, qp);
  long bad = 0, missing = 0;
  for (int g1 = 0; g1 <= 20; ++g1)
    for (int g3 = -g1; g3 <= g1; g3 += 2)
      for (int g2 = -(20 - g1); g2 <= 20 - g1; ++g2) {
        GammaIndex gi{g1, g2, g3};
        auto it = dist.find(gi);
        if (it == dist.end()) ++missing;
        else if (it->second > gi.size()) ++bad;
      }
  r.check("path_length_violations", bad, "==", 0);
  r.check("unreachable_labels", missing, "==", 0);
  NormSuprema s = norm_suprema(qp);
  r.check("eps2_ratio", s.d, "==", 1.0);
  r.check("a_ratio_sup", s.a, "<=", std::sqrt(1.0 + qp.abs_q * qp.abs_q) * (1 + 1e-12));
  r.check("b_ratio_sup", s.b, "<=", std::sqrt(2.0) / qp.abs_q);
  r.info("a_ratio_stated_bound", std::sqrt(2.0 * qp.abs_q));
  double worst = 0.0;
  for (int n = 16; n <= 512; ++n)
    worst = std::max(worst, std::abs(double(L_multiplicity(2 * n)) / double(L_multiplicity(n)) / 8.0 - 1.0));
  r.check("L_doubling_ratio", worst, "<", 0.15);
}

}  // namespace

Report run_suite(const std::string& name, const RunConfig& cfg) {
  Report r;
  r.suite = name;
  r.params = cfg.params();
  auto t0 = std::chrono::steady_clock::now();
  try {
    const QParam qp = QParam::make(cfg.abs_q, cfg.theta);
    if (name == "algebra") suite_algebra(r, cfg, qp);
    else if (name == "pw") suite_pw(r, cfg, qp);
    else if (name == "heis") suite_heis(r, cfg, qp);
    else if (name == "dirac") suite_dirac(r, cfg, qp);
    else if (name == "fixedpt") suite_fixedpt(r, cfg, qp);
    else if (name == "torus-index") suite_torus(r, cfg, qp);
    else if (name == "specdim") suite_specdim(r, cfg, qp);
    else throw ConfigError("unknown suite '" + name + "'");
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Report> run_suites(const RunConfig& cfg) {
  const std::vector<std::string> names = cfg.suites.empty() ? suite_names() : cfg.suites;
  std::vector<Report> out(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < names.size();) out[i] = run_suite(names[i], cfg);
  };
  std::vector<std::jthread> pool;
  for (int t = 0; t < std::min<int>(cfg.workers, int(names.size())); ++t) pool.emplace_back(worker);
  pool.clear();
  return out;
}

}  // namespace uq2

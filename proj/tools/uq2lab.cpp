#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "uq2/suites.hpp"

int main(int argc, char** argv) {
  uq2::RunConfig cfg;
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"uq2lab: numerical verification suites for U_q(2)"};
  app.add_option("--q-abs", cfg.abs_q, "modulus of q, in (0,1)");
  app.add_option("--theta", cfg.theta, "q = |q| e^{i pi theta}, theta in (0,1)");
  app.add_option("--l2max", cfg.l2_max, "largest 2l in the Peter-Weyl window");
  app.add_option("--kmin", cfg.k_min, "lowest D-power in the window");
  app.add_option("--kmax", cfg.k_max, "highest D-power in the window");
  app.add_option("--mmax", cfg.m_max, "truncation depth of the bb* blocks");
  app.add_option("--fourier-order", cfg.fourier_order, "Fourier order M of the torus projection");
  app.add_option("--tol", cfg.tol, "residual tolerance for relation and Hopf checks");
  app.add_option("--suite", cfg.suites, "suites to run (default: all)")
      ->check(CLI::IsMember(uq2::suite_names()));
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--out", cfg.out, "directory for the per-suite reports");
  app.add_option("--workers", cfg.workers, "suites run concurrently");

  try {
    app.parse(argc, argv);
    cfg.validate();
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const uq2::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  std::vector<uq2::Report> reports = uq2::run_suites(cfg);

  std::error_code ec;
  std::filesystem::create_directories(cfg.out, ec);
  if (ec) {
    std::cerr << "cannot create " << cfg.out << ": " << ec.message() << "\n";
    return 3;
  }
  for (const auto& r : reports) {
    std::ofstream f(std::filesystem::path(cfg.out) / (r.suite + ".jsonl"), std::ios::binary);
    f << uq2::to_jsonl(r);
  }
  std::cout << uq2::summary_table(reports);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.pass();
  std::cout << (ok ? "all suites passed" : "some suites failed") << "\n";
  return ok ? 0 : 1;
}

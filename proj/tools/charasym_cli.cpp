#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "charasym/errors.hpp"
#include "charasym/harness.hpp"

using charasym::Command;
using charasym::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"Normalized characters of classical groups and their asymptotics"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  RunConfig cfg;
  app.add_option("--precision", cfg.precision_bits, "working precision in bits (default: $CHARASYM_PRECISION or 128)");
  app.add_option("--seed", cfg.seed, "seed for sampling checks");
  app.add_option("-o,--output", cfg.output_path, "write the artifact here instead of stdout");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* eval = app.add_subcommand("eval", "exact normalized character at rational points");
  eval->add_option("--family", cfg.family, "schur, schur_q, symplectic, symplectic_q, jacobi");
  eval->add_option("--lambda", cfg.lambda, "signature, comma separated")->required();
  eval->add_option("--x", cfg.x, "variables (rationals), comma separated")->required()->delimiter(',');
  eval->add_option("--N", cfg.N, "signature length; the signature is padded with zeros");
  eval->add_option("--q", cfg.q, "q for the q-families");
  eval->add_option("--a", cfg.a, "Jacobi a");
  eval->add_option("--b", cfg.b, "Jacobi b");

  auto* asmc = app.add_subcommand("asm", "alternating sign matrices");
  asmc->require_subcommand(1)->fallthrough();
  auto* count = asmc->add_subcommand("count", "number of n x n ASMs");
  count->add_option("--n", cfg.n, "size")->required();

  auto* asympt = app.add_subcommand("asympt", "asymptotic predictions");
  asympt->require_subcommand(1)->fallthrough();
  auto* gue = asympt->add_subcommand("gue", "GUE regime exp(sqrt(N) E h + S h^2/2)");
  gue->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  gue->add_option("--profile", cfg.profile, "zero, halfstair, loop, linear:A or t:f;t:f;...");
  gue->add_option("--h", cfg.h_re, "real part of h");
  gue->add_option("--h-im", cfg.h_im, "imaginary part of h");
  gue->add_option("--N", cfg.N, "signature length")->required();

  auto* suite = app.add_subcommand("suite", "run an acceptance block");
  suite->add_option("name", cfg.suite, "oracles, asymptotics, tilings, asm, loop or characters")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (*eval) cfg.command = Command::Eval;
  if (*count) cfg.command = Command::AsmCount;
  if (*gue) cfg.command = Command::AsymptGue;
  if (*suite) cfg.command = Command::Suite;

  const auto t0 = std::chrono::steady_clock::now();
  int status = 0;
  try {
    const auto out = charasym::run(cfg);
    const std::string text = charasym::render(cfg, out);
    if (cfg.output_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.output_path, std::ios::binary);
      if (!f) throw charasym::ArgumentError("cannot open " + cfg.output_path);
      f << text;
    }
    if (!out.ok) {
      for (const auto& c : out.result["checks"])
        if (!c["pass"].get<bool>())
          std::cerr << "FAIL criterion " << c["criterion"].get<int>() << " (" << c["name"].get<std::string>() << "): "
                    << c["summary"].get<std::string>() << "\n";
      status = 1;
    }
  } catch (const charasym::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const charasym::Error& e) {
    std::cerr << e.kind() << " error: " << e.what() << "\n";
    status = 1;
  }
  // wall time stays out of the artifact so identical runs give identical bytes
  std::cerr << "wall time " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  return status;
}

// Batch CLI over the engine: coefficient tables, certificate suites, model
// documents and k-gon spectra. Exit status: 0 all checks pass, 1 a
// mathematical check failed, 2 usage or configuration error.

#include <iostream>

#include "CLI11.hpp"
#include "dgla/frontend.hpp"

namespace {

void add_common(CLI::App* cmd, dgla::RunConfig& config) {
  std::map<std::string, dgla::RunConfig::Shape> shapes{
      {"triangle", dgla::RunConfig::Shape::triangle},
      {"kgon", dgla::RunConfig::Shape::kgon}};
  std::map<std::string, dgla::RunConfig::Output> outputs{
      {"text", dgla::RunConfig::Output::text}, {"json", dgla::RunConfig::Output::json}};
  cmd->add_option("--shape", config.shape, "cell shape")
      ->transform(CLI::CheckedTransformer(shapes, CLI::ignore_case));
  cmd->add_option("--k", config.k, "number of k-gon edges")->check(CLI::Range(3, 64));
  cmd->add_option("--depth", config.depth, "truncation depth (number of Lie brackets)")
      ->check(CLI::Range(1, 16));
  cmd->add_option("--output", config.output, "report format")
      ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
  cmd->add_option("--seed", config.seed, "seed for the randomized property suites");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact DGLA models of the triangle and k-gons"};
  app.require_subcommand(1);

  dgla::RunConfig coeff_config;
  CLI::App* coeff = app.add_subcommand(
      "coefficients", "Lyndon coordinate tables for the connectors alpha, beta, gamma");
  coeff_config.depth = 4;
  add_common(coeff, coeff_config);
  coeff->add_flag("--universal", coeff_config.universal,
                  "also print gamma as a universal Lie word in (alpha, beta)");

  dgla::RunConfig verify_config;
  verify_config.depth = 5;
  CLI::App* verify = app.add_subcommand("verify", "run the certificate suite");
  add_common(verify, verify_config);
  verify->add_option("--corrupt", verify_config.corrupt,
                     "perturb one element (alpha|beta|gamma|x|q) as a negative control");

  dgla::RunConfig model_config;
  model_config.depth = 4;
  CLI::App* model = app.add_subcommand("model", "emit a model document (JSON)");
  add_common(model, model_config);
  model->add_option("--based", model_config.based, "based variant at a vertex (a|b|c)")
      ->check(CLI::IsMember({"a", "b", "c"}));

  dgla::RunConfig spectrum_config;
  CLI::App* spectrum = app.add_subcommand(
      "kgon-spectrum", "depth-0 subdivision matrix, characteristic polynomial, unit-disc test");
  add_common(spectrum, spectrum_config);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : dgla::kExitUsage;
  }

  try {
    if (coeff->parsed()) return dgla::run_coefficients(coeff_config, std::cout);
    if (verify->parsed()) return dgla::run_verify(verify_config, std::cout);
    if (model->parsed()) return dgla::run_model(model_config, std::cout);
    if (spectrum->parsed()) return dgla::run_kgon_spectrum(spectrum_config, std::cout);
  } catch (const dgla::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return dgla::kExitUsage;
  } catch (const dgla::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return dgla::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return dgla::kExitCheckFailed;
  }
  return dgla::kExitUsage;
}

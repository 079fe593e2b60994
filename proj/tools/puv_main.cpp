#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "puv/errors.hpp"
#include "puv/json_io.hpp"

namespace {

std::string read_payload(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"P(U<V) for quadratic forms in complex Gaussian variates, with the "
               "tableau, bijection and q-series machinery behind the closed forms"};
  app.require_subcommand(1);

  std::string input = "-";

  puv::ProbOptions opts;
  auto* prob = app.add_subcommand("prob", "compute P(U<V) for a variance profile");
  prob->add_option("--method", opts.method, "barett | bezout | schur | mc")
      ->capture_default_str();
  prob->add_option("--backend", opts.backend, "exact | float")->capture_default_str();
  prob->add_option("--samples", opts.samples, "Monte Carlo sample count")
      ->capture_default_str();
  prob->add_option("--seed", opts.seed, "Monte Carlo seed")->capture_default_str();

  auto* identity = app.add_subcommand(
      "identity", "check the q-series identities and the matrix count formula at one (n, t)");
  auto* rsk = app.add_subcommand(
      "rsk", "run the square-filling bijection on a 0/1 matrix, with both constructions");
  auto* schur = app.add_subcommand("schur", "print the bivariate expansion of F for small n");
  auto* count = app.add_subcommand("count", "compare the enumerated filling count with 2^(n^2-1)");
  auto* enumerate = app.add_subcommand(
      "enumerate", "tableau utilities: list fillings, complement a shape, validate a tableau");
  for (CLI::App* sub : {prob, identity, rsk, schur, count, enumerate})
    sub->add_option("--input", input, "payload JSON file, \"-\" for stdin")
        ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    nlohmann::json payload = nlohmann::json::parse(read_payload(input));
    nlohmann::json out;
    if (app.got_subcommand(prob))
      out = puv::run_prob(payload, opts);
    else if (app.got_subcommand(identity))
      out = puv::run_identity(payload);
    else if (app.got_subcommand(rsk))
      out = puv::run_rsk(payload);
    else if (app.got_subcommand(schur))
      out = puv::run_schur(payload);
    else if (app.got_subcommand(count))
      out = puv::run_count(payload);
    else
      out = puv::run_enumerate(payload);
    std::cout << out.dump(2) << "\n";
    return 0;
  } catch (const puv::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

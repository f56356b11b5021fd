#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polycentre/report.hpp"

namespace {

using polycentre::report::Json;

void print_pretty(const Json& doc, double elapsed_ms) {
  std::cout << "operation : " << doc.value("operation", "?") << "\n";
  if (doc.contains("error")) {
    std::cout << "error     : " << doc["error"].get<std::string>() << "\n";
    return;
  }
  std::cout << "seed      : " << doc["seed"] << "\n";
  std::cout << "exact     : " << (doc["exact"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "result    :\n" << doc["result"].dump(2) << "\n";
  if (!doc["witnesses"].empty()) {
    std::cout << "witnesses :\n" << doc["witnesses"].dump(2) << "\n";
  }
  std::cout << "elapsed   : " << elapsed_ms << " ms (wall clock; reports pin "
            << "elapsed_ms to 0 for reproducibility)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "polycentre: exact certificates for gauges, centres of convex sets, "
      "base normed and order unit spaces"};
  app.require_subcommand(1);

  std::string input_path;
  std::string point;
  std::uint64_t seed = 0;
  int samples = 200;
  bool pretty = false;
  bool json_out = false;

  for (const auto& name : polycentre::report::operation_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--input", input_path, "space description (JSON file)")
        ->required();
    sub->add_option("--seed", seed, "seed for randomized batteries");
    sub->add_option("--samples", samples, "sample count for randomized batteries");
    sub->add_option("--point", point, "vector argument as \"p/q,p/q,...\"");
    sub->add_flag("--json", json_out, "emit the JSON report (default)");
    sub->add_flag("--pretty", pretty, "human-readable report with timing");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string operation = app.get_subcommands().front()->get_name();

  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "cannot open input file: " << input_path << "\n";
    return 2;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  polycentre::report::RunOptions options;
  options.seed = seed;
  options.samples = samples;
  if (!point.empty()) options.point = point;

  const auto start = std::chrono::steady_clock::now();
  const auto run =
      polycentre::report::run_on_text(operation, buffer.str(), options);
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                start)
          .count();

  if (pretty && !json_out) {
    print_pretty(run.document, elapsed_ms);
  } else {
    std::cout << run.document.dump(2) << "\n";
  }
  return run.exit_code;
}

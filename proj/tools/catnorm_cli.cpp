#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "catnorm/app/commands.hpp"
#include "catnorm/error.hpp"

using namespace catnorm;

int main(int argc, char** argv) {
  CLI::App app{"catnorm: normalizers, centralizers and distinctive relations in finite models"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "run one computation on a JSON input");
  std::string kind, input, aux;
  compute->add_option("kind", kind, "computation")->required()->check(CLI::IsMember(compute_kinds()));
  compute->add_option("--input", input, "input document")->required();
  compute->add_option("--aux", aux, "second document merged into the input");

  auto* suite = app.add_subcommand("suite", "run verification suites over the built-in catalog");
  SuiteConfig cfg;
  std::string suites;
  std::string out_path;
  suite->add_option("--max-order", cfg.max_order, "catalog order bound")->default_val(16);
  suite->add_option("--suites", suites, "comma-separated suite names")->expected(0, 1);
  suite->add_option("--format", cfg.format, "json or text")->default_val("json");
  suite->add_option("--out", out_path, "output file (default stdout)");
  suite->add_option("--seed", cfg.seed, "seed for sampled suites")->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) {
      auto doc = io::parse_file(input);
      if (!aux.empty()) {
        auto extra = io::parse_file(aux);
        if (!doc.is_object() || !extra.is_object())
          throw Error(ErrorKind::ParseError, "input and aux must be objects");
        doc.update(extra);
      }
      std::cout << io::canonical(cmd_compute(kind, doc)) << "\n";
      return 0;
    }
    cfg.suites = split_list(suites);
    auto result = cmd_suite(cfg);
    if (out_path.empty()) {
      std::cout << result.document;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw Error(ErrorKind::ParseError, out_path + ": cannot write");
      out << result.document;
    }
    return result.ok ? 0 : 1;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvariantViolation ? 1 : 2;
  }
}

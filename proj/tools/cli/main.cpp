#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "fbetti/errors.hpp"

int main(int argc, char** argv) {
  using namespace fbetti::cli;

  CLI::App app{"Frobenius pushforwards and Frobenius Betti numbers of finite CM type rings"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  std::string format_name = "text";
  app.add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  int max_delta = 10;
  int max_i = 4;
  auto* table1 = app.add_subcommand("table1", "Asymptotic invariants s, e_HK, beta_i^F per family");
  table1->add_option("--max-delta", max_delta, "largest delta for scroll:delta rows");
  table1->add_option("--max-i", max_i, "Betti indices 1..n");

  std::string ring;
  std::int64_t p = 0;
  int e = 1;
  std::string route = "both";
  auto* decompose = app.add_subcommand("decompose", "Decompose R^{1/q} into MCM summands");
  decompose->add_option("--ring", ring, "scroll:<delta>, scroll21 or veronese2")->required();
  decompose->add_option("--p", p, "prime characteristic")->required();
  decompose->add_option("--e", e, "Frobenius exponent, q = p^e");
  decompose->add_option("--route", route, "paper, classes or both")->check(CLI::IsMember({"paper", "classes", "both"}));
  decompose->add_option("--max-i", max_i, "Betti indices 0..n");

  std::vector<std::int64_t> q_list;
  std::vector<std::string> suites;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--ring", ring, "scroll:<delta>, scroll21 or veronese2")->required();
  verify->add_option("--q", q_list, "comma-separated prime powers")->required()->delimiter(',');
  verify->add_option("--suite", suites, "counts, iso, relations, syzygy, colength, convergence, betti, all")
      ->delimiter(',');

  for (auto* sub : {table1, decompose, verify}) {
    sub->add_option("--format", format_name, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& ex) {
    return app.exit(ex);
  } catch (const CLI::CallForVersion& ex) {
    return app.exit(ex);
  } catch (const CLI::ParseError& ex) {
    app.exit(ex);
    return kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    ReportRecord record;
    if (*table1) {
      record = cmd_table1(max_delta, max_i);
    } else if (*decompose) {
      record = cmd_decompose(ring, p, e, route, max_i);
    } else {
      record = cmd_verify(ring, q_list, suites);
    }
    std::cout << render(record, format);
    return exit_status(record);
  } catch (const usage_error& ex) {
    std::cerr << "usage error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const fbetti::unsupported_error& ex) {
    std::cerr << "unsupported: " << ex.what() << "\n";
    return 1;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
}

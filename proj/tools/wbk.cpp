#include <iostream>

#include "CLI11.hpp"
#include "wbk/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wbk: finite dual weak braces, their solutions, ideals and series"};

  wbk::Invocation inv;
  std::vector<std::string> inputs, catalogs;
  std::string format = "text";
  std::size_t limit = 0;

  app.add_option("command", inv.command, "command to run")->required()->check(CLI::IsMember(wbk::command_names()));
  app.add_option("argument", inv.argument, "series kind for `series`: right, socle, ann or gamma");
  auto* input_opt = app.add_option("--input", inputs, "structure file");
  auto* catalog_opt = app.add_option("--catalog", catalogs, "catalog entry name");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  auto* limit_opt = app.add_option("--limit", limit, "maximum number of results listed");
  app.add_option("--seed", inv.seed, "seed for random generation");
  app.add_option("--subset", inv.subset, "subset such as 0,2,4");
  app.add_option("--chain", inv.chain, "ascending chain of subsets separated by |");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // Structures are taken in command-line order across --input and --catalog.
  std::size_t next_input = 0, next_catalog = 0;
  for (const CLI::Option* opt : app.parse_order()) {
    if (opt == input_opt) inv.sources.push_back(inputs[next_input++]);
    if (opt == catalog_opt) inv.sources.push_back("catalog:" + catalogs[next_catalog++]);
  }
  if (*limit_opt) inv.limit = limit;

  const auto report = wbk::run(inv);
  std::cout << wbk::render(report, format);
  return report.exit_code();
}

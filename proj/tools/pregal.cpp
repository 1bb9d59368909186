// pregal: command-line front end. One JSON report per invocation on stdout;
// errors as JSON on stderr. Exit codes: 0 ok, 2 domain error, 3 bound hit.

#include <iostream>
#include <map>
#include <memory>

#include "CLI11.hpp"
#include "pregal/cli/commands.hpp"

using namespace pregal;

int main(int argc, char** argv) {
  CLI::App app{"pre-Galois / potentially-Galois analysis of permutation-group models"};
  app.require_subcommand(1);

  struct Bound {
    CLI::App* sub;
    std::map<std::string, std::vector<std::string>> values;
    std::map<std::string, bool> flags;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (const auto& spec : cli::command_specs()) {
    auto b = std::make_unique<Bound>();
    b->sub = app.add_subcommand(spec.name, spec.help);
    for (const auto& o : spec.options) {
      std::string flagname = "--" + o.name;
      if (o.kind == cli::OptionSpec::Flag) {
        b->sub->add_flag(flagname, b->flags[o.name], o.help);
        continue;
      }
      auto* opt = b->sub->add_option(flagname, b->values[o.name], o.help);
      if (o.kind == cli::OptionSpec::Single) opt->expected(1);
      if (o.required) opt->required();
    }
    bound.push_back(std::move(b));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << cli::render({{"error", {{"kind", "UsageError"}, {"message", e.what()}}}});
    return 2;
  }

  cli::Invocation inv;
  for (const auto& b : bound) {
    if (!b->sub->parsed()) continue;
    inv.command = b->sub->get_name();
    for (const auto& [k, v] : b->values)
      if (!v.empty()) inv.options[k] = v;
    for (const auto& [k, on] : b->flags)
      if (on) inv.options[k] = {"true"};
  }

  try {
    std::cout << cli::render(cli::run(inv));
    return 0;
  } catch (const Error& e) {
    std::cerr << cli::render(cli::error_report(e));
    return cli::exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << cli::render({{"error", {{"kind", "InternalError"}, {"message", e.what()}}}});
    return 2;
  }
}

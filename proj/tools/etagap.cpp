#include <iostream>

#include "CLI11.hpp"

#include "etagap/cli.hpp"

int main(int argc, char** argv) {
  etagap::RunConfig config;
  CLI::App app{"Conjugacy class products and the eta invariant in finite groups"};
  app.add_option("command", config.command, "classes | product | verify | reproduce | spectrum | inspect")
      ->required()
      ->check(CLI::IsMember({"classes", "product", "verify", "reproduce", "spectrum", "inspect"}));
  app.add_option("--group", config.group_path, "construction spec, Cayley table or permutation file");
  app.add_flag("--corpus", config.corpus, "use the built-in p-group corpus as the group source");
  app.add_option("--p", config.p, "prime");
  app.add_option("--max-order", config.max_order, "largest corpus group order");
  app.add_option("--cap", config.cap, "full-enumeration order cap")->capture_default_str();
  app.add_option("--a", config.a, "generator word or @role");
  app.add_option("--b", config.b, "generator word or @role");
  app.add_option("--theorem", config.theorem, "a | b | size2");
  app.add_option("--out", config.out_path, "write reports here instead of stdout");
  app.add_option("--format", config.format, "jsonl | csv")->capture_default_str();
  app.add_option("--jobs", config.jobs, "worker threads")->capture_default_str();
  app.add_flag("--timing", config.timing, "record elapsed_ms in reports");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return etagap::run(config, std::cout, std::cerr);
}

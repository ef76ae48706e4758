#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  toricdd::cli::RunConfig config;
  CLI::App app{"Toric double determinantal rings: invariants, generators, facets and checks"};
  app.add_option("command", config.command,
                 "invariants | generators | hilbert | hpoly | facets | word2facet | facet2word | extend | verify")
      ->required();
  app.add_option("m", config.m, "rows of each matrix");
  app.add_option("n", config.n, "columns of each matrix");
  app.add_option("r", config.r, "number of matrices");
  app.add_option("--format", config.format, "text | json | csv (facets: also words | paths)");
  app.add_option("--budget", config.budget, "maximum enumeration count");
  app.add_option("--max-degree", config.max_degree, "largest degree for hilbert");
  app.add_option("--word", config.word, "code word on M, N, R for word2facet");
  app.add_option("--vertices", config.vertices, "vertex list \"(row,col),...\" for facet2word and extend");
  app.add_option("--level", config.level, "verify tier: formulas | complex | groebner");
  app.add_option("--poset-file", config.poset_file, "poset for hilbert and hpoly instead of P_mnr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return toricdd::cli::run(config, std::cout, std::cerr);
}

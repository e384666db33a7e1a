// Writes the knot table consumed by the pipeline: one `name<TAB>pd-code`
// line per knot, covering the constructible families within the crossing
// bound.  Regenerating with the same arguments reproduces the file exactly.
#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "slicekit/families.hpp"

int main(int argc, char** argv) {
  CLI::App app{"generate the knot table used by the pipeline"};
  std::string out = "data/knots_le12.tsv";
  int max_c = 12;
  app.add_option("-o,--out", out, "output path")->capture_default_str();
  app.add_option("-c,--max-crossings", max_c, "largest diagram crossing count")
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  try {
    auto table = slicekit::knot_table(max_c);
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::fprintf(stderr, "cannot open %s for writing\n", out.c_str());
      return 1;
    }
    for (const auto& e : table)
      f << e.name << '\t' << slicekit::to_pd_string(e.diagram) << '\n';
    std::printf("%zu knots with at most %d crossings -> %s\n", table.size(),
                max_c, out.c_str());
  } catch (const slicekit::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rootrel/pipeline.hpp"

namespace {

rootrel::algebra::BigInt parse_big(const std::string& s, const char* what) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  bool ok = i < s.size();
  for (; ok && i < s.size(); ++i)
    ok = std::isdigit(static_cast<unsigned char>(s[i])) != 0;
  if (!ok)
    throw rootrel::RequestError(std::string(what) +
                                " is not a decimal integer: " + s);
  return rootrel::algebra::BigInt(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational linear relations among the conjugate roots of a "
               "monic integer polynomial"};
  app.require_subcommand(1);

  CLI::App* analyze =
      app.add_subcommand("analyze", "analyze a request file");
  std::string input;
  int precision = 0;
  int max_precision = 0;
  std::string den_bound, height_bound, format;
  bool no_oracle = false;
  std::vector<std::string> extra_roots;
  analyze->add_option("input", input, "request JSON file")->required();
  analyze->add_option("--precision", precision, "working decimal digits");
  analyze->add_option("--max-precision", max_precision,
                      "precision escalation cap (decimal digits)");
  analyze->add_option("--den-bound", den_bound,
                      "denominator bound for rational recognition");
  analyze->add_option("--height-bound", height_bound,
                      "coefficient height cap for integer relation search");
  analyze->add_flag("--no-oracle", no_oracle,
                    "skip the independent lattice cross-check");
  analyze->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "table"}));
  analyze->add_option("--root", extra_roots,
                      "extra root expression to analyze (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  namespace pl = rootrel::pipeline;
  try {
    std::ifstream in(input);
    if (!in) throw rootrel::RequestError("cannot open " + input);
    std::stringstream buf;
    buf << in.rdbuf();

    pl::AnalysisRequest req = pl::parse_request(buf.str());
    if (precision > 0) req.options.digits = precision;
    if (max_precision > 0) req.options.max_digits = max_precision;
    if (req.options.max_digits < req.options.digits)
      throw rootrel::RequestError("max precision is below precision");
    if (!den_bound.empty()) {
      req.options.den_bound = parse_big(den_bound, "--den-bound");
      if (req.options.den_bound < 1)
        throw rootrel::RequestError("--den-bound must be positive");
    }
    if (!height_bound.empty()) {
      req.options.height_bound = parse_big(height_bound, "--height-bound");
      if (req.options.height_bound < 2)
        throw rootrel::RequestError("--height-bound must be at least 2");
    }
    if (no_oracle) req.options.oracle = false;
    if (!format.empty()) req.options.format = format;
    for (const std::string& r : extra_roots) req.root_exprs.push_back(r);

    const pl::AnalysisReport rep = pl::run_pipeline(req);
    std::cout << (req.options.format == "table" ? pl::render_table(rep)
                                                : pl::render_json(rep));
    return pl::report_exit_code(rep);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pl::error_exit_code(e);
  }
}

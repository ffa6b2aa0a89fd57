// gcmwb: runs a job file written in the ring/params/run language.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "gcmwb/dispatch.hpp"

namespace {

template <class T>
void from_env(const char* name, std::optional<T>& slot) {
  const char* v = std::getenv(name);
  if (!v || !*v) return;
  try {
    slot = static_cast<T>(std::stoull(v));
  } catch (const std::exception&) {
    throw CLI::ValidationError(std::string(name), std::string("not a nonnegative integer: ") + v);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound workbench for generalized Cohen-Macaulay local rings"};
  std::string input, format = "text";
  gcmwb::Overrides flags;
  app.add_option("--input,input", input, "Job file (default: standard input)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", flags.seed, "Random seed for filter-regular search");
  app.add_option("--cap-trunc", flags.cap_trunc, "Largest truncation power");
  app.add_option("--cap-fit", flags.cap_fit, "Largest n sampled in Hilbert-Samuel fits");
  app.add_option("--horizon", flags.horizon, "Regularity horizon override");
  app.add_option("--threads", flags.threads, "Worker threads");

  gcmwb::Overrides env;
  try {
    from_env("GCMWB_SEED", env.seed);
    from_env("GCMWB_CAP_TRUNC", env.cap_trunc);
    from_env("GCMWB_CAP_FIT", env.cap_fit);
    from_env("GCMWB_HORIZON", env.horizon);
    from_env("GCMWB_THREADS", env.threads);
    if (const char* f = std::getenv("GCMWB_FORMAT"); f && *f) format = f;
    if (const char* f = std::getenv("GCMWB_INPUT"); f && *f) input = f;
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : gcmwb::kExitError;
  }
  if (format != "json" && format != "csv" && format != "text") {
    std::cerr << "unknown format '" << format << "'\n";
    return gcmwb::kExitError;
  }

  gcmwb::Overrides ov = env;
  if (flags.seed) ov.seed = flags.seed;
  if (flags.cap_trunc) ov.cap_trunc = flags.cap_trunc;
  if (flags.cap_fit) ov.cap_fit = flags.cap_fit;
  if (flags.horizon) ov.horizon = flags.horizon;
  if (flags.threads) ov.threads = flags.threads;

  std::string text;
  if (input.empty() || input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "cannot read " << input << "\n";
      return gcmwb::kExitError;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  const auto res = gcmwb::run_text(text, ov, gcmwb::report_format_from_string(format));
  const bool to_err = res.exit_code == gcmwb::kExitError && format == "text";
  (to_err ? std::cerr : std::cout) << res.output;
  return res.exit_code;
}

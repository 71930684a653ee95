// toric-gfan: command-line front end.
//
//   toric-gfan <command> --input job.json [--output out.json] [--field Q|Fp:p]
//              [--override-nnd] [--plot fan.svg]
//
// Exit codes: 0 success, 2 bad input or violated precondition, 1 internal error.

#include "toric_gfan/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace toric_gfan;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io::InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted Groebner fans, Newton non-degeneracy and toric resolutions"};
  std::string command, input, output, field, plot;
  bool override_nnd = false;
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(io::commands()));
  app.add_option("--input,-i", input, "Job document (JSON)");
  app.add_option("--output,-o", output, "Write the result here instead of stdout");
  app.add_option("--field", field, "Override the field: Q or Fp:<p>");
  app.add_flag("--override-nnd", override_nnd, "Resolve even if the ideal is degenerate");
  app.add_option("--plot", plot, "Also write an SVG plot of the fan");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    io::JobDocument doc;
    if (command != "selftest") {
      if (input.empty()) throw io::InputError("--input is required for " + command);
      io::json j;
      try {
        j = io::json::parse(read_file(input));
      } catch (const io::json::parse_error& e) {
        throw io::InputError(input + ": " + e.what());
      }
      std::optional<Field> f;
      if (!field.empty()) f = io::parse_field(field);
      doc = io::parse_job(j, f);
    }
    auto result = io::execute(command, doc, override_nnd, !plot.empty());
    std::string text = result.document.dump(2) + "\n";
    if (output.empty()) std::cout << text;
    else write_file(output, text);
    if (result.svg) {
      if (!plot.empty()) write_file(plot, *result.svg);
      else std::cout << *result.svg;
    }
    if (command == "selftest" && !result.document["selftest"]["ok"].get<bool>()) return 1;
    return 0;
  } catch (const io::json::exception& e) {
    std::cerr << "toric-gfan: input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "toric-gfan: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "toric-gfan: internal error: " << e.what() << "\n";
    return 1;
  }
}

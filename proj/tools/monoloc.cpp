#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "monoloc/errors.hpp"

#ifndef MONOLOC_GOLDEN_DIR
#define MONOLOC_GOLDEN_DIR ""
#endif

using namespace monoloc;
using namespace monoloc::cli;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require_input(in.good(), "cannot read golden file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// First differing line, for the mismatch diagnostic.
std::string first_difference(const std::string& expected, const std::string& actual) {
  std::istringstream e(expected), a(actual);
  std::string le, la;
  for (std::size_t line = 1;; ++line) {
    const bool ge = static_cast<bool>(std::getline(e, le)), ga = static_cast<bool>(std::getline(a, la));
    if (!ge && !ga) return "trailing bytes differ";
    if (!ge || !ga || le != la) {
      return "line " + std::to_string(line) + ": expected '" + (ge ? le : "<eof>") + "', got '" + (ga ? la : "<eof>") + "'";
    }
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Canonical orders, Grothendieck groups and localizability of biadditive operations"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  std::string format = "text";
  std::string golden;
  bool write_golden = false;
  bool timing = false;
  app.add_option("--budget", opts.budget, "Candidate budget for weak localizability")->capture_default_str();
  app.add_option("--samples", opts.samples, "Coefficient sum of sampled elements")->capture_default_str();
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--golden", golden, "Compare the report byte-exactly with this file");
  app.add_flag("--write-golden", write_golden, "Write the report to the golden file instead of comparing");
  app.add_flag("--timing", timing, "Append wall-clock time to the report");

  std::string file, a, b, s, id, category;
  std::vector<std::string> exprs, f_elems;
  bool weak = false, strong = false;
  bool v_main = false, v_fring = false, v_unit = false, v_ws = false;

  auto* order = app.add_subcommand("order", "Canonical order, equivalence and reduced-group images of two elements");
  order->add_option("file", file, "Instance file")->required();
  order->add_option("a", a, "First element")->required();
  order->add_option("b", b, "Second element")->required();

  auto* loc = app.add_subcommand("localizable", "Localizability of an element, or weak/strong localizability");
  loc->add_option("file", file, "Instance file")->required();
  loc->add_option("s", s, "Element to test");
  auto* wf = loc->add_flag("--weak", weak, "Weak localizability");
  auto* sf = loc->add_flag("--strong", strong, "Strong localizability");
  wf->excludes(sf);

  auto* ver = app.add_subcommand("verify", "Check the hypotheses of a theorem, then its conclusion");
  ver->add_option("file", file, "Instance file")->required();
  auto* g1 = ver->add_flag("--main", v_main, "Approximate commutativity and associativity");
  auto* g2 = ver->add_flag("--fring", v_fring, "f-ring theorem");
  auto* g3 = ver->add_flag("--orderunit", v_unit, "Order-unit fast path");
  auto* g4 = ver->add_flag("--weak-strong", v_ws, "Weak implies strong audit");
  for (auto* x : {g1, g2, g3, g4})
    for (auto* y : {g1, g2, g3, g4})
      if (x != y) x->excludes(y);

  auto* ext = app.add_subcommand("extremals", "Extremal positive functionals and multiplicativity tables");
  ext->add_option("file", file, "Instance file")->required();
  ext->add_option("--F", f_elems, "Elements of F (repeat or separate with ';')")->delimiter(';');
  ext->add_option("--s", s, "The distinguished element s of F");

  auto* gro = app.add_subcommand("grothendieck", "Grothendieck group, both reduced groups and the projection");
  gro->add_option("file", file, "Instance file")->required();

  auto* rep = app.add_subcommand("reproduce", "Regenerate a worked example and compare with its golden report");
  rep->add_option("id", id, "Example id")->required();

  auto* sos = app.add_subcommand("sos", "Sums-of-squares membership and Archimedean bounds in Q(x)");
  sos->add_option("exprs", exprs, "Rational functions");
  sos->add_option("--file", file, "Rational-function instance file");
  sos->add_option("--category", category, "Field to categorize (Q or Q(x))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input;
  }

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  if (order->parsed()) {
    result = cmd_order(load_instance(file), a, b);
  } else if (loc->parsed()) {
    const LocalizableMode mode = weak ? LocalizableMode::weak : strong ? LocalizableMode::strong : LocalizableMode::element;
    require_input(mode != LocalizableMode::element || !s.empty(), "give an element or one of --weak, --strong");
    require_input(mode == LocalizableMode::element || s.empty(), "an element cannot be combined with --weak or --strong");
    result = cmd_localizable(load_instance(file), mode, s, opts);
  } else if (ver->parsed()) {
    require_input(v_main || v_fring || v_unit || v_ws, "choose one of --main, --fring, --orderunit, --weak-strong");
    const VerifyMode mode = v_main    ? VerifyMode::main
                            : v_fring ? VerifyMode::fring
                            : v_unit  ? VerifyMode::orderunit
                                      : VerifyMode::weak_strong;
    result = cmd_verify(load_instance(file), mode, opts);
  } else if (ext->parsed()) {
    result = cmd_extremals(load_instance(file), f_elems, s);
  } else if (gro->parsed()) {
    result = cmd_grothendieck(load_instance(file));
  } else if (rep->parsed()) {
    result = cmd_reproduce(id, opts);
    if (golden.empty() && format == "text") {
      const std::string dir = MONOLOC_GOLDEN_DIR;
      if (!dir.empty()) golden = (std::filesystem::path(dir) / (id + ".txt")).string();
    }
  } else if (sos->parsed()) {
    std::optional<Instance> inst;
    if (!file.empty()) inst = load_instance(file);
    require_input(!exprs.empty() || inst, "give rational functions or --file");
    result = cmd_sos(exprs, inst ? &*inst : nullptr, category);
  }
  if (timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    result.report["timing_ms"] = ms;
  }
  const std::string text = render(result.report, format);
  std::cout << text;
  if (!golden.empty()) {
    if (write_golden) {
      std::ofstream out(golden, std::ios::binary);
      require_input(out.good(), "cannot write golden file '" + golden + "'");
      out << text;
      std::cerr << "golden written: " << golden << "\n";
    } else if (std::filesystem::exists(golden)) {
      const std::string expected = read_file(golden);
      if (expected != text) {
        std::cerr << "golden mismatch (" << golden << "): " << first_difference(expected, text) << "\n";
        return exit_refuted;
      }
      std::cerr << "golden match: " << golden << "\n";
    } else {
      std::cerr << "no golden file at " << golden << "\n";
      if (!rep->parsed()) return exit_input;
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const ResourceError& e) {
    std::cerr << "resource budget exceeded: " << e.what() << "\n";
    return exit_resource;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoloc/instance.hpp"
#include "report.hpp"

namespace monoloc::cli {

struct Options {
  unsigned budget = 8;   // weak-localizability candidate budget (generator sums)
  unsigned samples = 3;  // coefficient sum of sampled elements
};

enum class LocalizableMode { element, weak, strong };
enum class VerifyMode { main, fring, orderunit, weak_strong };

CommandResult cmd_order(const Instance& inst, const std::string& a, const std::string& b);
CommandResult cmd_localizable(const Instance& inst, LocalizableMode mode, const std::string& s, const Options& opts);
CommandResult cmd_verify(const Instance& inst, VerifyMode mode, const Options& opts);
/// f: elements of F (defaults to the generators in the carrier plus the unit); s defaults to the unit.
CommandResult cmd_extremals(const Instance& inst, const std::vector<std::string>& f, const std::string& s);
CommandResult cmd_grothendieck(const Instance& inst);
/// Expressions and/or the functions of a rational-function instance; category: "", "Q" or "Q(x)".
CommandResult cmd_sos(const std::vector<std::string>& exprs, const Instance* inst, const std::string& category);

const std::vector<std::string>& reproduction_ids();
/// Throws InputError listing the known ids.
CommandResult cmd_reproduce(const std::string& id, const Options& opts);

}  // namespace monoloc::cli

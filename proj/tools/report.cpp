#include "report.hpp"

#include <sstream>

namespace monoloc::cli {

Json json_of(const Rational& q) { return to_string(q); }

Json json_of(const RatVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json json_of(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

bool flat_array(const Json& j) {
  for (const auto& x : j)
    if (!is_scalar(x)) return false;
  return true;
}

std::string inline_array(const Json& j) {
  std::string s = "[";
  bool first = true;
  for (const auto& x : j) {
    if (!first) s += ", ";
    s += scalar(x);
    first = false;
  }
  return s + "]";
}

void emit(const Json& j, std::size_t indent, std::ostringstream& os);

void emit_value(const std::string& lead, const Json& v, std::size_t indent, std::ostringstream& os) {
  if (is_scalar(v)) {
    os << lead << " " << scalar(v) << "\n";
  } else if (v.is_array() && flat_array(v) && inline_array(v).size() <= 96) {
    os << lead << " " << inline_array(v) << "\n";
  } else if (v.empty()) {
    os << lead << (v.is_array() ? " []" : " {}") << "\n";
  } else {
    os << lead << "\n";
    emit(v, indent + 2, os);
  }
}

void emit(const Json& j, std::size_t indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) emit_value(pad + k + ":", v, indent, os);
    return;
  }
  for (const auto& item : j) {
    if (is_scalar(item) || (item.is_array() && flat_array(item) && inline_array(item).size() <= 96)) {
      os << pad << "- " << (is_scalar(item) ? scalar(item) : inline_array(item)) << "\n";
    } else {
      std::ostringstream inner;
      emit(item, indent + 2, inner);
      std::string body = inner.str();
      // first line goes after the dash
      body.replace(0, indent + 2, pad + "- ");
      os << body;
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::ostringstream os;
  emit(report, 0, os);
  return os.str();
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  return render_text(report);
}

}  // namespace monoloc::cli

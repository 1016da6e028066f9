#include "monoloc/instance.hpp"

#include <fstream>
#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "monoloc/errors.hpp"

namespace monoloc {

const char* to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::finite: return "finite";
    case InstanceKind::lattice: return "lattice";
    case InstanceKind::open_cone: return "open-cone";
    case InstanceKind::lattice_group: return "lattice-group";
    case InstanceKind::rational_function: return "rational-function";
  }
  return "?";
}

const BiadditiveOp& Instance::require_op() const {
  require_input(op.has_value(), "instance '" + name + "' has no [mu] section");
  return *op;
}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> tokens(const std::string& s) {
  std::string t;
  for (char c : s) t += (c == ',' || c == '(' || c == ')' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream in(t);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

class Reader {
 public:
  Reader(std::string_view text, std::string source) : source_(std::move(source)) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t n = 0;
    std::string section;
    while (std::getline(in, raw)) {
      ++n;
      if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
      const std::string t = trim(raw);
      if (t.empty()) continue;
      if (t.front() == '[') {
        if (t.back() != ']') fail(n, "unterminated section header");
        section = trim(t.substr(1, t.size() - 2));
        if (sections_.count(section)) fail(n, "duplicate section [" + section + "]");
        sections_[section];
        section_lines_[section] = n;
        continue;
      }
      const auto colon = t.find(':');
      if (section.empty()) {
        if (colon == std::string::npos) fail(n, "expected 'key: value' or a [section]");
        const std::string key = trim(t.substr(0, colon));
        if (keys_.count(key)) fail(n, "duplicate key '" + key + "'");
        keys_[key] = {n, trim(t.substr(colon + 1))};
        continue;
      }
      sections_[section].push_back({n, t});
    }
  }

  [[noreturn]] void fail(std::size_t line, const std::string& what) const {
    if (line == 0) throw InputError(source_ + ": " + what);
    throw InputError(source_ + ":" + std::to_string(line) + ": " + what);
  }

  template <class F>
  auto at(std::size_t line, F&& f) const -> decltype(f()) {
    try {
      return f();
    } catch (const InputError& e) {
      fail(line, e.what());
    }
  }

  std::optional<Line> key(const std::string& k) {
    used_keys_.insert(k);
    auto it = keys_.find(k);
    if (it == keys_.end()) return std::nullopt;
    return it->second;
  }
  Line require_key(const std::string& k) {
    auto v = key(k);
    if (!v) fail(0, "missing key '" + k + "'");
    return *v;
  }
  const std::vector<Line>* section(const std::string& s) {
    used_sections_.insert(s);
    auto it = sections_.find(s);
    return it == sections_.end() ? nullptr : &it->second;
  }
  const std::vector<Line>& require_section(const std::string& s) {
    auto* v = section(s);
    if (!v) fail(0, "missing section [" + s + "]");
    return *v;
  }
  std::size_t section_line(const std::string& s) const { return section_lines_.at(s); }

  void reject_unused() const {
    for (const auto& [k, v] : keys_)
      if (!used_keys_.count(k)) fail(v.number, "unexpected key '" + k + "' for this kind");
    for (const auto& [s, v] : sections_)
      if (!used_sections_.count(s)) fail(section_lines_.at(s), "unexpected section [" + s + "] for this kind");
  }

  std::size_t require_dim() {
    const Line l = require_key("dim");
    return at(l.number, [&] {
      const Rational d = parse_rational(l.text);
      require_input(d.get_den() == 1 && d >= 1 && d <= 64, "dim must be an integer in [1, 64]");
      return static_cast<std::size_t>(d.get_num().get_ui());
    });
  }

  IntVector int_row(const Line& l, std::size_t dim) const {
    return at(l.number, [&] {
      const auto toks = tokens(l.text);
      require_input(toks.size() == dim, "expected " + std::to_string(dim) + " integers");
      IntVector v;
      for (const auto& t : toks) {
        const Rational q = parse_rational(t);
        require_input(q.get_den() == 1, "'" + t + "' is not an integer");
        v.push_back(q.get_num());
      }
      return v;
    });
  }

 private:
  std::string source_;
  std::map<std::string, Line> keys_;
  std::map<std::string, std::vector<Line>> sections_;
  std::map<std::string, std::size_t> section_lines_;
  std::set<std::string> used_keys_, used_sections_;
};

Tensor parse_tensor(Reader& r, const std::vector<Line>& rows, std::size_t dim) {
  Tensor t(dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& l : rows) {
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) r.fail(l.number, "expected 'i j : v_1 ... v_" + std::to_string(dim) + "'");
    const IntVector idx = r.int_row({l.number, l.text.substr(0, colon)}, 2);
    for (const auto& v : idx)
      if (v < 1 || v > static_cast<long>(dim)) r.fail(l.number, "index out of range 1.." + std::to_string(dim));
    const std::size_t i = idx[0].get_ui() - 1, j = idx[1].get_ui() - 1;
    if (!seen.insert({i, j}).second) r.fail(l.number, "duplicate entry for this index pair");
    const IntVector v = r.int_row({l.number, l.text.substr(colon + 1)}, dim);
    for (std::size_t k = 0; k < dim; ++k) t.at(i, j, k) = v[k];
  }
  return t;
}

Table parse_named_table(Reader& r, const std::vector<Line>& rows, const FiniteMonoid* m,
                        const std::vector<std::string>& names) {
  Table t;
  for (const auto& l : rows) {
    const auto toks = tokens(l.text);
    if (toks.size() != names.size()) r.fail(l.number, "expected " + std::to_string(names.size()) + " entries");
    std::vector<std::size_t> row;
    for (const auto& tok : toks) {
      auto it = std::find(names.begin(), names.end(), tok);
      if (it == names.end()) r.fail(l.number, "unknown element '" + tok + "'");
      row.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    t.push_back(row);
  }
  (void)m;
  if (t.size() != names.size()) r.fail(rows.empty() ? 0 : rows.back().number, "table must have one row per element");
  return t;
}

void check_op(Reader& r, std::size_t line, const BiadditiveOp& op) {
  const ValidationReport v = validate_biadditive(op);
  if (v.valid) return;
  std::string what = "operation is not biadditive";
  if (!v.issues.empty()) what += ": " + v.issues.front();
  r.fail(line, what);
}

}  // namespace

Instance parse_instance(std::string_view text, const std::string& source) {
  Reader r(text, source);
  Instance inst;
  const Line kind = r.require_key("kind");
  if (kind.text == "finite") inst.kind = InstanceKind::finite;
  else if (kind.text == "lattice") inst.kind = InstanceKind::lattice;
  else if (kind.text == "open-cone") inst.kind = InstanceKind::open_cone;
  else if (kind.text == "lattice-group") inst.kind = InstanceKind::lattice_group;
  else if (kind.text == "rational-function") inst.kind = InstanceKind::rational_function;
  else r.fail(kind.number, "unknown kind '" + kind.text + "'");
  if (auto n = r.key("name")) inst.name = n->text;
  else inst.name = source;

  if (inst.kind == InstanceKind::rational_function) {
    const Line f = r.require_key("field");
    if (f.text != "Q" && f.text != "Q(x)") r.fail(f.number, "unsupported field '" + f.text + "'");
    inst.field = f.text;
    if (auto* rows = r.section("functions"))
      for (const auto& l : *rows) inst.functions.push_back(r.at(l.number, [&] { return parse_rational_function(l.text); }));
    r.reject_unused();
    return inst;
  }

  if (inst.kind == InstanceKind::finite) {
    const auto& add_rows = r.require_section("add");
    std::vector<std::string> names;
    if (auto* el = r.section("elements")) {
      if (el->size() != 1) r.fail(r.section_line("elements"), "[elements] takes a single line of names");
      names = tokens(el->front().text);
      std::set<std::string> uniq(names.begin(), names.end());
      if (uniq.size() != names.size()) r.fail(el->front().number, "duplicate element name");
    } else {
      for (std::size_t i = 0; i < add_rows.size(); ++i) names.push_back(std::to_string(i));
    }
    const Table add = parse_named_table(r, add_rows, nullptr, names);
    auto m = r.at(r.section_line("add"), [&] { return FiniteMonoid(add, names); });
    inst.carrier = std::make_shared<const MonoidInstance>(std::move(m));
    if (auto* mu = r.section("mu")) {
      Table t = parse_named_table(r, *mu, nullptr, names);
      inst.op = BiadditiveOp::from_table(inst.carrier, std::move(t));
      check_op(r, r.section_line("mu"), *inst.op);
    }
  } else if (inst.kind == InstanceKind::lattice) {
    const std::size_t dim = r.require_dim();
    std::vector<IntVector> gens;
    for (const auto& l : r.require_section("generators")) gens.push_back(r.int_row(l, dim));
    inst.carrier = std::make_shared<const MonoidInstance>(
        r.at(r.section_line("generators"), [&] { return LatticeMonoid(dim, gens); }));
    if (auto* mu = r.section("mu")) {
      inst.op = BiadditiveOp::from_tensor(inst.carrier, parse_tensor(r, *mu, dim));
      check_op(r, r.section_line("mu"), *inst.op);
    }
  } else if (inst.kind == InstanceKind::open_cone) {
    const std::size_t dim = r.require_dim();
    std::vector<IntVector> gens, open;
    for (const auto& l : r.require_section("cone")) gens.push_back(r.int_row(l, dim));
    if (auto* o = r.section("open"))
      for (const auto& l : *o) open.push_back(r.int_row(l, dim));
    const std::size_t line = r.section_line("cone");
    auto cone = r.at(line, [&] { return RationalCone::from_generators(gens, dim); });
    inst.carrier = std::make_shared<const MonoidInstance>(
        r.at(r.section("open") ? r.section_line("open") : line, [&] { return OpenConeMonoid(cone, open); }));
    if (auto* mu = r.section("mu")) {
      inst.op = BiadditiveOp::from_tensor(inst.carrier, parse_tensor(r, *mu, dim));
      check_op(r, r.section_line("mu"), *inst.op);
    }
  } else {
    const std::size_t dim = r.require_dim();
    FRingCandidate cand;
    cand.group.dim = dim;
    if (auto s = r.key("scalars")) {
      if (s->text == "integer") cand.group.scalars = ScalarKind::integer;
      else if (s->text == "rational") cand.group.scalars = ScalarKind::rational;
      else r.fail(s->number, "scalars must be integer or rational");
    }
    const auto& mu = r.require_section("mu");
    cand.mu = parse_tensor(r, mu, dim);
    inst.carrier = positive_cone_carrier(cand.group);
    if (cand.is_positive()) {
      inst.op = BiadditiveOp::from_tensor(inst.carrier, cand.mu);
      check_op(r, r.section_line("mu"), *inst.op);
    }
    inst.fring = std::move(cand);
  }
  if (auto u = r.key("unit")) inst.unit = r.at(u->number, [&] { return inst.carrier->parse(u->text); });
  r.reject_unused();
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  require_input(in.good(), "cannot read instance file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str(), path);
}

}  // namespace monoloc

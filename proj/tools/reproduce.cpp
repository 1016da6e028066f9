#include <algorithm>
#include <cstdint>
#include <random>

#include "commands.hpp"
#include "monoloc/corpus.hpp"
#include "monoloc/enumerate.hpp"
#include "monoloc/errors.hpp"
#include "monoloc/formallyreal.hpp"
#include "monoloc/latticeorder.hpp"
#include "monoloc/localizability.hpp"

namespace monoloc::cli {

namespace {

constexpr std::uint32_t approx_seed = 20240607;
constexpr std::size_t approx_pairs = 50;

CommandResult intro_free_monoid(const Options&) {
  CommandResult r;
  r.report["example"] = "intro-free-monoid";
  r.report["claim"] = "every unital biadditive operation on a truncated free monoid is elementwise multiplication";
  Json rows = Json::array();
  bool ok = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    const TruncatedFree tf = truncated_free_monoid(n, 2);
    const auto carrier = corpus::finite(tf.monoid);
    EnumerationOptions eo;
    eo.unit = tf.all_ones();
    EnumerationStats stats;
    const auto ops = enumerate_biadditive_ops(carrier, eo, &stats);
    bool elementwise = ops.size() == 1;
    for (const auto& op : ops)
      for (std::size_t a = 0; a < tf.points.size(); ++a)
        for (std::size_t b = 0; b < tf.points.size(); ++b) {
          std::vector<unsigned> p(n);
          for (std::size_t i = 0; i < n; ++i) p[i] = std::min(2u, tf.points[a][i] * tf.points[b][i]);
          if (op.table()[a][b] != tf.index_of(p)) elementwise = false;
        }
    ok = ok && elementwise;
    Json j;
    j["n"] = n;
    j["elements"] = tf.points.size();
    j["generators"] = stats.generators;
    j["additive_maps"] = stats.homomorphisms;
    j["unital_operations"] = ops.size();
    j["elementwise"] = elementwise;
    rows.push_back(j);
  }
  r.report["truncations"] = rows;
  r.report["status"] = ok ? "pass" : "fail";
  r.exit_code = ok ? exit_pass : exit_refuted;
  return r;
}

CommandResult open_cone_approx(const Options&) {
  CommandResult r;
  r.report["example"] = "open-cone-approx";
  r.report["carrier"] = "{(x, y) : x > 0} with 0";
  r.report["claim"] = "approx((x, y), (x', y')) iff x = x'";
  r.report["seed"] = approx_seed;
  const auto m = corpus::open_half_plane();
  std::mt19937 gen(approx_seed);
  auto draw = [&](std::uint32_t lo, std::uint32_t span) { return static_cast<long>(lo + gen() % span); };
  auto coord = [&](bool positive) {
    const long den = draw(1, 4);
    const long num = positive ? draw(1, 12) : draw(0, 25) - 12;
    return make_rational(num, den);
  };
  Json rows = Json::array();
  std::size_t agree = 0, equivalent = 0;
  for (std::size_t i = 0; i < approx_pairs; ++i) {
    const Rational x = coord(true), y = coord(false);
    const Rational x2 = (gen() % 2 == 0) ? x : coord(true);
    const Rational y2 = coord(false);
    const MonoidElement a = MonoidElement::vector({x, y}), b = MonoidElement::vector({x2, y2});
    const bool eq = m->approx(a, b);
    const bool expected = x == x2;
    agree += eq == expected ? 1 : 0;
    equivalent += eq ? 1 : 0;
    rows.push_back(m->format(a) + " ~ " + m->format(b) + ": " + (eq ? "true" : "false"));
  }
  r.report["pairs"] = rows;
  r.report["equivalent_pairs"] = equivalent;
  r.report["agreeing_with_first_coordinate"] = agree;
  const bool ok = agree == approx_pairs;
  r.report["status"] = ok ? "pass" : "fail";
  r.exit_code = ok ? exit_pass : exit_refuted;
  return r;
}

CommandResult matrix_not_localizable(const Options& opts) {
  CommandResult r;
  r.report["example"] = "matrix-not-localizable";
  r.report["carrier"] = "2x2 matrices over N0, coordinates (m11, m12, m21, m22), matrix product";
  const BiadditiveOp op = corpus::nonnegative_matrices();
  const MonoidInstance& m = op.carrier();
  WeakOptions w;
  w.budget = opts.budget;
  const auto weak = is_weakly_localizable(op, w);
  r.report["weak"] = {{"verdict", to_string(weak.verdict)}, {"scope", to_string(weak.scope)}, {"note", weak.note}};
  bool ok = weak.verdict == Verdict::no;
  Json rows = Json::array();
  // e is the antidiagonal matrix; each a below is e plus an element of M
  const std::vector<RatVector> above_e = {{0, 1, 1, 0}, {1, 1, 1, 1}, {0, 2, 1, 0}, {1, 1, 1, 0}, {2, 3, 1, 1}};
  r.report["e"] = m.format(MonoidElement::vector({0, 1, 1, 0}));
  for (const auto& v : above_e) {
    require_internal(m.leq(MonoidElement::vector({0, 1, 1, 0}), MonoidElement::vector(v)), "matrix is not above e");
    const MonoidElement a = MonoidElement::vector(v);
    const auto lv = is_left_localizable(op, a);
    Json j;
    j["a"] = m.format(a);
    j["left_localizable"] = to_string(lv.verdict);
    if (lv.witness) {
      const bool valid = witness_is_valid(op, a, *lv.witness, lv.op_side);
      j["witness_a"] = m.format(lv.witness->a);
      j["witness_b"] = m.format(lv.witness->b);
      j["revalidated"] = valid;
      ok = ok && valid;
    }
    ok = ok && lv.verdict == Verdict::no && lv.witness.has_value();
    rows.push_back(j);
  }
  r.report["elements_above_e"] = rows;
  r.report["status"] = ok ? "pass" : "fail";
  r.exit_code = ok ? exit_pass : exit_refuted;
  return r;
}

CommandResult almost_fring(const Options&) {
  CommandResult r;
  r.report["example"] = "almost-fring";
  r.report["ring"] = "Q^3 as functions on {0, 1/2, 1}, mu(a, b) = a(0) b(0) + a(1) b(1) as a constant";
  const AlmostFRingReport a = almost_fring_counterexample();
  r.report["axiom"] = {{"checked", a.axiom_checked}, {"violations", a.axiom_violations.size()}};
  r.report["archimedean"] = {{"checked", a.archimedean_checked}, {"violations", a.archimedean_violations.size()}};
  Json assoc;
  assoc["checked"] = a.associativity.checked;
  if (a.associativity.counterexample) {
    const auto& t = *a.associativity.counterexample;
    assoc["triple"] = Json::array({to_string(t[0]), to_string(t[1]), to_string(t[2])});
    assoc["mu(mu(a,b),c)"] = to_string(a.mu.apply(a.mu.apply(t[0], t[1]), t[2]));
    assoc["mu(a,mu(b,c))"] = to_string(a.mu.apply(t[0], a.mu.apply(t[1], t[2])));
  }
  r.report["associativity"] = assoc;
  r.report["commutativity"] = {{"checked", a.commutativity.checked},
                               {"counterexample", a.commutativity.counterexample ? "found" : "none"}};
  r.report["triple (1,0,0), (1,0,1), (0,0,1)"] = a.quoted_triple_associative ? "associative" : "not associative";
  const bool ok = a.axiom_violations.empty() && a.archimedean_violations.empty() &&
                  a.associativity.counterexample.has_value() && !a.commutativity.counterexample.has_value();
  r.report["status"] = ok ? "pass" : "fail";
  r.exit_code = ok ? exit_pass : exit_refuted;
  return r;
}

CommandResult rational_function_category(const Options&) {
  CommandResult r;
  r.report["example"] = "rational-function-category";
  r.report["criterion"] = "f is a sum of squares in Q(x) iff f >= 0 wherever defined (Pourchet)";
  const std::vector<std::string> texts = {"0", "x", "x^2", "x^2 + 1", "(x^4+3)/(x^2+1)", "(x^2+1)/(x^2+2)",
                                          "x^3 - x", "1/(x^2+1)", "(x^2-2)^2 + 5/2", "(3x^4 + 7)/(x^2 + 1/2)"};
  std::vector<RationalFunction> samples;
  for (const auto& t : texts) samples.push_back(parse_rational_function(t));
  bool ok = true;
  auto section = [&](const std::string& field, const std::vector<RationalFunction>& s) {
    const CategoryReport c = categorize(field, s);
    Json j;
    j["field"] = c.field;
    j["minus_one_excluded"] = c.minus_one_excluded;
    Json ev = Json::array();
    for (const auto& [name, h] : c.evidence) {
      Json e;
      e["f"] = name;
      e["k"] = to_string(h.k);
      e["witness"] = to_string(h.witness);
      e["f_minus_k_at_witness"] = to_string(h.witness_value);
      ev.push_back(e);
      ok = ok && h.witness_value < 0 && h.k >= 1;
    }
    j["evidence"] = ev;
    j["category"] = c.category;
    ok = ok && c.minus_one_excluded && c.category == 3;
    return j;
  };
  std::vector<RationalFunction> constants = {RationalFunction::constant(0), RationalFunction::constant(Rational(7, 2)),
                                             RationalFunction::constant(-5)};
  r.report["fields"] = Json::array({section("Q", constants), section("Q(x)", samples)});
  r.report["status"] = ok ? "pass" : "fail";
  r.exit_code = ok ? exit_pass : exit_refuted;
  return r;
}

}  // namespace

const std::vector<std::string>& reproduction_ids() {
  static const std::vector<std::string> ids = {"intro-free-monoid", "open-cone-approx", "matrix-not-localizable",
                                               "almost-fring", "rational-function-category"};
  return ids;
}

CommandResult cmd_reproduce(const std::string& id, const Options& opts) {
  CommandResult r;
  if (id == "intro-free-monoid") r = intro_free_monoid(opts);
  else if (id == "open-cone-approx") r = open_cone_approx(opts);
  else if (id == "matrix-not-localizable") r = matrix_not_localizable(opts);
  else if (id == "almost-fring") r = almost_fring(opts);
  else if (id == "rational-function-category") r = rational_function_category(opts);
  else {
    std::string known;
    for (const auto& k : reproduction_ids()) known += (known.empty() ? "" : ", ") + k;
    throw InputError("unknown example id '" + id + "' (known: " + known + ")");
  }
  Json out;
  out["command"] = "reproduce";
  for (auto& [k, v] : r.report.items()) out[k] = v;
  r.report = std::move(out);
  return r;
}

}  // namespace monoloc::cli

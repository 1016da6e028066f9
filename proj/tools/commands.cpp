#include "commands.hpp"

#include <algorithm>

#include "monoloc/errors.hpp"
#include "monoloc/functionals.hpp"
#include "monoloc/grothendieck.hpp"
#include "monoloc/localizability.hpp"

namespace monoloc::cli {

namespace {

const MonoidInstance& require_carrier(const Instance& inst) {
  require_input(inst.carrier != nullptr, "instance '" + inst.name + "' has no monoid carrier");
  return *inst.carrier;
}

Json header(const std::string& command, const Instance& inst) {
  Json j;
  j["command"] = command;
  j["instance"] = inst.name;
  j["kind"] = to_string(inst.kind);
  return j;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::yes: return exit_pass;
    case Verdict::no: return exit_refuted;
    case Verdict::unknown: return exit_resource;
  }
  return exit_pass;
}

int exit_for(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
    case CheckStatus::observed: return exit_pass;
    case CheckStatus::fail: return exit_refuted;
    case CheckStatus::refused: return exit_refused;
  }
  return exit_pass;
}

Json verdict_json(const BiadditiveOp& op, const LocalizabilityVerdict& v) {
  const MonoidInstance& m = op.carrier();
  Json j;
  j["element"] = m.format(v.subject);
  j["verdict"] = to_string(v.verdict);
  j["scope"] = to_string(v.scope);
  if (v.witness) {
    Json w;
    w["side"] = v.op_side ? "opposite" : "left";
    w["a"] = m.format(v.witness->a);
    w["b"] = m.format(v.witness->b);
    w["mu_s_a_plus_a"] = m.format(m.add(v.op_side ? op.apply(v.witness->a, v.subject) : op.apply(v.subject, v.witness->a),
                                         v.witness->a));
    w["mu_s_b_plus_b"] = m.format(m.add(v.op_side ? op.apply(v.witness->b, v.subject) : op.apply(v.subject, v.witness->b),
                                         v.witness->b));
    w["revalidated"] = witness_is_valid(op, v.subject, *v.witness, v.op_side);
    j["witness"] = w;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json weak_json(const MonoidInstance& m, const WeakCertificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["scope"] = to_string(c.scope);
  Json cert = Json::array();
  for (const auto& [a, s] : c.certificate) cert.push_back(m.format(a) + " <= " + m.format(s));
  j["certificate"] = cert;
  if (c.refuted) j["refuted"] = m.format(*c.refuted);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json strong_json(const BiadditiveOp& op, const StrongVerdict& v) {
  Json j;
  j["verdict"] = to_string(v.verdict);
  j["scope"] = to_string(v.scope);
  j["checked"] = v.checked;
  if (v.counterexample) j["counterexample"] = verdict_json(op, *v.counterexample);
  return j;
}

Json ledger_entry(const std::string& hypothesis, const std::string& status, const std::string& detail = "") {
  Json j;
  j["hypothesis"] = hypothesis;
  j["status"] = status;
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

std::string weak_status(const WeakCertificate& c) {
  if (c.verdict == Verdict::no) return "failed";
  if (c.verdict == Verdict::unknown) return "unverified";
  return c.scope == Scope::sampled ? "sampled" : "checked";
}

Json theorem_json(const TheoremReport& t) {
  Json j;
  j["status"] = to_string(t.status);
  j["pairs"] = t.pairs;
  j["triples"] = t.triples;
  j["approx_commutativity_failures"] = t.commutativity_failure_count;
  j["approx_associativity_failures"] = t.associativity_failure_count;
  if (!t.commutativity_failures.empty()) j["commutativity_examples"] = t.commutativity_failures;
  if (!t.associativity_failures.empty()) j["associativity_examples"] = t.associativity_failures;
  j["exactly_commutative"] = t.exact_commutative;
  j["exactly_associative"] = t.exact_associative;
  if (t.first_inexact) j["first_inexact"] = *t.first_inexact;
  return j;
}

Json triple_json(const std::array<RatVector, 3>& t) {
  Json j = Json::array();
  for (const auto& v : t) j.push_back(to_string(v));
  return j;
}

Json search_json(const TripleSearch& s) {
  Json j;
  j["checked"] = s.checked;
  j["counterexample"] = s.counterexample ? triple_json(*s.counterexample) : Json(nullptr);
  return j;
}

}  // namespace

CommandResult cmd_order(const Instance& inst, const std::string& a_text, const std::string& b_text) {
  const MonoidInstance& m = require_carrier(inst);
  const MonoidElement a = m.parse(a_text), b = m.parse(b_text);
  CommandResult r;
  r.report = header("order", inst);
  r.report["a"] = m.format(a);
  r.report["b"] = m.format(b);
  const bool ab = m.leq(a, b), ba = m.leq(b, a), eq = m.approx(a, b);
  r.report["leq"] = {{"a_leq_b", ab}, {"b_leq_a", ba}};
  r.report["approx"] = eq;
  const auto first = ReducedGroup::build(inst.carrier, 1);
  const auto second = ReducedGroup::build(inst.carrier, 2);
  const auto fa = first->iota(a), fb = first->iota(b);
  const auto sa = second->iota(a), sb = second->iota(b);
  const bool fab = first->leq(fa, fb), fba = first->leq(fb, fa), seq = second->equal(sa, sb);
  r.report["first_reduced"] = {{"a", first->format(fa)}, {"b", first->format(fb)}, {"a_leq_b", fab}, {"b_leq_a", fba}};
  r.report["second_reduced"] = {{"a", second->format(sa)}, {"b", second->format(sb)}, {"equal", seq}};
  const bool consistent = ab == fab && ba == fba && eq == seq;
  r.report["consistent"] = consistent;
  r.exit_code = consistent ? exit_pass : exit_refuted;
  return r;
}

CommandResult cmd_localizable(const Instance& inst, LocalizableMode mode, const std::string& s, const Options& opts) {
  const BiadditiveOp& op = inst.require_op();
  const MonoidInstance& m = op.carrier();
  CommandResult r;
  r.report = header("localizable", inst);
  switch (mode) {
    case LocalizableMode::element: {
      const MonoidElement e = m.parse(s);
      const auto left = is_left_localizable(op, e);
      const auto full = is_localizable(op, e);
      r.report["mode"] = "element";
      r.report["left"] = verdict_json(op, left);
      r.report["two_sided"] = verdict_json(op, full);
      r.exit_code = exit_for(full.verdict);
      break;
    }
    case LocalizableMode::weak: {
      WeakOptions w;
      w.budget = opts.budget;
      w.query_sum = opts.samples;
      const auto c = is_weakly_localizable(op, w);
      r.report["mode"] = "weak";
      r.report["budget"] = opts.budget;
      r.report["weak"] = weak_json(m, c);
      r.exit_code = exit_for(c.verdict);
      break;
    }
    case LocalizableMode::strong: {
      const auto v = is_strongly_localizable(op, opts.samples);
      r.report["mode"] = "strong";
      r.report["strong"] = strong_json(op, v);
      r.exit_code = exit_for(v.verdict);
      break;
    }
  }
  return r;
}

CommandResult cmd_verify(const Instance& inst, VerifyMode mode, const Options& opts) {
  CommandResult r;
  r.report = header("verify", inst);
  WeakOptions w;
  w.budget = opts.budget;
  w.query_sum = opts.samples;
  switch (mode) {
    case VerifyMode::main: {
      const BiadditiveOp& op = inst.require_op();
      SampleOptions so;
      so.max_sum = opts.samples;
      so.weak = w;
      const TheoremReport t = verify_theorem_main(op, so);
      r.report["mode"] = "main";
      r.report["hypotheses"] = Json::array({ledger_entry("biadditive", "checked"),
                                            ledger_entry("weakly localizable", weak_status(t.hypothesis),
                                                         t.hypothesis.note)});
      r.report["weak"] = weak_json(op.carrier(), t.hypothesis);
      r.report["result"] = theorem_json(t);
      r.exit_code = exit_for(t.status);
      break;
    }
    case VerifyMode::fring: {
      require_input(inst.fring.has_value(), "--fring needs a lattice-group instance");
      const FRingReport f = fring_strong_localizability(*inst.fring);
      r.report["mode"] = "fring";
      Json ledger = Json::array();
      ledger.push_back(ledger_entry("positive tensor", inst.fring->is_positive() ? "checked" : "failed"));
      if (inst.fring->is_positive()) {
        const std::string fs = f.fring.verdict == Verdict::yes ? "checked" : "failed";
        ledger.push_back(ledger_entry("extended f-ring", fs,
                                      "basis reduction, box of " + std::to_string(f.fring.box_checked) + " triples"));
      }
      r.report["hypotheses"] = ledger;
      r.report["status"] = to_string(f.status);
      if (!f.reason.empty()) r.report["reason"] = f.reason;
      if (f.fring.witness) r.report["fring_witness"] = triple_json(*f.fring.witness);
      if (f.strong && inst.op) r.report["strong"] = strong_json(*inst.op, *f.strong);
      if (f.theorem) r.report["theorem"] = theorem_json(*f.theorem);
      if (f.status != CheckStatus::refused) {
        r.report["exact_associativity"] = search_json(f.associativity);
        r.report["exact_commutativity"] = search_json(f.commutativity);
      }
      r.exit_code = exit_for(f.status);
      break;
    }
    case VerifyMode::orderunit: {
      const BiadditiveOp& op = inst.require_op();
      require_input(inst.unit.has_value(), "--orderunit needs 'unit:' in the instance");
      const OrderUnitResult o = order_unit_fast_path(op, *inst.unit, w);
      const MonoidInstance& m = op.carrier();
      r.report["mode"] = "orderunit";
      r.report["unit"] = m.format(*inst.unit);
      Json ledger = Json::array();
      if (o.applied) {
        ledger.push_back(ledger_entry("two-sided unit", "checked", "on every generator"));
        ledger.push_back(ledger_entry("order unit", "checked", "every generator is below a multiple"));
      } else {
        ledger.push_back(ledger_entry("unit and order unit", "failed", o.refusal));
      }
      r.report["hypotheses"] = ledger;
      r.report["status"] = o.applied ? "pass" : "refused";
      r.report["weak"] = weak_json(m, o.certificate);
      r.exit_code = o.applied ? exit_pass : exit_refused;
      break;
    }
    case VerifyMode::weak_strong: {
      const BiadditiveOp& op = inst.require_op();
      const AuditReport a = weak_implies_strong_audit(op, w);
      r.report["mode"] = "weak-strong";
      r.report["status"] = to_string(a.status);
      if (!a.reason.empty()) r.report["reason"] = a.reason;
      r.report["weak"] = weak_json(op.carrier(), a.weak);
      if (a.strong) r.report["strong"] = strong_json(op, *a.strong);
      switch (a.status) {
        case AuditStatus::confirmed: r.exit_code = exit_pass; break;
        case AuditStatus::discrepancy: r.exit_code = exit_refuted; break;
        default: r.exit_code = exit_refused;
      }
      break;
    }
  }
  return r;
}

CommandResult cmd_extremals(const Instance& inst, const std::vector<std::string>& f_text, const std::string& s_text) {
  const BiadditiveOp& op = inst.require_op();
  const MonoidInstance& m = op.carrier();
  std::vector<MonoidElement> f;
  for (const auto& t : f_text) f.push_back(m.parse(t));
  if (f.empty()) {
    for (const auto& g : m.generators())
      if (m.contains(g)) f.push_back(g);
    if (inst.unit && std::find(f.begin(), f.end(), *inst.unit) == f.end()) f.push_back(*inst.unit);
  }
  require_input(!f.empty(), "F is empty");
  MonoidElement s;
  if (!s_text.empty()) s = m.parse(s_text);
  else if (inst.unit) s = *inst.unit;
  else s = f.front();
  if (std::find(f.begin(), f.end(), s) == f.end()) f.push_back(s);

  const ProductSubgroup p = product_subgroup(op, f, s);
  CommandResult r;
  r.report = header("extremals", inst);
  Json fj = Json::array();
  for (const auto& x : p.f) fj.push_back(m.format(x));
  r.report["F"] = fj;
  r.report["s"] = m.format(p.s());
  r.report["rank_H"] = p.h.rank();
  const auto phis = positive_functionals(p.h);
  Json list = Json::array();
  for (const auto& phi : phis) {
    Json j;
    j["phi"] = to_string(phi);
    j["extremal"] = is_extremal(p.h, phi);
    Json values = Json::array();
    for (const auto& x : p.f) values.push_back(m.format(x) + " -> " + to_string(phi(p.h, p.image(x))));
    j["values"] = values;
    const auto left = check_mult_identity(op, p, phi, false);
    const auto right = check_mult_identity(op, p, phi, true);
    auto identity = [](const MultIdentityReport& rep) {
      Json k;
      k["checked"] = rep.checked;
      k["holds"] = rep.holds();
      if (!rep.precondition_failures.empty()) k["preconditions"] = rep.precondition_failures;
      if (!rep.violations.empty()) k["violations"] = rep.violations;
      return k;
    };
    j["identity"] = identity(left);
    j["identity_opposite"] = identity(right);
    const auto n = normalize_multiplicative(op, p, phi);
    Json nj;
    nj["case"] = to_string(n.kind);
    if (n.kind == NormalizationCase::normalized) {
      nj["psi"] = to_string(n.psi);
      nj["multiplicative"] = n.multiplicative;
      if (!n.failures.empty()) nj["failures"] = n.failures;
    }
    j["normalization"] = nj;
    list.push_back(j);
  }
  r.report["functionals"] = list;
  if (phis.empty()) r.report["note"] = "only the zero functional is positive on H";
  return r;
}

CommandResult cmd_grothendieck(const Instance& inst) {
  const MonoidInstance& m = require_carrier(inst);
  const auto g = GrothGroup::build(inst.carrier);
  const auto first = ReducedGroup::build(g, 1), second = ReducedGroup::build(g, 2);
  const Pi12 pi = pi12(first, second);
  CommandResult r;
  r.report = header("grothendieck", inst);
  std::vector<MonoidElement> gens;
  if (m.kind() == MonoidKind::finite) {
    gens = m.sample_elements(0);
  } else {
    // conic generators outside an open carrier are shown shifted by a member generator
    const auto all = m.generators();
    for (const auto& x : all) {
      if (m.contains(x)) {
        gens.push_back(x);
        continue;
      }
      for (const auto& y : all)
        if (m.contains(y) && m.contains(m.add(x, y))) {
          gens.push_back(m.add(x, y));
          break;
        }
    }
  }
  if (m.kind() == MonoidKind::finite) {
    r.report["groth"] = {{"order", g->group().size()}, {"invariant_factors", json_of(g->group().invariant_factors())}};
    auto reduced = [&](const ReducedGroup& q) {
      Json j;
      j["order"] = q.size();
      j["invariant_factors"] = json_of(q.group().invariant_factors());
      std::size_t pos = 0;
      for (bool b : q.positive_classes()) pos += b ? 1 : 0;
      j["positive_classes"] = pos;
      return j;
    };
    r.report["first_reduced"] = reduced(*first);
    r.report["second_reduced"] = reduced(*second);
  } else {
    Json gj;
    if (m.kind() == MonoidKind::lattice) {
      gj["rank"] = g->lattice().rank();
      Json basis = Json::array();
      for (const auto& b : g->lattice().basis()) basis.push_back(to_string(b));
      gj["basis"] = basis;
    } else {
      gj["dimension"] = g->span().dimension();
    }
    r.report["groth"] = gj;
    auto reduced = [&](const ReducedGroup& q) {
      Json j;
      j["rank"] = q.rank();
      Json kernel = Json::array();
      for (const auto& k : q.quotient().kernel_basis()) kernel.push_back(to_string(k));
      j["kernel"] = kernel;
      if (q.rank() > 0) {
        Json facets = Json::array(), rays = Json::array();
        for (const auto& f : q.positive_cone().facets()) facets.push_back(to_string(f));
        for (const auto& v : q.positive_cone().conic_generators()) rays.push_back(to_string(v));
        j["positive_cone_facets"] = facets;
        j["positive_cone_generators"] = rays;
        Json strict = Json::array();
        for (const auto& s : q.strict_normals()) strict.push_back(to_string(s));
        j["strict_normals"] = strict;
      }
      return j;
    };
    r.report["first_reduced"] = reduced(*first);
    r.report["second_reduced"] = reduced(*second);
  }
  Json images = Json::array();
  for (const auto& x : gens) {
    Json j;
    j["element"] = m.format(x);
    j["first"] = first->format(first->iota(x));
    j["second"] = second->format(second->iota(x));
    images.push_back(j);
  }
  r.report["generator_images"] = images;
  Json pj;
  if (m.kind() != MonoidKind::finite) {
    Json rows = Json::array();
    for (const auto& row : pi.matrix) rows.push_back(to_string(row));
    pj["matrix"] = rows;
  }
  pj["triangle_commutes"] = pi.triangle;
  pj["surjective"] = pi.surjective;
  pj["injective"] = pi.injective;
  r.report["pi12"] = pj;
  r.exit_code = pi.triangle ? exit_pass : exit_refuted;
  return r;
}

CommandResult cmd_sos(const std::vector<std::string>& exprs, const Instance* inst, const std::string& category) {
  std::vector<std::pair<std::string, RationalFunction>> fs;
  for (const auto& e : exprs) fs.emplace_back(e, parse_rational_function(e));
  if (inst) {
    require_input(inst->kind == InstanceKind::rational_function, "sos --file needs a rational-function instance");
    for (const auto& f : inst->functions) fs.emplace_back(to_string(f), f);
  }
  CommandResult r;
  r.report["command"] = "sos";
  if (inst) r.report["instance"] = inst->name;
  r.report["criterion"] =
      "f is a sum of squares in Q(x) iff f >= 0 wherever defined (Pourchet); decided by square-free parts and Sturm counts";
  Json list = Json::array();
  for (const auto& [text, f] : fs) {
    Json j;
    j["f"] = to_string(f);
    const auto v = is_sos_membership(f);
    j["member"] = v.member;
    if (!v.member) {
      j["witness"] = to_string(*v.witness);
      j["value"] = to_string(*v.witness_value);
    }
    const auto k = theorem_skew_hypothesis(f);
    j["least_k"] = to_string(k.k);
    j["k_witness"] = to_string(k.witness);
    j["k_value"] = to_string(k.witness_value);
    j["k_search_bound"] = to_string(k.search_bound);
    list.push_back(j);
  }
  r.report["functions"] = list;
  std::string field = category;
  if (field.empty() && inst) field = inst->field;
  if (!field.empty()) {
    std::vector<RationalFunction> samples;
    for (const auto& [text, f] : fs) samples.push_back(f);
    const CategoryReport c = categorize(field, samples);
    Json cj;
    cj["field"] = c.field;
    cj["category"] = c.category;
    cj["minus_one_excluded"] = c.minus_one_excluded;
    cj["note"] = c.note;
    Json ev = Json::array();
    for (const auto& [name, h] : c.evidence) ev.push_back(name + ": k = " + to_string(h.k) + " at x = " + to_string(h.witness));
    cj["evidence"] = ev;
    r.report["category"] = cj;
  }
  return r;
}

}  // namespace monoloc::cli

#include <gtest/gtest.h>

#include "commands.hpp"
#include "monoloc/errors.hpp"
#include "monoloc/instance.hpp"
#include "report.hpp"

using namespace monoloc;
using namespace monoloc::cli;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_instance(text, "t.inst");
  } catch (const InputError& e) {
    return e.what();
  }
  return "no error";
}

const char* free2 = R"(kind: lattice
name: free2
dim: 2
unit: (1, 1)
[generators]
1 0
0 1
[mu]
1 1 : 1 0
2 2 : 0 1
)";

}  // namespace

TEST(Instance, ParsesEveryKind) {
  const Instance lat = parse_instance(free2);
  EXPECT_EQ(lat.kind, InstanceKind::lattice);
  ASSERT_TRUE(lat.op);
  EXPECT_EQ(lat.op->tensor(), Tensor::elementwise(2));
  EXPECT_EQ(lat.carrier->format(*lat.unit), "(1, 1)");

  const Instance fin = parse_instance(R"(kind: finite
[elements]
0 a
[add]
0 a
a 0
[mu]
0 0
0 a
)");
  EXPECT_EQ(fin.carrier->finite().size(), 2u);
  EXPECT_EQ(fin.op->table()[1][1], 1u);

  const Instance open = parse_instance(R"(kind: open-cone
dim: 2
[cone]
1 0
0 1
0 -1
[open]
1 0
)");
  EXPECT_FALSE(open.op);
  EXPECT_FALSE(open.carrier->contains(MonoidElement::vector({0, 1})));
  EXPECT_TRUE(open.carrier->contains(MonoidElement::vector({1, -7})));

  const Instance grp = parse_instance("kind: lattice-group\ndim: 2\nscalars: rational\n[mu]\n1 1 : 1 0\n");
  ASSERT_TRUE(grp.fring);
  EXPECT_EQ(grp.fring->group.scalars, ScalarKind::rational);

  const Instance rf = parse_instance("kind: rational-function\nfield: Q(x)\n[functions]\nx^2 + 1\n1/x\n");
  EXPECT_EQ(rf.functions.size(), 2u);
  EXPECT_FALSE(rf.carrier);
}

TEST(Instance, LocatedDiagnostics) {
  EXPECT_NE(error_of("kind: lattice\ndim: 2\n[generators]\n1 0 3\n").find("t.inst:4:"), std::string::npos);
  EXPECT_NE(error_of("kind: torus\n").find("t.inst:1: unknown kind"), std::string::npos);
  EXPECT_NE(error_of("dim: 2\n").find("missing key 'kind'"), std::string::npos);
  EXPECT_NE(error_of("kind: lattice\ndim: 2\n[generators]\n1 0\n[mu]\n3 1 : 1 0\n").find("t.inst:6: index out of range"),
            std::string::npos);
  // mu((1,0),(1,0)) = (-1, 0) leaves the monoid
  EXPECT_NE(error_of("kind: lattice\ndim: 2\n[generators]\n1 0\n0 1\n[mu]\n1 1 : -1 0\n").find("not biadditive"),
            std::string::npos);
  EXPECT_NE(error_of("kind: finite\n[add]\n0 1\n1 1\n[cone]\n1\n").find("t.inst:5: unexpected section"),
            std::string::npos);
  EXPECT_NE(error_of("kind: rational-function\nfield: Q(x)\n[functions]\nx + * 2\n").find("t.inst:4: column 5"),
            std::string::npos);
  EXPECT_NE(error_of("kind: lattice\ndim: 2\nunit: (1, 1, 1)\n[generators]\n1 0\n").find("t.inst:3:"), std::string::npos);
  EXPECT_NE(error_of("kind: open-cone\ndim: 2\n[cone]\n1 0\n0 1\n[open]\n1 1\n").find("not a facet normal"),
            std::string::npos);
  EXPECT_THROW(load_instance("/nonexistent/file.inst"), InputError);
}

TEST(Report, TextRendering) {
  Json j;
  j["a"] = 1;
  j["b"] = Json::array({"x", "y"});
  j["c"] = {{"d", true}};
  j["e"] = Json::array({Json{{"f", "1/2"}, {"g", nullptr}}});
  j["h"] = Json::array();
  EXPECT_EQ(render_text(j), "a: 1\nb: [x, y]\nc:\n  d: true\ne:\n  - f: 1/2\n    g: none\nh: []\n");
  EXPECT_EQ(render(j, "json").substr(0, 11), "{\n  \"a\": 1,");
}

TEST(Commands, ExitCodes) {
  const Instance lat = parse_instance(free2);
  Options opts;
  EXPECT_EQ(cmd_order(lat, "(1,0)", "(1,2)").exit_code, exit_pass);
  EXPECT_EQ(cmd_localizable(lat, LocalizableMode::weak, "", opts).exit_code, exit_pass);
  EXPECT_EQ(cmd_verify(lat, VerifyMode::main, opts).exit_code, exit_pass);
  EXPECT_EQ(cmd_verify(lat, VerifyMode::orderunit, opts).exit_code, exit_pass);
  EXPECT_THROW(cmd_verify(lat, VerifyMode::fring, opts), InputError);
  EXPECT_THROW(cmd_order(lat, "(1/2, 0)", "(1,2)"), InputError);

  const auto r = cmd_verify(lat, VerifyMode::main, opts).report;
  // a pass is backed by a ledger whose entries are all checked
  for (const auto& h : r["hypotheses"]) EXPECT_EQ(h["status"], "checked");

  const auto ext = cmd_extremals(lat, {}, "").report;
  ASSERT_EQ(ext["functionals"].size(), 2u);
  for (const auto& f : ext["functionals"]) {
    EXPECT_EQ(f["normalization"]["multiplicative"], true);
    EXPECT_EQ(f["identity"]["holds"], true);
  }
}

TEST(Commands, ReproductionsAreDeterministic) {
  Options opts;
  for (const auto& id : reproduction_ids()) {
    const auto a = cmd_reproduce(id, opts), b = cmd_reproduce(id, opts);
    EXPECT_EQ(a.exit_code, exit_pass) << id;
    EXPECT_EQ(render_text(a.report), render_text(b.report)) << id;
    EXPECT_EQ(a.report["status"], "pass") << id;
  }
  EXPECT_THROW(cmd_reproduce("nope", opts), InputError);
}

TEST(Commands, Sos) {
  const auto r = cmd_sos({"x", "x^2"}, nullptr, "Q(x)").report;
  EXPECT_EQ(r["functions"][0]["member"], false);
  EXPECT_EQ(r["functions"][0]["witness"], "-1");
  EXPECT_EQ(r["functions"][1]["least_k"], "1");
  EXPECT_EQ(r["category"]["category"], 3);
  EXPECT_THROW(cmd_sos({"x"}, nullptr, "quaternions"), InputError);
}

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "inns/io/build.hpp"
#include "inns/io/document.hpp"
#include "inns/io/run.hpp"

using namespace inns::io;

namespace {

std::string data_file(const std::string& name) {
  std::ifstream in(std::string(INNS_TEST_DATA_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kCorpus[] = {"embedded_point.inns", "cuspnode.fam", "node.crv", "tacnode.crv", "node_swapped.crv",
                         "three_lines.fam", "conic_line.fam", "two_planes.fam", "d4_planes.fam",
                         "node_product.fam", "ideals.inns", "planar.inns", "bad_decomposition.inns"};

Command command(CommandKind kind, std::vector<std::string> files) {
  Command c;
  c.kind = kind;
  c.files = std::move(files);
  return c;
}

}  // namespace

TEST_CASE("statements") {
  auto doc = parse_document("ring R = (x,y,z), ds;\nideal Q = z, x^3, y^5;\nbranch b1 = param(t^2, t^3, 0);\n");
  REQUIRE(doc.ideals.size() == 1);
  CHECK(doc.ideals[0].generators.size() == 3);
  REQUIRE(doc.branches.size() == 1);
  CHECK(doc.branches[0].components.size() == 3);
  CHECK(doc.branches[0].components[1].to_string() == "t^3");
}

TEST_CASE("ideal references are spliced") {
  auto doc = parse_document("ring R = (x,y), ds; ideal A = x; poly f = y^2; ideal B = A, f, x*y;");
  REQUIRE(doc.ideals.size() == 2);
  CHECK(doc.ideals[1].generators.size() == 3);
  CHECK(doc.ideals[1].generators[1].to_string() == "y^2");
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_document("ring R = (x,y), ds;\nideal bad = x +;\n");
    FAIL("expected a parse error");
  } catch (const inns::io::ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 16);
  }
  CHECK_THROWS_WITH_AS(parse_document("ring R = (x,y), ds; ideal A = x, q;"), doctest::Contains("q"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document("ring R = (x,y), ds; branch b = param(t, t^2, 0);"),
                       doctest::Contains("arity"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document("ring R = (x,y), ds; presentation X { component A = x : branch nope; }"),
                       doctest::Contains("unknown branch"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document("ring R = (x,y,t), ds; family F { parameter t; parameter x; }"),
                       doctest::Contains("exactly one parameter"), ParseError);
  CHECK_THROWS_WITH_AS(parse_document("ring R = (x,y), ds; ideal x = y;"), doctest::Contains("clashes"), ParseError);
  CHECK_THROWS_AS(parse_document("ideal A = x;"), ParseError);
  CHECK_THROWS_AS(parse_document("ring R = (x,y), lp;"), ParseError);
  CHECK_THROWS_AS(parse_document("ring R = (x,y,t), ds; family F { component P = x; central Q : branches 1; }"),
                  ParseError);
}

TEST_CASE("parse after print is the identity on the corpus") {
  for (const char* name : kCorpus) {
    CAPTURE(name);
    auto doc = parse_document(data_file(name));
    auto text = print_document(doc);
    auto again = parse_document(text);
    CHECK(again == doc);
    CHECK(print_document(again) == text);
  }
}

TEST_CASE("report on the embedded point curve") {
  auto docs = std::vector<Document>{parse_document(data_file("embedded_point.inns"))};
  auto rep = run_command(docs, command(CommandKind::Report, {"embedded_point.inns"}));
  CHECK(rep.exit_code == kExitOk);
  REQUIRE(rep.reports.size() == 2);
  CHECK(rep.reports[0].report.epsilon == 6);
  CHECK(rep.reports[0].report.delta == -3);
  CHECK(rep.reports[1].report.vdim_embedded == 16);
  auto text = render_text(rep);
  CHECK(text.find("epsilon = 6") != std::string::npos);
  CHECK(text.find("delta = -3") != std::string::npos);
}

TEST_CASE("JSON reports round-trip and are deterministic") {
  auto docs = std::vector<Document>{parse_document(data_file("d4_planes.fam"))};
  auto cmd = command(CommandKind::Family, {"d4_planes.fam"});
  auto a = run_command(docs, cmd);
  auto b = run_command(docs, cmd);
  REQUIRE(a.exit_code == kExitOk);
  auto text = to_json_text(a);
  CHECK(text == to_json_text(b));
  CHECK(to_json_text(report_from_json_text(text)) == text);

  auto docs2 = std::vector<Document>{parse_document(data_file("embedded_point.inns"))};
  auto rep = run_command(docs2, command(CommandKind::Report, {"embedded_point.inns"}));
  auto back = report_from_json_text(to_json_text(rep));
  CHECK(back.reports == rep.reports);
  auto j = nlohmann::json::parse(to_json_text(rep));
  CHECK(j.is_object());
  CHECK(j.begin().key() == "command");
}

TEST_CASE("exit codes") {
  auto bad = std::vector<Document>{parse_document(data_file("bad_decomposition.inns"))};
  auto rep = run_command(bad, command(CommandKind::Report, {"bad"}));
  CHECK(rep.exit_code == kExitVerification);
  CHECK_FALSE(rep.verification.empty());

  auto cusp = parse_document(data_file("cuspnode.fam"));
  cusp.families[0].central.clear();
  auto under = run_command({cusp}, command(CommandKind::Family, {"cusp"}));
  CHECK(under.exit_code == kExitInput);

  auto missing = run_files(command(CommandKind::Report, {"/nonexistent/file.inns"}));
  CHECK(missing.exit_code == kExitInput);

  auto none = run_command({parse_document("ring R = (x), ds;")}, command(CommandKind::Family, {"x"}));
  CHECK(none.exit_code == kExitInput);
}

TEST_CASE("family and equising commands") {
  auto fam = run_command({parse_document(data_file("cuspnode.fam"))}, command(CommandKind::Family, {"c"}));
  REQUIRE(fam.families.size() == 1);
  CHECK(render_text(fam).find("equinormalizable: true") != std::string::npos);

  auto eq = run_command({parse_document(data_file("node.crv")), parse_document(data_file("tacnode.crv"))},
                        command(CommandKind::Equising, {"a", "b"}));
  REQUIRE(eq.equising);
  CHECK_FALSE(eq.equising->equivalent);
  CHECK(render_text(eq).find("equivalent: false") != std::string::npos);

  Command samples = command(CommandKind::Family, {"c"});
  samples.options.samples = std::vector<inns::kernel::Rational>{2, 3};
  auto s = run_command({parse_document(data_file("cuspnode.fam"))}, samples);
  REQUIRE(s.families.size() == 1);
  CHECK(s.families[0].report.generic.parameter == 2);
}

TEST_CASE("kernel commands") {
  auto doc = parse_document(data_file("ideals.inns"));
  Command c = command(CommandKind::Kernel, {"ideals.inns"});
  c.kernel_op = KernelOp::Vdim;
  auto v = run_command({doc}, c);
  REQUIRE(v.kernel.size() == 3);
  CHECK_FALSE(v.kernel[0].value.has_value());
  CHECK(v.kernel[2].value == 15);
  c.kernel_op = KernelOp::Dim;
  auto d = run_command({doc}, c);
  CHECK(d.kernel[0].value == 2);
  CHECK(d.kernel[1].value == 1);
  CHECK(d.kernel[2].value == 0);
  c.kernel_op = KernelOp::Std;
  auto s = run_command({doc}, c);
  CHECK(s.kernel[2].basis.size() == 3);
}

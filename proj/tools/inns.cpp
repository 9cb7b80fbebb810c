#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "inns/io/expression.hpp"
#include "inns/io/run.hpp"

namespace {

std::vector<inns::kernel::Rational> parse_samples(const std::string& text) {
  std::vector<inns::kernel::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto q = inns::io::parse_rational(item);
    if (q == 0) throw std::invalid_argument("samples must be nonzero");
    out.push_back(q);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of isolated non-normal singularities and their families"};
  app.require_subcommand(1);
  bool json = false;
  int precision = inns::branch::kDefaultPrecision;
  int max_retries = 2;
  std::string samples;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--precision", precision, "branch series precision")->check(CLI::PositiveNumber);
  app.add_option("--samples", samples, "generic parameter values, e.g. 1,1/2,-1/3");
  app.add_option("--max-retries", max_retries, "precision doublings before giving up")->check(CLI::NonNegativeNumber);

  inns::io::Command cmd;
  std::string file;
  std::vector<std::string> pair;
  std::string op;

  auto* report = app.add_subcommand("report", "invariants of each presentation");
  report->add_option("file", file)->required();
  auto* family = app.add_subcommand("family", "family verdicts");
  family->add_option("file", file)->required();
  auto* equising = app.add_subcommand("equising", "Zariski equivalence of two curves");
  equising->add_option("files", pair)->required()->expected(2);
  auto* kernel = app.add_subcommand("kernel", "standard bases, vdim, dimension, intersection");
  kernel->add_option("operation", op)->required()->check(CLI::IsMember({"std", "vdim", "dim", "intersect"}));
  kernel->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : inns::io::kExitInput;
  }

  if (*report) cmd.kind = inns::io::CommandKind::Report;
  if (*family) cmd.kind = inns::io::CommandKind::Family;
  if (*equising) cmd.kind = inns::io::CommandKind::Equising;
  if (*kernel) {
    cmd.kind = inns::io::CommandKind::Kernel;
    cmd.kernel_op = op == "std"    ? inns::io::KernelOp::Std
                    : op == "vdim" ? inns::io::KernelOp::Vdim
                    : op == "dim"  ? inns::io::KernelOp::Dim
                                   : inns::io::KernelOp::Intersect;
  }
  cmd.files = *equising ? pair : std::vector<std::string>{file};
  cmd.options.precision = precision;
  cmd.options.max_retries = max_retries;
  if (!samples.empty()) {
    try {
      cmd.options.samples = parse_samples(samples);
    } catch (const std::exception& e) {
      std::cerr << "error: --samples: " << e.what() << "\n";
      return inns::io::kExitInput;
    }
  }

  auto rep = inns::io::run_files(cmd);
  std::cout << (json ? inns::io::to_json_text(rep) : inns::io::render_text(rep));
  if (json && rep.error) std::cerr << "error: " << *rep.error << "\n";
  return rep.exit_code;
}

#include "inns/io/run.hpp"

#include <fstream>
#include <sstream>

#include "inns/io/build.hpp"

namespace inns::io {

namespace {

const char* kernel_op_name(KernelOp op) {
  switch (op) {
    case KernelOp::Std: return "std";
    case KernelOp::Vdim: return "vdim";
    case KernelOp::Dim: return "dim";
    case KernelOp::Intersect: return "intersect";
  }
  return "?";
}

void run_report(const Document& doc, const Command& cmd, ReportDocument& out) {
  invariants::Options opts;
  opts.max_precision_retries = cmd.options.max_retries;
  for (const auto& decl : doc.presentations) {
    auto p = make_presentation(doc, decl, cmd.options.precision);
    auto rep = invariants::invariant_report(p, opts);
    for (const auto& w : rep.warnings) out.warnings.push_back(decl.name + ": " + w);
    out.reports.push_back({decl.name, std::move(rep)});
  }
  for (const auto& poly : doc.polys) {
    PlaneCurveSummary s{poly.name, poly.value.to_string(), std::nullopt, std::nullopt};
    auto f = poly.value.in_ring(local_ring(doc));
    try {
      s.milnor = invariants::milnor_number_jacobian(f);
      s.tjurina = invariants::tjurina_number(f);
    } catch (const std::domain_error& e) {
      out.warnings.push_back(poly.name + ": " + e.what());
    }
    out.plane_curves.push_back(std::move(s));
  }
  if (doc.presentations.empty() && doc.polys.empty()) {
    throw std::invalid_argument("nothing to report: no presentation or poly declared");
  }
}

void run_family(const Document& doc, const Command& cmd, ReportDocument& out) {
  if (doc.families.empty()) throw std::invalid_argument("no family declared");
  family::Options opts;
  opts.invariant_options.max_precision_retries = cmd.options.max_retries;
  opts.samples = cmd.options.samples;
  for (const auto& decl : doc.families) {
    auto rep = family::family_report(make_family(doc, decl), opts);
    for (const auto& w : rep.warnings) out.warnings.push_back(decl.name + ": " + w);
    out.families.push_back({decl.name, std::move(rep)});
  }
}

void run_equising(const std::vector<Document>& docs, const Command& cmd, ReportDocument& out) {
  if (docs.size() != 2) throw std::invalid_argument("equising needs two curve files");
  EquisingSummary s;
  s.first = equising::zariski_type(curve_branches(docs[0], cmd.options.precision));
  s.second = equising::zariski_type(curve_branches(docs[1], cmd.options.precision));
  s.equivalent = s.first == s.second;
  out.equising = std::move(s);
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

void run_kernel(const Document& doc, const Command& cmd, ReportDocument& out) {
  if (doc.ideals.empty()) throw std::invalid_argument("no ideal declared");
  const auto& R = doc.ring_ptr;
  std::vector<kernel::Ideal> ideals;
  for (const auto& d : doc.ideals) ideals.emplace_back(R, d.generators);
  const std::string op = kernel_op_name(cmd.kernel_op);
  if (cmd.kernel_op == KernelOp::Intersect) {
    std::string name;
    for (const auto& d : doc.ideals) name += (name.empty() ? "" : " cap ") + d.name;
    out.kernel.push_back({name, op, strings(kernel::ideal_intersection(ideals).generators()), std::nullopt});
    return;
  }
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    KernelEntry e{doc.ideals[i].name, op, {}, std::nullopt};
    switch (cmd.kernel_op) {
      case KernelOp::Std: e.basis = strings(ideals[i].standard_basis().elements()); break;
      case KernelOp::Vdim: e.value = kernel::vdim(ideals[i]); break;
      case KernelOp::Dim: e.value = kernel::krull_dim(ideals[i]); break;
      case KernelOp::Intersect: break;
    }
    out.kernel.push_back(std::move(e));
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
std::string opt_text(const std::optional<T>& v, const char* none = "n/a") {
  if (!v) return none;
  std::ostringstream os;
  if constexpr (std::is_same_v<T, bool>) {
    os << (*v ? "true" : "false");
  } else {
    os << *v;
  }
  return os.str();
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

void render_fibre(std::ostream& os, const char* label, const family::FibreInvariants& f) {
  os << "  " << label << " (t = " << f.parameter.get_str() << "): delta = " << f.delta
     << ", epsilon = " << f.epsilon << ", r = " << f.r << ", r' = " << f.r_prime << ", mu = " << f.mu
     << ", mt = " << opt_text(f.mt) << "\n";
  if (f.points.size() > 1 || f.isolated_points > 0) {
    for (const auto& p : f.points) {
      os << "    at " << p.point << ": delta = " << p.report.delta << ", mu = " << p.report.mu << "\n";
    }
    if (f.isolated_points) os << "    isolated points: " << f.isolated_points << "\n";
  }
}

}  // namespace

std::string command_echo(const Command& cmd) {
  std::string s;
  switch (cmd.kind) {
    case CommandKind::Report: s = "report"; break;
    case CommandKind::Family: s = "family"; break;
    case CommandKind::Equising: s = "equising"; break;
    case CommandKind::Kernel: s = std::string("kernel ") + kernel_op_name(cmd.kernel_op); break;
  }
  for (const auto& f : cmd.files) s += " " + f;
  return s;
}

ReportDocument run_command(const std::vector<Document>& docs, const Command& cmd) {
  ReportDocument out;
  out.command = command_echo(cmd);
  auto fail = [&](int code, const std::string& msg) {
    out.exit_code = code;
    out.error = msg;
  };
  try {
    if (docs.empty()) throw std::invalid_argument("no input document");
    switch (cmd.kind) {
      case CommandKind::Report: run_report(docs.front(), cmd, out); break;
      case CommandKind::Family: run_family(docs.front(), cmd, out); break;
      case CommandKind::Equising: run_equising(docs, cmd, out); break;
      case CommandKind::Kernel: run_kernel(docs.front(), cmd, out); break;
    }
  } catch (const invariants::VerificationError& e) {
    out.verification = e.record().checks;
    fail(kExitVerification, e.what());
  } catch (const invariants::UnderdeterminedError& e) {
    fail(kExitInput, e.what());
  } catch (const invariants::ConsistencyError& e) {
    fail(kExitVerification, e.what());
  } catch (const family::FamilyError& e) {
    fail(kExitVerification, e.what());
  } catch (const kernel::QuotientError& e) {
    fail(kExitVerification, e.what());
  } catch (const branch::BranchError& e) {
    fail(kExitVerification, e.what());
  } catch (const branch::PrecisionError& e) {
    fail(kExitVerification, e.what());
  } catch (const std::invalid_argument& e) {
    fail(kExitInput, e.what());
  }
  return out;
}

ReportDocument run_files(const Command& cmd) {
  std::vector<Document> docs;
  for (const auto& path : cmd.files) {
    try {
      docs.push_back(parse_document(read_file(path)));
    } catch (const ParseError& e) {
      ReportDocument out;
      out.command = command_echo(cmd);
      out.exit_code = kExitInput;
      out.error = path + ":" + e.what();
      return out;
    } catch (const std::invalid_argument& e) {
      ReportDocument out;
      out.command = command_echo(cmd);
      out.exit_code = kExitInput;
      out.error = e.what();
      return out;
    }
  }
  return run_command(docs, cmd);
}

std::string render_text(const ReportDocument& rep) {
  std::ostringstream os;
  os << "command: " << rep.command << "\n";
  for (const auto& [name, r] : rep.reports) {
    os << "presentation " << name << "\n";
    os << "  dimension = " << r.dimension << "\n";
    os << "  epsilon = " << r.epsilon << " (embedded route " << opt_text(r.epsilon_embedded_route)
       << ", quotient route " << opt_text(r.epsilon_quotient_route) << ")\n";
    if (r.vdim_embedded) {
      os << "  vdim(Q) = " << *r.vdim_embedded << ", vdim(I>0 + Q) = " << opt_text(r.vdim_reduced_plus_embedded)
         << "\n";
    }
    os << "  delta(X>0) = " << r.delta_positive << "\n";
    os << "  delta = " << r.delta << "\n";
    os << "  r = " << r.r << ", r' = " << r.r_prime << ", mu = " << r.mu << ", mt = " << opt_text(r.mt) << "\n";
    for (const auto& c : r.components) {
      os << "  component " << c.name << ": delta = " << c.delta << ", branches = " << c.branch_count << " ("
         << c.source << ")\n";
    }
  }
  for (const auto& c : rep.plane_curves) {
    os << "poly " << c.name << " = " << c.equation << ": milnor = " << opt_text(c.milnor, "infinite")
       << ", tjurina = " << opt_text(c.tjurina, "infinite") << "\n";
  }
  for (const auto& [name, f] : rep.families) {
    os << "family " << name << "\n";
    render_fibre(os, "central", f.central);
    render_fibre(os, "generic", f.generic);
    os << "  r1 = " << f.r1 << ", active: " << yes_no(f.active) << "\n";
    os << "  delta jump = " << f.delta_jump << ", epsilon jump = " << f.epsilon_jump
       << " (epsilon(X_0^>1) = " << f.epsilon_higher_central << "), mu jump = " << f.mu_jump << "\n";
    os << "  delta constant: " << yes_no(f.delta_constant) << "\n";
    os << "  equinormalizable: " << yes_no(f.equinormalizable) << "\n";
    os << "  semicontinuity ok: " << yes_no(f.semicontinuity_ok) << "\n";
    os << "  b0 of Milnor fibre = " << f.b0_milnor_fibre << ", G(f) connected: " << yes_no(f.connectivity.connected())
       << "\n";
    os << "  weak normalization constant: " << opt_text(f.weak_normalization_constant, "hypothesis violated")
       << "\n";
    os << "  euler characteristic = " << f.euler_char_fibre << ", b1 = " << f.b1_milnor_fibre << "\n";
    os << "  topologically trivial: " << opt_text(f.topologically_trivial, "undetermined") << "\n";
    os << "  strong resolution: " << opt_text(f.strong_resolution, "undetermined") << "\n";
  }
  if (rep.equising) {
    os << "equivalent: " << yes_no(rep.equising->equivalent) << "\n";
  }
  for (const auto& k : rep.kernel) {
    os << k.operation << " " << k.name;
    if (k.operation == "std" || k.operation == "intersect") {
      os << ":\n";
      for (const auto& b : k.basis) os << "  " << b << "\n";
    } else {
      os << " = " << opt_text(k.value, k.operation == "vdim" ? "infinite" : "n/a") << "\n";
    }
  }
  for (const auto& c : rep.verification) {
    os << "check " << c.name << ": " << (c.passed ? "ok" : "FAILED") << (c.detail.empty() ? "" : " (" + c.detail + ")")
       << "\n";
  }
  for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
  if (rep.error) os << "error: " << *rep.error << "\n";
  return os.str();
}

}  // namespace inns::io

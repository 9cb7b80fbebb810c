#ifndef INNS_IO_RUN_HPP
#define INNS_IO_RUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "inns/io/document.hpp"
#include "inns/io/report_json.hpp"

namespace inns::io {

enum class CommandKind { Report, Family, Equising, Kernel };
enum class KernelOp { Std, Vdim, Dim, Intersect };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitInput = 2;

struct RunOptions {
  int precision = branch::kDefaultPrecision;
  int max_retries = 2;
  std::optional<std::vector<Rational>> samples;
};

struct Command {
  CommandKind kind = CommandKind::Report;
  KernelOp kernel_op = KernelOp::Std;
  std::vector<std::string> files;  // echoed; two for equising
  RunOptions options;
};

/// "report a.inns", "kernel vdim a.inns", ...
std::string command_echo(const Command& cmd);

/// Runs on parsed documents (one per file). Errors are caught and encoded
/// in `error` and `exit_code`.
ReportDocument run_command(const std::vector<Document>& docs, const Command& cmd);

/// Reads and parses cmd.files, then runs. Unreadable or malformed input
/// yields exit code 2.
ReportDocument run_files(const Command& cmd);

std::string render_text(const ReportDocument& rep);

}  // namespace inns::io

#endif  // INNS_IO_RUN_HPP

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vcalc::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

// Environment variable naming a directory that receives <suite>-<mode>.txt and
// .json reports when --report is not given.
inline constexpr const char* kReportDirEnv = "VCALC_REPORT_DIR";

// Runs `vcalc <args...>` (args excludes the program name).
//   verify sw32|primary|screening|liealg|oracle|all [--mode full|free] [--at-k Q]
//          [--report PATH] [--config PATH] [--screening printed|adapted] [--threads N] [-v]
//   oracle crosscheck [--k Q] [--cutoff N] [--report PATH]
//   dump structure-constants|generators|targets [--format text|machine] [--mode full|free]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Writes `content` to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& content);

}  // namespace vcalc::cli

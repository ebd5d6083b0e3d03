#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odt {

enum ExitCode : int { exit_ok = 0, exit_verify_failed = 1, exit_usage = 2, exit_parse = 3 };

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// delay and rate rows for n = from..to; csv selects comma separated output
std::string format_table(int from, int to, bool csv);

} // namespace odt

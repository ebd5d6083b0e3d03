#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "odt/design.hpp"

namespace odt {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const Design& d);
Design design_from_json(const nlohmann::json& j);
std::string emit_json(const Design& d);
Design parse_json(const std::string& text);

// one row per line, entries comma separated and right aligned
std::string emit_text(const Design& d);
std::string format_entry(const Entry& e);
Entry parse_entry(const std::string& token);
// k and kind are inferred unless given (k < 0 means infer)
Design parse_text(const std::string& text, int k = -1);

std::string emit_latex(const Design& d);

} // namespace odt

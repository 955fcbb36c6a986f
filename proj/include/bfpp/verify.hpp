#pragma once

#include "bfpp/json_io.hpp"
#include "bfpp/witness.hpp"

#include <string>
#include <vector>

namespace bfpp {

/// Independent re-verification of a history file, from the file alone.
///
/// Two layers: structural problems (missing fields, type mismatches,
/// unparseable literals) raise ParseError; every value-level violation is
/// returned as a named CheckFailure. The checks re-derive each recorded
/// field from the incoming hull and the documented requirement
/// enumeration, so any value-changing mutation of a valid file is
/// reported; the inequality checks come first and keep the names used in
/// the certificate contract.
std::vector<CheckFailure> verify_history_json(const Json& j);

/// Reads and verifies a history file. ParseError covers unreadable files
/// and malformed JSON as well.
std::vector<CheckFailure> verify_history_file(const std::string& path);

}  // namespace bfpp

#ifndef UCF_UCF_FORMAT_HPP
#define UCF_UCF_FORMAT_HPP

#include "ucf/set_family.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace ucf {

// .ucf text: one set per line as strictly ascending positive integers
// separated by spaces, "-" for the empty set, "#" comment lines, blank lines
// ignored. Elements are at most 63 and duplicate sets are rejected.

/// Throws ParseError (with the offending line) on malformed input.
SetFamily parse_ucf(std::string_view text);

SetFamily read_ucf_file(const std::filesystem::path& path);

/// Members in ascending mask order, one per line, LF-terminated.
std::string format_ucf(const SetFamily& family);

void write_ucf(std::ostream& out, const SetFamily& family);

}  // namespace ucf

#endif  // UCF_UCF_FORMAT_HPP

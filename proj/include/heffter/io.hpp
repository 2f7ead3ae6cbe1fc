#pragma once

#include <iosfwd>
#include <string>

#include "heffter/blocks.hpp"
#include "heffter/grid.hpp"
#include "heffter/verify.hpp"

namespace heffter {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Pretty };

Format parse_format(const std::string& name);

// {"m":..,"n":..,"cells":[{"r":..,"c":..,"v":..},...]}
std::string to_json(const Grid& g);
Grid grid_from_json(const std::string& text);

// first line "m,n" with the dimensions, then m lines of n fields; empty field = empty cell
std::string to_csv(const Grid& g);
Grid grid_from_csv(const std::string& text);

// aligned columns, empty cells left blank
std::string to_pretty(const Grid& g);

std::string write_grid(const Grid& g, Format f);
// picks JSON or CSV by the first non-blank character
Grid read_grid(const std::string& text);
Grid read_grid_file(const std::string& path);

std::string certificate_json(const Certificate& c);
std::string blocks_json(const BlockSequence& seq);

}  // namespace heffter

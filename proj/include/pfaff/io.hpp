#pragma once

// Text file formats. Lines starting with '#' and blank lines are ignored;
// indices are 1-based.
//
//   skew <n> <degree> <field>        pfaffrep <n> <field>       detrep <d> <field>
//   <i> <j> <poly>                   curve <poly>               curve <poly>
//   ...                              A0 / A1 / A2 headers,      M0 / M1 / M2 headers,
//                                    then "<i> <j> <scalar>"    then "<i> <j> <scalar>"
//
//   params <reduced|full> <field>
//   cij <i> <j> <scalar>
//   action <a> <e> <p>               (optional)

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "pfaff/curve_reps.hpp"
#include "pfaff/quartic.hpp"

namespace pfaff::io {

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// Blocks and curve of a representation file, not yet verified.
struct RepFile {
  std::array<ConstMatrix, 3> blocks;
  Poly curve;
};

/// The header keyword of a file ("skew", "pfaffrep", ...).
std::string file_kind(std::string_view text);

SkewPolyMatrix parse_skew(std::string_view text);
std::string format_skew(const SkewPolyMatrix& s);

RepFile parse_pfaffrep(std::string_view text);
std::string format_pfaffrep(const std::array<ConstMatrix, 3>& blocks, const Poly& curve);

RepFile parse_detrep(std::string_view text);
std::string format_detrep(const std::array<ConstMatrix, 3>& blocks, const Poly& curve);

struct ParamFile {
  quartic::QuarticParams params;
  std::optional<quartic::GroupElement> action;
};

ParamFile parse_params(std::string_view text);
std::string format_params(const quartic::QuarticParams& params);

}  // namespace pfaff::io

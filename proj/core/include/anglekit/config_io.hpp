// Copyright 2026 The anglekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "anglekit/geom.hpp"

namespace anglekit {

/// Malformed point file. line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Point files hold one point per line with 2 or 3 whitespace-separated
// fields. A field is an integer, a rational "p/q", or a decimal literal.
// '#' starts a comment line. The file is exact iff no field is decimal.

PointConfig parse_config(std::string_view text, std::string label = {});

/// Exact configs print as integers or p/q and round-trip bit-exactly. Float
/// configs print 17 significant digits and always carry a '.' or exponent,
/// so they parse back as float. Comments are not preserved.
std::string write_config(const PointConfig& config);

PointConfig read_config_file(const std::filesystem::path& path);
void write_config_file(const std::filesystem::path& path,
                       const PointConfig& config);

}  // namespace anglekit

// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The qcorr command line: evolve, esd and steady subcommands writing CSV.
// Everything except argv handling lives here so tests can drive it in-process.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcorr/states.hpp"

namespace qcorr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitFailure = 3;

/// Bad flags or flag values; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// NAME:START:STOP:COUNT, COUNT points spaced evenly with both ends included.
struct Sweep {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  std::vector<double> values() const;
};

Sweep parse_sweep(const std::string& text);

/// mixture:W | werner:P | custom@FILE
struct InitialState {
  enum class Kind { Mixture, Werner, Custom } kind = Kind::Mixture;
  double param = 0.5;
  std::string path;
};

InitialState parse_initial(const std::string& text);
DensityMatrix make_initial(const InitialState& init);

/// Runs the tool on argv-style arguments (args[0] is the program name).
/// Data goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcorr::cli

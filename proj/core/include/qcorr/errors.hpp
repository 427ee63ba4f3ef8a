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

#include <stdexcept>
#include <string>

namespace qcorr {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  using Error::Error;
};

class TraceNotOne : public Error {
 public:
  using Error::Error;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside its mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameters admit no unique steady state (gamma == 0).
class DegenerateParams : public Error {
 public:
  using Error::Error;
};

/// Two independent routes to the same quantity disagree.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A state produced by the integrator failed validation.
class StepRejected : public Error {
 public:
  StepRejected(double time, const std::string& reason)
      : Error("step rejected at t=" + std::to_string(time) + ": " + reason), time_(time) {}
  double time() const noexcept { return time_; }

 private:
  double time_;
};

/// The concurrence never reached zero within the searched horizon.
class NoDeath : public Error {
 public:
  explicit NoDeath(double gamma_t_horizon)
      : Error("no entanglement death within gamma*t <= " + std::to_string(gamma_t_horizon)),
        horizon_(gamma_t_horizon) {}
  double horizon() const noexcept { return horizon_; }

 private:
  double horizon_;
};

}  // namespace qcorr

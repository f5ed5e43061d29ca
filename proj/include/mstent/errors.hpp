// Copyright 2026 The mstent Authors
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

#ifndef MSTENT_ERRORS_HPP
#define MSTENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mstent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Matrix failed symmetry, definiteness or conditioning checks.
class MatrixError : public Error {
 public:
  using Error::Error;
};

/// Parameter record is inconsistent or yields non-finite derived quantities.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : Error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

/// Composition enumeration would exceed the configured cap.
class CapError : public Error {
 public:
  using Error::Error;
};

/// Configuration document failed validation; the message names the JSON path.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace mstent

#endif  // MSTENT_ERRORS_HPP

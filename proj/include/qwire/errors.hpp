// Copyright (c) 2026 The qwire Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0.txt
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qwire {

  /// Base of every exception thrown by the library. `kind()` is a stable
  /// machine-readable tag used by the CLI error record.
  class Error : public std::runtime_error {
    public:
    Error(std::string kind, const std::string &what) : std::runtime_error(what), kind_(std::move(kind)) {}
    [[nodiscard]] const std::string &kind() const noexcept { return kind_; }

    private:
    std::string kind_;
  };

  struct LookupError : Error {
    explicit LookupError(const std::string &what) : Error("lookup", what) {}
  };

  struct DomainError : Error {
    explicit DomainError(const std::string &what) : Error("domain", what) {}
  };

  struct InvalidHeterojunction : Error {
    explicit InvalidHeterojunction(const std::string &what) : Error("invalid_heterojunction", what) {}
  };

  struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(const std::string &what) : Error("unsupported_order", what) {}
  };

  struct ContractViolation : Error {
    explicit ContractViolation(const std::string &what) : Error("contract_violation", what) {}
  };

  struct SingularityError : Error {
    explicit SingularityError(const std::string &what) : Error("singularity", what) {}
  };

  struct ConfigError : Error {
    explicit ConfigError(const std::string &what) : Error("config", what) {}
  };

  struct IoError : Error {
    explicit IoError(const std::string &what) : Error("io", what) {}
  };

  /// Quadrature did not reach the requested tolerance.
  class AccuracyError : public Error {
    public:
    AccuracyError(const std::string &what, double achieved) : Error("accuracy", what), achieved_(achieved) {}
    [[nodiscard]] double achieved() const noexcept { return achieved_; }

    private:
    double achieved_;
  };

} // namespace qwire

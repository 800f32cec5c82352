// Copyright 2026 The RelayLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RELAYLAB_ERRORS_H_
#define RELAYLAB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace relaylab {

// Raised when an input lies outside the domain where a quantity is defined:
// non-positive SNRs, coincident nodes, closed forms requested outside the
// lambda01 > lambda02 regime, and so on. The message names the offending
// field or condition.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace relaylab

#endif  // RELAYLAB_ERRORS_H_

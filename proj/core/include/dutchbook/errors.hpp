// Copyright 2026 the dutchbook authors
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

namespace dutchbook {

// Malformed user input: unparsable numbers, dimension mismatches,
// out-of-range scenario references, invalid reference measures. The CLI
// maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed: the axiom route and the LP route
// disagreed, a duality gap appeared, or a certificate did not re-verify.
// These conditions are impossible if the engine is correct, so they are
// surfaced loudly instead of being swallowed.
class EngineDefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dutchbook

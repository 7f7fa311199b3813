// Copyright 2026 The ldpcq Authors
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

#ifndef LDPCQ_CLI_HPP
#define LDPCQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ldpcq::cli {

/// Runs one command. Exit status: 0 success / verification passed,
/// 1 verification or expectation failure, 2 usage, parse or resource errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldpcq::cli

#endif

/* Copyright 2026 The encat Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Command line driver, kept in a library so tests can run it in-process.

#ifndef ENCAT_TOOLS_CLI_HPP
#define ENCAT_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "encat/document.hpp"

namespace encat::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidInput = 2,
  kConstructionFailed = 3,
  kEngineBug = 4,
};

/// Builtin documents by name: "bool", "trop<n>", "cyc<n>" (monoidal),
/// "poset-diamond" (closed module), and the prefixed forms "vcategory-",
/// "vstructure-", "cylinder-", "path-", "tensored-", "self-" (closed module
/// over itself) and "bimodule-" applied to a base name; "bimodule-" also
/// accepts "poset-diamond". Throws ParameterError for unknown names.
Document builtin_document(std::string_view name);

/// Names accepted by builtin_document, for help text.
std::vector<std::string> builtin_examples();

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace encat::cli

#endif  // ENCAT_TOOLS_CLI_HPP

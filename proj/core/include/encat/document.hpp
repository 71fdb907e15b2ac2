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

#ifndef ENCAT_DOCUMENT_HPP
#define ENCAT_DOCUMENT_HPP

#include <string>
#include <string_view>
#include <variant>

#include "encat/vcat.hpp"
#include "encat/vmodule.hpp"
#include "encat/vstruct.hpp"

namespace encat {

inline constexpr std::string_view kFormatVersion = "encat/1";

/// A V-structure with its cylinders.
struct CylinderDoc {
  VStructureData vs;
  CylinderAssignment cyl;
  friend bool operator==(const CylinderDoc&, const CylinderDoc&) = default;
};

/// A V-structure with its paths. The base must be symmetric.
struct PathDoc {
  VStructureData vs;
  PathAssignment path;
  friend bool operator==(const PathDoc&, const PathDoc&) = default;
};

/// A V-category with chosen tensors.
struct TensoredDoc {
  VCategoryData vc;
  TensoredData tensors;
  friend bool operator==(const TensoredDoc&, const TensoredDoc&) = default;
};

/// One structure of any supported kind. The alternative order matches
/// `kind_name`.
struct Document {
  std::variant<FinCategory, BaseV, VCategoryData, VStructureData, CylinderDoc,
               PathDoc, TensoredDoc, VModuleData, TensorClosedModuleData,
               ClosedVModuleData, ClosedBimoduleData>
      body;

  /// "fincategory", "monoidal", "vcategory", "vstructure", "cylinder",
  /// "path", "tensored", "vmodule", "tensorclosed", "closedmodule" or
  /// "bimodule".
  std::string_view kind() const;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Reads an "encat/1" JSON document. Every id is resolved against the
/// category it belongs to. Throws DocumentError carrying the line, column
/// and offending token.
Document parse_document(std::string_view text);

/// Canonical text: fixed key order, every table sorted by key, two-space
/// indentation, trailing newline. Byte-comparable across runs.
std::string serialize_document(const Document& doc);

/// The checker appropriate to the kind, preceded by check_base for
/// enriched kinds (base failures are returned alone).
Reports check_document(const Document& doc);

}  // namespace encat

#endif  // ENCAT_DOCUMENT_HPP

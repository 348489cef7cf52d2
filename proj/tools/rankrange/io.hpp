// Copyright 2026 The rankrange Authors
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

#ifndef RANKRANGE_TOOLS_IO_HPP_
#define RANKRANGE_TOOLS_IO_HPP_

#include <string>

#include "json.hpp"
#include "rankrange/channel.hpp"
#include "rankrange/error.hpp"
#include "rankrange/geometry.hpp"
#include "rankrange/matrix.hpp"
#include "rankrange/qec.hpp"
#include "rankrange/rank_range.hpp"

namespace rankrange::cli {

using Json = nlohmann::json;

/// Raised for unreadable files and JSON that does not match the expected shape.
class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& what) : Error("malformed_input", what) {}
};

struct InputFile {
  std::string path;
  std::string bytes;
  std::string digest;  // "sha256:<hex>"
  Json json;
};

InputFile read_input(const std::string& path);
std::string sha256_hex(const std::string& bytes);

// {"n": rows, "re": [[...]], "im": [[...]]}; the column count is the row length.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

// {"matrices": [matrix, ...]}
Json to_json(const HermitianTuple& a);
HermitianTuple tuple_from_json(const Json& j);

// {"n": int, "kraus": [matrix, ...]}
Json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

// {"point": [...], "k": int, "residual": float, "isometry": matrix}
Json to_json(const RangeCertificate& c);
RangeCertificate certificate_from_json(const Json& j);

// {"k": int, "entries": [{"c": [...], "bound": float}, ...]}
Json to_json(const HalfspaceSet& h);
HalfspaceSet halfspaces_from_json(const Json& j);

// {"k": int, "residual": float, "gamma": matrix, "basis": matrix}
Json to_json(const CodeCertificate& c);
CodeCertificate code_from_json(const Json& j);

}  // namespace rankrange::cli

#endif  // RANKRANGE_TOOLS_IO_HPP_

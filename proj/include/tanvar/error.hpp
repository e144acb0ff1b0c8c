/*
   Copyright 2026 The tanvar Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TANVAR_ERROR_HPP
#define TANVAR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tanvar {

enum class ErrorKind {
  SyntaxError,
  UnknownVariable,
  DimensionMismatch,
  FieldMismatch,
  InvalidField,
  DegreeCapExceeded,
  NotHomogeneous,
  NotZeroDimensional,
  EliminantDegenerate,
  InvalidSpec,
  SmoothnessCheckFailed,
  ImageDegenerate,
  CenterContainsVariety,
  NotHypersurface,
  PointNotOnAmbient,
  FiberNotFinite,
  NoRegularPointFound,
  NotFinite,
  DisagreementAcrossTrials,
  GenericityWarning,
  SliceSingularityHit,
  OddOrderedCount,
  TangentFamilyDegenerate,
  DegenerateFamily,
  ManifestParseError,
  Unsupported,
};

std::string_view kind_name(ErrorKind kind) noexcept;

/// Every failure surfaced by the library carries one of the kinds above so
/// the CLI can report it as structured JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + detail),
        kind_(kind),
        detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace tanvar

#endif  // TANVAR_ERROR_HPP

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

#include "tanvar/error.hpp"

namespace tanvar {

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::EliminantDegenerate: return "EliminantDegenerate";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::SmoothnessCheckFailed: return "SmoothnessCheckFailed";
    case ErrorKind::ImageDegenerate: return "ImageDegenerate";
    case ErrorKind::CenterContainsVariety: return "CenterContainsVariety";
    case ErrorKind::NotHypersurface: return "NotHypersurface";
    case ErrorKind::PointNotOnAmbient: return "PointNotOnAmbient";
    case ErrorKind::FiberNotFinite: return "FiberNotFinite";
    case ErrorKind::NoRegularPointFound: return "NoRegularPointFound";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::DisagreementAcrossTrials: return "DisagreementAcrossTrials";
    case ErrorKind::GenericityWarning: return "GenericityWarning";
    case ErrorKind::SliceSingularityHit: return "SliceSingularityHit";
    case ErrorKind::OddOrderedCount: return "OddOrderedCount";
    case ErrorKind::TangentFamilyDegenerate: return "TangentFamilyDegenerate";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::ManifestParseError: return "ManifestParseError";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace tanvar

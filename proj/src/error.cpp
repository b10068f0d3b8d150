// Copyright 2026 The chiralq Authors
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

#include "chiralq/error.hpp"

namespace chiralq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NonpositiveMu: return "NonpositiveMu";
    case ErrorKind::ZeroTexture: return "ZeroTexture";
    case ErrorKind::GaplessTexture: return "GaplessTexture";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::DegeneratePlaquette: return "DegeneratePlaquette";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LinkOff: return "LinkOff";
    case ErrorKind::LinksActive: return "LinksActive";
    case ErrorKind::InsufficientGradient: return "InsufficientGradient";
    case ErrorKind::GeometryInfeasible: return "GeometryInfeasible";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::ScriptError: return "ScriptError";
  }
  return "Unknown";
}

}  // namespace chiralq

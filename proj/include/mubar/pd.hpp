// Copyright 2026 The mubar Authors.
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

#pragma once

#include <string>
#include <string_view>

#include "mubar/diagram.hpp"

namespace mubar {

/// Parses planar-diagram text such as `PD[X[1,5,2,4], X[3,1,4,6], ...]`.
///
/// Each `X[a,b,c,d]` lists edge labels counterclockwise starting from the
/// incoming under-edge; `Loop[a]` declares a crossingless component. The
/// `PD[...]` wrapper is optional, separators are commas or whitespace, and
/// `#` starts a comment that runs to the end of the line.
///
/// Under-strands fix the orientation of every component that passes under
/// somewhere. A component that is over at all of its crossings is oriented
/// along increasing labels; when that is ambiguous (two edges) its
/// smallest label leaves the crossing that is listed later. Components are
/// ordered by their smallest label.
LinkDiagram parse_pd(std::string_view text);

/// Serializes with labels 1..E numbered consecutively along each component,
/// in a crossing order that `parse_pd` reads back with the same orientation.
std::string to_pd(const LinkDiagram& d);

}  // namespace mubar

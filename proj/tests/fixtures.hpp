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

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mubar/braid.hpp"
#include "mubar/diagram.hpp"
#include "mubar/pd.hpp"

namespace mubar::test {

inline LinkDiagram load_fixture(const std::string& name) {
  std::ifstream in(std::string(MUBAR_FIXTURE_DIR) + "/" + name);
  std::stringstream text;
  text << in.rdbuf();
  return parse_pd(text.str());
}

inline LinkDiagram borromean() { return load_fixture("borromean.pd"); }
inline LinkDiagram whitehead() { return load_fixture("whitehead.pd"); }
inline LinkDiagram hopf() { return parse_braid("1 1", 2); }

/// Every named diagram the property suites run over.
inline std::vector<std::pair<std::string, LinkDiagram>> all_fixtures() {
  return {{"borromean", borromean()},
          {"whitehead", whitehead()},
          {"hopf", hopf()},
          {"hopf2", parse_braid("1 1 1 1", 2)},
          {"unlink2", parse_braid("", 2)},
          {"trefoil", parse_braid("1 1 1", 2)}};
}

}  // namespace mubar::test

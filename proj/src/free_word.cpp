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

#include "mubar/free_word.hpp"

#include <cstdlib>

namespace mubar {

FreeWord::FreeWord(std::span<const Letter> letters) {
  for (Letter l : letters) push_back(l);
}

FreeWord FreeWord::generator(int g, int exponent) {
  FreeWord w;
  w.letters_.push_back({g, exponent});
  return w;
}

void FreeWord::push_back(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse()) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

FreeWord& FreeWord::operator*=(const FreeWord& rhs) {
  for (Letter l : rhs.letters_) push_back(l);
  return *this;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(it->inverse());
  }
  return w;
}

FreeWord FreeWord::power(int e) const {
  const FreeWord base = e < 0 ? inverse() : *this;
  FreeWord w;
  for (int k = 0; k < std::abs(e); ++k) w *= base;
  return w;
}

std::string FreeWord::to_string(std::span<const std::string> names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (Letter l : letters_) {
    if (!out.empty()) out += ' ';
    out += l.generator < static_cast<int>(names.size())
               ? names[l.generator]
               : "g" + std::to_string(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

}  // namespace mubar

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

#include <span>
#include <string>
#include <vector>

namespace mubar {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1
  Letter inverse() const noexcept { return {generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Every mutating operation keeps it reduced.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::span<const Letter> letters);

  static FreeWord generator(int g, int exponent = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push_back(Letter l);
  FreeWord& operator*=(const FreeWord& rhs);
  FreeWord inverse() const;
  FreeWord power(int e) const;

  /// Generators printed as `name[g]`, inverses with a trailing "^-1".
  std::string to_string(std::span<const std::string> names = {}) const;

  friend FreeWord operator*(FreeWord a, const FreeWord& b) { return a *= b; }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace mubar

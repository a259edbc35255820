// Copyright 2026 The minorprop Authors
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

#include "minorprop/labeling.h"

#include "minorprop/rng.h"

namespace minorprop {

bool EdgeLabeling::Bit(const CanonicalEdge& e) const {
  auto it = cache_.find(e);
  if (it != cache_.end()) return it->second;
  std::uint64_t h = Mix64(seed_ ^ 0x243f6a8885a308d3ULL);
  h = Mix64(h ^ e.u);
  h = Mix64(h ^ (e.v * 0x9e3779b97f4a7c15ULL));
  h = Mix64(h ^ e.multiplicity);
  bool bit = (h >> 63) != 0;
  cache_.emplace(e, bit);
  return bit;
}

}  // namespace minorprop

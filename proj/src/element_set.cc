// Copyright 2026 The Authors.
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

#include "pmgreedy/element_set.h"

#include <algorithm>
#include <utility>

namespace pmgreedy {

ElementSet::ElementSet(std::initializer_list<Element> ids) : ids_(ids) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet::ElementSet(std::vector<Element> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

ElementSet ElementSet::FromMask(std::uint64_t mask) {
  ElementSet s;
  for (Element e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1) s.ids_.push_back(e);
  }
  return s;
}

bool ElementSet::Contains(Element e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

void ElementSet::Insert(Element e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it == ids_.end() || *it != e) ids_.insert(it, e);
}

ElementSet ElementSet::With(Element e) const {
  ElementSet out = *this;
  out.Insert(e);
  return out;
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  ElementSet out;
  out.ids_.reserve(ids_.size() + other.ids_.size());
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                 other.ids_.end(), std::back_inserter(out.ids_));
  return out;
}

std::uint64_t ElementSet::ToMask() const {
  std::uint64_t mask = 0;
  for (Element e : ids_) mask |= std::uint64_t{1} << e;
  return mask;
}

std::string ElementSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(ids_[i]);
  }
  return out + "}";
}

}  // namespace pmgreedy

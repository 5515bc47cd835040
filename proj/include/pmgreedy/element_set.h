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

#ifndef PMGREEDY_ELEMENT_SET_H_
#define PMGREEDY_ELEMENT_SET_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pmgreedy {

// Ground-set elements are dense integer ids 0..n-1.
using Element = int;

// A finite set of element ids, kept sorted and duplicate free.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<Element> ids);
  explicit ElementSet(std::vector<Element> ids);

  // Set with bit i of `mask` mapped to element i.
  static ElementSet FromMask(std::uint64_t mask);

  bool empty() const { return ids_.empty(); }
  int size() const { return static_cast<int>(ids_.size()); }
  bool Contains(Element e) const;
  bool IsSubsetOf(const ElementSet& other) const;
  // Largest id, or -1 when empty.
  Element max_element() const { return ids_.empty() ? -1 : ids_.back(); }

  void Insert(Element e);
  ElementSet With(Element e) const;
  ElementSet Union(const ElementSet& other) const;

  // Requires every id < 64.
  std::uint64_t ToMask() const;

  std::span<const Element> ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  std::string ToString() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  // Lexicographic order on the sorted id sequences.
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<Element> ids_;
};

}  // namespace pmgreedy

#endif  // PMGREEDY_ELEMENT_SET_H_

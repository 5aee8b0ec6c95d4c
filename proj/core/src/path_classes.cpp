// Copyright 2026 The circdd Authors.
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

#include "circdd/path_classes.hpp"

#include <algorithm>

#include "circdd/error.hpp"

namespace circdd {
namespace {

// Enumerates canonical (nondecreasing step index) walks of length 1..max_len
// that are simple in the sense described in the header. `visit(indices,
// depth, end)` is called once per class. Closed walks are reported but not
// extended; non-simple prefixes are cut since every extension inherits the
// repeated vertex.
template <typename Visit>
void Enumerate(Vertex n, std::span<const Vertex> steps, int max_len, std::vector<Vertex>& walk,
               std::vector<std::size_t>& indices, Vertex position, std::size_t first, int depth,
               Visit&& visit) {
  for (std::size_t idx = first; idx < steps.size(); ++idx) {
    Vertex w = position + steps[idx];
    if (w >= n) w -= n;
    const int len = depth + 1;
    if (w == 0) {
      if (len >= 3) {
        indices[depth] = idx;
        visit(std::span<const std::size_t>(indices.data(), len), len, w);
      }
      continue;
    }
    if (std::find(walk.begin() + 1, walk.begin() + len, w) != walk.begin() + len) continue;
    indices[depth] = idx;
    walk[len] = w;
    visit(std::span<const std::size_t>(indices.data(), len), len, w);
    if (len < max_len) Enumerate(n, steps, max_len, walk, indices, w, idx, len, visit);
  }
}

}  // namespace

std::vector<PathClass> PathClasses(const CirculantGraph& g, Vertex w, int length) {
  if (length < 1) throw Error(ErrorCode::kInvalidArgument, "path length must be >= 1");
  if (w >= g.order()) throw Error(ErrorCode::kInvalidArgument, "target outside Z_n");
  const Vertex n = g.order();
  const auto steps = g.steps();
  const std::size_t t = g.connection_set().proper().size();
  const bool half = g.connection_set().has_half();

  std::vector<Vertex> walk(static_cast<std::size_t>(length) + 1, 0);
  std::vector<std::size_t> indices(static_cast<std::size_t>(length), 0);
  std::vector<PathClass> out;
  Enumerate(n, steps, length, walk, indices, 0, 0, 0,
            [&](std::span<const std::size_t> idx, int len, Vertex end) {
              if (len != length || end != w) return;
              PathClass pc;
              pc.target = end;
              for (std::size_t i : idx) {
                const std::int64_t s = steps[i];
                const bool negative = i >= t + (half ? 1 : 0);
                pc.steps.push_back(negative ? s - static_cast<std::int64_t>(n) : s);
              }
              out.push_back(std::move(pc));
            });
  return out;
}

void PathCounter::Touch(Vertex w) {
  if (stamp_[w] == epoch_) return;
  stamp_[w] = epoch_;
  std::fill_n(counts_.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(w) * stride_),
              stride_, 0u);
  touched_.push_back(w);
}

void PathCounter::Run(Vertex n, std::span<const Vertex> steps, int max_length) {
  if (max_length < 0) max_length = 0;
  const std::size_t stride = static_cast<std::size_t>(max_length) + 1;
  if (n != n_ || stride != stride_ || stamp_.size() != n) {
    n_ = n;
    stride_ = stride;
    stamp_.assign(n, 0);
    counts_.assign(static_cast<std::size_t>(n) * stride, 0);
    epoch_ = 0;
  }
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  max_length_ = max_length;
  touched_.clear();
  walk_.assign(stride, 0);

  Touch(0);
  counts_[0] = 1;  // empty path
  if (max_length == 0) return;

  std::vector<std::size_t> indices(stride, 0);
  Enumerate(n, steps, max_length, walk_, indices, 0, 0, 0,
            [this](std::span<const std::size_t>, int len, Vertex end) {
              Touch(end);
              ++counts_[static_cast<std::size_t>(end) * stride_ + static_cast<std::size_t>(len)];
            });
}

}  // namespace circdd

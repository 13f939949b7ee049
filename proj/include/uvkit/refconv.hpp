// Copyright 2026 The uvkit Authors. All Rights Reserved.
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

#ifndef UVKIT_REFCONV_HPP_
#define UVKIT_REFCONV_HPP_

#include "uvkit/conv.hpp"

namespace uvkit::refconv {

// Deliberately naive convolutions used only to check the production ones:
// scalar nested loops, bounds-checked implicit zero padding, no kernel
// dispatch, no padded copies. Keep this file independent of conv.cpp's
// implementation choices.

Tensor3 conv2d_standard_ref(const Tensor3& input, const Kernel4& kernel);
Tensor3 depthwise_ref(const Tensor3& input, const DepthwiseKernel& dk);
Tensor3 pointwise_ref(const Tensor3& input, const PointwiseKernel& pk);

/// Largest absolute difference between two same-shaped tensors.
double max_abs_diff(const Tensor3& a, const Tensor3& b);

}  // namespace uvkit::refconv

#endif  // UVKIT_REFCONV_HPP_

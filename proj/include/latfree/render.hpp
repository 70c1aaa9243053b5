// Copyright 2026 The latfree Authors
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

// Static CSV and SVG renderings of a certificate's trajectory.

#ifndef LATFREE_RENDER_HPP_
#define LATFREE_RENDER_HPP_

#include <string>

#include "latfree/io.hpp"

namespace latfree {

// One row per set in the trajectory: index, case, the four members in
// canonical order and min f over them.
std::string render_csv(const CertificateDoc& cert);

// One <g> frame per set, each with the parallelogram and exactly four
// <line> elements (the halfspace boundaries).
std::string render_svg(const CertificateDoc& cert);

}  // namespace latfree

#endif  // LATFREE_RENDER_HPP_

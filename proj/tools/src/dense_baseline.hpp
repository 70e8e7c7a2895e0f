// Copyright 2026 The perioband Authors
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

#pragma once

#include <vector>

#include "perioband/dense_matrix.hpp"

namespace perioband::cli {

/// Dense Gaussian elimination with partial pivoting, O(n^3) regardless of
/// sparsity. Throws
/// ZeroPivotNeedsExact when a column has no nonzero pivot.
std::vector<double> dense_float_solve(DenseMatrix<double> a, std::vector<double> b);

}  // namespace perioband::cli

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

#include "perioband/band_matrix.hpp"
#include "perioband/dense_matrix.hpp"
#include "perioband/error.hpp"
#include "perioband/factorization.hpp"
#include "perioband/inversion.hpp"
#include "perioband/lambda_rational.hpp"
#include "perioband/linear_solve.hpp"
#include "perioband/oracle.hpp"
#include "perioband/polynomial.hpp"
#include "perioband/random_instance.hpp"
#include "perioband/rational.hpp"
#include "perioband/scalar.hpp"
#include "perioband/text_format.hpp"

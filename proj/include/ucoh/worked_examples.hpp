// Copyright 2026 The ucoh Authors
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

// Hand-derived closed forms for two qubit scenarios, used as an
// independent cross-check of the generic coherence/bound pipeline.
//
//   Example 1: pseudopure diag((1+v)/2, (1-v)/2), the three qubit MUBs,
//              beta = alpha, alpha in [1/2, 1).
//   Example 2: Bloch vector (r1, 0, r1) with r1 in [0, 1/sqrt2], the
//              qubit SIC, beta = -alpha, alpha in [1/2, 1).

namespace ucoh::worked {

double example1_coherence(double alpha, double v);
double example1_bound(double alpha, double v);

double example2_coherence(double alpha, double r1);
double example2_bound(double alpha, double r1);

}  // namespace ucoh::worked

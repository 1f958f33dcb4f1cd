// Copyright 2026 The latpar Authors
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

#include <string>

namespace latpar {

// All scores are reported with 2 decimals. Internal arithmetic stays at full
// precision; rounding happens only at the interface layer, round-half-to-even
// on the underlying binary value (the C library's printf is correctly
// rounded, so 29.845 stored as 29.84499... displays as "29.84").
std::string format_score(double x);

// The displayed value as a double (stod of format_score).
double round2(double x);

}  // namespace latpar

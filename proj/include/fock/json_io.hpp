/**
 * Copyright 2026 The fock-cocycle authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include "fock/group_element.hpp"

namespace fock {

// {"kind":"Sp"|"SO","m":<int>,"matrix":[[...]]}, row-major, decimal floats
// with 17 significant digits (round-trips doubles exactly).
std::string serialize(const GroupElement& g);

// Rejects elements whose membership residual exceeds `membership_tol`
// unless `validate` is false.
GroupElement deserialize(const std::string& json_text, bool validate = true,
                         double membership_tol = 1e-10);

// Formatting helpers shared with the report writer.
std::string format_double(double x);                  // %.17g
std::string format_complex(const cplx& z);            // [re, im] pair text

}  // namespace fock

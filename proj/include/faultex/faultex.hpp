// Copyright 2026 The faultex Authors
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

#include "faultex/closed_forms.hpp"
#include "faultex/error.hpp"
#include "faultex/explore.hpp"
#include "faultex/faults.hpp"
#include "faultex/graph.hpp"
#include "faultex/hamiltonian.hpp"
#include "faultex/io.hpp"
#include "faultex/minimax.hpp"
#include "faultex/opt.hpp"
#include "faultex/overhead.hpp"
#include "faultex/ratio.hpp"
#include "faultex/strategy.hpp"
#include "faultex/verify.hpp"

namespace faultex {
inline constexpr const char* kVersion = "0.3.0";
}

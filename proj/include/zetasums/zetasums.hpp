// Copyright 2026 The zetasums Authors
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

// Umbrella header.

#pragma once

#include "zetasums/acceptance.hpp"
#include "zetasums/bernoulli.hpp"
#include "zetasums/double_sums.hpp"
#include "zetasums/evaluate.hpp"
#include "zetasums/hurwitz.hpp"
#include "zetasums/hypergeometric.hpp"
#include "zetasums/integrals.hpp"
#include "zetasums/moments.hpp"
#include "zetasums/quadrature.hpp"
#include "zetasums/report.hpp"
#include "zetasums/special.hpp"
#include "zetasums/types.hpp"

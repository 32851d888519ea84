// Copyright 2026 The gdd6 Authors
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

#include "gdd6/block_design.hpp"
#include "gdd6/budget.hpp"
#include "gdd6/catalog.hpp"
#include "gdd6/constructions.hpp"
#include "gdd6/design.hpp"
#include "gdd6/error.hpp"
#include "gdd6/feasibility.hpp"
#include "gdd6/ingredients.hpp"
#include "gdd6/io.hpp"
#include "gdd6/rational.hpp"
#include "gdd6/resolution_search.hpp"
#include "gdd6/search.hpp"
#include "gdd6/tables.hpp"

// Copyright 2026 The vietoie Authors.
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

#ifndef VIETOIE_VIETOIE_HPP
#define VIETOIE_VIETOIE_HPP

#include "vietoie/clauses.hpp"
#include "vietoie/config.hpp"
#include "vietoie/conll.hpp"
#include "vietoie/evaluation.hpp"
#include "vietoie/propositions.hpp"
#include "vietoie/reporting.hpp"
#include "vietoie/types.hpp"

#endif  // VIETOIE_VIETOIE_HPP

// Copyright 2026 The golden-laurent Authors
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

#ifndef GOLDEN_GOLDEN_HPP
#define GOLDEN_GOLDEN_HPP

#include "golden/binomial.hpp"
#include "golden/catalan.hpp"
#include "golden/contfrac.hpp"
#include "golden/degree.hpp"
#include "golden/error.hpp"
#include "golden/fibzeck.hpp"
#include "golden/field.hpp"
#include "golden/hankel.hpp"
#include "golden/kronecker.hpp"
#include "golden/laurent.hpp"
#include "golden/matrix.hpp"
#include "golden/poly.hpp"
#include "golden/random.hpp"
#include "golden/shiftops.hpp"

#endif  // GOLDEN_GOLDEN_HPP

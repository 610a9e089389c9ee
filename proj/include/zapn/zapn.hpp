/**************************************************************************
 * zapn.hpp
 *
 * Copyright 2026 The zapn Authors
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
 **************************************************************************/

#pragma once

#include "zapn/error.hpp"
#include "zapn/gf2poly.hpp"
#include "zapn/gf2n.hpp"
#include "zapn/mpoly.hpp"
#include "zapn/expr.hpp"
#include "zapn/diffprops.hpp"
#include "zapn/families.hpp"
#include "zapn/equiv.hpp"
#include "zapn/verify.hpp"

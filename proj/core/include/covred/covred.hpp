/*
 * Copyright 2026 The covred Authors.
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

#ifndef COVRED_COVRED_HPP
#define COVRED_COVRED_HPP

#include "covred/bench.hpp"
#include "covred/bitset.hpp"
#include "covred/discernibility.hpp"
#include "covred/error.hpp"
#include "covred/formats.hpp"
#include "covred/granulation.hpp"
#include "covred/hitting_set.hpp"
#include "covred/ingestion.hpp"
#include "covred/model.hpp"
#include "covred/reduction.hpp"
#include "covred/synthetic.hpp"

#endif  // COVRED_COVRED_HPP

/*
 * Copyright 2026 The semisig Authors
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

#include "semisig/axioms.hpp"
#include "semisig/idem.hpp"
#include "semisig/interval_index.hpp"
#include "semisig/job.hpp"
#include "semisig/qsym.hpp"
#include "semisig/quasishuffle.hpp"
#include "semisig/semiring.hpp"
#include "semisig/serialize.hpp"
#include "semisig/signature.hpp"
#include "semisig/words.hpp"

// Copyright 2026 The fskill Authors.
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

// Convenience header pulling in the whole library.

#include "fskill/corpus.hpp"
#include "fskill/error.hpp"
#include "fskill/extract.hpp"
#include "fskill/hash.hpp"
#include "fskill/lexicon.hpp"
#include "fskill/metrics.hpp"
#include "fskill/model.hpp"
#include "fskill/model_io.hpp"
#include "fskill/parallel.hpp"
#include "fskill/rng.hpp"
#include "fskill/scoring.hpp"
#include "fskill/stats.hpp"
#include "fskill/synth.hpp"
#include "fskill/textproc.hpp"

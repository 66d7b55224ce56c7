// Copyright 2026 The socnetgen Authors.
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


#ifndef SOCNETGEN_SOCNETGEN_HPP_
#define SOCNETGEN_SOCNETGEN_HPP_

#include "socnetgen/diagnostics.hpp"
#include "socnetgen/generator.hpp"
#include "socnetgen/graph.hpp"
#include "socnetgen/io.hpp"
#include "socnetgen/metrics.hpp"
#include "socnetgen/powerlaw.hpp"
#include "socnetgen/random.hpp"
#include "socnetgen/schema.hpp"
#include "socnetgen/similarity.hpp"

#endif  // SOCNETGEN_SOCNETGEN_HPP_

// Copyright 2026 The twistcube Authors
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

#include "twistcube/errors.hpp"
#include "twistcube/harness/experiment.hpp"
#include "twistcube/harness/output.hpp"
#include "twistcube/metrics/distance.hpp"
#include "twistcube/metrics/expansion.hpp"
#include "twistcube/metrics/matching_cut.hpp"
#include "twistcube/metrics/mixing.hpp"
#include "twistcube/metrics/partial_order.hpp"
#include "twistcube/metrics/routing.hpp"
#include "twistcube/spectral/cycles.hpp"
#include "twistcube/spectral/histogram.hpp"
#include "twistcube/spectral/moments.hpp"
#include "twistcube/spectral/spectrum.hpp"
#include "twistcube/symmetry/automorphism.hpp"
#include "twistcube/topology/base_graph.hpp"
#include "twistcube/topology/graph.hpp"
#include "twistcube/topology/manifest.hpp"
#include "twistcube/topology/permutation.hpp"
#include "twistcube/topology/twisted_cube.hpp"
#include "twistcube/topology/vertex.hpp"

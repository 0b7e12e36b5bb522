// SPDX-License-Identifier: Apache-2.0
//
// mmwchan - directional millimeter-wave channel measurement processing
// Copyright (C) 2026 The mmwchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "mmwchan/beam_combining.hpp"
#include "mmwchan/campaign.hpp"
#include "mmwchan/campaign_io.hpp"
#include "mmwchan/constants.hpp"
#include "mmwchan/delay_stats.hpp"
#include "mmwchan/distance_extension.hpp"
#include "mmwchan/errors.hpp"
#include "mmwchan/geometry.hpp"
#include "mmwchan/omni_synthesis.hpp"
#include "mmwchan/parallel.hpp"
#include "mmwchan/pathloss.hpp"
#include "mmwchan/random.hpp"
#include "mmwchan/raytrace.hpp"
#include "mmwchan/report.hpp"
#include "mmwchan/scene_io.hpp"
#include "mmwchan/synth_campaign.hpp"

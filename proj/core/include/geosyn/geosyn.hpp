// Copyright 2026 The Geosyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include "geosyn/dynamics.hpp"
#include "geosyn/errors.hpp"
#include "geosyn/geodesic.hpp"
#include "geosyn/metric.hpp"
#include "geosyn/robot_model.hpp"
#include "geosyn/synergy.hpp"
#include "geosyn/trajectory_io.hpp"
#include "geosyn/transport.hpp"
#include "geosyn/types.hpp"

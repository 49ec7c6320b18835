// Copyright 2026 The arakelov-torus Authors
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

#include "arakelov/arith.hpp"
#include "arakelov/errors.hpp"
#include "arakelov/green.hpp"
#include "arakelov/heights.hpp"
#include "arakelov/lattice.hpp"
#include "arakelov/modular.hpp"
#include "arakelov/summation.hpp"
#include "arakelov/weierstrass.hpp"

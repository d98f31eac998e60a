// Copyright 2026 The SSR Toolkit Authors
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

#ifndef SSR_SSR_HPP
#define SSR_SSR_HPP

#include "ssr/bench.hpp"
#include "ssr/core.hpp"
#include "ssr/fptas.hpp"
#include "ssr/io.hpp"
#include "ssr/oracle.hpp"
#include "ssr/rational.hpp"
#include "ssr/reductions.hpp"
#include "ssr/semi_restricted.hpp"

#endif  // SSR_SSR_HPP

// Copyright 2026 The qframe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFRAME_QFRAME_HPP_
#define QFRAME_QFRAME_HPP_

// Everything except the command-line layer (qframe/cli.hpp).

#include <qframe/construct.hpp>
#include <qframe/core.hpp>
#include <qframe/estimate.hpp>
#include <qframe/experiments.hpp>
#include <qframe/frame_ops.hpp>
#include <qframe/injectivity.hpp>
#include <qframe/io.hpp>
#include <qframe/random.hpp>
#include <qframe/separation.hpp>
#include <qframe/tilde.hpp>

#endif  // QFRAME_QFRAME_HPP_

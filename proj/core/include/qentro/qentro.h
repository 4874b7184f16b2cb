// Copyright 2026 The Qentro Authors
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

#ifndef QENTRO_QENTRO_H
#define QENTRO_QENTRO_H

#include "qentro/entropy.h"
#include "qentro/error.h"
#include "qentro/interferometer.h"
#include "qentro/json_io.h"
#include "qentro/numerics.h"
#include "qentro/protocol.h"
#include "qentro/random.h"
#include "qentro/states.h"
#include "qentro/zeno.h"

#endif

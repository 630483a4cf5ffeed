// Copyright 2026 The raggedcore Authors
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

#include "raggedcore/array.hpp"
#include "raggedcore/buffer.hpp"
#include "raggedcore/builder.hpp"
#include "raggedcore/dtype.hpp"
#include "raggedcore/errors.hpp"
#include "raggedcore/form.hpp"
#include "raggedcore/interchange.hpp"
#include "raggedcore/kernels.hpp"
#include "raggedcore/layout.hpp"
#include "raggedcore/tabular.hpp"
#include "raggedcore/value.hpp"
#include "raggedcore/view.hpp"

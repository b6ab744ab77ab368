// Copyright 2026 The dimerlab Authors.
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


#ifndef DIMERLAB_DIMERLAB_HPP
#define DIMERLAB_DIMERLAB_HPP

#include "dimerlab/asymptotics.hpp"
#include "dimerlab/errors.hpp"
#include "dimerlab/kasteleyn.hpp"
#include "dimerlab/lattice.hpp"
#include "dimerlab/oracle.hpp"
#include "dimerlab/parallel.hpp"
#include "dimerlab/polyring.hpp"
#include "dimerlab/verify.hpp"

#endif  // DIMERLAB_DIMERLAB_HPP

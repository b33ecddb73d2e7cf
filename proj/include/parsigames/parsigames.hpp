// Copyright 2026 The parsigames Authors
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

#ifndef PARSIGAMES_PARSIGAMES_HPP
#define PARSIGAMES_PARSIGAMES_HPP

#include <parsigames/census.hpp>
#include <parsigames/errors.hpp>
#include <parsigames/genealogy.hpp>
#include <parsigames/io.hpp>
#include <parsigames/oracle.hpp>
#include <parsigames/pivots.hpp>
#include <parsigames/representations.hpp>
#include <parsigames/symmetry.hpp>

#endif  // PARSIGAMES_PARSIGAMES_HPP

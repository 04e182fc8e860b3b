// melograph.hpp
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

#pragma once

#include "melograph/clustering.hpp"
#include "melograph/dot.hpp"
#include "melograph/enumeration.hpp"
#include "melograph/format.hpp"
#include "melograph/frechet.hpp"
#include "melograph/geometry.hpp"
#include "melograph/melody.hpp"
#include "melograph/melody_file.hpp"
#include "melograph/note_names.hpp"
#include "melograph/rational.hpp"
#include "melograph/slope.hpp"
#include "melograph/symmetry.hpp"
#include "melograph/tables.hpp"

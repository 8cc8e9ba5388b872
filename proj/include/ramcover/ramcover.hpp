#pragma once

#include "ramcover/error.hpp"
#include "ramcover/rational.hpp"
#include "ramcover/poly.hpp"
#include "ramcover/ratfunc.hpp"
#include "ramcover/linear_system.hpp"
#include "ramcover/poly_text.hpp"
#include "ramcover/curves.hpp"
#include "ramcover/family.hpp"
#include "ramcover/origami.hpp"
#include "ramcover/degeneration.hpp"
#include "ramcover/cover_json.hpp"
#include "ramcover/version.hpp"

#pragma once

#include "checker.hpp"
#include "creed.hpp"
#include "formula.hpp"
#include "io.hpp"
#include "kripke.hpp"
#include "runs.hpp"
#include "syntax.hpp"
#include "world_set.hpp"

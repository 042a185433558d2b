#pragma once

#include "qwalk/arc_basis.hpp"
#include "qwalk/baseline.hpp"
#include "qwalk/embedding.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/operators.hpp"
#include "qwalk/states.hpp"

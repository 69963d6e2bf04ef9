#pragma once

#include "lvt/core.hpp"
#include "lvt/tableau_ops.hpp"
#include "lvt/vacillating.hpp"
#include "lvt/di_map.hpp"
#include "lvt/bijections.hpp"
#include "lvt/counting.hpp"
#include "lvt/json.hpp"

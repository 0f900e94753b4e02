#pragma once

#include "demaz/core.hpp"
#include "demaz/demazure.hpp"
#include "demaz/io.hpp"
#include "demaz/order.hpp"
#include "demaz/permutation.hpp"
#include "demaz/render.hpp"
#include "demaz/slipface.hpp"

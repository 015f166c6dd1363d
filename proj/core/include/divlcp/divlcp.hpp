#pragma once

#include "divlcp/bstar_sort.hpp"
#include "divlcp/index_cell.hpp"
#include "divlcp/induce.hpp"
#include "divlcp/lcp_induce.hpp"
#include "divlcp/min_stack.hpp"
#include "divlcp/rank_doubling.hpp"
#include "divlcp/reference_oracles.hpp"
#include "divlcp/text_model.hpp"
